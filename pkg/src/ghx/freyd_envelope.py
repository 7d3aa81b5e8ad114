"""The Freyd envelope over graded Q[c]-modules.

Objects are degree-0 maps ``i: s -> t``.  A morphism ``(s -> t) => (s' -> t')``
is a commuting square ``(f: s -> s', g: t -> t')`` taken modulo squares with
``i' ∘ f = 0`` (equivalently ``g ∘ i = 0``).  Sending ``(f, g)`` to
``i' ∘ f = g ∘ i`` identifies the hom space with

    Im(i' ∘ -) ∩ Im(- ∘ i)   inside   Hom(s, t').
"""

from dataclasses import dataclass

from . import _linalg as la
from .graded_core import ModuleMap, image
from .hom_ext import _basis_positions, hom_coordinates, hom_space_basis


class NonCommutingSquareError(ValueError):
    pass


@dataclass(frozen=True)
class EnvelopeObject:
    structure_map: ModuleMap

    def __post_init__(self):
        if self.structure_map.degree != 0:
            raise ValueError("envelope objects are degree-0 maps")

    @property
    def s(self):
        return self.structure_map.source

    @property
    def t(self):
        return self.structure_map.target

    def __str__(self):
        return str(self.structure_map)


@dataclass(frozen=True)
class EnvelopeMorphism:
    source: EnvelopeObject
    target: EnvelopeObject
    f: ModuleMap
    g: ModuleMap

    def __post_init__(self):
        if (self.f.source, self.f.target) != (self.source.s, self.target.s):
            raise ValueError(f"f must map {self.source.s} -> {self.target.s}")
        if (self.g.source, self.g.target) != (self.source.t, self.target.t):
            raise ValueError(f"g must map {self.source.t} -> {self.target.t}")
        if self.f.degree != self.g.degree:
            raise ValueError("f and g must have the same degree")
        if self.g.compose(self.source.structure_map) != self.target.structure_map.compose(self.f):
            raise NonCommutingSquareError("square does not commute: g∘i != i'∘f")

    @property
    def degree(self):
        return self.f.degree

    @classmethod
    def identity(cls, obj):
        return cls(obj, obj, ModuleMap.identity(obj.s), ModuleMap.identity(obj.t))

    def __sub__(self, other):
        return EnvelopeMorphism(self.source, self.target, self.f - other.f, self.g - other.g)

    def __str__(self):
        return f"square({self.source} | {self.target} | {self.f} | {self.g})"


def env_embed(m):
    """The object ``id: m -> m``."""
    return EnvelopeObject(ModuleMap.identity(m))


def env_direct_sum(a, b):
    return EnvelopeObject(a.structure_map.direct_sum(b.structure_map))


def _span(cols, dim):
    return la.column_span_rank(cols, dim)


def env_hom_dims(a, b, degree):
    """Dimension of the degree-``degree`` morphisms ``a -> b``."""
    i, i2 = a.structure_map, b.structure_map
    positions = _basis_positions(a.s, b.t, degree)
    dim = len(positions)
    post = [hom_coordinates(i2.compose(phi), positions) for phi in hom_space_basis(a.s, b.s, degree)]
    pre = [hom_coordinates(psi.compose(i), positions) for psi in hom_space_basis(a.t, b.t, degree)]
    return _span(post, dim) + _span(pre, dim) - _span(post + pre, dim)


def env_is_zero(m):
    """True when the square is null, i.e. ``i' ∘ f = 0``."""
    return m.target.structure_map.compose(m.f).is_zero()


def env_equal(m1, m2):
    """Equality of morphisms modulo null squares."""
    return env_is_zero(m1 - m2)


def env_compose(m1, m2):
    """``m2 ∘ m1``: first ``m1``, then ``m2``."""
    if m1.target != m2.source:
        raise ValueError("cannot compose: target of the first square is not the source of the second")
    return EnvelopeMorphism(m1.source, m2.target, m2.f.compose(m1.f), m2.g.compose(m1.g))


def env_homological_value(a):
    """The image of the structure map, as a canonical module."""
    _, inclusion = image(a.structure_map)
    return inclusion.source


def extend_faithfulness_check(m):
    """Check on one square that it is null iff it is zero on images.

    The induced map ``im(i) -> im(i')`` is ``g`` restricted to ``im(i)``;
    since ``im(i') -> t'`` is injective it vanishes iff ``g ∘ incl = 0``
    for the inclusion ``incl: im(i) -> t``.  That side never looks at ``f``.
    """
    _, incl = image(m.source.structure_map)
    induced_zero = m.g.compose(incl).is_zero()
    return env_is_zero(m) == induced_zero
