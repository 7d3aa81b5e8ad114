"""Graded Hom and Ext^1 over Q[c].

Closed forms on summands, extended bilinearly:

    Hom(Q[c], N)        = N
    Hom(Q[c]/(c^m), N)  = c^m-torsion of N
    Ext(Q[c], N)        = 0
    Ext(Q[c]/(c^m), N)  = Σ^{2m} (N / c^m N)

with ``Hom(Σ^d M, N) = Σ^{-d} Hom(M, N)`` and ``Hom(M, Σ^e N) = Σ^e Hom(M, N)``
(likewise for Ext).  Ext^{≥2} vanishes since Q[c] has global dimension one.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import _linalg as la
from .graded_core import (
    DEFAULT_WINDOW,
    CanonicalModule,
    ModuleMap,
    _valid_position,
    _window_range,
    c_power_in_degree,
    degree_basis,
    map_subquotients,
)


def _torsion_of(n_module, m):
    """The c^m-torsion submodule of ``n_module``."""
    tors = []
    for e, n in n_module.torsion_summands:
        tors.append((e - 2 * max(n - m, 0), min(m, n)))
    return CanonicalModule(torsion_summands=tuple(tors))


def _mod_c_power(n_module, m):
    """``N / c^m N``."""
    tors = [(e, min(m, n)) for e, n in n_module.torsion_summands]
    tors += [(d, m) for d in n_module.free_shifts]
    return CanonicalModule(torsion_summands=tuple(tors))


def hom_module(m, n):
    """Graded ``Hom_{Q[c]}(m, n)`` as a canonical module.

    >>> str(hom_module(CanonicalModule.torsion(0, 2), CanonicalModule.torsion(0, 3)))
    'T[-2;2]'
    """
    out = CanonicalModule()
    for d in m.free_shifts:
        out = out + n.shift(-d)
    for e, order in m.torsion_summands:
        out = out + _torsion_of(n, order).shift(-e)
    return out


def ext_module(m, n):
    """Graded ``Ext^1_{Q[c]}(m, n)`` as a canonical module.

    >>> str(ext_module(CanonicalModule.torsion(4, 2), CanonicalModule.torsion(5, 3)))
    'T[5;2]'
    """
    out = CanonicalModule()
    for e, order in m.torsion_summands:
        out = out + _mod_c_power(n, order).shift(2 * order - e)
    return out


# --------------------------------------------------------------------------
# resolutions


def free_cover(m):
    """The free module on the generators of ``m``."""
    return CanonicalModule(free_shifts=tuple(d for d, _ in m.generators))


def relation_module(m):
    """The free module on the torsion relations of ``m``."""
    return CanonicalModule(
        free_shifts=tuple(d - 2 * o for d, o in m.generators if o is not None)
    )


def _relation_gens(m):
    """(generator index, degree) of each relation, in generator order."""
    return [(j, d - 2 * o) for j, (d, o) in enumerate(m.generators) if o is not None]


def resolution(m):
    """The two-term free resolution ``0 -> F1 -> F0 -> m -> 0``.

    Returns the map ``F1 -> F0``; a relation ``c^k e_j`` has coefficient 1 at
    generator ``j``.  Both free modules list their generators in the order of
    the generators of ``m``.
    """
    gens = m.generators
    rels = _relation_gens(m)
    entries = [[1 if j == jr else 0 for jr, _ in rels] for j in range(len(gens))]
    return ModuleMap.from_generators(
        [(d, None) for _, d in rels], [(d, None) for d, _ in gens], entries
    )


def _lift(h):
    """Lift ``h: X -> Y`` to ``(F0 X -> F0 Y, F1 X -> F1 Y)``.

    The relation lift reuses the coefficients of ``h``: if ``c^m e_j = 0``
    then each component ``q c^k`` of ``h(e_j)`` on a generator of order
    ``n`` has ``k + m >= n``, so ``q c^(k+m-n)`` is the lifted entry.
    """
    xs, ys = h.source.generators, h.target.generators
    f0 = ModuleMap.from_generators(
        [(d, None) for d, _ in xs], [(d, None) for d, _ in ys], h.entries, h.degree
    )
    xr, yr = _relation_gens(h.source), _relation_gens(h.target)
    f1 = [[h.entries[i][j] for j, _ in xr] for i, _ in yr]
    f1 = ModuleMap.from_generators(
        [(d, None) for _, d in xr], [(d, None) for _, d in yr], f1, h.degree
    )
    return f0, f1


def _hom_of_resolution(m, n):
    """``Hom(F0, n) -> Hom(F1, n)``, precomposition with the resolution of ``m``."""
    rels = _relation_gens(m)
    ng = n.generators
    src = [(t - d, o) for d, _ in m.generators for t, o in ng]
    tgt = [(t - d, o) for _, d in rels for t, o in ng]
    entries = [[Fraction(0)] * len(src) for _ in tgt]
    for r, (j, _) in enumerate(rels):
        for i in range(len(ng)):
            entries[r * len(ng) + i][j * len(ng) + i] = Fraction(1)
    return ModuleMap.from_generators(src, tgt, entries)


def ext_via_resolution(m, n):
    """Ext^1 as the cokernel of ``Hom(F0, n) -> Hom(F1, n)``.

    Shares no code with :func:`ext_module`; used to cross-check it.
    """
    return map_subquotients(_hom_of_resolution(m, n))[2]


def hom_via_resolution(m, n):
    """Hom as the kernel of ``Hom(F0, n) -> Hom(F1, n)``."""
    return map_subquotients(_hom_of_resolution(m, n))[0]


# --------------------------------------------------------------------------
# explicit hom spaces


def _basis_positions(m, n, degree):
    out = []
    for j, sgen in enumerate(m.generators):
        for i, tgen in enumerate(n.generators):
            k = _valid_position(tgen, sgen, degree)
            if k is None:
                continue
            if sgen[1] is not None and (tgen[1] is None or k + sgen[1] < tgen[1]):
                continue
            out.append((i, j))
    return out


def hom_space_basis(m, n, degree):
    """A Q-basis of the degree-``degree`` maps ``m -> n``.

    Each basis map sends one generator of ``m`` to one monomial of ``n``
    and every other generator to zero.
    """
    out = []
    for i, j in _basis_positions(m, n, degree):
        entries = [[0] * m.ngens for _ in range(n.ngens)]
        entries[i][j] = 1
        out.append(ModuleMap(m, n, degree, entries))
    return out


def hom_coordinates(f, positions=None):
    """Coordinates of ``f`` in :func:`hom_space_basis` of its hom space."""
    if positions is None:
        positions = _basis_positions(f.source, f.target, f.degree)
    return [f.entries[i][j] for i, j in positions]


@dataclass(frozen=True)
class GradedHomSpace:
    source: CanonicalModule
    target: CanonicalModule
    per_degree_bases: dict = field(default_factory=dict)

    def dims(self):
        return {n: len(b) for n, b in self.per_degree_bases.items()}


def graded_hom_space(m, n, window=DEFAULT_WINDOW):
    return GradedHomSpace(m, n, {d: hom_space_basis(m, n, d) for d in _window_range(window)})


# --------------------------------------------------------------------------
# six-term exactness


class _Space:
    """A finite-dimensional quotient ``Q^dim / span(relations)``."""

    def __init__(self, dim, relations=()):
        self.ambient = dim
        self.relations = [list(r) for r in relations]
        self.rel_rank = la.column_span_rank(self.relations, dim)

    @property
    def dim(self):
        return self.ambient - self.rel_rank

    def image_rank(self, cols):
        """Rank, in this quotient, of the span of ``cols``."""
        return la.column_span_rank(list(cols) + self.relations, self.ambient) - self.rel_rank


def _precompose_columns(h, n, degree):
    """Columns of ``Hom(target h, n)_degree -> Hom(source h, n)_{degree + deg h}``."""
    tpos = _basis_positions(h.source, n, degree + h.degree)
    cols = []
    for phi in hom_space_basis(h.target, n, degree):
        cols.append(hom_coordinates(phi.compose(h), tpos))
    return cols


def _ext_space(x, n, degree):
    """Ext(x, n)_degree as a quotient of ``Hom(F1 x, n)_degree``."""
    res = resolution(x)
    dim = len(_basis_positions(res.source, n, degree))
    return _Space(dim, _precompose_columns(res, n, degree))


def _connecting_lift(inclusion, projection):
    """The map ``psi: F1(C) -> A`` used by the connecting homomorphism.

    Each generator ``e`` of ``C = target(projection)`` with ``c^m e = 0``
    lifts to some ``x`` in ``B``; then ``c^m x`` lies in the image of the
    inclusion and ``psi`` sends the relation to its preimage.
    """
    A, B, C = inclusion.source, inclusion.target, projection.target
    cols, rel_gens = [], []
    for g, (s, m) in enumerate(C.generators):
        if m is None:
            continue
        cbasis = degree_basis(C, s)
        rhs = [Fraction(1) if b == (g, 0) else Fraction(0) for b in cbasis]
        pmat = projection.matrix_in_degree(s)
        x = la.solve(pmat, rhs, len(degree_basis(B, s)))
        if x is None:
            raise ValueError(f"projection is not onto generator {g} of {C}")
        cx = c_power_in_degree(B, s, x, m)
        imat = inclusion.matrix_in_degree(s - 2 * m)
        abasis = degree_basis(A, s - 2 * m)
        y = la.solve(imat, cx, len(abasis))
        if y is None:
            raise ValueError("sequence is not exact in the middle")
        col = [Fraction(0)] * A.ngens
        for (j, _), q in zip(abasis, y):
            col[j] += q
        cols.append(col)
        rel_gens.append((s - 2 * m, None))
    entries = la.transpose(cols, A.ngens) if cols else []
    return ModuleMap.from_generators(rel_gens, list(A.generators), entries)


@dataclass
class ExactnessReport:
    """Per-degree dimensions of the six terms and the first failure, if any.

    ``dims[n]`` lists ``Hom(C,N), Hom(B,N), Hom(A,N), Ext(C,N), Ext(B,N),
    Ext(A,N)`` in degree ``n``; a failure is ``(degree, position)`` with
    position 0..5 naming the term where exactness breaks.
    """

    window: tuple
    dims: dict
    exact: bool
    first_failure: object = None

    def alternating_sums(self):
        return {d: sum((-1) ** t * x for t, x in enumerate(v)) for d, v in self.dims.items()}


TERM_NAMES = ("Hom(C,N)", "Hom(B,N)", "Hom(A,N)", "Ext(C,N)", "Ext(B,N)", "Ext(A,N)")


def check_short_exact(inclusion, projection):
    """Raise ValueError unless ``0 -> A -> B -> C -> 0`` is short exact."""
    if inclusion.degree or projection.degree:
        raise ValueError("short exact sequence maps must have degree 0")
    if inclusion.target != projection.source:
        raise ValueError("inclusion target and projection source differ")
    if not projection.compose(inclusion).is_zero():
        raise ValueError("projection ∘ inclusion is not zero")
    ker_i, im_i, _ = map_subquotients(inclusion)
    ker_p, _, coker_p = map_subquotients(projection)
    if not ker_i.is_zero():
        raise ValueError(f"inclusion has kernel {ker_i}")
    if not coker_p.is_zero():
        raise ValueError(f"projection has cokernel {coker_p}")
    if ker_p != im_i:
        raise ValueError(f"kernel {ker_p} of the projection differs from image {im_i}")


def verify_hom_ext_exactness(inclusion, projection, test_object, window=DEFAULT_WINDOW):
    """Check the six-term Hom/Ext sequence of ``0 -> A -> B -> C -> 0`` against N.

    All six maps are computed explicitly in each degree (the connecting map
    through a lift of the projection) and exactness is tested by rank
    comparisons, not by counting dimensions alone.
    """
    check_short_exact(inclusion, projection)
    N = test_object
    A, B, C = inclusion.source, inclusion.target, projection.target
    psi = _connecting_lift(inclusion, projection)
    _, p1 = _lift(projection)
    _, i1 = _lift(inclusion)
    dims, failure = {}, None
    for n in _window_range(window):
        spaces = [
            _Space(len(_basis_positions(C, N, n))),
            _Space(len(_basis_positions(B, N, n))),
            _Space(len(_basis_positions(A, N, n))),
            _ext_space(C, N, n),
            _ext_space(B, N, n),
            _ext_space(A, N, n),
        ]
        maps = [
            _precompose_columns(projection, N, n),
            _precompose_columns(inclusion, N, n),
            _precompose_columns(psi, N, n),
            _precompose_columns(p1, N, n),
            _precompose_columns(i1, N, n),
        ]
        dims[n] = tuple(s.dim for s in spaces)
        if failure is not None:
            continue
        ranks = [spaces[t + 1].image_rank(maps[t]) for t in range(5)]
        # kernel dim at each term minus the rank of the incoming map
        incoming = [0] + ranks
        outgoing = ranks + [0]
        for t in range(6):
            if spaces[t].dim - outgoing[t] != incoming[t]:
                failure = (n, t)
                break
        else:
            for t in range(4):
                out_dim = spaces[t + 2].ambient
                composite = [_apply(maps[t + 1], col, out_dim) for col in maps[t]]
                if spaces[t + 2].image_rank(composite):
                    failure = (n, t + 1)
                    break
    return ExactnessReport(window, dims, failure is None, failure)


def _apply(cols, vec, out_dim):
    out = [Fraction(0)] * out_dim
    for col, x in zip(cols, vec):
        if x:
            for r, y in enumerate(col):
                out[r] += x * y
    return out
