"""Free rational T-spectra and the failure of the generating hypothesis.

Homotopy of a free T-spectrum is recorded at two levels: the top level
``π_*^T`` as a graded Q[c]-module, and ``π_*^H`` for the proper closed
subgroups H, which all agree with nonequivariant rational homotopy and
carry the zero c-action.  Maps are then measured with the Adams short
exact sequence

    0 -> Ext(π^T(ΣX), π^T(Y)) -> [X, Y]^T -> Hom(π^T(X), π^T(Y)) -> 0.

A class in the Ext term that dies under restriction along the projection
``W = T_+ ∧ X -> X`` is invisible to every homotopy group, i.e. a phantom.
"""

from dataclasses import dataclass

from . import _linalg as la
from .graded_core import (
    DEFAULT_WINDOW,
    CanonicalModule,
    _window_range,
    c_multiple,
    c_power_in_degree,
    degree_basis,
)
from .hom_ext import ext_module, hom_module, hom_space_basis

CONVENTION_VERSION = "ghx-grading/1"

Q = CanonicalModule.torsion  # Σ^k Q  is  Q(k, 1)


class FreeTSpectrum:
    """Base class of the spectrum expression tree."""

    def __str__(self):
        raise NotImplementedError

    @classmethod
    def parse(cls, text):
        from .grammar import parse_spectrum

        return parse_spectrum(text)


@dataclass(frozen=True)
class Sphere(FreeTSpectrum):
    """``Σ^∞ S(a)_+`` for the unit sphere of ``C^a``."""

    a: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"S(a) needs a >= 1, got {self.a}")

    def __str__(self):
        return f"S({self.a})"


@dataclass(frozen=True)
class FreeOrbit(FreeTSpectrum):
    """``Σ^∞ (T_+ ∧ S(a)_+)`` with the diagonal action."""

    a: int

    def __post_init__(self):
        if self.a < 1:
            raise ValueError(f"W(a) needs a >= 1, got {self.a}")

    def __str__(self):
        return f"W({self.a})"


@dataclass(frozen=True)
class Susp(FreeTSpectrum):
    k: int
    inner: FreeTSpectrum

    def __str__(self):
        return f"susp({self.k}, {self.inner})"


@dataclass(frozen=True)
class Wedge(FreeTSpectrum):
    parts: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    def __str__(self):
        return "wedge(" + ", ".join(map(str, self.parts)) + ")"


@dataclass(frozen=True)
class HomotopyData:
    top_level: CanonicalModule
    underlying: CanonicalModule


def homotopy(x):
    """Top-level and underlying homotopy of a free T-spectrum.

    ``π^T_*(S(a)) = π_*(Σ CP^{a-1}_+)`` which is ``Σ^{2a-1} Q[c]/(c^a)``;
    ``π^T_*(W(a)) = π_*(Σ S^{2a-1}_+) = ΣQ ⊕ Σ^{2a}Q``.
    """
    if isinstance(x, Sphere):
        a = x.a
        return HomotopyData(Q(2 * a - 1, a), Q(0, 1) + Q(2 * a - 1, 1))
    if isinstance(x, FreeOrbit):
        a = x.a
        under = Q(0, 1) + Q(2 * a - 1, 1)
        return HomotopyData(Q(1, 1) + Q(2 * a, 1), under + under.shift(1))
    if isinstance(x, Susp):
        h = homotopy(x.inner)
        return HomotopyData(h.top_level.shift(x.k), h.underlying.shift(x.k))
    if isinstance(x, Wedge):
        top, under = CanonicalModule(), CanonicalModule()
        for part in x.parts:
            h = homotopy(part)
            top, under = top + h.top_level, under + h.underlying
        return HomotopyData(top, under)
    raise TypeError(f"not a free T-spectrum: {x!r}")


@dataclass(frozen=True)
class BracketTable:
    source: FreeTSpectrum
    target: FreeTSpectrum
    window: tuple
    per_degree: dict  # degree -> (hom_dim, ext_dim, total_dim)

    def totals(self):
        return {n: v[2] for n, v in self.per_degree.items()}


def bracket_dims(x, y, window=DEFAULT_WINDOW):
    """Dimensions of ``[X, Y]^T_n`` split along the Adams sequence."""
    hom = hom_module(homotopy(x).top_level, homotopy(y).top_level)
    ext = ext_module(homotopy(Susp(1, x)).top_level, homotopy(y).top_level)
    rows = {}
    for n in _window_range(window):
        h, e = hom.dim(n), ext.dim(n)
        rows[n] = (h, e, h + e)
    return BracketTable(x, y, tuple(window), rows)


# --------------------------------------------------------------------------
# phantom certificates


@dataclass(frozen=True)
class PhantomCertificate:
    """Witness that ``Ext(π^T ΣS(a), π^T S(b)) -> Ext(π^T ΣW, π^T S(b))`` is not injective.

    The target has trivial c-action, so every c-linear map out of the
    source kills ``c·E_X``; ``kernel_lower_bound`` is its dimension.
    """

    a: int
    b: int
    ext_source: CanonicalModule
    ext_target: CanonicalModule
    kernel_lower_bound: int
    witness_degrees: tuple
    verdict: bool

    def to_dict(self):
        return {
            "convention_version": CONVENTION_VERSION,
            "a": self.a,
            "b": self.b,
            "ext_source": str(self.ext_source),
            "ext_target": str(self.ext_target),
            "kernel_lower_bound": self.kernel_lower_bound,
            "witness_degrees": list(self.witness_degrees),
            "verdict": self.verdict,
        }


def phantom_analysis(a, b):
    if a < 1 or b < 1:
        raise ValueError(f"phantom analysis needs a, b >= 1, got a={a}, b={b}")
    y = homotopy(Sphere(b)).top_level
    e_x = ext_module(homotopy(Susp(1, Sphere(a))).top_level, y)
    e_w = ext_module(homotopy(Susp(1, FreeOrbit(a))).top_level, y)
    if e_x != Q(2 * b - 1, min(a, b)):
        raise AssertionError(f"Ext of spheres came out as {e_x}")
    if e_w != Q(2 * b - 1, 1) + Q(2 * b - 2 * a, 1):
        raise AssertionError(f"Ext of the free orbit came out as {e_w}")
    cx = c_multiple(e_x)
    bound = cx.total_dim()
    rng = _degree_range(cx)
    witness = () if rng is None else tuple(k for k in range(rng[0], rng[1] + 1) if cx.dim(k))
    return PhantomCertificate(a, b, e_x, e_w, bound, witness, bound >= 1)


def _degree_range(m, window=None):
    """Smallest interval holding every nonzero degree of a torsion module.

    Modules with free summands have no such interval; ``window`` is
    returned for them instead.
    """
    if m.free_shifts:
        if window is None:
            raise ValueError(f"{m} is infinite; pass a degree window")
        return tuple(window)
    if m.is_zero():
        return None
    lo = min(e - 2 * (n - 1) for e, n in m.torsion_summands)
    hi = max(e for e, _ in m.torsion_summands)
    return lo, hi


def c_image_in_degree(m, k):
    """Columns spanning ``(c·M)_k``, computed from the c-action on ``M_{k+2}``."""
    cols = []
    for t in range(len(degree_basis(m, k + 2))):
        unit = [1 if s == t else 0 for s in range(len(degree_basis(m, k + 2)))]
        cols.append(c_power_in_degree(m, k + 2, unit, 1))
    return cols


def kills_c_multiples(f, window=None):
    """True when ``f(c·source) = 0`` (checked in ``window`` for free sources)."""
    rng = _degree_range(f.source, window)
    if rng is None:
        return True
    for k in range(rng[0], rng[1] + 1):
        mat = f.matrix_in_degree(k)
        for col in c_image_in_degree(f.source, k):
            if any(sum(r[t] * col[t] for t in range(len(col))) for r in mat):
                return False
    return True


def kernel_dimension(f, window=None):
    """Total kernel dimension of ``f``, restricted to ``window`` for free sources."""
    rng = _degree_range(f.source, window)
    if rng is None:
        return 0
    total = 0
    for k in range(rng[0], rng[1] + 1):
        src = len(degree_basis(f.source, k))
        if src:
            total += src - la.rank(f.matrix_in_degree(k), src)
    return total


@dataclass(frozen=True)
class CounterexampleReport:
    certificate: PhantomCertificate
    maps_checked: int
    kernel_dims: tuple  # (degree, basis index, kernel dimension)
    all_kill_c_multiples: bool
    verdict: bool

    def to_dict(self):
        d = self.certificate.to_dict()
        d["enumeration"] = {
            "maps_checked": self.maps_checked,
            "kernel_dims": [list(t) for t in self.kernel_dims],
            "all_kill_c_multiples": self.all_kill_c_multiples,
        }
        d["verdict"] = self.verdict
        return d


def verify_counterexample(a, b):
    """Phantom analysis plus an independent check by enumerating maps.

    Every basis map ``E_X -> E_W`` in every degree where both sides are
    nonzero is checked to vanish on ``c·E_X``; since these span all
    c-linear maps, no map ``E_X -> E_W`` is injective once ``c·E_X != 0``.
    """
    if a < 2 or b < 2:
        raise ValueError(
            f"the counterexample needs integers a, b > 1 (got a={a}, b={b})"
        )
    cert = phantom_analysis(a, b)
    e_x, e_w = cert.ext_source, cert.ext_target
    (xlo, xhi), (wlo, whi) = _degree_range(e_x), _degree_range(e_w)
    dims, checked, killed = [], 0, True
    for d in range(wlo - xhi, whi - xlo + 1):
        for idx, f in enumerate(hom_space_basis(e_x, e_w, d)):
            checked += 1
            killed = killed and kills_c_multiples(f)
            dims.append((d, idx, kernel_dimension(f)))
    enumerated_ok = killed and checked > 0 and all(k >= cert.kernel_lower_bound for _, _, k in dims)
    return CounterexampleReport(cert, checked, tuple(dims), killed, cert.verdict and enumerated_ok)
