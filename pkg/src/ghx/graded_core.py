"""Finitely generated graded modules over Q[c], with c in degree -2.

Grading conventions used throughout the package:

* ``(Σ^d M)_k = M_{k-d}``, so suspension raises degrees by ``d``;
* ``Q[c]`` lives in degrees 0, -2, -4, ...;
* a map of degree ``n`` sends ``M_k`` into ``N_{k+n}``.

Every f.g. graded Q[c]-module is a finite sum of shifted copies of
``Q[c]`` and ``Q[c]/(c^n)``; :class:`CanonicalModule` stores exactly that
list, sorted, so isomorphism is equality.

Because every nonzero homogeneous element of Q[c] is a single monomial
``q c^k``, a homogeneous matrix between free modules is determined by its
rational coefficients once the generator degrees are known.  All matrices
below are stored that way; the power of ``c`` in entry ``(i, j)`` is
``(target_degree[i] - source_degree[j] - map_degree) / 2``.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from . import _linalg as la

DEFAULT_WINDOW = (-32, 32)


class DegreeMismatchError(ValueError):
    """A matrix entry is incompatible with the generator degrees."""

    def __init__(self, row, column, message):
        super().__init__(f"degree mismatch at (row {row}, column {column}): {message}")
        self.row = row
        self.column = column


class IllDefinedMapError(ValueError):
    """A proposed map does not respect the torsion of its source."""

    def __init__(self, generator, message):
        super().__init__(f"ill-defined map on source generator {generator}: {message}")
        self.generator = generator


def _window_range(window):
    lo, hi = window
    if lo > hi:
        raise ValueError(f"empty degree window {window!r}")
    return range(lo, hi + 1)


# --------------------------------------------------------------------------
# scalars and monomials


@dataclass(frozen=True)
class Monomial:
    """The element ``coefficient * c**cpower`` of Q[c]."""

    coefficient: Fraction
    cpower: int = 0

    def __post_init__(self):
        q = Fraction(self.coefficient)
        if self.cpower < 0:
            raise ValueError("cpower must be nonnegative")
        object.__setattr__(self, "coefficient", q)
        if q == 0:
            object.__setattr__(self, "cpower", 0)

    @property
    def degree(self):
        return -2 * self.cpower

    def __bool__(self):
        return self.coefficient != 0

    def __mul__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self.coefficient * other.coefficient, self.cpower + other.cpower)

    def __str__(self):
        q, k = self.coefficient, self.cpower
        if q == 0:
            return "0"
        if k == 0:
            return str(q)
        cpart = "c" if k == 1 else f"c^{k}"
        if q == 1:
            return cpart
        if q == -1:
            return "-" + cpart
        return f"{q}{cpart}"


# --------------------------------------------------------------------------
# canonical modules


def _gen_key(gen):
    deg, order = gen
    return (1, deg, 0) if order is None else (0, deg, order)


@dataclass(frozen=True)
class CanonicalModule:
    """``⊕ Σ^d Q[c]  ⊕  ⊕ Σ^e Q[c]/(c^n)`` stored as sorted summand lists.

    >>> M = CanonicalModule(free_shifts=(-1,), torsion_summands=((3, 2),))
    >>> str(M)
    'T[3;2] + F[-1]'
    >>> M.dims((-4, 4))[3], M.dims((-4, 4))[1], M.dims((-4, 4))[2]
    (1, 1, 0)
    """

    free_shifts: tuple = ()
    torsion_summands: tuple = ()

    def __post_init__(self):
        free = tuple(sorted(int(d) for d in self.free_shifts))
        tors = []
        for e, n in self.torsion_summands:
            if n < 1:
                raise ValueError(f"torsion order must be positive, got {n}")
            tors.append((int(e), int(n)))
        object.__setattr__(self, "free_shifts", free)
        object.__setattr__(self, "torsion_summands", tuple(sorted(tors)))

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def free(cls, shift=0):
        return cls(free_shifts=(shift,))

    @classmethod
    def torsion(cls, shift, order):
        return cls(torsion_summands=((shift, order),))

    @classmethod
    def from_generators(cls, gens):
        """Build from ``(degree, order)`` pairs, ``order=None`` for free."""
        return cls(
            free_shifts=tuple(d for d, n in gens if n is None),
            torsion_summands=tuple((d, n) for d, n in gens if n is not None),
        )

    @property
    def generators(self):
        """Generators in canonical order: torsion summands, then free ones."""
        return tuple((e, n) for e, n in self.torsion_summands) + tuple(
            (d, None) for d in self.free_shifts
        )

    @property
    def ngens(self):
        return len(self.free_shifts) + len(self.torsion_summands)

    def is_zero(self):
        return self.ngens == 0

    def is_torsion(self):
        return not self.free_shifts

    def shift(self, d):
        """``Σ^d`` of this module."""
        return CanonicalModule(
            free_shifts=tuple(x + d for x in self.free_shifts),
            torsion_summands=tuple((e + d, n) for e, n in self.torsion_summands),
        )

    def __add__(self, other):
        if not isinstance(other, CanonicalModule):
            return NotImplemented
        return CanonicalModule(
            self.free_shifts + other.free_shifts,
            self.torsion_summands + other.torsion_summands,
        )

    def dim(self, k):
        """Q-dimension of the degree-``k`` piece."""
        total = 0
        for d in self.free_shifts:
            if k <= d and (d - k) % 2 == 0:
                total += 1
        for e, n in self.torsion_summands:
            if e - 2 * (n - 1) <= k <= e and (e - k) % 2 == 0:
                total += 1
        return total

    def dims(self, window=DEFAULT_WINDOW):
        return {k: self.dim(k) for k in _window_range(window)}

    def total_dim(self):
        """Total dimension; only finite for torsion modules."""
        if self.free_shifts:
            raise ValueError("a module with free summands is infinite dimensional")
        return sum(n for _, n in self.torsion_summands)

    def __str__(self):
        parts = [f"T[{e};{n}]" for e, n in self.torsion_summands]
        parts += [f"F[{d}]" for d in self.free_shifts]
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text):
        from .grammar import parse_module

        return parse_module(text)


def degree_basis(module, k):
    """Monomial basis of ``module_k`` as ``(generator index, cpower)`` pairs."""
    out = []
    for j, (deg, order) in enumerate(module.generators):
        diff = deg - k
        if diff < 0 or diff % 2:
            continue
        p = diff // 2
        if order is None or p < order:
            out.append((j, p))
    return out


def c_multiple(module):
    """The submodule ``c·M`` as a canonical module."""
    return CanonicalModule(
        free_shifts=tuple(d - 2 for d in module.free_shifts),
        torsion_summands=tuple((e - 2, n - 1) for e, n in module.torsion_summands if n > 1),
    )


def dims_in_window(module, window=DEFAULT_WINDOW):
    """Exact dimension of every graded piece of ``module`` in ``window``."""
    return module.dims(window)


def c_multiple_dims(module, window=DEFAULT_WINDOW):
    """Dimension profile of ``c·M``."""
    return c_multiple(module).dims(window)


# --------------------------------------------------------------------------
# presentations and graded Smith normal form


def _cpower(row_deg, col_deg):
    """Power of c forced on an entry between these degrees, or None."""
    diff = row_deg - col_deg
    if diff < 0 or diff % 2:
        return None
    return diff // 2


def _coerce_entry(x, row_deg, col_deg, where):
    """Turn a Monomial or number into a checked coefficient."""
    if isinstance(x, Monomial):
        if not x:
            return Fraction(0)
        k = _cpower(row_deg, col_deg)
        if k != x.cpower:
            raise DegreeMismatchError(
                *where,
                f"entry {x} has degree {x.degree} but the generator degrees "
                f"force c^{k}" if k is not None else
                f"entry {x} cannot map degree {col_deg} to degree {row_deg}",
            )
        return x.coefficient
    q = Fraction(x)
    if q and _cpower(row_deg, col_deg) is None:
        raise DegreeMismatchError(
            *where, f"no monomial maps degree {col_deg} to degree {row_deg}"
        )
    return q


@dataclass(frozen=True)
class PresentationMatrix:
    """Presents ``coker(⊕ Σ^{relation_degrees} Q[c] -> ⊕ Σ^{generator_degrees} Q[c])``.

    ``entries`` has one row per relation and one column per generator.
    Entries may be :class:`Monomial` or plain numbers; a number is read as
    the coefficient of the monomial forced by the degrees.
    """

    generator_degrees: tuple
    relation_degrees: tuple
    entries: tuple = field(default=(), compare=False)
    coefficients: tuple = field(init=False, repr=False)

    def __post_init__(self):
        gd = tuple(int(d) for d in self.generator_degrees)
        rd = tuple(int(d) for d in self.relation_degrees)
        object.__setattr__(self, "generator_degrees", gd)
        object.__setattr__(self, "relation_degrees", rd)
        rows = [tuple(r) for r in self.entries]
        if not rows and not gd:
            rows = [()] * len(rd)  # "[]" for relations among no generators
        if len(rows) != len(rd):
            raise ValueError(f"expected {len(rd)} relation rows, got {len(rows)}")
        coeffs = []
        for r, row in enumerate(rows):
            if len(row) != len(gd):
                raise ValueError(f"relation row {r} has {len(row)} entries, expected {len(gd)}")
            coeffs.append(tuple(
                _coerce_entry(x, gd[j], rd[r], (r, j)) for j, x in enumerate(row)
            ))
        object.__setattr__(self, "entries", tuple(rows))
        object.__setattr__(self, "coefficients", tuple(coeffs))

    def monomials(self):
        return [
            [Monomial(q, _cpower(self.generator_degrees[j], self.relation_degrees[r]) if q else 0)
             for j, q in enumerate(row)]
            for r, row in enumerate(self.coefficients)
        ]

    @classmethod
    def of_module(cls, module):
        """The diagonal presentation of a canonical module."""
        gens = module.generators
        rels = [(j, d - 2 * n) for j, (d, n) in enumerate(gens) if n is not None]
        entries = []
        for j, rdeg in rels:
            row = [0] * len(gens)
            row[j] = 1
            entries.append(row)
        return cls(tuple(d for d, _ in gens), tuple(r for _, r in rels), tuple(entries))


@dataclass
class _SNF:
    pivots: list  # (row, col, cpower)
    U: Optional[list] = None
    Uinv: Optional[list] = None
    V: Optional[list] = None
    Vinv: Optional[list] = None


def _graded_snf(mat, row_degs, col_degs, track_rows=False, track_cols=False):
    """Smith normal form of a homogeneous coefficient matrix over Q[c].

    Pivots are nonzero entries of least c-power, ties going to the smallest
    row and then column index.  Such a pivot divides every other entry of
    its row and column, so each elimination step is a rational row or
    column operation that preserves homogeneity.
    """
    nr, nc = len(row_degs), len(col_degs)
    a = [list(r) for r in mat] if nr else []
    U = la.identity(nr) if track_rows else None
    Uinv = la.identity(nr) if track_rows else None
    V = la.identity(nc) if track_cols else None
    Vinv = la.identity(nc) if track_cols else None
    rows_left = list(range(nr))
    cols_left = list(range(nc))
    pivots = []
    while True:
        best = None
        for i in rows_left:
            ai = a[i]
            for j in cols_left:
                if ai[j]:
                    k = (row_degs[i] - col_degs[j]) // 2
                    if best is None or k < best[0]:
                        best = (k, i, j)
        if best is None:
            break
        k, i, j = best
        piv = a[i][j]
        for i2 in rows_left:
            if i2 != i and a[i2][j]:
                f = a[i2][j] / piv
                a[i2] = [x - f * y for x, y in zip(a[i2], a[i])]
                if track_rows:
                    U[i2] = [x - f * y for x, y in zip(U[i2], U[i])]
                    for r in range(nr):
                        if Uinv[r][i2]:
                            Uinv[r][i] += f * Uinv[r][i2]
        for j2 in cols_left:
            if j2 != j and a[i][j2]:
                f = a[i][j2] / piv
                a[i][j2] = Fraction(0)
                if track_cols:
                    for r in range(nc):
                        if V[r][j]:
                            V[r][j2] -= f * V[r][j]
                    Vinv[j] = [x + f * y for x, y in zip(Vinv[j], Vinv[j2])]
        rows_left.remove(i)
        cols_left.remove(j)
        pivots.append((i, j, k))
    return _SNF(pivots, U, Uinv, V, Vinv)


def _coker_summands(snf, row_degs):
    """Surviving generators of the cokernel as ``(row, (degree, order))``."""
    pivot_rows = {i: k for i, _, k in snf.pivots}
    out = []
    for i, d in enumerate(row_degs):
        if i in pivot_rows:
            if pivot_rows[i] > 0:
                out.append((i, (d, pivot_rows[i])))
        else:
            out.append((i, (d, None)))
    return out


def _canonical_order(gens):
    """Permutation listing ``gens`` in canonical generator order."""
    return sorted(range(len(gens)), key=lambda t: (_gen_key(gens[t]), t))


def _presentation_coker(gen_degs, rel_cols, rel_degs):
    """Canonical form of ``coker``; ``rel_cols`` are coefficient columns."""
    mat = la.transpose(rel_cols, len(gen_degs)) if rel_cols else [[] for _ in gen_degs]
    snf = _graded_snf(mat, gen_degs, rel_degs)
    return CanonicalModule.from_generators([g for _, g in _coker_summands(snf, gen_degs)])


def snf_canonicalize(p):
    """Canonical form of the module presented by ``p``.

    >>> str(snf_canonicalize(PresentationMatrix((0,), (-4,), ((Monomial(1, 2),),))))
    'T[0;2]'
    """
    cols = [list(row) for row in p.coefficients]
    return _presentation_coker(list(p.generator_degrees), cols, list(p.relation_degrees))


# --------------------------------------------------------------------------
# maps


def _valid_position(tgt_gen, src_gen, degree):
    """c-power of a nonzero entry at this position, or None if it must vanish."""
    k = _cpower(tgt_gen[0], src_gen[0] + degree)
    if k is None:
        return None
    if tgt_gen[1] is not None and k >= tgt_gen[1]:
        return None
    return k


@dataclass(frozen=True)
class ModuleMap:
    """A homogeneous Q[c]-linear map ``source -> target`` of the given degree.

    ``entries`` has one row per target generator and one column per source
    generator (canonical generator order).  Entries that vanish in the
    target because they exceed a torsion order are dropped on construction,
    so two maps are equal exactly when their ``entries`` agree.
    """

    source: CanonicalModule
    target: CanonicalModule
    degree: int = 0
    entries: tuple = ()

    def __post_init__(self):
        sg, tg = self.source.generators, self.target.generators
        rows = [tuple(r) for r in self.entries] if self.entries else []
        if not rows:
            rows = [(0,) * len(sg) for _ in tg]
        if len(rows) != len(tg) or any(len(r) != len(sg) for r in rows):
            raise ValueError(
                f"entries must be {len(tg)} x {len(sg)} for {self.source} -> {self.target}"
            )
        coeffs = []
        for i, row in enumerate(rows):
            out = []
            for j, x in enumerate(row):
                q = _coerce_entry(x, tg[i][0], sg[j][0] + self.degree, (i, j))
                if q and _valid_position(tg[i], sg[j], self.degree) is None:
                    q = Fraction(0)
                out.append(q)
            coeffs.append(tuple(out))
        object.__setattr__(self, "entries", tuple(coeffs))
        object.__setattr__(self, "degree", int(self.degree))
        self._check_torsion()

    def _check_torsion(self):
        sg, tg = self.source.generators, self.target.generators
        for j, (sdeg, m) in enumerate(sg):
            if m is None:
                continue
            for i, (tdeg, n) in enumerate(tg):
                q = self.entries[i][j]
                if not q:
                    continue
                k = _cpower(tdeg, sdeg + self.degree)
                if n is None or k + m < n:
                    raise IllDefinedMapError(
                        j, f"c^{m} kills the generator but not its image "
                        f"component {Monomial(q, k)} on target generator {i}",
                    )

    @classmethod
    def identity(cls, module):
        return cls(module, module, 0, la.identity(module.ngens))

    @classmethod
    def zero(cls, source, target, degree=0):
        return cls(source, target, degree)

    @classmethod
    def from_generators(cls, src_gens, tgt_gens, entries, degree=0):
        """Build from generator lists in any order; permutes to canonical order."""
        sp = _canonical_order(src_gens)
        tp = _canonical_order(tgt_gens)
        mat = [[entries[i][j] for j in sp] for i in tp] if entries else []
        return cls(
            CanonicalModule.from_generators(src_gens),
            CanonicalModule.from_generators(tgt_gens),
            degree,
            mat,
        )

    def direct_sum(self, other):
        """Block-diagonal ``self ⊕ other``; both maps must share a degree."""
        if self.degree != other.degree:
            raise ValueError("direct sum of maps of different degrees")
        s1, s2 = self.source.generators, other.source.generators
        t1, t2 = self.target.generators, other.target.generators
        mat = [list(r) + [0] * len(s2) for r in self.entries]
        mat += [[0] * len(s1) + list(r) for r in other.entries]
        return ModuleMap.from_generators(s1 + s2, t1 + t2, mat, self.degree)

    def monomials(self):
        sg, tg = self.source.generators, self.target.generators
        return [
            [Monomial(q, _cpower(tg[i][0], sg[j][0] + self.degree) if q else 0)
             for j, q in enumerate(row)]
            for i, row in enumerate(self.entries)
        ]

    def is_zero(self):
        return not any(any(row) for row in self.entries)

    def compose(self, other):
        """``self ∘ other``."""
        if other.target != self.source:
            raise ValueError(f"cannot compose: {other.target} is not {self.source}")
        inner = self.source.ngens
        mat = [
            [sum((row[t] * other.entries[t][j] for t in range(inner)), Fraction(0))
             for j in range(other.source.ngens)]
            for row in self.entries
        ]
        return ModuleMap(other.source, self.target, self.degree + other.degree, mat)

    def __matmul__(self, other):
        return self.compose(other)

    def _same_shape(self, other):
        if (self.source, self.target, self.degree) != (other.source, other.target, other.degree):
            raise ValueError("maps differ in source, target or degree")

    def __add__(self, other):
        self._same_shape(other)
        mat = [[x + y for x, y in zip(r, s)] for r, s in zip(self.entries, other.entries)]
        return ModuleMap(self.source, self.target, self.degree, mat)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, q):
        q = Fraction(q)
        mat = [[q * x for x in row] for row in self.entries]
        return ModuleMap(self.source, self.target, self.degree, mat)

    def matrix_in_degree(self, k):
        """Q-matrix of ``source_k -> target_{k+degree}`` on monomial bases."""
        src = degree_basis(self.source, k)
        tgt = degree_basis(self.target, k + self.degree)
        index = {b: r for r, b in enumerate(tgt)}
        sg = self.source.generators
        out = la.zeros(len(tgt), len(src))
        for col, (j, p) in enumerate(src):
            for i, row in enumerate(self.entries):
                q = row[j]
                if q:
                    k_ij = _cpower(self.target.generators[i][0], sg[j][0] + self.degree)
                    r = index.get((i, p + k_ij))
                    if r is not None:
                        out[r][col] = q
        return out

    def __str__(self):
        from .grammar import format_map

        return format_map(self)


def c_power_in_degree(module, k, vec, m):
    """Multiply a degree-``k`` coordinate vector by ``c^m``."""
    tgt = degree_basis(module, k - 2 * m)
    index = {b: r for r, b in enumerate(tgt)}
    out = [Fraction(0)] * len(tgt)
    for (j, p), x in zip(degree_basis(module, k), vec):
        r = index.get((j, p + m))
        if r is not None:
            out[r] += x
    return out


# --------------------------------------------------------------------------
# kernel, image, cokernel


@dataclass
class _Analysis:
    kernel_inclusion: ModuleMap
    coimage: ModuleMap
    image_inclusion: ModuleMap
    cokernel_projection: ModuleMap


def _analyze(f):
    """Kernel, image and cokernel of ``f`` together with their structure maps.

    The source is regraded by ``f.degree`` so that ``f`` becomes degree 0.
    With ``F0 = free cover of the source`` and ``R_N`` the torsion
    relations of the target, ``K' = {x in F0 : f(x) in im R_N}`` is free;
    then ``im f = F0 / K'`` and ``ker f = K' / (torsion relations of the
    source)``.
    """
    n = f.degree
    sg = [(d + n, m) for d, m in f.source.generators]
    tg = list(f.target.generators)
    ns, nt = len(sg), len(tg)
    sdeg = [d for d, _ in sg]
    tdeg = [d for d, _ in tg]
    F = [list(r) for r in f.entries]
    tors_t = [i for i, (_, o) in enumerate(tg) if o is not None]

    # cokernel: target generators modulo f(source) and target torsion
    rel_cols = [[F[i][j] for i in range(nt)] for j in range(ns)]
    rel_degs = list(sdeg)
    for i in tors_t:
        col = [Fraction(0)] * nt
        col[i] = Fraction(1)
        rel_cols.append(col)
        rel_degs.append(tdeg[i] - 2 * tg[i][1])
    mat = la.transpose(rel_cols, nt) if rel_cols else [[] for _ in range(nt)]
    snf = _graded_snf(mat, tdeg, rel_degs, track_rows=True)
    cok = _coker_summands(snf, tdeg)
    cok_gens = [g for _, g in cok]
    # projection: coordinate function of surviving row r is row r of U
    proj = [[snf.U[r][i] for i in range(nt)] for r, _ in cok]
    cokernel_projection = ModuleMap.from_generators(tg, cok_gens, proj)

    # K' = projection to F0 of ker [F | R_N]
    B_cols = [[F[i][j] for i in range(nt)] for j in range(ns)]
    B_degs = list(sdeg)
    for i in tors_t:
        col = [Fraction(0)] * nt
        col[i] = Fraction(1)
        B_cols.append(col)
        B_degs.append(tdeg[i] - 2 * tg[i][1])
    nb = len(B_cols)
    mat = la.transpose(B_cols, nt) if nt else []
    snfB = _graded_snf(mat, tdeg, B_degs, track_cols=True)
    pivot_cols = {j for _, j, _ in snfB.pivots}
    kcols = [j for j in range(nb) if j not in pivot_cols]
    kvecs = [[snfB.V[r][j] for r in range(ns)] for j in kcols]
    kdegs = [B_degs[j] for j in kcols]

    # image = F0 / K'
    snfI = _graded_snf(
        la.transpose(kvecs, ns) if kvecs else [[] for _ in range(ns)],
        sdeg, kdegs, track_rows=True,
    )
    im = _coker_summands(snfI, sdeg)
    im_gens = [g for _, g in im]
    coim = [[snfI.U[r][j] for j in range(ns)] for r, _ in im]
    coimage = ModuleMap.from_generators(
        [(d - n, m) for d, m in sg], im_gens, coim, degree=n
    )
    incl_cols = []
    for r, _ in im:
        v = [snfI.Uinv[j][r] for j in range(ns)]
        incl_cols.append([sum((F[i][j] * v[j] for j in range(ns)), Fraction(0)) for i in range(nt)])
    image_inclusion = ModuleMap.from_generators(
        im_gens, tg, la.transpose(incl_cols, nt) if incl_cols else [[] for _ in range(nt)]
    )

    # kernel = K' / source torsion relations, written in K' coordinates
    ker_rels, ker_rel_degs = [], []
    for j, (d, m) in enumerate(sg):
        if m is None:
            continue
        w = [Fraction(0)] * nb
        w[j] = Fraction(1)
        for t, i in enumerate(tors_t):
            w[ns + t] = -F[i][j]
        z = [sum((snfB.Vinv[r][c] * w[c] for c in range(nb)), Fraction(0)) for r in range(nb)]
        if any(z[p] for p in pivot_cols):
            raise AssertionError("torsion relation is not in the lifted kernel")
        ker_rels.append([z[j2] for j2 in kcols])
        ker_rel_degs.append(d - 2 * m)
    nk = len(kcols)
    snfK = _graded_snf(
        la.transpose(ker_rels, nk) if ker_rels else [[] for _ in range(nk)],
        kdegs, ker_rel_degs, track_rows=True,
    )
    ker = _coker_summands(snfK, kdegs)
    ker_gens = [(d - n, m) for _, (d, m) in ker]
    incl = []
    for r, _ in ker:
        u = [snfK.Uinv[l][r] for l in range(nk)]
        incl.append([sum((kvecs[l][j] * u[l] for l in range(nk)), Fraction(0)) for j in range(ns)])
    kernel_inclusion = ModuleMap.from_generators(
        ker_gens,
        [(d - n, m) for d, m in sg],
        la.transpose(incl, ns) if incl else [[] for _ in range(ns)],
    )
    return _Analysis(kernel_inclusion, coimage, image_inclusion, cokernel_projection)


def map_subquotients(f):
    """Canonical forms ``(ker f, im f, coker f)``.

    The kernel is graded as a submodule of the source, the image and the
    cokernel as a submodule and a quotient of the target.
    """
    a = _analyze(f)
    return a.kernel_inclusion.source, a.image_inclusion.source, a.cokernel_projection.target


def kernel(f):
    """Inclusion of the kernel of ``f`` into its source, a degree-0 map."""
    return _analyze(f).kernel_inclusion


def image(f):
    """``(coimage, inclusion)``: ``f = inclusion ∘ coimage`` with ``coimage`` onto."""
    a = _analyze(f)
    return a.coimage, a.image_inclusion


def cokernel(f):
    """Projection from the target of ``f`` onto its cokernel."""
    return _analyze(f).cokernel_projection


def is_injective(f):
    return kernel(f).source.is_zero()


def is_surjective(f):
    return cokernel(f).target.is_zero()
