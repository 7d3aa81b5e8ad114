import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from generators import modules, random_map, random_module, random_presentation
from ghx.graded_core import (
    CanonicalModule,
    DegreeMismatchError,
    IllDefinedMapError,
    ModuleMap,
    Monomial,
    PresentationMatrix,
    c_multiple_dims,
    cokernel,
    dims_in_window,
    image,
    is_injective,
    is_surjective,
    kernel,
    map_subquotients,
    snf_canonicalize,
)

F, T = CanonicalModule.free, CanonicalModule.torsion
W = (-20, 20)


def test_monomial_normalizes():
    assert Monomial(0, 5) == Monomial(0, 0)
    assert Monomial(Fraction(2, 4), 1).coefficient == Fraction(1, 2)
    assert Monomial(3, 2).degree == -4
    assert [str(Monomial(q, k)) for q, k in [(1, 0), (-1, 1), (Fraction(3, 2), 2), (0, 3)]] == [
        "1", "-c", "3/2c^2", "0"]
    with pytest.raises(ValueError):
        Monomial(1, -1)


def test_module_sorted_and_structural_equality():
    a = CanonicalModule(free_shifts=(3, -1), torsion_summands=((2, 2), (0, 5)))
    b = CanonicalModule(free_shifts=(-1, 3), torsion_summands=((0, 5), (2, 2)))
    assert a == b
    assert str(a) == "T[0;5] + T[2;2] + F[-1] + F[3]"
    assert CanonicalModule.zero().is_zero()
    with pytest.raises(ValueError):
        T(0, 0)


# -- snf_canonicalize


def test_snf_cyclic_torsion():
    p = PresentationMatrix((0,), (-4,), ((Monomial(1, 2),),))
    assert snf_canonicalize(p) == T(0, 2)


def test_snf_no_relations():
    assert snf_canonicalize(PresentationMatrix((0,), (), ())) == F(0)


def test_snf_mixed_against_oracle():
    p = PresentationMatrix((0, -2), (-4,), ((Monomial(1, 2), Monomial(3, 1)),))
    m = snf_canonicalize(p)
    assert oracles.module_invariants(m, W) == oracles.presentation_invariants(p, W)
    assert m == F(0) + T(-2, 1)


def test_snf_rejects_inhomogeneous_entry():
    with pytest.raises(DegreeMismatchError) as err:
        PresentationMatrix((0, -2), (-4,), ((Monomial(1, 2), Monomial(1, 2)),))
    assert (err.value.row, err.value.column) == (0, 1)
    with pytest.raises(DegreeMismatchError) as err:
        PresentationMatrix((0,), (1,), ((1,),))
    assert (err.value.row, err.value.column) == (0, 0)


def test_snf_random_presentations_match_oracle(rng):
    for _ in range(150):
        p = random_presentation(rng)
        m = snf_canonicalize(p)
        assert oracles.module_invariants(m, W) == oracles.presentation_invariants(p, W), p


@given(modules)
def test_canonicalize_is_idempotent(m):
    assert snf_canonicalize(PresentationMatrix.of_module(m)) == m


def _scramble(p, rng, steps=12):
    """Random invertible homogeneous row and column operations."""
    gd, rd = list(p.generator_degrees), list(p.relation_degrees)
    a = [list(r) for r in p.coefficients]
    for _ in range(steps):
        kind = rng.choice("rcsp")
        q = Fraction(rng.choice([-2, -1, 1, 2, 3]), rng.choice([1, 2]))
        if kind == "r" and len(rd) > 1:
            x, y = rng.sample(range(len(rd)), 2)
            if rd[y] >= rd[x] and (rd[y] - rd[x]) % 2 == 0:
                a[x] = [u + q * v for u, v in zip(a[x], a[y])]
        elif kind == "c" and len(gd) > 1:
            x, y = rng.sample(range(len(gd)), 2)
            if gd[x] >= gd[y] and (gd[x] - gd[y]) % 2 == 0:
                for row in a:
                    row[x] += q * row[y]
        elif kind == "s" and rd:
            x = rng.randrange(len(rd))
            a[x] = [q * u for u in a[x]]
        elif kind == "p" and len(gd) > 1:
            perm = list(range(len(gd)))
            rng.shuffle(perm)
            gd = [gd[j] for j in perm]
            a = [[row[j] for j in perm] for row in a]
    return PresentationMatrix(tuple(gd), tuple(rd), tuple(map(tuple, a)))


def test_snf_invariant_under_homogeneous_operations(rng):
    for _ in range(150):
        p = random_presentation(rng)
        assert snf_canonicalize(_scramble(p, rng)) == snf_canonicalize(p)


# -- dimension profiles


def test_dims_suspended_truncated():
    d = dims_in_window(T(3, 2), (0, 4))
    assert d == {0: 0, 1: 1, 2: 0, 3: 1, 4: 0}


def test_dims_free_lives_in_nonpositive_even_degrees():
    assert set(dims_in_window(F(0), (1, 5)).values()) == {0}


def test_dims_orbit_module():
    assert dims_in_window(T(1, 1) + T(4, 1), (0, 5)) == {0: 0, 1: 1, 2: 0, 3: 0, 4: 1, 5: 0}


def test_c_multiple_dims_examples():
    assert {k: v for k, v in c_multiple_dims(T(5, 2), W).items() if v} == {3: 1}
    assert set(c_multiple_dims(T(1, 1) + T(4, 1), W).values()) == {0}


def test_c_multiple_dims_against_c_action():
    E = oracles.Explicit.of(T(0, 4))
    expected = {k: oracles.rank(E.c_matrix(k + 2)) for k in range(*W)}
    got = c_multiple_dims(T(0, 4), W)
    assert {k: got[k] for k in expected} == expected
    assert {k: v for k, v in got.items() if v} == {-2: 1, -4: 1, -6: 1}


@given(modules, st.integers(-12, 12))
def test_shift_law(m, d):
    s = m.shift(d)
    for k in range(-30, 30):
        assert s.dim(k) == m.dim(k - d)


@given(modules, modules)
def test_direct_sum_adds_profiles(m, n):
    a, b, s = m.dims(W), n.dims(W), (m + n).dims(W)
    assert all(s[k] == a[k] + b[k] for k in s)


# -- maps


def test_map_entry_degrees_checked():
    with pytest.raises(DegreeMismatchError):
        ModuleMap(F(0), F(0), 0, [[Monomial(1, 1)]])
    f = ModuleMap(F(0), F(0), -2, [[Monomial(1, 1)]])
    assert str(f) == "F[0] -> F[0] @ -2 : [c]"


def test_map_rejects_torsion_violation():
    with pytest.raises(IllDefinedMapError) as err:
        ModuleMap(T(0, 1) + T(0, 2), F(0), 0, [[0, 1]])
    assert err.value.generator == 1
    with pytest.raises(IllDefinedMapError):
        ModuleMap(T(0, 2), T(0, 3), 0, [[1]])
    ModuleMap(T(0, 2), T(0, 3), -2, [[1]])


def test_map_drops_entries_killed_in_target():
    f = ModuleMap(F(0), T(2, 1), -2, [[5]])
    assert f.is_zero()


def test_subquotients_identity(rng):
    for _ in range(20):
        m = random_module(rng)
        assert map_subquotients(ModuleMap.identity(m)) == (CanonicalModule(), m, CanonicalModule())


def test_subquotients_c_power():
    for a in range(1, 6):
        f = ModuleMap(F(-2 * a), F(0), 0, [[Monomial(1, a)]])
        assert map_subquotients(f) == (CanonicalModule(), F(-2 * a), T(0, a))


def test_subquotients_zero_map(rng):
    for _ in range(20):
        m, n = random_module(rng), random_module(rng)
        assert map_subquotients(ModuleMap.zero(m, n, 3)) == (m, CanonicalModule(), n)


def test_subquotients_rank_nullity_random(rng):
    for _ in range(150):
        m, n = random_module(rng), random_module(rng)
        deg = rng.randint(-6, 6)
        f = random_map(rng, m, n, deg)
        ker, im, cok = map_subquotients(f)
        for k in range(-16, 17):
            assert ker.dim(k) + im.dim(k + deg) == m.dim(k)
            assert cok.dim(k + deg) == n.dim(k + deg) - im.dim(k + deg)
            assert (ker.dim(k), im.dim(k + deg), cok.dim(k + deg)) == oracles.subquotient_dims(f, k)


def test_structure_maps(rng):
    for _ in range(80):
        m, n = random_module(rng), random_module(rng)
        f = random_map(rng, m, n, rng.randint(-4, 4))
        inc = kernel(f)
        assert f.compose(inc).is_zero()
        assert is_injective(inc)
        coim, incl = image(f)
        assert incl.compose(coim) == f
        assert is_surjective(coim) and is_injective(incl)
        proj = cokernel(f)
        assert proj.compose(f).is_zero() and is_surjective(proj)


def test_compose_associative(rng):
    for _ in range(30):
        a, b, c, d = (random_module(rng) for _ in range(4))
        f, g, h = random_map(rng, a, b, 1), random_map(rng, b, c, -2), random_map(rng, c, d, 0)
        assert h.compose(g.compose(f)) == h.compose(g).compose(f)


@settings(max_examples=50)
@given(modules, modules, st.integers(-6, 6), st.randoms(use_true_random=False))
def test_matrix_in_degree_matches_oracle(m, n, deg, r):
    f = random_map(r, m, n, deg)
    for k in range(-12, 13):
        assert f.matrix_in_degree(k) == oracles.map_matrix(f, k)


def test_module_map_direct_sum():
    f = ModuleMap(F(-2), F(0), 0, [[Monomial(1, 1)]])
    g = ModuleMap.identity(T(3, 2))
    s = f.direct_sum(g)
    assert map_subquotients(s) == (CanonicalModule(), F(-2) + T(3, 2), T(0, 1))
