import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from generators import random_map, random_module
from ghx.circle_model import (
    CONVENTION_VERSION,
    FreeOrbit,
    Sphere,
    Susp,
    Wedge,
    bracket_dims,
    homotopy,
    kernel_dimension,
    kills_c_multiples,
    phantom_analysis,
    verify_counterexample,
)
from ghx.graded_core import CanonicalModule, ModuleMap
from ghx.hom_ext import hom_space_basis

F, T = CanonicalModule.free, CanonicalModule.torsion

leaves = st.one_of(
    st.integers(1, 5).map(Sphere),
    st.integers(1, 5).map(FreeOrbit),
)
spectra = st.recursive(
    leaves,
    lambda inner: st.one_of(
        st.tuples(st.integers(-4, 4), inner).map(lambda t: Susp(*t)),
        st.lists(inner, max_size=3).map(lambda ps: Wedge(tuple(ps))),
    ),
    max_leaves=5,
)


def test_sphere_homotopy():
    h = homotopy(Sphere(2))
    assert h.top_level == T(3, 2)
    assert h.underlying == T(0, 1) + T(3, 1)


def test_orbit_homotopy():
    h = homotopy(FreeOrbit(2))
    assert h.top_level == T(1, 1) + T(4, 1)
    assert h.underlying == T(0, 1) + T(3, 1) + T(1, 1) + T(4, 1)


def test_suspension_shifts_both_levels():
    for a in range(1, 5):
        h, s = homotopy(Sphere(a)), homotopy(Susp(1, Sphere(a)))
        assert s.top_level == h.top_level.shift(1) == T(2 * a, a)
        assert s.underlying == h.underlying.shift(1)


def test_leaves_reject_nonpositive():
    with pytest.raises(ValueError):
        Sphere(0)
    with pytest.raises(ValueError):
        FreeOrbit(-1)


@pytest.mark.parametrize("a", range(1, 11))
def test_sphere_dimensions_odd(a):
    top = homotopy(Sphere(a)).top_level
    d = {k: top.dim(k) for k in range(0, 2 * a + 1) if top.dim(k)}
    assert d == {k: 1 for k in range(1, 2 * a, 2)}


@given(spectra)
def test_underlying_trivial_c_action(x):
    u = homotopy(x).underlying
    assert not u.free_shifts and all(n == 1 for _, n in u.torsion_summands)


def test_bracket_spheres():
    t = bracket_dims(Sphere(2), Sphere(2), (-4, 4))
    hom = {k: v[0] for k, v in t.per_degree.items() if v[0]}
    ext = {k: v[1] for k, v in t.per_degree.items() if v[1]}
    assert hom == {0: 1, -2: 1}
    assert ext == {3: 1, 1: 1}
    assert all(v[2] == v[0] + v[1] for v in t.per_degree.values())


@given(spectra)
def test_bracket_from_s1_against_oracle(y):
    t = bracket_dims(Sphere(1), y, (-12, 12))
    top = homotopy(y).top_level
    for k, (_, e, _) in t.per_degree.items():
        assert e == oracles.ext_dim(T(2, 1), top, k)


@given(spectra)
def test_bracket_from_empty_wedge(y):
    assert set(bracket_dims(Wedge(()), y, (-8, 8)).totals().values()) == {0}


@given(spectra, spectra, spectra)
def test_bracket_additive_in_wedges(x1, x2, y):
    w = (-10, 10)
    left = bracket_dims(Wedge((x1, x2)), y, w).totals()
    right = bracket_dims(y, Wedge((x1, x2)), w).totals()
    a, b = bracket_dims(x1, y, w).totals(), bracket_dims(x2, y, w).totals()
    c, d = bracket_dims(y, x1, w).totals(), bracket_dims(y, x2, w).totals()
    assert all(left[k] == a[k] + b[k] for k in left)
    assert all(right[k] == c[k] + d[k] for k in right)


# -- phantom certificates


def test_phantom_2_3():
    cert = phantom_analysis(2, 3)
    assert cert.ext_source == T(5, 2)
    assert cert.ext_target == T(5, 1) + T(2, 1)
    assert cert.kernel_lower_bound == 1
    assert list(cert.witness_degrees) == [3]
    assert cert.verdict


def test_phantom_1_5_negative():
    cert = phantom_analysis(1, 5)
    assert cert.ext_source == T(9, 1)
    assert cert.kernel_lower_bound == 0 and not cert.verdict


def test_phantom_4_4():
    cert = phantom_analysis(4, 4)
    assert cert.kernel_lower_bound == 3 and cert.verdict


def test_phantom_rejects_bad_input():
    with pytest.raises(ValueError):
        phantom_analysis(0, 3)


def test_certificate_dict():
    d = phantom_analysis(2, 2).to_dict()
    assert d["convention_version"] == CONVENTION_VERSION
    assert d["verdict"] is True and d["kernel_lower_bound"] == 1


@pytest.mark.parametrize("a,b", [(a, b) for a in range(1, 7) for b in range(1, 7)])
def test_verdict_monotone(a, b):
    if phantom_analysis(a, b).verdict:
        assert phantom_analysis(a + 1, b).verdict
        assert phantom_analysis(a, b + 1).verdict


def test_verify_2_2():
    rep = verify_counterexample(2, 2)
    assert rep.verdict and rep.all_kill_c_multiples
    assert all(k >= 1 for d, _, k in rep.kernel_dims if d == 0)
    assert any(d == 0 for d, _, _ in rep.kernel_dims)


def test_verify_2_3_enumeration():
    rep = verify_counterexample(2, 3)
    assert rep.verdict and rep.certificate.kernel_lower_bound == 1
    assert rep.maps_checked == 2
    assert [(d, k) for d, _, k in rep.kernel_dims] == [(-3, 1), (0, 1)]


def test_verify_5_2():
    rep = verify_counterexample(5, 2)
    assert rep.certificate.ext_source == T(3, 2) and rep.verdict


def test_verify_rejects_small():
    with pytest.raises(ValueError, match="a, b > 1"):
        verify_counterexample(1, 4)


def test_maps_to_trivial_action_kill_c_multiples(rng):
    for _ in range(100):
        m = random_module(rng, free=False)
        n = random_module(rng, max_order=1, free=False)
        for d in range(-12, 13):
            for f in hom_space_basis(m, n, d):
                assert kills_c_multiples(f)
            assert kills_c_multiples(random_map(rng, m, n, d))


def test_c_multiples_detected():
    # the identity of T[0;2] does not kill c
    f = ModuleMap.identity(T(0, 2))
    assert not kills_c_multiples(f)
    assert kernel_dimension(f) == 0
    with pytest.raises(ValueError):
        kills_c_multiples(ModuleMap.identity(F(0)))
    assert kills_c_multiples(ModuleMap.zero(F(0), T(0, 1)), (-6, 6))
