"""
Hom and Ext over Q[c]
=====================
"""

from ghx import CanonicalModule, ext_module, hom_module
from ghx.graded_core import ModuleMap, Monomial
from ghx.hom_ext import ext_via_resolution, hom_space_basis, verify_hom_ext_exactness

T, F = CanonicalModule.torsion, CanonicalModule.free

# the torsion of the target is all a truncated source can see
print(hom_module(T(0, 2), T(0, 3)))          # T[-2;2]

# spheres: Ext(pi(susp S(a)), pi(S(b))) for a few a, b
for a in range(1, 5):
    row = [str(ext_module(T(2 * a, a), T(2 * b - 1, b))) for b in range(1, 5)]
    print(a, row)

# the same number from the free resolution, with no closed form involved
print(ext_via_resolution(T(4, 2), T(5, 3)))

# every degree-0 map T[5;2] -> T[5;1] + T[2;1]
for f in hom_space_basis(T(5, 2), T(5, 1) + T(2, 1), 0):
    print(f)

# 0 -> F[-4] -> F[0] -> T[0;2] -> 0, tested against T[0;3]
incl = ModuleMap(F(-4), F(0), 0, [[Monomial(1, 2)]])
proj = ModuleMap(F(0), T(0, 2), 0, [[1]])
rep = verify_hom_ext_exactness(incl, proj, T(0, 3), (-8, 2))
print("exact:", rep.exact)
for k, dims in rep.dims.items():
    if any(dims):
        print(f"{k:>4}", dims)
