"""
Graded Q[c]-modules
===================

c has degree -2.  F[d] is a free module on a generator in degree d,
T[e;n] is Q[c]/(c^n) shifted so its generator sits in degree e.
"""

from ghx import CanonicalModule, PresentationMatrix, snf_canonicalize
from ghx.graded_core import Monomial, c_multiple_dims, map_subquotients, ModuleMap
from ghx.grammar import parse_module

m = parse_module("T[3;2] + F[-1]")
print(m)                      # canonical order: torsion first
print(m.dims((-6, 4)))        # dimension in each degree

# a presentation: generators in degrees 0 and -2, one relation c^2 e0 + 3c e1
p = PresentationMatrix((0, -2), (-4,), ((Monomial(1, 2), Monomial(3, 1)),))
print(snf_canonicalize(p))    # T[-2;1] + F[0]

# where is c*M nonzero?
print({k: v for k, v in c_multiple_dims(CanonicalModule.torsion(0, 4), (-10, 2)).items() if v})

# multiplication by c^3 on a free module
F = CanonicalModule.free
f = ModuleMap(F(-6), F(0), 0, [[Monomial(1, 3)]])
ker, im, coker = map_subquotients(f)
print("kernel", ker, "image", im, "cokernel", coker)
