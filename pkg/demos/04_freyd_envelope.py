"""
The Freyd envelope of graded Q[c]-modules
=========================================

Objects are maps i: s -> t, morphisms are commuting squares, and a square
counts as zero once s -> s' -> t' vanishes.
"""

from ghx import CanonicalModule
from ghx.freyd_envelope import (
    EnvelopeMorphism, EnvelopeObject, env_embed, env_hom_dims, env_homological_value,
    env_is_zero, extend_faithfulness_check,
)
from ghx.graded_core import ModuleMap, Monomial
from ghx.hom_ext import hom_module

T, F = CanonicalModule.torsion, CanonicalModule.free

# modules sit inside as identity maps, fully faithfully
m, n = T(0, 2), T(0, 3) + F(2)
print([env_hom_dims(env_embed(m), env_embed(n), d) for d in range(-6, 3)])
print([hom_module(m, n).dim(d) for d in range(-6, 3)])

# multiplication by c, and its image
c = EnvelopeObject(ModuleMap(F(-2), F(0), 0, [[Monomial(1, 1)]]))
print(env_homological_value(c))               # F[-2]

# a square into an object with zero structure map is always null
e = env_embed(T(0, 2))
z = EnvelopeObject(ModuleMap.zero(T(0, 2), T(0, 2)))
sq = EnvelopeMorphism(e, z, ModuleMap.identity(T(0, 2)), ModuleMap.zero(T(0, 2), T(0, 2)))
print(env_is_zero(sq), extend_faithfulness_check(sq))
