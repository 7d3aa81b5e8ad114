"""
Phantom maps between free rational T-spectra
============================================

A map S(a) -> S(b) living in the Ext part of the bracket group induces zero
on homotopy.  It survives restriction to the free orbit W only if the
restriction on Ext is injective; it cannot be when c acts nontrivially on
the source Ext and trivially on the target.
"""

from ghx import homotopy, phantom_analysis, verify_counterexample
from ghx.circle_model import FreeOrbit, Sphere, bracket_dims

print(homotopy(Sphere(3)).top_level)          # T[5;3]
print(homotopy(FreeOrbit(3)).top_level)       # T[1;1] + T[6;1]

t = bracket_dims(Sphere(2), Sphere(3), (-6, 6))
for k, (h, e, total) in t.per_degree.items():
    if total:
        print(f"[S(2), S(3)] degree {k}: hom {h} ext {e}")

cert = phantom_analysis(2, 3)
print(cert.to_dict())

# the verdict over a small grid
for a in range(1, 6):
    print(a, ["x" if phantom_analysis(a, b).verdict else "." for b in range(1, 6)])

# brute force: every basis map E_X -> E_W kills c * E_X
rep = verify_counterexample(3, 4)
print(rep.maps_checked, "maps checked, kernel dims", [k for _, _, k in rep.kernel_dims])
