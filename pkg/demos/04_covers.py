"""
Covers and almost covers
========================

The cycles of S1 and S2 on the cosets give the cone points of the cover of
the disk D(p1, p2).  The cycles of S1 S2 are its boundary circles.  Capping
some circles with disks over the exceptional cone point of order p3 gives an
almost covering.
"""

from trigon.catalog import CATALOG
from trigon.coset import free_product_presentation, todd_coxeter
from trigon.orbifold import (AlmostCoverPlan, assemble_almost_cover,
                             euler_characteristic, reconstruct_cover,
                             verify_riemann_hurwitz)

table = todd_coxeter(free_product_presentation(2, 3), CATALOG["7b"].subgroup)
recon = reconstruct_cover((2, 3), table)
print("degree", recon.degree)
print("cover before capping:", recon.cover, "chi =", euler_characteristic(recon.cover))
print("base:", recon.base, "chi =", euler_characteristic(recon.base))
print("Riemann-Hurwitz:", verify_riemann_hurwitz(recon))
print("boundary degrees:", recon.boundary_cycles)

# Cap both degree-7 circles; they close up smoothly over a cone of order 7
plan = AlmostCoverPlan.filling(recon, [7, 7])
report = assemble_almost_cover(recon, plan, 7)
print("almost cover:", report.cover_orbifold)
print("exceptional degrees:", report.exceptional_degrees, "special:", report.is_special)
