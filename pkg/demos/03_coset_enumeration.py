"""
Coset enumeration
=================

Todd-Coxeter enumeration turns a subgroup given by words into a permutation
action on cosets.  Its size is the index, which is also the degree of the
corresponding cover.
"""

from trigon.coset import (EnumLimits, action_cycles, free_product_presentation,
                          todd_coxeter, triangle_presentation)
from trigon.tits import enumerate_group, group_new

# Finite triangle groups: the trivial subgroup has index |G|
for sig in ((2, 3, 3), (2, 3, 4), (2, 3, 5)):
    hlt = todd_coxeter(triangle_presentation(sig), [], EnumLimits(strategy="hlt"))
    felsch = todd_coxeter(triangle_presentation(sig), [], EnumLimits(strategy="felsch"))
    print(sig, hlt.index, felsch.index, len(enumerate_group(group_new(sig))),
          "same table:", hlt.perms == felsch.perms)

# A subgroup of Z2 * Z3 = <S1, S2 | S1^2, S2^3> of index 3
table = todd_coxeter(free_product_presentation(2, 3), ["S1", "S2^-1 S1 S2^2"])
print("index", table.index)
for w in ("S1", "S2", "S1 S2"):
    print("  cycles of %-6s %s" % (w, action_cycles(table, w)))
