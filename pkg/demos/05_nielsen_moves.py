"""
Nielsen moves
=============

Pairs are compared by their matrices, so a search for a sequence of moves
never has to solve the word problem.  In a finite group we can also list all
Nielsen classes and check the search against them.
"""

from trigon.nielsen import GenPair, exhaustive_orbits, search_equivalence
from trigon.tits import group_new

ctx = group_new((2, 3, 5))
start = GenPair.from_words(ctx, "s2 s1 s2^-1", "(s1s2)^2 s1 s3 s1 (s1s2)^-2")
target = GenPair.from_words(ctx, "s1", "s3^2")

cert = search_equivalence(start, target)
print("certificate:", cert)
print("replays:", cert.is_valid())
print("inverse:", cert.inverted())

orbits = exhaustive_orbits(ctx)
print("Nielsen classes of generating pairs in Delta(2,3,5):",
      [len(c) for c in orbits.components])
print("same class:", orbits.same_class(start, target))
