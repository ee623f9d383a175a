"""
Words, matrices and element orders
==================================

Each word in s1, s2, s3 becomes a 3x3 matrix over the cyclotomic field.
Equal matrices mean equal group elements, so identities can be checked
directly.
"""

from trigon import group_new, eval_word, order, geometry_type

ctx = group_new((2, 3, 7))
print(ctx, geometry_type(ctx.signature))

# The defining relations hold on the nose
for w in ("s1^2", "s2^3", "s3^7", "s1 s2 s3"):
    print("%-10s identity: %s" % (w, eval_word(ctx, w).is_identity()))

# A longer identity between two spellings of one element
lhs = eval_word(ctx, "s1s2s1s2s1s2^2 · s1s2 · s2s1s2^2s1s2^2s1")
rhs = eval_word(ctx, "s3^-3 s1 · s3^-1 · s1 s3^3")
print("identity holds:", lhs == rhs)

# Orders: torsion divides some p_i, anything else has infinite order
for w in ("s1", "s1 s2", "s1 s2 s1 s2^2"):
    print("order of %-14s = %s" % (w, order(ctx, eval_word(ctx, w))))
