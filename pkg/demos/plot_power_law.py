"""
Self-intersections of powers
============================

A k-th power of a primitive class b with i(b) self-intersections has
i(b) k^2 + k - 1 of them.  We also recover the count from the bracket of
two different powers of the same class.
"""

from loopbracket import PANTS, TORUS1, free_class, self_intersection, theorem2_selfint

for word in ("a", "aab", "aB"):
    for rose in (PANTS, TORUS1):
        counts = [self_intersection(free_class(word * k), rose) for k in range(1, 5)]
        print(f"{word:4s} on {rose}: {counts}")

# the bracket of a^p and a^q knows the self-intersection number of a
a = free_class("aab")
for p, q in ((1, 2), (-1, 3), (2, -2)):
    print(f"p={p:+d} q={q:+d}:", theorem2_selfint(a, p, q, PANTS))
