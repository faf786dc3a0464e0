"""
Two curves on the pair of pants
===============================

The classes a B B and a B on the pair of pants can be drawn with four
crossings, but two of the four chord diagrams cancel.  The bracket keeps
two terms, so two crossings is the minimum.  The Goldman bracket of the
same pair vanishes, so it gives no lower bound here.
"""

from loopbracket import PANTS, amr_bracket, free_class, goldman_bracket, min_intersection
from loopbracket import ChordTerm, Word, reduce_terms

a1, a2 = free_class("aBB"), free_class("aB")

# the four terms read off a drawing with four crossings
drawn = [
    ChordTerm(1, Word("BBa"), Word("aB")),
    ChordTerm(-1, Word("aBB"), Word("Ba")),
    ChordTerm(-1, Word("aBB"), Word("aB")),
    ChordTerm(1, Word("BaB"), Word("aB")),
]
print("drawn terms reduce to", reduce_terms(drawn).terms_count)

# the library finds the taut representatives directly
result = amr_bracket(a1, a2, PANTS)
for first, second, c in result.sorted_reduced():
    print(f"{c:+d}  {first} . {second}")

print("minimal intersection:", min_intersection(a1, a2, PANTS))
print("goldman bracket:", goldman_bracket(a1, a2, PANTS) or 0)
