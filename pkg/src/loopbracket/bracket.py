"""
Andersen-Mattes-Reshetikhin and Goldman brackets of two free homotopy
classes, and the intersection numbers read off from them.

A term of the AMR bracket of two classes is a signed one-chord diagram:
two based loops joined at a common point.  Two such diagrams are equal
when one group element conjugates both loops of the first onto the loops
of the second.  One-chord diagrams are never identified by 4T relations
(those involve two chords), so after this identification they are
linearly independent and the number of terms is the sum of the absolute
coefficients.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .freegroup import (
    FreeClass,
    Word,
    as_word,
    conjugate,
    free_class,
    smallest_period,
    word_key,
    _canonical_conjugator,
)
from .linking import crossings_between, self_crossing_count, self_crossings
from .surface import RibbonRose


class BracketError(ValueError):
    pass


@dataclass(frozen=True)
class ChordTerm:
    """``sign * (first . second)``: loops in the first and second class."""

    sign: int
    first: Word
    second: Word

    def __post_init__(self):
        object.__setattr__(self, "first", as_word(self.first))
        object.__setattr__(self, "second", as_word(self.second))
        if self.sign not in (1, -1):
            raise BracketError("sign must be +1 or -1")
        if not self.first or not self.second:
            raise BracketError("chord term loops must be nontrivial")

    def diagram(self) -> tuple:
        """The unsigned diagram as a hashable pair of words."""
        return (self.first, self.second)

    def __str__(self) -> str:
        return f"{'+' if self.sign > 0 else '-'}({self.first} . {self.second})"


def _least_power_conjugate(w: Word, s: Word) -> Word:
    """Least word, by length then letter order, of the form s^i w s^-i."""
    if w * s == s * w:
        return w
    s_inv = ~s
    best = w
    # |s^i w s^-i| is convex in i, so each direction stops once it grows
    for step, step_inv in ((s, s_inv), (s_inv, s)):
        cur = w
        prev_len = len(w)
        while True:
            cur = step * cur * step_inv
            if word_key(cur.letters) < word_key(best.letters):
                best = cur
            if len(cur) > prev_len and len(cur) > len(best):
                break
            prev_len = len(cur)
    return best


def canonicalize_term(t: ChordTerm) -> ChordTerm:
    """Canonical representative of the simultaneous-conjugacy orbit of ``t``."""
    if free_class(t.first) == free_class(t.second):
        raise BracketError("ordered-pair canonicalization undefined; use skew-symmetry")
    g0, u = _canonical_conjugator(t.first)
    s = Word._trusted(u.letters[: smallest_period(u.letters)])
    w = conjugate(g0, t.second)
    return ChordTerm(t.sign, u, _least_power_conjugate(w, s))


def orbit_key(t: ChordTerm) -> tuple:
    c = canonicalize_term(t)
    return (word_key(c.first.letters), word_key(c.second.letters))


@dataclass
class BracketResult:
    raw: list = field(default_factory=list)
    reduced: dict = field(default_factory=dict)

    @property
    def terms_count(self) -> int:
        return sum(abs(c) for c in self.reduced.values())

    def sorted_reduced(self) -> list:
        """``(first, second, coefficient)`` sorted by canonical form."""
        items = sorted(
            self.reduced.items(),
            key=lambda kv: (word_key(kv[0][0].letters), word_key(kv[0][1].letters)),
        )
        return [(a, b, c) for (a, b), c in items]


def reduce_terms(raw: Iterable[ChordTerm]) -> BracketResult:
    raw = list(raw)
    result = BracketResult(raw=raw)
    if not raw:
        return result
    classes = (free_class(raw[0].first), free_class(raw[0].second))
    acc: Counter = Counter()
    for t in raw:
        if (free_class(t.first), free_class(t.second)) != classes:
            raise BracketError("terms belong to different pairs of classes")
        acc[canonicalize_term(t).diagram()] += t.sign
    result.reduced = {k: v for k, v in acc.items() if v}
    return result


def _coerce_class(a) -> FreeClass:
    return a if isinstance(a, FreeClass) else free_class(as_word(a))


def shared_root(a1: FreeClass, a2: FreeClass):
    """``(b, k1, k2)`` with a_i = <b^k_i>, or None when the roots differ."""
    if a1.is_trivial or a2.is_trivial:
        return None
    if a1.root == a2.root:
        return a1.root, a1.exponent, a2.exponent
    if a1.root == a2.root.inverse():
        return a1.root, a1.exponent, -a2.exponent
    return None


def _same_root_terms(b, k1: int, k2: int, rose: RibbonRose) -> list:
    # Push a copy of b^k1 off to the left of b and b^k2 to the right.  Each
    # self-crossing of b, seen from its branch at pass p (loop h1 h2) against
    # the branch at pass q (loop h2 h1), gives |k1 k2| crossings of the
    # pushed-off curves, all with the same sign and the same diagram
    # (h1 h2)^k1 . (h2 h1)^k2.  The other branch order gives the opposite
    # sign, so each self-crossing of b contributes 2|k1 k2| terms.
    terms = []
    mult = abs(k1 * k2)
    orient = 1 if k1 * k2 > 0 else -1
    for c in self_crossings(b, rose):
        first = b.rotation(c.pass1.position) ** k1
        second = b.rotation(c.pass2.position) ** k2
        terms.extend([ChordTerm(c.sign * orient, first, second)] * mult)
    return terms


def raw_terms(a1, a2, rose: RibbonRose) -> list:
    a1, a2 = _coerce_class(a1), _coerce_class(a2)
    if a1.is_trivial or a2.is_trivial or a1 == a2:
        return []
    common = shared_root(a1, a2)
    if common is not None:
        return _same_root_terms(*common, rose)
    return [
        ChordTerm(
            c.sign,
            a1.canonical.rotation(c.pass1.position),
            a2.canonical.rotation(c.pass2.position),
        )
        for c in crossings_between(a1.canonical, a2.canonical, rose)
    ]


def amr_bracket(a1, a2, rose: RibbonRose) -> BracketResult:
    """AMR Poisson bracket ``{a1, a2}`` as raw and reduced chord terms.

    Trivial classes and ``a1 == a2`` give the zero bracket.
    """
    return reduce_terms(raw_terms(a1, a2, rose))


def smooth(t: ChordTerm) -> tuple:
    """Goldman term of a chord diagram: ``(sign, <first * second>)``."""
    return t.sign, free_class(t.first * t.second)


def goldman_bracket(a1, a2, rose: RibbonRose) -> dict:
    acc: Counter = Counter()
    for t in raw_terms(a1, a2, rose):
        sign, cls = smooth(t)
        acc[cls] += sign
    return {cls: c for cls, c in acc.items() if c}


def goldman_terms(a1, a2, rose: RibbonRose) -> int:
    return sum(abs(c) for c in goldman_bracket(a1, a2, rose).values())


def self_intersection(a, rose: RibbonRose) -> int:
    """Minimal self-intersection number; 0 for the trivial class.

    For a = <b^n> with b primitive this is i(b) n^2 + n - 1.
    """
    a = _coerce_class(a)
    if a.is_trivial:
        return 0
    n = a.exponent
    return self_crossing_count(a.root, rose) * n * n + n - 1


def min_intersection(a1, a2, rose: RibbonRose) -> int:
    """Minimal number of intersection points of curves in ``a1`` and ``a2``."""
    a1, a2 = _coerce_class(a1), _coerce_class(a2)
    if a1.is_trivial or a2.is_trivial:
        return 0
    if a1 == a2:
        return 2 * (self_intersection(a1, rose) - (a1.exponent - 1))
    return amr_bracket(a1, a2, rose).terms_count


def theorem2_selfint(a, p: int, q: int, rose: RibbonRose) -> int:
    """Self-intersection number recovered from ``terms({a^p, a^q})``."""
    a = _coerce_class(a)
    if p == q or p == 0 or q == 0:
        raise BracketError("p and q must be distinct and nonzero")
    if a.is_trivial:
        raise BracketError("class must be nontrivial")
    terms = amr_bracket(a.power(p), a.power(q), rose).terms_count
    denom = 2 * abs(p * q)
    if terms % denom:
        raise ArithmeticError(f"terms {terms} not divisible by {denom}")
    return terms // denom + a.exponent - 1
