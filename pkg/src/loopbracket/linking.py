"""
Crossings of taut representatives of cyclic words on a ribbon rose.

The universal cover of a ribbon rose is a planar tree, so every reduced
infinite ray from the base vertex has a well defined position on the
circle at infinity.  A pass of a cyclic word through the vertex is a pair
of rays (backwards and forwards along the word), i.e. the two ends of a
lifted line.  Two lifted lines must cross exactly when their ends
alternate around the circle.

Lines that share a segment of the tree pass through several vertices
together, and the pass pairs at all of those vertices see the same four
ends.  A crossing is therefore recorded once, at the vertex where the
first line enters the shared segment.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm
from typing import Optional

from .freegroup import CyclicWord, Word, format_letters, primitive_root
from .surface import RibbonRose


class RootViolation(RuntimeError):
    """Two distinct passes produced the same ray."""


@dataclass(frozen=True)
class Ray:
    """The infinite reduced word ``preperiod + period + period + ...``."""

    preperiod: tuple
    period: tuple

    def __post_init__(self):
        if not self.period:
            raise ValueError("a ray needs a nonempty period")

    def letter(self, k: int) -> int:
        m = len(self.preperiod)
        if k < m:
            return self.preperiod[k]
        return self.period[(k - m) % len(self.period)]

    def first(self) -> int:
        return self.letter(0)

    def __str__(self) -> str:
        head = format_letters(self.preperiod) if self.preperiod else ""
        return f"{head}({format_letters(self.period)})^inf"


def _depth_bound(r1: Ray, r2: Ray) -> int:
    # coordinate k depends on letters k-1 and k, so streams are periodic
    # after max(preperiod) + 1 with periods |period|; agreeing on one full
    # common period after that means the rays are equal
    return max(len(r1.preperiod), len(r2.preperiod)) + 1 + lcm(len(r1.period), len(r2.period))


def ray_angle(ray: Ray, rose: RibbonRose, depth: int) -> tuple:
    """First ``depth`` coordinates of the boundary address of ``ray``.

    >>> from loopbracket.surface import TORUS1
    >>> ray_angle(Ray((), (1,)), TORUS1, 4)
    (0, 2, 2, 2)
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    coords = [rose.position(ray.letter(0))]
    prev = ray.letter(0)
    for k in range(1, depth):
        cur = ray.letter(k)
        coords.append(rose.turn(prev, cur))
        prev = cur
    return tuple(coords)


def compare_rays(r1: Ray, r2: Ray, rose: RibbonRose) -> int:
    """-1, 0 or 1 as ``r1`` is before, equal to or after ``r2``."""
    if r1 == r2:
        return 0
    depth = _depth_bound(r1, r2)
    a = ray_angle(r1, rose, depth)
    b = ray_angle(r2, rose, depth)
    return (a > b) - (a < b)


@dataclass(frozen=True)
class Pass:
    word_id: int
    position: int
    in_ray: Ray
    out_ray: Ray


@dataclass(frozen=True)
class Crossing:
    pass1: Pass
    pass2: Pass
    sign: int


def passes(word: CyclicWord, word_id: int = 0) -> list:
    t = word.letters
    out = []
    for k in range(len(t)):
        rot = t[k:] + t[:k]
        back = tuple(-x for x in reversed(rot))
        out.append(Pass(word_id, k, Ray((), back), Ray((), rot)))
    return out


class _Angles:
    """Memoised sort keys for rays with a shared depth bound."""

    def __init__(self, rose: RibbonRose, depth: int):
        self.rose = rose
        self.depth = depth
        self._cache: dict = {}

    def __call__(self, ray: Ray) -> tuple:
        key = self._cache.get(ray)
        if key is None:
            key = self._cache[ray] = ray_angle(ray, self.rose, self.depth)
        return key


def _linking(p1: Pass, p2: Pass, angle: _Angles) -> Optional[int]:
    """Sign of the crossing recorded at this pass pair, or None.

    Sign is +1 when the velocity of line 1 followed by that of line 2 is a
    positive frame, i.e. the positive circular order reads (I1, I2, O1, O2).
    """
    i1, o1, i2, o2 = (angle(r) for r in (p1.in_ray, p1.out_ray, p2.in_ray, p2.out_ray))
    if len({i1, o1, i2, o2}) < 4:
        raise RootViolation(
            f"coinciding rays at passes {p1.word_id}:{p1.position} and {p2.word_id}:{p2.position}"
        )
    # record only where line 1 enters the segment it shares with line 2
    f = p1.in_ray.first()
    if f == p2.in_ray.first() or f == p2.out_ray.first():
        return None
    order = sorted([(i1, "I1"), (o1, "O1"), (i2, "I2"), (o2, "O2")])
    labels = [name for _, name in order]
    k = labels.index("I1")
    labels = labels[k:] + labels[:k]
    if labels == ["I1", "I2", "O1", "O2"]:
        return 1
    if labels == ["I1", "O2", "O1", "I2"]:
        return -1
    return None


def _depth_for(words, rose) -> int:
    longest = max(len(w) for w in words)
    common = 1
    for w in words:
        common = lcm(common, len(w))
    return 1 + common + longest


def crossings_between(w1: CyclicWord, w2: CyclicWord, rose: RibbonRose) -> list:
    """Crossings of the taut representatives of two cyclic words.

    Raises ValueError when the words share a primitive root; that case is
    handled from the self-crossings of the root instead.
    """
    if not w1.letters or not w2.letters:
        raise ValueError("words must be nonempty")
    r1, _ = primitive_root(w1)
    r2, _ = primitive_root(w2)
    if r1 == r2 or r1 == r2.inverse():
        raise ValueError("use same-root path: the words are powers of a common root")
    angle = _Angles(rose, _depth_for((w1, w2), rose))
    result = []
    for p1 in passes(w1, 0):
        for p2 in passes(w2, 1):
            sign = _linking(p1, p2, angle)
            if sign is not None:
                result.append(Crossing(p1, p2, sign))
    return result


def self_crossings(w: CyclicWord, rose: RibbonRose) -> list:
    """Ordered self-crossings of a primitive cyclic word.

    Every self-intersection point of the taut representative appears twice,
    once from each of its two branches.
    """
    if not w.letters:
        raise ValueError("word must be nonempty")
    root, n = primitive_root(w)
    if n != 1:
        raise ValueError("use power formula: the word is a proper power")
    angle = _Angles(rose, _depth_for((w,), rose))
    ps = passes(w, 0)
    result = []
    for p1 in ps:
        for p2 in ps:
            if p1.position == p2.position:
                continue
            sign = _linking(p1, p2, angle)
            if sign is not None:
                result.append(Crossing(p1, p2, sign))
    return result


def self_crossing_count(w: CyclicWord, rose: RibbonRose) -> int:
    """Minimal self-intersection number of a primitive class."""
    ordered = self_crossings(w, rose)
    assert len(ordered) % 2 == 0
    return len(ordered) // 2


def rays_of(word: Word) -> Ray:
    return Ray((), tuple(word.letters))
