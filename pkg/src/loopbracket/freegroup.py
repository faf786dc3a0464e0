"""
Word algebra in finitely generated free groups.

Letters are nonzero integers: ``i + 1`` stands for the generator x_i and
``-(i + 1)`` for its inverse.  Words are always kept freely reduced.

Text grammar: lowercase ``a``..``z`` are x_1..x_26, uppercase letters their
inverses; ``x3^-1 x1`` is the explicit form for larger ranks.  The empty
word prints as ``1``.

The fixed total order on letters is a_1 < a_1^-1 < a_2 < a_2^-1 < ...;
it decides canonical rotations and the tie-break in every "least word"
choice made here.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class WordSyntaxError(ValueError):
    """A word could not be parsed; ``position`` is the offending offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def letter_key(x: int) -> int:
    return 2 * (abs(x) - 1) + (x < 0)


def word_key(letters: Sequence[int]) -> tuple:
    """Sort key: shorter first, then lexicographic in the letter order."""
    return (len(letters), tuple(letter_key(x) for x in letters))


def _reduce_letters(raw: Iterable[int]) -> tuple:
    out: list = []
    for x in raw:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class Word:
    """A freely reduced word.  Immutable and hashable.

    Built from signed generator indices or from text:

    >>> Word([1, -2, 2, 1]) == Word("aa")
    True
    """

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] | str = ()):
        if isinstance(letters, str):
            letters = parse_letters(letters)
        object.__setattr__(self, "letters", _reduce_letters(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    @classmethod
    def _trusted(cls, letters: tuple) -> "Word":
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def parse(cls, text: str) -> "Word":
        return cls._trusted(parse_letters(text))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __eq__(self, other) -> bool:
        if isinstance(other, Word):
            return self.letters == other.letters
        if isinstance(other, str):
            return self.letters == parse_letters(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word._trusted(_concat(self.letters, other.letters))

    def __invert__(self) -> "Word":
        return Word._trusted(tuple(-x for x in reversed(self.letters)))

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __lt__(self, other: "Word") -> bool:
        return word_key(self.letters) < word_key(other.letters)

    def __str__(self) -> str:
        return format_letters(self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    @property
    def rank(self) -> int:
        """Smallest rank of a free group containing this word."""
        return max((abs(x) for x in self.letters), default=0)


def _concat(u: tuple, v: tuple) -> tuple:
    i = 0
    n = min(len(u), len(v))
    while i < n and u[len(u) - 1 - i] == -v[i]:
        i += 1
    return u[: len(u) - i] + v[i:]


def as_word(w) -> Word:
    if isinstance(w, Word):
        return w
    if isinstance(w, str):
        return Word.parse(w)
    return Word(w)


# ---------------------------------------------------------------------------
# text grammar

_EXPLICIT = re.compile(r"\s*x(\d+)(?:\^(-?\d+))?")


def parse_letters(text: str) -> tuple:
    """Parse either grammar and return the freely reduced letter tuple.

    >>> parse_letters("abBa")
    (1, 1)
    >>> parse_letters("x3^-1 x1")
    (-3, 1)
    >>> parse_letters("1")
    ()
    """
    s = text.strip()
    if s in ("", "1"):
        return ()
    raw: list = []
    if "x" in s:
        pos = 0
        while pos < len(s):
            if s[pos].isspace() or s[pos] == "*":
                pos += 1
                continue
            m = _EXPLICIT.match(s, pos)
            if not m:
                raise WordSyntaxError(f"bad token in {text!r}", pos)
            index = int(m.group(1))
            if index < 1:
                raise WordSyntaxError("generator index starts at 1", pos)
            exponent = int(m.group(2)) if m.group(2) is not None else 1
            letter = index if exponent > 0 else -index
            raw.extend([letter] * abs(exponent))
            pos = m.end()
    else:
        for pos, ch in enumerate(s):
            if "a" <= ch <= "z":
                raw.append(ord(ch) - ord("a") + 1)
            elif "A" <= ch <= "Z":
                raw.append(-(ord(ch) - ord("A") + 1))
            elif ch.isspace():
                continue
            else:
                raise WordSyntaxError(f"unexpected {ch!r} in {text!r}", pos)
    return _reduce_letters(raw)


def format_letter(x: int) -> str:
    if abs(x) <= 26:
        return chr(ord("a" if x > 0 else "A") + abs(x) - 1)
    return f"x{abs(x)}" if x > 0 else f"x{abs(x)}^-1"


def format_letters(letters: Sequence[int]) -> str:
    if not letters:
        return "1"
    if all(abs(x) <= 26 for x in letters):
        return "".join(format_letter(x) for x in letters)
    return " ".join(f"x{abs(x)}" if x > 0 else f"x{abs(x)}^-1" for x in letters)


# ---------------------------------------------------------------------------
# basic operations


def reduce(raw) -> Word:
    if isinstance(raw, str):
        return Word.parse(raw)
    return Word(raw)


def invert(w: Word) -> Word:
    return ~as_word(w)


def power(w: Word, k: int) -> Word:
    w = as_word(w)
    if k < 0:
        w, k = ~w, -k
    if k == 0 or not w:
        return Word()
    core, conj = cyclic_reduce(w)
    return conj * Word._trusted(core.letters * k) * ~conj


def conjugate(g: Word, w: Word) -> Word:
    """Return g w g^-1."""
    g = as_word(g)
    return g * as_word(w) * ~g


def cyclic_reduce(w: Word) -> tuple:
    """Split ``w`` as ``conjugator * core * conjugator^-1``.

    >>> [str(x) for x in cyclic_reduce(Word.parse("baB"))]
    ['a', 'b']
    """
    w = as_word(w)
    t = w.letters
    i, j = 0, len(t) - 1
    while i < j and t[i] == -t[j]:
        i += 1
        j -= 1
    return Word._trusted(t[i : j + 1]), Word._trusted(t[:i])


def rotations(letters: tuple) -> Iterator[tuple]:
    for i in range(len(letters)):
        yield letters[i:] + letters[:i]


def least_rotation(letters: tuple) -> tuple:
    """Index and value of the least rotation under the letter order."""
    if not letters:
        return 0, ()
    keyed = [letter_key(x) for x in letters]
    best = min(range(len(letters)), key=lambda i: keyed[i:] + keyed[:i])
    return best, letters[best:] + letters[:best]


def smallest_period(letters: tuple) -> int:
    n = len(letters)
    for p in range(1, n + 1):
        if n % p == 0 and letters[p:] + letters[:p] == letters:
            return p
    return n


# ---------------------------------------------------------------------------
# cyclic words and free homotopy classes


class CyclicWord:
    """A cyclically reduced word stored in its least rotation."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[int] = ()):
        t = tuple(letters)
        for k in range(len(t)):
            if t[k] == -t[k - 1] and len(t) > 1:
                raise ValueError(f"{format_letters(t)} is not cyclically reduced")
        object.__setattr__(self, "letters", least_rotation(t)[1])

    def __setattr__(self, name, value):
        raise AttributeError("CyclicWord is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __eq__(self, other) -> bool:
        if isinstance(other, CyclicWord):
            return self.letters == other.letters
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("cyclic", self.letters))

    def __lt__(self, other: "CyclicWord") -> bool:
        return word_key(self.letters) < word_key(other.letters)

    def __str__(self) -> str:
        return format_letters(self.letters)

    def __repr__(self) -> str:
        return f"CyclicWord({str(self)!r})"

    def word(self) -> Word:
        return Word._trusted(self.letters)

    def rotation(self, k: int) -> Word:
        """The based loop obtained by starting at letter ``k``."""
        k %= len(self.letters)
        return Word._trusted(self.letters[k:] + self.letters[:k])

    def inverse(self) -> "CyclicWord":
        return CyclicWord(-x for x in reversed(self.letters))


@dataclass(frozen=True)
class FreeClass:
    """A free homotopy class ``<root^exponent>`` with ``root`` primitive.

    The trivial class has an empty canonical word and exponent 0.
    """

    canonical: CyclicWord
    root: CyclicWord
    exponent: int

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    def inverse(self) -> "FreeClass":
        if self.is_trivial:
            return self
        return FreeClass(self.canonical.inverse(), self.root.inverse(), self.exponent)

    def power(self, k: int) -> "FreeClass":
        if k == 0 or self.is_trivial:
            return TRIVIAL_CLASS
        base = self if k > 0 else self.inverse()
        k = abs(k)
        return FreeClass(
            CyclicWord(base.canonical.letters * k), base.root, base.exponent * k
        )

    def word(self) -> Word:
        return self.canonical.word()

    def __str__(self) -> str:
        return f"<{self.canonical}>"


TRIVIAL_CLASS = FreeClass(CyclicWord(), CyclicWord(), 0)


def primitive_root(c) -> tuple:
    """Return ``(root, n)`` with ``c = root^n`` and ``n`` maximal.

    >>> r, n = primitive_root(CyclicWord(Word.parse("aabaab")))
    >>> str(r), n
    ('aab', 2)
    """
    letters = c.letters if isinstance(c, (CyclicWord, Word)) else tuple(c)
    if not letters:
        raise ValueError("the empty word has no primitive root")
    p = smallest_period(letters)
    return CyclicWord(letters[:p]), len(letters) // p


def free_class(w) -> FreeClass:
    core, _ = cyclic_reduce(as_word(w))
    if not core:
        return TRIVIAL_CLASS
    root, n = primitive_root(core.letters)
    return FreeClass(CyclicWord(core.letters), root, n)


def same_class(u, v) -> bool:
    return free_class(u) == free_class(v)


# ---------------------------------------------------------------------------
# centralizers and conjugacy


def _canonical_conjugator(w: Word) -> tuple:
    """Return ``(h, c)`` with ``h w h^-1 = c`` and ``c`` the least rotation."""
    core, conj = cyclic_reduce(w)
    j, least = least_rotation(core.letters)
    # core = p c' p^-1 with p = core[:j]; so w = (conj p) c' (conj p)^-1
    h = ~(conj * Word._trusted(core.letters[:j]))
    return h, Word._trusted(least)


def centralizer_generator(w) -> Word:
    """Generator of the (infinite cyclic) centralizer of a nontrivial word.

    >>> str(centralizer_generator(Word.parse("baaB")))
    'baB'
    """
    w = as_word(w)
    if not w:
        raise ValueError("trivial word has full-group centralizer")
    core, conj = cyclic_reduce(w)
    p = smallest_period(core.letters)
    return conj * Word._trusted(core.letters[:p]) * ~conj


def find_conjugator(u, v) -> Optional[Word]:
    """Some ``g`` with ``g u g^-1 = v``, or None when u and v are not conjugate."""
    u, v = as_word(u), as_word(v)
    hu, cu = _canonical_conjugator(u)
    hv, cv = _canonical_conjugator(v)
    if cu != cv:
        return None
    # hu u hu^-1 = c = hv v hv^-1
    return ~hv * hu


def _power_window(w: Word, v: Word) -> int:
    return 2 * (len(w) + len(v)) + 2


def simultaneous_conjugacy(u1, u2, v1, v2) -> Optional[Word]:
    """Some ``g`` with ``g u1 g^-1 = v1`` and ``g u2 g^-1 = v2``, else None.

    Any such ``g`` is ``s^i g0`` where ``g0`` conjugates u1 to v1 and ``s``
    generates the centralizer of v1, so only the exponent ``i`` is searched.
    """
    u1, u2, v1, v2 = map(as_word, (u1, u2, v1, v2))
    if not u1:
        raise ValueError("first word is trivial: its centralizer is not cyclic")
    g0 = find_conjugator(u1, v1)
    if g0 is None:
        return None
    s = centralizer_generator(v1)
    w = conjugate(g0, u2)
    if w == v2:
        return g0
    if w * s == s * w:
        return None
    if free_class(w) != free_class(v2):
        return None
    bound = _power_window(w, v2)
    s_inv = ~s
    fwd = bwd = w
    for i in range(1, bound + 1):
        fwd = s * fwd * s_inv
        if fwd == v2:
            return power(s, i) * g0
        bwd = s_inv * bwd * s
        if bwd == v2:
            return power(s, -i) * g0
    return None


def reduced_words(rank: int, max_len: int) -> Iterator[Word]:
    """All reduced words of length <= max_len, shortest first."""
    letters = [x for i in range(1, rank + 1) for x in (i, -i)]
    letters.sort(key=letter_key)
    layer = [()]
    yield Word._trusted(())
    for _ in range(max_len):
        nxt = []
        for t in layer:
            for x in letters:
                if t and t[-1] == -x:
                    continue
                nxt.append(t + (x,))
        for t in nxt:
            yield Word._trusted(t)
        layer = nxt


def brute_force_simconj(u1, u2, v1, v2, max_len: int, rank: Optional[int] = None) -> Optional[Word]:
    """Exhaustive search over reduced ``g`` with ``|g| <= max_len``."""
    u1, u2, v1, v2 = map(as_word, (u1, u2, v1, v2))
    if rank is None:
        rank = max(1, u1.rank, u2.rank, v1.rank, v2.rank)
    for g in reduced_words(rank, max_len):
        gi = ~g
        if g * u1 * gi == v1 and g * u2 * gi == v2:
            return g
    return None


__all__ = [
    "Word",
    "CyclicWord",
    "FreeClass",
    "TRIVIAL_CLASS",
    "WordSyntaxError",
    "as_word",
    "reduce",
    "invert",
    "power",
    "conjugate",
    "cyclic_reduce",
    "primitive_root",
    "free_class",
    "same_class",
    "centralizer_generator",
    "find_conjugator",
    "simultaneous_conjugacy",
    "brute_force_simconj",
    "reduced_words",
    "letter_key",
    "word_key",
    "least_rotation",
    "parse_letters",
    "format_letters",
]
