"""
Oriented surfaces with free fundamental group, modelled as ribbon roses.

A ribbon rose has one vertex and ``rank`` bands.  Its only data is the
positive circular order ``sigma`` of the 2 * rank directions leaving the
vertex (letter ``x`` leaves along the band of generator |x| at the end
labelled ``x``).  ``sigma`` is stored rotated so it starts at ``a_1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .freegroup import WordSyntaxError, format_letter, parse_letters


class SurfaceError(ValueError):
    pass


@dataclass(frozen=True)
class RibbonRose:
    rank: int
    sigma: tuple
    _position: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        sigma = tuple(self.sigma)
        if self.rank < 1:
            raise SurfaceError("rank must be positive")
        expected = {s * i for i in range(1, self.rank + 1) for s in (1, -1)}
        if len(sigma) != len(set(sigma)):
            raise SurfaceError("duplicate direction in sigma")
        if set(sigma) != expected:
            missing = sorted(expected - set(sigma), key=abs)
            extra = sorted(set(sigma) - expected, key=abs)
            raise SurfaceError(
                "sigma must list every direction exactly once"
                + (f"; missing {','.join(format_letter(x) for x in missing)}" if missing else "")
                + (f"; unexpected {','.join(format_letter(x) for x in extra)}" if extra else "")
            )
        k = sigma.index(1)
        sigma = sigma[k:] + sigma[:k]
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "_position", {x: i for i, x in enumerate(sigma)})

    def position(self, x: int) -> int:
        return self._position[x]

    @property
    def degree(self) -> int:
        return 2 * self.rank

    def turn(self, arriving: int, leaving: int) -> int:
        """Positive circular distance from direction ``-arriving`` to ``leaving``."""
        return (self._position[leaving] - self._position[-arriving]) % (2 * self.rank)

    def boundary_count(self) -> int:
        """Number of boundary components of the thickened rose."""
        # boundary cycles of the ribbon graph: half-edge x is followed by
        # the successor (in sigma) of -x
        n = self.degree
        succ = {self.sigma[i]: self.sigma[(i + 1) % n] for i in range(n)}
        seen = set()
        cycles = 0
        for start in self.sigma:
            if start in seen:
                continue
            cycles += 1
            x = start
            while x not in seen:
                seen.add(x)
                x = succ[-x]
        return cycles

    def genus(self) -> int:
        # Euler characteristic 1 - rank = 2 - 2g - r
        return (1 + self.rank - self.boundary_count()) // 2

    def __str__(self) -> str:
        return "rose:" + ",".join(format_letter(x) for x in self.sigma)


def _parse_direction(token: str, spec: str) -> int:
    try:
        letters = parse_letters(token)
    except WordSyntaxError as exc:
        raise SurfaceError(f"bad direction {token!r} in {spec!r}") from exc
    if len(letters) != 1:
        raise SurfaceError(f"bad direction {token!r} in {spec!r}")
    return letters[0]


def standard_rose(genus: int, boundary: int) -> RibbonRose:
    """Rose for the surface of given genus with ``boundary`` >= 1 holes."""
    if boundary < 1:
        raise SurfaceError("closed surfaces unsupported except via torus module")
    if genus < 0:
        raise SurfaceError("genus must be nonnegative")
    rank = 2 * genus + boundary - 1
    if rank < 1:
        raise SurfaceError("the disk has trivial fundamental group")
    sigma = []
    for i in range(genus):
        a, b = 2 * i + 1, 2 * i + 2
        sigma += [a, b, -a, -b]
    for j in range(boundary - 1):
        c = 2 * genus + j + 1
        sigma += [c, -c]
    return RibbonRose(rank, tuple(sigma))


PANTS = RibbonRose(2, (1, -1, 2, -2))
TORUS1 = RibbonRose(2, (1, 2, -1, -2))


def parse_surface(spec: str) -> RibbonRose:
    """Parse ``rose:a,b,A,B``, ``pants``, ``torus1`` or ``genus=g,boundary=r``.

    >>> parse_surface("rose:a,b,A,B") == TORUS1
    True
    """
    text = spec.strip()
    if text == "pants":
        return PANTS
    if text == "torus1":
        return TORUS1
    if text.startswith("rose:"):
        tokens = [t for t in text[5:].split(",") if t.strip()]
        if not tokens:
            raise SurfaceError("empty rose")
        sigma = tuple(_parse_direction(t, spec) for t in tokens)
        rank = max(abs(x) for x in sigma)
        return RibbonRose(rank, sigma)
    if text.startswith("genus="):
        fields = {}
        for part in text.split(","):
            key, _, value = part.partition("=")
            try:
                fields[key.strip()] = int(value)
            except ValueError:
                raise SurfaceError(f"bad integer in {spec!r}") from None
        if set(fields) != {"genus", "boundary"}:
            raise SurfaceError(f"expected genus=<g>,boundary=<r>, got {spec!r}")
        return standard_rose(fields["genus"], fields["boundary"])
    raise SurfaceError(f"unknown surface spec {spec!r}")


def enumerate_rank2_roses() -> list:
    """The rank-2 circular orders up to rotation and reflection.

    Reflection only reverses the surface orientation, which flips every
    crossing sign and leaves all counts unchanged, so one order per mirror
    pair is listed.
    """
    seen = set()
    roses = []
    for rest in itertools.permutations((-1, 2, -2)):
        sigma = (1,) + rest
        mirror = (1,) + tuple(reversed(rest))
        if mirror in seen:
            continue
        seen.add(sigma)
        roses.append(RibbonRose(2, sigma))
    return roses
