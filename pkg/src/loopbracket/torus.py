"""Minimal intersection numbers on the closed torus."""

from __future__ import annotations

import re
from typing import NamedTuple


class TorusClass(NamedTuple):
    """A class in pi_1(T^2) = H_1(T^2) = Z + Z; (0, 0) is trivial."""

    m: int
    l: int

    @classmethod
    def parse(cls, text: str) -> "TorusClass":
        match = re.fullmatch(r"\s*\(?\s*(-?\d+)\s*,\s*(-?\d+)\s*\)?\s*", text)
        if not match:
            raise ValueError(f"expected a pair (m,l), got {text!r}")
        return cls(int(match.group(1)), int(match.group(2)))

    def __str__(self) -> str:
        return f"({self.m},{self.l})"


def algebraic_intersection(c1: TorusClass, c2: TorusClass) -> int:
    return c1.m * c2.l - c1.l * c2.m


def torus_min_intersection(c1, c2) -> int:
    """|m1 l2 - l1 m2|, which is both #(c1, c2) and the number of AMR terms.

    >>> torus_min_intersection((2, 3), (1, 1))
    1
    """
    return abs(algebraic_intersection(TorusClass(*c1), TorusClass(*c2)))
