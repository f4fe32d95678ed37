"""Exact values of g(n), the maximum total side length of n axis-parallel
squares packed in a unit square.

Every n >= 1 is either a perfect square n = k^2 (where g = k) or can be
written as n = k^2 + 2c + 1 with -k < c < k (where g = k + c/k): between
consecutive perfect squares, exactly one of n - k^2 and (k+1)^2 - n is odd.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Optional

PERFECT_SQUARE = "perfect-square"
OFFSET = "offset"


@dataclass(frozen=True)
class Decomposition:
    """Canonical decomposition of n as k^2 or k^2 + 2c + 1 with -k < c < k.

    ``c`` is None exactly for perfect squares; this avoids the ambiguous
    c = 0 vs c = -k encodings of n = k^2.
    """

    k: int
    c: Optional[int] = None

    @property
    def kind(self) -> str:
        return PERFECT_SQUARE if self.c is None else OFFSET

    @property
    def n(self) -> int:
        if self.c is None:
            return self.k * self.k
        return self.k * self.k + 2 * self.c + 1


def decompose(n: int) -> Decomposition:
    """Decompose n >= 1 into the parity-determined (k, c) form."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    k = isqrt(n)
    if k * k == n:
        return Decomposition(k=k)
    if (n - k * k) % 2 == 1:
        c = (n - k * k - 1) // 2
        return Decomposition(k=k, c=c)
    k += 1
    c = (n - k * k - 1) // 2
    return Decomposition(k=k, c=c)


def g_value(n: int) -> Fraction:
    """Exact g(n): k for n = k^2, otherwise k + c/k for n = k^2 + 2c + 1."""
    d = decompose(n)
    if d.c is None:
        return Fraction(d.k)
    return Fraction(d.k * d.k + d.c, d.k)
