"""Exact optimal packings realizing g(n) for every n.

Three families cover all n:

* ``construct_grid(k)``: the k x k grid of side-1/k squares (n = k^2).
* ``construct_split(k)``: the grid with the bottom-right cell replaced by
  two diagonally placed squares of side 1/(2k) (n = k^2 + 1).
* ``construct_lshape(k, c)``: the grid outside a bottom-right corner square
  of side |c|/k, with the corner re-tiled by (c+1)^2 squares of side
  c/(k(c+1)) when c > 0, or by (d-1)^2 squares of side d/(k(d-1)) when
  c = -d < 0 (the corner stays empty for d = 1).  This realizes
  g(k^2 + 2c + 1) = k + c/k with exactly k^2 + 2c + 1 squares.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import Packing, Square
from .values import decompose


def _subgrid(x0: Fraction, y0: Fraction, count: int, side: Fraction) -> list[Square]:
    """count x count grid of equal squares with bottom-left corner (x0, y0)."""
    return [
        Square(x0 + i * side, y0 + j * side, side)
        for i in range(count)
        for j in range(count)
    ]


def construct_grid(k: int) -> Packing:
    """The k x k grid tiling; n = k^2 squares, total side length k."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    side = Fraction(1, k)
    return Packing(tuple(_subgrid(Fraction(0), Fraction(0), k, side)))


def construct_split(k: int) -> Packing:
    """The grid with its bottom-right cell split into two half-size squares.

    n = k^2 + 1 squares with total side length exactly k: removing a
    side-1/k cell and adding two side-1/(2k) squares is side-neutral.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    side = Fraction(1, k)
    half = Fraction(1, 2 * k)
    corner_x = Fraction(k - 1, k)
    cells = [
        Square(i * side, j * side, side)
        for i in range(k)
        for j in range(k)
        if not (i == k - 1 and j == 0)
    ]
    cells.append(Square(corner_x, Fraction(0), half))
    cells.append(Square(corner_x + half, half, half))
    return Packing(tuple(cells))


def construct_lshape(k: int, c: int) -> Packing:
    """Grid outside a corner square of side |c|/k, corner re-tiled.

    Requires -k < c < k and c != 0 (c = 0 is served by construct_split).
    Yields k^2 + 2c + 1 squares with total side length k + c/k.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if not (-k < c < k):
        raise ValueError(f"c must satisfy -{k} < c < {k}, got {c}")
    if c == 0:
        raise ValueError("c = 0 has no corner square; use construct_split(k)")
    m = abs(c)
    side = Fraction(1, k)
    squares = [
        Square(i * side, j * side, side)
        for i in range(k)
        for j in range(k)
        if not (i >= k - m and j < m)
    ]
    corner_x = Fraction(k - m, k)
    if c > 0:
        t = c + 1
        small = Fraction(c, k * t)
    else:
        t = m - 1
        small = Fraction(m, k * t) if t > 0 else Fraction(0)
    if t > 0:
        squares.extend(_subgrid(corner_x, Fraction(0), t, small))
    return Packing(tuple(squares))


def construct_optimal(n: int) -> Packing:
    """A valid packing of exactly n squares with total side length g(n)."""
    d = decompose(n)
    if d.c is None:
        return construct_grid(d.k)
    if d.c == 0:
        return construct_split(d.k)
    return construct_lshape(d.k, d.c)
