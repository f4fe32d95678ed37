"""Vertical-line capacity certificates and overlap refutation.

For a shift a in [0, 1/k) consider the k vertical lines x = a + j/k,
j = 0..k-1.  Each line meets a square in a segment of full length equal to
the square's side, and a unit-length line can carry at most total segment
length 1 from a disjoint packing.  Counting, per square, how many lines hit
its half-open x-projection (m_i) and partitioning indices by m_i = 0, 1 or
>= 2 yields an inequality chain bounding the total side length by k when
there are k^2 + 1 disjoint squares.  Run forwards this certifies packings;
run backwards (``refute_sweep``) it extracts an explicit overlap witness
from any overfull instance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Sequence

from .geometry import (
    OverlapWitness,
    Packing,
    PreconditionError,
    Square,
)


def _check_offset(k: int, a: Fraction) -> None:
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    if not (0 <= a < Fraction(1, k)):
        raise ValueError(f"offset must lie in [0, 1/{k}), got {a}")


def _check_in_bounds(squares: Sequence[Square]) -> None:
    for i, s in enumerate(squares):
        if not s.in_unit_square():
            raise ValueError(f"square {i} is not inside the unit square")


def _hits(x: Fraction, side: Fraction, k: int, a: Fraction) -> int:
    """Number of j in 0..k-1 with a + j/k inside the half-open [x, x+side)."""
    lo = max(0, ceil(k * (x - a)))
    hi = min(k, ceil(k * (x + side - a)))
    return max(0, hi - lo)


def sweep_counts(p: Packing, k: int, a: Fraction) -> list[int]:
    """Per-square counts m_i of the lines x = a + j/k meeting each square."""
    _check_offset(k, a)
    _check_in_bounds(p.squares)
    return [_hits(s.x, s.side, k, a) for s in p.squares]


def offset_breakpoints(p: Packing, k: int) -> list[Fraction]:
    """Sorted shifts in [0, 1/k) where some per-square count changes.

    The counts are piecewise constant and right-continuous in a, with
    jumps only at x_i mod 1/k and (x_i + d_i) mod 1/k.
    """
    period = Fraction(1, k)
    points = {Fraction(0)}
    for s in p.squares:
        points.add(s.x % period)
        points.add(s.x_end % period)
    return sorted(points)


def best_offset(p: Packing, k: int) -> Fraction:
    """Smallest breakpoint shift maximizing the total line-hit count."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    _check_in_bounds(p.squares)
    best_a = Fraction(0)
    best_total = -1
    for a in offset_breakpoints(p, k):
        total = sum(_hits(s.x, s.side, k, a) for s in p.squares)
        if total > best_total:
            best_a, best_total = a, total
    return best_a


def average_crossings(p: Packing, k: int) -> Fraction:
    """Exact mean of the total line-hit count over all shifts in [0, 1/k).

    Computed from the breakpoint cells; for any in-bounds squares this
    equals k times the total side length.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    _check_in_bounds(p.squares)
    points = offset_breakpoints(p, k)
    period = Fraction(1, k)
    acc = Fraction(0)
    for idx, a in enumerate(points):
        width = (points[idx + 1] if idx + 1 < len(points) else period) - a
        total = sum(_hits(s.x, s.side, k, a) for s in p.squares)
        acc += total * width
    return acc / period


@dataclass(frozen=True)
class SweepChecks:
    """Recorded outcomes of the per-square and aggregate inequalities."""

    zero_hit_sides: bool       # m_i = 0  =>  d_i <= 1/k
    single_hit_lengths: bool   # m_i = 1  =>  d_i equals its line-segment total
    multi_hit_bounds: bool     # m_i >= 2 =>  (m_i-1)/k <= d_i <= segtotal - (m_i-1)/k
    hit_surplus: bool          # sum m_i >= n  =>  #(m=0) <= sum over m>=2 of (m_i - 1)
    chain: bool                # total side length <= certified bound


@dataclass(frozen=True)
class SweepTranscript:
    """Full record of the line-capacity argument at a fixed shift."""

    k: int
    a: Fraction
    m: tuple[int, ...]
    class_a: tuple[int, ...]               # m_i = 0
    class_b: tuple[int, ...]               # m_i = 1
    class_c: tuple[int, ...]               # m_i >= 2
    mu: tuple[tuple[Fraction, ...], ...]   # segment length of square i on line j
    line_loads: tuple[Fraction, ...]
    chain_lhs: Fraction
    chain_bound: Fraction
    checks: SweepChecks


def build_transcript(p: Packing, k: int, a: Fraction) -> SweepTranscript:
    """Evaluate the whole inequality chain at shift ``a`` and record it."""
    _check_offset(k, a)
    _check_in_bounds(p.squares)
    n = len(p.squares)
    inv_k = Fraction(1, k)

    m = [_hits(s.x, s.side, k, a) for s in p.squares]
    class_a = tuple(i for i in range(n) if m[i] == 0)
    class_b = tuple(i for i in range(n) if m[i] == 1)
    class_c = tuple(i for i in range(n) if m[i] >= 2)

    mu = []
    for s in p.squares:
        row = []
        for j in range(k):
            line_x = a + Fraction(j, k)
            row.append(s.side if s.x <= line_x < s.x_end else Fraction(0))
        mu.append(tuple(row))
    line_loads = tuple(
        sum((mu[i][j] for i in range(n)), Fraction(0)) for j in range(k)
    )

    surplus = sum(m[i] - 1 for i in class_c)
    seg_total = sum((s for row in mu for s in row), Fraction(0))
    chain_lhs = sum((s.side for s in p.squares), Fraction(0))
    chain_bound = inv_k * (len(class_a) - surplus) + seg_total

    seg = [sum(row, Fraction(0)) for row in mu]
    checks = SweepChecks(
        zero_hit_sides=all(p.squares[i].side <= inv_k for i in class_a),
        single_hit_lengths=all(p.squares[i].side == seg[i] for i in class_b),
        multi_hit_bounds=all(
            Fraction(m[i] - 1, k) <= p.squares[i].side
            and p.squares[i].side <= seg[i] - Fraction(m[i] - 1, k)
            for i in class_c
        ),
        hit_surplus=(sum(m) < n) or (len(class_a) <= surplus),
        chain=chain_lhs <= chain_bound,
    )
    return SweepTranscript(
        k=k,
        a=a,
        m=tuple(m),
        class_a=class_a,
        class_b=class_b,
        class_c=class_c,
        mu=tuple(mu),
        line_loads=line_loads,
        chain_lhs=chain_lhs,
        chain_bound=chain_bound,
        checks=checks,
    )


def refute_sweep(squares: Sequence[Square], k: int) -> OverlapWitness:
    """Extract an overlap witness from an overfull set of k^2 + 1 squares.

    Requires exactly k^2 + 1 in-bounds squares with total side length > k.
    Some shift then hits >= k^2 + 1 square/line incidences, forcing a line
    whose carried segment length exceeds 1; two of its segments overlap.
    Returns the lexicographically smallest overlapping pair on the first
    such line, witnessed at the midpoint of their common sub-segment.
    """
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    n = k * k + 1
    if len(squares) != n:
        raise PreconditionError(
            f"expected {n} squares for k = {k}, got {len(squares)}"
        )
    for i, s in enumerate(squares):
        if not s.in_unit_square():
            raise PreconditionError(f"square {i} is not inside the unit square")
    total = sum((s.side for s in squares), Fraction(0))
    if total <= k:
        raise PreconditionError(
            f"total side length {total} does not exceed {k}; nothing to refute"
        )

    p = Packing(tuple(squares))
    chosen_a = None
    for a in offset_breakpoints(p, k):
        if sum(_hits(s.x, s.side, k, a) for s in squares) >= n:
            chosen_a = a
            break
    if chosen_a is None:
        raise RuntimeError("no shift reaches the incidence threshold; logic error")

    for j in range(k):
        line_x = chosen_a + Fraction(j, k)
        members = [i for i, s in enumerate(squares) if s.x <= line_x < s.x_end]
        load = sum((squares[i].side for i in members), Fraction(0))
        if load <= 1:
            continue
        for ai, i in enumerate(members):
            for i2 in members[ai + 1:]:
                lo = max(squares[i].y, squares[i2].y)
                hi = min(squares[i].y_end, squares[i2].y_end)
                if lo < hi:
                    point = (line_x, (lo + hi) / 2)
                    witness = OverlapWitness(
                        point=point, first=min(i, i2), second=max(i, i2),
                        engine="sweep",
                    )
                    if not (
                        squares[witness.first].contains(*point)
                        and squares[witness.second].contains(*point)
                    ):
                        raise RuntimeError("witness membership failed; logic error")
                    return witness
    raise RuntimeError("no overloaded line found; logic error")
