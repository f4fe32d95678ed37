"""Lattice-point counting refutation of overfull square packings.

Scale an instance of k^2 + 1 squares by k so it sits in [0, k)^2, which
contains exactly k^2 points of any translated integer lattice
Z^2 + (x0, y0) with (x0, y0) in [0, 1)^2.  For each square, count the
lattice columns p_i(x0) and rows q_i(y0) hitting its half-open projections;
both counts are the floor or ceiling of the scaled side, so they differ by
at most 1.  When the total side length exceeds k, offsets exist making both
count totals reach k^2 + 1, which forces the per-square lattice hits
(p_i * q_i points each) to exceed the k^2 available points: some lattice
point lies in two squares, and that point is the overlap witness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Sequence

from .geometry import OverlapWitness, PreconditionError, Square

Interval = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class StretchedInstance:
    """A square set scaled by k into the half-open box [0, k)^2."""

    k: int
    area: int  # k^2, the lattice-point capacity of the box
    intervals_x: tuple[Interval, ...]
    intervals_y: tuple[Interval, ...]


def stretch(squares: Sequence[Square], k: int) -> StretchedInstance:
    """Scale every square's projections by k on both axes, exactly."""
    if k < 1:
        raise ValueError(f"k must be a positive integer, got {k}")
    for i, s in enumerate(squares):
        if not s.in_unit_square():
            raise ValueError(f"square {i} is not inside the unit square")
    xs = tuple((k * s.x, k * s.x_end) for s in squares)
    ys = tuple((k * s.y, k * s.y_end) for s in squares)
    return StretchedInstance(k=k, area=k * k, intervals_x=xs, intervals_y=ys)


def interval_hits(interval: Interval, offset: Fraction) -> int:
    """Number of points of Z + offset inside the half-open interval."""
    a, b = interval
    return ceil(b - offset) - ceil(a - offset)


def hit_positions(interval: Interval, offset: Fraction) -> list[Fraction]:
    """The points of Z + offset inside the half-open interval, ascending."""
    a, b = interval
    return [m + offset for m in range(ceil(a - offset), ceil(b - offset))]


@dataclass(frozen=True)
class CountProfile:
    """Per-square lattice hit counts as a step function of the offset.

    ``values[t][i]`` is the count for interval i on the offset cell
    starting at ``breakpoints[t]``; counts are right-continuous and
    constant on each cell.
    """

    breakpoints: tuple[Fraction, ...]
    values: tuple[tuple[int, ...], ...]
    totals: tuple[int, ...]

    def mean_total(self) -> Fraction:
        """Exact offset-averaged total count; equals the summed lengths."""
        acc = Fraction(0)
        for idx, t in enumerate(self.breakpoints):
            width = (
                self.breakpoints[idx + 1]
                if idx + 1 < len(self.breakpoints)
                else Fraction(1)
            ) - t
            acc += self.totals[idx] * width
        return acc


def count_profile(intervals: Sequence[Interval]) -> CountProfile:
    """Evaluate all per-interval counts on each cell of the offset circle.

    Breakpoints are the fractional parts of the interval endpoints
    (plus 0); between consecutive breakpoints every count is constant.
    """
    points = {Fraction(0)}
    for a, b in intervals:
        points.add(a - floor(a))
        points.add(b - floor(b))
    breakpoints = tuple(sorted(points))
    values = []
    totals = []
    for t in breakpoints:
        row = tuple(interval_hits(iv, t) for iv in intervals)
        values.append(row)
        totals.append(sum(row))
    return CountProfile(
        breakpoints=breakpoints, values=tuple(values), totals=tuple(totals)
    )


def find_offset(profile: CountProfile, threshold: int) -> Fraction:
    """Smallest breakpoint whose total count reaches the threshold."""
    for t, total in zip(profile.breakpoints, profile.totals):
        if total >= threshold:
            return t
    raise PreconditionError(
        f"no offset reaches total {threshold}; "
        "the summed interval lengths cannot exceed the required mean"
    )


def refute_lattice(squares: Sequence[Square], k: int) -> OverlapWitness:
    """Extract an overlap witness from an overfull set of k^2 + 1 squares.

    Requires exactly k^2 + 1 in-bounds squares with total side length > k.
    Returns the doubly covered lattice point, mapped back to unit
    coordinates, for the lexicographically smallest square pair.
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

    inst = stretch(squares, k)
    threshold = inst.area + 1
    x0 = find_offset(count_profile(inst.intervals_x), threshold)
    y0 = find_offset(count_profile(inst.intervals_y), threshold)

    for ix, iy in zip(inst.intervals_x, inst.intervals_y):
        if abs(interval_hits(ix, x0) - interval_hits(iy, y0)) > 1:
            raise RuntimeError("column/row counts differ by more than 1; logic error")

    owner: dict[tuple[Fraction, Fraction], int] = {}
    best: tuple[int, int, tuple[Fraction, Fraction]] | None = None
    for i, (ix, iy) in enumerate(zip(inst.intervals_x, inst.intervals_y)):
        for px in hit_positions(ix, x0):
            for py in hit_positions(iy, y0):
                prev = owner.setdefault((px, py), i)
                if prev != i:
                    candidate = (prev, i, (px, py))
                    if best is None or candidate < best:
                        best = candidate
    if best is None:
        raise RuntimeError("pigeonhole produced no duplicate point; logic error")

    first, second, (px, py) = best
    point = (px / k, py / k)
    witness = OverlapWitness(point=point, first=first, second=second, engine="lattice")
    if not (squares[first].contains(*point) and squares[second].contains(*point)):
        raise RuntimeError("witness membership failed; logic error")
    return witness
