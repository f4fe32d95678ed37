"""Exact rational squares and packings in the unit square.

All geometry here is exact: coordinates and side lengths are
``fractions.Fraction`` values and no floating point is used.  A square
denotes the half-open region ``[x, x+side) x [y, y+side)``, so squares
that merely share an edge do not overlap and interior-disjointness
coincides with half-open-disjointness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


class InvalidPackingError(ValueError):
    """Raised when an operation requires a valid packing but got an invalid one."""


class PreconditionError(ValueError):
    """Raised when a refutation engine is called outside its contract."""


def _rat(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


@dataclass(frozen=True)
class Square:
    """Axis-parallel half-open square ``[x, x+side) x [y, y+side)``.

    The constructor does not enforce well-formedness; ``validate`` reports
    nonpositive sides and out-of-bounds squares as data.
    """

    x: Fraction
    y: Fraction
    side: Fraction

    @property
    def x_end(self) -> Fraction:
        return self.x + self.side

    @property
    def y_end(self) -> Fraction:
        return self.y + self.side

    def contains(self, px: Fraction, py: Fraction) -> bool:
        """Exact half-open membership test."""
        return self.x <= px < self.x_end and self.y <= py < self.y_end

    def in_unit_square(self) -> bool:
        """True iff the side is positive and the square fits in [0,1]^2."""
        return (
            self.side > 0
            and self.x >= 0
            and self.y >= 0
            and self.x_end <= 1
            and self.y_end <= 1
        )


def square(x: RationalLike, y: RationalLike, side: RationalLike) -> Square:
    """Convenience constructor coercing arguments to exact rationals."""
    return Square(_rat(x), _rat(y), _rat(side))


@dataclass(frozen=True)
class Packing:
    """An ordered collection of squares claimed to be pairwise disjoint."""

    squares: tuple[Square, ...]

    def __len__(self) -> int:
        return len(self.squares)

    def __iter__(self):
        return iter(self.squares)


def packing(squares: Iterable[Square]) -> Packing:
    return Packing(tuple(squares))


NONPOSITIVE_SIDE = "nonpositive-side"
OUT_OF_BOUNDS = "out-of-bounds"
OVERLAP = "overlap"


@dataclass(frozen=True)
class Violation:
    kind: str
    indices: tuple[int, ...]


@dataclass(frozen=True)
class ValidationReport:
    is_valid: bool
    violations: tuple[Violation, ...]


@dataclass(frozen=True)
class OverlapWitness:
    """A point lying in two distinct squares, proving non-disjointness.

    ``engine`` records which refutation argument produced it
    (``"sweep"`` or ``"lattice"``).
    """

    point: tuple[Fraction, Fraction]
    first: int
    second: int
    engine: str


def squares_overlap(a: Square, b: Square) -> bool:
    """True iff the half-open regions of ``a`` and ``b`` intersect."""
    return (
        max(a.x, b.x) < min(a.x_end, b.x_end)
        and max(a.y, b.y) < min(a.y_end, b.y_end)
    )


def overlapping_pairs(squares: Sequence[Square]) -> list[tuple[int, int]]:
    """All overlapping index pairs, sorted lexicographically.

    Uses an x-sorted sweep so grid-like packings are checked in roughly
    O(n * column) time instead of all n^2 pairs.
    """
    order = sorted(range(len(squares)), key=lambda i: (squares[i].x, i))
    pairs = []
    for pos, i in enumerate(order):
        a = squares[i]
        a_end = a.x_end
        for j in order[pos + 1:]:
            b = squares[j]
            if b.x >= a_end:
                break
            if max(a.y, b.y) < min(a.y_end, b.y_end) and b.x_end > b.x:
                lo, hi = (i, j) if i < j else (j, i)
                pairs.append((lo, hi))
    pairs.sort()
    return pairs


def validate(p: Packing) -> ValidationReport:
    """Report every nonpositive side, out-of-bounds square and overlapping pair."""
    violations: list[Violation] = []
    for i, s in enumerate(p.squares):
        if s.side <= 0:
            violations.append(Violation(NONPOSITIVE_SIDE, (i,)))
        elif s.x < 0 or s.y < 0 or s.x_end > 1 or s.y_end > 1:
            violations.append(Violation(OUT_OF_BOUNDS, (i,)))
    for pair in overlapping_pairs(p.squares):
        violations.append(Violation(OVERLAP, pair))
    return ValidationReport(is_valid=not violations, violations=tuple(violations))


def total_side_length(p: Packing) -> Fraction:
    """Exact sum of the side lengths."""
    return sum((s.side for s in p.squares), ZERO)


def total_area(p: Packing) -> Fraction:
    """Exact sum of the squares' areas."""
    return sum((s.side * s.side for s in p.squares), ZERO)


def is_tiling(p: Packing) -> bool:
    """True iff the valid packing ``p`` fills the unit square completely.

    For half-open disjoint squares this is equivalent to the areas summing
    to exactly 1.  Raises :class:`InvalidPackingError` on invalid input so
    "invalid" is never conflated with "not a tiling".
    """
    report = validate(p)
    if not report.is_valid:
        raise InvalidPackingError(
            f"is_tiling requires a valid packing; found {len(report.violations)} violation(s)"
        )
    return total_area(p) == 1
