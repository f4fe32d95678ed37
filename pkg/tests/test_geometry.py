import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sqpack.geometry import (
    InvalidPackingError,
    Packing,
    Square,
    is_tiling,
    square,
    squares_overlap,
    total_area,
    total_side_length,
    validate,
)
from sqpack.construct import construct_grid, construct_lshape, construct_split

from packgen import random_packing

F = Fraction


def rationals(max_den=20):
    return st.builds(
        F, st.integers(min_value=0, max_value=max_den), st.just(max_den)
    )


def squares_strategy():
    def build(num_x, num_y, num_s):
        den = 24
        side = F(max(num_s, 1), den)
        x = (1 - side) * F(num_x, den)
        y = (1 - side) * F(num_y, den)
        return Square(x, y, side)

    nums = st.integers(min_value=0, max_value=24)
    return st.builds(build, nums, nums, nums)


class TestSquaresOverlap:
    def test_edge_sharing_grid_cells_are_disjoint(self):
        assert not squares_overlap(square(0, 0, "1/2"), square("1/2", 0, "1/2"))

    def test_identical_squares_overlap(self):
        assert squares_overlap(square(0, 0, "3/5"), square(0, 0, "3/5"))

    def test_partial_overlap(self):
        # max(0, 2/5) = 2/5 < 3/5 = min(3/5, 9/10) on both axes
        assert squares_overlap(square(0, 0, "3/5"), square("2/5", 0, "1/2"))

    @given(squares_strategy(), squares_strategy())
    def test_symmetric(self, a, b):
        assert squares_overlap(a, b) == squares_overlap(b, a)

    @given(squares_strategy())
    def test_reflexive(self, a):
        assert squares_overlap(a, a)

    @given(squares_strategy(), squares_strategy())
    def test_half_open_matches_interior(self, a, b):
        # independent open-interior test: positive-length intersection on both axes
        ix = min(a.x_end, b.x_end) - max(a.x, b.x)
        iy = min(a.y_end, b.y_end) - max(a.y, b.y)
        assert squares_overlap(a, b) == (ix > 0 and iy > 0)


class TestValidate:
    def test_grid_is_valid(self):
        report = validate(construct_grid(2))
        assert report.is_valid
        assert report.violations == ()

    def test_overlap_reported_with_pair(self):
        p = Packing((square(0, 0, "3/5"), square("1/2", "1/2", "1/2")))
        report = validate(p)
        assert not report.is_valid
        assert [(v.kind, v.indices) for v in report.violations] == [("overlap", (0, 1))]

    def test_out_of_bounds(self):
        p = Packing((square("3/4", 0, "1/2"),))
        report = validate(p)
        assert [(v.kind, v.indices) for v in report.violations] == [
            ("out-of-bounds", (0,))
        ]

    def test_nonpositive_side(self):
        p = Packing((square(0, 0, 0),))
        report = validate(p)
        assert [v.kind for v in report.violations] == ["nonpositive-side"]

    def test_overlap_pairs_lexicographic(self):
        s = square(0, 0, "3/5")
        p = Packing((s, s, s))
        report = validate(p)
        assert [v.indices for v in report.violations] == [(0, 1), (0, 2), (1, 2)]

    def test_accepts_all_constructions(self):
        for p in (construct_grid(4), construct_split(3), construct_lshape(3, -2),
                  construct_lshape(4, 2)):
            assert validate(p).is_valid


class TestTotals:
    def test_grid_total(self):
        assert total_side_length(construct_grid(3)) == 3

    def test_split_total(self):
        p = construct_split(5)
        assert len(p) == 26
        assert total_side_length(p) == 5

    def test_empty_total(self):
        assert total_side_length(Packing(())) == 0

    def test_permutation_invariant(self):
        rng = random.Random(7)
        p = random_packing(rng, max_squares=40)
        shuffled = list(p.squares)
        rng.shuffle(shuffled)
        assert total_side_length(Packing(tuple(shuffled))) == total_side_length(p)

    def test_area_bound_on_random_packings(self):
        rng = random.Random(11)
        for _ in range(50):
            p = random_packing(rng, max_squares=64)
            assert validate(p).is_valid
            assert total_area(p) <= 1


class TestIsTiling:
    @pytest.mark.parametrize("k", [1, 2, 3, 5])
    def test_grid_is_tiling(self, k):
        assert is_tiling(construct_grid(k))

    def test_split_is_not_tiling(self):
        p = construct_split(2)
        assert not is_tiling(p)
        assert total_area(p) == F(7, 8)

    def test_lshape_is_not_tiling(self):
        p = construct_lshape(3, -1)
        assert not is_tiling(p)
        assert total_area(p) == F(8, 9)

    def test_invalid_input_raises(self):
        p = Packing((square(0, 0, "3/5"), square(0, 0, "3/5")))
        with pytest.raises(InvalidPackingError):
            is_tiling(p)
