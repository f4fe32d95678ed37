import random
from fractions import Fraction
from math import ceil, floor

import pytest

from sqpack.construct import construct_grid, construct_split
from sqpack.geometry import Packing, PreconditionError, square, validate
from sqpack.lattice import (
    count_profile,
    find_offset,
    hit_positions,
    interval_hits,
    refute_lattice,
    stretch,
)

from packgen import overfull_instance, random_packing, random_square

F = Fraction


def brute_hits(interval, offset):
    """Independent oracle: enumerate integer translates directly."""
    a, b = interval
    return sum(1 for m in range(floor(a) - 2, ceil(b) + 2) if a <= m + offset < b)


class TestStretch:
    def test_half_cell(self):
        inst = stretch([square(0, 0, "1/2")], 2)
        assert inst.intervals_x == ((F(0), F(1)),)
        assert inst.intervals_y == ((F(0), F(1)),)
        assert inst.area == 4

    def test_split2_lengths(self):
        inst = stretch(list(construct_split(2).squares), 2)
        lengths = [b - a for a, b in inst.intervals_x]
        assert lengths == [1, 1, 1, F(1, 2), F(1, 2)]

    def test_middle_cell(self):
        inst = stretch([square("1/3", "1/3", "1/3")], 3)
        assert inst.intervals_x == ((F(1), F(2)),)
        assert inst.intervals_y == ((F(1), F(2)),)


class TestIntervalHits:
    def test_long_interval_at_zero(self):
        assert interval_hits((F(0), F(6, 5)), F(0)) == 2

    def test_long_interval_at_half(self):
        assert interval_hits((F(0), F(6, 5)), F(1, 2)) == 1

    def test_unit_interval_any_offset(self):
        for offset in (F(0), F(1, 3), F(9, 10)):
            assert interval_hits((F(1), F(2)), offset) == 1

    def test_matches_oracle(self):
        rng = random.Random(2)
        for _ in range(200):
            k = rng.randint(1, 5)
            s = random_square(rng)
            iv = (k * s.x, k * s.x_end)
            offset = F(rng.randint(0, 30), 31)
            assert interval_hits(iv, offset) == brute_hits(iv, offset)
            assert hit_positions(iv, offset) == sorted(
                m + offset
                for m in range(-1, 6)
                if iv[0] <= m + offset < iv[1]
            )


class TestCountProfile:
    def test_profile_totals_match_pointwise_counts(self):
        intervals = [(F(1, 2), F(1)), (F(0), F(1, 2)), (F(1, 4), F(3, 4))]
        profile = count_profile(intervals)
        for t, row in zip(profile.breakpoints, profile.values):
            assert list(row) == [brute_hits(iv, t) for iv in intervals]

    def test_find_offset_example(self):
        # brute force: totals are 1 on [0, 1/4) and 2 from 1/4 on
        intervals = [(F(1, 2), F(1)), (F(0), F(1, 2)), (F(1, 4), F(3, 4))]
        profile = count_profile(intervals)
        assert find_offset(profile, 2) == F(1, 4)

    def test_find_offset_pair(self):
        profile = count_profile([(F(0), F(3, 5)), (F(0), F(3, 5))])
        assert find_offset(profile, 2) == 0

    def test_find_offset_unit(self):
        profile = count_profile([(F(0), F(1))])
        assert find_offset(profile, 1) == 0

    def test_find_offset_failure(self):
        profile = count_profile([(F(0), F(1, 2))])
        with pytest.raises(PreconditionError):
            find_offset(profile, 2)

    def test_mean_total_is_summed_length(self):
        rng = random.Random(4)
        for _ in range(20):
            p = random_packing(rng, max_squares=20)
            k = rng.randint(1, 4)
            inst = stretch(list(p.squares), k)
            profile = count_profile(inst.intervals_x)
            assert profile.mean_total() == sum(
                b - a for a, b in inst.intervals_x
            )


class TestCountRange:
    def test_floor_ceil_and_axis_difference(self):
        rng = random.Random(6)
        for _ in range(100):
            k = rng.randint(1, 5)
            s = random_square(rng)
            length = k * s.side
            ix = (k * s.x, k * s.x_end)
            iy = (k * s.y, k * s.y_end)
            for _ in range(10):
                x0 = F(rng.randint(0, 40), 41)
                y0 = F(rng.randint(0, 40), 41)
                p = interval_hits(ix, x0)
                q = interval_hits(iy, y0)
                assert p in (floor(length), ceil(length))
                assert q in (floor(length), ceil(length))
                assert abs(p - q) <= 1

    def test_box_always_contains_k_squared_points(self):
        rng = random.Random(8)
        for _ in range(50):
            k = rng.randint(1, 6)
            x0 = F(rng.randint(0, 12), 13)
            y0 = F(rng.randint(0, 12), 13)
            box = (F(0), F(k))
            assert interval_hits(box, x0) * interval_hits(box, y0) == k * k

    def test_valid_packing_hits_at_most_capacity(self):
        # disjointness bound: sum of p_i * q_i never exceeds k^2
        rng = random.Random(10)
        for _ in range(20):
            p = random_packing(rng, max_squares=20)
            k = rng.randint(1, 3)
            inst = stretch(list(p.squares), k)
            for _ in range(8):
                x0 = F(rng.randint(0, 16), 17)
                y0 = F(rng.randint(0, 16), 17)
                total = sum(
                    interval_hits(ix, x0) * interval_hits(iy, y0)
                    for ix, iy in zip(inst.intervals_x, inst.intervals_y)
                )
                assert total <= k * k


class TestRefuteLattice:
    def test_duplicate_squares_k1(self):
        w = refute_lattice([square(0, 0, "3/5"), square(0, 0, "3/5")], 1)
        assert (w.first, w.second) == (0, 1)
        assert w.point == (F(0), F(0))
        assert w.engine == "lattice"

    def test_diagonal_overlap_k1(self):
        a = square(0, 0, "3/5")
        b = square("2/5", "2/5", "3/5")
        w = refute_lattice([a, b], 1)
        assert a.contains(*w.point) and b.contains(*w.point)
        assert F(2, 5) <= w.point[0] < F(3, 5)
        assert F(2, 5) <= w.point[1] < F(3, 5)

    def test_duplicated_grid_cell_k2(self):
        squares = list(construct_grid(2).squares) + [square(0, 0, "1/2")]
        w = refute_lattice(squares, 2)
        assert (w.first, w.second) == (0, 4)

    def test_preconditions(self):
        with pytest.raises(PreconditionError):
            refute_lattice([square(0, 0, "3/5")], 1)
        with pytest.raises(PreconditionError):
            refute_lattice([square(0, 0, "1/2"), square("1/2", 0, "1/2")], 1)
        with pytest.raises(PreconditionError):
            refute_lattice([square("3/4", 0, "1/2"), square(0, 0, "3/5")], 1)

    def test_witness_matches_validator(self):
        rng = random.Random(12)
        for _ in range(40):
            k = rng.randint(1, 3)
            squares = overfull_instance(rng, k)
            w = refute_lattice(squares, k)
            assert squares[w.first].contains(*w.point)
            assert squares[w.second].contains(*w.point)
            report = validate(Packing(tuple(squares)))
            overlap_pairs = {
                v.indices for v in report.violations if v.kind == "overlap"
            }
            assert (w.first, w.second) in overlap_pairs
