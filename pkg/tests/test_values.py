from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from sqpack.values import OFFSET, PERFECT_SQUARE, decompose, g_value

F = Fraction


class TestDecompose:
    def test_perfect_square(self):
        d = decompose(9)
        assert d.kind == PERFECT_SQUARE
        assert d.k == 3
        assert d.c is None

    def test_one_more_than_square(self):
        d = decompose(10)
        assert (d.k, d.c) == (3, 0)

    def test_even_gap_uses_next_square(self):
        # 8 - 4 = 4 is even, 9 - 8 = 1 is odd
        d = decompose(8)
        assert (d.k, d.c) == (3, -1)

    def test_odd_gap_uses_lower_square(self):
        d = decompose(12)
        assert (d.k, d.c) == (3, 1)

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            decompose(0)

    @given(st.integers(min_value=1, max_value=100_000))
    def test_reconstruction(self, n):
        d = decompose(n)
        assert d.n == n
        if d.kind == OFFSET:
            assert -d.k < d.c < d.k

    def test_exact_for_huge_n(self):
        k = 10**40
        assert decompose(k * k) .k == k
        assert (decompose(k * k + 3).k, decompose(k * k + 3).c) == (k, 1)


class TestGValue:
    @pytest.mark.parametrize(
        "n,expected",
        [(8, F(8, 3)), (10, F(3)), (12, F(10, 3)), (1, F(1))],
    )
    def test_known_values(self, n, expected):
        assert g_value(n) == expected

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            g_value(0)

    @given(st.integers(min_value=1, max_value=5000))
    def test_square_bound(self, n):
        g = g_value(n)
        assert g * g <= n
        assert (g * g == n) == (decompose(n).c is None)

    def test_nondecreasing(self):
        previous = g_value(1)
        for n in range(2, 2000):
            current = g_value(n)
            assert current >= previous
            previous = current
