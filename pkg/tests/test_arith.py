import pytest
from hypothesis import given, strategies as st

from foursq.arith import (CAP, PowerClass, check_cap, exact_root, iroot,
                          is_in_power_class, is_square,
                          is_sum_of_three_squares, isqrt, kth_power,
                          scaled_power, strip_fours,
                          three_square_decompose)
from foursq.arith import (CUBE, EVEN_SQUARE, NONNEG_CUBE, SQUARE,
                          TWICE_SQUARE, ZERO)
from foursq.errors import OverflowCapError


def test_isqrt_small():
    assert [isqrt(n) for n in range(10)] == [0, 1, 1, 1, 2, 2, 2, 2, 2, 3]


@given(st.integers(min_value=0, max_value=CAP))
def test_isqrt_bracketing(n):
    r = isqrt(n)
    assert r * r <= n < (r + 1) * (r + 1)


@given(st.integers(min_value=0, max_value=1 << 20))
def test_is_square_agrees_with_isqrt(n):
    assert is_square(n) == (isqrt(n) ** 2 == n)


@given(st.integers(min_value=0, max_value=CAP),
       st.integers(min_value=2, max_value=6))
def test_iroot_bracketing(n, m):
    r = iroot(n, m)
    assert r ** m <= n < (r + 1) ** m


def test_exact_root():
    assert exact_root(64, 2) == 8
    assert exact_root(64, 3) == 4
    assert exact_root(63, 3) is None
    assert exact_root(-27, 3) == -3
    assert exact_root(-27, 2) is None
    assert exact_root(0, 5) == 0


def test_strip_fours():
    f = strip_fours(448)       # 448 = 4^3 * 7
    assert (f.k, f.m) == (3, 7)
    assert strip_fours(7).k == 0
    with pytest.raises(ValueError):
        strip_fours(0)


@given(st.integers(min_value=1, max_value=1 << 30))
def test_strip_fours_roundtrip(n):
    f = strip_fours(n)
    assert f.value() == n
    assert f.m % 4 != 0


def test_check_cap():
    check_cap(CAP)
    with pytest.raises(OverflowCapError):
        check_cap(CAP + 1)


class TestPowerClasses:
    def test_square(self):
        ok, t = is_in_power_class(49, SQUARE)
        assert ok and t == 7
        assert not is_in_power_class(50, SQUARE)[0]

    def test_even_square(self):
        # (2t)^2: membership value carries the even root
        ok, t = is_in_power_class(36, EVEN_SQUARE)
        assert ok and t == 6
        assert not is_in_power_class(4, EVEN_SQUARE)[0] or \
            is_in_power_class(4, EVEN_SQUARE)[1] == 2
        assert not is_in_power_class(9, EVEN_SQUARE)[0]

    def test_twice_square(self):
        assert is_in_power_class(18, TWICE_SQUARE) == (True, 3)
        assert not is_in_power_class(12, TWICE_SQUARE)[0]

    def test_cube_signs(self):
        assert is_in_power_class(-8, CUBE) == (True, -2)
        assert not is_in_power_class(-8, NONNEG_CUBE)[0]
        assert is_in_power_class(27, NONNEG_CUBE) == (True, 3)

    def test_zero(self):
        assert is_in_power_class(0, ZERO) == (True, 0)
        assert not is_in_power_class(1, ZERO)[0]

    def test_kth_power(self):
        assert is_in_power_class(81, kth_power(4)) == (True, 3)
        assert is_in_power_class(32, kth_power(5)) == (True, 2)
        assert not is_in_power_class(33, kth_power(5))[0]

    def test_scaled(self):
        cls = scaled_power(3, 2)
        assert is_in_power_class(12, cls) == (True, 2)
        assert not is_in_power_class(18, cls)[0]

    @given(st.integers(min_value=0, max_value=10 ** 9))
    def test_square_class_total(self, v):
        ok, t = is_in_power_class(v, SQUARE)
        if ok:
            assert t * t == v


def _three_square_brute(n):
    r = isqrt(n)
    for x in range(r, -1, -1):
        for y in range(isqrt(n - x * x), -1, -1):
            rem = n - x * x - y * y
            if y > x:
                continue
            z = isqrt(rem)
            if z * z == rem and z <= y:
                return True
    return False


@given(st.integers(min_value=0, max_value=5000))
def test_three_square_criterion(n):
    assert is_sum_of_three_squares(n) == _three_square_brute(n)


def test_three_square_decompose():
    assert three_square_decompose(70) == (6, 5, 3)
    assert three_square_decompose(7) is None
    x, y, z = three_square_decompose(2019)
    assert x * x + y * y + z * z == 2019 and x >= y >= z >= 0


@given(st.integers(min_value=0, max_value=20000))
def test_decompose_iff_criterion(n):
    dec = three_square_decompose(n)
    assert (dec is not None) == is_sum_of_three_squares(n)
    if dec is not None:
        x, y, z = dec
        assert x * x + y * y + z * z == n
