"""Exact integer primitives: roots, 4-adic normalization, three-square tests.

Everything here is pure, deterministic and float-free.  Inputs are capped at
2**40 so that any fourth power of a coordinate still fits comfortably in a
64-bit signed word; exceeding the cap raises OverflowCapError instead of
silently producing huge Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import OverflowCapError

#: Hard input cap (coordinates stay below 2**20, fourth powers below 2**80
#: never arise because polynomial evaluation re-checks the coordinate bound).
CAP = 1 << 40

#: Coordinate magnitude bound for polynomial evaluation.
COORD_CAP = 1 << 20


def check_cap(n: int, what: str = "input") -> int:
    if abs(n) > CAP:
        raise OverflowCapError(f"{what} {n} exceeds the 2**40 arithmetic cap")
    return n


def isqrt(n: int) -> int:
    """Floor square root by integer-only Newton iteration.

    No floating point anywhere: the seed comes from the bit length, and a
    final correction step pins down the exact floor.
    """
    if n < 0:
        raise ValueError("isqrt of negative value")
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + 1) // 2)
    while True:
        y = (x + n // x) // 2
        if y >= x:
            break
        x = y
    # correction: Newton can land one above the floor
    while x * x > n:
        x -= 1
    return x


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def iroot(n: int, m: int) -> int:
    """Floor m-th root of n >= 0 (m >= 1), integer arithmetic only."""
    if n < 0:
        raise ValueError("iroot of negative value")
    if m == 1 or n < 2:
        return n
    x = 1 << ((n.bit_length() + m - 1) // m + 1)
    while True:
        y = ((m - 1) * x + n // x ** (m - 1)) // m
        if y >= x:
            break
        x = y
    while x ** m > n:
        x -= 1
    while (x + 1) ** m <= n:
        x += 1
    return x


def exact_root(v: int, m: int) -> Optional[int]:
    """Return t with t**m == v, or None.

    For odd m negative v yields a negative t; for even m negative v has no
    root.  t is unique up to sign for even m; the nonnegative t is returned.
    """
    if v < 0:
        if m % 2 == 0:
            return None
        t = iroot(-v, m)
        return -t if t ** m == -v else None
    t = iroot(v, m)
    return t if t ** m == v else None


@dataclass(frozen=True)
class FourKForm:
    """n = 4**k * m with 4 not dividing m."""

    k: int
    m: int

    def value(self) -> int:
        return 4 ** self.k * self.m


def strip_fours(n: int) -> FourKForm:
    if n < 1:
        raise ValueError("strip_fours requires n >= 1")
    k = 0
    while n % 4 == 0:
        n //= 4
        k += 1
    return FourKForm(k, n)


# --------------------------------------------------------------------------
# Power classes

_KINDS = ("zero", "square", "even_square", "twice_square", "cube",
          "nonneg_cube", "kth_power", "scaled_power")


@dataclass(frozen=True)
class PowerClass:
    """A target class of values d * t**m, with sign rules on t.

    kind selects the semantics; d and m are only meaningful for the scaled
    and k-th power kinds.  t_nonneg forces t >= 0 even for odd exponents
    (used by "nonnegative cube" style targets).
    """

    kind: str
    m: int = 2
    d: int = 1
    t_nonneg: bool = False

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown power class kind {self.kind!r}")
        if self.m < 1 or self.d < 1:
            raise ValueError("power class requires m >= 1 and d >= 1")

    @property
    def exponent(self) -> int:
        return {"zero": 1, "square": 2, "even_square": 2, "twice_square": 2,
                "cube": 3, "nonneg_cube": 3}.get(self.kind, self.m)

    @property
    def scale(self) -> int:
        if self.kind == "even_square":
            return 4  # (2s)**2 == 4 s**2
        if self.kind == "twice_square":
            return 2
        if self.kind == "scaled_power":
            return self.d
        return 1

    def allows_negative_t(self) -> bool:
        if self.t_nonneg:
            return False
        if self.kind in ("cube",):
            return True
        if self.kind in ("kth_power", "scaled_power"):
            return self.exponent % 2 == 1
        return False


ZERO = PowerClass("zero")
SQUARE = PowerClass("square")
EVEN_SQUARE = PowerClass("even_square")
TWICE_SQUARE = PowerClass("twice_square")
CUBE = PowerClass("cube")
NONNEG_CUBE = PowerClass("nonneg_cube")


def kth_power(m: int) -> PowerClass:
    if not 2 <= m <= 6:
        raise ValueError("kth power exponent must be in 2..6")
    return PowerClass("kth_power", m=m)


def scaled_power(d: int, m: int, t_nonneg: bool = False) -> PowerClass:
    return PowerClass("scaled_power", m=m, d=d, t_nonneg=t_nonneg)


def is_in_power_class(v: int, cls: PowerClass) -> Tuple[bool, Optional[int]]:
    """Decide v in the class; on success also return the canonical witness t.

    The canonical witness is the qualifying t of smallest magnitude, ties
    broken toward the nonnegative one.
    """
    if cls.kind == "zero":
        return (v == 0, 0 if v == 0 else None)
    if cls.kind == "even_square":
        if v < 0 or not is_square(v):
            return (False, None)
        t = isqrt(v)
        return (t % 2 == 0, t if t % 2 == 0 else None)
    d, m = cls.scale, cls.exponent
    if v % d != 0:
        return (False, None)
    q = v // d
    if q < 0 and not cls.allows_negative_t():
        return (False, None)
    t = exact_root(q, m)
    if t is None:
        return (False, None)
    return (True, t)


# --------------------------------------------------------------------------
# Three squares

def is_sum_of_three_squares(n: int) -> bool:
    """True iff n is not of the shape 4**k * (8l + 7)."""
    if n < 0:
        return False
    if n == 0:
        return True
    return strip_fours(n).m % 8 != 7


def three_square_decompose(n: int) -> Optional[Tuple[int, int, int]]:
    """Some (x, y, z) in N^3 with x >= y >= z and x^2+y^2+z^2 == n.

    Deterministic: the lexicographically largest x, then largest y.  Plain
    double loop; None when no decomposition exists.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_cap(n)
    if not is_sum_of_three_squares(n):
        return None
    for x in range(isqrt(n), -1, -1):
        rx = n - x * x
        ytop = min(x, isqrt(rx))
        for y in range(ytop, -1, -1):
            ry = rx - y * y
            z = isqrt(ry)
            if z * z == ry and z <= y:
                return (x, y, z)
    return None
