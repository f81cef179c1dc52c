"""Closed-form exception sets of ternary quadratic forms, plus brute force.

Ten forms carry a catalogued description of the n with no integer solution
of a x^2 + b y^2 + c z^2 = n.  Nine descriptions are exact; the (1, 4, 16)
entry is one-sided (a residue class guaranteed representable).  Brute-force
enumeration provides the independent oracle for cross-validation.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .arith import check_cap, isqrt, strip_fours
from .errors import UnknownFormError


@dataclass(frozen=True)
class TernaryForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for v in (self.a, self.b, self.c):
            if v < 1:
                raise ValueError("coefficients must be positive")
            check_cap(v, "coefficient")

    def coeffs(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def sorted_coeffs(self) -> Tuple[int, int, int]:
        return tuple(sorted(self.coeffs()))

    def __str__(self) -> str:
        return f"({self.a},{self.b},{self.c})"


@dataclass(frozen=True)
class FourAdic:
    """The template {4**k * (modulus*l + residue) : k, l in N}."""

    modulus: int
    residue: int

    def member(self, n: int) -> bool:
        if n < 1:
            return False
        return strip_fours(n).m % self.modulus == self.residue


@dataclass(frozen=True)
class Residue:
    """The template {n : n mod modulus in residues}."""

    modulus: int
    residues: Tuple[int, ...]

    def member(self, n: int) -> bool:
        return n % self.modulus in self.residues


@dataclass(frozen=True)
class ExceptionRule:
    form: TernaryForm
    four_adic: Tuple[FourAdic, ...] = ()
    residues: Tuple[Residue, ...] = ()
    even_only: bool = False       # rule valid only for even n
    one_sided: bool = False       # rule only certifies NON-membership

    def member(self, n: int) -> bool:
        return any(t.member(n) for t in self.four_adic) or \
            any(r.member(n) for r in self.residues)


class Membership(enum.Enum):
    MEMBER = "member"
    NON_MEMBER = "non-member"
    UNKNOWN = "unknown"


_F = TernaryForm

CATALOG: Dict[Tuple[int, int, int], ExceptionRule] = {
    (1, 1, 1): ExceptionRule(_F(1, 1, 1), four_adic=(FourAdic(8, 7),)),
    (1, 1, 2): ExceptionRule(_F(1, 1, 2), four_adic=(FourAdic(16, 14),)),
    (1, 2, 6): ExceptionRule(_F(1, 2, 6), four_adic=(FourAdic(8, 5),)),
    (2, 3, 6): ExceptionRule(_F(2, 3, 6), four_adic=(FourAdic(8, 7),),
                             residues=(Residue(3, (1,)),)),
    (1, 2, 3): ExceptionRule(_F(1, 2, 3), four_adic=(FourAdic(16, 10),)),
    (1, 3, 6): ExceptionRule(_F(1, 3, 6), four_adic=(FourAdic(16, 14),),
                             residues=(Residue(3, (2,)),)),
    (1, 5, 5): ExceptionRule(_F(1, 5, 5), four_adic=(FourAdic(8, 7),),
                             residues=(Residue(5, (2, 3)),)),
    (1, 1, 5): ExceptionRule(_F(1, 1, 5), four_adic=(FourAdic(8, 3),)),
    (1, 1, 10): ExceptionRule(_F(1, 1, 10), four_adic=(FourAdic(16, 6),),
                              even_only=True),
    # one-sided: q == 1 (mod 4) is guaranteed representable by x^2+4y^2+16z^2
    (1, 4, 16): ExceptionRule(_F(1, 4, 16), residues=(Residue(4, (1,)),),
                              one_sided=True),
}

#: Forms whose closed form is a complete description.
EXACT_FORMS: Tuple[Tuple[int, int, int], ...] = tuple(
    k for k, r in CATALOG.items() if not r.one_sided)


def catalog_rule(form: TernaryForm) -> ExceptionRule:
    rule = CATALOG.get(form.coeffs())
    if rule is None:
        raise UnknownFormError(f"no catalogued exception rule for {form}")
    return rule


def exception_membership(form: TernaryForm, n: int) -> Membership:
    """Membership of n in the exception set E(form), via the closed form.

    Exact rules answer MEMBER / NON_MEMBER.  The even-only rule answers
    UNKNOWN on odd n; the one-sided rule answers NON_MEMBER on its residue
    class and UNKNOWN elsewhere.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_cap(n)
    rule = catalog_rule(form)
    if rule.one_sided:
        return Membership.NON_MEMBER if rule.member(n) else Membership.UNKNOWN
    if rule.even_only and n % 2 != 0:
        return Membership.UNKNOWN
    return Membership.MEMBER if rule.member(n) else Membership.NON_MEMBER


def enumerate_ternary(form: TernaryForm, n: int, domain: str = "Z"
                      ) -> List[Tuple[int, int, int]]:
    """All (x, y, z) with a x^2 + b y^2 + c z^2 == n, sorted lexicographically.

    domain "N" restricts to nonnegative coordinates; "Z" expands signs.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    check_cap(n)
    a, b, c = form.coeffs()
    base: List[Tuple[int, int, int]] = []
    for x in range(isqrt(n // a) + 1):
        rx = n - a * x * x
        for y in range(isqrt(rx // b) + 1):
            ry = rx - b * y * y
            if ry % c:
                continue
            z = isqrt(ry // c)
            if c * z * z == ry:
                base.append((x, y, z))
    if domain == "N":
        return sorted(base)
    if domain != "Z":
        raise ValueError(f"unknown domain {domain!r}")
    out = set()
    for x, y, z in base:
        for sx in ((x, -x) if x else (x,)):
            for sy in ((y, -y) if y else (y,)):
                for sz in ((z, -z) if z else (z,)):
                    out.add((sx, sy, sz))
    return sorted(out)


def solve_ternary(a: int, b: int, c: int, n: int
                  ) -> Optional[Tuple[int, int, int]]:
    """First (x, y, z) in N^3 with a x^2 + b y^2 + c z^2 == n, lex ascending."""
    if n < 0:
        return None
    for x in range(isqrt(n // a) + 1):
        rx = n - a * x * x
        for y in range(isqrt(rx // b) + 1):
            ry = rx - b * y * y
            if ry % c:
                continue
            z = isqrt(ry // c)
            if c * z * z == ry:
                return (x, y, z)
    return None


# --------------------------------------------------------------------------
# Vectorized helpers (sieves)

def representable_sieve(a: int, b: int, c: int, bound: int) -> np.ndarray:
    """Boolean array r with r[n] == (n representable by a,b,c over Z), n <= bound."""
    mark = np.zeros(bound + 1, dtype=bool)
    xs = (np.arange(isqrt(bound // a) + 1, dtype=np.int64) ** 2) * a
    for z in range(isqrt(bound // c) + 1):
        base = c * z * z
        for y in range(isqrt((bound - base) // b) + 1):
            s = base + b * y * y
            vals = s + xs[xs <= bound - s]
            mark[vals] = True
    return mark


def stripped_core_array(bound: int) -> np.ndarray:
    """core[n] = n / 4**k with 4 no longer dividing the result (core[0] = 0)."""
    core = np.arange(bound + 1, dtype=np.int64)
    while True:
        div = (core % 4 == 0) & (core > 0)
        if not div.any():
            return core
        core[div] //= 4


def membership_array(form: TernaryForm, bound: int,
                     core: Optional[np.ndarray] = None) -> np.ndarray:
    """Vectorized closed-form membership for 0..bound (exact rules only)."""
    rule = catalog_rule(form)
    if rule.one_sided:
        raise UnknownFormError("one-sided rule has no exact membership array")
    if core is None:
        core = stripped_core_array(bound)
    n = np.arange(bound + 1, dtype=np.int64)
    m = np.zeros(bound + 1, dtype=bool)
    for t in rule.four_adic:
        m |= (core % t.modulus == t.residue)
    for r in rule.residues:
        sel = np.zeros(bound + 1, dtype=bool)
        for res in r.residues:
            sel |= (n % r.modulus == res)
        m |= sel
    m[0] = rule.member(0)
    if rule.even_only:
        m &= (n % 2 == 0)
    return m


def verify_exception_catalog(form: TernaryForm, bound: int) -> List[int]:
    """All n <= bound where the closed form disagrees with brute force."""
    check_cap(bound)
    rule = catalog_rule(form)
    rep = representable_sieve(*form.coeffs(), bound)
    mismatches: List[int] = []
    if rule.one_sided:
        # only the guaranteed-representable direction is checkable
        n = np.arange(bound + 1)
        bad = (~rep) & (n % 4 == 1)
        return [int(v) for v in n[bad]]
    closed = membership_array(form, bound)
    ns = np.arange(bound + 1)
    if rule.even_only:
        sel = ns % 2 == 0
        bad = sel & (closed != ~rep)
    else:
        bad = closed != ~rep
    mismatches = [int(v) for v in ns[bad]]
    return mismatches


#: The six sets whose pairwise disjointness is catalogued.
DISJOINT_SIX: Tuple[Tuple[int, int, int], ...] = (
    (1, 1, 1), (1, 1, 2), (1, 2, 3), (1, 2, 6), (1, 1, 5), (1, 1, 10))


def pairwise_disjoint(bound: int) -> List[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]:
    """Violations of pairwise disjointness of the six exception sets, n <= bound.

    Returns (n, form_a, form_b) triples; expected empty.
    """
    check_cap(bound)
    core = stripped_core_array(bound)
    arrays = [(f, membership_array(TernaryForm(*f), bound, core))
              for f in DISJOINT_SIX]
    out = []
    for i in range(len(arrays)):
        for j in range(i + 1, len(arrays)):
            fa, ma = arrays[i]
            fb, mb = arrays[j]
            both = np.nonzero(ma & mb)[0]
            out.extend((int(n), fa, fb) for n in both)
    return sorted(out)
