import numpy as np
import pytest

from foursq.errors import UnknownFormError
from foursq.ternary import (CATALOG, DISJOINT_SIX, EXACT_FORMS, Membership,
                            TernaryForm, enumerate_ternary,
                            exception_membership, membership_array,
                            pairwise_disjoint, representable_sieve,
                            solve_ternary, verify_exception_catalog)

BOUND = 4000


def brute_representable(a, b, c, n):
    for x in range(int(n ** 0.5) + 1):
        if a * x * x > n:
            break
        for y in range(int(n ** 0.5) + 1):
            r = n - a * x * x - b * y * y
            if r < 0:
                break
            z, q = divmod(r, c)
            if q == 0 and int(z ** 0.5 + 0.5) ** 2 == z:
                return True
    return False


@pytest.mark.parametrize("form", sorted(CATALOG))
def test_catalog_matches_brute_force(form):
    rule = CATALOG[form]
    rep = representable_sieve(*form, BOUND)
    for n in range(BOUND + 1):
        m = exception_membership(TernaryForm(*form), n)
        if m is Membership.UNKNOWN:
            assert rule.one_sided or (rule.even_only and n % 2 == 1)
            continue
        if rule.one_sided:
            if m is Membership.NON_MEMBER:
                assert rep[n]
            continue
        assert (m is Membership.MEMBER) == (not rep[n]), (form, n)


def test_sieve_matches_pointwise_brute():
    rep = representable_sieve(1, 2, 6, 500)
    for n in range(501):
        assert bool(rep[n]) == brute_representable(1, 2, 6, n)


def test_known_members():
    assert exception_membership(TernaryForm(1, 1, 1), 7) is Membership.MEMBER
    assert exception_membership(TernaryForm(1, 1, 1), 28) is Membership.MEMBER
    assert exception_membership(TernaryForm(1, 2, 6), 5) is Membership.MEMBER
    assert exception_membership(TernaryForm(1, 2, 6), 6) is \
        Membership.NON_MEMBER
    assert exception_membership(TernaryForm(1, 1, 10), 3) is \
        Membership.UNKNOWN


def test_unknown_form_raises():
    with pytest.raises(UnknownFormError):
        exception_membership(TernaryForm(1, 7, 11), 10)


def test_verify_catalog_clean():
    for form in EXACT_FORMS:
        assert verify_exception_catalog(TernaryForm(*form), BOUND) == []


def test_disjoint_six():
    assert pairwise_disjoint(BOUND) == []
    assert len(DISJOINT_SIX) == 6


def test_solve_ternary_first_solution():
    sol = solve_ternary(1, 2, 6, 9)
    assert sol is not None
    x, y, z = sol
    assert x * x + 2 * y * y + 6 * z * z == 9
    assert solve_ternary(1, 1, 1, 7) is None


def test_enumerate_ternary_complete():
    found = set(enumerate_ternary(TernaryForm(1, 1, 2), 6, domain="N"))
    assert all(x * x + y * y + 2 * z * z == 6 for x, y, z in found)
    assert (2, 0, 1) in found


def test_membership_array_matches_scalar():
    form = TernaryForm(1, 2, 3)
    arr = membership_array(form, 600)
    for n in range(601):
        assert bool(arr[n]) == \
            (exception_membership(form, n) is Membership.MEMBER)
