import pytest

from foursq.constraint import Representation, satisfies
from foursq.constructive import (all_families, batch_validate, construct,
                                 construct_thm12v, family_spec, n_min,
                                 parse_family)

BOUND = 600


def test_family_roster():
    fams = all_families()
    ids = [f.id for f in fams]
    assert len(ids) == len(set(ids))
    assert "t11:a=1,m=4" in ids
    assert "t12v" in ids


def test_parse_family_round_trip():
    for fam in all_families():
        assert parse_family(fam.id) == fam
    with pytest.raises(ValueError):
        parse_family("t99:q=3")


def test_known_decomposition_71():
    fam = parse_family("t11:a=1,m=4")
    rep, wit = construct(fam, 71)
    assert tuple(rep) == (1, 3, 5, 6)


def test_t12v_structure():
    for n in range(1, 400):
        k, x, y, z = construct_thm12v(n)
        assert 4 ** k * (1 + 4 * x * x + y * y) + z * z == n


@pytest.mark.parametrize("fam", all_families(), ids=lambda f: f.id)
def test_batch_validate_clean(fam):
    coverage = {}
    assert batch_validate(fam, BOUND, coverage) == []
    assert coverage


def test_results_satisfy_family_spec():
    for fam in all_families():
        spec = family_spec(fam)
        if spec is None:
            continue
        for n in range(n_min(fam), 120):
            values, wit = construct(fam, n)
            assert satisfies(Representation(*values), spec) is not None, \
                (fam.id, n)


def test_branch_coverage_within_small_bound():
    fam = parse_family("t12i:a=1")
    coverage = {}
    batch_validate(fam, BOUND, coverage)
    assert len(coverage) >= 3


def test_construct_rejects_below_minimum():
    fam = parse_family("t12v")
    with pytest.raises(Exception):
        construct(fam, 0)
