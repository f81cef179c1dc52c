import pytest

from foursq.constraint import parse_constraint
from foursq.families import FAMILIES, get_family, list_families
from foursq.quad_enum import find_constrained
from foursq.scanner import parse_exclusion


def test_catalog_is_well_formed():
    assert len(FAMILIES) > 200
    for name, fam in FAMILIES.items():
        assert fam.name == name
        for text in fam.specs:
            parse_constraint(text)
        if fam.exclusions:
            parse_exclusion(fam.exclusions)


def test_lookup():
    fam = get_family("square-135")
    assert fam.specs == ("x + 3y + 5z ~ square [N]",)
    assert "square-135" in list_families()
    with pytest.raises(KeyError):
        get_family("no-such-family")


def test_known_counterexample_metadata():
    assert get_family("square-sum-x-7y").known_cex == (47,)
    assert get_family("cube-diff-x-y").exclusions == "2^(6k+3)*7"
    assert get_family("twice-square-356").lo == 16
    assert get_family("square-diff-3x-y").lo == 4


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_families_hold_on_initial_range(name):
    fam = FAMILIES[name]
    specs = [parse_constraint(t) for t in fam.specs]
    excl = parse_exclusion(fam.exclusions) if fam.exclusions else None
    for n in range(fam.lo, fam.lo + 25):
        if n in fam.known_cex:
            assert all(find_constrained(n, s) is None for s in specs)
            continue
        if excl is not None and excl.member(n):
            continue
        assert any(find_constrained(n, s) is not None for s in specs), n
