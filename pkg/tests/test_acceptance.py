"""Acceptance gate: ten end-to-end criteria, one printed line each.

These are the binding checks for the package as a whole; the per-module
test files cover the fine-grained contracts.  Expect a few minutes of
runtime: two of the criteria sweep a million-value range and a full
enumeration oracle comparison.
"""

import json
import os

import numpy as np
import pytest

from foursq.constructive import all_families, batch_validate
from foursq.quad_enum import enumerate_four_squares
from foursq.scanner import ScanConfig, resume, scan, verify_hypothesis
from foursq.ternary import (EXACT_FORMS, TernaryForm, membership_array,
                            pairwise_disjoint, verify_exception_catalog)

HERE = os.path.dirname(__file__)


def _report(capsys, number, text):
    with capsys.disabled():
        print(f"criterion {number:2d}: PASS  ({text})")


def test_criterion_01_exception_catalog(capsys):
    assert len(EXACT_FORMS) == 9
    for form in EXACT_FORMS:
        mismatches = verify_exception_catalog(TernaryForm(*form), 10 ** 5)
        assert mismatches == [], (form, mismatches[:5])
    _report(capsys, 1, "closed-form exception sets match brute force to 1e5")


def test_criterion_02_disjointness(capsys):
    assert pairwise_disjoint(10 ** 6) == []
    _report(capsys, 2, "six exception sets pairwise disjoint to 1e6")


def test_criterion_03_biconditionals(capsys):
    bound = 10 ** 4
    sq = np.arange(int(bound ** 0.5) + 1) ** 2

    def reach(core_values):
        out = np.zeros(bound + 1, dtype=bool)
        for v in sorted(core_values):
            out[v + sq[sq <= bound - v]] = True
        return out

    # x + y = z over N: n = x^2 + y^2 + (x+y)^2 + w^2 = 2(x^2+xy+y^2) + w^2
    cores = set()
    x = 0
    while 2 * x * x <= bound:
        y = 0
        while 2 * (x * x + x * y + y * y) <= bound:
            cores.add(2 * (x * x + x * y + y * y))
            y += 1
        x += 1
    has_rep = reach(cores)
    member = membership_array(TernaryForm(1, 2, 6), bound)
    assert not np.any(has_rep != ~member)

    # x + y = 2z over Z: substituting x = z+t, y = z-t gives 3z^2+2t^2+w^2
    cores = set()
    a = 0
    while 3 * a * a <= bound:
        b = 0
        while 3 * a * a + 2 * b * b <= bound:
            cores.add(3 * a * a + 2 * b * b)
            b += 1
        a += 1
    has_rep = reach(cores)
    member = membership_array(TernaryForm(1, 2, 3), bound)
    assert not np.any(has_rep != ~member)
    _report(capsys, 3, "exception membership matches structured "
                       "representations to 1e4")


def test_criterion_04_constructive_soundness(capsys):
    with open(os.path.join(HERE, "data", "branch_baseline.json")) as fh:
        baseline = json.load(fh)
    fams = all_families()
    assert sorted(f.id for f in fams) == sorted(baseline)
    for fam in fams:
        coverage = {}
        failures = batch_validate(fam, 10 ** 4, coverage)
        assert failures == [], (fam.id, failures[:3])
        assert sorted(coverage) == baseline[fam.id], fam.id
    _report(capsys, 4, "all constructive families clean to 1e4, every "
                       "proof branch hit")


def test_criterion_05_identity_grids(capsys):
    for x in range(101):
        for y in range(101):
            z = x + y
            assert (x * y) ** 2 + (y * z) ** 2 + (z * x) ** 2 == \
                (x * x + x * y + y * y) ** 2
    for y in range(101):
        for z in range(101):
            x = abs(y - z)        # x + z = y or x + y = z
            assert x ** 4 + 8 * y * z * (y * y + z * z) == (y + z) ** 4
    for y in range(101):
        for z in range(101):
            x = abs(y - 2 * z)
            assert x ** 4 + 16 * y ** 3 * z + 64 * y * z ** 3 == \
                (y + 2 * z) ** 4
    for y in range(101):
        for z in range(101):
            x = y + z
            assert (x + 4 * y + 4 * z) ** 2 + \
                (9 * x + 3 * y + 3 * z) ** 2 == (13 * x) ** 2
    _report(capsys, 5, "four algebraic identities exact on 101x101 grids")


def test_criterion_06_desk_scale_135(capsys):
    report = scan(ScanConfig(("x + 3y + 5z ~ square [N]",),
                             0, 10 ** 6, 50000))
    assert report.counterexamples == []
    assert report.checked == 10 ** 6
    report2 = scan(ScanConfig(("3x + 5y + 6z ~ twice_square [N]",),
                              16, 10 ** 5, 20000))
    assert report2.counterexamples == []
    _report(capsys, 6, "1-3-5 clean on [0,1e6); twice-square variant clean "
                       "on [16,1e5)")


def test_criterion_07_known_counterexamples(capsys):
    r = scan(ScanConfig(("x + 7y ~ square [N]",), 0, 10 ** 5, 20000))
    assert r.counterexamples == [47]
    r = scan(ScanConfig(("x - y ~ cube [N]",), 0, 10 ** 4, 5000))
    assert r.counterexamples == [56, 3584]
    r = scan(ScanConfig(("3x - y ~ square [N]",), 0, 10 ** 4, 5000))
    assert all(n <= 3 for n in r.counterexamples)
    _report(capsys, 7, "counterexamples exactly {47}, {56, 3584}, "
                       "none above 3")


def test_criterion_08_hypothesis_sweeps(capsys):
    exceptions = verify_hypothesis("ramanujan_1_1_10", 10 ** 6)
    assert exceptions and max(exceptions) == 2719
    assert verify_hypothesis("containment_1_4", 10 ** 5) == []
    assert verify_hypothesis("thm13iii_form", 10 ** 4) == []
    _report(capsys, 8, "hypothesis sweeps match expected exception sets")


def test_criterion_09_determinism(tmp_path, capsys):
    config = ScanConfig(("x + 7y ~ square [N]",), 0, 3000, 500)
    solo = scan(config, str(tmp_path / "solo.ck"), workers=1)
    multi = scan(config, str(tmp_path / "multi.ck"), workers=3)
    interrupted = str(tmp_path / "int.ck")
    scan(config, interrupted, limit_chunks=3)
    resumed = resume(interrupted, config)
    assert solo.canonical_json() == multi.canonical_json() \
        == resumed.canonical_json()
    _report(capsys, 9, "byte-identical reports across workers and "
                       "interrupt-resume")


def _oracle(n, domains):
    def values(tag, budget):
        out, v = [], 0
        while v * v <= budget:
            if tag == "N":
                out.append(v)
            elif tag == "Z+":
                if v >= 1:
                    out.append(v)
            else:
                out.append(v)
                if v:
                    out.append(-v)
            v += 1
        return out

    def rec(i, budget, prefix):
        if i == 3:
            r = int(budget ** 0.5 + 0.5)
            if r * r != budget:
                return
            tag = domains[3]
            if tag == "N" or (tag == "Z+" and r >= 1):
                yield tuple(prefix) + (r,)
            elif tag == "Z":
                yield tuple(prefix) + (r,)
                if r:
                    yield tuple(prefix) + (-r,)
            return
        for v in values(domains[i], budget):
            yield from rec(i + 1, budget - v * v, prefix + [v])

    return list(rec(0, n, []))


def test_criterion_10_oracle_equivalence(capsys):
    domains = ("N", "N", "N", "N")
    for n in range(2001):
        ours = sorted(tuple(r) for r in enumerate_four_squares(n, domains))
        assert ours == sorted(_oracle(n, domains)), n
    _report(capsys, 10, "enumeration matches the recursive oracle to 2000")
