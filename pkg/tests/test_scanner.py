import json
import os

import pytest

from foursq.errors import CheckpointMismatch, CorruptCheckpoint
from foursq.scanner import (ExclusionTemplate, ScanConfig, parse_exclusion,
                            resume, scan, verify_hypothesis,
                            verified_prefix, _read_checkpoint)


CFG = ScanConfig(("x + 7y ~ square [N]",), 0, 1200, 300)


def test_exclusion_parsing():
    e = parse_exclusion("2^(6k+3)*7")
    assert (e.base, e.period, e.offset, e.mult) == (2, 6, 3, 7)
    assert e.member(56) and e.member(3584)
    assert not e.member(55) and not e.member(112)
    e2 = parse_exclusion("4^(2k+1)*7")
    assert e2.member(28) and e2.member(28 * 4 ** 2)
    assert not e2.member(7)
    with pytest.raises(ValueError):
        parse_exclusion("x^(2k+1)")


def test_scan_finds_counterexample():
    report = scan(CFG)
    assert report.counterexamples == [47]
    assert report.checked == 1200
    assert report.complete
    assert len(report.samples) == 10


def test_exclusions_reduce_checked():
    cfg = ScanConfig(("x - y ~ cube [N]",), 0, 4000, 1000,
                     exclusions="2^(6k+3)*7")
    report = scan(cfg)
    assert report.counterexamples == []
    assert report.checked == 3998      # 56 and 3584 excluded


def test_canonical_json_excludes_elapsed():
    report = scan(CFG)
    body = json.loads(report.canonical_json())
    assert "elapsed_ms" not in body
    assert "elapsed_ms" in json.loads(report.to_json())


def test_reports_byte_identical_across_workers(tmp_path):
    a = scan(CFG, str(tmp_path / "a.ck"), workers=1)
    b = scan(CFG, str(tmp_path / "b.ck"), workers=3)
    assert a.canonical_json() == b.canonical_json()


def test_interrupt_and_resume(tmp_path):
    path = str(tmp_path / "c.ck")
    partial = scan(CFG, path, limit_chunks=2)
    assert not partial.complete
    assert partial.samples == []
    digest, dims, done, _ = _read_checkpoint(path)
    assert digest == CFG.digest() and len(done) == 2
    assert verified_prefix(CFG, done) == 600
    finished = resume(path, CFG)
    assert finished.canonical_json() == scan(CFG).canonical_json()


def test_resume_rejects_wrong_config(tmp_path):
    path = str(tmp_path / "d.ck")
    scan(CFG, path, limit_chunks=1)
    other = ScanConfig(("x + 7y ~ square [N]",), 0, 1200, 400)
    with pytest.raises(CheckpointMismatch):
        resume(path, other)


def test_corrupt_checkpoint(tmp_path):
    path = tmp_path / "e.ck"
    path.write_text("header only-half\n")
    with pytest.raises(CorruptCheckpoint):
        _read_checkpoint(str(path))
    path.write_text("done 3\n")
    with pytest.raises(CorruptCheckpoint):
        _read_checkpoint(str(path))
    with pytest.raises(CorruptCheckpoint):
        resume(str(tmp_path / "missing.ck"), CFG)


def test_checkpoint_atomicity(tmp_path):
    path = str(tmp_path / "f.ck")
    scan(CFG, path)
    assert not [f for f in os.listdir(tmp_path) if ".tmp." in f]


def test_multi_spec_any_semantics():
    cfg = ScanConfig(("x*y + 2z*w ~ square [N]",
                      "x*y - 2z*w ~ square [N]"), 0, 300, 100)
    report = scan(cfg)
    assert report.counterexamples == []


def test_config_validation():
    with pytest.raises(ValueError):
        ScanConfig(("x ~ square [N]",), 10, 5, 1)
    with pytest.raises(Exception):
        ScanConfig(("x +* y ~ square [N]",), 0, 10, 5)


class TestHypotheses:
    def test_ramanujan(self):
        exc = verify_hypothesis("ramanujan_1_1_10", 10 ** 5)
        assert max(exc) == 2719
        assert 3 in exc

    def test_containment(self):
        assert verify_hypothesis("containment_1_4", 30000) == []

    def test_thm13iii(self):
        assert verify_hypothesis("thm13iii_form", 5000) == []

    def test_unknown_name(self):
        with pytest.raises(ValueError):
            verify_hypothesis("nope", 10)
