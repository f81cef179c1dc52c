"""Checkpointed exhaustive verification of constraint families over n ranges.

A scan decides every non-excluded n in [lo, hi): witness exists or certified
counterexample.  Compiled kernels carry the bulk of the work where the spec
shape allows; every kernel miss is re-verified by the generic enumerator
before it is reported.  Progress is checkpointed chunk by chunk to a plain
text file (temp file + atomic rename) so interruption loses at most the
in-flight chunks.
"""

from __future__ import annotations

import hashlib
import json
import os
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .arith import check_cap, isqrt, strip_fours
from .constraint import ConstraintSpec, PowerTarget, parse_constraint
from .errors import (CheckpointMismatch, CorruptCheckpoint, FourSquareError)
from .quad_enum import find_constrained
from .ternary import representable_sieve


@dataclass(frozen=True)
class ExclusionTemplate:
    """The set {base^(period·k + offset) · mult : k in N}."""

    base: int
    period: int
    offset: int
    mult: int
    text: str

    def member(self, n: int) -> bool:
        if n < 1:
            return False
        e = self.offset
        while True:
            v = self.base ** e * self.mult
            if v > n:
                return False
            if v == n:
                return True
            e += self.period


_EXCL_RE = re.compile(
    r"^\s*(\d+)\s*\^\s*\(\s*(\d+)\s*k\s*\+\s*(\d+)\s*\)\s*(?:\*\s*(\d+))?\s*$")


def parse_exclusion(text: str) -> ExclusionTemplate:
    m = _EXCL_RE.match(text)
    if not m:
        raise ValueError(f"bad exclusion template {text!r}; "
                         "expected like 2^(6k+3)*7")
    base, period, offset = int(m.group(1)), int(m.group(2)), int(m.group(3))
    mult = int(m.group(4) or 1)
    if base < 2 or period < 1:
        raise ValueError("exclusion base must be >= 2 and period >= 1")
    return ExclusionTemplate(base, period, offset, mult, text.strip())


@dataclass(frozen=True)
class ScanConfig:
    """A scan task: any of spec_texts satisfiable counts as a witness."""

    spec_texts: Tuple[str, ...]
    lo: int = 0
    hi: int = 0
    chunk: int = 1000
    exclusions: Optional[str] = None

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("lo must not exceed hi")
        if self.chunk < 1:
            raise ValueError("chunk must be positive")
        check_cap(self.hi)
        for text in self.spec_texts:
            parse_constraint(text)          # fail early on bad spec
        if self.exclusions is not None:
            parse_exclusion(self.exclusions)

    def digest(self) -> str:
        h = hashlib.sha256()
        for text in self.spec_texts:
            h.update(text.encode())
            h.update(b"\x00")
        h.update(f"{self.lo} {self.hi} {self.chunk} "
                 f"{self.exclusions or ''}".encode())
        return h.hexdigest()[:16]

    def chunk_count(self) -> int:
        span = self.hi - self.lo
        return (span + self.chunk - 1) // self.chunk

    def chunk_range(self, i: int) -> Tuple[int, int]:
        lo = self.lo + i * self.chunk
        return lo, min(lo + self.chunk, self.hi)


@dataclass
class ScanReport:
    spec: List[str]
    range: List[int]
    checked: int
    counterexamples: List[int]
    samples: List[dict]
    chunks: Dict[str, int]
    elapsed_ms: int = 0
    complete: bool = True

    def canonical_json(self) -> str:
        """Deterministic serialization: wall time is deliberately excluded
        so independent runs of the same scan compare byte for byte."""
        body = {"spec": self.spec, "range": self.range,
                "checked": self.checked,
                "counterexamples": self.counterexamples,
                "samples": self.samples, "chunks": self.chunks,
                "complete": self.complete}
        return json.dumps(body, sort_keys=True, separators=(",", ":"))

    def to_json(self) -> str:
        data = json.loads(self.canonical_json())
        data["elapsed_ms"] = self.elapsed_ms
        return json.dumps(data, sort_keys=True, separators=(",", ":"))


# --------------------------------------------------------------------------
# Kernel dispatch

def _kernel_plan(spec: ConstraintSpec):
    """A (callable(lo, hi) -> uint8 array) existence kernel, or None.

    Applicable to all-N, side-condition-free specs with a linear polynomial
    and a plain power-class target.
    """
    if not isinstance(spec.target, PowerTarget) or spec.side_conditions:
        return None
    if spec.domains != ("N", "N", "N", "N"):
        return None
    cls = spec.target.cls
    if cls.kind == "zero":
        return None
    lin = spec.poly.linear_coeffs()
    if lin is None:
        return None
    a, b, c, e, const = lin
    if const != 0:
        return None
    d, m = cls.scale, cls.exponent
    neg = cls.allows_negative_t()
    if e == 0 and c == 0:
        return lambda lo, hi: _kernels.scan_xy_only(lo, hi, a, b, d, m, neg)
    if e == 0 and c > 0 and a >= 0 and b >= 0 and not neg:
        return lambda lo, hi: _kernels.scan_solved_z(lo, hi, a, b, c, d, m)
    return lambda lo, hi: _kernels.scan_full(lo, hi, a, b, c, e, d, m, neg)


def _process_chunk(args) -> Tuple[int, List[int]]:
    """Worker: decide every non-excluded n in one chunk.

    Returns (chunk_index, counterexamples).  Pure function of its inputs,
    so chunk results merge independently of order and worker count.
    """
    index, lo, hi, spec_texts, excl_text = args
    specs = [parse_constraint(t) for t in spec_texts]
    excl = parse_exclusion(excl_text) if excl_text else None
    size = hi - lo
    ok = np.zeros(size, dtype=np.uint8)
    slow_specs = []
    for spec in specs:
        plan = _kernel_plan(spec)
        if plan is None:
            slow_specs.append(spec)
        else:
            ok |= plan(lo, hi)
    cex: List[int] = []
    for i in range(size):
        n = lo + i
        if excl is not None and excl.member(n):
            continue
        if ok[i]:
            continue
        if any(find_constrained(n, s) is not None for s in slow_specs):
            continue
        # full independent re-check before declaring a counterexample
        if any(find_constrained(n, s) is not None for s in specs):
            raise FourSquareError(
                f"kernel/search disagreement at n={n}")
        cex.append(n)
    return index, cex


# --------------------------------------------------------------------------
# Checkpoint persistence

def _write_checkpoint(path: str, config: ScanConfig,
                      done: Sequence[int], cex: Sequence[int]) -> None:
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w") as fh:
        fh.write(f"header {config.digest()} {config.lo} {config.hi} "
                 f"{config.chunk}\n")
        for i in sorted(done):
            fh.write(f"done {i}\n")
        for n in sorted(cex):
            fh.write(f"cex {n}\n")
    os.replace(tmp, path)


def _read_checkpoint(path: str) -> Tuple[str, Tuple[int, int, int],
                                         set, set]:
    done: set = set()
    cex: set = set()
    digest = None
    dims = None
    try:
        with open(path) as fh:
            for line in fh:
                parts = line.split()
                if not parts:
                    continue
                if parts[0] == "header" and len(parts) == 5:
                    digest = parts[1]
                    dims = (int(parts[2]), int(parts[3]), int(parts[4]))
                elif parts[0] == "done" and len(parts) == 2:
                    done.add(int(parts[1]))
                elif parts[0] == "cex" and len(parts) == 2:
                    cex.add(int(parts[1]))
                else:
                    raise CorruptCheckpoint(f"bad checkpoint line: {line!r}")
    except (OSError, ValueError) as exc:
        raise CorruptCheckpoint(f"cannot read checkpoint {path}: {exc}")
    if digest is None or dims is None:
        raise CorruptCheckpoint(f"checkpoint {path} lacks a header")
    return digest, dims, done, cex


def verified_prefix(config: ScanConfig, done: set) -> int:
    """Largest v with every n in [lo, v) decided."""
    v = config.lo
    for i in range(config.chunk_count()):
        if i not in done:
            break
        v = config.chunk_range(i)[1]
    return v


# --------------------------------------------------------------------------
# Scan / resume

def _decile_samples(config: ScanConfig, cex: set) -> List[dict]:
    """First witness per decile, recomputed deterministically."""
    specs = [parse_constraint(t) for t in config.spec_texts]
    excl = (parse_exclusion(config.exclusions)
            if config.exclusions else None)
    span = config.hi - config.lo
    samples: List[dict] = []
    for d in range(10):
        start = config.lo + span * d // 10
        stop = config.lo + span * (d + 1) // 10
        for n in range(start, stop):
            if n in cex or (excl is not None and excl.member(n)):
                continue
            for spec, text in zip(specs, config.spec_texts):
                found = find_constrained(n, spec)
                if found is not None:
                    rep, wit = found
                    samples.append({"n": n, "rep": list(rep),
                                    "spec": text, "witness": str(wit)})
                    break
            else:
                continue
            break
    return samples


def scan(config: ScanConfig, checkpoint_path: Optional[str] = None,
         workers: int = 1, limit_chunks: Optional[int] = None,
         progress: bool = False) -> ScanReport:
    """Decide all non-excluded n in the range; see module docstring.

    limit_chunks stops after that many newly processed chunks (simulating
    interruption); the checkpoint then allows resume to finish the job.
    """
    t0 = time.monotonic()
    done: set = set()
    cex: set = set()
    if checkpoint_path and os.path.exists(checkpoint_path):
        digest, dims, done, cex = _read_checkpoint(checkpoint_path)
        if digest != config.digest():
            raise CheckpointMismatch(
                f"checkpoint digest {digest} does not match configuration")
    total = config.chunk_count()
    pending = [i for i in range(total) if i not in done]
    if limit_chunks is not None:
        pending = pending[:limit_chunks]
    tasks = [(i, *config.chunk_range(i), config.spec_texts,
              config.exclusions) for i in pending]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for index, chunk_cex in pool.map(_process_chunk, tasks):
                done.add(index)
                cex.update(chunk_cex)
                if checkpoint_path:
                    _write_checkpoint(checkpoint_path, config, done, cex)
                if progress:
                    print(f"chunk {index + 1}/{total} done", file=sys.stderr)
    else:
        for task in tasks:
            index, chunk_cex = _process_chunk(task)
            done.add(index)
            cex.update(chunk_cex)
            if checkpoint_path:
                _write_checkpoint(checkpoint_path, config, done, cex)
            if progress:
                print(f"chunk {index + 1}/{total} done", file=sys.stderr)
    complete = len(done) == total
    excl = parse_exclusion(config.exclusions) if config.exclusions else None
    checked = 0
    for i in sorted(done):
        clo, chi = config.chunk_range(i)
        checked += chi - clo
        if excl is not None:
            checked -= sum(1 for n in range(clo, chi) if excl.member(n))
    samples = _decile_samples(config, cex) if complete else []
    return ScanReport(
        spec=list(config.spec_texts), range=[config.lo, config.hi],
        checked=checked, counterexamples=sorted(cex), samples=samples,
        chunks={"total": total, "done": len(done), "size": config.chunk},
        elapsed_ms=int((time.monotonic() - t0) * 1000), complete=complete)


def resume(checkpoint_path: str, config: ScanConfig,
           workers: int = 1, progress: bool = False) -> ScanReport:
    """Finish an interrupted scan; identical report to an uninterrupted run."""
    if not os.path.exists(checkpoint_path):
        raise CorruptCheckpoint(f"no checkpoint at {checkpoint_path}")
    digest, _, _, _ = _read_checkpoint(checkpoint_path)
    if digest != config.digest():
        raise CheckpointMismatch(
            f"checkpoint digest {digest} does not match configuration")
    return scan(config, checkpoint_path, workers=workers, progress=progress)


# --------------------------------------------------------------------------
# Hypothesis sweeps

def _two_form_sieve(a: int, b: int, bound: int) -> np.ndarray:
    """mark[v] == (v = a x² + b y² solvable), 0 <= v <= bound."""
    mark = np.zeros(bound + 1, dtype=bool)
    xs = (np.arange(isqrt(bound // a) + 1, dtype=np.int64) ** 2) * a
    for y in range(isqrt(bound // b) + 1):
        s = b * y * y
        vals = s + xs[xs <= bound - s]
        mark[vals] = True
    return mark


def verify_hypothesis(name: str, bound: int) -> List[int]:
    """Exceptions to a named numeric hypothesis, up to bound."""
    check_cap(bound)
    if name == "ramanujan_1_1_10":
        rep = representable_sieve(1, 1, 10, bound)
        ns = np.arange(bound + 1)
        bad = (ns % 2 == 1) & ~rep
        return [int(v) for v in ns[bad]]
    if name == "containment_1_4":
        rep = representable_sieve(1, 1, 13, bound)
        ns = np.arange(bound + 1)
        bad = (ns % 8 == 5) & ~rep
        return [int(v) for v in ns[bad]]
    if name == "thm13iii_form":
        # n = x² + 10y² + (2z² + 125 r⁴)/7 with r in 0..3, for n >= 1190
        # not divisible by 16
        if bound < 1190:
            return []
        two = _two_form_sieve(1, 10, bound)
        reach = np.zeros(bound + 1, dtype=bool)
        for r in range(4):
            t = 125 * r ** 4
            for z in range(isqrt(max(7 * bound - t, 0) // 2) + 1):
                v = 2 * z * z + t
                if v % 7:
                    continue
                m = v // 7
                if m > bound:
                    break
                reach[m:] |= two[:bound + 1 - m]
        out = []
        for n in range(1190, bound + 1):
            if n % 16 == 0:
                continue
            if not reach[n]:
                out.append(n)
        return out
    raise ValueError(f"unknown hypothesis {name!r}")
