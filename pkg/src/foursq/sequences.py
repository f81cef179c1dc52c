"""Counting-function sequences over constraint specs, with b-file emission.

a(n) counts the representations of n satisfying a spec, under a per-sequence
deduplication convention.  Definitions live in a bundled line-oriented
catalog (`A<number> <spec> <dedup> <offset>`), so adding a sequence is a
data edit.  Most catalog conventions are inferred, not confirmed; entries
stay flagged unverified until someone compares them against the published
values, and nothing here asserts equality with external data.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources
from typing import Dict, List, TextIO, Tuple

from .arith import check_cap
from .constraint import ConstraintSpec, parse_constraint
from .errors import NonContiguousRows
from .quad_enum import DedupRule, count_constrained


@dataclass(frozen=True)
class SequenceDef:
    spec: ConstraintSpec
    dedup: DedupRule
    offset: int
    text: str = ""
    verified: bool = False


def generate(seq: SequenceDef, lo: int, hi: int) -> List[Tuple[int, int]]:
    """Exact values [(n, a(n)) for n in [lo, hi)]."""
    if lo < seq.offset:
        raise ValueError(f"lo={lo} precedes the sequence offset {seq.offset}")
    check_cap(hi)
    return [(n, count_constrained(n, seq.spec, seq.dedup))
            for n in range(lo, hi)]


def emit_bfile(rows: List[Tuple[int, int]], sink: TextIO) -> int:
    """Write `<n> <a(n)>` lines; returns the byte count written."""
    total = 0
    prev = None
    for n, value in rows:
        if prev is not None and n != prev + 1:
            raise NonContiguousRows(f"row {n} follows row {prev}")
        prev = n
        line = f"{n} {value}\n"
        sink.write(line)
        total += len(line.encode())
    return total


_LINE_RE = re.compile(r"^(A\d{6})\s+(.+?)\s+(ordered|unordered|canonical)"
                      r"\s+(\d+)\s*$")


def parse_catalog_line(line: str) -> Tuple[str, SequenceDef]:
    body, _, comment = line.partition("#")
    m = _LINE_RE.match(body.strip())
    if not m:
        raise ValueError(f"bad catalog line: {line!r}")
    number, text, dedup, offset = m.groups()
    return number, SequenceDef(
        spec=parse_constraint(text), dedup=DedupRule(dedup),
        offset=int(offset), text=text,
        verified="verified" in comment and "unverified" not in comment)


def load_catalog() -> Dict[str, SequenceDef]:
    raw = (resources.files("foursq") / "data" /
           "sequence_catalog.txt").read_text()
    catalog: Dict[str, SequenceDef] = {}
    for line in raw.splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        number, seq = parse_catalog_line(line)
        if number in catalog:
            raise ValueError(f"duplicate catalog entry {number}")
        catalog[number] = seq
    return catalog
