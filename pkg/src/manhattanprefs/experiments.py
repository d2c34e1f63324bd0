"""Exhaustive recognition scans over canonical profiles and the boundary
table harness.

Scan results are JSON lines keyed by canonical index, so runs stream,
shard by contiguous index ranges, and resume without re-solving anything.
Witnesses are written to a sibling directory only on request.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import random
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .constructive import embed_m_dim, embed_n_dim
from .geometry import parse_embedding, serialize_embedding, verify_embedding
from .profiles import (
    PreferenceProfile,
    ProfileSpec,
    count_canonical,
    enumerate_canonical,
    expand_spec,
    parse_profile,
    parse_spec,
)
from .recognizer import RecognitionOutcome, recognize_2d

DEFAULT_SCAN_BUDGET = 200_000


@dataclass(frozen=True)
class ScanRecord:
    index: int
    verdict: str
    nodes: int
    prunes: int
    millis: float
    witness: str | None = None  # path of the stored witness file

    def to_json(self) -> str:
        data = {
            "index": self.index,
            "verdict": self.verdict,
            "nodes": self.nodes,
            "prunes": self.prunes,
            "millis": round(self.millis, 3),
        }
        if self.witness is not None:
            data["witness"] = self.witness
        return json.dumps(data, sort_keys=True)

    @staticmethod
    def from_json(line: str) -> "ScanRecord":
        data = json.loads(line)
        return ScanRecord(
            index=data["index"],
            verdict=data["verdict"],
            nodes=data["nodes"],
            prunes=data["prunes"],
            millis=data["millis"],
            witness=data.get("witness"),
        )


@dataclass
class ScanSummary:
    n: int
    m: int
    total: int = 0
    feasible: int = 0
    infeasible: int = 0
    undecided: int = 0
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "total": self.total,
            "feasible": self.feasible,
            "infeasible": self.infeasible,
            "undecided": self.undecided,
            "seconds": round(self.seconds, 3),
        }


_worker_state: dict = {}


def _worker_init(n: int, m: int, budget: int | None) -> None:
    _worker_state["nm"] = (n, m)
    _worker_state["budget"] = budget


def _worker_solve(item: tuple[int, tuple[tuple[int, ...], ...]]) -> dict:
    index, orders = item
    n, m = _worker_state["nm"]
    p = PreferenceProfile(m, orders)
    out = recognize_2d(p, budget=_worker_state["budget"])
    rec = {
        "index": index,
        "verdict": out.verdict,
        "nodes": out.nodes,
        "prunes": out.prunes,
        "millis": out.millis,
    }
    if out.witness is not None:
        rec["witness_text"] = serialize_embedding(out.witness)
    return rec


def _completed_indices(out_path: Path) -> set[int]:
    done = set()
    if out_path.exists():
        with out_path.open() as fh:
            for line in fh:
                line = line.strip()
                if line:
                    done.add(json.loads(line)["index"])
    return done


def scan(
    n: int,
    m: int,
    shard: tuple[int, int] | None = None,
    out: str | Path | None = None,
    store_witnesses: bool = False,
    workers: int = 1,
    budget: int | None = DEFAULT_SCAN_BUDGET,
    progress: Callable[[ScanRecord], None] | None = None,
) -> ScanSummary:
    """Recognize every canonical (n, m) profile in the shard.

    Appends one JSON record per profile to `out` (when given) and skips
    indices already present there, so interrupted scans resume and
    re-running a shard is idempotent.  `shard` is a half-open canonical
    index range; None means the full range.
    """
    t0 = time.perf_counter()
    total_count = count_canonical(n, m)
    lo, hi = shard if shard is not None else (0, total_count)
    lo, hi = max(lo, 0), min(hi, total_count)
    summary = ScanSummary(n, m)

    out_path = Path(out) if out is not None else None
    done = _completed_indices(out_path) if out_path is not None else set()
    witness_dir: Path | None = None
    if store_witnesses and out_path is not None:
        witness_dir = out_path.parent / (out_path.stem + "_witnesses")
        witness_dir.mkdir(parents=True, exist_ok=True)

    todo = (
        (idx, p.orders)
        for idx, p in enumerate(itertools.islice(enumerate_canonical(n, m), lo, hi), start=lo)
        if idx not in done
    )
    skipped = sum(1 for idx in done if lo <= idx < hi)
    summary.total += skipped

    sink = out_path.open("a") if out_path is not None else None
    try:
        if workers > 1:
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(
                workers, initializer=_worker_init, initargs=(n, m, budget)
            ) as pool:
                for rec in pool.imap(_worker_solve, todo, chunksize=8):
                    _record(rec, summary, sink, witness_dir, store_witnesses, progress)
        else:
            _worker_init(n, m, budget)
            for item in todo:
                rec = _worker_solve(item)
                _record(rec, summary, sink, witness_dir, store_witnesses, progress)
    finally:
        if sink is not None:
            sink.close()
    summary.seconds = time.perf_counter() - t0
    return summary


def _record(
    rec: dict,
    summary: ScanSummary,
    sink,
    witness_dir: Path | None,
    store_witnesses: bool,
    progress: Callable[[ScanRecord], None] | None,
) -> None:
    witness_path: str | None = None
    if store_witnesses and witness_dir is not None and "witness_text" in rec:
        wfile = witness_dir / f"witness_{rec['index']:07d}.txt"
        wfile.write_text(rec["witness_text"])
        witness_path = str(wfile)
    record = ScanRecord(
        index=rec["index"],
        verdict=rec["verdict"],
        nodes=rec["nodes"],
        prunes=rec["prunes"],
        millis=rec["millis"],
        witness=witness_path,
    )
    summary.total += 1
    if record.verdict == "feasible":
        summary.feasible += 1
    elif record.verdict == "infeasible":
        summary.infeasible += 1
    else:
        summary.undecided += 1
    if sink is not None:
        sink.write(record.to_json() + "\n")
        sink.flush()
    if progress is not None:
        progress(record)


def read_records(path: str | Path) -> list[ScanRecord]:
    records = []
    with Path(path).open() as fh:
        for line in fh:
            line = line.strip()
            if line:
                records.append(ScanRecord.from_json(line))
    return records


def reverify_witnesses(n: int, m: int, records: Sequence[ScanRecord]) -> int:
    """Check every stored witness against its profile; returns the number
    checked, raising on the first failure."""
    by_index = {r.index: r for r in records if r.witness is not None}
    checked = 0
    for idx, p in enumerate(enumerate_canonical(n, m)):
        rec = by_index.get(idx)
        if rec is None:
            continue
        e = parse_embedding(Path(rec.witness).read_text())
        if verify_embedding(p, e, "l1") is not None:
            raise AssertionError(f"stored witness for index {idx} fails verification")
        checked += 1
    return checked


# Paper counterexample fixtures, as profile/spec text.
EXAMPLE_3_2 = "2 5\n1 2 3 4 5\n5 4 3 1 2"
EXAMPLE_3_4 = "6 3\n1 2 3\n1 3 2\n2 1 3\n2 3 1\n3 1 2\n3 2 1"
EXAMPLE_4_4 = "3 6\n1 2 3 4 5 6\n1 4 6 3 5 2\n6 5 2 3 1 4"
EXAMPLE_4_5_SPEC = "4 5\n{1,2} 3 4 5\n{1,2} 3 5 4\n1 4 5 3 2\n2 4 5 3 1"
EXAMPLE_4_7_SPEC = "5 4\n1 2 3 4\n1 4 3 2\n{2,4} 3 1\n3 2 1 4\n3 4 1 2"
BE_EXAMPLE = "3 3\n1 2 3\n3 2 1\n3 2 1"
EX_EXAMPLE_SPEC = "3 4\n{1,2} 3 4\n{1,4} 3 2\n{2,4} 3 1"


def paper_fixtures() -> dict[str, object]:
    return {
        "example_3_2": parse_profile(EXAMPLE_3_2),
        "example_3_4": parse_profile(EXAMPLE_3_4),
        "example_4_4": parse_profile(EXAMPLE_4_4),
        "example_4_5_spec": parse_spec(EXAMPLE_4_5_SPEC),
        "example_4_7_spec": parse_spec(EXAMPLE_4_7_SPEC),
        "be_example": parse_profile(BE_EXAMPLE),
        "ex_example_spec": parse_spec(EX_EXAMPLE_SPEC),
    }


@dataclass(frozen=True)
class FrontierCell:
    name: str
    expected: str
    actual: str

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "passed": self.passed,
        }


@dataclass
class FrontierReport:
    cells: list[FrontierCell] = field(default_factory=list)

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.cells)

    def to_dict(self) -> dict:
        return {"all_pass": self.all_pass, "cells": [c.to_dict() for c in self.cells]}


def _random_profile(rng: random.Random, n: int, m: int) -> PreferenceProfile:
    orders = tuple(
        tuple(rng.sample(range(1, m + 1), m)) for _ in range(n)
    )
    return PreferenceProfile(m, orders)


def frontier_check(
    recognize: Callable[[PreferenceProfile], RecognitionOutcome] = recognize_2d,
    scan_fn: Callable[[int, int], ScanSummary] | None = None,
    fixtures: dict[str, object] | None = None,
    samples: int = 5,
    seed: int = 20210505,
    scan_workers: int = 1,
) -> FrontierReport:
    """Verify the two-dimensional boundary table.

    Feasible side: sampled two-voter profiles and three-alternative
    profiles via their constructions, plus exhaustive canonical scans at
    (3, 5) and (4, 4).  Infeasible side: the three-voter/six-alternative
    profile and every expansion of the four-voter and five-voter patterns,
    decided by the recognizer.  Each cell records expected vs actual.
    """
    fx = fixtures if fixtures is not None else paper_fixtures()
    rng = random.Random(seed)
    report = FrontierReport()

    for m in range(2, 7):
        ok = True
        for _ in range(samples):
            p = _random_profile(rng, 2, m)
            if verify_embedding(p, embed_n_dim(p), "l1") is not None:
                ok = False
        report.cells.append(
            FrontierCell(f"n=2,m={m} two-voter construction", "consistent",
                         "consistent" if ok else "violation")
        )
    for n in range(1, 7):
        ok = True
        for _ in range(samples):
            p = _random_profile(rng, n, 3)
            if verify_embedding(p, embed_m_dim(p), "l1") is not None:
                ok = False
        report.cells.append(
            FrontierCell(f"n={n},m=3 hypercube construction", "consistent",
                         "consistent" if ok else "violation")
        )

    if scan_fn is None:
        scan_fn = lambda n, m: scan(n, m, workers=scan_workers)
    for n, m in ((3, 5), (4, 4)):
        summary = scan_fn(n, m)
        expected = f"{count_canonical(n, m)} feasible"
        actual = (
            f"{summary.feasible} feasible"
            if summary.total == count_canonical(n, m)
            and summary.infeasible == summary.undecided == 0
            else f"{summary.feasible} feasible / {summary.infeasible} infeasible / "
            f"{summary.undecided} undecided of {summary.total}"
        )
        report.cells.append(FrontierCell(f"exhaustive ({n},{m}) scan", expected, actual))

    report.cells.append(
        FrontierCell(
            "n=3,m=6 counterexample",
            "infeasible",
            recognize(fx["example_4_4"]).verdict,
        )
    )
    for label, key in (("n=4,m=5", "example_4_5_spec"), ("n=5,m=4", "example_4_7_spec")):
        for idx, p in enumerate(expand_spec(fx[key])):
            report.cells.append(
                FrontierCell(
                    f"{label} counterexample expansion {idx}",
                    "infeasible",
                    recognize(p).verdict,
                )
            )
    return report
