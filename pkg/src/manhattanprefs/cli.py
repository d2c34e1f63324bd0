"""Command-line interface.

Exit codes: 0 success or feasible; 2 usage or input error; 3 negative
verdict (violation found / infeasible); 4 undecided (budget exhausted);
5 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

from . import experiments, render
from .constructive import embed_m_dim, embed_n_dim
from .geometry import (
    GeometryError,
    parse_embedding,
    serialize_embedding,
    verify_embedding,
)
from .obstructions import find_be, find_ex, three_voter_obstruction
from .profiles import ProfileError, parse_profile, parse_spec
from .recognizer import InternalVerificationError, recognize_2d

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NEGATIVE = 3
EXIT_UNDECIDED = 4
EXIT_INTERNAL = 5


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _write_or_print(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_parse_check(args: argparse.Namespace) -> int:
    text = _read(args.profile)
    if args.spec:
        s = parse_spec(text)
        print(f"ok: spec with {s.n} voters, {s.m} alternatives, "
              f"{s.expansion_count()} expansions")
    else:
        p = parse_profile(text)
        print(f"ok: profile with {p.n} voters, {p.m} alternatives")
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    p = parse_profile(_read(args.profile))
    e = parse_embedding(_read(args.embedding))
    violation = verify_embedding(p, e, args.metric)
    if violation is None:
        print("consistent")
        return EXIT_OK
    print(
        f"violation: voter {violation.voter} prefers {violation.preferred} "
        f"over {violation.other} but it is not strictly closer"
    )
    return EXIT_NEGATIVE


def _cmd_embed(args: argparse.Namespace) -> int:
    p = parse_profile(_read(args.profile))
    if args.method == "n-dim":
        e = embed_n_dim(p)
    else:
        e = embed_m_dim(p)
    _write_or_print(serialize_embedding(e), args.out)
    return EXIT_OK


def _cmd_detect(args: argparse.Namespace) -> int:
    p = parse_profile(_read(args.profile))
    if p.n < 3:
        print(json.dumps({"kind": "note", "message": "need at least 3 voters"}))
        return EXIT_OK
    triples = []
    if args.triple:
        triples.append(tuple(int(x) for x in args.triple.split(",")))
    else:
        from itertools import combinations

        triples.extend(combinations(range(1, p.n + 1), 3))
    for triple in triples:
        for v in triple:
            u, w = sorted(set(triple) - {v})
            be = find_be(p, v, u, w)
            if be is not None:
                print(json.dumps({"kind": "BE", "voters": list(be.voters),
                                  "alts": list(be.alts)}))
            for uu, ww in ((u, w), (w, u)):
                ex = find_ex(p, v, uu, ww)
                if ex is not None:
                    print(json.dumps({"kind": "EX", "voters": list(ex.voters),
                                      "alts": list(ex.alts)}))
                    break
        verdict = three_voter_obstruction(p, tuple(triple))
        if verdict.obstruction:
            print(json.dumps({"kind": "obstruction", "voters": list(triple)}))
    return EXIT_OK


def _cmd_recognize(args: argparse.Namespace) -> int:
    p = parse_profile(_read(args.profile))
    out = recognize_2d(p, budget=args.budget)
    payload = {
        "verdict": out.verdict,
        "nodes": out.nodes,
        "prunes": out.prunes,
        "millis": round(out.millis, 3),
    }
    if out.witness is not None:
        payload["witness"] = serialize_embedding(out.witness)
        if args.witness_out:
            Path(args.witness_out).write_text(payload["witness"], encoding="utf-8")
    print(json.dumps(payload))
    if out.verdict == "feasible":
        return EXIT_OK
    if out.verdict == "infeasible":
        return EXIT_NEGATIVE
    return EXIT_UNDECIDED


def _parse_shard(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition(":")
    return int(lo), int(hi)


def _cmd_scan(args: argparse.Namespace) -> int:
    t0 = time.perf_counter()
    summary = experiments.scan(
        args.voters,
        args.alts,
        shard=_parse_shard(args.shard) if args.shard else None,
        out=args.out,
        store_witnesses=args.store_witnesses,
        workers=args.workers,
        budget=args.budget,
    )
    print(json.dumps(summary.to_dict()))
    return EXIT_OK if summary.undecided == 0 else EXIT_UNDECIDED


def _cmd_frontier(args: argparse.Namespace) -> int:
    report = experiments.frontier_check(scan_workers=args.workers)
    text = json.dumps(report.to_dict(), indent=2)
    _write_or_print(text + "\n", args.out)
    return EXIT_OK if report.all_pass else EXIT_INTERNAL


def _cmd_plot(args: argparse.Namespace) -> int:
    e = parse_embedding(_read(args.embedding))
    voters: tuple[int, ...] = ()
    if args.circles:
        voters = tuple(
            int(tok.lstrip("v")) for tok in args.circles.split(",") if tok
        )
    spec = render.FigureSpec(e, circle_voters=voters)
    Path(args.out).write_text(render.render_embedding(spec), encoding="utf-8")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="manhattanprefs",
        description="Construct, verify, and decide Manhattan embeddings of "
        "preference profiles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("parse-check", help="validate a profile or spec file")
    s.add_argument("--profile", required=True)
    s.add_argument("--spec", action="store_true",
                   help="treat the file as a tie-group spec")
    s.set_defaults(func=_cmd_parse_check)

    s = sub.add_parser("verify", help="check an embedding against a profile")
    s.add_argument("--profile", required=True)
    s.add_argument("--embedding", required=True)
    s.add_argument("--metric", choices=("l1", "l2"), default="l1")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("embed", help="construct an embedding")
    s.add_argument("--profile", required=True)
    s.add_argument("--method", choices=("n-dim", "m-dim"), required=True)
    s.add_argument("--out")
    s.set_defaults(func=_cmd_embed)

    s = sub.add_parser("detect", help="find forbidden three-voter configurations")
    s.add_argument("--profile", required=True)
    s.add_argument("--triple", help="comma-separated voter triple, e.g. 1,2,3")
    s.set_defaults(func=_cmd_detect)

    s = sub.add_parser("recognize", help="decide 2D Manhattan realizability")
    s.add_argument("--profile", required=True)
    s.add_argument("--budget", type=int, default=None, help="node limit")
    s.add_argument("--witness-out", help="write the witness embedding here")
    s.set_defaults(func=_cmd_recognize)

    s = sub.add_parser("scan", help="recognize every canonical (n, m) profile")
    s.add_argument("--voters", type=int, required=True)
    s.add_argument("--alts", type=int, required=True)
    s.add_argument("--shard", help="canonical index range a:b (half-open)")
    s.add_argument("--store-witnesses", action="store_true")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--budget", type=int, default=experiments.DEFAULT_SCAN_BUDGET)
    s.add_argument("--out", required=True, help="JSONL record file")
    s.set_defaults(func=_cmd_scan)

    s = sub.add_parser("frontier", help="run the full boundary table")
    s.add_argument("--out")
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=_cmd_frontier)

    s = sub.add_parser("plot", help="render an embedding as SVG")
    s.add_argument("--embedding", required=True)
    s.add_argument("--circles", help="voters whose circles to draw, e.g. v1,v2")
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_plot)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (ProfileError, GeometryError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InternalVerificationError as exc:
        print(f"internal verification failure: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
