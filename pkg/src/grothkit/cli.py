"""Command-line front end: ``grothkit {compute,specialize,diagram,hecke,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from .errors import GrothkitError
from .grothendieck import GrothCache, specialize
from .laurent import LaurentPoly
from .permutation import Permutation, parse
from .pipedream import (
    bottom_diagram, br_rhs, diagram_word, enumerate_hecke, hecke_sign, render_diagram,
)
from .verify import MAX_RANK, run_verify

CACHE_DUMP_ENV = "GROTHKIT_CACHE_DUMP"


class UsageError(Exception):
    pass


def _render(poly: LaurentPoly, fmt: str) -> str:
    if fmt == "json":
        return poly.to_json()
    if fmt == "latex":
        return poly.to_latex()
    return poly.to_plain()


def _parse_pair(a: str, b: str, n: int | None) -> tuple[Permutation, Permutation]:
    # "e" borrows its rank from the other argument when --n is absent
    if n is None:
        for text in (a, b):
            if text not in ("e", "id"):
                n = parse(text).n
                break
    u, v = parse(a, n), parse(b, n)
    return u, v


def _load_cache(args, n: int) -> GrothCache:
    if getattr(args, "cache", None):
        with open(args.cache) as fh:
            cache = GrothCache.load(fh.read())
        if cache.n != n:
            raise UsageError(f"cache file has rank {cache.n}, expected {n}")
        return cache
    return GrothCache(n)


def _dump_cache(cache: GrothCache) -> None:
    path = os.environ.get(CACHE_DUMP_ENV)
    if path:
        with open(path, "w") as fh:
            fh.write(cache.dump())


def cmd_compute(args) -> int:
    w = parse(args.w, args.n)
    cache = _load_cache(args, w.n)
    print(_render(cache.groth(w), args.format))
    _dump_cache(cache)
    return 0


def cmd_specialize(args) -> int:
    u, v = _parse_pair(args.u, args.v, args.n)
    cache = _load_cache(args, u.n)
    print(_render(specialize(u, v, cache), args.format))
    _dump_cache(cache)
    return 0


def cmd_diagram(args) -> int:
    w = parse(args.w, args.n)
    if args.mode == "json":
        print(bottom_diagram(w).to_json())
        return 0
    text = render_diagram(w, args.mode)
    if text:
        print(text)
    return 0


def cmd_hecke(args) -> int:
    u, v = _parse_pair(args.u, args.v, args.n)
    family = enumerate_hecke(u, v, prune=args.prune)
    doc = {
        "n": u.n,
        "u": str(u),
        "v": str(v),
        "count": len(family),
        "diagrams": [
            {"boxes": D.sorted_boxes(), "word": list(diagram_word(D)), "sign": hecke_sign(D, u)}
            for D in family
        ],
        "rhs": br_rhs(u, v, prune=args.prune).to_json_obj(),
    }
    print(json.dumps(doc, separators=(",", ":")))
    return 0


def cmd_verify(args) -> int:
    if args.n is None or not 1 <= args.n <= MAX_RANK:
        raise UsageError(f"--n must be in 1..{MAX_RANK}")
    jobs = args.jobs if args.jobs is not None else (os.cpu_count() or 1)
    if jobs < 1:
        raise UsageError("--jobs must be positive")
    cache = GrothCache(args.n)
    report = run_verify(args.n, args.mode, jobs=jobs, prune=args.prune, cache=cache)
    print(report.to_json())
    _dump_cache(cache)
    timing = ", ".join(f"{k} {v:.2f}s" for k, v in report.elapsed.items())
    err = sys.stderr
    print(f"verify n={args.n} mode={args.mode} jobs={jobs}: {len(report.rows)} pairs, "
          f"{len(report.lemmas)} lemma checks ({timing})", file=err)
    for u, v in report.mismatches():
        print(f"MISMATCH u={u} v={v}", file=err)
    for check in report.lemmas:
        for case in check["failures"]:
            print(f"FAILED {check['lemma']} {case}", file=err)
    print("PASS" if report.passed else "FAIL", file=err)
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grothkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, fmt=True):
        p.add_argument("--n", type=int, default=None, help="rank (inferred from the permutation if omitted)")
        if fmt:
            p.add_argument("--format", choices=("json", "latex", "plain"), default="plain")

    p = sub.add_parser("compute", help="print G_w(x; y)")
    p.add_argument("w")
    add_common(p)
    p.add_argument("--cache", help="load G_w values from a cache dump")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("specialize", help="print G_u(y_v; y)")
    p.add_argument("u")
    p.add_argument("v")
    add_common(p)
    p.add_argument("--cache", help="load G_w values from a cache dump")
    p.set_defaults(func=cmd_specialize)

    p = sub.add_parser("diagram", help="show the bottom pipe dream D(w)")
    p.add_argument("w")
    add_common(p, fmt=False)
    p.add_argument("--mode", choices=("labels", "weights", "json"), default="labels")
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("hecke", help="list the Hecke family H(u, v) and its signed sum")
    p.add_argument("u")
    p.add_argument("v")
    add_common(p, fmt=False)
    p.add_argument("--prune", action="store_true", help="Bruhat-pruned enumeration")
    p.set_defaults(func=cmd_hecke)

    p = sub.add_parser("verify", help="exhaustively check the Hecke-sum formula in S_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("theorem", "lemmas", "all"), default="theorem")
    p.add_argument("--jobs", type=int, default=None, help="worker processes (default: CPU count)")
    p.add_argument("--prune", action="store_true", help="Bruhat-pruned enumeration")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GrothkitError, UsageError) as exc:
        print(f"grothkit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
