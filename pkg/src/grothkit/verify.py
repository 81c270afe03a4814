"""
Exhaustive checks of the Hecke-sum formula and the recurrences behind it.

The two sides are computed independently: the left side substitutes into the
cached G_u(x; y), the right side sweeps subsets of D(v).  Rows are always
sorted by (u, v) so the report does not depend on the worker count.
"""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass, field

from .grothendieck import GrothCache, fixed_point_product, specialize
from .laurent import LaurentPoly
from .permutation import (
    Permutation, all_permutations, ascent_positions, bruhat_leq, descent_positions, mult_s,
)
from .pipedream import br_rhs, enumerate_hecke, hecke_table

__all__ = [
    "VerifyReport", "theorem_rows", "check_lemma1", "check_lemma2", "check_lemma3",
    "check_lemma4", "check_lemma5", "lemma_checks", "run_verify",
]

MAX_RANK = 6


@dataclass
class VerifyReport:
    n: int
    mode: str
    rows: list[dict] = field(default_factory=list)
    lemmas: list[dict] = field(default_factory=list)
    elapsed: dict[str, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r["equal"] for r in self.rows) and all(not c["failures"] for c in self.lemmas)

    def mismatches(self) -> list[tuple[str, str]]:
        return [(r["u"], r["v"]) for r in self.rows if not r["equal"]]

    def to_json_obj(self) -> dict:
        # timings are left out so the document is byte-stable across runs
        return {
            "n": self.n,
            "mode": self.mode,
            "passed": self.passed,
            "rows": self.rows,
            "lemmas": self.lemmas,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=1)


# worker state, installed before forking or by the pool initializer
_CACHE: GrothCache | None = None
_PRUNE = False


def _init_worker(cache: GrothCache, prune: bool) -> None:
    global _CACHE, _PRUNE
    _CACHE, _PRUNE = cache, prune


def _rows_for_v(v: Permutation) -> list[dict]:
    cache, n = _CACHE, v.n
    if _PRUNE:
        table = {}
        for u in all_permutations(n):
            family = enumerate_hecke(u, v, prune=True)
            if family:
                table[u] = (br_rhs(u, v, prune=True), len(family))
    else:
        table = hecke_table(v)
    zero = LaurentPoly.zero(n)
    rows = []
    for u in all_permutations(n):
        lhs = specialize(u, v, cache)
        rhs, count = table.get(u, (zero, 0))
        rows.append({
            "u": str(u),
            "v": str(v),
            "lhs_terms": len(lhs),
            "rhs_terms": len(rhs),
            "equal": lhs == rhs,
            "hecke_count": count,
        })
    return rows


def theorem_rows(n: int, cache: GrothCache | None = None, jobs: int = 1, prune: bool = False) -> list[dict]:
    """One row per (u, v) in S_n x S_n, sorted by (u, v)."""
    if cache is None:
        cache = GrothCache(n)
    cache.warm()
    vs = list(all_permutations(n))
    if jobs <= 1:
        _init_worker(cache, prune)
        chunks = [_rows_for_v(v) for v in vs]
    else:
        ctx = multiprocessing.get_context("fork" if os.name == "posix" else "spawn")
        with ctx.Pool(jobs, initializer=_init_worker, initargs=(cache, prune)) as pool:
            chunks = pool.map(_rows_for_v, vs, chunksize=max(1, len(vs) // (4 * jobs)))
    rows = [r for chunk in chunks for r in chunk]
    key = {str(w): k for k, w in enumerate(vs)}
    rows.sort(key=lambda r: (key[r["u"]], key[r["v"]]))
    return rows


def _ratio(n: int, num: int, den: int) -> LaurentPoly:
    # y_num / y_den
    y = [0] * n
    y[num - 1] += 1
    y[den - 1] -= 1
    return LaurentPoly.monomial(n, y=y)


def _check(name: str, cases: int, failures: list) -> dict:
    return {"lemma": name, "cases": cases, "failures": failures}


def check_lemma1(n: int, cache: GrothCache) -> dict:
    """v = v' s_i with l(v) > l(v'), l(u s_i) < l(u)."""
    cases, failures = 0, []
    for v in all_permutations(n):
        for i in descent_positions(v):
            vp = mult_s(v, i)
            ratio = _ratio(n, vp(i), vp(i + 1))
            for u in all_permutations(n):
                if i not in descent_positions(u):
                    continue
                cases += 1
                lhs = specialize(u, v, cache)
                rhs = ratio * specialize(u, vp, cache) + (1 - ratio) * specialize(mult_s(u, i), vp, cache)
                if lhs != rhs:
                    failures.append([str(u), str(v), i])
    return _check("lemma1", cases, failures)


def check_lemma2(n: int, cache: GrothCache) -> dict:
    """v = v' s_i (either length order), l(u s_i) > l(u)."""
    cases, failures = 0, []
    for v in all_permutations(n):
        for i in range(1, n):
            vp = mult_s(v, i)
            for u in all_permutations(n):
                if i not in ascent_positions(u):
                    continue
                cases += 1
                if specialize(u, v, cache) != specialize(u, vp, cache):
                    failures.append([str(u), str(v), i])
    return _check("lemma2", cases, failures)


def check_lemma3(n: int, cache: GrothCache) -> dict:
    cases, failures = 0, []
    for u in all_permutations(n):
        for v in all_permutations(n):
            if bruhat_leq(u, v):
                continue
            cases += 1
            if specialize(u, v, cache):
                failures.append([str(u), str(v)])
    return _check("lemma3", cases, failures)


def check_lemma4(n: int, cache: GrothCache) -> dict:
    cases, failures = 0, []
    for u in all_permutations(n):
        for i in descent_positions(u):
            up = mult_s(u, i)
            cases += 1
            rhs = (1 - _ratio(n, u(i + 1), u(i))) * specialize(up, up, cache)
            if specialize(u, u, cache) != rhs:
                failures.append([str(u), i])
    return _check("lemma4", cases, failures)


def check_lemma5(n: int, cache: GrothCache) -> dict:
    cases, failures = 0, []
    for u in all_permutations(n):
        cases += 1
        if specialize(u, u, cache) != fixed_point_product(u):
            failures.append([str(u)])
    return _check("lemma5", cases, failures)


def lemma_checks(n: int, cache: GrothCache | None = None) -> list[dict]:
    if cache is None:
        cache = GrothCache(n)
    cache.warm()
    return [check(n, cache) for check in
            (check_lemma1, check_lemma2, check_lemma3, check_lemma4, check_lemma5)]


def run_verify(n: int, mode: str = "theorem", jobs: int = 1, prune: bool = False,
               cache: GrothCache | None = None) -> VerifyReport:
    if not 1 <= n <= MAX_RANK:
        raise ValueError(f"rank must be in 1..{MAX_RANK}, got {n}")
    if mode not in ("theorem", "lemmas", "all"):
        raise ValueError(f"unknown mode {mode!r}")
    report = VerifyReport(n=n, mode=mode)
    if cache is None:
        cache = GrothCache(n)
    t0 = time.perf_counter()
    cache.warm()
    report.elapsed["warmup"] = time.perf_counter() - t0
    if mode in ("theorem", "all"):
        t0 = time.perf_counter()
        report.rows = theorem_rows(n, cache, jobs=jobs, prune=prune)
        report.elapsed["theorem"] = time.perf_counter() - t0
    if mode in ("lemmas", "all"):
        t0 = time.perf_counter()
        report.lemmas = lemma_checks(n, cache)
        report.elapsed["lemmas"] = time.perf_counter() - t0
    return report
