"""
Double Grothendieck polynomials G_w(x; y).

G_{w0} is the product of (1 - y_j / x_i) over i + j <= n; every other G_w is
obtained as pi_i G_{w s_i} for an ascent i of w.  The cache always uses the
smallest ascent so its contents are reproducible.

>>> from grothkit.permutation import parse
>>> cache = GrothCache(2)
>>> cache.groth(parse("21")).to_latex(), cache.groth(parse("12")).to_latex()
('1-\\\\frac{y_1}{x_1}', '1')
"""

from __future__ import annotations

import json
from typing import Mapping

from .errors import RankMismatch
from .laurent import LaurentPoly, isobaric_pi, substitute_x_by_y_perm
from .permutation import Permutation, all_permutations, ascent_positions, longest, mult_s

__all__ = ["GrothCache", "groth_top", "groth", "specialize", "fixed_point_product"]


def _one_minus_ratio(n: int, num: tuple[str, int], den: tuple[str, int]) -> LaurentPoly:
    # 1 - num/den for single variables given as ("x" | "y", index)
    exps = [0] * (2 * n)
    for (kind, idx), sgn in ((num, 1), (den, -1)):
        exps[(idx - 1) + (n if kind == "y" else 0)] += sgn
    return LaurentPoly(n, {(0,) * (2 * n): 1, tuple(exps): -1})


def groth_top(n: int) -> LaurentPoly:
    """G_{w0}(x; y) expanded."""
    result = LaurentPoly.one(n)
    for i in range(1, n):
        for j in range(1, n - i + 1):
            result = result * _one_minus_ratio(n, ("y", j), ("x", i))
    return result


class GrothCache:
    """Lazily populated table w -> G_w(x; y) for one rank."""

    def __init__(self, n: int):
        self.n = n
        self.table: dict[Permutation, LaurentPoly] = {longest(n): groth_top(n)}

    def groth(self, w: Permutation) -> LaurentPoly:
        if w.n != self.n:
            raise RankMismatch(f"permutation of rank {w.n} in a rank {self.n} cache")
        # walk up through smallest ascents until something cached is hit
        chain: list[tuple[Permutation, int]] = []
        cur = w
        while cur not in self.table:
            i = ascent_positions(cur)[0]
            chain.append((cur, i))
            cur = mult_s(cur, i)
        poly = self.table[cur]
        for perm, i in reversed(chain):
            poly = isobaric_pi(poly, i)
            self.table[perm] = poly
        return poly

    def warm(self) -> GrothCache:
        """Populate every w in S_n; the cache is read-only afterwards."""
        for w in all_permutations(self.n):
            self.groth(w)
        return self

    def __len__(self) -> int:
        return len(self.table)

    def dump(self) -> str:
        """JSON map from one-line notation to polynomial, keys in lexicographic order."""
        obj = {str(w): self.table[w].to_json_obj() for w in sorted(self.table)}
        return json.dumps({"n": self.n, "groth": obj}, separators=(",", ":"), sort_keys=False)

    @classmethod
    def load(cls, text: str) -> GrothCache:
        from .permutation import parse

        obj = json.loads(text)
        cache = cls(obj["n"])
        table: Mapping[str, dict] = obj["groth"]
        for key, poly in table.items():
            cache.table[parse(key)] = LaurentPoly.from_json_obj(poly)
        return cache


def groth(w: Permutation, cache: GrothCache | None = None) -> LaurentPoly:
    if cache is None:
        cache = GrothCache(w.n)
    return cache.groth(w)


def specialize(u: Permutation, v: Permutation, cache: GrothCache | None = None) -> LaurentPoly:
    """G_u(y_v; y): substitute x_i -> y_{v(i)} in G_u(x; y)."""
    if u.n != v.n:
        raise RankMismatch(f"permutations of different rank: {u.n} vs {v.n}")
    return substitute_x_by_y_perm(groth(u, cache), v)


def fixed_point_product(u: Permutation) -> LaurentPoly:
    """Product of (1 - y_{u(j)} / y_{u(i)}) over inversions i < j, u(i) > u(j)."""
    n = u.n
    result = LaurentPoly.one(n)
    w = u.word
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] > w[j]:
                result = result * _one_minus_ratio(n, ("y", w[j]), ("y", w[i]))
    return result
