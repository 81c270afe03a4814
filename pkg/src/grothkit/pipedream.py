"""
Bottom pipe dreams D(w) inside the staircase, their box weights and labels,
and the signed Hecke sum over subsets of D(v).

Row i of D(w) holds the first c(w, i) squares, where c(w, i) counts the
entries right of position i that are smaller than w(i).  The box in row i,
column k is labelled s_{i+k-1} and weighted 1 - y_{a_k} / y_{w(i)}, a_k being
the k-th smallest of those entries.

>>> from grothkit.permutation import parse
>>> D = bottom_diagram(parse("2157634"))
>>> row_lengths(D)
(1, 0, 2, 3, 2, 0, 0)
>>> diagram_word(D)
(1, 4, 3, 6, 5, 4, 6, 5)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import BoxNotInDiagram, PreconditionViolated, RankMismatch
from .laurent import LaurentPoly
from .permutation import (
    HeckeWord, Permutation, bruhat_leq, descent_positions, hecke_eval, mult_s,
)

__all__ = [
    "BoxRef", "Diagram", "inversion_values", "bottom_diagram", "row_lengths",
    "box_weight", "box_label", "diagram_word", "diagram_weight", "reading_order",
    "enumerate_hecke", "hecke_sign", "br_rhs", "hecke_table", "last_descent",
    "phi_map", "render_diagram",
]


class BoxRef(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Diagram:
    """A set of squares of the staircase of rank ``n``."""
    n: int
    boxes: frozenset[BoxRef]

    def __post_init__(self):
        boxes = frozenset(BoxRef(*b) for b in self.boxes)
        for r, c in boxes:
            if r < 1 or c < 1 or r + c > self.n:
                raise BoxNotInDiagram(f"square ({r},{c}) is outside the rank-{self.n} staircase")
        object.__setattr__(self, "boxes", boxes)

    @classmethod
    def of(cls, n: int, boxes: Iterable[tuple[int, int]] = ()) -> Diagram:
        return cls(n, frozenset(boxes))

    def __len__(self) -> int:
        return len(self.boxes)

    def __contains__(self, box) -> bool:
        return BoxRef(*box) in self.boxes

    def __iter__(self) -> Iterator[BoxRef]:
        return iter(sorted(self.boxes))

    def __le__(self, other: Diagram) -> bool:
        return self.boxes <= other.boxes

    def sorted_boxes(self) -> list[list[int]]:
        return [[r, c] for r, c in sorted(self.boxes)]

    def to_json_obj(self) -> dict:
        return {"n": self.n, "boxes": self.sorted_boxes()}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj) -> Diagram:
        return cls.of(obj["n"], (tuple(b) for b in obj["boxes"]))


@lru_cache(maxsize=None)
def inversion_values(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """For each row i, the sorted entries right of position i and smaller than w(i)."""
    word = w.word
    return tuple(
        tuple(sorted(b for b in word[i + 1:] if b < a)) for i, a in enumerate(word)
    )


@lru_cache(maxsize=None)
def bottom_diagram(w: Permutation) -> Diagram:
    inv = inversion_values(w)
    return Diagram.of(w.n, ((i, k) for i, vals in enumerate(inv, 1) for k in range(1, len(vals) + 1)))


def row_lengths(D: Diagram) -> tuple[int, ...]:
    counts = [0] * D.n
    for r, _ in D.boxes:
        counts[r - 1] += 1
    return tuple(counts)


def box_label(box: tuple[int, int]) -> int:
    r, c = box
    return r + c - 1


def reading_order(D: Diagram) -> list[BoxRef]:
    """Rows top to bottom, each row right to left."""
    return sorted(D.boxes, key=lambda b: (b.row, -b.col))


def diagram_word(D: Diagram) -> HeckeWord:
    return tuple(box_label(b) for b in reading_order(D))


@lru_cache(maxsize=None)
def _weight_table(w: Permutation) -> dict[BoxRef, LaurentPoly]:
    n = w.n
    table = {}
    const = (0,) * (2 * n)
    for i, vals in enumerate(inversion_values(w), 1):
        top = w.word[i - 1]
        for k, small in enumerate(vals, 1):
            exps = [0] * (2 * n)
            exps[n + small - 1] += 1
            exps[n + top - 1] -= 1
            table[BoxRef(i, k)] = LaurentPoly(n, {const: 1, tuple(exps): -1})
    return table


def box_weight(w: Permutation, box: tuple[int, int]) -> LaurentPoly:
    try:
        return _weight_table(w)[BoxRef(*box)]
    except KeyError:
        raise BoxNotInDiagram(f"square {tuple(box)} is not in D({w})") from None


def diagram_weight(w_ambient: Permutation, D: Diagram) -> LaurentPoly:
    if D.n != w_ambient.n:
        raise RankMismatch(f"diagram of rank {D.n} inside D({w_ambient})")
    table = _weight_table(w_ambient)
    result = LaurentPoly.one(D.n)
    for b in sorted(D.boxes):
        if b not in table:
            raise BoxNotInDiagram(f"square {tuple(b)} is not in D({w_ambient})")
        result = result * table[b]
    return result


def hecke_sign(D: Diagram, u: Permutation) -> int:
    return -1 if (len(D) - u.length) % 2 else 1


def _subsets_by_mask(v: Permutation) -> tuple[list[BoxRef], list[int]]:
    boxes = reading_order(bottom_diagram(v))
    return boxes, [box_label(b) for b in boxes]


def _mask_diagram(n: int, boxes: list[BoxRef], mask: int) -> Diagram:
    return Diagram(n, frozenset(b for k, b in enumerate(boxes) if mask >> k & 1))


def _hecke_mask(n: int, letters: list[int], mask: int) -> tuple[int, ...]:
    perm = list(range(1, n + 1))
    k = 0
    while mask:
        if mask & 1:
            i = letters[k]
            if perm[i - 1] < perm[i]:
                perm[i - 1], perm[i] = perm[i], perm[i - 1]
        mask >>= 1
        k += 1
    return tuple(perm)


def enumerate_hecke(u: Permutation, v: Permutation, prune: bool = False) -> list[Diagram]:
    """
    All D inside D(v) whose word star-evaluates to u, ordered by the bitmask
    over D(v)'s boxes in reading order (bit k <-> k-th box read).

    With ``prune`` the search is a depth-first walk that abandons a branch when
    the boxes chosen so far already evaluate to something not below u, or when
    taking every remaining box still cannot reach u.
    """
    if u.n != v.n:
        raise RankMismatch(f"permutations of different rank: {u.n} vs {v.n}")
    n = v.n
    boxes, letters = _subsets_by_mask(v)
    if prune:
        masks = _pruned_masks(u, n, letters)
    else:
        target = u.word
        masks = [m for m in range(1 << len(boxes)) if _hecke_mask(n, letters, m) == target]
    found = []
    for m in masks:
        D = _mask_diagram(n, boxes, m)
        assert len(D) >= u.length, "a Hecke word cannot be shorter than the length"
        found.append(D)
    return found


def _pruned_masks(u: Permutation, n: int, letters: list[int]) -> list[int]:
    m = len(letters)
    out: list[int] = []

    def star(perm: Permutation, i: int) -> Permutation:
        return perm if perm.word[i - 1] > perm.word[i] else mult_s(perm, i)

    def walk(k: int, current: Permutation, mask: int) -> None:
        if not bruhat_leq(current, u):
            return
        if k == m:
            if current == u:
                out.append(mask)
            return
        best = current
        for i in letters[k:]:
            best = star(best, i)
        if not bruhat_leq(u, best):
            return
        walk(k + 1, current, mask)
        walk(k + 1, star(current, letters[k]), mask | (1 << k))

    walk(0, hecke_eval((), n), 0)
    return sorted(out)


def br_rhs(u: Permutation, v: Permutation, prune: bool = False) -> LaurentPoly:
    """Signed sum of diagram weights over the Hecke family of (u, v)."""
    total = LaurentPoly.zero(v.n)
    for D in enumerate_hecke(u, v, prune=prune):
        term = diagram_weight(v, D)
        total = total + (term if hecke_sign(D, u) > 0 else -term)
    return total


def hecke_table(v: Permutation) -> dict[Permutation, tuple[LaurentPoly, int]]:
    """
    One sweep over all subsets of D(v), grouped by Hecke value:
    ``u -> (signed weight sum, family size)``.  Equivalent to calling
    :func:`br_rhs` for every u, at the cost of a single enumeration.

    The sweep walks the subsets depth-first in reading order, carrying the
    partial Hecke value and partial weight, so every product is formed once.
    """
    n = v.n
    boxes, letters = _subsets_by_mask(v)
    weights = [_weight_table(v)[b] for b in boxes]
    sums: dict[tuple[int, ...], LaurentPoly] = {}
    counts: dict[tuple[int, ...], int] = {}
    m = len(boxes)

    def walk(k: int, perm: list[int], weight: LaurentPoly, size: int) -> None:
        if k == m:
            key = tuple(perm)
            sign_term = weight if size % 2 == 0 else -weight
            sums[key] = sums[key] + sign_term if key in sums else sign_term
            counts[key] = counts.get(key, 0) + 1
            return
        walk(k + 1, perm, weight, size)
        i = letters[k]
        nxt = perm
        if perm[i - 1] < perm[i]:
            nxt = list(perm)
            nxt[i - 1], nxt[i] = nxt[i], nxt[i - 1]
        walk(k + 1, nxt, weight * weights[k], size + 1)

    walk(0, list(range(1, n + 1)), LaurentPoly.one(n), 0)
    table = {}
    for key, total in sums.items():
        u = Permutation(key)
        # the walk used (-1)^{|D|}; fold in (-1)^{-l(u)}
        table[u] = (total if u.length % 2 == 0 else -total, counts[key])
    return table


def last_descent(v: Permutation) -> int:
    desc = descent_positions(v)
    if not desc:
        raise PreconditionViolated("the identity has no descent")
    return desc[-1]


def phi_map(D: Diagram, v: Permutation) -> Diagram:
    """
    Carry a subset of D(v s_r) into D(v) minus its square (r, 1), r being the
    last descent of v: rows above r are kept, square (r+1, j) goes to (r, j+1).
    """
    r = last_descent(v)
    v_prime = mult_s(v, r)
    if D.n != v.n or not D <= bottom_diagram(v_prime):
        raise PreconditionViolated(f"{D.sorted_boxes()} is not inside D({v_prime})")
    out = []
    for row, col in D.boxes:
        if row < r:
            out.append((row, col))
        elif row == r + 1:
            out.append((r, col + 1))
        else:
            raise PreconditionViolated(f"square ({row},{col}) lies below row {r + 1}")
    return Diagram.of(v.n, out)


def _short_weight(w: Permutation, box: BoxRef) -> str:
    small = inversion_values(w)[box.row - 1][box.col - 1]
    return f"1-y{small}/y{w.word[box.row - 1]}"


def render_diagram(w: Permutation, mode: str = "labels", D: Diagram | None = None) -> str:
    """
    ASCII grid of the staircase with the squares of ``D`` (default D(w))
    showing either their s-labels or their weights; other squares show ".".
    """
    if D is None:
        D = bottom_diagram(w)
    n = w.n
    cells: list[list[str]] = []
    for r in range(1, n):
        row = []
        for c in range(1, n - r + 1):
            b = BoxRef(r, c)
            if b not in D.boxes:
                row.append(".")
            elif mode == "weights":
                row.append(_short_weight(w, b))
            else:
                row.append(f"s{box_label(b)}")
        cells.append(row)
    if not cells:
        return ""
    width = max(len(s) for row in cells for s in row)
    return "\n".join(" ".join(s.ljust(width) for s in row).rstrip() for row in cells)
