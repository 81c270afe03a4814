"""
Permutations of {1, ..., n} in one-line notation.

Positions and values are 1-indexed everywhere at the interface: ``w(i)`` is
the value in position ``i``.  Products follow the convention that ``w * s_i``
swaps the entries in positions ``i`` and ``i+1`` of ``w``.

>>> w = parse("2143")
>>> mult_right_t(w, 1, 3), mult_left_t(w, 1, 3)
(Permutation(4123), Permutation(2341))
>>> hecke_eval((1, 2, 1, 2), 3)
Permutation(321)
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations as _itertools_permutations
from typing import Iterable, Iterator, Sequence

from .errors import IndexOutOfRange, NotAPermutation, RankMismatch

__all__ = [
    "Permutation", "HeckeWord",
    "from_one_line", "parse", "identity", "longest", "all_permutations",
    "length", "descent_positions", "ascent_positions",
    "mult_right_t", "mult_left_t", "mult_s",
    "demazure_star", "hecke_eval", "demazure_product", "reduced_word",
    "bruhat_leq",
]

# a sequence of indices i, each standing for the simple transposition s_i
HeckeWord = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Permutation:
    """An element of S_n stored as its one-line word (ordering is lexicographic)."""
    word: tuple[int, ...]

    def __post_init__(self):
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        if not word or sorted(word) != list(range(1, len(word) + 1)):
            raise NotAPermutation(f"{list(word)} is not a permutation of 1..{len(word)}")

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= self.n:
            raise IndexOutOfRange(f"position {i} outside 1..{self.n}")
        return self.word[i - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``(self * other)(i) = self(other(i))``."""
        _check_rank(self, other)
        return Permutation(tuple(self.word[j - 1] for j in other.word))

    def inverse(self) -> Permutation:
        inv = [0] * self.n
        for pos, val in enumerate(self.word, 1):
            inv[val - 1] = pos
        return Permutation(tuple(inv))

    @cached_property
    def length(self) -> int:
        w = self.word
        return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.word, 1))

    def one_line(self) -> str:
        """Compact digit string for n <= 9, comma-separated otherwise."""
        if self.n <= 9:
            return "".join(map(str, self.word))
        return ",".join(map(str, self.word))

    def __str__(self) -> str:
        return self.one_line()

    def __repr__(self) -> str:
        return f"Permutation({self.one_line()})"


def _check_rank(u: Permutation, v: Permutation) -> None:
    if u.n != v.n:
        raise RankMismatch(f"permutations of different rank: {u.n} vs {v.n}")


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"s_{i} is not a simple transposition of S_{n}")


def from_one_line(values: Sequence[int]) -> Permutation:
    return Permutation(tuple(values))


def parse(text: str, n: int | None = None) -> Permutation:
    """
    Parse "2157634" (single digits) or "2,1,5,7,6,3,4"; "e" is the identity
    and needs ``n``.  A given ``n`` must match the parsed rank.
    """
    text = text.strip()
    if text in ("e", "id"):
        if n is None:
            raise NotAPermutation("identity 'e' needs an explicit rank")
        return identity(n)
    try:
        if "," in text:
            values = [int(t) for t in text.split(",")]
        else:
            values = [int(c) for c in text]
    except ValueError:
        raise NotAPermutation(f"cannot parse {text!r} as a permutation") from None
    w = from_one_line(values)
    if n is not None and w.n != n:
        raise RankMismatch(f"{text!r} has rank {w.n}, expected {n}")
    return w


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def longest(n: int) -> Permutation:
    return Permutation(tuple(range(n, 0, -1)))


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order of one-line notation."""
    for word in _itertools_permutations(range(1, n + 1)):
        yield Permutation(word)


def length(w: Permutation) -> int:
    return w.length


def descent_positions(w: Permutation) -> tuple[int, ...]:
    return tuple(i for i in range(1, w.n) if w.word[i - 1] > w.word[i])


def ascent_positions(w: Permutation) -> tuple[int, ...]:
    return tuple(i for i in range(1, w.n) if w.word[i - 1] < w.word[i])


def mult_right_t(w: Permutation, i: int, j: int) -> Permutation:
    """w * t_ij: swap the entries in positions i and j."""
    if not 1 <= i < j <= w.n:
        raise IndexOutOfRange(f"t_({i},{j}) invalid in S_{w.n}")
    word = list(w.word)
    word[i - 1], word[j - 1] = word[j - 1], word[i - 1]
    return Permutation(tuple(word))


def mult_left_t(w: Permutation, i: int, j: int) -> Permutation:
    """t_ij * w: swap the values i and j."""
    if not 1 <= i < j <= w.n:
        raise IndexOutOfRange(f"t_({i},{j}) invalid in S_{w.n}")
    swap = {i: j, j: i}
    return Permutation(tuple(swap.get(v, v) for v in w.word))


def mult_s(w: Permutation, i: int) -> Permutation:
    _check_index(i, w.n)
    return mult_right_t(w, i, i + 1)


def demazure_star(w: Permutation, i: int) -> Permutation:
    """0-Hecke product w * s_i: unchanged on a descent, otherwise w s_i."""
    _check_index(i, w.n)
    if w.word[i - 1] > w.word[i]:
        return w
    return mult_right_t(w, i, i + 1)


def hecke_eval(word: Iterable[int], n: int) -> Permutation:
    """Left fold of :func:`demazure_star` over ``word`` starting at the identity."""
    perm = list(range(1, n + 1))
    for i in word:
        if not 1 <= i <= n - 1:
            raise IndexOutOfRange(f"letter s_{i} out of range for S_{n}")
        if perm[i - 1] < perm[i]:
            perm[i - 1], perm[i] = perm[i], perm[i - 1]
    return Permutation(tuple(perm))


def reduced_word(w: Permutation) -> HeckeWord:
    """Some reduced word of w (peels off the last descent each step)."""
    letters = []
    perm = list(w.word)
    while True:
        for i in range(len(perm) - 1, 0, -1):
            if perm[i - 1] > perm[i]:
                perm[i - 1], perm[i] = perm[i], perm[i - 1]
                letters.append(i)
                break
        else:
            break
    return tuple(reversed(letters))


def demazure_product(a: Permutation, b: Permutation) -> Permutation:
    """Extension of the star product to all of S_n, via any reduced word of b."""
    _check_rank(a, b)
    for i in reduced_word(b):
        a = demazure_star(a, i)
    return a


@lru_cache(maxsize=None)
def _rank_table(w: Permutation) -> tuple[tuple[int, ...], ...]:
    # table[p][q] = #{k <= p : w(k) >= q}, p, q in 0..n
    n = w.n
    table = [[0] * (n + 2)]
    for p in range(1, n + 1):
        prev = table[-1]
        val = w.word[p - 1]
        table.append([prev[q] + (1 if val >= q else 0) for q in range(n + 2)])
    return tuple(tuple(row) for row in table)


def bruhat_leq(u: Permutation, v: Permutation) -> bool:
    """Strong Bruhat order by the rank-matrix (dot) criterion."""
    _check_rank(u, v)
    if u.length > v.length:
        return False
    tu, tv = _rank_table(u), _rank_table(v)
    return all(a <= b for ru, rv in zip(tu, tv) for a, b in zip(ru, rv))
