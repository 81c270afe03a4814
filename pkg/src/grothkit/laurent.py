"""
Exact sparse Laurent polynomials in x_1..x_n, y_1..y_n over the integers.

A monomial is keyed by one exponent tuple of length 2n, the x exponents
followed by the y exponents, so the canonical term order (lexicographic on
the x part, then the y part) is plain tuple order.  Coefficients are Python
ints.  Zero is the empty polynomial.

>>> x1, y1 = LaurentPoly.x(1, 2), LaurentPoly.y(1, 2)
>>> f = (1 - y1 * x1 ** -1) * x1
>>> f == x1 - y1
True
>>> divided_difference(x1 ** -1, 1).to_plain()
'-x_1^-1*x_2^-1'
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator, Mapping

from .errors import IndexOutOfRange, RankMismatch

__all__ = [
    "LaurentPoly", "add", "mul", "negate", "equals", "swap_x",
    "divided_difference", "isobaric_pi", "substitute_x_by_y_perm",
]

Exps = tuple[int, ...]


class LaurentPoly:
    """Immutable Laurent polynomial of ambient rank ``n``."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exps, int] | Iterable[tuple[Exps, int]] = ()):
        self.n = n
        acc: dict[Exps, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != 2 * n:
                raise RankMismatch(f"exponent vector of length {len(exps)} in rank {n}")
            acc[exps] = acc.get(exps, 0) + c
        self._terms = {e: c for e, c in acc.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict[Exps, int]) -> LaurentPoly:
        # trusted constructor: terms already has correct lengths and no zeros
        obj = cls.__new__(cls)
        obj.n = n
        obj._terms = terms
        obj._hash = None
        return obj

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> LaurentPoly:
        return cls._raw(n, {})

    @classmethod
    def constant(cls, c: int, n: int) -> LaurentPoly:
        return cls._raw(n, {(0,) * (2 * n): c} if c else {})

    @classmethod
    def one(cls, n: int) -> LaurentPoly:
        return cls.constant(1, n)

    @classmethod
    def monomial(cls, n: int, x: Iterable[int] = (), y: Iterable[int] = (), coeff: int = 1) -> LaurentPoly:
        """Monomial ``coeff * x^x * y^y``; short exponent lists are zero-padded."""
        xs, ys = list(x), list(y)
        if len(xs) > n or len(ys) > n:
            raise RankMismatch(f"too many exponents for rank {n}")
        exps = tuple(xs + [0] * (n - len(xs)) + ys + [0] * (n - len(ys)))
        return cls._raw(n, {exps: coeff} if coeff else {})

    @classmethod
    def x(cls, i: int, n: int) -> LaurentPoly:
        _check_var(i, n)
        exps = [0] * (2 * n)
        exps[i - 1] = 1
        return cls._raw(n, {tuple(exps): 1})

    @classmethod
    def y(cls, j: int, n: int) -> LaurentPoly:
        _check_var(j, n)
        exps = [0] * (2 * n)
        exps[n + j - 1] = 1
        return cls._raw(n, {tuple(exps): 1})

    # -- inspection ---------------------------------------------------------

    def terms(self) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
        """``(coeff, x_exps, y_exps)`` triples in canonical order."""
        n = self.n
        return [(c, e[:n], e[n:]) for e, c in sorted(self._terms.items())]

    def items(self) -> Iterator[tuple[Exps, int]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def involves_x(self) -> bool:
        n = self.n
        return any(any(e[:n]) for e in self._terms)

    def coefficient(self, x: Iterable[int] = (), y: Iterable[int] = ()) -> int:
        key = next(iter(LaurentPoly.monomial(self.n, x, y)._terms))
        return self._terms.get(key, 0)

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise RankMismatch(f"ambient ranks differ: {self.n} vs {other.n}")
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(other, self.n)
        return NotImplemented

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            s = acc.get(e, 0) + c
            if s:
                acc[e] = s
            else:
                del acc[e]
        return LaurentPoly._raw(self.n, acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw(self.n, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict[Exps, int] = {}
        get = acc.get
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                acc[e] = get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.n, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be inverted")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial with non-unit coefficient is not invertible")
            m = -k
            return LaurentPoly._raw(self.n, {tuple(-a * m for a in e): c ** m})
        result = LaurentPoly.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(other, self.n)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly(n={self.n}, {self.to_plain()!r})"

    def __str__(self) -> str:
        return self.to_plain()

    # -- serialization ------------------------------------------------------

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "terms": [{"c": str(c), "x": list(x), "y": list(y)} for c, x, y in self.terms()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> LaurentPoly:
        n = obj["n"]
        return cls(n, [(tuple(t["x"]) + tuple(t["y"]), int(t["c"])) for t in obj["terms"]])

    @classmethod
    def from_json(cls, text: str) -> LaurentPoly:
        return cls.from_json_obj(json.loads(text))

    def _display_order(self) -> list[tuple[Exps, int]]:
        # constant first, then by total absolute degree; canonical order breaks ties
        return sorted(self._terms.items(), key=lambda t: (sum(map(abs, t[0])), t[0]))

    def _factors(self, exps: Exps) -> tuple[list[tuple[str, int]], list[tuple[str, int]]]:
        num, den = [], []
        for k, a in enumerate(exps):
            name = f"x_{k + 1}" if k < self.n else f"y_{k - self.n + 1}"
            if a > 0:
                num.append((name, a))
            elif a < 0:
                den.append((name, -a))
        return num, den

    def to_latex(self) -> str:
        """Human-readable LaTeX, e.g. ``1-\\frac{y_1}{y_2}``; display only."""
        if not self._terms:
            return "0"

        def power(name, a):
            return name if a == 1 else f"{name}^{{{a}}}"

        out = []
        for exps, c in self._display_order():
            num, den = self._factors(exps)
            sign = "-" if c < 0 else ("+" if out else "")
            mag = abs(c)
            num_s = " ".join(power(v, a) for v, a in num)
            if den:
                den_s = " ".join(power(v, a) for v, a in den)
                body = ("" if mag == 1 else str(mag)) + f"\\frac{{{num_s or 1}}}{{{den_s}}}"
            elif num:
                body = ("" if mag == 1 else str(mag)) + num_s
            else:
                body = str(mag)
            out.append(sign + body)
        return "".join(out)

    def to_plain(self) -> str:
        """Plain-text rendering, e.g. ``1 - y_1*x_1^-1``; display only."""
        if not self._terms:
            return "0"
        out = []
        for exps, c in self._display_order():
            num, den = self._factors(exps)
            factors = [v if a == 1 else f"{v}^{a}" for v, a in num]
            factors += [f"{v}^-{a}" for v, a in den]
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if not out:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)


def _check_var(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise IndexOutOfRange(f"variable index {i} outside 1..{n}")


def _check_index(i: int, n: int) -> None:
    if not 1 <= i <= n - 1:
        raise IndexOutOfRange(f"s_{i} is not defined in rank {n}")


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def negate(f: LaurentPoly) -> LaurentPoly:
    return -f


def equals(f: LaurentPoly, g: LaurentPoly) -> bool:
    if f.n != g.n:
        raise RankMismatch(f"ambient ranks differ: {f.n} vs {g.n}")
    return f == g


def swap_x(f: LaurentPoly, i: int) -> LaurentPoly:
    """s_i f: exchange x_i and x_{i+1}."""
    _check_index(i, f.n)
    a = i - 1
    out = {}
    for e, c in f.items():
        le = list(e)
        le[a], le[a + 1] = le[a + 1], le[a]
        out[tuple(le)] = c
    return LaurentPoly._raw(f.n, out)


def divided_difference(f: LaurentPoly, i: int) -> LaurentPoly:
    """
    (f - s_i f) / (x_i - x_{i+1}), computed monomial by monomial:
    x_i^a x_{i+1}^b maps to sum_{k=b}^{a-1} x_i^k x_{i+1}^{a+b-1-k} when a > b,
    to minus the same sum with a, b exchanged when a < b, and to 0 when a == b.
    """
    _check_index(i, f.n)
    a_pos = i - 1
    acc: dict[Exps, int] = {}
    get = acc.get
    for e, c in f.items():
        a, b = e[a_pos], e[a_pos + 1]
        if a == b:
            continue
        if a > b:
            lo, hi, sign = b, a, c
        else:
            lo, hi, sign = a, b, -c
        le = list(e)
        for k in range(lo, hi):
            le[a_pos] = k
            le[a_pos + 1] = a + b - 1 - k
            t = tuple(le)
            acc[t] = get(t, 0) + sign
    return LaurentPoly._raw(f.n, {e: c for e, c in acc.items() if c})


def isobaric_pi(f: LaurentPoly, i: int) -> LaurentPoly:
    """pi_i f = d_i(x_i f)."""
    _check_index(i, f.n)
    return divided_difference(f * LaurentPoly.x(i, f.n), i)


def substitute_x_by_y_perm(f: LaurentPoly, v) -> LaurentPoly:
    """Replace every x_i by y_{v(i)}; the result involves no x variable."""
    n = f.n
    if v.n != n:
        raise RankMismatch(f"permutation rank {v.n} does not match ambient rank {n}")
    targets = [n + val - 1 for val in v.word]
    zeros = [0] * n
    acc: dict[Exps, int] = {}
    get = acc.get
    for e, c in f.items():
        ys = list(e[n:])
        for k in range(n):
            if e[k]:
                ys[targets[k] - n] += e[k]
        t = tuple(zeros + ys)
        acc[t] = get(t, 0) + c
    return LaurentPoly._raw(n, {e: c for e, c in acc.items() if c})
