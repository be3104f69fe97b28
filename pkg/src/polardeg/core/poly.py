"""Exact homogeneous polynomials with dense exponent vectors."""

from __future__ import annotations

import random
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Exponent = tuple[int, ...]
Terms = dict[Exponent, Fraction]


def _clean(terms: Mapping[Exponent, Fraction]) -> Terms:
    return {e: Fraction(c) for e, c in terms.items() if c != 0}


def poly_add(a: Mapping, b: Mapping, sign: int = 1) -> Terms:
    out = dict(a)
    for e, c in b.items():
        out[e] = out.get(e, 0) + sign * c
    return _clean(out)


def poly_mul(a: Mapping, b: Mapping) -> Terms:
    out: dict[Exponent, Fraction] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return _clean(out)


def poly_pow(a: Mapping, k: int, nvars: int) -> Terms:
    out: Terms = {(0,) * nvars: Fraction(1)}
    for _ in range(k):
        out = poly_mul(out, a)
    return out


class HomogeneousPoly:
    """A nonzero homogeneous polynomial in ``nvars`` variables ``x0..x{nvars-1}``.

    Instances are immutable; ``terms`` maps exponent tuples to nonzero
    :class:`~fractions.Fraction` coefficients.
    """

    __slots__ = ("nvars", "degree", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], object]):
        cleaned = {tuple(int(k) for k in e): Fraction(c) for e, c in terms.items()}
        cleaned = {e: c for e, c in cleaned.items() if c != 0}
        if not cleaned:
            raise ValueError("zero polynomial is not a HomogeneousPoly")
        degrees = {sum(e) for e in cleaned}
        if len(degrees) != 1:
            raise ValueError(f"polynomial is not homogeneous (degrees {sorted(degrees)})")
        for e in cleaned:
            if len(e) != nvars or min(e) < 0:
                raise ValueError(f"bad exponent vector {e} for {nvars} variables")
        (deg,) = degrees
        if deg < 1:
            raise ValueError("degree must be at least 1")
        self.nvars = nvars
        self.degree = deg
        self._terms = cleaned
        self._hash = None

    @property
    def terms(self) -> Terms:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __eq__(self, other):
        return (
            isinstance(other, HomogeneousPoly)
            and self.nvars == other.nvars
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __mul__(self, other: "HomogeneousPoly") -> "HomogeneousPoly":
        if other.nvars != self.nvars:
            raise ValueError("variable count mismatch")
        return HomogeneousPoly(self.nvars, poly_mul(self._terms, other._terms))

    def __pow__(self, k: int) -> "HomogeneousPoly":
        if k < 1:
            raise ValueError("exponent must be positive")
        return HomogeneousPoly(self.nvars, poly_pow(self._terms, k, self.nvars))

    def __repr__(self):
        return f"HomogeneousPoly({self})"

    def __str__(self):
        parts = []
        for e in sorted(self._terms, reverse=True):
            c = self._terms[e]
            mono = "*".join(
                f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e) if k
            )
            if c == 1:
                s = mono
            elif c == -1:
                s = "-" + mono
            else:
                s = f"{c}*{mono}"
            parts.append(s)
        return " + ".join(parts).replace("+ -", "- ")

    @classmethod
    def linear(cls, coeffs: Sequence) -> "HomogeneousPoly":
        n = len(coeffs)
        return cls(n, {tuple(int(i == j) for j in range(n)): c for i, c in enumerate(coeffs)})

    @classmethod
    def product(cls, factors: Iterable["HomogeneousPoly"]) -> "HomogeneousPoly":
        it = iter(factors)
        acc = next(it)
        for f in it:
            acc = acc * f
        return acc


def partial_derivative(p: HomogeneousPoly, i: int) -> HomogeneousPoly | None:
    """Formal derivative with respect to ``x_i``; ``None`` stands for zero."""
    if not 0 <= i < p.nvars:
        raise IndexError(f"variable index {i} out of range for {p.nvars} variables")
    out = {}
    for e, c in p.items():
        if e[i]:
            ne = list(e)
            ne[i] -= 1
            out[tuple(ne)] = c * e[i]
    if not out:
        return None
    if p.degree == 1:
        # derivative of a linear form is a constant, which HomogeneousPoly excludes
        raise ValueError("derivative of a linear form is a constant")
    return HomogeneousPoly(p.nvars, out)


def evaluate(p: HomogeneousPoly, point: Sequence):
    """Value of ``p`` at ``point``; exact for rationals, floating for complex input."""
    if len(point) != p.nvars:
        raise ValueError(f"point has length {len(point)}, expected {p.nvars}")
    inexact = any(isinstance(v, (float, complex)) for v in point)
    total = 0
    for e, c in p.items():
        term = complex(c) if inexact else c
        for v, k in zip(point, e):
            if k:
                term = term * v**k
        total = total + term
    return total


# --- univariate helpers for the squarefree test -------------------------------

def _udeg(a: list[Fraction]) -> int:
    return len(a) - 1


def _utrim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _urem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    lb = b[-1]
    while len(a) >= len(b):
        f = a[-1] / lb
        shift = len(a) - len(b)
        for j, bc in enumerate(b):
            a[shift + j] -= f * bc
        a.pop()
        _utrim(a)
    return a


def _ugcd_degree(a: list[Fraction], b: list[Fraction]) -> int:
    a, b = _utrim(list(a)), _utrim(list(b))
    while b:
        a, b = b, _urem(a, b)
    return _udeg(a)


def _restrict_to_line(p: HomogeneousPoly, a: Sequence[int], b: Sequence[int]) -> list[Fraction]:
    """Coefficients (low to high) of ``t -> p(a + t b)``."""
    out = [Fraction(0)] * (p.degree + 1)
    for e, c in p.items():
        acc = [c]
        for ai, bi, k in zip(a, b, e):
            for _ in range(k):
                nxt = [Fraction(0)] * (len(acc) + 1)
                for j, v in enumerate(acc):
                    nxt[j] += v * ai
                    nxt[j + 1] += v * bi
                acc = nxt
        for j, v in enumerate(acc):
            out[j] += v
    return out


def is_reduced(h: HomogeneousPoly, trials: int = 8, seed: int = 0) -> bool:
    """Probabilistic squarefreeness test on random rational lines.

    A line ``t -> a + t b`` with ``h(b) != 0`` keeps every factor of ``h`` at
    full degree, so a repeated factor always survives as a repeated root of
    the restriction. Returns ``True`` as soon as one such line gives a
    squarefree restriction.
    """
    if h is None:
        raise ValueError("zero polynomial")
    if h.degree == 1:
        return True
    rng = random.Random(seed)
    bound = 1 << 16
    for _ in range(trials):
        a = [rng.randint(-bound, bound) for _ in range(h.nvars)]
        b = [rng.randint(-bound, bound) for _ in range(h.nvars)]
        line = _restrict_to_line(h, a, b)
        if line[-1] == 0:
            continue
        deriv = [j * c for j, c in enumerate(line)][1:]
        if _ugcd_degree(line, deriv) == 0:
            return True
    return False


# --- text syntax -------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+(?:/\d+)?)|x(\d+)|([-+*^()]))")


class PolySyntaxError(ValueError):
    pass


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos = 0
    tokens = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character at {pos}: {text[pos:pos + 8]!r}")
        num, var, op = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif var is not None:
            tokens.append(("var", var))
        else:
            tokens.append(("op", op))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens, nvars):
        self.toks = tokens
        self.i = 0
        self.nvars = nvars

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if tok[0] is None or (value is not None and tok[1] != value):
            raise PolySyntaxError(f"expected {value or 'token'} at token {self.i}")
        self.i += 1
        return tok

    def const(self, c):
        return {(0,) * self.nvars: Fraction(c)}

    def expr(self):
        kind, val = self.peek()
        sign = 1
        if (kind, val) in (("op", "-"), ("op", "+")):
            self.take()
            sign = -1 if val == "-" else 1
        acc = self.term()
        if sign < 0:
            acc = poly_mul(acc, self.const(-1))
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            acc = poly_add(acc, rhs, 1 if op == "+" else -1)
        return acc

    def term(self):
        acc = self.power()
        while True:
            kind, val = self.peek()
            if (kind, val) == ("op", "*"):
                self.take()
                acc = poly_mul(acc, self.power())
            elif kind in ("num", "var") or (kind, val) == ("op", "("):
                acc = poly_mul(acc, self.power())  # implicit product, e.g. 3x0
            else:
                return acc

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, val = self.take()
            if kind != "num" or "/" in val:
                raise PolySyntaxError("exponent must be a nonnegative integer")
            base = poly_pow(base, int(val), self.nvars)
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return self.const(Fraction(val))
        if kind == "var":
            e = [0] * self.nvars
            e[int(val)] = 1
            return {tuple(e): Fraction(1)}
        if val == "(":
            inner = self.expr()
            self.take(")")
            return inner
        if val == "-":
            return poly_mul(self.const(-1), self.power())
        raise PolySyntaxError(f"unexpected {val!r}")


def parse_poly(text: str, nvars: int | None = None) -> HomogeneousPoly:
    """Parse expressions such as ``"x0^3 + x1^3 + 3/2*x0*x1*x2"``.

    ``nvars`` defaults to one more than the largest variable index used.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise PolySyntaxError("empty polynomial")
    used = [int(v) for k, v in tokens if k == "var"]
    top = max(used) + 1 if used else 1
    if nvars is None:
        nvars = top
    elif nvars < top:
        raise PolySyntaxError(f"variable x{top - 1} exceeds nvars={nvars}")
    parser = _Parser(tokens, nvars)
    terms = parser.expr()
    if parser.i != len(tokens):
        raise PolySyntaxError(f"trailing input at token {parser.i}")
    return HomogeneousPoly(nvars, terms)
