"""Sparse polynomials in x, y, z, w over the rationals or a prime field.

Coefficients are ``Fraction`` over Q (``p is None``) and ints in [0, p) over
F_p.  Terms are kept in a dict keyed by exponent tuples; zero coefficients are
never stored.  Monomial order is degrevlex with x > y > z > w.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Mapping

VARIABLES = ("x", "y", "z", "w")
NVARS = 4

Monomial = tuple  # exponent tuple of length NVARS


def degrevlex_key(e: Monomial) -> tuple:
    """Sort key: larger key means larger monomial in degrevlex."""
    return (sum(e),) + tuple(-x for x in reversed(e))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def coerce(c, p: int | None):
    """Bring a coefficient into the field: Q when p is None, else F_p."""
    if p is None:
        return Fraction(c)
    if isinstance(c, Fraction):
        return c.numerator * pow(c.denominator, -1, p) % p
    return int(c) % p


class HomPoly:
    """Immutable sparse polynomial; usually homogeneous, but not required to be."""

    __slots__ = ("terms", "p")

    def __init__(self, terms: Mapping[Monomial, object] | None = None, p: int | None = None):
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != NVARS or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e}")
            c = coerce(c, p)
            if c:
                clean[e] = c
        self.terms = clean
        self.p = p

    @classmethod
    def _raw(cls, terms: dict, p: int | None) -> "HomPoly":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.p = p
        return obj

    # constructors

    @classmethod
    def zero(cls, p: int | None = None) -> "HomPoly":
        return cls._raw({}, p)

    @classmethod
    def constant(cls, c, p: int | None = None) -> "HomPoly":
        return cls({(0,) * NVARS: c}, p)

    @classmethod
    def var(cls, i: int | str, p: int | None = None) -> "HomPoly":
        if isinstance(i, str):
            i = VARIABLES.index(i)
        e = [0] * NVARS
        e[i] = 1
        return cls({tuple(e): 1}, p)

    @classmethod
    def parse(cls, text: str, p: int | None = None) -> "HomPoly":
        """Parse strings such as ``"y^6 - x*z*w^4"``, ``"xzw^4"`` or ``"-3/2 x^2 w"``."""
        s = text.replace(" ", "").replace("**", "^")
        if s in ("", "0"):
            return cls.zero(p)
        if s[0] not in "+-":
            s = "+" + s
        terms: dict = {}
        for sign, body in re.findall(r"([+-])([^+-]+)", s):
            body = body.replace("*", "")
            tokens = re.findall(r"(\d+(?:/\d+)?)|([xyzw])(?:\^(\d+))?", body)
            if "".join(n + v + (f"^{k}" if k else "") for n, v, k in tokens) != body:
                raise ValueError(f"cannot parse term {body!r} in {text!r}")
            coeff = Fraction(1)
            e = [0] * NVARS
            for num, var, exp in tokens:
                if num:
                    coeff *= Fraction(num)
                else:
                    e[VARIABLES.index(var)] += int(exp or 1)
            if sign == "-":
                coeff = -coeff
            key = tuple(e)
            terms[key] = terms.get(key, 0) + coeff
        return cls(terms, p)

    @classmethod
    def from_json(cls, data: Iterable[Mapping], p: int | None = None) -> "HomPoly":
        terms: dict = {}
        for t in data:
            e = tuple(t["e"])
            terms[e] = terms.get(e, 0) + Fraction(str(t["c"]))
        return cls(terms, p)

    def to_json(self) -> list[dict]:
        out = []
        for e in sorted(self.terms, key=degrevlex_key, reverse=True):
            c = self.terms[e]
            out.append({"c": str(c), "e": list(e)})
        return out

    # queries

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    @property
    def degree(self) -> int | None:
        """Total degree, or None for the zero polynomial."""
        return max(self.degrees()) if self.terms else None

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def lm(self) -> Monomial:
        return max(self.terms, key=degrevlex_key)

    def lc(self):
        return self.terms[self.lm()]

    def sorted_terms(self) -> list[tuple[Monomial, object]]:
        return sorted(self.terms.items(), key=lambda t: degrevlex_key(t[0]), reverse=True)

    def coefficient(self, e: Monomial):
        return self.terms.get(tuple(e), coerce(0, self.p))

    def reduce(self, p: int | None) -> "HomPoly":
        """Image of a rational polynomial in another field (Q -> F_p)."""
        return HomPoly(self.terms, p)

    def evaluate(self, point) -> object:
        total = 0
        for e, c in self.terms.items():
            v = c
            for xi, ei in zip(point, e):
                v = v * xi ** ei
            total += v
        return total

    # arithmetic

    def _check(self, other: "HomPoly"):
        if self.p != other.p:
            raise ValueError(f"field mismatch: {self.p} vs {other.p}")

    def _lift(self, other) -> "HomPoly":
        if isinstance(other, HomPoly):
            self._check(other)
            return other
        return HomPoly.constant(other, self.p)

    def __add__(self, other) -> "HomPoly":
        other = self._lift(other)
        out = dict(self.terms)
        p = self.p
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if p is not None:
                v %= p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return HomPoly._raw(out, p)

    __radd__ = __add__

    def __neg__(self) -> "HomPoly":
        p = self.p
        if p is None:
            return HomPoly._raw({e: -c for e, c in self.terms.items()}, p)
        return HomPoly._raw({e: (-c) % p for e, c in self.terms.items()}, p)

    def __sub__(self, other) -> "HomPoly":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "HomPoly":
        return self._lift(other) - self

    def __mul__(self, other) -> "HomPoly":
        p = self.p
        if not isinstance(other, HomPoly):
            c = coerce(other, p)
            if not c:
                return HomPoly.zero(p)
            if p is None:
                return HomPoly._raw({e: v * c for e, v in self.terms.items()}, p)
            return HomPoly._raw({e: v * c % p for e, v in self.terms.items()}, p)
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                out[e] = out.get(e, 0) + c1 * c2
        if p is None:
            out = {e: c for e, c in out.items() if c}
        else:
            out = {e: c % p for e, c in out.items() if c % p}
        return HomPoly._raw(out, p)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "HomPoly":
        out = HomPoly.constant(1, self.p)
        for _ in range(n):
            out = out * self
        return out

    def monic(self) -> "HomPoly":
        lc = self.lc()
        inv = Fraction(1) / lc if self.p is None else pow(lc, -1, self.p)
        return self * inv

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomPoly):
            if other == 0:
                return not self.terms
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.p, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"HomPoly({str(self)!r}{'' if self.p is None else f', p={self.p}'})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(VARIABLES, e) if k)
            neg = self.p is None and c < 0
            a = -c if neg else c
            if mono and a == 1:
                body = mono
            elif mono:
                body = f"{a}*{mono}"
            else:
                body = str(a)
            pieces.append(("-" if neg else "+", body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def monomials_of_degree(d: int) -> list[Monomial]:
    """All exponent vectors of total degree d, in decreasing degrevlex order."""
    return list(_monomials(d))


_MONO_CACHE: dict[int, tuple] = {}


def _monomials(d: int) -> tuple:
    cached = _MONO_CACHE.get(d)
    if cached is not None:
        return cached
    out = []
    if d >= 0:
        for a in range(d, -1, -1):
            for b in range(d - a, -1, -1):
                for c in range(d - a - b, -1, -1):
                    out.append((a, b, c, d - a - b - c))
        out.sort(key=degrevlex_key, reverse=True)
    res = tuple(out)
    _MONO_CACHE[d] = res
    return res


def det(matrix: list[list[HomPoly]]) -> HomPoly:
    """Determinant by cofactor expansion along the first row (small sizes only)."""
    n = len(matrix)
    if n == 1:
        return matrix[0][0]
    if n == 2:
        return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]
    total = None
    for j in range(n):
        entry = matrix[0][j]
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else HomPoly.zero(matrix[0][0].p)


def minors(matrix: list[list[HomPoly]], k: int) -> list[HomPoly]:
    """All nonzero k x k minors."""
    from itertools import combinations

    rows, cols = len(matrix), len(matrix[0]) if matrix else 0
    if k < 1 or k > min(rows, cols):
        raise ValueError(f"k={k} is not possible for a {rows}x{cols} matrix")
    out = []
    for r in combinations(range(rows), k):
        for c in combinations(range(cols), k):
            m = det([[matrix[i][j] for j in c] for i in r])
            if m:
                out.append(m)
    return out
