"""Exact rank of integer/rational matrices, over Q or F_p."""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def _integerize(rows: Sequence[Sequence]) -> list[list[int]]:
    out = []
    for row in rows:
        if all(isinstance(c, int) or (isinstance(c, Fraction) and c.denominator == 1) for c in row):
            out.append([int(c) for c in row])
            continue
        fr = [Fraction(c) for c in row]
        den = 1
        for c in fr:
            den = den * c.denominator // gcd(den, c.denominator)
        out.append([int(c * den) for c in fr])
    return out


def rank_q(rows: Sequence[Sequence]) -> int:
    """Rank over Q by fraction-free elimination, dividing each row by its content."""
    m = [row for row in _integerize(rows) if any(row)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pr = m[r]
        pc = pr[c]
        for i in range(r + 1, len(m)):
            row = m[i]
            f = row[c]
            if not f:
                continue
            g = gcd(pc, f)
            a, b = pc // g, f // g
            new = [a * x - b * y for x, y in zip(row, pr)]
            cont = 0
            for x in new:
                if x:
                    cont = gcd(cont, x)
                    if cont == 1:
                        break
            if cont > 1:
                new = [x // cont for x in new]
            m[i] = new
        r += 1
        if r == len(m):
            break
    return r


def rank_mod_p(rows: Sequence[Sequence], p: int) -> int:
    """Rank over F_p by Gaussian elimination."""
    m = []
    for row in rows:
        m.append([(c.numerator * pow(c.denominator, -1, p)) % p if isinstance(c, Fraction)
                  else int(c) % p for c in row])
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], -1, p)
        pr = [x * inv % p for x in m[r]]
        m[r] = pr
        for i in range(r + 1, nrows):
            f = m[i][c]
            if f:
                row = m[i]
                for j in range(c, ncols):
                    row[j] = (row[j] - f * pr[j]) % p
        r += 1
        if r == nrows:
            break
    return r


def rank(rows: Sequence[Sequence], p: int | None = None) -> int:
    return rank_q(rows) if p is None else rank_mod_p(rows, p)
