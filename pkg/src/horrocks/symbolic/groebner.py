"""Buchberger's algorithm (degrevlex) with the Gebauer-Moeller pair criteria.

Works over Q (``p=None``) or F_p.  Polynomials are handled internally as plain
dicts; the public functions take and return :class:`HomPoly`.
"""
from __future__ import annotations

import heapq
from fractions import Fraction
from typing import Callable, Sequence

from .poly import HomPoly, degrevlex_key, mono_div, mono_divides, mono_lcm


class BudgetExceeded(RuntimeError):
    """Raised when a Groebner computation runs past its pair budget."""


def _heap_key(e):
    # heapq is a min-heap: invert the degrevlex key
    return tuple(-k for k in degrevlex_key(e))


class _Basis:
    """Monic basis elements stored as (leading monomial, tail terms)."""

    def __init__(self, p: int | None):
        self.p = p
        self.polys: list[dict] = []
        self.lms: list[tuple] = []

    def _inv(self, c):
        return Fraction(1) / c if self.p is None else pow(c, -1, self.p)

    def add(self, f: dict) -> int:
        lm = max(f, key=degrevlex_key)
        inv = self._inv(f[lm])
        p = self.p
        if p is None:
            g = {e: c * inv for e, c in f.items()}
        else:
            g = {e: c * inv % p for e, c in f.items()}
        self.polys.append(g)
        self.lms.append(lm)
        return len(self.polys) - 1

    def reduce(self, f: dict, active: Sequence[int], full: bool = True) -> dict:
        """Normal form of f modulo the active basis elements."""
        p = self.p
        f = dict(f)
        heap = [(_heap_key(e), e) for e in f]
        heapq.heapify(heap)
        rem: dict = {}
        lms = [(self.lms[i], self.polys[i]) for i in active]
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            for lm, g in lms:
                if mono_divides(lm, m):
                    q = mono_div(m, lm)
                    for ge, gc in g.items():
                        if ge == lm:
                            continue
                        e = (ge[0] + q[0], ge[1] + q[1], ge[2] + q[2], ge[3] + q[3])
                        old = f.get(e)
                        v = (0 if old is None else old) - c * gc
                        if p is not None:
                            v %= p
                        if v:
                            if old is None:
                                heapq.heappush(heap, (_heap_key(e), e))
                            f[e] = v
                        elif old is not None:
                            del f[e]
                    break
            else:
                rem[m] = c
                if not full:
                    rem.update(f)
                    return rem
        return rem

    def spoly(self, i: int, j: int) -> dict:
        p = self.p
        L = mono_lcm(self.lms[i], self.lms[j])
        out: dict = {}
        for idx, sign in ((i, 1), (j, -1)):
            q = mono_div(L, self.lms[idx])
            for e, c in self.polys[idx].items():
                e2 = (e[0] + q[0], e[1] + q[1], e[2] + q[2], e[3] + q[3])
                v = out.get(e2, 0) + sign * c
                if p is not None:
                    v %= p
                if v:
                    out[e2] = v
                else:
                    out.pop(e2, None)
        return out


def _coprime(a, b) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def _pair_entry(basis: _Basis, i: int, j: int, counter: int):
    L = mono_lcm(basis.lms[i], basis.lms[j])
    return (sum(L), _heap_key(L), counter, i, j, L)


def groebner_basis(polys: Sequence[HomPoly], p: int | None = None, *,
                   max_pairs: int | None = None,
                   stop: Callable[[list[tuple]], bool] | None = None,
                   reduced: bool = True) -> list[HomPoly]:
    """Groebner basis of the ideal generated by ``polys`` over Q or F_p.

    ``stop`` is called with the current leading monomials after each new basis
    element; returning True ends the computation early (the result is then a
    subset of the ideal, not necessarily a Groebner basis).
    """
    if not polys:
        return []
    basis = _Basis(p)
    gens = [f.reduce(p).terms if f.p != p else f.terms for f in polys]
    gens = [g for g in gens if g]
    if not gens:
        return []

    active: list[int] = []
    pairs: list = []
    live: set[tuple[int, int]] = set()
    counter = 0
    pairs_done = 0

    def update(h: int):
        nonlocal counter, pairs, active
        lm_h = basis.lms[h]
        lcm_h = {g: mono_lcm(lm_h, basis.lms[g]) for g in active}
        # new pairs (h, g), pruned by the chain criterion among themselves
        C = list(active)
        D: list[int] = []
        while C:
            g1 = C.pop(0)
            if _coprime(lm_h, basis.lms[g1]):
                D.append(g1)
                continue
            L1 = lcm_h[g1]
            if any(mono_divides(lcm_h[g2], L1) for g2 in C) or \
               any(mono_divides(lcm_h[g2], L1) for g2 in D):
                continue
            D.append(g1)
        E = [g for g in D if not _coprime(lm_h, basis.lms[g])]
        # old pairs made redundant by h
        dead = set()
        for (i, j) in live:
            L = mono_lcm(basis.lms[i], basis.lms[j])
            if (mono_divides(lm_h, L) and mono_lcm(basis.lms[i], lm_h) != L
                    and mono_lcm(lm_h, basis.lms[j]) != L):
                dead.add((i, j))
        live.difference_update(dead)
        for g in E:
            counter += 1
            key = (g, h)
            live.add(key)
            heapq.heappush(pairs, _pair_entry(basis, g, h, counter))
        active = [g for g in active if not mono_divides(lm_h, basis.lms[g])] + [h]

    for f in gens:
        r = basis.reduce(f, active) if active else f
        if r:
            update(basis.add(r))
            if stop is not None and stop([basis.lms[i] for i in active]):
                return _finish(basis, active, reduced=False)

    while pairs:
        _, _, _, i, j, _ = heapq.heappop(pairs)
        if (i, j) not in live:
            continue
        live.discard((i, j))
        pairs_done += 1
        if max_pairs is not None and pairs_done > max_pairs:
            raise BudgetExceeded(f"more than {max_pairs} S-pairs")
        s = basis.spoly(i, j)
        if not s:
            continue
        r = basis.reduce(s, active)
        if r:
            update(basis.add(r))
            if stop is not None and stop([basis.lms[k] for k in active]):
                return _finish(basis, active, reduced=False)

    return _finish(basis, active, reduced=reduced)


def _finish(basis: _Basis, active: list[int], reduced: bool) -> list[HomPoly]:
    p = basis.p
    if not reduced:
        return [HomPoly._raw(dict(basis.polys[i]), p) for i in active]
    # minimal basis: drop elements whose leading monomial is divisible by another's
    minimal = []
    for i in active:
        if not any(j != i and mono_divides(basis.lms[j], basis.lms[i]) and
                   (basis.lms[j] != basis.lms[i] or j < i) for j in active):
            minimal.append(i)
    out = []
    for i in minimal:
        others = [j for j in minimal if j != i]
        lm = basis.lms[i]
        tail = {e: c for e, c in basis.polys[i].items() if e != lm}
        tail = basis.reduce(tail, others) if others else tail
        tail[lm] = basis.polys[i][lm]
        out.append(HomPoly._raw(tail, p))
    out.sort(key=lambda f: degrevlex_key(f.lm()))
    return out


def normal_form(f: HomPoly, G: Sequence[HomPoly]) -> HomPoly:
    """Remainder of f on division by G (full reduction)."""
    p = f.p
    basis = _Basis(p)
    idx = [basis.add(g.terms) for g in G if g]
    return HomPoly._raw(basis.reduce(f.terms, idx), p)


def s_polynomial(f: HomPoly, g: HomPoly) -> HomPoly:
    basis = _Basis(f.p)
    i, j = basis.add(f.terms), basis.add(g.terms)
    return HomPoly._raw(basis.spoly(i, j), f.p)


def leading_monomials(G: Sequence[HomPoly]) -> list[tuple]:
    return [g.lm() for g in G if g]


def has_pure_powers(lms: Sequence[tuple], nvars: int = 4) -> bool:
    """True when every variable has a pure power among the leading monomials."""
    found = [False] * nvars
    for e in lms:
        if not any(e):
            return True  # unit ideal
        nz = [k for k, x in enumerate(e) if x]
        if len(nz) == 1:
            found[nz[0]] = True
    return all(found)


def is_groebner(G: Sequence[HomPoly]) -> bool:
    """Buchberger's criterion: every S-polynomial reduces to zero."""
    G = [g for g in G if g]
    for a in range(len(G)):
        for b in range(a + 1, len(G)):
            if normal_form(s_polynomial(G[a], G[b]), G):
                return False
    return True
