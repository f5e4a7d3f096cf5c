"""Explicit monad presentations C --alpha--> B --beta--> A and their verification.

Sections of the cohomology bundle E = ker(beta)/im(alpha) are read off from the
induced maps on graded pieces:

    h0(E(l)) = dim ker H0(beta(l)) - h0(C(l))
    h1(E(l)) = dim coker H0(beta(l))

both valid for every l because sums of line bundles on P^3 have no H^1 or H^2.
Serre duality together with E^* = E(1) gives h2(E(l)) = h1(E(-l-3)) and
h3(E(l)) = h0(E(-l-3)), which closes the Euler characteristic check.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from ..cohomology import Spectrum, degrees_c1_c2, euler_char_rank2, h0_p3, spectrum_h1, spectrum_h2
from .groebner import BudgetExceeded, groebner_basis, has_pure_powers
from .linalg import rank
from .poly import VARIABLES, HomPoly, minors, monomials_of_degree

DEFAULT_PRIME = 32003
BACKUP_PRIME = 65537


class Inconclusive(Exception):
    """A Groebner test could not decide (bad prime or budget exhausted)."""


class MalformedMonad(ValueError):
    """The presentation file or matrices are inconsistent with the stated degrees."""


Matrix = list[list[HomPoly]]


@dataclass(frozen=True)
class MonadPresentation:
    c_degrees: tuple[int, ...]
    b_degrees: tuple[int, ...]
    a_degrees: tuple[int, ...]
    alpha: tuple[tuple[HomPoly, ...], ...]  # |B| x |C|
    beta: tuple[tuple[HomPoly, ...], ...]   # |A| x |B|
    name: str = field(default="", compare=False)

    @classmethod
    def from_json(cls, data: dict, name: str = "") -> "MonadPresentation":
        try:
            if list(data.get("variables", VARIABLES)) != list(VARIABLES):
                raise MalformedMonad(f"variables must be {list(VARIABLES)}")
            c = tuple(int(d) for d in data["cDegrees"])
            b = tuple(int(d) for d in data["bDegrees"])
            a = tuple(int(d) for d in data["aDegrees"])
            alpha = tuple(tuple(HomPoly.from_json(e) for e in row) for row in data["alpha"])
            beta = tuple(tuple(HomPoly.from_json(e) for e in row) for row in data["beta"])
        except MalformedMonad:
            raise
        except (KeyError, TypeError, ValueError, ArithmeticError) as exc:
            raise MalformedMonad(f"cannot read monad: {exc}") from exc
        return cls(c, b, a, alpha, beta, name)

    @classmethod
    def load(cls, path: str | Path) -> "MonadPresentation":
        path = Path(path)
        try:
            data = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise MalformedMonad(str(exc)) from exc
        if not isinstance(data, dict):
            raise MalformedMonad("top level must be an object")
        return cls.from_json(data, name=path.stem)

    def to_json(self) -> dict:
        return {
            "variables": list(VARIABLES),
            "cDegrees": list(self.c_degrees),
            "bDegrees": list(self.b_degrees),
            "aDegrees": list(self.a_degrees),
            "alpha": [[f.to_json() for f in row] for row in self.alpha],
            "beta": [[f.to_json() for f in row] for row in self.beta],
        }

    def matrix(self, which: str, p: int | None = None) -> Matrix:
        m = {"alpha": self.alpha, "beta": self.beta}[which]
        return [[f if p is None else f.reduce(p) for f in row] for row in m]

    def replace_entry(self, which: str, i: int, j: int, poly: HomPoly) -> "MonadPresentation":
        rows = [list(r) for r in getattr(self, which)]
        rows[i][j] = poly
        kw = {which: tuple(tuple(r) for r in rows)}
        return MonadPresentation(**{**self.__dict__, **kw})

    @property
    def invariants(self) -> tuple[int, int, int]:
        """(rank, c1, c2) of the cohomology bundle, from the degrees alone."""
        return degrees_c1_c2(self.b_degrees, self.a_degrees, self.c_degrees)


def validate(pres: MonadPresentation) -> list[str]:
    """Degree, shape, minimality and middle-term symmetry problems (empty when clean)."""
    problems = []
    nc, nb, na = len(pres.c_degrees), len(pres.b_degrees), len(pres.a_degrees)
    if len(pres.alpha) != nb or any(len(r) != nc for r in pres.alpha):
        problems.append(f"alpha must be {nb}x{nc}")
    if len(pres.beta) != na or any(len(r) != nb for r in pres.beta):
        problems.append(f"beta must be {na}x{nb}")
    if problems:
        return problems
    for name, mat, rows, cols in (("alpha", pres.alpha, pres.b_degrees, pres.c_degrees),
                                  ("beta", pres.beta, pres.a_degrees, pres.b_degrees)):
        for i, row in enumerate(mat):
            for j, f in enumerate(row):
                if not f:
                    continue
                need = rows[i] - cols[j]
                if f.degrees() != {need}:
                    problems.append(f"{name}[{i}][{j}] has degrees {sorted(f.degrees())}, needs {need}")
                elif need <= 0:
                    problems.append(f"{name}[{i}][{j}] is a nonzero constant (not minimal)")
    b = sorted(pres.b_degrees)
    if b != sorted(-d - 1 for d in b):
        problems.append("bDegrees not closed under d -> -d-1")
    return problems


def compose_is_zero(pres: MonadPresentation) -> bool:
    """beta * alpha == 0 in exact rational arithmetic."""
    nb = len(pres.b_degrees)
    if len(pres.alpha) != nb or any(len(r) != nb for r in pres.beta):
        raise MalformedMonad("alpha/beta dimensions do not compose")
    for brow in pres.beta:
        for j in range(len(pres.c_degrees)):
            acc = HomPoly.zero()
            for k in range(nb):
                if brow[k] and pres.alpha[k][j]:
                    acc = acc + brow[k] * pres.alpha[k][j]
            if acc:
                return False
    return True


def degeneracy_locus_empty(matrix: Sequence[Sequence[HomPoly]], k: int,
                           p: int = DEFAULT_PRIME, *, q_pair_budget: int = 2000) -> bool:
    """True iff the k x k minors of ``matrix`` have no common zero in P^3.

    The Groebner basis is computed over F_p.  A finite quotient there certifies
    emptiness over Q too.  When F_p says "not empty" the answer is confirmed over
    Q; if that computation runs past ``q_pair_budget`` S-pairs the result is
    :class:`Inconclusive`.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if k != min(rows, cols) or k < 1:
        raise ValueError(f"k must be min(rows, cols) = {min(rows, cols)}, got {k}")
    polys = minors([list(r) for r in matrix], k)
    if not polys:
        return False
    fields = {f.p for f in polys}
    if fields - {None, p}:
        raise ValueError(f"matrix is over F_{fields - {None, p}}, not F_{p}")
    G = groebner_basis([f.reduce(p) for f in polys], p, stop=has_pure_powers)
    if has_pure_powers([g.lm() for g in G]):
        return True
    if fields != {None}:
        raise Inconclusive(f"locus looks non-empty mod {p}; no rational entries to confirm it")
    try:
        G = groebner_basis(polys, None, max_pairs=q_pair_budget, stop=has_pure_powers)
    except BudgetExceeded as exc:
        raise Inconclusive(f"locus looks non-empty mod {p}; rational check: {exc}") from exc
    if has_pure_powers([g.lm() for g in G]):
        raise Inconclusive(f"locus non-empty mod {p} but empty over Q (bad prime)")
    return False


def _section_basis(degrees: Sequence[int], l: int) -> list[tuple[int, tuple]]:
    return [(i, m) for i, d in enumerate(degrees) for m in monomials_of_degree(d + l)]


def section_matrix(pres: MonadPresentation, which: str, l: int,
                   p: int | None = None) -> list[list]:
    """Matrix of H0 of the twisted map in monomial bases (rows = target basis)."""
    if which == "beta":
        src, dst, mat = pres.b_degrees, pres.a_degrees, pres.beta
    elif which == "alpha":
        src, dst, mat = pres.c_degrees, pres.b_degrees, pres.alpha
    else:
        raise ValueError(f"map must be 'alpha' or 'beta', not {which!r}")
    cols = _section_basis(src, l)
    rows = _section_basis(dst, l)
    index = {key: r for r, key in enumerate(rows)}
    out = [[0] * len(cols) for _ in rows]
    for c, (j, mono) in enumerate(cols):
        for i in range(len(dst)):
            f = mat[i][j]
            if not f:
                continue
            if p is not None:
                f = f.reduce(p)
            for e, coef in f.terms.items():
                target = (e[0] + mono[0], e[1] + mono[1], e[2] + mono[2], e[3] + mono[3])
                out[index[(i, target)]][c] = coef
    return out


def _beta_rank(pres: MonadPresentation, l: int, p: int | None) -> tuple[int, int, int]:
    m = section_matrix(pres, "beta", l, p)
    ncols = sum(h0_p3(d + l) for d in pres.b_degrees)
    return len(m), ncols, rank(m, p) if m and ncols else 0


def h0_E(pres: MonadPresentation, l: int, p: int | None = None) -> int:
    nrows, ncols, r = _beta_rank(pres, l, p)
    return ncols - r - sum(h0_p3(c + l) for c in pres.c_degrees)


def h1_E(pres: MonadPresentation, l: int, p: int | None = None) -> int:
    nrows, ncols, r = _beta_rank(pres, l, p)
    return nrows - r


@dataclass
class Check:
    name: str
    status: str  # "pass" | "fail" | "inconclusive"
    detail: str = ""

    def __str__(self) -> str:
        return f"[{self.status.upper():>4}] {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass
class VerificationReport:
    name: str
    checks: list[Check]
    h1_series: dict[int, int]

    @property
    def status(self) -> str:
        states = {c.status for c in self.checks}
        if "inconclusive" in states:
            return "inconclusive"
        return "fail" if "fail" in states else "pass"

    def check(self, name: str) -> Check:
        return next(c for c in self.checks if c.name == name)

    def to_json(self) -> dict:
        return {"name": self.name, "status": self.status,
                "checks": [c.__dict__ for c in self.checks],
                "h1": {str(l): v for l, v in sorted(self.h1_series.items())}}

    def render(self) -> str:
        lines = [f"monad {self.name}: {self.status.upper()}"]
        lines += [f"  {c}" for c in self.checks]
        series = ", ".join(f"{l}:{v}" for l, v in sorted(self.h1_series.items()))
        lines.append(f"  h1(E(l)) {series}")
        return "\n".join(lines)


def _ok(flag: bool) -> str:
    return "pass" if flag else "fail"


def verify_monad(pres: MonadPresentation, claimed: Spectrum | None = None,
                 l_range: Iterable[int] = range(-8, 0), *, p: int = DEFAULT_PRIME,
                 backup: int = BACKUP_PRIME) -> VerificationReport:
    """Run every check on an explicit presentation; see :class:`VerificationReport`."""
    l_range = sorted(l_range)
    checks: list[Check] = []
    problems = validate(pres)
    checks.append(Check("degrees and minimality", _ok(not problems), "; ".join(problems)))
    if problems:
        return VerificationReport(pres.name, checks, {})

    rk, c1, c2 = pres.invariants
    checks.append(Check("rank 2, c1 = -1", _ok((rk, c1) == (2, -1)), f"rank={rk}, c1={c1}, c2={c2}"))
    checks.append(Check("beta*alpha = 0", _ok(compose_is_zero(pres))))

    for which, prime in (("beta", p), ("beta", backup), ("alpha", p), ("alpha", backup)):
        mat = pres.matrix(which)
        k = min(len(mat), len(mat[0]))
        name = f"{which} full rank everywhere (mod {prime})"
        try:
            checks.append(Check(name, _ok(degeneracy_locus_empty(mat, k, prime))))
        except Inconclusive as exc:
            checks.append(Check(name, "inconclusive", str(exc)))

    # every twist the duality check touches
    twists = sorted(set(l_range) | {-l - 3 for l in l_range} | {0})
    h0, h1, disagree = {}, {}, []
    for l in twists:
        ranks = {q: _beta_rank(pres, l, q) for q in (None, p, backup)}
        if len({r[2] for r in ranks.values()}) != 1:
            disagree.append(l)
        nrows, ncols, r = ranks[None]
        h0[l] = ncols - r - sum(h0_p3(c + l) for c in pres.c_degrees)
        h1[l] = nrows - r
    checks.append(Check(f"section ranks agree over Q, {p}, {backup}", _ok(not disagree),
                        f"disagree at l={disagree}" if disagree else ""))
    checks.append(Check("stable: h0(E) = 0", _ok(h0[0] == 0), f"h0={h0[0]}"))

    bad_chi = []
    for l in l_range:
        chi = h0[l] - h1[l] + h1[-l - 3] - h0[-l - 3]
        if chi != euler_char_rank2(c2, l):
            bad_chi.append(l)
    checks.append(Check("Euler characteristic", _ok(not bad_chi),
                        f"mismatch at l={bad_chi}" if bad_chi else ""))

    if claimed is not None:
        bad = []
        if claimed.c2 != c2:
            bad.append(f"c2 {claimed.c2} != {c2}")
        for l in l_range:
            if l <= -1 and h1[l] != spectrum_h1(claimed, l):
                bad.append(f"h1({l})={h1[l]} vs {spectrum_h1(claimed, l)}")
            if l >= -2 and h1[-l - 3] != spectrum_h2(claimed, l):
                bad.append(f"h2({l})={h1[-l - 3]} vs {spectrum_h2(claimed, l)}")
        checks.append(Check(f"spectrum {claimed}", _ok(not bad), "; ".join(bad)))

    series = {l: h1[l] for l in l_range}
    return VerificationReport(pres.name, checks, series)
