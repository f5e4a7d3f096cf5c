"""Candidate minimal Horrocks monads from a spectrum, and elimination rules.

A shape (a; b) stands for the monad

    sum O(-a_i - 1)  ->  sum (O(b_j) + O(-b_j - 1))  ->  sum O(a_i)

with len(b) = len(a) + 1 and c2 = sum a_i(a_i+1) - sum b_j(b_j+1).
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .cohomology import Spectrum
from .spectra import _check_c2, enumerate_spectra


def c2_of(a, b) -> int:
    return sum(x * (x + 1) for x in a) - sum(y * (y + 1) for y in b)


@dataclass(frozen=True)
class MonadShape:
    a: tuple[int, ...]
    b: tuple[int, ...]
    spectrum: Spectrum | None = field(default=None, compare=False)

    def __post_init__(self):
        a = tuple(sorted((int(x) for x in self.a), reverse=True))
        b = tuple(sorted((int(y) for y in self.b), reverse=True))
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        if not a:
            raise ValueError("a must be non-empty")
        if len(b) != len(a) + 1:
            raise ValueError(f"len(b) must be len(a) + 1, got a={a}, b={b}")
        if any(y < 0 for y in b):
            raise ValueError(f"b entries must be non-negative, got {b}")

    @property
    def c2(self) -> int:
        return c2_of(self.a, self.b)

    @property
    def a_degrees(self) -> tuple[int, ...]:
        return self.a

    @property
    def b_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self.b + tuple(-y - 1 for y in self.b), reverse=True))

    @property
    def c_degrees(self) -> tuple[int, ...]:
        return tuple(-x - 1 for x in self.a)

    @property
    def positive(self) -> bool:
        return min(self.a) > 0

    def key(self) -> tuple:
        return (self.a, self.b)

    def with_spectrum(self, spectrum: Spectrum | None) -> "MonadShape":
        return MonadShape(self.a, self.b, spectrum)

    def __str__(self) -> str:
        return f"a={self.a}, b={self.b}"


@dataclass(frozen=True)
class RhoProfile:
    """Number of minimal generators rho(d) of the Rao module in each degree d."""

    counts: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, counts: dict[int, int]) -> "RhoProfile":
        return cls(tuple(sorted((d, c) for d, c in counts.items() if c)))

    def __getitem__(self, d: int) -> int:
        return dict(self.counts).get(d, 0)

    def a_tuple(self) -> tuple[int, ...]:
        """Twists of the right-hand term: a generator in degree d gives O(-d)."""
        out = []
        for d, c in self.counts:
            out.extend([-d] * c)
        return tuple(sorted(out, reverse=True))

    def __str__(self) -> str:
        return ", ".join(f"rho({d})={c}" for d, c in sorted(self.counts))


class Rule(str, enum.Enum):
    R1 = "R1"
    R2_NONEXIST = "R2_NONEXIST"
    R2_UNSTABLE = "R2_UNSTABLE"
    R3 = "R3"
    R4 = "R4"
    R5 = "R5"


class Status(str, enum.Enum):
    OPEN = "OPEN"
    NO_SOLUTION = "NO_SOLUTION"
    ELIMINATED = "ELIMINATED"
    EXISTS = "EXISTS"


@dataclass(frozen=True)
class Verdict:
    status: Status
    rule: Rule | None = None
    method: str | None = None
    params: tuple[tuple[str, object], ...] = ()

    @classmethod
    def open(cls) -> "Verdict":
        return cls(Status.OPEN)

    @classmethod
    def eliminated(cls, rule: Rule) -> "Verdict":
        return cls(Status.ELIMINATED, rule=rule)

    @classmethod
    def exists(cls, method: str, **params) -> "Verdict":
        return cls(Status.EXISTS, method=method, params=tuple(params.items()))

    def to_json(self) -> dict:
        out: dict = {"status": self.status.value}
        if self.rule is not None:
            out["rule"] = self.rule.value
        if self.method is not None:
            out["method"] = self.method
            out.update(dict(self.params))
        return out

    def __str__(self) -> str:
        if self.status is Status.ELIMINATED:
            return f"ELIMINATED({self.rule.value})"
        if self.status is Status.EXISTS:
            if self.params:
                args = ",".join(str(v) for _, v in self.params)
                return f"EXISTS({self.method}:{args})"
            return f"EXISTS({self.method})"
        return self.status.value


@dataclass(frozen=True)
class Candidate:
    spectrum: Spectrum
    rho: RhoProfile
    a: tuple[int, ...]
    shape: MonadShape | None  # None means the b-equation has no solution
    verdict: Verdict

    @property
    def b(self) -> tuple[int, ...] | None:
        return None if self.shape is None else self.shape.b

    def to_json(self) -> dict:
        return {
            "a": list(self.a),
            "b": None if self.shape is None else list(self.shape.b),
            "spectrum": list(self.spectrum.mult),
            "verdict": self.verdict.to_json(),
        }


# generator bounds

def rho_bounds(spec: Spectrum) -> tuple[dict[int, tuple[int, int]], int]:
    """Intervals for rho(-i-1), 0 <= i < K, and the exact value rho(-K-1) = s(K)."""
    K = spec.K
    s = spec.mult
    intervals = {}
    for i in range(K):
        tail = sum(s[i + 1:])
        intervals[i] = (max(s[i] - 2 * tail, 0), s[i] - 1)
    return intervals, s[K]


def negative_rho_bounds(spec: Spectrum, max_i: int | None = None) -> dict[int, int]:
    """Upper bounds rho(i) <= max(s(-i-1) - 2, 0) for generators in degrees i >= 1."""
    top = spec.K + 1 if max_i is None else max_i
    return {i: max(spec.s(-i - 1) - 2, 0) for i in range(1, top + 1)}


def solve_b(target: int, count: int) -> list[tuple[int, ...]]:
    """All b_1 >= ... >= b_count >= 0 with sum b_j(b_j + 1) = target."""
    out: list[tuple[int, ...]] = []

    def rec(remaining: int, slots: int, cap: int, prefix: tuple[int, ...]):
        if slots == 0:
            if remaining == 0:
                out.append(prefix)
            return
        # largest value the next entry can take
        top = cap
        while top * (top + 1) > remaining:
            top -= 1
        for v in range(top, -1, -1):
            if v * (v + 1) * slots < remaining:
                break
            rec(remaining - v * (v + 1), slots - 1, v, prefix + (v,))

    if target < 0 or count < 1:
        return out
    cap = 0
    while (cap + 1) * (cap + 2) <= target:
        cap += 1
    rec(target, count, cap, ())
    return out


def _positive_profiles(spec: Spectrum) -> Iterator[dict[int, int]]:
    intervals, top = rho_bounds(spec)
    idx = sorted(intervals)
    ranges = [range(intervals[i][0], intervals[i][1] + 1) for i in idx]
    for choice in itertools.product(*ranges):
        counts = {-spec.K - 1: top}
        for i, c in zip(idx, choice):
            if c:
                counts[-i - 1] = c
        yield counts


def _shapes_for(spec: Spectrum, counts: dict[int, int]) -> list[Candidate]:
    rho = RhoProfile.from_dict(counts)
    a = rho.a_tuple()
    target = sum(x * (x + 1) for x in a) - spec.c2
    sols = solve_b(target, len(a) + 1)
    if not sols:
        return [Candidate(spec, rho, a, None, Verdict(Status.NO_SOLUTION))]
    out = []
    for b in sols:
        shape = MonadShape(a, b, spec)
        assert shape.c2 == spec.c2
        out.append(Candidate(spec, rho, a, shape, Verdict.open()))
    return out


def _sort_key(c: Candidate) -> tuple:
    return (c.a, c.b or ())


def positive_candidates(c2: int) -> list[Candidate]:
    """Every positive candidate shape (or no-solution record) for every spectrum with this c2.

    Verdicts are left OPEN; run :func:`eliminate` or :func:`classify` on top.
    """
    _check_c2(c2)
    out = []
    for spec in enumerate_spectra(c2):
        cands = []
        for counts in _positive_profiles(spec):
            cands.extend(_shapes_for(spec, counts))
        cands.sort(key=_sort_key)
        out.extend(cands)
    return out


def negative_candidates(c2: int, spectrum: Spectrum | None = None) -> list[Candidate]:
    """Negative candidates: at least one generator in a degree i >= 1, none in degree 0.

    Shapes whose largest b reaches the largest a are discarded (rule R1), as
    in the published lists.
    """
    _check_c2(c2)
    specs = enumerate_spectra(c2) if spectrum is None else [spectrum]
    out = []
    for spec in specs:
        nb = negative_rho_bounds(spec)
        idx = [i for i in sorted(nb) if nb[i] > 0]
        if not idx:
            continue
        cands = []
        for pos in _positive_profiles(spec):
            for choice in itertools.product(*(range(nb[i] + 1) for i in idx)):
                if not any(choice):
                    continue
                counts = dict(pos)
                for i, c in zip(idx, choice):
                    if c:
                        counts[i] = c
                for cand in _shapes_for(spec, counts):
                    if cand.shape is None or eliminate(cand.shape).rule is Rule.R1:
                        continue
                    cands.append(cand)
        cands.sort(key=_sort_key)
        out.extend(cands)
    return out


# elimination

def _match_r2(a, b) -> Rule | None:
    if len(a) != 4 or len(b) != 5:
        return None
    x, y = a[0], a[3]
    if not (a[0] == a[1] == a[2] and y < x and all(v == y for v in b)):
        return None
    if 6 * y + 1 >= 4 * x:
        return Rule.R2_NONEXIST
    if 6 * y + 1 >= 3 * x:
        return Rule.R2_UNSTABLE
    return None


def _match_r3(a, b) -> bool:
    if len(a) < 2 or len(b) < 2:
        return False
    a2, tail = a[0], a[1:]
    a1 = tail[0]
    if any(x != a1 for x in tail):
        return False
    bb = b[0]
    if b[1] != bb:
        return False
    return a2 >= bb > a1 >= 0 and 2 * bb - a2 >= 0


def eliminate(shape: MonadShape) -> Verdict:
    """First matching elimination rule (R1, R2, R3, R4, R5), else OPEN."""
    a, b = shape.a, shape.b
    if max(b) >= max(a):
        return Verdict.eliminated(Rule.R1)
    r2 = _match_r2(a, b)
    if r2 is not None:
        return Verdict.eliminated(r2)
    if _match_r3(a, b):
        return Verdict.eliminated(Rule.R3)
    if a == (3, 1, 1) and b == (1, 1, 1, 0):
        return Verdict.eliminated(Rule.R4)
    if a == (2, 2, 2, -1) and b == (1, 1, 1, 1, 0):
        return Verdict.eliminated(Rule.R5)
    return Verdict.open()


def with_verdicts(cands: list[Candidate]) -> list[Candidate]:
    out = []
    for c in cands:
        if c.shape is None:
            out.append(c)
        else:
            out.append(Candidate(c.spectrum, c.rho, c.a, c.shape, eliminate(c.shape)))
    return out


# shape constructions

def extend_shape(base: MonadShape, r: int, u: int, v: int) -> MonadShape:
    """Shape obtained by adding a disjoint complete intersection of type (u, v).

    Adds r-1 to a and the pair O(r-1-u) + O(r-1-v) to the middle term, i.e. the
    new b entry r-1-v; c2 grows by u*v.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if u + v != 2 * r - 1:
        raise ValueError(f"need u + v = 2r - 1, got u={u}, v={v}, r={r}")
    if v > r - 1:
        raise ValueError(f"v={v} > r-1={r - 1} would give a negative b entry")
    if u < v or v < 1:
        raise ValueError("need u >= v >= 1")
    out = MonadShape(base.a + (r - 1,), base.b + (r - 1 - v,))
    assert out.c2 == base.c2 + u * v
    return out


def aa1_shape(n: int) -> MonadShape:
    """Negative shape realizing the spectrum {-2^(n-1), -1, 0, 1^(n-1)}, n >= 4."""
    if n < 4:
        raise ValueError("n must be at least 4")
    return MonadShape((2,) * (n - 1) + (-1,) * (n - 3), (1,) * (2 * n - 3), Spectrum((1, n - 1)))
