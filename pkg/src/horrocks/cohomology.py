"""Dimension counts for line-bundle cohomology on P^3 and P^1.

Everything here is exact integer arithmetic.  The spectrum dictionary
translates a spectrum into h^1/h^2 of the negative twists of a stable
rank 2 bundle with c1 = -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence


@lru_cache(maxsize=None)
def h0_p3(d: int) -> int:
    """h^0(P^3, O(d)), the number of degree-d monomials in four variables."""
    return comb(d + 3, 3) if d >= 0 else 0


def binom_nonneg(n: int, k: int) -> int:
    """Binomial coefficient that vanishes whenever the top is negative."""
    if n < 0 or k < 0 or k > n:
        return 0
    return comb(n, k)


def hom_dim(src: Iterable[int], dst: Iterable[int]) -> int:
    """dim Hom(sum O(s), sum O(t)) = sum over pairs of h^0(O(t - s))."""
    dst = list(dst)
    return sum(h0_p3(t - s) for s in src for t in dst)


def euler_char_p3(d: int) -> int:
    """chi(O(d)) on P^3 as the cubic polynomial (d+1)(d+2)(d+3)/6, valid for every d."""
    return (d + 1) * (d + 2) * (d + 3) // 6


def euler_char_rank2(c2: int, l: int) -> int:
    """chi(E(l)) for a rank 2 bundle on P^3 with c1 = -1 and the given c2.

    Computed formally from Chern roots a, b with a + b = -1 and ab = c2, so the
    result is a cubic in l with integer values.
    """
    m = l + 2
    p1, p2, p3 = -1, 1 - 2 * c2, -1 + 3 * c2
    sum_u = p1 + 2 * m
    sum_u3 = p3 + 3 * m * p2 + 3 * m * m * p1 + 2 * m ** 3
    num = sum_u3 - sum_u
    assert num % 6 == 0
    return num // 6


@dataclass(frozen=True, order=False)
class Spectrum:
    """Spectrum of a stable rank 2 bundle with c1 = -1, stored as multiplicities.

    ``mult[k]`` is the multiplicity of the value k (and, by symmetry, of -k-1)
    for 0 <= k <= K.
    """

    mult: tuple[int, ...]

    def __post_init__(self):
        mult = tuple(int(s) for s in self.mult)
        object.__setattr__(self, "mult", mult)
        if not mult:
            raise ValueError("spectrum needs at least s(0)")
        if any(s < 1 for s in mult):
            raise ValueError(f"multiplicities must be positive: {mult}")
        for j in range(1, len(mult)):
            if mult[j] == 1 and any(s != 1 for s in mult[j:]):
                raise ValueError(f"tail rule violated at s({j}) = 1: {mult}")

    @classmethod
    def parse(cls, text: str) -> "Spectrum":
        """Parse the CLI syntax ``"1,2,1,1"`` (multiplicities s(0), s(1), ...)."""
        parts = [p for p in text.replace(" ", "").split(",") if p]
        return cls(tuple(int(p) for p in parts))

    @property
    def K(self) -> int:
        return len(self.mult) - 1

    @property
    def c2(self) -> int:
        return 2 * sum(self.mult)

    def s(self, k: int) -> int:
        """Multiplicity of k for k >= 0, read through the symmetry for k < 0."""
        if k < 0:
            k = -k - 1
        return self.mult[k] if k < len(self.mult) else 0

    @property
    def values(self) -> tuple[int, ...]:
        """Expanded multiset in non-descending order."""
        out: list[int] = []
        for k in range(self.K, -1, -1):
            out.extend([-k - 1] * self.mult[k])
        for k in range(self.K + 1):
            out.extend([k] * self.mult[k])
        return tuple(out)

    def notation(self) -> str:
        """Compact r_j notation, e.g. ``r0^2 r1^2 r2``."""
        parts = []
        for k, s in enumerate(self.mult):
            parts.append(f"r{k}" if s == 1 else f"r{k}^{s}")
        return " ".join(parts)

    def __str__(self) -> str:
        return ",".join(str(s) for s in self.mult)


@dataclass(frozen=True)
class CurveUnionSpec:
    """Two plane curves of degrees d1, d2 meeting in r collinear points, twisted by m."""

    d1: int
    d2: int
    r: int
    m: int

    def __post_init__(self):
        if self.d1 < 1 or self.d2 < 1:
            raise ValueError("curve degrees must be at least 1")
        if self.r < 0:
            raise ValueError("number of intersection points must be non-negative")


def spectrum_h1(spec: Spectrum, l: int) -> int:
    """h^1(E(l)) for l <= -1, read off from the spectrum as h^0 on P^1."""
    if l >= 0:
        raise ValueError(f"spectrum determines h^1(E(l)) only for l <= -1, got l={l}")
    return sum(max(k + l + 2, 0) for k in spec.values)


def spectrum_h2(spec: Spectrum, l: int) -> int:
    """h^2(E(l)) for l >= -2, read off from the spectrum as h^1 on P^1."""
    if l < -2:
        raise ValueError(f"spectrum determines h^2(E(l)) only for l >= -2, got l={l}")
    return sum(max(-k - l - 2, 0) for k in spec.values)


def plane_curve_omega_dim(d: int, m: int) -> int:
    """h^0(omega_C(m)) for a plane curve C of degree d (omega_C = O_C(d - 3))."""
    return binom_nonneg(m + d - 1, 2) - binom_nonneg(m - 1, 2)


def connecting_rank(r: int, m: int) -> int:
    """Rank of the connecting map H^0(omega_S(m)) -> H^1(omega_X1(m)) + H^1(omega_X2(m))."""
    if m > 0:
        return 0
    if 2 - r <= m:
        return 1 - m
    return r


def plane_union_omega_dim(spec: CurveUnionSpec) -> int:
    """h^0(omega_X(m)) for X the union of two plane curves meeting in r collinear points."""
    if spec.r == 0:
        raise ValueError("r = 0: use the sum of the two components for a disjoint union")
    return (
        plane_curve_omega_dim(spec.d1, spec.m)
        + plane_curve_omega_dim(spec.d2, spec.m)
        + spec.r
        - connecting_rank(spec.r, spec.m)
    )


def quadric_h0(a: int, b: int) -> int:
    """h^0(O_S(a, b)) on a smooth quadric surface S = P^1 x P^1."""
    if a < 0 or b < 0:
        return 0
    return (a + 1) * (b + 1)


def rational_quadric_omega_dim(n: int, m: int) -> int:
    """h^0(omega_X(m)) for X a divisor of type (1, n-1) on a smooth quadric.

    Uses 0 -> O_S(-2,-2) -> O_S(-1,n-3) -> omega_X -> 0, whose H^1 term
    vanishes for m <= 2.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if m > 2:
        raise ValueError("only valid for m <= 2")
    return quadric_h0(m - 1, m + n - 3) - quadric_h0(m - 2, m - 2)


def degrees_c1_c2(b_degrees: Sequence[int], a_degrees: Sequence[int],
                  c_degrees: Sequence[int]) -> tuple[int, int, int]:
    """(rank, c1, c2) of the cohomology of a monad C -> B -> A of line-bundle sums."""
    rank = len(b_degrees) - len(a_degrees) - len(c_degrees)
    c1 = sum(b_degrees) - sum(a_degrees) - sum(c_degrees)
    p2 = (sum(d * d for d in b_degrees) - sum(d * d for d in a_degrees)
          - sum(d * d for d in c_degrees))
    return rank, c1, (c1 * c1 - p2) // 2
