"""Published classification data, transcribed as fixtures.

``known_table(c2)`` holds the positive minimal Horrocks monads known to have a
stable cohomology bundle for c2 <= 10.  ``classify(c2)`` overlays these rows
onto the candidate pipeline: EXISTS verdicts come only from here (or from a
verified explicit presentation), never from the pipeline itself.
"""
from __future__ import annotations

from dataclasses import dataclass

from .candidates import (Candidate, MonadShape, Status, Verdict, aa1_shape, eliminate,
                         extend_shape, negative_candidates, positive_candidates)
from .cohomology import Spectrum


@dataclass(frozen=True)
class KnownRow:
    spectrum: Spectrum
    a: tuple[int, ...]
    b: tuple[int, ...]
    label: str | None = None  # M_i for the c2 <= 8 table
    r: int | None = None
    construction: str = ""
    base: str | None = None
    uv: tuple[int, int] | None = None
    blue: bool = False

    @property
    def shape(self) -> MonadShape:
        return MonadShape(self.a, self.b, self.spectrum)

    def verdict(self) -> Verdict:
        if self.blue:
            return eliminate(self.shape)
        if self.base is not None:
            u, v = self.uv
            return Verdict.exists("extension", base=self.base, r=self.r, u=u, v=v)
        # rows of the c2 <= 8 table carry no construction column
        return Verdict.exists(_METHODS.get(self.construction, "tabulated"))


_METHODS = {
    "disjoint union of 6 conics": "hartshorne",
    "Ein": "ein",
    "Explicit computation": "explicit_matrix",
    "C_{3,3}": "serre_curve",
    "P_2 u P_3 joined by one point": "serre_curve",
    "P_2 u P_3 joined by two points": "serre_curve",
    "P_5": "serre_curve",
}


def _S(*m) -> Spectrum:
    return Spectrum(m)


_SMALL = [
    KnownRow(_S(1), (1,), (0, 0), "M1"),
    KnownRow(_S(2), (1, 1), (0, 0, 0), "M2"),
    KnownRow(_S(1, 1), (2,), (1, 0), "M3"),
    KnownRow(_S(3), (1, 1, 1), (0, 0, 0, 0), "M4"),
    KnownRow(_S(2, 1), (2,), (0, 0), "M5"),
    KnownRow(_S(2, 1), (2, 1), (1, 0, 0), "M6"),
    KnownRow(_S(1, 2), (2, 2), (1, 1, 1), "M7"),
    KnownRow(_S(1, 1, 1), (3,), (2, 0), "M8"),
    KnownRow(_S(4), (1, 1, 1, 1), (0, 0, 0, 0, 0), "M9"),
    KnownRow(_S(3, 1), (2, 1), (0, 0, 0), "M10"),
    KnownRow(_S(3, 1), (2, 1, 1), (1, 0, 0, 0), "M11"),
    KnownRow(_S(2, 2), (2, 2), (1, 1, 0), "M12"),
    KnownRow(_S(2, 2), (2, 2, 1), (1, 1, 1, 0), "M13"),
    KnownRow(_S(2, 1, 1), (3, 1), (2, 0, 0), "M14"),
    KnownRow(_S(1, 2, 1), (3,), (1, 1), "M15"),
    KnownRow(_S(1, 2, 1), (3, 2), (2, 1, 1), "M16"),
    KnownRow(_S(1, 1, 1, 1), (4,), (3, 0), "M17"),
]


def _ext(spec, a, b, r, base, u, v):
    return KnownRow(spec, a, b, r=r, construction=f"{base}, ({u},{v})", base=base, uv=(u, v))


X10 = {
    1: _S(5), 2: _S(4, 1), 3: _S(3, 2), 4: _S(3, 1, 1), 5: _S(2, 3), 6: _S(2, 2, 1),
    7: _S(2, 1, 1, 1), 8: _S(1, 4), 9: _S(1, 3, 1), 10: _S(1, 2, 2), 11: _S(1, 2, 1, 1),
    12: _S(1, 1, 1, 1, 1),
}

_C2_10 = [
    KnownRow(X10[1], (1, 1, 1, 1, 1), (0, 0, 0, 0, 0, 0), r=1, construction="disjoint union of 6 conics"),
    _ext(X10[2], (2, 1, 1), (0, 0, 0, 0), 3, "M2", 3, 2),
    _ext(X10[2], (2, 1, 1, 1), (1, 0, 0, 0, 0), 3, "M4", 4, 1),
    _ext(X10[3], (2, 2), (1, 0, 0), 3, "M3", 3, 2),
    _ext(X10[3], (2, 2, 1), (1, 1, 0, 0), 3, "M6", 4, 1),
    _ext(X10[3], (2, 2, 1, 1), (1, 1, 1, 0, 0), 2, "M13", 2, 1),
    KnownRow(X10[4], (3,), (1, 0), r=2, construction="Ein"),
    _ext(X10[4], (3, 1), (1, 1, 0), 2, "M15", 2, 1),
    KnownRow(X10[4], (3, 1, 1), (1, 1, 1, 0), blue=True),
    _ext(X10[4], (3, 1, 1), (2, 0, 0, 0), 4, "M2", 6, 1),
    _ext(X10[5], (2, 2, 2), (1, 1, 1, 1), 3, "M7", 4, 1),
    KnownRow(X10[6], (3,), (1, 0), r=2, construction="C_{3,3}"),
    _ext(X10[6], (3, 1), (1, 1, 0), 2, "M15", 2, 1),
    _ext(X10[6], (3, 2), (2, 1, 0), 3, "M8", 4, 1),
    _ext(X10[6], (3, 2, 1), (2, 1, 1, 0), 2, "M16", 2, 1),
    KnownRow(X10[7], (4, 1), (2, 2, 0), blue=True),
    _ext(X10[7], (4, 1), (3, 0, 0), 2, "M17", 2, 1),
    _ext(X10[9], (3, 2), (2, 1, 0), 3, "M8", 4, 1),
    KnownRow(X10[9], (3, 2, 2), (2, 2, 1, 0), r=1, construction="P_2 u P_3 joined by one point"),
    KnownRow(X10[10], (3, 3), (2, 2, 1), r=1, construction="Explicit computation"),
    KnownRow(X10[10], (3, 3, 2), (2, 2, 2, 1), r=1, construction="P_2 u P_3 joined by two points"),
    KnownRow(X10[11], (4, 2), (3, 1, 1), r=1, construction="Explicit computation"),
    KnownRow(X10[12], (5,), (4, 0), r=1, construction="P_5"),
]


def known_table(c2: int) -> list[KnownRow]:
    """Fixture rows of positive minimal monads with stable cohomology for c2 in {2,...,10}."""
    if c2 == 10:
        return list(_C2_10)
    if c2 in (2, 4, 6, 8):
        return [row for row in _SMALL if row.spectrum.c2 == c2]
    raise ValueError(f"no tabulated monads for c2={c2}; available: 2, 4, 6, 8, 10")


def base_monad(label: str) -> MonadShape:
    for row in _SMALL:
        if row.label == label:
            return row.shape
    raise KeyError(label)


def extension_rows() -> list[KnownRow]:
    return [row for row in _C2_10 if row.base is not None]


def check_extension(row: KnownRow) -> MonadShape:
    """Rebuild a c2 = 10 row from its base monad and (r, u, v)."""
    u, v = row.uv
    return extend_shape(base_monad(row.base), row.r, u, v)


def classify(c2: int) -> list[Candidate]:
    """Positive candidates with elimination verdicts, upgraded to EXISTS from the fixtures."""
    known = {}
    if c2 in (2, 4, 6, 8, 10):
        known = {(row.spectrum, row.a, row.b): row for row in known_table(c2) if not row.blue}
    out = []
    for cand in positive_candidates(c2):
        if cand.shape is None:
            out.append(cand)
            continue
        verdict = eliminate(cand.shape)
        row = known.get((cand.spectrum, cand.shape.a, cand.shape.b))
        if row is not None and verdict.status is Status.OPEN:
            verdict = row.verdict()
        out.append(Candidate(cand.spectrum, cand.rho, cand.a, cand.shape, verdict))
    return out


def classify_negative(c2: int) -> list[Candidate]:
    """Negative candidates with verdicts; the spectrum (1, n-1) shape is known to exist."""
    n = c2 // 2
    aa1 = aa1_shape(n) if n >= 4 else None
    out = []
    for cand in negative_candidates(c2):
        verdict = eliminate(cand.shape)
        if (aa1 is not None and verdict.status is Status.OPEN
                and (cand.spectrum, cand.shape.a, cand.shape.b) == (aa1.spectrum, aa1.a, aa1.b)):
            verdict = Verdict.exists("aa1", n=n)
        out.append(Candidate(cand.spectrum, cand.rho, cand.a, cand.shape, verdict))
    return out


# generic spectrum of the Ein component containing V(3; 1, 0) (fixture, not computed)
GENERIC_SPECTRUM = {((3,), (1, 0)): X10[6]}

# dimensions of the known components of B(-1, 10): Hartshorne, two Ein components
COMPONENT_DIMS = {"M1": 75, "M2": 80, "M3": 112}
