"""Admissible spectra for stable rank 2 bundles with c1 = -1."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .cohomology import Spectrum


def _check_c2(c2: int) -> int:
    if not isinstance(c2, int) or c2 < 2 or c2 % 2:
        raise ValueError(f"c2 must be an even integer >= 2 (c1 = -1 forces even c2), got {c2!r}")
    return c2 // 2


def _tail_ok(mult: tuple[int, ...]) -> bool:
    for j in range(1, len(mult)):
        if mult[j] == 1:
            return all(s == 1 for s in mult[j:])
    return True


def _compositions(n: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in _compositions(n - first):
            yield (first,) + rest


def spectrum_order_key(spec: Spectrum) -> tuple:
    """Sort key: larger keys come first in the standard listing."""
    return (spec.mult[0], spec.values)


def enumerate_spectra(c2: int) -> list[Spectrum]:
    """All spectra with the given c2, grouped by s(0) and listed in decreasing order."""
    n = _check_c2(c2)
    specs = [Spectrum(m) for m in _compositions(n) if _tail_ok(m)]
    specs.sort(key=spectrum_order_key, reverse=True)
    return specs


@dataclass
class SpectrumCheck:
    spectrum: Spectrum | None
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_spectrum(values: Iterable[int]) -> SpectrumCheck:
    """Check a raw multiset against symmetry, connectedness and the single-occurrence rule."""
    counts = Counter(int(v) for v in values)
    violations = []
    if not counts:
        return SpectrumCheck(None, ["empty: a spectrum has c2 > 0 entries"])

    asym = sorted(v for v in counts if counts[v] != counts.get(-v - 1, 0))
    if asym:
        violations.append(f"C.1 symmetry: multiplicity of k differs from that of -k-1 for k in {asym}")

    lo, hi = min(counts), max(counts)
    gaps = [v for v in range(lo, hi + 1) if v not in counts]
    if gaps:
        violations.append(f"C.2 connectedness: missing values {gaps}")

    k = max(-v for v in counts)
    # the largest u <= -2 occurring once governs the whole interval [-k, u]
    once = [u for u in range(-k, -1) if counts.get(u) == 1]
    if once:
        u = max(once)
        bad = [v for v in range(-k, u + 1) if counts.get(v, 0) != 1]
        if bad:
            violations.append(
                f"C.3: {u} occurs once, so every value in [{-k}, {u}] must occur once; "
                f"fails for {bad}")

    if violations:
        return SpectrumCheck(None, violations)
    K = hi
    return SpectrumCheck(Spectrum(tuple(counts[j] for j in range(K + 1))))


# Labels used in the literature tables; c2 = 8 does not follow the listing order.
_STANDARD_LABELS: dict[int, dict[tuple[int, ...], int]] = {
    2: {(1,): 1},
    4: {(2,): 1, (1, 1): 2},
    6: {(3,): 1, (2, 1): 2, (1, 2): 3, (1, 1, 1): 4},
    8: {(4,): 1, (3, 1): 2, (2, 2): 3, (2, 1, 1): 4, (1, 2, 1): 5, (1, 3): 6, (1, 1, 1, 1): 7},
}


def spectrum_index(spec: Spectrum) -> int:
    """1-based label index of a spectrum.

    Uses the published label where one exists (c2 <= 8) and the position in
    :func:`enumerate_spectra` otherwise.
    """
    known = _STANDARD_LABELS.get(spec.c2)
    if known is not None:
        return known[spec.mult]
    return enumerate_spectra(spec.c2).index(spec) + 1


def spectrum_label(spec: Spectrum) -> str:
    return f"X{spectrum_index(spec)}^{spec.c2}"


def spectrum_by_label(index: int, c2: int) -> Spectrum:
    for spec in enumerate_spectra(c2):
        if spectrum_index(spec) == index:
            return spec
    raise KeyError(f"no spectrum X{index}^{c2}")
