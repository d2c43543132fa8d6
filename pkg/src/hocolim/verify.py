"""Seeded sweep of the structural properties, used by ``verify-props``.

Output is a pure function of (seed, trials): no timings, no addresses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import corpus
from .bar_cobar import bar_simplicial, cobar_cosimplicial, fat_realization, hocolim, hocolim_map, holim, realization
from .chain import homology, kunneth_rhs, tensor
from .dold_kan import mbar_cosimplicial, moore, normalization_composite, normalized_inclusion
from .exact_linalg import is_unimodular
from .random_models import padded_diagram, random_complex, random_levelwise_qiso
from .simplicial_set import normalized_chains
from .totalization import DegreeWindow, is_quasi_iso_on, tot_map, tot_prod, tot_sum


@dataclass
class PropertyResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def record(self, ok: bool, label: str):
        self.total += 1
        if ok:
            self.passed += 1
        else:
            self.failures.append(label)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        tail = "" if self.ok else "  failing: " + ", ".join(self.failures[:5])
        return f"{status} {self.name} {self.passed}/{self.total}{tail}"


def check_kunneth(rng: np.random.Generator, trials: int) -> PropertyResult:
    res = PropertyResult("kunneth")
    for kname, K in corpus.simplicial_sets().items():
        NK = normalized_chains(K)
        for t in range(trials):
            C, _ = random_complex(rng, -2, 3, 3)
            T = tensor(NK, C)
            ok = all(homology(T, n) == kunneth_rhs(K, C, n) for n in range(-3, 3 + K.top_dimension() + 2))
            res.record(ok, f"{kname}#{t}")
    return res


def check_normalization(level: int = 4) -> PropertyResult:
    res = PropertyResult("normalization N -> M -> M/D")
    w = DegreeWindow(0, level - 1)
    for name, X in corpus.simplicial_objects(level).items():
        uni = all(is_unimodular(m) for m in normalization_composite(X).values())
        qi = is_quasi_iso_on(tot_map(normalized_inclusion(X), w), w)
        res.record(uni and qi, name)
    return res


def check_totalization(rng: np.random.Generator, trials: int) -> PropertyResult:
    res = PropertyResult("Tot(+) preserves levelwise quasi-isomorphisms")
    w = DegreeWindow(-3, 5)
    for t in range(trials):
        f = random_levelwise_qiso(rng)
        res.record(is_quasi_iso_on(tot_map(f, w), w), f"#{t}")
    return res


def check_fat_vs_thin(level: int = 5) -> PropertyResult:
    res = PropertyResult("fat vs thin realization")
    w = DegreeWindow(0, level - 1)
    for name, X in corpus.simplicial_objects(level).items():
        ok = all(homology(fat_realization(X, w), n) == homology(realization(X, w), n) for n in w)
        res.record(ok, name)
    return res


def hocolim_cases() -> list[tuple[str, object, DegreeWindow]]:
    return [(name, F, DegreeWindow(0, 3)) for name, F in corpus.diagrams().items()]


def holim_cases() -> list[tuple[str, object, DegreeWindow]]:
    return [
        (name, F, DegreeWindow(-3, 2))
        for name, F in corpus.diagrams().items()
        if name in ("const cospan", "const span", "const arrow", "const [2]", "fiber x2", "arrow moore", "suspension")
    ]


def check_window_stability() -> PropertyResult:
    """Recompute with one more bar or cobar level and compare, independently of
    the certification built into hocolim and holim."""
    res = PropertyResult("window stability")
    for name, F, w in hocolim_cases():
        r = hocolim(F.index, F, w, certify=False)
        X = bar_simplicial(F.index, F, r.bar_levels_used + 1, check=False)
        C = tot_sum(moore(X), w)
        res.record(all(homology(C, n) == r.homology[n] for n in w), f"hocolim {name}")
    for name, F, w in holim_cases():
        r = holim(F.index, F, w, certify=False)
        X = cobar_cosimplicial(F.index, F, r.bar_levels_used + 1, check=False)
        C = tot_prod(mbar_cosimplicial(X), w)
        res.record(all(homology(C, n) == r.homology[n] for n in w), f"holim {name}")
    return res


def check_hocolim_invariance() -> PropertyResult:
    res = PropertyResult("hocolim invariance")
    w = DegreeWindow(0, 3)
    for name, F in corpus.diagrams().items():
        _, eta = padded_diagram(F)
        res.record(is_quasi_iso_on(hocolim_map(F.index, eta, w), w), name)
    return res


def run_properties(seed: int = 7, trials: int = 25) -> list[PropertyResult]:
    rng = np.random.default_rng(seed)
    return [
        check_kunneth(rng, trials),
        check_normalization(),
        check_totalization(rng, 2 * trials),
        check_fat_vs_thin(),
        check_window_stability(),
        check_hocolim_invariance(),
    ]
