"""Whole-algebra runs: enumeration, index certificates, double centralizers.

Every candidate diagram and every orbit gets its own RNG seeded from
(global seed, type, diagram), so results do not depend on how work is split
across processes.  Output lists are sorted before they are returned.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from nilorbits.centralizer import (
    AnalysisConfig,
    DoubleCentralizerResult,
    IndexCertificate,
    centralizer,
    min_double_centralizer,
    verify_elashvili,
)
from nilorbits.chevalley import LieAlgebra, build_algebra
from nilorbits.orbits import (
    OrbitConfig,
    OrbitData,
    Sl2Triple,
    WeightedDiagram,
    all_diagrams,
    check_diagram,
    complete_sl2,
    h_from_diagram,
)
from nilorbits.tables import TABLE_KINDS, load_tables

JOBS_ENV = "NILORBITS_JOBS"


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


def derived_rng(seed: int, *parts) -> random.Random:
    return random.Random(":".join(str(p) for p in (seed,) + parts))


def _labels_key(D: WeightedDiagram) -> str:
    return ",".join(map(str, D.labels))


def _map(fn: Callable, items: Sequence, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as ex:
        return list(ex.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# -- enumeration ------------------------------------------------------------

@dataclass(frozen=True)
class _EnumTask:
    kind: str
    labels: tuple
    seed: int
    config: OrbitConfig


def _enum_worker(task: _EnumTask):
    L = build_algebra(task.kind)
    D = WeightedDiagram(task.labels)
    stats: dict = {}
    res = check_diagram(L, D, derived_rng(task.seed, task.kind, _labels_key(D)), task.config, stats)
    budget_hit = stats.get("exact") == "budget"
    if res is None:
        return task.labels, None, None, budget_hit
    return task.labels, dict(res.e.coeffs), res.trials_used, budget_hit


@dataclass
class Enumeration:
    kind: str
    seed: int
    orbits: list[OrbitData]
    budget_exceeded: int  # candidates where exact mode fell back to random trials


def enumerate_algebra(kind: str, seed: int, config: OrbitConfig | None = None, jobs: int = 1) -> Enumeration:
    config = config or OrbitConfig()
    L = build_algebra(kind)
    tasks = [_EnumTask(kind, D.labels, seed, config) for D in all_diagrams(L.rank)]
    out, skipped = [], 0
    for labels, e, trials, budget_hit in _map(_enum_worker, tasks, jobs):
        skipped += budget_hit
        if e is None:
            continue
        D = WeightedDiagram(labels)
        triple = complete_sl2(L, h_from_diagram(L, D), L.element(e))
        out.append(OrbitData(D, triple, trials))
    out.sort(key=lambda o: o.diagram.labels)
    return Enumeration(kind, seed, out, skipped)


def table_labels(kind: str) -> dict[tuple, str]:
    """GAP-order diagram labels -> orbit label, for types with tables."""
    if kind not in TABLE_KINDS:
        return {}
    return {rec.diagram.labels: rec.label for rec in load_tables(kind)}


# -- per-orbit analyses -------------------------------------------------------

@dataclass(frozen=True)
class _OrbitTask:
    kind: str
    labels: tuple
    e: tuple  # sorted (basis index, coefficient)
    seed: int
    config: AnalysisConfig
    what: str  # "index" | "doublecen"


def _orbit_worker(task: _OrbitTask):
    L = build_algebra(task.kind)
    D = WeightedDiagram(task.labels)
    e = L.element(dict(task.e))
    h = h_from_diagram(L, D)
    K = centralizer(L, e, L.labels_of(h))
    rng = derived_rng(task.seed, task.kind, _labels_key(D), task.what)
    if task.what == "index":
        res = verify_elashvili(L, e, rng, task.config, K=K, diagram=D.labels)
    else:
        res = min_double_centralizer(L, e, rng, task.config, K=None if task.config.degree is not None else K,
                                     h=h, diagram=D.labels)
    res.seed = task.seed
    return res


def _orbit_tasks(enum: Enumeration, config: AnalysisConfig, what: str) -> list[_OrbitTask]:
    return [
        _OrbitTask(enum.kind, o.diagram.labels, tuple(sorted(o.e.coeffs.items())), enum.seed, config, what)
        for o in enum.orbits
    ]


def index_certificates(enum: Enumeration, config: AnalysisConfig | None = None, jobs: int = 1) -> list[IndexCertificate]:
    return _map(_orbit_worker, _orbit_tasks(enum, config or AnalysisConfig(), "index"), jobs)


def double_centralizers(enum: Enumeration, config: AnalysisConfig | None = None,
                        jobs: int = 1) -> list[DoubleCentralizerResult]:
    return _map(_orbit_worker, _orbit_tasks(enum, config or AnalysisConfig(), "doublecen"), jobs)


# -- JSON helpers -------------------------------------------------------------

def element_json(L: LieAlgebra, coeffs: dict) -> list:
    return [[L.basis_name(k), str(Fraction(c))] for k, c in sorted(coeffs.items())]


def orbit_json(kind: str, o: OrbitData, label: str | None) -> dict:
    L = o.e.algebra
    return {
        "kind": kind,
        "label": label,
        "diagram": list(o.diagram.display(kind)),
        "diagram_gap": list(o.diagram.labels),
        "e": element_json(L, o.triple.e.coeffs),
        "f": element_json(L, o.triple.f.coeffs),
        "h": element_json(L, o.triple.h.coeffs),
        "trials_used": o.trials_used,
    }


def element_from_json(L: LieAlgebra, items: Iterable) -> dict:
    names = {L.basis_name(k): k for k in range(L.dim)}
    return {names[n]: Fraction(c) for n, c in items}


def recheck_orbit(d: dict) -> bool:
    """Re-verify an orbit record by bracket arithmetic alone."""
    L = build_algebra(d["kind"])
    D = WeightedDiagram(tuple(d["diagram_gap"]))
    t = Sl2Triple(
        f=L.element(element_from_json(L, d["f"])),
        h=L.element(element_from_json(L, d["h"])),
        e=L.element(element_from_json(L, d["e"])),
    )
    return t.check() and not t.e.is_zero() and t.h == h_from_diagram(L, D)
