"""Golden data: positive-root tables and the orbit tables for G2, F4, E6.

Data files live in the package ``data`` directory (override with the
``NILORBITS_DATA_DIR`` environment variable).  Orbit rows are stored exactly as
printed, in display (Bourbaki) node order:

    label | diagram labels | representative root indices | node lengths | edges

Edges are written ``i-j:lines`` with a ``d`` suffix for dotted lines, where
i and j are root indices.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

from nilorbits.chevalley import LieAlgebra, build_algebra
from nilorbits.orbits import (
    NotCompletableError,
    RepDiagram,
    WeightedDiagram,
    complete_sl2,
    h_from_diagram,
    rep_diagram,
    root_sum_element,
    weighted_dynkin,
)
from nilorbits.roots import display_to_gap

TABLE_KINDS = ("G2", "F4", "E6")
DATA_ENV = "NILORBITS_DATA_DIR"


def data_dir() -> Path:
    override = os.environ.get(DATA_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("nilorbits") / "data"))


def _read(name: str) -> tuple[dict, list[str]]:
    path = data_dir() / name
    header: dict[str, str] = {}
    body = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, _, rest = line.partition(" ")
        if key in ("format", "type", "gap_from_display") and not body:
            header[key] = rest.strip()
        else:
            body.append(line)
    if header.get("format") != "1":
        raise ValueError(f"{path}: unsupported format {header.get('format')!r}")
    return header, body


def load_root_table(kind: str) -> list[tuple[int, ...]]:
    """Positive roots as printed, converted to GAP simple-root coordinates."""
    header, body = _read(f"roots_{kind}.txt")
    perm = tuple(int(v) for v in header["gap_from_display"].split())
    return [display_to_gap(tuple(int(v) for v in line.split()), perm) for line in body]


@dataclass(frozen=True)
class OrbitRecord:
    kind: str
    label: str
    display_labels: tuple[int, ...]
    perm: tuple[int, ...]  # gap_from_display for diagram labels
    rep_roots: tuple[int, ...]
    decorations: RepDiagram

    @property
    def diagram(self) -> WeightedDiagram:
        return WeightedDiagram(display_to_gap(self.display_labels, self.perm))


def _parse_edges(text: str) -> tuple:
    if text.strip() == "-":
        return ()
    out = []
    for tok in text.split():
        pair, _, lines = tok.partition(":")
        dotted = lines.endswith("d")
        i, j = (int(v) for v in pair.split("-"))
        lo, hi = sorted((i, j))
        out.append((lo, hi, int(lines.rstrip("d")), dotted))
    return tuple(sorted(out))


def load_tables(kind: str) -> list[OrbitRecord]:
    if kind not in TABLE_KINDS:
        raise ValueError(f"no orbit table for {kind}; tables exist for {', '.join(TABLE_KINDS)}")
    header, body = _read(f"orbits_{kind}.txt")
    if header.get("type") != kind:
        raise ValueError(f"orbit table type {header.get('type')!r} does not match {kind}")
    perm = tuple(int(v) for v in header["gap_from_display"].split())
    records = []
    for line in body:
        cols = [c.strip() for c in line.split("|")]
        if len(cols) != 5:
            raise ValueError(f"malformed orbit row: {line!r}")
        label, diag, roots, lengths, edges = cols
        rep = tuple(int(v) for v in roots.split())
        lens = lengths.split()
        if len(lens) != len(rep):
            raise ValueError(f"row {label}: {len(rep)} roots but {len(lens)} lengths")
        nodes = tuple((r, x == "L") for r, x in zip(rep, lens))
        records.append(OrbitRecord(kind, label, tuple(int(v) for v in diag.split()), perm, rep,
                                   RepDiagram(nodes, _parse_edges(edges))))
    return records


@dataclass
class RowCheck:
    label: str
    grading: bool
    roundtrip: bool
    decorations: bool
    sl2: bool
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.grading and self.roundtrip and self.decorations and self.sl2


@dataclass
class TableReport:
    kind: str
    rows: list[RowCheck]

    @property
    def passed(self) -> int:
        return sum(r.passed for r in self.rows)

    @property
    def ok(self) -> bool:
        return self.passed == len(self.rows)

    def summary(self) -> str:
        lines = [f"{self.kind}: {self.passed}/{len(self.rows)} rows pass"]
        for r in self.rows:
            flags = " ".join(f"{n}={'ok' if v else 'FAIL'}" for n, v in
                             (("grading", r.grading), ("diagram", r.roundtrip),
                              ("decorations", r.decorations), ("sl2", r.sl2)))
            lines.append(f"  {r.label:12} {flags}" + ("  " + "; ".join(r.notes) if r.notes else ""))
        return "\n".join(lines)


def verify_tables(kind: str, L: LieAlgebra | None = None) -> TableReport:
    """Check every table row: eta = 2 on the representative roots, the weighted
    diagram of the representative, its decorated diagram, and sl2 completion."""
    L = L or build_algebra(kind)
    rs = L.rs
    rows = []
    for rec in load_tables(kind):
        notes: list[str] = []
        D = rec.diagram
        h = h_from_diagram(L, D)
        labels = L.labels_of(h)
        valid = all(1 <= k <= rs.num_positive for k in rec.rep_roots)
        grading = valid and all(L.eigenvalue(L.x(k), labels) == 2 for k in rec.rep_roots)
        if not grading:
            notes.append("representative root outside g(2)")
        e = root_sum_element(L, rec.rep_roots) if valid else L.zero()
        try:
            got = weighted_dynkin(L, e)
            roundtrip = got == D
            if not roundtrip:
                notes.append(f"diagram {got.display(kind)} != {rec.display_labels}")
        except (NotCompletableError, ValueError) as exc:
            roundtrip = False
            notes.append(str(exc))
        deco = rep_diagram(rs, rec.rep_roots) if valid else None
        decorations = deco == rec.decorations
        if not decorations:
            notes.append(f"decorated diagram {deco} differs")
        try:
            sl2 = grading and complete_sl2(L, h, e).check()
        except NotCompletableError as exc:
            sl2 = False
            notes.append(str(exc))
        rows.append(RowCheck(rec.label, grading, roundtrip, decorations, sl2, notes))
    return TableReport(kind, rows)
