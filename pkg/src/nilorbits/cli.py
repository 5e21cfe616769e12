"""Command line interface.

    nilorbits roots KIND
    nilorbits orbits KIND [--seed S] [--json] ...
    nilorbits rep KIND 0,1 [--gap-order]
    nilorbits index KIND [--out certs.json]
    nilorbits doublecen KIND [--degree 2]
    nilorbits --recheck certs.json

Exit codes: 0 success, 2 inconclusive certificate, 3 usage error,
4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import secrets
import sys
from typing import Sequence

from nilorbits import linalg
from nilorbits.centralizer import (
    AnalysisConfig,
    DoubleCentralizerResult,
    IndexCertificate,
    recheck_double_centralizer,
    recheck_index,
)
from nilorbits.chevalley import build_algebra
from nilorbits.orbits import (
    InvalidDiagramError,
    OrbitConfig,
    WeightedDiagram,
    find_representative,
)
from nilorbits.pipeline import (
    default_jobs,
    derived_rng,
    double_centralizers,
    enumerate_algebra,
    index_certificates,
    orbit_json,
    recheck_orbit,
    table_labels,
)
from nilorbits.roots import GAP_FROM_DISPLAY, KINDS, build

EXIT_OK, EXIT_INCONCLUSIVE, EXIT_USAGE, EXIT_BUDGET = 0, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _kind(s: str) -> str:
    k = s.upper()
    if k not in KINDS:
        raise argparse.ArgumentTypeError(f"unknown type {s!r}; choose from {', '.join(KINDS)}")
    return k


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="64-bit seed (default: random, always echoed)")
    common.add_argument("--omega-bound", type=int, default=50, help="sample coefficients from {-b..b} minus 0")
    common.add_argument("--trials", type=int, default=25, help="random trials per diagram / orbit")
    common.add_argument("--exact", action="store_true", help="symbolic validity test before random trials")
    common.add_argument("--budget", type=int, default=linalg.DEFAULT_TERM_BUDGET,
                        help="term budget for symbolic elimination")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", help="also write the JSON document to this file")
    common.add_argument("--jobs", type=int, default=None, help="worker processes (default: $NILORBITS_JOBS or 1)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="nilorbits", description="Nilpotent orbits in the exceptional Lie algebras.")
    p.add_argument("--recheck", metavar="FILE", help="re-verify a JSON document written by this tool")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("roots", parents=[common], help="list positive roots")
    s.add_argument("kind", type=_kind)

    s = sub.add_parser("orbits", parents=[common], help="enumerate valid weighted Dynkin diagrams")
    s.add_argument("kind", type=_kind)

    s = sub.add_parser("rep", parents=[common], help="representative and sl2-triple for one diagram")
    s.add_argument("kind", type=_kind)
    s.add_argument("diagram", help="comma-separated labels, display order unless --gap-order")
    s.add_argument("--gap-order", action="store_true", help="labels are in GAP simple-root order")

    s = sub.add_parser("index", parents=[common], help="certify ind C(e) = rank for every orbit")
    s.add_argument("kind", type=_kind)

    s = sub.add_parser("doublecen", parents=[common], help="minimal double centralizer per orbit")
    s.add_argument("kind", type=_kind)
    s.add_argument("--degree", type=int, default=None, help="restrict x to C_e in g(degree)")
    return p


def _parse_diagram(kind: str, text: str, gap_order: bool) -> WeightedDiagram:
    try:
        labels = tuple(int(v) for v in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"cannot parse diagram {text!r}; expected comma-separated integers")
    rank = len(GAP_FROM_DISPLAY[kind])
    if len(labels) != rank:
        raise UsageError(f"{kind} diagrams have {rank} labels, got {len(labels)}")
    try:
        D = WeightedDiagram(labels) if gap_order else WeightedDiagram.from_display(kind, labels)
    except ValueError as exc:
        raise UsageError(str(exc))
    if D.is_zero():
        raise UsageError("the zero diagram has no nonzero representative")
    return D


def _emit(doc: dict, args, text: str) -> None:
    blob = json.dumps(doc, sort_keys=True, indent=1) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(blob)
    sys.stdout.write(blob if args.json else text + "\n")


def _configs(args) -> tuple[OrbitConfig, AnalysisConfig]:
    if args.omega_bound < 1 or args.trials < 1:
        raise UsageError("--omega-bound and --trials must be positive")
    oc = OrbitConfig(omega_bound=args.omega_bound, trials=args.trials, exact_mode=args.exact,
                     symbolic_budget=args.budget)
    ac = AnalysisConfig(omega_bound=args.omega_bound, trials=args.trials, symbolic_budget=args.budget,
                        degree=getattr(args, "degree", None))
    return oc, ac


def _config_json(args) -> dict:
    return {"seed": args.seed, "omega_bound": args.omega_bound, "trials": args.trials,
            "exact": args.exact, "budget": args.budget}


def cmd_roots(args) -> int:
    rs = build(args.kind)
    perm = GAP_FROM_DISPLAY[args.kind]
    rows = []
    for k, (g, d) in enumerate(zip(rs.positive_roots, rs.display_roots()), 1):
        rows.append({"index": k, "gap": list(g), "display": list(d)})
    text = "\n".join(f"{r['index']:4d}  gap {' '.join(map(str, r['gap']))}   display {' '.join(map(str, r['display']))}"
                     for r in rows)
    _emit({"command": "roots", "kind": args.kind, "gap_from_display": list(perm), "roots": rows}, args, text)
    return EXIT_OK


def cmd_orbits(args) -> int:
    oc, _ = _configs(args)
    enum = enumerate_algebra(args.kind, args.seed, oc, args.jobs)
    names = table_labels(args.kind)
    records = [orbit_json(args.kind, o, names.get(o.diagram.labels)) for o in enum.orbits]
    lines = [f"# {args.kind}: {len(records)} nonzero orbits (seed {args.seed})"]
    for r in records:
        lines.append(f"{r['label'] or '-':12} {' '.join(map(str, r['diagram']))}   e = "
                     + " + ".join(n if c == "1" else f"{c}*{n}" for n, c in r["e"]))
    if enum.budget_exceeded:
        lines.append(f"# exact mode: symbolic budget exceeded for {enum.budget_exceeded} candidate(s)")
    doc = {"command": "orbits", "kind": args.kind, "config": _config_json(args), "count": len(records),
           "budget_exceeded": enum.budget_exceeded, "records": records}
    _emit(doc, args, "\n".join(lines))
    return EXIT_BUDGET if enum.budget_exceeded else EXIT_OK


def cmd_rep(args) -> int:
    oc, _ = _configs(args)
    L = build_algebra(args.kind)
    D = _parse_diagram(args.kind, args.diagram, args.gap_order)
    try:
        _, triple = find_representative(L, D, derived_rng(args.seed, args.kind, "rep", str(D)), oc)
    except InvalidDiagramError as exc:
        print(f"{exc} (seed {args.seed})", file=sys.stderr)
        if args.json:
            sys.stdout.write(json.dumps({"command": "rep", "kind": args.kind, "valid": False,
                                         "diagram": list(D.display(args.kind)), "trials": exc.trials,
                                         "g2_dim": exc.g2_dim, "config": _config_json(args)},
                                        sort_keys=True, indent=1) + "\n")
        return EXIT_INCONCLUSIVE
    from nilorbits.orbits import OrbitData

    rec = orbit_json(args.kind, OrbitData(D, triple, 0), table_labels(args.kind).get(D.labels))
    rec.pop("trials_used")
    text = f"diagram {' '.join(map(str, rec['diagram']))}\n" + "\n".join(
        f"{k} = {getattr(triple, k)!r}" for k in ("e", "h", "f"))
    _emit({"command": "rep", "kind": args.kind, "valid": True, "config": _config_json(args), "records": [rec]},
          args, text)
    return EXIT_OK


def cmd_index(args) -> int:
    oc, ac = _configs(args)
    enum = enumerate_algebra(args.kind, args.seed, oc, args.jobs)
    certs = index_certificates(enum, ac, args.jobs)
    names = table_labels(args.kind)
    lines = [f"# {args.kind}: index of C(e) for {len(certs)} orbits (seed {args.seed}), rank {build(args.kind).rank}"]
    for c in certs:
        D = WeightedDiagram(c.diagram)
        lines.append(f"{names.get(c.diagram, '-'):12} {' '.join(map(str, D.display(args.kind)))}  "
                     f"dim C(e) {c.dim_K:4d}  index {c.index}  {c.conclusion}")
    bad = sum(c.conclusion != "certified" for c in certs)
    lines.append(f"# {len(certs) - bad} certified, {bad} inconclusive")
    doc = {"command": "index", "kind": args.kind, "config": _config_json(args),
           "records": [c.to_json() for c in certs]}
    _emit(doc, args, "\n".join(lines))
    return EXIT_INCONCLUSIVE if bad else EXIT_OK


def cmd_doublecen(args) -> int:
    oc, ac = _configs(args)
    enum = enumerate_algebra(args.kind, args.seed, oc, args.jobs)
    rows = double_centralizers(enum, ac, args.jobs)
    names = table_labels(args.kind)
    lines = [f"# {args.kind}: minimal dim C(e,x) (seed {args.seed}), rank {build(args.kind).rank}"]
    for r in rows:
        D = WeightedDiagram(r.diagram)
        flag = "  <-- exceeds rank" if r.exceptional else ""
        lines.append(f"{names.get(r.diagram, '-'):12} {' '.join(map(str, D.display(args.kind)))}  "
                     f"dim C(e) {r.dim_Ce:4d}  min {r.min_dim:3d}  abelian {'yes' if r.abelian else 'no'}  "
                     f"{r.lower_bound_mode}/{r.lower_bound_method}{flag}")
    doc = {"command": "doublecen", "kind": args.kind, "config": _config_json(args),
           "degree": args.degree, "records": [r.to_json() for r in rows]}
    _emit(doc, args, "\n".join(lines))
    return EXIT_OK


def cmd_recheck(path: str) -> int:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    command = doc.get("command")
    checkers = {
        "orbits": recheck_orbit,
        "rep": recheck_orbit,
        "index": lambda d: recheck_index(IndexCertificate.from_json(d)),
        "doublecen": lambda d: recheck_double_centralizer(DoubleCentralizerResult.from_json(d)),
    }
    if command not in checkers:
        raise UsageError(f"{path}: nothing to recheck for command {command!r}")
    failed = 0
    for i, rec in enumerate(doc.get("records", [])):
        ok = checkers[command](rec)
        failed += not ok
        print(f"record {i}: {'ok' if ok else 'FAILED'}")
    inconclusive = command == "index" and any(r.get("conclusion") != "certified" for r in doc["records"])
    print(f"# {len(doc['records']) - failed}/{len(doc['records'])} records re-verified")
    if failed:
        return 1
    return EXIT_INCONCLUSIVE if inconclusive else EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if getattr(args, "verbose", False) else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.recheck:
            return cmd_recheck(args.recheck)
        if not args.command:
            parser.print_usage(sys.stderr)
            return EXIT_USAGE
        if args.seed is None:
            args.seed = secrets.randbits(64)
        if not args.json:
            print(f"# seed {args.seed}", file=sys.stderr)
        if args.jobs is None:
            args.jobs = default_jobs()
        return {"roots": cmd_roots, "orbits": cmd_orbits, "rep": cmd_rep, "index": cmd_index,
                "doublecen": cmd_doublecen}[args.command](args)
    except UsageError as exc:
        print(f"nilorbits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except linalg.PolynomialBudgetExceeded as exc:
        print(f"nilorbits: resource budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"nilorbits: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
