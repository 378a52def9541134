"""Command-line front end.

Exit codes: 0 success, 1 parse or semantic error, 2 theorem mismatch,
3 resource cap, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import corpus_specs, resolve_families
from .graphs import GRAPH_BUILDERS, MAX_VERTICES
from .groupspec import (
    DEFAULT_MAX_ELEMENTS,
    GroupSpecError,
    ResourceError,
    load_cayley,
    realize,
)
from .recognizers import brute_force_class, check_verdict
from .recognizers.oracle import DEFAULT_CAP, FORBIDDEN_SETS, OracleCapError
from .theorems import CLASSES, EXTRA_CLASSES, ClassReport, verify

log = logging.getLogger("diffgraph")

EXIT_OK, EXIT_PARSE, EXIT_MISMATCH, EXIT_RESOURCE, EXIT_IO = 0, 1, 2, 3, 4
DEFAULT_SEED = 20240101


@dataclass
class RunConfig:
    command: str
    specs: list[str] = field(default_factory=list)
    cayley: str | None = None
    output: str = "text"
    dot: str | None = None
    max_elements: int = DEFAULT_MAX_ELEMENTS
    oracle_cap: int = DEFAULT_CAP
    oracle: bool = False
    seed: int = DEFAULT_SEED
    max_order: int = 0
    families: str = "default"
    out: str | None = None
    jobs: int = 1
    kind: str = "difference"
    path: str | None = None


# ---------------------------------------------------------------------------
# helpers


def _load(spec: str | None, cfg: RunConfig):
    if cfg.cayley:
        return load_cayley(cfg.cayley, cfg.max_elements, seed=cfg.seed)
    return realize(spec, cfg.max_elements)


def _check_report(group, report: ClassReport, cfg: RunConfig, graph) -> list[str]:
    """Re-verify witnesses; optionally compare with the brute-force oracle."""
    problems = []
    for cls, res in report.classes.items():
        if cls in EXTRA_CLASSES:
            continue
        try:
            check_verdict(graph, cls, res.observed)
        except AssertionError as exc:
            problems.append(f"{cls}: witness rejected ({exc})")
    if cfg.oracle and 0 < graph.n:
        for cls in FORBIDDEN_SETS:
            try:
                want = brute_force_class(graph, cls, cfg.oracle_cap)
            except OracleCapError:
                continue
            if report.classes[cls].observed.value != want:
                problems.append(f"{cls}: recognizer disagrees with brute force")
    return problems


def _witness_text(res, limit: int = 6) -> str:
    w = res.observed.witness
    if w is None:
        return ""
    names = w.labels if w.labels is not None else [str(v) for v in w.vertices]
    shown = ", ".join(names[:limit]) + (", ..." if len(names) > limit else "")
    return f"{w.kind} [{shown}]" if names else w.kind


def _fmt(value) -> str:
    return "-" if value is None else str(value).lower()


def render_text(report: ClassReport) -> str:
    p = report.profile
    lines = [
        f"group {report.spec}  |G|={p.order}  spectrum {{{', '.join(map(str, p.spectrum))}}}",
        f"  nilpotent={_fmt(p.nilpotent)} eppo={_fmt(p.eppo)} "
        f"condition_a={_fmt(p.condition_a)} condition_b={_fmt(p.condition_b)} "
        f"family={p.family_tag}",
        f"  D(G): {report.graph_stats['vertex_count']} vertices, "
        f"{report.graph_stats['edge_count']} edges",
        f"  {'class':<12} {'observed':<9} {'predicted':<10} {'agrees':<7} witness",
    ]
    for cls, res in report.classes.items():
        lines.append(f"  {cls:<12} {res.observed.status.value:<9} {_fmt(res.predicted):<10} "
                     f"{_fmt(res.agrees):<7} {_witness_text(res)}")
    for note in report.notes:
        lines.append(f"  note: {note}")
    return "\n".join(lines)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# commands


def cmd_classify(cfg: RunConfig) -> int:
    spec = cfg.specs[0] if cfg.specs else None
    group = _load(spec, cfg)
    graph = GRAPH_BUILDERS["difference"](group)
    report = verify(group, graph)
    problems = _check_report(group, report, cfg, graph)
    report.notes.extend(problems)
    if cfg.dot:
        _write(cfg.dot, graph.to_dot())
    if cfg.output == "json":
        print(_json(report.to_dict()))
    else:
        print(render_text(report))
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    groups = []
    for spec in cfg.specs:  # parse everything before any heavy work
        groups.append(_load(spec, cfg))
    reports, failures = [], []
    for group in groups:
        graph = GRAPH_BUILDERS["difference"](group)
        report = verify(group, graph)
        report.notes.extend(_check_report(group, report, cfg, graph))
        reports.append(report)
        for cls in report.mismatches():
            res = report.classes[cls]
            failures.append(f"{report.spec}: {cls} predicted {_fmt(res.predicted)}, "
                            f"observed {res.observed.status.value} ({_witness_text(res)})")
        failures.extend(f"{report.spec}: {n}" for n in report.notes if "witness rejected" in n
                        or "disagrees" in n)
    if cfg.output == "json":
        print(_json({"reports": [r.to_dict() for r in reports], "failures": failures}))
    else:
        print(agreement_table(reports))
        for f in failures:
            print(f"FAIL {f}")
    return EXIT_MISMATCH if failures else EXIT_OK


def agreement_table(reports: list[ClassReport]) -> str:
    head = f"{'spec':<22} {'|V|':>6} {'|E|':>7} " + " ".join(f"{c[:6]:>6}" for c in CLASSES)
    lines = [head]
    for r in reports:
        cells = []
        for c in CLASSES:
            res = r.classes[c]
            mark = {True: "ok", False: "FAIL", None: "."}[res.agrees]
            cells.append(f"{res.observed.status.value[0].upper() + mark:>6}")
        lines.append(f"{r.spec:<22} {r.graph_stats['vertex_count']:>6} "
                     f"{r.graph_stats['edge_count']:>7} " + " ".join(cells))
        if r.vacuous:
            lines.append(f"{'':<22} EPPO group, every class vacuous")
        elif all(res.predicted is None for res in r.classes.values()):
            lines.append(f"{'':<22} no applicable predictions")
    lines.append("legend: T/F/V observed true/false/vacuous; ok/FAIL agreement; . unpredicted")
    return "\n".join(lines)


ATLAS_COLUMNS = ["spec", "order", "spectrum", "exponent", "eppo", "nilpotent", "p_group",
                 "condition_a", "condition_b", "family", "vertices", "edges"]
for _c in CLASSES + EXTRA_CLASSES:
    ATLAS_COLUMNS += [f"{_c}_observed", f"{_c}_predicted", f"{_c}_agrees"]
ATLAS_COLUMNS.append("mismatches")


def atlas_row(report: ClassReport) -> dict:
    p = report.profile
    row = {
        "spec": report.spec,
        "order": p.order,
        "spectrum": " ".join(map(str, p.spectrum)),
        "exponent": p.exponent,
        "eppo": _fmt(p.eppo),
        "nilpotent": _fmt(p.nilpotent),
        "p_group": _fmt(p.nilpotent and p.p_group),
        "condition_a": _fmt(p.condition_a),
        "condition_b": _fmt(p.condition_b),
        "family": ";".join(p.families),
        "vertices": report.graph_stats["vertex_count"],
        "edges": report.graph_stats["edge_count"],
    }
    for c, res in report.classes.items():
        row[f"{c}_observed"] = res.observed.status.value
        row[f"{c}_predicted"] = _fmt(res.predicted)
        row[f"{c}_agrees"] = _fmt(res.agrees)
    row["mismatches"] = ";".join(report.mismatches())
    return row


def _sweep_one(args) -> tuple[str, dict | None, list[str], str | None]:
    spec, max_elements = args
    try:
        group = realize(spec, max_elements)
        if group.n > MAX_VERTICES:
            raise ResourceError(f"{spec}: {group.n} elements exceeds graph limit")
        report = verify(group)
    except ResourceError as exc:
        return spec, None, [], str(exc)
    failures = [f"{spec}: {c} predicted {_fmt(report.classes[c].predicted)}, observed "
                f"{report.classes[c].observed.status.value}" for c in report.mismatches()]
    return spec, atlas_row(report), failures, None


def cmd_sweep(cfg: RunConfig) -> int:
    if cfg.max_order < 1:
        raise ValueError("--max-order must be at least 1")
    fams = resolve_families(cfg.families)
    specs = corpus_specs(cfg.max_order, fams, cfg.max_elements)
    work = [(s, cfg.max_elements) for s in specs]
    if cfg.jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_sweep_one, work, chunksize=4))
    else:
        results = [_sweep_one(w) for w in work]
    results.sort(key=lambda r: r[0])
    rows, failures, skipped = [], [], 0
    for spec, row, fails, warn in results:
        if warn is not None:
            log.warning("skipped %s: %s", spec, warn)
            skipped += 1
            continue
        rows.append(row)
        failures.extend(fails)
    text = _atlas_csv(rows)
    if cfg.out:
        _write(cfg.out, text)
    elif cfg.output != "json":
        sys.stdout.write(text)
    if cfg.output == "json":
        print(_json({"groups": len(rows), "skipped": skipped, "failures": failures}))
    else:
        print(f"# {len(rows)} groups, {skipped} skipped, {len(failures)} mismatches",
              file=sys.stderr)
        for f in failures:
            print(f"FAIL {f}", file=sys.stderr)
    return EXIT_MISMATCH if failures else EXIT_OK


def _atlas_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=ATLAS_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def cmd_export(cfg: RunConfig) -> int:
    group = _load(cfg.specs[0] if cfg.specs else None, cfg)
    graph = GRAPH_BUILDERS[cfg.kind](group)
    graph.name = f"{group.spec} {cfg.kind}"
    _write(cfg.path, graph.to_dot())
    print(f"{cfg.kind} graph of {group.spec}: {graph.n} nodes, {graph.edge_count} edges "
          f"-> {cfg.path}")
    return EXIT_OK


def _write(path: str, text: str) -> None:
    Path(path).write_text(text)


COMMANDS = {"classify": cmd_classify, "verify": cmd_verify, "sweep": cmd_sweep,
            "export": cmd_export}


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common.add_argument("--max-elements", type=int, default=DEFAULT_MAX_ELEMENTS,
                        help="refuse groups larger than this (default %(default)s)")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for sampled axiom checks")
    common.add_argument("--oracle-cap", type=int, default=DEFAULT_CAP,
                        help="vertex cap for brute-force oracle checks")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="diffgraph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify D(G) for one group")
    p.add_argument("spec", nargs="?", help='group spec, e.g. "Z2 x Z7" or D30')
    p.add_argument("--cayley", metavar="FILE", help="read a Cayley table instead of a spec")
    p.add_argument("--dot", metavar="PATH", help="also write D(G) as DOT")
    p.add_argument("--oracle", action="store_true",
                   help="cross-check recognizers with brute force when small enough")

    p = sub.add_parser("verify", parents=[common], help="check theorem predictions")
    p.add_argument("specs", nargs="*")
    p.add_argument("--cayley", metavar="FILE")
    p.add_argument("--oracle", action="store_true")

    p = sub.add_parser("sweep", parents=[common], help="verify a generated corpus")
    p.add_argument("--max-order", type=int, required=True)
    p.add_argument("--families", default="default",
                   help="comma list of cyclic,dihedral,dicyclic,product,symmetric,"
                        "alternating or default,nilpotent,all")
    p.add_argument("--out", metavar="CSV", help="write the atlas here (default stdout)")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("export", parents=[common], help="write a group graph as DOT")
    p.add_argument("spec")
    p.add_argument("kind", choices=sorted(GRAPH_BUILDERS))
    p.add_argument("path")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command, output="json" if ns.json else "text",
                    max_elements=ns.max_elements, seed=ns.seed, oracle_cap=ns.oracle_cap)
    if ns.command == "classify":
        cfg.specs = [ns.spec] if ns.spec else []
        cfg.cayley, cfg.dot, cfg.oracle = ns.cayley, ns.dot, ns.oracle
        if not cfg.specs and not cfg.cayley:
            raise GroupSpecError("classify needs a spec or --cayley FILE")
    elif ns.command == "verify":
        cfg.specs, cfg.cayley, cfg.oracle = list(ns.specs), ns.cayley, ns.oracle
        if cfg.cayley:
            cfg.specs = cfg.specs or [None]
        if not cfg.specs:
            raise GroupSpecError("verify needs at least one spec")
    elif ns.command == "sweep":
        cfg.max_order, cfg.families, cfg.out, cfg.jobs = (
            ns.max_order, ns.families, ns.out, ns.jobs)
    else:
        cfg.specs, cfg.kind, cfg.path = [ns.spec], ns.kind, ns.path
    return cfg


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except (GroupSpecError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
