"""Command-line interface: check, construct, embed, verify, catalog.

Exit statuses: 0 for a positive verdict, 1 for a negative one, 2 for input
errors, 3 for an unknown (open) classification.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog as catalog_mod
from .coloring import (
    color_automorphisms,
    components_congruent,
    is_vertex_uniform,
    satisfies_complementarity,
    weak_type,
)
from .construct import NOT_REALIZABLE, REALIZABLE, realize_partition
from .geometry import (
    DEFAULT_TOLERANCE,
    LengthAssignment,
    NotRealizableError,
    centers_coincide,
    centroid,
    circumcenter,
    edge_length_partition,
    edge_length_table,
    embed,
    incenter,
    is_equifacetal,
    isometry_group,
    realize_coloring,
)
from .perms import fingerprint, is_transitive, orbits
from .serialize import (
    DocumentError,
    coloring_from_doc,
    coloring_to_doc,
    simplex_from_doc,
    simplex_to_doc,
)


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def _dump(doc, path: str | None) -> None:
    text = json.dumps(doc, indent=2)
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _print_human(report: dict) -> None:
    for key, value in report.items():
        if isinstance(value, dict):
            value = json.dumps(value)
        print(f"{key}: {value}")


def _group_report(group) -> dict:
    return fingerprint(group).as_dict()


def cmd_check(args) -> int:
    g = coloring_from_doc(_load_json(args.input))
    uniform = is_vertex_uniform(g)
    group = color_automorphisms(g, max_dim=args.max_dim or 8)
    complementary = satisfies_complementarity(g)
    report = {
        "n": g.n,
        "num_colors": g.num_colors,
        "vertex_uniform": uniform,
        "weak_type": list(weak_type(g).entries) if uniform else None,
        "components_congruent": components_congruent(g),
        "complementarity": complementary,
        "vertex_transitive": is_transitive(group),
        "group": _group_report(group),
        "edge_orbits_per_color": [
            [len(orbit) for orbit in orbits(group, edges)] for edges in g.classes()
        ],
    }
    if args.json:
        _dump(report, None)
    else:
        _print_human(report)
    return 0 if complementary else 1


def cmd_construct(args) -> int:
    try:
        entries = tuple(int(part) for part in args.partition.split(","))
    except ValueError as exc:
        raise DocumentError(f"--partition: {exc}") from exc
    verdict = realize_partition(entries, args.n)
    if args.json:
        doc = {
            "status": verdict.status,
            "reason": verdict.reason,
            "witness": coloring_to_doc(verdict.witness) if verdict.witness else None,
        }
        _dump(doc, None)
        if verdict.witness and args.output:
            _dump(coloring_to_doc(verdict.witness), args.output)
    elif verdict.status == REALIZABLE:
        _dump(coloring_to_doc(verdict.witness), args.output)
        print(
            f"realizable: weak type {list(weak_type(verdict.witness).entries)}",
            file=sys.stderr,
        )
    elif verdict.status == NOT_REALIZABLE:
        print(f"not realizable: {verdict.reason}")
    else:
        print("unknown (open problem)")
    if verdict.status == REALIZABLE:
        return 0
    return 1 if verdict.status == NOT_REALIZABLE else 3


def _geometry_report(g, assignment, simplex) -> dict:
    group = isometry_group(simplex)
    return {
        "n": simplex.n,
        "lengths": list(assignment.lengths) if assignment else None,
        "equifacetal": is_equifacetal(simplex),
        "weak_type": list(weak_type(g).entries) if is_vertex_uniform(g) else None,
        "group": _group_report(group),
        "centroid": [float(x) for x in centroid(simplex)],
        "circumcenter": [float(x) for x in circumcenter(simplex)],
        "incenter": [float(x) for x in incenter(simplex)],
        "centers_coincide": centers_coincide(simplex),
        "coordinates": simplex_to_doc(simplex),
    }


def cmd_embed(args) -> int:
    g = coloring_from_doc(_load_json(args.input))
    try:
        if args.lengths:
            values = tuple(float(part) for part in args.lengths.split(","))
            if len(values) != g.num_colors:
                raise DocumentError(
                    f"--lengths: need {g.num_colors} values, got {len(values)}"
                )
            assignment = LengthAssignment(values)
            simplex = embed(edge_length_table(g, assignment), args.tol)
        else:
            assignment, simplex = realize_coloring(g, base=args.base, seed=args.seed)
    except NotRealizableError as exc:
        print(f"not realizable: {exc}", file=sys.stderr)
        return 1
    report = _geometry_report(g, assignment, simplex)
    if args.output:
        _dump(report.pop("coordinates"), args.output)
    if args.json:
        _dump(report, None)
    else:
        _print_human(report)
    return 0


def cmd_verify(args) -> int:
    simplex = simplex_from_doc(_load_json(args.input), tolerance=args.tol)
    g = edge_length_partition(simplex)
    group = isometry_group(simplex, max_dim=args.max_dim or 8)
    equifacetal = is_equifacetal(simplex)
    report = {
        "n": simplex.n,
        "equifacetal": equifacetal,
        "strong_type": coloring_to_doc(g),
        "weak_type": list(weak_type(g).entries) if is_vertex_uniform(g) else None,
        "group": _group_report(group),
        "centroid": [float(x) for x in centroid(simplex)],
        "circumcenter": [float(x) for x in circumcenter(simplex)],
        "incenter": [float(x) for x in incenter(simplex)],
        "centers_coincide": centers_coincide(simplex),
    }
    if args.json:
        _dump(report, None)
    else:
        _print_human(report)
    return 0 if equifacetal else 1


def cmd_catalog(args) -> int:
    entries = catalog_mod.enumerate_strong_types(args.dim, max_dim=args.max_dim or 6)
    if args.json:
        doc = [
            {
                "dimension": e.dimension,
                "weak_type": list(e.weak.entries),
                "group_order": e.group_order,
                "group": e.group_fingerprint.as_dict(),
                "edge_orbit_sizes": [list(sizes) for sizes in e.edge_orbit_sizes],
                "coloring": coloring_to_doc(e.canonical),
            }
            for e in entries
        ]
        _dump(doc, None)
    else:
        print(f"dimension {args.dim}: {len(entries)} strong types")
        for e in entries:
            orbit_text = " | ".join(
                ",".join(str(s) for s in sizes) for sizes in e.edge_orbit_sizes
            )
            print(
                f"  weak {list(e.weak.entries)!s:<16} group order {e.group_order:<6}"
                f" edge orbits {orbit_text}"
            )
    return 0


_COMMANDS = {
    "check": cmd_check,
    "construct": cmd_construct,
    "embed": cmd_embed,
    "verify": cmd_verify,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    common.add_argument(
        "--tol", type=float, default=DEFAULT_TOLERANCE, help="relative metric tolerance"
    )
    common.add_argument("--seed", type=int, default=None, help="seed for length jitter")
    common.add_argument(
        "--max-dim", type=int, default=None, help="override the dimension bound"
    )
    parser = argparse.ArgumentParser(
        prog="equifacetal",
        description="Decide, construct, embed, and catalogue equifacetal simplices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="analyse a coloring document")
    p.add_argument("input", help="coloring JSON file")

    p = sub.add_parser("construct", parents=[common], help="realize a partition")
    p.add_argument("--partition", required=True, help="comma-separated entries")
    p.add_argument("--n", type=int, required=True, help="dimension the entries sum to")
    p.add_argument("-o", "--output", help="write the witness document here")

    p = sub.add_parser("embed", parents=[common], help="embed a coloring numerically")
    p.add_argument("input", help="coloring JSON file")
    p.add_argument("--lengths", help="comma-separated length per color")
    p.add_argument("--base", type=float, default=1.0, help="base length for the schedule")
    p.add_argument("-o", "--output", help="write the coordinates document here")

    p = sub.add_parser("verify", parents=[common], help="analyse a coordinates document")
    p.add_argument("input", help="coordinates JSON file")

    p = sub.add_parser("catalog", parents=[common], help="enumerate strong types")
    p.add_argument("--dim", type=int, required=True, help="dimension to enumerate")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (DocumentError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    raise SystemExit(main())
