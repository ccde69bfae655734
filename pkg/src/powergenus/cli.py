"""Command-line surface: build groups, export power graphs, run the genus
search, classify, and reproduce the summary tables and lemma checks.

Exit codes: 0 success/exact, 2 bounds-only, 1 error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone

from . import catalog as cat
from . import classifier as cls
from .embed import certificate_to_text, verify_certificate
from .errors import PowerGenusError, UnknownLabel
from .genus import Budget, crosscap_exact, genus_exact
from .groups import (FiniteGroup, center, count_involutions, order_spectrum,
                     six_profile)
from .powergraph import from_edge_list, power_graph, to_dot, to_edge_list

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BOUNDS = 2


# ---------------------------------------------------------------------------
# plumbing
# ---------------------------------------------------------------------------

def _common_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--budget-nodes", type=int, default=100_000_000,
                   metavar="N", help="search node cap")
    p.add_argument("--budget-seconds", type=float, default=600.0,
                   metavar="S", help="search time cap")
    p.add_argument("--jobs", type=int, default=1, metavar="J",
                   help="parallelism for batch classification")
    p.add_argument("--format", choices=("text", "records"), default="text",
                   help="output style")
    p.add_argument("--catalog", metavar="PATH",
                   help="override the built-in group catalog")
    p.add_argument("--no-timestamp", action="store_true",
                   help="omit the generated-at header")
    return p


def _budget(args) -> Budget:
    if args.budget_nodes < 1 or args.budget_seconds <= 0:
        raise PowerGenusError("budget caps must be positive")
    return Budget(max_nodes=args.budget_nodes, max_seconds=args.budget_seconds)


def _entries(args):
    if args.catalog:
        with open(args.catalog) as fh:
            return cat.from_text(fh.read())
    return cat.entries()


def _build_group(args, expr: str) -> FiniteGroup:
    by_label = {e.label: e for e in _entries(args)}
    if expr in by_label:
        ent = by_label[expr]
        g = cat.build_recipe(ent.recipe)
        return FiniteGroup(g.table, label=ent.label, validate=False)
    if expr.startswith("["):
        raise UnknownLabel(f"label {expr!r} not in catalog")
    return cat.build_recipe(expr)


def _emit(args, lines, header: bool = True) -> None:
    if header and not args.no_timestamp:
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        print(f"# generated {stamp}")
    for ln in lines:
        print(ln)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_group_info(args) -> int:
    g = _build_group(args, args.group)
    spectrum = "{" + ",".join(map(str, sorted(order_spectrum(g).as_set))) + "}"
    prof = six_profile(g)
    six = f"({prof.count};{','.join(map(str, prof.pairwise_intersections))})"
    label = g.label or args.group
    if args.format == "records":
        _emit(args, [f"label={label} order={g.order} spectrum={spectrum} "
                     f"six={six} involutions={count_involutions(g)} "
                     f"center={len(center(g))}"])
    else:
        _emit(args, [f"group:        {label}",
                     f"order:        {g.order}",
                     f"spectrum:     {spectrum}",
                     f"six-profile:  {six}",
                     f"involutions:  {count_involutions(g)}",
                     f"center size:  {len(center(g))}"])
    return EXIT_OK


def cmd_powergraph(args) -> int:
    g = _build_group(args, args.group)
    graph = power_graph(g)
    text = to_dot(graph) if args.dot else to_edge_list(graph)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
        _emit(args, [f"wrote {graph.n} vertices / {graph.m} edges "
                     f"to {args.output}"])
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_genus(args) -> int:
    with open(args.edgefile) as fh:
        graph = from_edge_list(fh.read())
    run = crosscap_exact if args.nonorientable else genus_exact
    res = run(graph, _budget(args))
    name = "crosscap" if args.nonorientable else "genus"
    lines = []
    if res.kind == "exact":
        lines.append(f"{name} exact {res.value}")
    else:
        lines.append(f"{name} bounds {res.lower} {res.upper}")
    lc = res.lower_certificate
    lines.append(f"lower: {lc.get('method')} = {lc.get('value')}")
    uc = res.upper_certificate
    if args.certificate and uc.get("method") == "embedding" \
            and uc.get("trace") is not None:
        with open(args.certificate, "w") as fh:
            fh.write(certificate_to_text(graph, uc["rotation"], uc["trace"]))
        lines.append(f"certificate: {args.certificate}")
    _emit(args, lines)
    return EXIT_OK if res.kind == "exact" else EXIT_BOUNDS


def _verdict_lines(args, label: str, g: FiniteGroup, v) -> list[str]:
    if args.format == "records":
        return [cls.verdict_record(label, g, v)]
    lines = [f"group: {label} (order {g.order})"]
    extra = f" (Table 1 label {v.table1_label})" if v.table1_label else ""
    lines.append(f"orientable:    {v.orientable}{extra}")
    reason = f" ({v.reason})" if v.reason else ""
    lines.append(f"nonorientable: {v.nonorientable}{reason}")
    lines.append("trail:")
    lines.extend(f"  {s.rule_id}: {s.conclusion}" for s in v.trail)
    return lines


def cmd_classify(args) -> int:
    if args.all_catalog:
        ents = sorted(_entries(args), key=lambda e: (e.expected_order, e.label))

        def one(ent):
            g = cat.build_recipe(ent.recipe)
            g = FiniteGroup(g.table, label=ent.label, validate=False)
            return ent.label, g, cls.classify(g)

        with ThreadPoolExecutor(max_workers=max(args.jobs, 1)) as pool:
            results = list(pool.map(one, ents))
        lines = []
        for label, g, v in results:
            if args.format == "records":
                lines.append(cls.verdict_record(label, g, v))
            else:
                extra = f" [{v.table1_label}]" if v.table1_label else ""
                lines.append(f"{label:12s} order {g.order:3d}  "
                             f"orientable={v.orientable}{extra}  "
                             f"nonorientable={v.nonorientable}")
        _emit(args, lines)
        return EXIT_OK
    g = _build_group(args, args.group)
    v = cls.classify(g)
    _emit(args, _verdict_lines(args, g.label or args.group, g, v))
    return EXIT_OK


def cmd_report(args) -> int:
    if args.target == "lemma":
        if not args.rule:
            raise PowerGenusError("report lemma requires a rule id")
        r = cls.verify_lemma(args.rule)
        status = "PASS" if r.passed else "FAIL"
        _emit(args, [f"{status}: {len(r.witnesses)} witnesses in {r.scanned} "
                     f"groups scanned",
                     f"check: {r.detail}"]
                    + [f"witness: {w}" for w in r.witnesses])
        return EXIT_OK if r.passed else EXIT_ERROR

    ents = _entries(args)
    rows = []
    for ent in sorted(ents, key=lambda e: (e.expected_order, e.label)):
        g = cat.build_recipe(ent.recipe)
        g = FiniteGroup(g.table, label=ent.label, validate=False)
        spectrum = "{" + ",".join(map(str, sorted(order_spectrum(g).as_set))) + "}"
        prof = six_profile(g)
        if args.target == "table1":
            v = cls.classify_orientable(g)
            if v.orientable == "two":
                rows.append(f"{ent.label:10s} {g.order:3d}  {spectrum}")
        else:  # table2: the three-subgroup condition matrix
            a = order_spectrum(g).subset_of({1, 2, 3, 4, 6})
            b = prof.count == 3
            c = b and any(k == 3 for k in prof.pairwise_intersections)
            if a and b and c:
                rows.append(f"{ent.label:10s} {g.order:3d}  {spectrum:14s} "
                            f"six={prof.count} pairwise3=yes")
    _emit(args, rows)
    return EXIT_OK


def cmd_verify(args) -> int:
    with open(args.certfile) as fh:
        ok, msg = verify_certificate(fh.read())
    _emit(args, [msg])
    return EXIT_OK if ok else EXIT_ERROR


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _common_flags()
    p = argparse.ArgumentParser(prog="powergenus",
                                description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("group-info", parents=[common],
                       help="order, spectrum, six-profile of a group")
    s.add_argument("group", help="catalog label or recipe expression")
    s.set_defaults(func=cmd_group_info)

    s = sub.add_parser("powergraph", parents=[common],
                       help="export a power graph")
    s.add_argument("group")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="DOT output")
    fmt.add_argument("--edges", action="store_true",
                     help="edge-list output (default)")
    s.add_argument("--output", "-o", metavar="PATH")
    s.set_defaults(func=cmd_powergraph)

    s = sub.add_parser("genus", parents=[common],
                       help="exact genus search on an edge-list file")
    s.add_argument("edgefile")
    surf = s.add_mutually_exclusive_group()
    surf.add_argument("--orientable", action="store_true",
                      help="orientable genus (default)")
    surf.add_argument("--nonorientable", action="store_true",
                      help="nonorientable genus (crosscap)")
    s.add_argument("--certificate", metavar="PATH",
                   help="write the embedding certificate here")
    s.set_defaults(func=cmd_genus)

    s = sub.add_parser("classify", parents=[common],
                       help="genus verdict with certificate trail")
    s.add_argument("group", nargs="?")
    s.add_argument("--all-catalog", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("report", parents=[common],
                       help="reproduce the result tables and lemma checks")
    s.add_argument("target", choices=("table1", "table2", "lemma"))
    s.add_argument("rule", nargs="?", help="rule id for 'lemma'")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("verify", parents=[common],
                       help="re-trace an embedding certificate")
    s.add_argument("certfile")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "classify" and not args.all_catalog and not args.group:
        print("error: classify needs a group or --all-catalog", file=sys.stderr)
        return EXIT_ERROR
    try:
        return args.func(args)
    except (PowerGenusError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
