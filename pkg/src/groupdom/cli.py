"""Command-line front end.

Every command prints one JSON document to stdout with the shape
{"group", "command", "result", "timing_ms", "budget"}.  Domination
numbers serialize as an integer or the string "aleph0".  Exit codes:
0 success, 1 a verification verdict was "violation", 2 usage or spec
error, 3 budget or element-cap abort.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from .burnside import BurnsideRing
from .complexes import (atom_nerve, betti, coatom_nerve,
                        intersection_complex, order_complex, topology_report)
from .corpus import corpus, get_gamma, get_group, get_lattice
from .domination import gamma_exact, sum_number
from .errors import BudgetExceeded, CapExceeded, SpecError
from .formulas import VIOLATION, verify_bounds
from .graphs import intersection_graph, to_dot
from .groups import DEFAULT_ELEMENT_CAP, build_group, parse_group_spec
from .lattice import (characteristic_subgroups, classify_group,
                      enumerate_subgroups, subgroup_classes)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _emit(group, command, result, started, args) -> None:
    doc = {
        "group": group,
        "command": command,
        "result": result,
        "timing_ms": int((time.monotonic() - started) * 1000),
        "budget": {"budget_ms": args.budget_ms, "cap": args.cap, "exceeded": False},
    }
    indent = 2 if args.json else None
    print(json.dumps(doc, sort_keys=True, indent=indent))


def _built(args):
    spec = parse_group_spec(args.spec)
    G = build_group(spec, cap=args.cap)
    L = enumerate_subgroups(G, budget_ms=args.budget_ms)
    return G, L


def cmd_subgroups(args, started) -> int:
    G, L = _built(args)
    by_order: dict[str, int] = {}
    for s in L.subgroups:
        by_order[str(s.order)] = by_order.get(str(s.order), 0) + 1
    result = {
        "order": G.order,
        "subgroup_count": len(L.subgroups),
        "vertex_count": len(L.vertex_set),
        "atom_count": len(L.atoms),
        "coatom_count": len(L.coatoms),
        "by_order": by_order,
    }
    _emit(G.label, "subgroups", result, started, args)
    return EXIT_OK


def cmd_graph(args, started) -> int:
    G, L = _built(args)
    graph = intersection_graph(L)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(graph))
    result = {
        "vertices": graph.n,
        "edges": graph.edge_count(),
        "degree_multiset": list(graph.degree_multiset()),
        "labels": list(graph.labels),
    }
    _emit(G.label, "graph", result, started, args)
    return EXIT_OK


def cmd_gamma(args, started) -> int:
    G, L = _built(args)
    cert = gamma_exact(L, budget_ms=args.budget_ms)
    result = {
        "gamma": cert.gamma.to_json(),
        "witness": list(cert.witness),
        "witness_labels": [f"H{L.subgroups[i].order}_{i}" for i in cert.witness],
        "optimal": cert.optimal,
        "method": cert.method,
    }
    _emit(G.label, "gamma", result, started, args)
    return EXIT_OK


def cmd_sum(args, started) -> int:
    G, L = _built(args)
    res = sum_number(G, L, budget_ms=args.budget_ms)
    result = {
        "sum_number": res.value.to_json(),
        "witness": list(res.witness),
        "optimal": res.optimal,
    }
    if res.bracket is not None:
        result["bracket"] = list(res.bracket)
    _emit(G.label, "sum", result, started, args)
    return EXIT_OK


def cmd_burnside(args, started) -> int:
    G, L = _built(args)
    ring = BurnsideRing(G, L)
    labels = ring.labels()
    marks = ring.marks_matrix()
    products = {}
    for a in range(len(labels)):
        for b in range(a, len(labels)):
            dec = ring.product(a, b)
            products[f"{labels[a]}*{labels[b]}"] = {
                labels[c]: m for c, m in dec.coeffs}
    result = {
        "class_labels": list(labels),
        "class_sizes": [len(c.members) for c in ring.classes],
        "normalizer_indices": [G.order // c.normalizer.order for c in ring.classes],
        "table_of_marks": [[int(v) for v in row] for row in marks],
        "products": products,
        "index_bound": ring.index_bound(),
        "characterization": ring.characterization_report(),
    }
    _emit(G.label, "burnside", result, started, args)
    return EXIT_OK


def cmd_complex(args, started) -> int:
    G, L = _built(args)
    chars = characteristic_subgroups(G, L)
    cert = gamma_exact(L, budget_ms=args.budget_ms)
    models = {}
    for name, cx in [("intersection", intersection_complex(L)),
                     ("order", order_complex(L)),
                     ("atom_nerve", atom_nerve(L)),
                     ("coatom_nerve", coatom_nerve(L))]:
        try:
            profile = betti(cx, model=name)
            models[name] = {
                "vertex_labels": list(cx.vertex_labels),
                "facets": [[cx.vertex_labels[v] for v in _mask_bits(f)]
                           for f in cx.facets],
                "f_vector": list(cx.f_vector()),
                "betti": list(profile.betti),
                "euler": profile.euler,
                "is_simplex": cx.is_simplex(),
                "complete": profile.complete,
            }
        except BudgetExceeded:
            models[name] = {"vertex_labels": list(cx.vertex_labels),
                            "facets_count": len(cx.facets), "complete": False}
    report = topology_report(G, L, chars, cert.gamma)
    result = {"models": models, "report": report.to_json()}
    _emit(G.label, "complex", result, started, args)
    return EXIT_OK


def _mask_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _verify_one(label: str, cap: int, budget_ms) -> dict:
    entry = next(e for e in corpus() if e.label == label)
    G = get_group(label, cap=cap)
    L = get_lattice(label, cap=cap)
    cls = classify_group(G, L)
    chars = characteristic_subgroups(G, L)
    classes = subgroup_classes(G, L)
    cert = get_gamma(label, cap=cap)
    reports = verify_bounds(G, L, cls, chars, cert, classes=classes)
    expected_checks = []
    for name, spec in sorted(entry.expected_dict().items()):
        if name == "gamma":
            actual = cert.gamma.to_json()
        elif name == "sum_number":
            actual = sum_number(G, L, budget_ms=budget_ms).value.to_json()
        elif name == "subgroup_count":
            actual = len(L.subgroups)
        else:
            continue
        expected_checks.append({"name": name, "expected": spec["value"],
                                "source": spec["source"], "actual": actual,
                                "ok": actual == spec["value"]})
    return {
        "group": label,
        "order": G.order,
        "gamma": cert.gamma.to_json(),
        "reports": [r.to_json() for r in reports],
        "expected_checks": expected_checks,
    }


def cmd_verify(args, started) -> int:
    labels = [e.label for e in corpus()
              if e.order and e.order <= args.order_max]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            futures = {label: pool.submit(_verify_one, label, args.cap, args.budget_ms)
                       for label in labels}
            groups = [futures[label].result() for label in labels]
    else:
        groups = [_verify_one(label, args.cap, args.budget_ms) for label in labels]
    violations = []
    for g in groups:
        for r in g["reports"]:
            if r["verdict"] == VIOLATION:
                violations.append({"group": g["group"], "theorem": r["theorem"]})
        for c in g["expected_checks"]:
            if not c["ok"]:
                violations.append({"group": g["group"], "theorem": f"expected:{c['name']}"})
    result = {
        "order_max": args.order_max,
        "group_count": len(groups),
        "violations": violations,
        "groups": groups,
    }
    _emit(None, "verify", result, started, args)
    return EXIT_VIOLATION if violations else EXIT_OK


def cmd_corpus(args, started) -> int:
    entries = [{"label": e.label, "order": e.order,
                "spec": e.spec_text, "expected": e.expected_dict()}
               for e in corpus() if e.order <= args.order_max]
    _emit(None, "corpus", {"entries": entries, "count": len(entries)}, started, args)
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groupdom",
        description="Finite group intersection graphs, domination numbers, "
                    "Burnside ring arithmetic, and subgroup complexes.")
    parser.add_argument("--json", action="store_true", help="pretty-print output")
    parser.add_argument("--dot", metavar="PATH", help="write DOT graph export")
    parser.add_argument("--order-max", type=int, default=48,
                        help="corpus order limit for verify/corpus (default 48)")
    parser.add_argument("--budget-ms", type=float, default=None,
                        help="time budget per expensive computation")
    parser.add_argument("--cap", type=int, default=DEFAULT_ELEMENT_CAP,
                        help=f"element cap for closures (default {DEFAULT_ELEMENT_CAP})")
    parser.add_argument("--jobs", type=int, default=1,
                        help="parallel workers for verify")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, needs_spec in [("subgroups", True), ("graph", True), ("gamma", True),
                             ("sum", True), ("burnside", True), ("complex", True),
                             ("verify", False), ("corpus", False)]:
        p = sub.add_parser(name)
        if needs_spec:
            p.add_argument("spec", help="group spec, e.g. D8, C2xC2xC3, S4, SD(7,3)")
    return parser


_COMMANDS = {
    "subgroups": cmd_subgroups,
    "graph": cmd_graph,
    "gamma": cmd_gamma,
    "sum": cmd_sum,
    "burnside": cmd_burnside,
    "complex": cmd_complex,
    "verify": cmd_verify,
    "corpus": cmd_corpus,
}


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        return _COMMANDS[args.command](args, started)
    except SpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BudgetExceeded, CapExceeded) as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
