"""``geocycle`` command line.

Exit codes for ``check``: 0 yes, 1 no, 2 input error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .cycles import (
    DECIDERS,
    ORACLE_TARGETS,
    CertificateError,
    canonical_target,
    decide_c4_thm2,
    default_budget,
    oracle,
)
from .geometry import GeometryError
from .graphs import (
    GraphError,
    IsolatedVertexError,
    crossing_component_graph,
    crossing_subgraph,
    edge_crossing_graph,
)
from .hom import HomKind, SearchBudgetExceeded, verify_map
from .io import DocumentError, certificate_document, load_certificate, load_graph
from .realizations import NAMED_GRAPHS, build_poset, sample_realizations
from .render import render_svg

EXIT_YES, EXIT_NO, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, default=str))


def _fail(kind: str, message: str, code: int) -> int:
    _emit({"answer": "error", "error": kind, "message": message})
    return code


def _load(path: str):
    return load_graph(path)


def cmd_check(args) -> int:
    budget = args.budget if args.budget is not None else default_budget()
    try:
        g = _load(args.file)
        decider = DECIDERS[args.target]
        decision = decider(g, budget=budget)
        report = {
            "target": decision.target,
            "answer": "yes" if decision.answer else "no",
            "certificate": decision.certificate,
            "evidence": decision.evidence,
            "oracle_agreement": None,
        }
        if args.target == "c4":
            report["evidence"]["disjoint_coloring_agrees"] = (
                decide_c4_thm2(g, budget=budget).answer == decision.answer
            )
        if args.target == "c5" and decision.certificate:
            # residue 0 is shown as 5 in the 1..5 labelling
            report["labels_1_to_5"] = {v: int(k) or 5 for v, k in decision.certificate.items()}
        if args.oracle:
            found = oracle(g, args.target, budget=budget)
            report["oracle_agreement"] = (found is not None) == decision.answer
    except IsolatedVertexError as exc:
        return _fail("isolated vertices", str(exc), EXIT_INPUT)
    except (DocumentError, GeometryError, GraphError, OSError) as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_INPUT)
    except SearchBudgetExceeded as exc:
        return _fail("budget exceeded", str(exc), EXIT_BUDGET)
    except CertificateError as exc:  # pragma: no cover - would be a bug
        return _fail("certificate", str(exc), EXIT_INPUT)
    if args.cert_out and decision.certificate:
        coloring = decision.evidence.get("edge_coloring")
        doc = certificate_document(decision.target, decision.certificate, coloring)
        Path(args.cert_out).write_text(json.dumps(doc, indent=2) + "\n")
    _emit(report)
    return EXIT_YES if decision.answer else EXIT_NO


def cmd_verify(args) -> int:
    try:
        g = _load(args.file)
        cert = load_certificate(args.certificate)
        target = canonical_target(cert["target"])
    except (DocumentError, GeometryError, GraphError, OSError, ValueError) as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_INPUT)
    result = verify_map(g, target.graph, cert["map"], HomKind.GEOMETRIC)
    _emit({"target": target.name.value, "valid": result.ok, "violation": result.witness})
    return EXIT_YES if result.ok else EXIT_NO


def cmd_ex(args) -> int:
    try:
        g = _load(args.file)
    except (DocumentError, GeometryError, GraphError, OSError) as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_INPUT)
    ex = edge_crossing_graph(g)
    sub = crossing_subgraph(g)
    cg = crossing_component_graph(g)
    _emit(
        {
            "edge_crossing_graph": {e: sorted(ex.adj[e]) for e in g.edge_ids()},
            "crossing_pairs": len(ex.edges),
            "crossing_subgraph": {"vertices": len(sub.vertices), "edges": len(sub.edges)},
            "crossing_components": [
                {
                    "name": c.name,
                    "vertices": list(c.vertices),
                    "edges": list(c.edges),
                    "self_crossing": c.self_crossing,
                }
                for c in cg.components
            ],
            "component_graph_edges": cg.graph.sorted_edges(),
        }
    )
    return 0


def cmd_poset(args) -> int:
    classes = sample_realizations(NAMED_GRAPHS[args.graph](), args.trials, args.seed)
    poset = build_poset(classes)
    _emit(
        {
            "graph": args.graph,
            "trials": args.trials,
            "seed": args.seed,
            "observed_classes": len(classes),
            "classes": [
                {"index": i, "crossings": c.crossing_count, "observed": c.observed, "signature": c.signature}
                for i, c in enumerate(classes)
            ],
            "hasse_edges": poset.covers,
            "maximal": poset.maximal,
            "chain": poset.is_chain,
        }
    )
    return 0


def cmd_render(args) -> int:
    try:
        g = _load(args.file)
        labels = load_certificate(args.overlay)["map"] if args.overlay else None
        Path(args.out).write_text(render_svg(g, labels))
    except (DocumentError, GeometryError, GraphError, OSError) as exc:
        return _fail(type(exc).__name__, str(exc), EXIT_INPUT)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="geocycle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide colorability onto a geometric target")
    p.add_argument("file")
    p.add_argument("--target", choices=sorted(ORACLE_TARGETS), required=True)
    p.add_argument("--oracle", action="store_true", help="also run the brute-force search")
    p.add_argument("--budget", type=int, help="search node budget (default: $GEOCYCLE_BUDGET or 10^7)")
    p.add_argument("--cert-out", help="write the certificate JSON here on a yes answer")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="re-check a certificate against its target")
    p.add_argument("file")
    p.add_argument("certificate")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ex", help="dump the edge-crossing graph and crossing components")
    p.add_argument("file")
    p.set_defaults(func=cmd_ex)

    p = sub.add_parser("poset", help="sample realizations and print the homomorphism poset")
    p.add_argument("graph", choices=sorted(NAMED_GRAPHS))
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("render", help="write an SVG drawing")
    p.add_argument("file")
    p.add_argument("out")
    p.add_argument("--overlay", help="certificate JSON whose labels are drawn")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
