"""Command line surface with deterministic machine-readable reports.

Every command reads a hypergraph (file, stdin, or a ``--gen`` constructor),
runs one library operation and prints a report.  Exit codes: 0 success,
1 domain error, 2 parse error, 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import json
import sys
from itertools import combinations

from .closure import matroidal_closure
from .core import (
    BudgetExceeded,
    Hypergraph,
    HypermatroidError,
    InvalidParams,
    connected_components,
    is_simple,
    make_hypergraph,
)
from .cycles import NotACycle, berge_cycle_from_matroidal, cycle_search
from .derived import (
    Classification,
    classify_matroid,
    hypergraphical_matroid,
    iterate_derivation,
)
from .io import ParseError, input_digest, parse_hypergraph
from .matroid import (
    Matroid,
    is_matroid,
    matroid_components,
    rank_of,
    theta,
    uniform,
)
from .reference import census_matroids
from .trees import lorea_independent, main_independent, tree_report

def _generate(spec: str) -> Hypergraph:
    name, _, rest = spec.partition(":")
    try:
        nums = [int(x) for x in rest.split(",")] if rest else []
    except ValueError:
        raise InvalidParams(f"bad generator arguments in {spec!r}") from None
    if name == "uniform" and len(nums) == 2:
        return uniform(*nums).as_hypergraph()
    if name == "theta" and len(nums) == 3:
        return theta(*nums).as_hypergraph()
    if name == "complete" and len(nums) == 2:
        n, k = nums
        if not 1 <= k <= n:
            raise InvalidParams("complete:n,k needs 1 <= k <= n")
        labels = [f"v{i}" for i in range(1, n + 1)]
        return make_hypergraph(labels, combinations(labels, k))
    raise InvalidParams(
        f"unknown generator {spec!r}; use uniform:n,r theta:p,q,r or complete:n,k"
    )


def _load(args) -> Hypergraph:
    if getattr(args, "gen", None):
        if args.input is not None:
            raise InvalidParams("give either an input file or --gen, not both")
        return _generate(args.gen)
    if args.input is None:
        raise InvalidParams("no input: pass a file, '-' for stdin, or --gen")
    if args.input == "-":
        return parse_hypergraph(sys.stdin.read())
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            return parse_hypergraph(fh.read())
    except OSError as exc:
        raise InvalidParams(f"cannot read {args.input}: {exc}") from None


def _as_matroid(h: Hypergraph, warnings: list[str]) -> Matroid:
    if is_matroid(h):
        return Matroid(h.ground, h.edges, _trusted=True)
    warnings.append("input is not a matroid; classifying its matroidal closure")
    matroid, _ = matroidal_closure(h)
    return matroid


def _edge_indices(args, h: Hypergraph) -> list[int]:
    raw = getattr(args, "edges", None)
    if raw is None:
        return list(range(h.n_edges))
    try:
        return [int(x) for x in raw.replace(",", " ").split()]
    except ValueError:
        raise InvalidParams(f"bad edge index list {raw!r}") from None


def _matroid_payload(m: Matroid) -> dict:
    return {
        "n_elements": m.n_elements,
        "n_circuits": m.n_circuits,
        "rank": m.rank,
        "nullity": m.nullity,
        "circuits": [list(c.labels()) for c in m.circuits],
    }


def _classification_payload(c: Classification) -> dict:
    out: dict = {"kind": c.kind}
    if c.evidence:
        out["evidence"] = dict(sorted(c.evidence.items()))
    if c.limit is not None:
        out["limit"] = _matroid_payload(c.limit)
    return out


def _cmd_info(h: Hypergraph, args, warnings) -> dict:
    sizes = {len(e) for e in h.edges}
    matroid, _ = matroidal_closure(h)
    comps = connected_components(h)
    return {
        "n_vertices": h.n_vertices,
        "n_edges": h.n_edges,
        "simple": is_simple(h),
        "regular": sizes.pop() if len(sizes) == 1 else None,
        "components": [{"n_vertices": c.n_vertices, "n_edges": c.n_edges} for c in comps],
        "rank": matroid.rank,
        "nullity": matroid.nullity,
    }


def _cmd_closure(h: Hypergraph, args, warnings) -> dict:
    matroid, report = matroidal_closure(h, guard=args.elimination_guard)
    return {
        "n_vertices": h.n_vertices,
        "n_edges": h.n_edges,
        "circuits": [list(c.labels()) for c in matroid.circuits],
        "n_circuits": matroid.n_circuits,
        "iterations": report.iterations,
        "intermediate_sizes": list(report.intermediate_sizes),
        "rank": matroid.rank,
        "nullity": matroid.nullity,
    }


def _cmd_cycles(h: Hypergraph, args, warnings) -> dict:
    cycles, truncated = cycle_search(h, args.max_size)
    if truncated:
        warnings.append("enumeration truncated at the cycle size cap")
    return {
        "n_vertices": h.n_vertices,
        "n_edges": h.n_edges,
        "edges": h.edge_labels(),
        "cycles": [list(c) for c in cycles],
        "count": len(cycles),
        "truncated": truncated,
    }


def _cmd_berge(h: Hypergraph, args, warnings) -> dict:
    cycles, truncated = cycle_search(h, args.max_size)
    if truncated:
        warnings.append("enumeration truncated at the cycle size cap")
    witnesses = []
    for cyc in cycles:
        try:
            bc = berge_cycle_from_matroidal(h, cyc)
            witnesses.append(
                {"cycle": list(cyc), "vertices": list(bc.vertices), "edges": list(bc.edges)}
            )
        except NotACycle as exc:
            warnings.append(f"no Berge witness for cycle {list(cyc)}: {exc}")
            witnesses.append({"cycle": list(cyc), "vertices": None, "edges": None})
    return {
        "n_vertices": h.n_vertices,
        "n_edges": h.n_edges,
        "edges": h.edge_labels(),
        "witnesses": witnesses,
    }


def _cmd_rank(h: Hypergraph, args, warnings) -> dict:
    matroid, _ = matroidal_closure(h)
    profile = rank_of(matroid, matroid.ground.full())
    return {
        "n_vertices": h.n_vertices,
        "n_edges": h.n_edges,
        "rank": profile.rank,
        "nullity": profile.nullity,
        "basis": list(profile.basis.labels()),
    }


def _cmd_check_matroid(h: Hypergraph, args, warnings) -> dict:
    return {
        "n_vertices": h.n_vertices,
        "n_edges": h.n_edges,
        "simple": is_simple(h),
        "is_matroid": is_matroid(h),
    }


def _cmd_derive(h: Hypergraph, args, warnings) -> dict:
    matroid = hypergraphical_matroid(h, mode=args.mode, budget=args.budget_circuits)
    if args.mode == "edges":
        sources = list(h.edges)
    else:
        closure_m, _ = matroidal_closure(h)
        sources = list(closure_m.circuits)
    payload = _matroid_payload(matroid)
    payload["mode"] = args.mode
    payload["elements"] = [
        {"element": lab, "source": list(src.labels())}
        for lab, src in zip(matroid.ground.labels, sources)
    ]
    return payload


def _cmd_iterate(h: Hypergraph, args, warnings) -> dict:
    m = _as_matroid(h, warnings)
    trace = iterate_derivation(m, max_steps=args.max_steps, circuit_budget=args.budget_circuits)
    return {
        "steps": [
            {
                "ground_size": s.ground_size,
                "n_circuits": s.n_circuits,
                "rank": s.rank,
                "nullity": s.nullity,
            }
            for s in trace.steps
        ],
        "ground_sizes": [s.ground_size for s in trace.steps],
        "classification": _classification_payload(trace.classification),
    }


def _cmd_classify(h: Hypergraph, args, warnings) -> dict:
    m = _as_matroid(h, warnings)
    comps = matroid_components(m)
    results = [classify_matroid(c) for c in comps]
    per_component = []
    for comp, res in zip(comps, results):
        entry = {"elements": list(comp.ground.labels)}
        entry.update(_classification_payload(res))
        per_component.append(entry)
    kinds = {r.kind for r in results}
    if "diverges" in kinds:
        combined = "diverges"
    elif "converges" in kinds:
        combined = "converges"
    else:
        combined = "fades"
    payload: dict = {
        "n_elements": m.n_elements,
        "n_circuits": m.n_circuits,
        "rank": m.rank,
        "nullity": m.nullity,
        "components": per_component,
        "classification": combined,
    }
    if combined == "converges":
        n_limits = sum(1 for r in results if r.kind == "converges")
        payload["limit"] = "U(4,2)" if n_limits == 1 else f"{n_limits} x U(4,2)"
    return payload


def _cmd_lorea(h: Hypergraph, args, warnings) -> dict:
    picked = _edge_indices(args, h)
    return {
        "n_vertices": h.n_vertices,
        "n_edges": h.n_edges,
        "picked": sorted(set(picked)),
        "independent": lorea_independent(h, picked),
    }


def _cmd_main_indep(h: Hypergraph, args, warnings) -> dict:
    picked = _edge_indices(args, h)
    return {
        "n_vertices": h.n_vertices,
        "n_edges": h.n_edges,
        "k": args.k,
        "picked": sorted(set(picked)),
        "independent": main_independent(h, args.k, picked),
    }


def _cmd_tree(h: Hypergraph, args, warnings) -> dict:
    report = tree_report(h)
    return {
        "edge_count": report.edge_count,
        "vertex_count": report.vertex_count,
        "rank": report.rank,
        "attains_bound": report.attains_bound,
        "cycle_free": report.cycle_free,
        "verdict": report.verdict,
    }


def _cmd_census(args, warnings) -> dict:
    classes = census_matroids(
        args.n, rank=args.rank, simple=args.simple, connected=args.connected
    )
    return {
        "n": args.n,
        "constraints": {
            "rank": args.rank,
            "simple": args.simple,
            "connected": args.connected,
        },
        "count": len(classes),
        "classes": [_matroid_payload(m) for m in classes],
    }


def _render_text(report: dict) -> str:
    lines = [f"command: {report['command']}"]
    if report.get("input_digest"):
        lines.append(f"input-sha256: {report['input_digest']}")
    for w in report["warnings"]:
        lines.append(f"warning: {w}")
    for key in sorted(report["payload"]):
        lines.append(f"{key}: {json.dumps(report['payload'][key], sort_keys=True)}")
    return "\n".join(lines) + "\n"


def _emit(report: dict, fmt: str, quiet: bool) -> None:
    if quiet:
        report = {**report, "warnings": []}
    if fmt == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True) + "\n")
    else:
        sys.stdout.write(_render_text(report))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypermatroid",
        description="Matroidal closures, cycles and derived matroids of hypergraphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", help="input file or '-' for stdin")
            p.add_argument(
                "--gen",
                help="generate input: uniform:n,r | theta:p,q,r | complete:n,k",
            )
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--quiet", action="store_true", help="suppress warnings")

    common(sub.add_parser("info", help="sizes, regularity, components, rank"))

    p = sub.add_parser("closure", help="circuits of the matroidal closure")
    common(p)
    p.add_argument("--elimination-guard", choices=("paper", "classic"), default="paper")

    p = sub.add_parser("cycles", help="enumerate matroidal cycles")
    common(p)
    p.add_argument("--max-size", type=int, default=None)

    p = sub.add_parser("berge", help="Berge witnesses for the matroidal cycles")
    common(p)
    p.add_argument("--max-size", type=int, default=None)

    common(sub.add_parser("rank", help="rank, nullity and a witness basis"))
    common(sub.add_parser("check-matroid", help="test the circuit axioms"))

    p = sub.add_parser("derive", help="derived matroid of the hypergraph")
    common(p)
    p.add_argument("--mode", choices=("edges", "closure"), default="edges")
    p.add_argument("--budget-circuits", type=int, default=20)

    p = sub.add_parser("iterate", help="iterate derivation and classify the chain")
    common(p)
    p.add_argument("--max-steps", type=int, default=5)
    p.add_argument("--budget-circuits", type=int, default=20)

    p = sub.add_parser("classify", help="closed-form fade/converge/diverge verdict")
    common(p)

    p = sub.add_parser("lorea", help="forest-transversal independence test")
    common(p)
    p.add_argument("--edges", help="comma separated edge indices (default: all)")

    p = sub.add_parser("main-indep", help="sparsity independence test (k-regular)")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--edges", help="comma separated edge indices (default: all)")

    common(sub.add_parser("tree", help="matroidal/natural tree report"))

    p = sub.add_parser("census", help="isomorphism classes of small matroids")
    common(p, with_input=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--simple", action="store_true")
    p.add_argument("--connected", action="store_true")

    return parser


_HANDLERS = {
    "info": _cmd_info,
    "closure": _cmd_closure,
    "cycles": _cmd_cycles,
    "berge": _cmd_berge,
    "rank": _cmd_rank,
    "check-matroid": _cmd_check_matroid,
    "derive": _cmd_derive,
    "iterate": _cmd_iterate,
    "classify": _cmd_classify,
    "lorea": _cmd_lorea,
    "main-indep": _cmd_main_indep,
    "tree": _cmd_tree,
}


def _run(args) -> dict:
    warnings: list[str] = []
    if args.command == "census":
        payload = _cmd_census(args, warnings)
        digest = None
    else:
        h = _load(args)
        payload = _HANDLERS[args.command](h, args, warnings)
        digest = input_digest(h)
    return {
        "command": args.command,
        "input_digest": digest,
        "payload": payload,
        "warnings": warnings,
    }


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        report = _run(args)
    except ParseError as exc:
        _fail(args, "parse-error", str(exc))
        return 2
    except BudgetExceeded as exc:
        _fail(args, "budget-exceeded", str(exc))
        return 3
    except HypermatroidError as exc:
        _fail(args, "domain-error", str(exc))
        return 1
    _emit(report, args.format, args.quiet)
    return 0


def _fail(args, kind: str, message: str) -> None:
    if getattr(args, "format", "text") == "json":
        doc = {"command": args.command, "error": {"kind": kind, "message": message}}
        sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    sys.stderr.write(f"error: {message}\n")


if __name__ == "__main__":
    sys.exit(main())
