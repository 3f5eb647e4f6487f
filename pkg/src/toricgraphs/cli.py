"""Command-line interface.

Exit codes: 0 success, 1 domain/usage error, 2 verification failure
(the math disagrees), 3 budget exhaustion.
"""

from __future__ import annotations

import argparse
import ast
import json
import sys
import time
from math import comb

from .errors import BudgetError, ConsistencyError, DomainError, ParseError
from .graphs import SimpleGraph, build_grd, build_k2d, parse_graph, serialize_graph
from .grobner import (
    GrevlexOrder,
    Monomial,
    buchberger,
    default_order,
    format_binomial,
    format_monomial,
    initial_ideal,
)
from .invariants import (
    betti_formula_grd,
    betti_formula_k2d,
    hilbert_enumeration_oracle,
    hilbert_formula_grd,
    hilbert_from_betti,
    hvector_extract,
    krull_dim,
    lower_bounds_from_induced,
    minimal_generators_oracle,
    reg_pdim,
    strand_transfer,
)
from .quotients import betti_taylor_oracle, betti_from_linear_quotients, quotient_profile, sort_ascending
from .walks import (
    default_max_len,
    enumerate_primitive_walks,
    family_primitive_walks,
    walk_to_binomial,
)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_VERIFY = 2
EXIT_BUDGET = 3

DEFAULT_SEARCH_BUDGET = 10_000_000


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{message}\n{self.format_usage()}")


def _add_graph_args(sub, require=True):
    group = sub.add_mutually_exclusive_group(required=require)
    group.add_argument("--graph", metavar="FILE", help="JSON graph file")
    group.add_argument("--grd", nargs=2, type=int, metavar=("R", "D"),
                       help="family graph: K_{2,D} plus an even path of length 2R-2")
    group.add_argument("--k2d", type=int, metavar="D", help="complete bipartite graph K_{2,D}")


def _load_graph(args) -> SimpleGraph:
    if args.graph is not None:
        try:
            with open(args.graph, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise DomainError(f"cannot read graph file: {exc}") from exc
        return parse_graph(text)
    if args.grd is not None:
        return build_grd(args.grd[0], args.grd[1])
    return build_k2d(args.k2d)


def _order_for(graph, args) -> GrevlexOrder:
    spec = getattr(args, "order", None)
    priority = [s.strip() for s in spec.split(",")] if spec else None
    return default_order(graph, priority)


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(human)


def _primitive_basis(graph, order, budget):
    if graph.family is not None:
        walks = family_primitive_walks(graph)
    else:
        walks = enumerate_primitive_walks(graph, node_budget=budget)
    gens = [walk_to_binomial(w) for w in walks]
    return buchberger(gens, order, max_pairs=max(1000, budget // 100))


def cmd_gen(args) -> int:
    graph = _load_graph(args)
    if args.json:
        print(serialize_graph(graph))
    else:
        lines = [f"{len(graph.vertices)} vertices: {' '.join(graph.vertices)}",
                 f"{len(graph.edges)} edges:"]
        for e in graph.edges:
            lines.append(f"  {e.name} = {{{e.ends[0]}, {e.ends[1]}}}")
        print("\n".join(lines))
    return EXIT_OK


def cmd_walks(args) -> int:
    graph = _load_graph(args)
    cap = default_max_len(graph)
    max_len = args.max_len if args.max_len is not None else cap
    walks = enumerate_primitive_walks(graph, max_len, node_budget=args.budget)
    truncated = max_len < cap
    payload = {
        "count": len(walks),
        "max_len": max_len,
        "truncated": truncated,
        "walks": [list(w.edge_names) for w in walks],
    }
    lines = [f"{len(walks)} primitive walk classes (length <= {max_len})"]
    if truncated:
        lines.append(f"note: search truncated below the default cap 2|E| = {cap}")
    lines += [" ".join(w.edge_names) for w in walks]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_gb(args) -> int:
    graph = _load_graph(args)
    order = _order_for(graph, args)
    gb = _primitive_basis(graph, order, args.budget)
    payload = {"basis": [format_binomial(g, order.names) for g in gb]}
    _emit(args, payload, "\n".join(format_binomial(g, order.names) for g in gb))
    return EXIT_OK


def cmd_initial(args) -> int:
    graph = _load_graph(args)
    order = _order_for(graph, args)
    gb = _primitive_basis(graph, order, args.budget)
    ideal = initial_ideal(gb, order)
    names = order.names
    payload = {"generators": [format_monomial(m, names) for m in ideal.min_gens]}
    _emit(args, payload, "\n".join(format_monomial(m, names) for m in ideal.min_gens))
    return EXIT_OK


def _betti_table(args, graph, order):
    if args.method == "formula":
        if graph.family is None:
            raise DomainError("--method formula needs a family graph (--grd or --k2d)")
        if graph.family.kind == "grd":
            return betti_formula_grd(graph.family.r, graph.family.d)
        return betti_formula_k2d(graph.family.d)
    gb = _primitive_basis(graph, order, args.budget)
    ideal = initial_ideal(gb, order)
    if args.method == "quotients":
        ordered = sort_ascending(ideal.min_gens, order)
        profile = quotient_profile(ordered)
        return betti_from_linear_quotients(ordered, profile)
    return betti_taylor_oracle(ideal)


def cmd_betti(args) -> int:
    graph = _load_graph(args)
    order = _order_for(graph, args)
    table = _betti_table(args, graph, order)
    payload = {"method": args.method, "betti": table.to_triples()}
    _emit(args, payload, table.to_grid())
    return EXIT_OK


def cmd_hilbert(args) -> int:
    graph = _load_graph(args)
    order = _order_for(graph, args)
    q = len(graph.edges)
    if args.method == "enumerate":
        max_deg = args.max_deg if args.max_deg is not None else 4
        dims = hilbert_enumeration_oracle(graph, max_deg)
        payload = {"method": "enumerate", "dimensions": dims}
        _emit(args, payload, " ".join(str(x) for x in dims))
        return EXIT_OK
    if args.method == "formula":
        if graph.family is None:
            raise DomainError("--method formula needs a family graph (--grd or --k2d)")
        if graph.family.kind == "grd":
            series = hilbert_formula_grd(graph.family.r, graph.family.d)
        else:
            series = hilbert_from_betti(betti_formula_k2d(graph.family.d), q)
    else:  # betti
        if graph.family is not None and graph.family.kind == "grd":
            table = betti_formula_grd(graph.family.r, graph.family.d)
        elif graph.family is not None:
            table = betti_formula_k2d(graph.family.d)
        else:
            gb = _primitive_basis(graph, order, args.budget)
            table = betti_taylor_oracle(initial_ideal(gb, order))
        series = hilbert_from_betti(table, q)
    hv = hvector_extract(series)
    payload = {
        "method": args.method,
        "numerator": list(series.numerator),
        "denominator_power": series.denom_power,
        "h_vector": list(hv.h),
        "unimodal": hv.unimodal,
    }
    human = f"{series}\nh-vector: {list(hv.h)}  unimodal: {hv.unimodal}"
    if args.max_deg is not None:
        expansion = series.expand(args.max_deg)
        payload["expansion"] = expansion
        human += f"\nexpansion: {' '.join(str(x) for x in expansion)}"
    _emit(args, payload, human)
    return EXIT_OK


def cmd_bounds(args) -> int:
    try:
        parsed = ast.literal_eval(f"[{args.components}]")
        comps = [(int(r), int(d)) for r, d in parsed]
    except (ValueError, SyntaxError, TypeError) as exc:
        raise DomainError(f'cannot parse --components {args.components!r}: expected "(r1,d1),(r2,d2),..."') from exc
    reg_lb, pdim_lb = lower_bounds_from_induced(comps)
    payload = {"components": [list(c) for c in comps], "reg_lower_bound": reg_lb,
               "pdim_lower_bound": pdim_lb}
    _emit(args, payload, f"reg >= {reg_lb}\npdim >= {pdim_lb}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify pipeline


class _Report:
    def __init__(self, graph_spec: str):
        self.graph_spec = graph_spec
        self.checks = []
        self.notes = []

    def run(self, name, fn):
        t0 = time.perf_counter()
        try:
            expected, actual = fn()
            status = "pass" if expected == actual else "fail"
        except (DomainError, ConsistencyError) as exc:
            expected, actual, status = "no error", f"{type(exc).__name__}: {exc}", "fail"
        elapsed = time.perf_counter() - t0
        self.checks.append(
            {"name": name, "status": status, "expected": str(expected),
             "actual": str(actual), "elapsed_s": elapsed}
        )

    @property
    def passed(self) -> bool:
        return all(c["status"] == "pass" for c in self.checks)

    def to_json(self) -> dict:
        # Timings are nondeterministic, so JSON mode omits them; the text
        # report carries them instead.
        return {
            "graph": self.graph_spec,
            "status": "pass" if self.passed else "fail",
            "notes": self.notes,
            "checks": [
                {k: c[k] for k in ("name", "status", "expected", "actual")}
                for c in self.checks
            ],
        }

    def to_text(self) -> str:
        lines = [f"verify {self.graph_spec}"]
        for c in self.checks:
            mark = "PASS" if c["status"] == "pass" else "FAIL"
            lines.append(f"  {mark} {c['name']} ({c['elapsed_s']:.3f}s)")
            if c["status"] != "pass":
                lines.append(f"       expected: {c['expected']}")
                lines.append(f"       actual:   {c['actual']}")
        for note in self.notes:
            lines.append(f"  note: {note}")
        lines.append("overall: " + ("pass" if self.passed else "fail"))
        return "\n".join(lines)


def _family_initial_gens(graph, order) -> list[Monomial]:
    """The closed-form minimal generators F_d (+ H_{r,d} for the path family)."""
    fam = graph.family
    d = fam.d
    idx = graph.edge_index
    nvars = len(graph.edges)
    gens = []
    for i in range(1, d + 1):
        for j in range(1, i):
            gens.append(Monomial.from_variables(nvars, [idx[f"a{i}"], idx[f"b{j}"]]))
    if fam.kind == "grd":
        evens = [idx[f"e{k}"] for k in range(2, 2 * fam.r - 1, 2)]
        for i in range(1, d + 1):
            gens.append(Monomial.from_variables(nvars, [idx[f"a{i}"]] + evens))
    return gens


def _expected_n_sequence(d: int, with_path_strand: bool) -> list[int]:
    seq = []
    for k in range(d - 1):
        seq.extend([k] * (k + 1))
    if with_path_strand:
        seq.extend([d - 1] * d)
    return seq


def _strand_dict(table, k):
    return table.strand(k)


def verify_family(r: int | None, d: int, budget: int) -> _Report:
    is_grd = r is not None
    if is_grd:
        graph = build_grd(r, d)
        spec = f"G(r={r},d={d})"
    else:
        graph = build_k2d(d)
        spec = f"K(2,{d})"
    report = _Report(spec)
    order = default_order(graph)
    q = len(graph.edges)
    max_len = default_max_len(graph)
    closed_walks = family_primitive_walks(graph)

    def check_walks():
        found = enumerate_primitive_walks(graph, max_len, node_budget=budget)
        expected = sorted(w.canonical_form() for w in closed_walks)
        actual = sorted(w.canonical_form() for w in found)
        return expected, actual

    report.run("primitive-walks", check_walks)

    gens = [walk_to_binomial(w) for w in closed_walks]
    gb = buchberger(gens, order)

    def check_gb():
        expected = sorted((order.key(f.lhs), order.key(f.rhs))
                          for f in (order.normalize(g) for g in gens))
        actual = sorted((order.key(f.lhs), order.key(f.rhs)) for f in gb)
        return expected, actual

    report.run("groebner-basis", check_gb)

    ideal = initial_ideal(gb, order)
    closed_gens = _family_initial_gens(graph, order)

    def check_initial():
        return sorted(m.exps for m in closed_gens), sorted(m.exps for m in ideal.min_gens)

    report.run("initial-ideal", check_initial)

    ordered = sort_ascending(ideal.min_gens, order)
    profile = quotient_profile(ordered)

    def check_quotients():
        expected = (True, _expected_n_sequence(d, with_path_strand=is_grd))
        return expected, (profile.linear, profile.n)

    report.run("linear-quotients", check_quotients)

    formula = betti_formula_grd(r, d) if is_grd else betti_formula_k2d(d)

    def check_betti_quotients():
        return formula.entries, betti_from_linear_quotients(ordered, profile).entries

    report.run("betti-linear-quotients", check_betti_quotients)

    if len(ideal) <= 18:
        def check_betti_taylor():
            return formula.entries, betti_taylor_oracle(ideal).entries

        report.run("betti-taylor-oracle", check_betti_taylor)
    else:
        report.notes.append(
            f"betti-taylor-oracle skipped: {len(ideal)} generators exceed the 2^18 subset cap"
        )

    def check_toric_generators():
        top = max(m.degree for m in ideal.min_gens)
        expected = {}
        for m in ideal.min_gens:
            expected[m.degree] = expected.get(m.degree, 0) + 1
        for j in range(2, top + 1):
            expected.setdefault(j, 0)
        return expected, minimal_generators_oracle(graph, top)

    report.run("toric-generator-degrees", check_toric_generators)

    if is_grd:
        def check_linear_strand():
            return _strand_dict(betti_formula_k2d(d), 2), _strand_dict(formula, 2)

        report.run("linear-strand-bipartite", check_linear_strand)

    def check_transfer():
        matched = {2} if is_grd else set()
        cert = strand_transfer(formula, matched, hs_equal=True)
        return formula.entries, cert.table.entries

    report.run("strand-transfer", check_transfer)

    series = hilbert_from_betti(formula, q)

    if is_grd:
        def check_hilbert_formula():
            expected = hilbert_formula_grd(r, d)
            return (expected.numerator, expected.denom_power), (series.numerator, series.denom_power)

        report.run("hilbert-from-betti", check_hilbert_formula)

    def check_hilbert_enumeration():
        return series.expand(4), hilbert_enumeration_oracle(graph, 4)

    report.run("hilbert-enumeration", check_hilbert_enumeration)

    def check_summary():
        summary = reg_pdim(formula)
        dim = krull_dim(graph)
        expected_reg = r if is_grd else 2
        expected_pdim = d - 1 if is_grd else d - 2
        expected_dim = d + 2 * r - 2 if is_grd else d + 1
        expected = (expected_reg, expected_pdim, expected_dim, True)
        actual = (summary.reg, summary.pdim, dim, q - (summary.pdim + 1) == dim)
        return expected, actual

    report.run("homological-summary", check_summary)

    def check_hvector():
        hv = hvector_extract(series)
        expected = ((1,) + (d,) * (r - 1), True) if is_grd else ((1, d - 1), True)
        return expected, (hv.h, hv.unimodal)

    report.run("h-vector", check_hvector)

    return report


def cmd_verify(args) -> int:
    if args.graph is not None:
        raise DomainError("verify works on family graphs; pass --grd R D or --k2d D")
    if args.grd is not None:
        report = verify_family(args.grd[0], args.grd[1], args.budget)
    else:
        report = verify_family(None, args.k2d, args.budget)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(report.to_text())
    return EXIT_OK if report.passed else EXIT_VERIFY


# ---------------------------------------------------------------------------


def _build_parser() -> _Parser:
    parser = _Parser(prog="toricgraphs",
                     description="Toric ideals of graphs: Groebner bases, Betti numbers, "
                                 "Hilbert series, and cross-check oracles.")
    subs = parser.add_subparsers(dest="command", required=True)

    def common(sub, graph=True):
        if graph:
            _add_graph_args(sub)
        sub.add_argument("--json", action="store_true", help="machine-readable output")
        sub.add_argument("--budget", type=int, default=DEFAULT_SEARCH_BUDGET,
                         help="search-node budget for walk enumeration")

    s = subs.add_parser("gen", help="construct a graph and print it")
    _add_graph_args(s)
    s.add_argument("--json", action="store_true", help="emit the JSON graph format")
    s.set_defaults(fn=cmd_gen)

    s = subs.add_parser("walks", help="enumerate primitive walk classes")
    common(s)
    s.add_argument("--max-len", type=int, help="even length cap (default 2|E|)")
    s.set_defaults(fn=cmd_walks)

    s = subs.add_parser("gb", help="reduced Groebner basis of the toric ideal")
    common(s)
    s.add_argument("--order", help="comma-separated variable priority, highest first")
    s.set_defaults(fn=cmd_gb)

    s = subs.add_parser("initial", help="minimal generators of the initial ideal")
    common(s)
    s.add_argument("--order", help="comma-separated variable priority, highest first")
    s.set_defaults(fn=cmd_initial)

    s = subs.add_parser("betti", help="graded Betti numbers")
    common(s)
    s.add_argument("--order", help="comma-separated variable priority, highest first")
    s.add_argument("--method", choices=["formula", "quotients", "oracle"], default="formula")
    s.set_defaults(fn=cmd_betti)

    s = subs.add_parser("hilbert", help="Hilbert series / function")
    common(s)
    s.add_argument("--order", help="comma-separated variable priority, highest first")
    s.add_argument("--method", choices=["formula", "betti", "enumerate"], default="formula")
    s.add_argument("--max-deg", type=int, help="expansion / enumeration degree")
    s.set_defaults(fn=cmd_hilbert)

    s = subs.add_parser("bounds", help="reg/pdim lower bounds from induced family subgraphs")
    s.add_argument("--components", required=True, metavar='"(r1,d1),(r2,d2),..."')
    s.add_argument("--json", action="store_true")
    s.set_defaults(fn=cmd_bounds)

    s = subs.add_parser("verify", help="run the full cross-check pipeline on a family graph")
    common(s)
    s.set_defaults(fn=cmd_verify)

    return parser


def run(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except BudgetError as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
