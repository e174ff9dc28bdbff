"""Command-line entry point: ``vnumber <subcommand> ...``.

Exit codes: 0 success, 1 computation or validation failure, 2 parse error.
Search caps come from ``VNUMBER_MAX_VERTICES`` and ``VNUMBER_MAX_VARS``.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import __version__
from .betti import betti_table
from .engine import oracle_search, v_number
from .errors import ParseError, PreconditionError, VNumberError
from .fixtures import run_fixtures
from .graphs.core import Graph, Matching, edge_ideal, from_mask, require_searchable
from .graphs.invariants import (
    FinbowClass,
    basic_invariants,
    coverage_class,
    cycle_invariants,
    finbow_class,
    is_W2,
    shedding_all,
    v_graph,
)
from .graphs.witnesses import WitnessPair, find_simplicial_partition, simplex_partition_witness, vwc_witness
from .io import resolve_graph, load_input, parse_ideal
from .monomial import Monomial, MonomialIdeal, PrimeSupport, associated_primes, height_and_dim
from .properties import GRAPH_CHECKS, random_graph, random_squarefree_ideal, reg_gap_candidates, run_checks

DEFAULT_SEED = 20240101


def fmt(value: Any) -> str:
    """Canonical text for report values."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "-"
    if isinstance(value, Matching):
        return fmt_matching(value.edges)
    if isinstance(value, (Monomial, MonomialIdeal, PrimeSupport)):
        return str(value)
    if isinstance(value, FinbowClass):
        return value.value
    if isinstance(value, (tuple, list)):
        return "{" + ",".join(fmt(v) for v in value) + "}"
    return str(value)


def fmt_matching(edges: Sequence[Sequence[int]]) -> str:
    return "{" + ",".join(f"{{{u},{v}}}" for u, v in edges) + "}"


@dataclass
class Report:
    """Ordered key/value pairs plus optional free-form blocks."""

    title: str
    rows: list[tuple[str, str]] = field(default_factory=list)
    blocks: list[tuple[str, str]] = field(default_factory=list)

    def add(self, key: str, value: Any) -> None:
        self.rows.append((key, fmt(value)))

    def render(self, style: str) -> str:
        if style == "kv":
            lines = [f"input={self.title}"] + [f"{k}={v}" for k, v in self.rows]
            return "\n".join(lines) + "\n"
        width = max((len(k) for k, _ in self.rows), default=0)
        lines = [f"# {self.title}"] + [f"{k.ljust(width)}  {v}" for k, v in self.rows]
        for name, text in self.blocks:
            lines += ["", f"{name}:", text]
        return "\n".join(lines) + "\n"


# -- subcommands ------------------------------------------------------------------


def cmd_vnumber(args) -> tuple[Report, int]:
    obj = load_input(args.input)
    I = edge_ideal(obj) if isinstance(obj, Graph) else obj
    rep = Report(" ".join(args.input))
    result = v_number(I)
    rep.add("vars", I.num_vars)
    rep.add("ideal", I)
    rep.add("Ass", [str(p) for p in associated_primes(I)])
    rep.add("v", result.v)
    for k, r in enumerate(result.per_prime, start=1):
        rep.add(f"p{k}", r.prime)
        rep.add(f"p{k}.MG", list(r.module_min_gens))
        rep.add(f"p{k}.F", list(r.prime_gens))
        rep.add(f"p{k}.alpha", r.alpha)
        rep.add(f"p{k}.v", r.v_local)
        rep.add(f"p{k}.witness", r.witness)
    return rep, 0


def _maybe(fn, *args):
    try:
        return fn(*args)
    except PreconditionError:
        return None


def cmd_invariants(args) -> tuple[Report, int]:
    G = resolve_graph(args.graph)
    require_searchable(G)
    rep = Report(" ".join(args.graph))
    inv = basic_invariants(G)
    rep.add("vertices", G.num_vertices)
    rep.add("edges", len(G.edges))
    rep.add("beta0", inv.beta0)
    rep.add("alpha0", inv.alpha0)
    rep.add("beta1", inv.beta1)
    rep.add("im", inv.im)
    rep.add("idom", inv.idom)
    vw = _maybe(v_graph, G)
    rep.add("v", None if vw is None else vw[0])
    rep.add("v.witness", None if vw is None else vw[1])
    if G.edges:
        table = betti_table(edge_ideal(G))
        ht, dim = height_and_dim(edge_ideal(G))
        rep.add("reg", table.regularity)
        rep.add("pd", table.projective_dimension)
        rep.add("ht", ht)
        rep.add("dim", dim)
        rep.blocks.append(("betti", table.format()))
    else:
        for key in ("reg", "pd", "ht", "dim"):
            rep.add(key, None)
    cov = coverage_class(G)
    rep.add("well_covered", cov.well_covered)
    rep.add("very_well_covered", cov.very_well_covered)
    rep.add("W2", _maybe(is_W2, G))
    rep.add("shedding_failures", list(shedding_all(G).failures))
    fc = finbow_class(G)
    rep.add("finbow", None if fc is FinbowClass.OUT_OF_SCOPE else fc)
    return rep, 0


def _add_witness(rep: Report, G: Graph, w: WitnessPair) -> int:
    problems = w.violations(G)
    rep.add("D", w.D)
    rep.add("P'", w.P_prime)
    if w.simplicial_roots is not None:
        rep.add("roots", w.simplicial_roots)
    v = v_graph(G)[0]
    im = basic_invariants(G).im
    rep.add("v", v)
    rep.add("im", im)
    rep.add("valid", not problems)
    rep.add("v<=|D|<=im", v <= len(w.D) <= im)
    return 0 if not problems and v <= len(w.D) <= im else 1


def cmd_witness(args) -> tuple[Report, int]:
    G = resolve_graph(args.graph)
    rep = Report(" ".join(args.graph))
    cov = coverage_class(G)
    if cov.very_well_covered:
        rep.add("construction", "very well-covered")
        rep.add("matching", cov.property_P_witness)
        return rep, _add_witness(rep, G, vwc_witness(G, cov.property_P_witness))
    partition = find_simplicial_partition(G)
    if partition is not None:
        rep.add("construction", "simplicial partition")
        rep.add("partition", partition)
        return rep, _add_witness(rep, G, simplex_partition_witness(G, partition))
    raise PreconditionError("graph is neither very well-covered nor partitioned by simplexes")


def cmd_cycle(args) -> tuple[Report, int]:
    c = cycle_invariants(args.s)
    rep = Report(f"cycle {args.s}")
    reg = betti_table(edge_ideal(resolve_graph(["cycle", str(args.s)]))).regularity
    rep.add("s", c.s)
    rep.add("v", c.v)
    rep.add("im", c.im)
    rep.add("reg", c.reg)
    rep.add("reg.hochster", reg)
    rep.add("holds", c.holds)
    rep.add("A", c.A)
    rep.add("P", c.P)
    return rep, 0 if reg == c.reg else 1


def cmd_oracle_check(args) -> tuple[Report, int]:
    I = parse_ideal(_read(args.ideal))
    rep = Report(args.ideal)
    v = v_number(I).v
    d, f = oracle_search(I, args.cap)
    rep.add("v", v)
    rep.add("oracle", d)
    rep.add("oracle.witness", f)
    rep.add("cap", args.cap)
    rep.add("agree", v == d)
    return rep, 0 if v == d else 1


def cmd_fixtures(args) -> tuple[Report, int]:
    rep = Report("fixtures")
    results = run_fixtures()
    for r in results:
        rep.add(r.name, "PASS" if r.ok else "FAIL")
        for c in r.failures():
            rep.add(f"{r.name}.{c.label}", f"expected {fmt(c.expected)}, got {fmt(c.actual)}")
    return rep, 0 if all(r.ok for r in results) else 1


def cmd_properties(args) -> tuple[Report, int]:
    rng = random.Random(args.seed)
    graphs = [random_graph(n, rng.choice((0.2, 0.35, 0.5, 0.7)), rng) for n in range(3, args.max_n + 1) for _ in range(args.samples)]
    rep = Report(f"properties seed {args.seed}, max_n {args.max_n}, samples {args.samples}")
    results = run_checks(graphs)
    total = 0
    for name in GRAPH_CHECKS:
        rep.add(name, len(results[name]))
        total += len(results[name])
        for problem in results[name][:3]:
            rep.blocks.append((name, problem))
    # open problem: candidates are listed but do not change the exit code
    ideals = [random_squarefree_ideal(rng.randint(2, 6), rng.randint(1, 6), rng) for _ in range(args.samples * 5)]
    candidates = reg_gap_candidates(ideals)
    rep.add("open.v_gt_reg_plus_1", len(candidates))
    for c in candidates:
        rep.blocks.append(("open.v_gt_reg_plus_1", c))
    return rep, 0 if total == 0 else 1


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


# -- driver -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vnumber", description="v-numbers of monomial and edge ideals")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--format", choices=("text", "kv"), default="text", help="plain table or key=value lines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("vnumber", help="v-number with per-prime data for an ideal file, graph file or named graph")
    p.add_argument("input", nargs="+")
    p.set_defaults(run=cmd_vnumber)

    p = sub.add_parser("invariants", help="graph invariants, Betti table and classifications")
    p.add_argument("graph", nargs="+")
    p.set_defaults(run=cmd_invariants)

    p = sub.add_parser("witness", help="constructive (D, P') witness with validity checks")
    p.add_argument("graph", nargs="+")
    p.set_defaults(run=cmd_witness)

    p = sub.add_parser("cycle", help="v, im and reg of the cycle C_s")
    p.add_argument("s", type=int)
    p.set_defaults(run=cmd_cycle)

    p = sub.add_parser("oracle-check", help="compare v_number with brute-force enumeration")
    p.add_argument("ideal")
    p.add_argument("--cap", type=int, default=64, help="largest degree enumerated (default 64)")
    p.set_defaults(run=cmd_oracle_check)

    p = sub.add_parser("fixtures", help="reproduce the worked examples; PASS/FAIL per example")
    p.set_defaults(run=cmd_fixtures)

    p = sub.add_parser("properties", help="randomized property checks on graphs")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"RNG seed (default {DEFAULT_SEED})")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--samples", type=int, default=10, help="graphs per vertex count")
    p.set_defaults(run=cmd_properties)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report, code = args.run(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (VNumberError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(report.render(args.format))
    return code


if __name__ == "__main__":
    sys.exit(main())
