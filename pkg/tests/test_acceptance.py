"""End-to-end acceptance checks, one test per criterion.

Each test records PASS/FAIL through ``record_criterion``; the summary is
printed at the end of the pytest run.
"""

import itertools
import random
import time

from conftest import atlas, atlas_no_isolated
from vnumber.betti import betti_table, reg_dim_bound_check, regularity
from vnumber.engine import is_complete_intersection, v_number, v_oracle
from vnumber.fixtures import mixed_ideal
from vnumber.graphs.core import Graph, cycle, edge_ideal, octahedron, t10, two_triangles, whisker
from vnumber.graphs.invariants import basic_invariants, coverage_class, cycle_invariants, in_A_G, is_W2, v_graph
from vnumber.monomial import Monomial, MonomialIdeal, associated_primes, colon_monomial, height_and_dim, polarize
from vnumber.properties import GRAPH_CHECKS, random_graph, run_checks

SEED = 20240101


def expect(problems, label, expected, actual):
    if expected != actual:
        problems.append(f"{label}: expected {expected!r}, got {actual!r}")


def test_criterion_1_mixed_ideal(record_criterion):
    start = time.perf_counter()
    problems = []
    I = mixed_ideal()
    result = v_number(I)
    by_prime = {r.prime.vars: r for r in result.per_prime}
    expect(problems, "v", 11, result.v)
    expect(problems, "oracle v", 11, v_oracle(I, degree_cap=12))
    expect(problems, "Ass", [(1, 2), (1, 2, 3)], [p.vars for p in associated_primes(I)])
    expect(problems, "MG (t1,t2)", {Monomial((4, 4, 0)), Monomial((3, 3, 5))}, set(by_prime[(1, 2)].module_min_gens))
    expect(problems, "MG (t1,t2,t3)", {Monomial((4, 4, 4))}, set(by_prime[(1, 2, 3)].module_min_gens))
    expect(problems, "(I:g1)", MonomialIdeal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 5)]), colon_monomial(I, Monomial((4, 4, 0))))
    expect(problems, "(I:g2)", MonomialIdeal.prime(3, (1, 2)), colon_monomial(I, Monomial((3, 3, 5))))
    expect(problems, "polarized vars", 15, polarize(I).total_vars)
    expect(problems, "reg", 12, betti_table(I).regularity)
    elapsed = time.perf_counter() - start
    if elapsed >= 10:
        problems.append(f"runtime {elapsed:.1f}s >= 10s")
    assert record_criterion(1, "mixed ideal: v=11, Ass, module generators, colons, reg=12", problems), problems


def graph_profile(G: Graph) -> dict:
    inv = basic_invariants(G)
    table = betti_table(edge_ideal(G))
    return {
        "v": v_graph(G)[0],
        "im": inv.im,
        "reg": table.regularity,
        "ht": height_and_dim(edge_ideal(G))[0],
        "pd": table.projective_dimension,
        "beta0": inv.beta0,
    }


def test_criterion_2_c7_and_t10(record_criterion):
    start = time.perf_counter()
    problems = []
    expected = {
        "C7": (cycle(7), {"v": 2, "im": 2, "reg": 2, "ht": 4, "pd": 5, "beta0": 3}),
        "T10": (t10(), {"v": 2, "im": 2, "reg": 3, "ht": 6, "pd": 7, "beta0": 4}),
    }
    for name, (G, want) in expected.items():
        got = graph_profile(G)
        for key, value in want.items():
            expect(problems, f"{name} {key}", value, got[key])
        expect(problems, f"{name} {{1,4}} in A_G", True, in_A_G(G, (1, 4)))
    elapsed = time.perf_counter() - start
    if elapsed >= 60:
        problems.append(f"runtime {elapsed:.1f}s >= 60s")
    assert record_criterion(2, "C7 and T10 invariants", problems), problems


def test_criterion_3_octahedron(record_criterion):
    problems = []
    G = octahedron()
    cov = coverage_class(G)
    expect(problems, "well-covered", True, cov.well_covered)
    expect(problems, "very well-covered", False, cov.very_well_covered)
    expect(problems, "alpha0", 4, basic_invariants(G).alpha0)
    prof = graph_profile(G)
    expect(problems, "v, im, reg", (1, 1, 1), (prof["v"], prof["im"], prof["reg"]))
    assert record_criterion(3, "octahedron: well-covered, not very, v=im=reg=1", problems), problems


def test_criterion_4_two_triangles(record_criterion):
    problems = []
    G = two_triangles()
    expect(problems, "W2", True, is_W2(G))
    expect(problems, "v", 2, v_graph(G)[0])
    expect(problems, "beta0", 2, basic_invariants(G).beta0)
    assert record_criterion(4, "two triangles: W2, v=beta0=2", problems), problems


def test_criterion_5_cycle_sweep(record_criterion):
    start = time.perf_counter()
    problems = []
    for s in range(3, 13):
        c = cycle_invariants(s)  # raises if the explicit A or P fails to validate
        expect(problems, f"C{s} holds", s != 5, c.holds)
        expect(problems, f"C{s} im", s // 3, basic_invariants(cycle(s)).im)
        expect(problems, f"C{s} reg", (s + 1) // 3, betti_table(edge_ideal(cycle(s))).regularity)
        expect(problems, f"C{s} A in A_G", True, in_A_G(cycle(s), c.A))
        expect(problems, f"C{s} P induced", (True, s // 3), (c.P.induced, len(c.P)))
    elapsed = time.perf_counter() - start
    if elapsed >= 120:
        problems.append(f"runtime {elapsed:.1f}s >= 120s")
    assert record_criterion(5, "cycle sweep s=3..12", problems), problems


def test_criterion_6_oracle_equivalence(record_criterion, ideal_family):
    problems = []
    for I in ideal_family:
        a, b = v_number(I).v, v_oracle(I)
        if a != b:
            problems.append(f"{I}: v_number {a}, oracle {b}")
    graphs = [G for G in atlas_no_isolated(7, min_n=3) if G.is_connected()]
    for G in graphs:
        a, b = v_graph(G)[0], v_number(edge_ideal(G)).v
        if a != b:
            problems.append(f"{G}: v_graph {a}, v_number {b}")
    assert len(ideal_family) > 6000 and len(graphs) == 994
    assert record_criterion(6, f"oracle equivalence ({len(ideal_family)} ideals, {len(graphs)} graphs)", problems), problems


def bipartite_candidates(rng: random.Random, count: int) -> list[Graph]:
    """Random bipartite graphs with perfect matching ``{i, i+k}``, kept when very well-covered."""
    out = []
    while len(out) < count:
        k = rng.randint(2, 5)
        edges = [(i, i + k) for i in range(1, k + 1)]
        edges += [(i, j + k) for i in range(1, k + 1) for j in range(1, k + 1) if i != j and rng.random() < 0.4]
        G = Graph(2 * k, edges)
        if coverage_class(G).very_well_covered:
            out.append(G)
    return out


def test_criterion_7_property_suites(record_criterion):
    rng = random.Random(SEED)
    exhaustive = list(atlas(6))
    sampled = [random_graph(n, rng.choice((0.2, 0.35, 0.5, 0.7)), rng) for n in range(7, 11) for _ in range(15)]
    whiskers = [whisker(random_graph(n, 0.5, rng)) for n in range(2, 6) for _ in range(4)]
    bipartite = bipartite_candidates(rng, 12)
    results = run_checks(exhaustive + sampled + whiskers + bipartite)
    problems = [p for name in GRAPH_CHECKS for p in results[name]]
    title = f"property suites ({len(exhaustive)} exhaustive, {len(sampled) + len(whiskers) + len(bipartite)} sampled)"
    assert record_criterion(7, title, problems), problems


def zero_dimensional_ideals(s: int, d: tuple[int, ...]):
    """Every monomial ideal of ``K[t1..ts]`` whose pure-power generators are exactly ``t_i^{d_i}``.

    Enumerated through the down-set of standard monomials inside the box.
    """
    box = sorted(itertools.product(*(range(di) for di in d)))
    axes = {tuple(di - 1 if j == i else 0 for j in range(s)) for i, di in enumerate(d)}

    def rec(k: int, chosen: set):
        if k == len(box):
            if axes <= chosen:
                outside = [p for p in box if p not in chosen]
                powers = [tuple(di if j == i else 0 for j in range(s)) for i, di in enumerate(d)]
                yield MonomialIdeal(s, powers + outside)
            return
        p = box[k]
        below = all(tuple(x - (j == i) for j, x in enumerate(p)) in chosen for i in range(s) if p[i])
        if below:
            chosen.add(p)
            yield from rec(k + 1, chosen)
            chosen.discard(p)
        if p not in axes:
            yield from rec(k + 1, chosen)

    yield from rec(0, set())


def test_criterion_8_regularity_bounds(record_criterion, ideal_family):
    problems = []
    for I in ideal_family:
        bound = reg_dim_bound_check(I)
        if not bound.ok:
            problems.append(f"{I}: reg {bound.lhs} > {bound.rhs}")
    zero_dim = 0
    for s in range(1, 4):
        for d in itertools.product(range(1, 4), repeat=s):
            for I in zero_dimensional_ideals(s, d):
                zero_dim += 1
                reg, rhs = regularity(I), sum(di - 1 for di in d)
                if reg > rhs:
                    problems.append(f"{I}: reg {reg} > {rhs}")
                if (reg == rhs) != is_complete_intersection(I):
                    problems.append(f"{I}: reg {reg}, bound {rhs}, complete intersection {is_complete_intersection(I)}")
    assert zero_dim > 1000
    title = f"regularity bounds ({len(ideal_family)} ideals, {zero_dim} zero-dimensional)"
    assert record_criterion(8, title, problems), problems
