"""Worked examples with their expected invariants, checked as named fixtures."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .betti import betti_table
from .engine import v_number, v_oracle
from .graphs.core import Graph, cycle, edge_ideal, octahedron, t10, two_triangles
from .graphs.invariants import basic_invariants, coverage_class, in_A_G, is_W2, v_graph
from .monomial import Monomial, MonomialIdeal, associated_primes, colon_monomial, height_and_dim, polarize


@dataclass(frozen=True)
class FixtureCheck:
    label: str
    expected: Any
    actual: Any

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class FixtureResult:
    name: str
    checks: tuple[FixtureCheck, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[FixtureCheck]:
        return [c for c in self.checks if not c.ok]


def mixed_ideal() -> MonomialIdeal:
    """``(t1^5, t2^5, t2^4 t3^5, t1^4 t3^5)``, the intersection of ``(t1^4, t2^4)`` and ``(t1^5, t2^5, t3^5)``."""
    return MonomialIdeal(3, [(5, 0, 0), (0, 5, 0), (0, 4, 5), (4, 0, 5)])


def _gens(report) -> set[str] | None:
    return None if report is None else {str(g) for g in report.module_min_gens}


def mixed_ideal_fixture() -> FixtureResult:
    I = mixed_ideal()
    result = v_number(I)
    by_prime = {r.prime.vars: r for r in result.per_prime}
    pol = polarize(I)
    table = betti_table(I)
    g1 = Monomial((4, 4, 0))
    g2 = Monomial((3, 3, 5))
    checks = [
        FixtureCheck("v", 11, result.v),
        FixtureCheck("v_oracle", 11, v_oracle(I, degree_cap=12)),
        FixtureCheck("Ass", [(1, 2), (1, 2, 3)], [p.vars for p in associated_primes(I)]),
        FixtureCheck("MG(t1,t2)", {"t1^4*t2^4", "t1^3*t2^3*t3^5"}, _gens(by_prime.get((1, 2)))),
        FixtureCheck("MG(t1,t2,t3)", {"t1^4*t2^4*t3^4"}, _gens(by_prime.get((1, 2, 3)))),
        FixtureCheck("(I:g1)", MonomialIdeal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 5)]), colon_monomial(I, g1)),
        FixtureCheck("(I:g2)", MonomialIdeal.prime(3, (1, 2)), colon_monomial(I, g2)),
        FixtureCheck("pol.vars", 15, pol.total_vars),
        FixtureCheck("pol.height", height_and_dim(I)[0], height_and_dim(pol.ideal)[0]),
        FixtureCheck("reg", 12, table.regularity),
    ]
    return FixtureResult("mixed_ideal", tuple(checks))


def _graph_checks(G: Graph, expected: dict[str, int]) -> list[FixtureCheck]:
    inv = basic_invariants(G)
    table = betti_table(edge_ideal(G))
    ht, _ = height_and_dim(edge_ideal(G))
    actual = {
        "v": v_graph(G)[0],
        "im": inv.im,
        "reg": table.regularity,
        "ht": ht,
        "pd": table.projective_dimension,
        "beta0": inv.beta0,
    }
    checks = [FixtureCheck(k, expected[k], actual[k]) for k in expected]
    checks.append(FixtureCheck("{1,4}_in_A_G", True, in_A_G(G, (1, 4))))
    return checks


def cycle_t10_fixture() -> FixtureResult:
    checks = [
        FixtureCheck(f"C7.{c.label}", c.expected, c.actual)
        for c in _graph_checks(cycle(7), {"v": 2, "im": 2, "reg": 2, "ht": 4, "pd": 5, "beta0": 3})
    ]
    checks += [
        FixtureCheck(f"T10.{c.label}", c.expected, c.actual)
        for c in _graph_checks(t10(), {"v": 2, "im": 2, "reg": 3, "ht": 6, "pd": 7, "beta0": 4})
    ]
    return FixtureResult("c7_t10", tuple(checks))


def well_covered_fixture() -> FixtureResult:
    G = octahedron()
    cov = coverage_class(G)
    inv = basic_invariants(G)
    checks = [
        FixtureCheck("well_covered", True, cov.well_covered),
        FixtureCheck("very_well_covered", False, cov.very_well_covered),
        FixtureCheck("alpha0", 4, inv.alpha0),
        FixtureCheck("v", 1, v_graph(G)[0]),
        FixtureCheck("im", 1, inv.im),
        FixtureCheck("reg", 1, betti_table(edge_ideal(G)).regularity),
    ]
    return FixtureResult("octahedron", tuple(checks))


def w2_fixture() -> FixtureResult:
    G = two_triangles()
    checks = [
        FixtureCheck("W2", True, is_W2(G)),
        FixtureCheck("v", 2, v_graph(G)[0]),
        FixtureCheck("beta0", 2, basic_invariants(G).beta0),
    ]
    return FixtureResult("two_triangles", tuple(checks))


FIXTURES: dict[str, Callable[[], FixtureResult]] = {
    "mixed_ideal": mixed_ideal_fixture,
    "c7_t10": cycle_t10_fixture,
    "octahedron": well_covered_fixture,
    "two_triangles": w2_fixture,
}


def run_fixtures() -> list[FixtureResult]:
    return [make() for make in FIXTURES.values()]


__all__ = ["FIXTURES", "FixtureCheck", "FixtureResult", "mixed_ideal", "run_fixtures"]
