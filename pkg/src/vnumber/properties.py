"""Graph-level consistency checks between independent computations.

Each ``check_*`` function returns a list of human-readable violations
(empty when the property holds, or when its hypotheses do not apply).
"""

from __future__ import annotations

import random
from functools import lru_cache
from typing import Callable

from .betti import betti_table
from .engine import v_number
from .errors import PreconditionError
from .graphs.core import (
    Graph,
    Matching,
    edge_ideal,
    from_mask,
    is_minimal_vertex_cover,
    is_stable,
    perfect_matchings,
    whisker,
)
from .graphs.invariants import (
    A_G,
    F_G,
    basic_invariants,
    coverage_class,
    finbow_class,
    FinbowClass,
    has_property_P,
    in_A_G,
    is_W2,
    is_well_covered,
    shedding_all,
    simplicial_vertices,
    v_graph,
)
from .graphs.witnesses import find_simplicial_partition, simplex_partition_witness, vwc_witness
from .monomial import MonomialIdeal, height_and_dim


@lru_cache(maxsize=4096)
def _reg_pd(G: Graph) -> tuple[int, int]:
    table = betti_table(edge_ideal(G))
    return table.regularity, table.projective_dimension


def reg_of(G: Graph) -> int:
    return _reg_pd(G)[0]


def pd_of(G: Graph) -> int:
    return _reg_pd(G)[1]


def _no_isolated(G: Graph) -> bool:
    return bool(G.edges) and not G.isolated_vertices


def check_F_in_A(G: Graph) -> list[str]:
    if not _no_isolated(G):
        return []
    return [f"maximal stable set {from_mask(a)} not in A_G" for a in F_G(G) if not in_A_G(G, from_mask(a))]


def check_minimal_cover(G: Graph) -> list[str]:
    out = []
    for a in range(1 << G.num_vertices):
        cheap = in_A_G(G, from_mask(a))
        strict = is_stable(G, a) and is_minimal_vertex_cover(G, G.nbhd_mask(a))
        if cheap != strict:
            out.append(f"A={from_mask(a)}: cheap {cheap}, definitional {strict}")
    return out


def check_favaron(G: Graph) -> list[str]:
    if G.num_vertices == 0:
        return []
    vwc = coverage_class(G).very_well_covered
    with_p = [has_property_P(G, Matching.in_graph(G, pm)) for pm in perfect_matchings(G)]
    some, every = any(with_p), bool(with_p) and all(with_p)
    if vwc == some == every:
        return []
    return [f"very well-covered {vwc}, some PM with (P) {some}, every PM with (P) {every}"]


def check_campbell(G: Graph) -> list[str]:
    if G.num_vertices == 0 or not is_well_covered(G) or len(G.edges) == G.num_vertices * (G.num_vertices - 1) // 2:
        return []
    beta0 = basic_invariants(G).beta0
    out = []
    for v in G.vertices:
        H, _ = G.delete(from_mask(G.closed_mask(v)))
        if H.num_vertices == 0:
            out.append(f"G - N[{v}] is empty")
            continue
        if not is_well_covered(H):
            out.append(f"G - N[{v}] not well-covered")
        elif basic_invariants(H).beta0 != beta0 - 1:
            out.append(f"beta0(G - N[{v}]) != beta0(G) - 1")
    return out


def check_konig(G: Graph) -> list[str]:
    """On a Konig graph without isolated vertices, well-covered and very well-covered agree."""
    if not _no_isolated(G):
        return []
    inv = basic_invariants(G)
    if inv.beta1 != inv.alpha0:
        return []
    cov = coverage_class(G)
    return [] if cov.well_covered == cov.very_well_covered else ["Konig graph: well-covered but not very well-covered"]


def check_shedding_equivalence(G: Graph) -> list[str]:
    lhs = shedding_all(G).all_shedding
    rhs = A_G(G) == F_G(G)
    return [] if lhs == rhs else [f"all shedding {lhs} but A_G == F_G is {rhs}"]


def check_w2(G: Graph) -> list[str]:
    if G.num_vertices < 2 or not _no_isolated(G):
        return []
    w2 = is_W2(G)
    criterion = is_well_covered(G) and A_G(G) == F_G(G)
    out = []
    if w2 != criterion:
        out.append(f"W2 {w2} but well-covered and A_G == F_G is {criterion}")
    if w2 and v_graph(G)[0] != basic_invariants(G).beta0:
        out.append("W2 graph with v != beta0")
    return out


def check_vwc_chain(G: Graph) -> list[str]:
    if not _no_isolated(G) or not coverage_class(G).very_well_covered:
        return []
    inv = basic_invariants(G)
    v, reg = v_graph(G)[0], reg_of(G)
    out = []
    for pm in perfect_matchings(G):
        w = vwc_witness(G, pm)
        if not v <= len(w.D) == len(w.P_prime) <= inv.im <= reg:
            out.append(f"chain fails for matching {pm}: v={v} |D|={len(w.D)} im={inv.im} reg={reg}")
    if reg != inv.im:
        out.append(f"reg {reg} != im {inv.im} on a very well-covered graph")
    return out


def check_simplex_chain(G: Graph) -> list[str]:
    if not _no_isolated(G):
        return []
    partition = find_simplicial_partition(G)
    if partition is None:
        return []
    inv = basic_invariants(G)
    v, reg = v_graph(G)[0], reg_of(G)
    w = simplex_partition_witness(G, partition)
    if v <= len(w.D) == len(w.P_prime) <= inv.im <= reg:
        return []
    return [f"chain fails: v={v} |D|={len(w.D)} im={inv.im} reg={reg}"]


def is_simplicial_graph(G: Graph) -> bool:
    covered = 0
    for x in simplicial_vertices(G):
        covered |= G.closed_mask(x)
    return G.num_vertices > 0 and covered == G.full_mask


def check_well_covered_chain(G: Graph) -> list[str]:
    if not _no_isolated(G) or not is_well_covered(G):
        return []
    if not (is_simplicial_graph(G) or finbow_class(G) is not FinbowClass.OUT_OF_SCOPE):
        return []
    inv = basic_invariants(G)
    v, reg = v_graph(G)[0], reg_of(G)
    if v <= inv.im <= reg <= inv.beta0:
        return []
    return [f"v={v} im={inv.im} reg={reg} beta0={inv.beta0}"]


WHISKER_REG_LIMIT = 14


def check_whisker(G: Graph) -> list[str]:
    """``v(W_G) = i(G)`` and ``v(W_G) <= reg``.

    Past ``WHISKER_REG_LIMIT`` vertices the Betti table is skipped and
    ``v <= im(W_G)`` is checked instead, which implies the bound since
    ``im <= reg`` for every graph.
    """
    if G.num_vertices == 0:
        return []
    W = whisker(G)
    v = v_graph(W)[0]
    idom = basic_invariants(G).idom
    out = []
    if v != idom:
        out.append(f"v(W_G)={v} != i(G)={idom}")
    im = basic_invariants(W).im
    if v > im:
        out.append(f"v(W_G)={v} > im={im}")
    if W.num_vertices <= WHISKER_REG_LIMIT and v > reg_of(W):
        out.append(f"v(W_G)={v} > reg={reg_of(W)}")
    return out


def check_dim_height(G: Graph) -> list[str]:
    if not G.edges:
        return []
    inv = basic_invariants(G)
    ht, dim = height_and_dim(edge_ideal(G))
    if (ht, dim) == (inv.alpha0, inv.beta0):
        return []
    return [f"ht={ht} dim={dim} but alpha0={inv.alpha0} beta0={inv.beta0}"]


def check_v_cross(G: Graph) -> list[str]:
    if not _no_isolated(G):
        return []
    a, b = v_graph(G)[0], v_number(edge_ideal(G)).v
    return [] if a == b else [f"v_graph={a} but v_number={b}"]


GRAPH_CHECKS: dict[str, Callable[[Graph], list[str]]] = {
    "F_in_A": check_F_in_A,
    "minimal_cover": check_minimal_cover,
    "favaron": check_favaron,
    "campbell": check_campbell,
    "konig": check_konig,
    "shedding": check_shedding_equivalence,
    "w2": check_w2,
    "vwc_chain": check_vwc_chain,
    "simplex_chain": check_simplex_chain,
    "wc_chain": check_well_covered_chain,
    "whisker": check_whisker,
    "dim_height": check_dim_height,
    "v_cross": check_v_cross,
}


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p])


def random_squarefree_ideal(s: int, k: int, rng: random.Random) -> MonomialIdeal:
    gens = []
    while len(gens) < k:
        e = tuple(int(rng.random() < 0.4) for _ in range(s))
        if any(e):
            gens.append(e)
    return MonomialIdeal(s, gens)


def reg_gap_candidates(ideals) -> list[str]:
    """Squarefree ideals with ``v(I) > reg(S/I) + 1``; reported, never treated as a failure."""
    out = []
    for I in ideals:
        v, reg = v_number(I).v, betti_table(I).regularity
        if v > reg + 1:
            out.append(f"{I}: v={v} reg={reg}")
    return out


def run_checks(graphs, names=None) -> dict[str, list[str]]:
    """Run the named checks (all by default) on every graph; violations are prefixed by the graph."""
    selected = GRAPH_CHECKS if names is None else {k: GRAPH_CHECKS[k] for k in names}
    out: dict[str, list[str]] = {k: [] for k in selected}
    for G in graphs:
        for name, check in selected.items():
            try:
                problems = check(G)
            except PreconditionError as exc:
                problems = [f"precondition error: {exc}"]
            out[name].extend(f"{G}: {p}" for p in problems)
    return out


__all__ = [
    "GRAPH_CHECKS",
    "random_graph",
    "random_squarefree_ideal",
    "reg_gap_candidates",
    "run_checks",
    "reg_of",
    "pd_of",
    "is_simplicial_graph",
]
