"""Constructive witnesses ``(D, P')`` with ``D`` in ``A_G`` and ``P'`` an induced matching.

Both constructions are inductions that peel one piece off the graph
(a matching edge, or a simplex of a partition) and repair the smaller
witness. They recurse on vertex masks of the original graph, so labels
never change.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import InvariantViolation, PreconditionError, ValidationError
from .core import Edge, Graph, Matching, from_mask, is_stable, is_vertex_cover, popcount, to_mask
from .invariants import coverage_class, exact_cover, is_well_covered, simplicial_vertices


@dataclass(frozen=True)
class WitnessPair:
    D: tuple[int, ...]
    P_prime: Matching
    simplicial_roots: tuple[int, ...] | None = None

    def violations(self, G: Graph) -> list[str]:
        """Broken invariants, empty when the pair is a valid witness for ``G``."""
        problems = []
        d = to_mask(self.D)
        if not is_stable(G, d):
            problems.append("D is not stable")
        if not is_vertex_cover(G, G.nbhd_mask(d)):
            problems.append("N(D) is not a vertex cover")
        if not self.P_prime.induced:
            problems.append("P' is not an induced matching")
        if d & ~self.P_prime.vertex_mask:
            problems.append("D is not inside V(P')")
        for u, v in self.P_prime.edges:
            if popcount(d & to_mask((u, v))) != 1:
                problems.append(f"edge {{{u},{v}}} meets D in {popcount(d & to_mask((u, v)))} vertices")
        if len(self.D) != len(self.P_prime):
            problems.append("|D| != |P'|")
        return problems

    def validate(self, G: Graph) -> WitnessPair:
        problems = self.violations(G)
        if problems:
            raise InvariantViolation("; ".join(problems))
        return self


def _nbhd_within(G: Graph, mask: int, alive: int) -> int:
    return G.nbhd_mask(mask) & alive


def vwc_witness(G: Graph, P: Matching | Sequence[Sequence[int]]) -> WitnessPair:
    """Witness for a very well-covered ``G`` from a perfect matching, edges taken in the given order.

    The last edge ``e_r = {x, x'}`` is removed, the witness ``(D1, P1')`` of
    the rest is computed, and either kept (when ``e_r`` meets ``N(D1)``) or
    rebuilt as ``D3 = (D1 & V(Q)) | {x}`` with
    ``Q = {e in P1' : e misses A2} | {e_r}`` and ``A2 = (V(P1') - D1) & N(x)``.
    """
    if not isinstance(P, Matching):
        P = Matching.in_graph(G, P, keep_order=True)
    if not P.perfect:
        raise PreconditionError("the matching is not perfect")
    if not coverage_class(G).very_well_covered:
        raise PreconditionError("the graph is not very well-covered")
    order = list(P.edges)

    def bit(v: int) -> int:
        return 1 << (v - 1)

    def rec(r: int, alive: int) -> tuple[int, list[Edge]]:
        if r == 1:
            x1, _ = order[0]
            return bit(x1), [order[0]]
        x, x2 = order[r - 1]
        d1, p1 = rec(r - 1, alive & ~bit(x) & ~bit(x2))
        if (bit(x) | bit(x2)) & _nbhd_within(G, d1, alive):
            return d1, p1
        vp1 = to_mask(v for e in p1 for v in e)
        d2 = vp1 & ~d1
        if bit(x2) & _nbhd_within(G, d2, alive):
            x, x2 = x2, x
        a2 = d2 & G.adj[x - 1]
        q = [e for e in p1 if not to_mask(e) & a2] + [order[r - 1]]
        d3 = (d1 & to_mask(v for e in q for v in e)) | bit(x)
        return d3, q

    d, q = rec(len(order), G.full_mask)
    return WitnessPair(from_mask(d), Matching.in_graph(G, q)).validate(G)


def find_simplicial_partition(G: Graph) -> list[tuple[int, ...]] | None:
    """Simplexes ``G[N[x]]`` (``x`` simplicial) whose vertex sets partition ``V(G)``.

    Distinct closed neighborhoods of simplicial vertices of a well-covered
    graph are disjoint, so those are tried greedily first; anything else
    goes to an exact-cover search.
    """
    roots = simplicial_vertices(G)
    if not roots or G.num_vertices == 0:
        return None
    blocks = sorted({G.closed_mask(x) for x in roots}, key=lambda b: (b & -b, b))
    covered = 0
    for b in blocks:
        covered |= b
    if covered != G.full_mask:
        return None
    if is_well_covered(G):
        chosen: list[int] = []
        used = 0
        for b in blocks:
            if not b & used:
                chosen.append(b)
                used |= b
        if used == G.full_mask:
            return [from_mask(b) for b in chosen]
    found = exact_cover(G.full_mask, blocks)
    return None if found is None else [from_mask(b) for b in found]


def simplicial_root(G: Graph, block: Sequence[int]) -> int:
    """Least ``x`` in ``block`` with ``N[x] = block`` and ``block`` a clique."""
    mask = to_mask(block)
    for x in sorted(block):
        if G.closed_mask(x) == mask and x in simplicial_vertices(G):
            return x
    raise ValidationError(f"{tuple(block)} is not the closed neighborhood of a simplicial vertex")


def simplex_partition_witness(G: Graph, partition: Sequence[Sequence[int]]) -> WitnessPair:
    """Witness from simplexes ``H_1..H_r`` partitioning ``V(G)``, by induction on ``r``.

    With ``(D1, P1)`` built for ``G - V(H_r)`` and ``H_r = G[N[x]]``: keep it
    if ``V(H_r) - {x}`` lies in ``N(D1)``, otherwise add the least
    ``y in V(H_r) - {x}`` outside ``N(D1)`` to ``D`` and ``{x, y}`` to ``P``.
    """
    if G.isolated_vertices:
        raise PreconditionError(f"isolated vertices {list(G.isolated_vertices)}")
    if not partition:
        raise ValidationError("empty partition")
    masks = [to_mask(b) for b in partition]
    used = 0
    for m in masks:
        if m & used:
            raise ValidationError("partition blocks overlap")
        used |= m
    if used != G.full_mask:
        raise ValidationError("partition blocks do not cover V(G)")
    roots = [simplicial_root(G, b) for b in partition]

    def rec(r: int, alive: int) -> tuple[int, list[Edge], list[int]]:
        h, x = masks[r - 1], roots[r - 1]
        rest = h & ~(1 << (x - 1))
        if r == 1:
            y = (rest & -rest).bit_length()
            return 1 << (y - 1), [(x, y)], [x]
        d1, p1, x1 = rec(r - 1, alive & ~h)
        free = rest & ~_nbhd_within(G, d1, alive)
        if not free:
            return d1, p1, x1
        y = (free & -free).bit_length()
        return d1 | (1 << (y - 1)), p1 + [(x, y)], x1 + [x]

    d, p, xs = rec(len(masks), G.full_mask)
    return WitnessPair(from_mask(d), Matching.in_graph(G, p), tuple(xs)).validate(G)
