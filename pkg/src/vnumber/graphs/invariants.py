"""Numerical invariants and structural classes of graphs.

Every search here is exact and exponential; inputs are capped by
``VNUMBER_MAX_VERTICES`` (24 by default).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from ..errors import InvariantViolation, PreconditionError
from .core import (
    Graph,
    Matching,
    _lowest,
    from_mask,
    is_stable,
    is_vertex_cover,
    max_stable_set,
    maximal_stable_sets,
    maximum_matching,
    perfect_matchings,
    popcount,
    require_searchable,
    stable_sets,
    stable_sets_of_size,
    to_mask,
    cycle,
    t10,
)


def in_A_G(G: Graph, A: Iterable[int]) -> bool:
    """Whether ``A`` is stable and ``N_G(A)`` is a (necessarily minimal) vertex cover."""
    mask = to_mask(A)
    return is_stable(G, mask) and is_vertex_cover(G, G.nbhd_mask(mask))


def A_G(G: Graph) -> list[int]:
    """All members of ``A_G`` as masks."""
    require_searchable(G)
    return sorted(a for a in stable_sets(G) if is_vertex_cover(G, G.nbhd_mask(a)))


def F_G(G: Graph) -> list[int]:
    """All maximal stable sets as masks."""
    require_searchable(G)
    return maximal_stable_sets(G)


def _require_no_isolated(G: Graph) -> None:
    if not G.edges:
        raise PreconditionError("the graph has no edges")
    if G.isolated_vertices:
        raise PreconditionError(f"isolated vertices {list(G.isolated_vertices)}")


def v_graph(G: Graph) -> tuple[int, tuple[int, ...]]:
    """``min |A|`` over ``A_G`` with the lexicographically least minimizer."""
    _require_no_isolated(G)
    require_searchable(G)
    for k in range(1, G.num_vertices + 1):
        for a in stable_sets_of_size(G, k):
            if is_vertex_cover(G, G.nbhd_mask(a)):
                return k, from_mask(a)
    raise InvariantViolation("A_G is empty for a graph with edges")


def max_induced_matching(G: Graph) -> tuple[tuple[int, int], ...]:
    """A largest induced matching, via maximum stable sets of the edge conflict graph."""
    require_searchable(G)
    edges = G.edges
    masks = G.edge_masks
    reach = [m | G.nbhd_mask(m) for m in masks]
    # two edges conflict when they touch or are joined by an edge
    conflict = Graph(
        len(edges),
        [(i + 1, j + 1) for i in range(len(edges)) for j in range(i + 1, len(edges)) if reach[i] & masks[j]],
    )
    best = max_stable_set(conflict)
    return tuple(edges[i - 1] for i in from_mask(best))


@dataclass(frozen=True)
class BasicInvariants:
    beta0: int
    alpha0: int
    beta1: int
    im: int
    idom: int


def basic_invariants(G: Graph) -> BasicInvariants:
    require_searchable(G)
    beta0 = popcount(max_stable_set(G))
    idom = min(popcount(a) for a in maximal_stable_sets(G))
    return BasicInvariants(
        beta0=beta0,
        alpha0=G.num_vertices - beta0,
        beta1=len(maximum_matching(G)),
        im=len(max_induced_matching(G)),
        idom=idom,
    )


def is_well_covered(G: Graph) -> bool:
    require_searchable(G)
    return len({popcount(a) for a in maximal_stable_sets(G)}) <= 1


def has_property_P(G: Graph, P: Matching) -> bool:
    """Cross-edge condition: ``{a,b}, {a',b'} in E`` and ``{b,b'} in P`` force ``{a,a'} in E``."""
    if not P.perfect:
        raise PreconditionError("property (P) is defined for perfect matchings only")
    adj = G.adj
    for b, b2 in P.edges:
        for na, nb in ((adj[b - 1], adj[b2 - 1]), (adj[b2 - 1], adj[b - 1])):
            scan = na
            while scan:
                bit = scan & -scan
                scan ^= bit
                if nb & ~adj[bit.bit_length() - 1]:
                    return False
    for b, b2 in P.edges:
        if adj[b - 1] & adj[b2 - 1]:
            raise InvariantViolation(f"property (P) holds but edge {{{b},{b2}}} lies in a triangle")
    return True


@dataclass(frozen=True)
class CoverageClass:
    well_covered: bool
    very_well_covered: bool
    property_P_witness: Matching | None


def coverage_class(G: Graph) -> CoverageClass:
    """Well-covered, very well-covered (well-covered with ``beta1 = alpha0``), and a (P) witness."""
    require_searchable(G)
    wc = is_well_covered(G)
    vwc = False
    witness = None
    if wc and G.num_vertices > 0 and not G.isolated_vertices:
        inv = basic_invariants(G)
        vwc = inv.beta1 == inv.alpha0
    if vwc:
        pm = next(perfect_matchings(G), None)
        if pm is None:
            raise InvariantViolation("very well-covered graph without a perfect matching")
        witness = Matching.in_graph(G, pm)
        if not has_property_P(G, witness):
            raise InvariantViolation("perfect matching of a very well-covered graph lacks (P)")
    return CoverageClass(wc, vwc, witness)


def is_very_well_covered(G: Graph) -> bool:
    return coverage_class(G).very_well_covered


# -- shedding and W2 --------------------------------------------------------------


def _maximal_in(G: Graph, face: int, alive: int) -> bool:
    # every vertex of alive outside face must see face
    rest = alive & ~face
    while rest:
        bit = rest & -rest
        rest ^= bit
        if not G.adj[bit.bit_length() - 1] & face:
            return False
    return True


def is_shedding_vertex(G: Graph, v: int) -> bool:
    """No stable set of ``G - N[v]`` is a maximal stable set of ``G - v``."""
    require_searchable(G)
    without_v = G.full_mask & ~(1 << (v - 1))
    outside = G.full_mask & ~G.closed_mask(v)
    return not any(_maximal_in(G, s, without_v) for s in stable_sets(G, outside))


@dataclass(frozen=True)
class SheddingReport:
    all_shedding: bool
    failures: tuple[int, ...]


def shedding_all(G: Graph) -> SheddingReport:
    failures = tuple(v for v in G.vertices if not is_shedding_vertex(G, v))
    return SheddingReport(not failures, failures)


def is_W2(G: Graph) -> bool:
    """Any two disjoint stable sets lie in two disjoint maximum stable sets."""
    if G.num_vertices < 2:
        raise PreconditionError("W2 needs at least two vertices")
    if G.isolated_vertices:
        raise PreconditionError(f"isolated vertices {list(G.isolated_vertices)}")
    require_searchable(G)
    full = G.full_mask
    beta0 = popcount(max_stable_set(G))
    maximum = [a for a in maximal_stable_sets(G) if popcount(a) == beta0]
    disjoint_from = [
        sum(1 << k for k, b in enumerate(maximum) if not a & b) for a in maximum
    ]

    def containing(A: int) -> int:
        return sum(1 << k for k, b in enumerate(maximum) if A & b == A)

    for A1 in stable_sets(G):
        sup1 = containing(A1)
        if not sup1:
            return False
        # a pair extends iff its enlargement does, so A2 may be taken maximal in G - A1
        for A2 in maximal_stable_sets(G, full & ~A1):
            sup2 = containing(A2)
            scan = sup1
            ok = False
            while scan:
                bit = scan & -scan
                scan ^= bit
                if disjoint_from[bit.bit_length() - 1] & sup2:
                    ok = True
                    break
            if not ok:
                return False
    return True


# -- isomorphism and Finbow's classification ------------------------------------


def is_isomorphic(G: Graph, H: Graph) -> bool:
    """Backtracking isomorphism test with degree pruning."""
    if G.num_vertices != H.num_vertices or len(G.edges) != len(H.edges):
        return False
    n = G.num_vertices
    degG = [G.degree(v) for v in G.vertices]
    degH = [H.degree(v) for v in H.vertices]
    if sorted(degG) != sorted(degH):
        return False
    # visit G's vertices so each one (after the first) touches already placed ones
    order: list[int] = []
    placed = 0
    while len(order) < n:
        frontier = G.nbhd_mask(placed) & ~placed if placed else 0
        pool = from_mask(frontier) or [v for v in G.vertices if not placed >> (v - 1) & 1]
        v = max(pool, key=lambda u: (degG[u - 1], -u))
        order.append(v)
        placed |= 1 << (v - 1)
    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def rec(k: int) -> bool:
        if k == n:
            return True
        v = order[k]
        for w in H.vertices:
            if used[w] or degH[w - 1] != degG[v - 1]:
                continue
            if all(G.has_edge(v, u) == H.has_edge(w, image[u]) for u in order[:k]):
                image[v], used[w] = w, True
                if rec(k + 1):
                    return True
                used[w] = False
        return False

    return rec(0)


def has_cycle_of_length(G: Graph, length: int) -> bool:
    """Whether ``G`` contains a (not necessarily induced) cycle with ``length`` vertices."""
    adj = G.adj
    for start in G.vertices:
        # cycles are rooted at their smallest vertex
        allowed = G.full_mask & ~((1 << start) - 1)

        def rec(v: int, visited: int, depth: int) -> bool:
            if depth == length:
                return bool(adj[v - 1] >> (start - 1) & 1)
            cand = adj[v - 1] & allowed & ~visited
            while cand:
                bit = cand & -cand
                cand ^= bit
                if rec(bit.bit_length(), visited | bit, depth + 1):
                    return True
            return False

        if rec(start, 1 << (start - 1), 1):
            return True
    return False


def simplicial_vertices(G: Graph) -> tuple[int, ...]:
    """Vertices whose closed neighborhood induces a complete graph."""
    out = []
    for v in G.vertices:
        nb = G.adj[v - 1]
        scan = nb
        ok = True
        while scan:
            bit = scan & -scan
            scan ^= bit
            if nb & ~bit & ~G.adj[bit.bit_length() - 1]:
                ok = False
                break
        if ok:
            out.append(v)
    return tuple(out)


def exact_cover(universe: int, blocks: list[int]) -> list[int] | None:
    """First partition of ``universe`` into members of ``blocks`` (branching on the lowest vertex)."""
    def rec(left: int, chosen: list[int]) -> list[int] | None:
        if not left:
            return list(chosen)
        low = left & -left
        for b in blocks:
            if b & low and b & left == b:
                chosen.append(b)
                found = rec(left & ~b, chosen)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return rec(universe, [])


def family_F_partition(G: Graph) -> list[int] | None:
    """Closed neighborhoods ``N[x]``, ``x`` simplicial with ``|N[x]| <= 3``, partitioning ``V(G)``."""
    blocks = sorted({G.closed_mask(x) for x in simplicial_vertices(G) if popcount(G.closed_mask(x)) <= 3})
    return exact_cover(G.full_mask, blocks)


class FinbowClass(str, Enum):
    C7 = "C7"
    T10 = "T10"
    FAMILY_F = "FamilyF"
    NOT_WELL_COVERED = "NotWellCovered"
    OUT_OF_SCOPE = "OutOfScope"


def finbow_class(G: Graph) -> FinbowClass:
    """Classify a connected graph without 4- and 5-cycles as ``C7``, ``T10``, family F or not well-covered."""
    require_searchable(G)
    if G.num_vertices == 0 or not G.is_connected() or has_cycle_of_length(G, 4) or has_cycle_of_length(G, 5):
        return FinbowClass.OUT_OF_SCOPE
    if is_isomorphic(G, cycle(7)):
        result = FinbowClass.C7
    elif is_isomorphic(G, t10()):
        result = FinbowClass.T10
    elif family_F_partition(G) is not None:
        result = FinbowClass.FAMILY_F
    else:
        result = FinbowClass.NOT_WELL_COVERED
    if (result is not FinbowClass.NOT_WELL_COVERED) != is_well_covered(G):
        raise InvariantViolation(f"classification {result.value} disagrees with well-coveredness")
    return result


# -- cycles -----------------------------------------------------------------------


@dataclass(frozen=True)
class CycleReport:
    s: int
    v: int
    im: int
    reg: int
    holds: bool
    A: tuple[int, ...]
    P: Matching


def cycle_witness_set(s: int) -> tuple[int, ...]:
    """The stable set ``A`` in ``A_{C_s}`` used for ``s = 4l + r``; its neighborhood is the odd vertices."""
    ell, r = divmod(s, 4)
    if r == 0:
        return tuple(range(2, 4 * ell - 1, 4))
    if r == 1:
        return tuple(range(2, 4 * ell - 1, 4)) + (4 * ell,)
    return tuple(range(2, 4 * ell + 3, 4))


def cycle_induced_matching(s: int) -> tuple[tuple[int, int], ...]:
    """``{e_1, e_4, ..., e_{3q-2}}`` with ``e_i = {t_i, t_{i+1}}`` and ``q = floor(s/3)``."""
    q = s // 3
    return tuple((i, i % s + 1) for i in range(1, 3 * q - 1, 3))


def cycle_invariants(s: int) -> CycleReport:
    if s < 3:
        raise PreconditionError("cycles need s >= 3")
    G = cycle(s)
    v, _ = v_graph(G)
    im, reg = s // 3, (s + 1) // 3
    A = cycle_witness_set(s)
    if not in_A_G(G, A):
        raise InvariantViolation(f"witness {A} is not in A_G for C_{s}")
    P = Matching.in_graph(G, cycle_induced_matching(s))
    if not P.induced or len(P) != im:
        raise InvariantViolation(f"matching {P.edges} is not an induced matching of size {im}")
    return CycleReport(s, v, im, reg, v <= im, A, P)
