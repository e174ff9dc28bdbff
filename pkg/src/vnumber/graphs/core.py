"""Simple graphs, matchings, named families and the stable-set machinery.

Vertices are ``1..n``. Internally a vertex set is an int bitmask with bit
``v - 1`` standing for vertex ``v``; most search helpers take an ``alive``
mask so that deleting vertices never relabels anything.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .. import _config
from ..errors import CapacityError, PreconditionError, ValidationError
from ..monomial import MonomialIdeal

Edge = tuple[int, int]


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def from_mask(mask: int) -> tuple[int, ...]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def _lowest(mask: int) -> int:
    """Vertex number of the lowest set bit."""
    return (mask & -mask).bit_length()


@dataclass(frozen=True, init=False)
class Graph:
    """Simple undirected graph on vertices ``1..num_vertices``."""

    num_vertices: int
    edges: tuple[Edge, ...]

    def __init__(self, num_vertices: int, edges: Iterable[Sequence[int]] = ()):
        if num_vertices < 0:
            raise ValidationError("num_vertices must be non-negative")
        clean = set()
        for e in edges:
            u, v = e
            if u == v:
                raise ValidationError(f"loop at vertex {u}")
            for w in (u, v):
                if not 1 <= w <= num_vertices:
                    raise ValidationError(f"vertex {w} outside 1..{num_vertices}")
            clean.add((min(u, v), max(u, v)))
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(self, "edges", tuple(sorted(clean)))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """``adj[v - 1]`` is the neighbor mask of ``v``."""
        a = [0] * self.num_vertices
        for u, v in self.edges:
            a[u - 1] |= 1 << (v - 1)
            a[v - 1] |= 1 << (u - 1)
        return tuple(a)

    @cached_property
    def edge_masks(self) -> tuple[int, ...]:
        return tuple((1 << (u - 1)) | (1 << (v - 1)) for u, v in self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << self.num_vertices) - 1

    @property
    def vertices(self) -> range:
        return range(1, self.num_vertices + 1)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u - 1] >> (v - 1) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return from_mask(self.adj[v - 1])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v - 1])

    def nbhd_mask(self, mask: int) -> int:
        """Open neighborhood ``N_G(A)`` of a vertex mask."""
        out = 0
        while mask:
            bit = mask & -mask
            mask ^= bit
            out |= self.adj[bit.bit_length() - 1]
        return out

    def neighborhood(self, A: Iterable[int]) -> tuple[int, ...]:
        return from_mask(self.nbhd_mask(to_mask(A)))

    def closed_mask(self, v: int) -> int:
        return self.adj[v - 1] | (1 << (v - 1))

    @property
    def isolated_vertices(self) -> tuple[int, ...]:
        return tuple(v for v in self.vertices if not self.adj[v - 1])

    def is_connected(self) -> bool:
        if self.num_vertices == 0:
            return True
        seen = 1
        frontier = 1
        while frontier:
            frontier = self.nbhd_mask(frontier) & ~seen
            seen |= frontier
        return seen == self.full_mask

    def induced(self, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        """Induced subgraph on ``keep``, relabelled ``1..k``; also returns the old labels."""
        old = tuple(sorted(set(keep)))
        new = {v: i + 1 for i, v in enumerate(old)}
        edges = [(new[u], new[v]) for u, v in self.edges if u in new and v in new]
        return Graph(len(old), edges), old

    def delete(self, removed: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
        gone = set(removed)
        return self.induced(v for v in self.vertices if v not in gone)

    def __str__(self) -> str:
        body = " ".join(f"{u}-{v}" for u, v in self.edges)
        return f"Graph(n={self.num_vertices}: {body})"


def require_searchable(G: Graph) -> None:
    cap = _config.max_vertices()
    if G.num_vertices > cap:
        raise CapacityError(f"graph has {G.num_vertices} vertices, search cap is {cap}")


# -- matchings -------------------------------------------------------------------


@dataclass(frozen=True)
class Matching:
    """Pairwise disjoint edges of a host graph plus their induced/perfect flags."""

    edges: tuple[Edge, ...]
    induced: bool
    perfect: bool

    @classmethod
    def in_graph(cls, G: Graph, edges: Iterable[Sequence[int]], keep_order: bool = False) -> Matching:
        pairs = [(min(u, v), max(u, v)) for u, v in edges]
        used = 0
        for u, v in pairs:
            if not G.has_edge(u, v):
                raise ValidationError(f"{{{u},{v}}} is not an edge of the graph")
            m = (1 << (u - 1)) | (1 << (v - 1))
            if used & m:
                raise ValidationError("matching edges are not pairwise disjoint")
            used |= m
        inside = sum(1 for em in G.edge_masks if em & used == em)
        if not keep_order:
            pairs.sort()
        return cls(tuple(pairs), inside == len(pairs), used == G.full_mask)

    @property
    def vertex_mask(self) -> int:
        return to_mask(v for e in self.edges for v in e)

    def __len__(self) -> int:
        return len(self.edges)


def perfect_matchings(G: Graph) -> Iterator[tuple[Edge, ...]]:
    """Every perfect matching, as sorted edge tuples."""
    require_searchable(G)
    adj = G.adj

    def rec(free: int, acc: list[Edge]) -> Iterator[tuple[Edge, ...]]:
        if not free:
            yield tuple(acc)
            return
        v = _lowest(free)
        rest = free & ~(1 << (v - 1))
        cand = adj[v - 1] & rest
        while cand:
            bit = cand & -cand
            cand ^= bit
            acc.append((v, bit.bit_length()))
            yield from rec(rest & ~bit, acc)
            acc.pop()

    if G.num_vertices % 2 == 0:
        yield from rec(G.full_mask, [])


def maximum_matching(G: Graph) -> tuple[Edge, ...]:
    """A maximum matching by branch and bound on the lowest unmatched vertex."""
    require_searchable(G)
    adj = G.adj
    best: list[tuple[Edge, ...]] = [()]

    def rec(free: int, acc: list[Edge]) -> None:
        if len(acc) + popcount(free) // 2 <= len(best[0]):
            return
        # drop vertices with no free neighbor
        while free:
            v = _lowest(free)
            if adj[v - 1] & free:
                break
            free &= ~(1 << (v - 1))
        if not free:
            if len(acc) > len(best[0]):
                best[0] = tuple(acc)
            return
        v = _lowest(free)
        rest = free & ~(1 << (v - 1))
        cand = adj[v - 1] & rest
        while cand:
            bit = cand & -cand
            cand ^= bit
            acc.append((v, bit.bit_length()))
            rec(rest & ~bit, acc)
            acc.pop()
        rec(rest, acc)

    rec(G.full_mask, [])
    return best[0]


# -- stable sets -----------------------------------------------------------------


def is_stable(G: Graph, mask: int) -> bool:
    return not (G.nbhd_mask(mask) & mask)


def is_vertex_cover(G: Graph, mask: int) -> bool:
    return all(em & mask for em in G.edge_masks)


def is_minimal_vertex_cover(G: Graph, mask: int) -> bool:
    if not is_vertex_cover(G, mask):
        return False
    rest = mask
    while rest:
        bit = rest & -rest
        rest ^= bit
        if is_vertex_cover(G, mask ^ bit):
            return False
    return True


def stable_sets(G: Graph, alive: int | None = None) -> Iterator[int]:
    """All stable subsets of ``alive`` (empty set included), as masks."""
    adj = G.adj
    stack = [(0, G.full_mask if alive is None else alive)]
    while stack:
        face, cand = stack.pop()
        yield face
        while cand:
            bit = cand & -cand
            cand ^= bit
            stack.append((face | bit, cand & ~adj[bit.bit_length() - 1]))


def stable_sets_of_size(G: Graph, k: int, alive: int | None = None) -> Iterator[int]:
    """Stable ``k``-subsets of ``alive`` in lexicographic order of sorted vertex tuples."""
    adj = G.adj

    def rec(face: int, cand: int, need: int) -> Iterator[int]:
        if need == 0:
            yield face
            return
        while cand and popcount(cand) >= need:
            bit = cand & -cand
            cand ^= bit
            yield from rec(face | bit, cand & ~adj[bit.bit_length() - 1], need - 1)

    yield from rec(0, G.full_mask if alive is None else alive, k)


def maximal_stable_sets(G: Graph, alive: int | None = None) -> list[int]:
    """Maximal stable subsets of ``alive`` (Bron-Kerbosch with pivoting on the complement)."""
    adj = G.adj
    alive = G.full_mask if alive is None else alive
    out: list[int] = []

    def non_nbrs(v_bit: int) -> int:
        return alive & ~adj[v_bit.bit_length() - 1] & ~v_bit

    def bk(R: int, P: int, X: int) -> None:
        if not P and not X:
            out.append(R)
            return
        pivot_src = P | X
        pivot = pivot_src & -pivot_src
        best = -1
        scan = pivot_src
        while scan:
            b = scan & -scan
            scan ^= b
            c = popcount(P & non_nbrs(b))
            if c > best:
                best, pivot = c, b
        cand = P & ~non_nbrs(pivot)
        while cand:
            b = cand & -cand
            cand ^= b
            nb = non_nbrs(b)
            bk(R | b, P & nb, X & nb)
            P &= ~b
            X |= b

    bk(0, alive, 0)
    out.sort()
    return out


def max_stable_set(G: Graph, alive: int | None = None) -> int:
    """A maximum stable subset of ``alive`` by branch and bound."""
    adj = G.adj
    alive = G.full_mask if alive is None else alive
    best = [0]

    def rec(face: int, cand: int) -> None:
        if popcount(face) + popcount(cand) <= popcount(best[0]):
            return
        if not cand:
            best[0] = face
            return
        # branch on a candidate of maximum degree inside cand
        v_bit, deg = 0, -1
        scan = cand
        while scan:
            b = scan & -scan
            scan ^= b
            d = popcount(adj[b.bit_length() - 1] & cand)
            if d > deg:
                v_bit, deg = b, d
        if deg == 0:
            best[0] = face | cand
            return
        rec(face | v_bit, cand & ~v_bit & ~adj[v_bit.bit_length() - 1])
        rec(face, cand & ~v_bit)

    rec(0, alive)
    return best[0]


# -- edge ideals and named graphs -----------------------------------------------


def edge_ideal(G: Graph) -> MonomialIdeal:
    """``I(G) = (t_i t_j : {i, j} in E(G))``; the zero ideal when ``G`` has no edges."""
    if G.num_vertices == 0:
        raise PreconditionError("the graph has no vertices")
    return MonomialIdeal.from_supports(G.num_vertices, G.edges)


def cycle(s: int) -> Graph:
    if s < 3:
        raise PreconditionError("a cycle needs at least 3 vertices")
    return Graph(s, [(i, i % s + 1) for i in range(1, s + 1)])


def path(s: int) -> Graph:
    if s < 1:
        raise PreconditionError("a path needs at least 1 vertex")
    return Graph(s, [(i, i + 1) for i in range(1, s)])


def complete(s: int) -> Graph:
    if s < 1:
        raise PreconditionError("a complete graph needs at least 1 vertex")
    return Graph(s, [(i, j) for i in range(1, s + 1) for j in range(i + 1, s + 1)])


def t10() -> Graph:
    """7-cycle on 1..7 plus the path 1-8-9-10 and the edges 4-10, 5-10."""
    return Graph(10, list(cycle(7).edges) + [(1, 8), (8, 9), (9, 10), (4, 10), (5, 10)])


def octahedron() -> Graph:
    """``K_{2,2,2}``: the 4-cycle 1-2-3-4 with 5 and 6 joined to all of it."""
    return Graph(
        6,
        [(1, 2), (2, 3), (3, 4), (1, 4), (1, 5), (2, 5), (3, 5), (4, 5), (1, 6), (2, 6), (3, 6), (4, 6)],
    )


def two_triangles() -> Graph:
    """Disjoint triangles ``x1 x2 x3`` (vertices 1-3) and ``y1 y2 y3`` (vertices 4-6)."""
    return Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])


def whisker(G: Graph) -> Graph:
    """Attach a pendant vertex ``n + i`` to every vertex ``i``."""
    n = G.num_vertices
    return Graph(2 * n, list(G.edges) + [(i, n + i) for i in range(1, n + 1)])


def whisker_matching(G: Graph) -> Matching:
    """The pendant-edge perfect matching of ``whisker(G)``."""
    n = G.num_vertices
    return Matching.in_graph(whisker(G), [(i, n + i) for i in range(1, n + 1)])
