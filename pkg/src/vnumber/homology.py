"""Simplicial complexes and their reduced homology over the rationals.

Faces are handled internally as integer bitmasks (bit ``k`` is vertex
``k + 1``). Boundary ranks come from sparse integer elimination; the
dense fraction-free Bareiss routine is kept as a reference. Every number
stays an exact Python int.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterable, Mapping, Sequence


def bareiss_rank(matrix: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free elimination.

    After ``k`` pivots every live entry is a ``(k+1)``-minor of the input,
    so the division by the previous pivot is exact.
    """
    rows = [list(r) for r in matrix if any(r)]
    if not rows:
        return 0
    m, n = len(rows), len(rows[0])
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        best = None
        for r in range(rank, m):
            v = rows[r][col]
            if v and (best is None or abs(v) < abs(rows[best][col])):
                best = r
                if abs(v) == 1:
                    break
        if best is None:
            continue
        rows[rank], rows[best] = rows[best], rows[rank]
        prow = rows[rank]
        p = prow[col]
        tail = prow[col + 1 :]
        for r in range(rank + 1, m):
            row = rows[r]
            a = row[col]
            if a == 0:
                if p != prev:
                    row[col + 1 :] = [p * x // prev for x in row[col + 1 :]]
            else:
                row[col + 1 :] = [(p * x - a * y) // prev for x, y in zip(row[col + 1 :], tail)]
            row[col] = 0
        prev = p
        rank += 1
    return rank


def sparse_rank(rows: Iterable[Mapping[int, int]]) -> int:
    """Rank over Q of a sparse integer matrix given as ``{column: value}`` rows.

    Rows are reduced against pivots keyed by their leading column and
    divided by their content afterwards, which never changes the rank.
    """
    pivots: dict[int, dict[int, int]] = {}
    for source in rows:
        row = {c: v for c, v in source.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                break
            p, a = piv[lead], row[lead]
            if p in (1, -1):
                f = a * p
                for c, v in piv.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        row.pop(c, None)
            else:
                g = gcd(p, a)
                mp, ma = p // g, a // g
                new = {c: mp * v for c, v in row.items()}
                for c, v in piv.items():
                    nv = new.get(c, 0) - ma * v
                    if nv:
                        new[c] = nv
                    else:
                        new.pop(c, None)
                row = new
                content = 0
                for v in row.values():
                    content = gcd(content, v)
                    if content == 1:
                        break
                if content > 1:
                    row = {c: v // content for c, v in row.items()}
    return len(pivots)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _boundary_rows(faces: Sequence[int], lower: Mapping[int, int]) -> list[dict[int, int]]:
    """Sparse boundary map, one row per face in ``faces``.

    Rows index the higher-dimensional faces (the transpose of the usual
    convention; rank is unaffected).
    """
    out = []
    for f in faces:
        row = {}
        sign = 1
        rest = f
        while rest:
            bit = rest & -rest
            rest ^= bit
            row[lower[f ^ bit]] = sign
            sign = -sign
        out.append(row)
    return out


def _boundary_matrix(faces: Sequence[int], lower: Mapping[int, int]) -> list[list[int]]:
    """Dense form of :func:`_boundary_rows`."""
    out = []
    for row in _boundary_rows(faces, lower):
        dense = [0] * len(lower)
        for c, v in row.items():
            dense[c] = v
        out.append(dense)
    return out


def reduced_homology_from_faces(faces_by_size: Mapping[int, Sequence[int]]) -> list[int]:
    """Ranks of ``H~_d`` for ``d = -1, 0, 1, ...`` of a complex given by all its faces.

    ``faces_by_size[k]`` lists the faces with ``k`` vertices as bitmasks; a
    complex containing the empty face has ``faces_by_size[0] == [0]``. An
    empty mapping is the void complex and has no homology at all.
    """
    sizes = [k for k, fs in faces_by_size.items() if fs]
    if not sizes:
        return []
    top = max(sizes)
    counts = [len(faces_by_size.get(k, ())) for k in range(top + 1)]
    # rank of the boundary from size-k faces to size-(k-1) faces, k >= 1
    ranks = [0] * (top + 2)
    for k in range(1, top + 1):
        upper = faces_by_size.get(k, ())
        lower_faces = faces_by_size.get(k - 1, ())
        if not upper or not lower_faces:
            continue
        index = {f: i for i, f in enumerate(lower_faces)}
        ranks[k] = sparse_rank(_boundary_rows(upper, index))
    # H~_{k-1} lives on size-k faces
    return [counts[k] - ranks[k] - ranks[k + 1] for k in range(top + 1)]


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on vertices ``1..num_vertices`` given by its facets.

    ``facets == ()`` is the void complex (no faces); ``facets == ((),)`` is
    the empty complex whose only face is the empty set.
    """

    num_vertices: int
    facets: tuple[tuple[int, ...], ...]

    def __init__(self, num_vertices: int, facets: Iterable[Iterable[int]]):
        sets = {frozenset(f) for f in facets}
        for f in sets:
            for v in f:
                if not 1 <= v <= num_vertices:
                    raise ValueError(f"vertex {v} outside 1..{num_vertices}")
        maximal = [f for f in sets if not any(f < g for g in sets)]
        object.__setattr__(self, "num_vertices", num_vertices)
        object.__setattr__(
            self, "facets", tuple(sorted((tuple(sorted(f)) for f in maximal), key=lambda t: (len(t), t)))
        )

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dimension(self) -> int:
        """``-1`` for the empty complex; ``-2`` stands in for the void complex."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def _face_masks(self) -> dict[int, list[int]]:
        seen: set[int] = set()
        for facet in self.facets:
            mask = 0
            for v in facet:
                mask |= 1 << (v - 1)
            sub = mask
            while True:
                seen.add(sub)
                if sub == 0:
                    break
                sub = (sub - 1) & mask
        out: dict[int, list[int]] = {}
        for f in sorted(seen):
            out.setdefault(_popcount(f), []).append(f)
        return out

    def faces(self) -> list[tuple[int, ...]]:
        """All faces, including the empty face, sorted by size then lexicographically."""
        out = []
        for k in sorted(self._face_masks):
            for f in self._face_masks[k]:
                out.append(tuple(i + 1 for i in range(self.num_vertices) if f >> i & 1))
        return sorted(out, key=lambda t: (len(t), t))

    def f_vector(self) -> list[int]:
        """Face counts by dimension, starting at dimension -1."""
        return [len(self._face_masks.get(k, ())) for k in range(self.dimension + 2)]

    def induced(self, vertices: Iterable[int]) -> SimplicialComplex:
        keep = set(vertices)
        if self.is_void:
            return self
        return SimplicialComplex(self.num_vertices, [set(f) & keep for f in self.facets])


def reduced_homology_ranks(K: SimplicialComplex) -> list[int]:
    """``[dim H~_{-1}, dim H~_0, ...]`` over Q, up to the dimension of ``K``."""
    return reduced_homology_from_faces(K._face_masks)
