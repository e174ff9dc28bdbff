"""Graded Betti numbers, regularity and projective dimension of ``S/I``.

Squarefree ideals go through Hochster's formula

    b_{i,j}(S/I) = sum over |W| = j of dim H~_{j-i-1}(Delta_W)

where ``Delta`` is the Stanley-Reisner complex of ``I``. Other monomial
ideals are polarized first, which leaves the graded Betti numbers unchanged.

Only subsets ``W`` that are unions of generator supports can contribute
(for any other ``W`` the restriction is a cone), so the sum runs over the
lcm lattice of ``G(I)``. Each ``H~(Delta_W)`` is computed either on the
faces of ``Delta_W`` directly or, when that complex is large, on the nerve
of the generators inside ``W``: by Alexander duality and the nerve lemma,
``H~_d(Delta_W) = H~_{|W|-d-3}(N_W)`` with ``N_W`` the sets of generators
whose supports do not cover ``W``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import _config
from .errors import CapacityError, PreconditionError
from .homology import SimplicialComplex, _popcount, reduced_homology_from_faces
from .monomial import MonomialIdeal, _require_proper_nonzero, height_and_dim, polarize


@dataclass(frozen=True)
class BettiTable:
    """Nonzero ``b_{i,j}(S/I)`` for ``i >= 1``; ``b_{0,0} = 1`` is left out."""

    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def regularity(self) -> int:
        return max((j - i for i, j in self.entries), default=0)

    @property
    def projective_dimension(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def total(self, i: int) -> int:
        return sum(b for (k, _), b in self.entries.items() if k == i)

    def format(self) -> str:
        """Macaulay2-style table: rows are ``j - i``, columns are ``i``."""
        pd, reg = self.projective_dimension, self.regularity
        cells = {(0, 0): 1, **self.entries}
        totals = [1] + [self.total(i) for i in range(1, pd + 1)]
        lines = [
            "      " + "".join(f"{i:>5}" for i in range(pd + 1)),
            "total:" + "".join(f"{t:>5}" for t in totals),
        ]
        for r in range(reg + 1):
            row = [f"{r:>5}:"]
            for i in range(pd + 1):
                b = cells.get((i, i + r), 0)
                row.append(f"{b if b else '.':>5}")
            lines.append("".join(row))
        return "\n".join(lines)


def _masks(I: MonomialIdeal) -> list[int]:
    out = []
    for g in I.exponent_vectors:
        m = 0
        for k, e in enumerate(g):
            if e:
                m |= 1 << k
        out.append(m)
    return out


def stanley_reisner_complex(I: MonomialIdeal) -> SimplicialComplex:
    """Faces are the variable subsets whose product lies outside ``I``."""
    _require_proper_nonzero(I)
    if not I.is_squarefree:
        raise PreconditionError("Stanley-Reisner complex needs a squarefree ideal; polarize first")
    gens = _masks(I)
    faces = _enumerate_faces((1 << I.num_vars) - 1, gens, limit=None)
    masks = [f for fs in faces.values() for f in fs]
    maximal = [f for f in masks if not any(f != g and f & g == f for g in masks)]
    facets = [[k + 1 for k in range(I.num_vars) if f >> k & 1] for f in maximal]
    return SimplicialComplex(I.num_vars, facets)


def _enumerate_faces(W: int, gens: list[int], limit: int | None) -> dict[int, list[int]] | None:
    """Faces of ``Delta_W`` by size, or ``None`` once more than ``limit`` are found."""
    verts = [k for k in range(W.bit_length()) if W >> k & 1]
    by_vertex = {k: [g for g in gens if g >> k & 1] for k in verts}
    faces: dict[int, list[int]] = {0: [0]}
    count = 1
    stack = [(0, 0, 0)]  # (face, size, next vertex position)
    while stack:
        face, size, start = stack.pop()
        for pos in range(start, len(verts)):
            k = verts[pos]
            new = face | (1 << k)
            if any(g & new == g for g in by_vertex[k]):
                continue
            faces.setdefault(size + 1, []).append(new)
            count += 1
            if limit is not None and count > limit:
                return None
            stack.append((new, size + 1, pos + 1))
    for fs in faces.values():
        fs.sort()
    return faces


def _nerve_faces(W: int, gens: list[int]) -> dict[int, list[int]]:
    faces: dict[int, list[int]] = {}
    stack = [(0, 0, 0, 0)]  # (generator subset, union of supports, size, next index)
    while stack:
        sigma, union, size, start = stack.pop()
        faces.setdefault(size, []).append(sigma)
        for j in range(start, len(gens)):
            u = union | gens[j]
            # unions only grow, so a covering set has no faces above it
            if u != W:
                stack.append((sigma | (1 << j), u, size + 1, j + 1))
    for fs in faces.values():
        fs.sort()
    return faces


def restricted_homology(W: int, gens: list[int]) -> dict[int, int]:
    """Nonzero ``dim H~_d(Delta_W)`` keyed by ``d``; ``gens`` are the supports inside ``W``."""
    nerve_size = 1 << len(gens)
    faces = _enumerate_faces(W, gens, limit=nerve_size)
    if faces is not None:
        ranks = reduced_homology_from_faces(faces)
        return {d - 1: r for d, r in enumerate(ranks) if r}
    n = _popcount(W)
    ranks = reduced_homology_from_faces(_nerve_faces(W, gens))
    return {n - (e - 1) - 3: r for e, r in enumerate(ranks) if r}


def _lcm_lattice(gens: list[int]) -> list[int]:
    lattice = {0}
    for g in gens:
        lattice |= {x | g for x in lattice}
    return sorted(lattice)


def _squarefree_of(I: MonomialIdeal) -> MonomialIdeal:
    return I if I.is_squarefree else polarize(I).ideal


def betti_table(I: MonomialIdeal, max_vars: int | None = None) -> BettiTable:
    """Graded Betti numbers of ``S/I`` via Hochster's formula.

    ``max_vars`` caps the number of variables that occur in ``G(I)`` after
    polarization (default from ``VNUMBER_MAX_VARS``, 20).
    """
    _require_proper_nonzero(I)
    J = _squarefree_of(I)
    cap = _config.max_vars() if max_vars is None else max_vars
    gens = _masks(J)
    support = 0
    for g in gens:
        support |= g
    if _popcount(support) > cap:
        raise CapacityError(f"{_popcount(support)} variables exceed the cap of {cap}")
    entries: dict[tuple[int, int], int] = {}
    for W in _lcm_lattice(gens):
        if W == 0:
            continue
        inside = [g for g in gens if g & W == g]
        j = _popcount(W)
        for d, r in restricted_homology(W, inside).items():
            key = (j - d - 1, j)
            entries[key] = entries.get(key, 0) + r
    return BettiTable(dict(sorted(entries.items())))


def regularity(I: MonomialIdeal) -> int:
    return betti_table(I).regularity


def proj_dim(I: MonomialIdeal) -> int:
    return betti_table(I).projective_dimension


@dataclass(frozen=True)
class RegDimBound:
    lhs: int
    rhs: int
    ok: bool


def reg_dim_bound_check(I: MonomialIdeal) -> RegDimBound:
    """Compare ``reg(S/I)`` with ``dim(S/I) + sum_i (gamma_i - 1)``."""
    lhs = regularity(I)
    _, dim = height_and_dim(I)
    rhs = dim + sum(g - 1 for g in I.max_exponents() if g)
    return RegDimBound(lhs, rhs, lhs <= rhs)
