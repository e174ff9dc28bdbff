from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from vnumber.homology import SimplicialComplex, bareiss_rank, reduced_homology_ranks, sparse_rank


def fraction_rank(matrix) -> int:
    rows = [[Fraction(x) for x in r] for r in matrix]
    rank = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


matrices = st.integers(1, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=1, max_size=6)
)


@given(matrices)
def test_bareiss_matches_fractions(M):
    assert bareiss_rank(M) == fraction_rank(M)


@given(matrices)
def test_sparse_matches_fractions(M):
    assert sparse_rank([{c: v for c, v in enumerate(r)} for r in M]) == fraction_rank(M)


def test_rank_large_entries():
    M = [[10**30, 1], [10**30 + 1, 1], [1, 0]]
    assert bareiss_rank(M) == fraction_rank(M) == 2
    assert bareiss_rank([]) == 0 and sparse_rank([]) == 0


def boundary_of_simplex(k: int) -> SimplicialComplex:
    """Boundary of the k-simplex, a (k-1)-sphere."""
    verts = range(1, k + 2)
    return SimplicialComplex(k + 1, [[v for v in verts if v != w] for w in verts])


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_spheres(k):
    ranks = reduced_homology_ranks(boundary_of_simplex(k))
    assert ranks[k] == 1 and sum(ranks) == 1


def test_void_and_empty():
    assert reduced_homology_ranks(SimplicialComplex(3, [])) == []
    assert reduced_homology_ranks(SimplicialComplex(3, [()])) == [1]
    assert SimplicialComplex(3, []).dimension == -2
    assert SimplicialComplex(3, [()]).dimension == -1


def test_points_and_simplex():
    assert reduced_homology_ranks(SimplicialComplex(3, [[1], [2], [3]])) == [0, 2]
    assert reduced_homology_ranks(SimplicialComplex(3, [[1, 2, 3]])) == [0, 0, 0, 0]


def test_projective_plane_rationally_acyclic():
    # 6-vertex RP^2 has only 2-torsion, invisible over Q
    facets = [
        (1, 2, 3), (1, 3, 4), (1, 4, 5), (1, 5, 6), (1, 2, 6),
        (2, 3, 5), (3, 4, 6), (2, 4, 5), (3, 5, 6), (2, 4, 6),
    ]
    K = SimplicialComplex(6, facets)
    assert K.f_vector() == [1, 6, 15, 10]
    assert reduced_homology_ranks(K) == [0, 0, 0, 0]


def test_torus():
    # 7-vertex Moebius torus
    facets = []
    for i in range(7):
        facets.append(((i) % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1))
        facets.append(((i) % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1))
    K = SimplicialComplex(7, facets)
    assert K.f_vector() == [1, 7, 21, 14]
    assert reduced_homology_ranks(K) == [0, 0, 2, 1]


complexes = st.integers(1, 6).flatmap(
    lambda n: st.builds(
        lambda fs: SimplicialComplex(n, fs),
        st.lists(st.sets(st.integers(1, n), max_size=n), min_size=1, max_size=6),
    )
)


@given(complexes)
def test_euler_characteristic(K):
    ranks = reduced_homology_ranks(K)
    f = K.f_vector()
    assert sum((-1) ** i * r for i, r in enumerate(ranks)) == sum((-1) ** i * c for i, c in enumerate(f))


@given(complexes)
def test_faces_closed_and_induced(K):
    faces = set(K.faces())
    for f in faces:
        for v in f:
            assert tuple(x for x in f if x != v) in faces
    L = K.induced([1, 2])
    assert set(L.faces()) == {f for f in faces if set(f) <= {1, 2}}


def test_vertex_range_checked():
    with pytest.raises(ValueError):
        SimplicialComplex(2, [[3]])
