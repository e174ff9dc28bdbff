from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx
import pytest
from hypothesis import settings
from hypothesis import strategies as st

from vnumber.graphs.core import Graph
from vnumber.monomial import MonomialIdeal

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def from_nx(g: nx.Graph) -> Graph:
    """Relabel a networkx graph onto 1..n in sorted node order."""
    order = {v: k for k, v in enumerate(sorted(g.nodes()), start=1)}
    return Graph(len(order), [(order[u], order[v]) for u, v in g.edges()])


@lru_cache(maxsize=None)
def atlas(max_n: int) -> tuple[Graph, ...]:
    """Every graph on 1..max_n vertices up to isomorphism."""
    return tuple(from_nx(g) for g in nx.graph_atlas_g() if 1 <= g.number_of_nodes() <= max_n)


def atlas_no_isolated(max_n: int, min_n: int = 1) -> list[Graph]:
    return [G for G in atlas(max_n) if G.num_vertices >= min_n and G.edges and not G.isolated_vertices]


@lru_cache(maxsize=None)
def small_ideal_family(max_vars: int = 3, max_exp: int = 3, max_gens: int = 4) -> tuple[MonomialIdeal, ...]:
    """Proper nonzero ideals with bounded shape, one per orbit under permuting variables."""
    seen: set[tuple] = set()
    out = []
    for s in range(1, max_vars + 1):
        monos = [e for e in itertools.product(range(max_exp + 1), repeat=s) if any(e)]
        perms = list(itertools.permutations(range(s)))
        for k in range(1, max_gens + 1):
            for gens in itertools.combinations(monos, k):
                I = MonomialIdeal(s, gens)
                if len(I.generators) != k:
                    continue
                key = min(
                    (s, tuple(sorted(tuple(g[p[i]] for i in range(s)) for g in I.exponent_vectors))) for p in perms
                )
                if key in seen:
                    continue
                seen.add(key)
                out.append(I)
    return tuple(out)


@st.composite
def ideals(draw, max_vars: int = 4, max_exp: int = 3, max_gens: int = 4) -> MonomialIdeal:
    s = draw(st.integers(1, max_vars))
    vec = st.tuples(*[st.integers(0, max_exp)] * s).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(s, gens)


@st.composite
def squarefree_ideals(draw, max_vars: int = 6, max_gens: int = 6) -> MonomialIdeal:
    s = draw(st.integers(1, max_vars))
    vec = st.tuples(*[st.integers(0, 1)] * s).filter(any)
    gens = draw(st.lists(vec, min_size=1, max_size=max_gens))
    return MonomialIdeal(s, gens)


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7, no_isolated: bool = False) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    G = Graph(n, chosen)
    if no_isolated:
        # pendant edges to fresh vertices keep the draw simple and shrinkable
        iso = G.isolated_vertices
        extra = [(v, G.num_vertices + k) for k, v in enumerate(iso, start=1)]
        G = Graph(G.num_vertices + len(iso), list(G.edges) + extra)
    return G


@pytest.fixture(scope="session")
def ideal_family() -> tuple[MonomialIdeal, ...]:
    return small_ideal_family()


_CRITERIA = pytest.StashKey[dict]()


@pytest.fixture
def record_criterion(request):
    """Store a criterion outcome for the end-of-run summary and echo it."""
    log = request.config.stash.setdefault(_CRITERIA, {})

    def record(number: int, title: str, problems: list[str]) -> bool:
        log[number] = (title, list(problems))
        status = "PASS" if not problems else "FAIL"
        print(f"criterion {number} {status}: {title}")
        return not problems

    return record


def pytest_terminal_summary(terminalreporter, config):
    log = config.stash.get(_CRITERIA, None)
    if not log:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for number in sorted(log):
        title, problems = log[number]
        status = "PASS" if not problems else "FAIL"
        line = f"[{status}] {number}. {title}"
        if problems:
            line += f"  ({len(problems)} problem(s); first: {problems[0]})"
        terminalreporter.write_line(line)
