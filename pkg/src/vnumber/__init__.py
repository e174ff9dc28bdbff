"""Exact v-numbers of monomial and edge ideals, with the graph invariants around them."""

from .betti import BettiTable, betti_table, proj_dim, reg_dim_bound_check, regularity, stanley_reisner_complex
from .engine import (
    LocalVReport,
    VNumberResult,
    alpha_module,
    is_complete_intersection,
    quotient_module_min_gens,
    v_local,
    v_number,
    v_oracle,
)
from .homology import SimplicialComplex, bareiss_rank, reduced_homology_ranks, sparse_rank
from .monomial import (
    IrreducibleComponent,
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    associated_primes,
    colon,
    contains,
    height_and_dim,
    intersect,
    irreducible_decomposition,
    max_primes,
    polarize,
)

__version__ = "0.1.0"

__all__ = [
    "BettiTable", "IrreducibleComponent", "LocalVReport", "Monomial", "MonomialIdeal", "PrimeSupport",
    "SimplicialComplex", "VNumberResult", "alpha_module", "associated_primes", "bareiss_rank",
    "betti_table", "colon", "contains", "height_and_dim", "intersect", "irreducible_decomposition",
    "is_complete_intersection", "max_primes", "polarize", "proj_dim", "quotient_module_min_gens",
    "reduced_homology_ranks", "reg_dim_bound_check", "regularity", "sparse_rank", "stanley_reisner_complex",
    "v_local", "v_number", "v_oracle",
]
