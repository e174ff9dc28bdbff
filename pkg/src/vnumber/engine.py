"""The v-number of a monomial ideal, globally and at each associated prime.

The fast path reads the local v-number off the minimal generators of
``(I : p)/I``; :func:`v_oracle` recomputes ``v(I)`` from the definition by
enumerating monomials degree by degree and shares no code with it beyond
the colon primitive.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import (
    CapExceededError,
    InvalidPrimeError,
    InvariantViolation,
    PreconditionError,
)
from .monomial import (
    Exponents,
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    _colon_monomial,
    _divides,
    _is_monomial_prime,
    _require_proper_nonzero,
    associated_primes,
    colon,
    colon_monomial,
    height_and_dim,
    max_primes,
)

DEFAULT_ORACLE_CAP = 64


@dataclass(frozen=True)
class LocalVReport:
    """Everything computed at one associated prime ``p``.

    ``module_min_gens`` are the monomials whose classes minimally generate
    ``(I : p)/I``; ``prime_gens`` is the subset with ``(I : g) = p``.
    """

    prime: PrimeSupport
    module_min_gens: tuple[Monomial, ...]
    prime_gens: tuple[Monomial, ...]
    alpha: int
    v_local: int | None
    witness: Monomial | None


@dataclass(frozen=True)
class VNumberResult:
    v: int
    per_prime: tuple[LocalVReport, ...]


def _check_prime(I: MonomialIdeal, p: PrimeSupport) -> None:
    if p not in associated_primes(I):
        raise InvalidPrimeError(f"{p} is not an associated prime of {I}")


def quotient_module_min_gens(I: MonomialIdeal, p: PrimeSupport) -> tuple[Monomial, ...]:
    """Monomials whose classes minimally generate ``(I : p)/I``."""
    _check_prime(I, p)
    quotient = colon(I, p.ideal(I.num_vars))
    return tuple(g for g in quotient.generators if not I.contains(g))


def alpha_module(I: MonomialIdeal, p: PrimeSupport) -> int:
    gens = quotient_module_min_gens(I, p)
    return min((g.degree for g in gens), default=0)


def v_local(I: MonomialIdeal, p: PrimeSupport) -> LocalVReport:
    gens = quotient_module_min_gens(I, p)
    target = p.ideal(I.num_vars)
    survivors = tuple(g for g in gens if colon_monomial(I, g) == target)
    alpha = min((g.degree for g in gens), default=0)
    if not survivors:
        return LocalVReport(p, gens, survivors, alpha, None, None)
    witness = min(survivors, key=lambda g: (g.degree, g.exponents))
    return LocalVReport(p, gens, survivors, alpha, witness.degree, witness)


def v_number(I: MonomialIdeal) -> VNumberResult:
    """``v(I)`` as the minimum local v-number over ``Ass(I)``.

    Also checks on the way that ``v_p(I) >= alpha((I:p)/I)``, with equality
    at every maximal associated prime.
    """
    _require_proper_nonzero(I)
    maximal = set(max_primes(I))
    reports = []
    for p in associated_primes(I):
        report = v_local(I, p)
        if report.v_local is None:
            raise InvariantViolation(f"no generator of (I:{p})/I has colon equal to {p}")
        if report.v_local < report.alpha:
            raise InvariantViolation(f"v_p < alpha at {p}")
        if p in maximal and report.v_local != report.alpha:
            raise InvariantViolation(f"v_p != alpha at maximal prime {p}")
        reports.append(report)
    return VNumberResult(min(r.v_local for r in reports), tuple(reports))


def _monomials_of_degree(num_vars: int, d: int) -> Iterator[Exponents]:
    # stars and bars, yielded in lexicographically decreasing order
    for bars in combinations(range(d + num_vars - 1), num_vars - 1):
        prev = -1
        exps = []
        for b in bars:
            exps.append(b - prev - 1)
            prev = b
        exps.append(d + num_vars - 2 - prev)
        yield tuple(exps)


def oracle_search(I: MonomialIdeal, degree_cap: int = DEFAULT_ORACLE_CAP) -> tuple[int, Monomial]:
    """Least degree monomial ``f`` outside ``I`` with ``(I : f)`` a monomial prime."""
    _require_proper_nonzero(I)
    raw = I.exponent_vectors
    for d in range(degree_cap + 1):
        found = [
            f
            for f in _monomials_of_degree(I.num_vars, d)
            if not any(_divides(g, f) for g in raw) and _is_monomial_prime(_colon_monomial(raw, f))
        ]
        if found:
            return d, Monomial(min(found))
    raise CapExceededError(f"no monomial of degree <= {degree_cap} has a prime colon")


def v_oracle(I: MonomialIdeal, degree_cap: int = DEFAULT_ORACLE_CAP) -> int:
    """``v(I)`` straight from the definition, by exhaustive monomial enumeration."""
    return oracle_search(I, degree_cap)[0]


def is_complete_intersection(I: MonomialIdeal) -> bool:
    """For zero-dimensional ``I``: whether ``G(I)`` is exactly ``s`` pure powers."""
    _, dim = height_and_dim(I)
    if dim != 0:
        raise PreconditionError(f"ideal is not zero-dimensional (dim = {dim})")
    return len(I.generators) == I.num_vars and all(len(g.support) == 1 for g in I.generators)


def adjoin_fresh_variable(I: MonomialIdeal) -> MonomialIdeal:
    """``I S' + (t_{s+1})`` in ``S' = S[t_{s+1}]``."""
    s = I.num_vars
    gens = [g.exponents + (0,) for g in I.generators]
    gens.append((0,) * s + (1,))
    return MonomialIdeal(s + 1, gens)
