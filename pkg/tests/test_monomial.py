import itertools

import pytest
from hypothesis import given

from conftest import ideals, small_ideal_family
from vnumber.errors import DimensionMismatchError, UndefinedInputError
from vnumber.monomial import (
    Monomial,
    MonomialIdeal,
    PrimeSupport,
    associated_primes,
    colon,
    colon_monomial,
    format_exponents,
    height_and_dim,
    intersect,
    irreducible_decomposition,
    max_primes,
    polarize,
)


def box(I: MonomialIdeal, slack: int = 1):
    """All monomials with exponents up to the generator maxima plus ``slack``."""
    return [Monomial(e) for e in itertools.product(*[range(g + slack + 1) for g in I.max_exponents()])]


def E51() -> MonomialIdeal:
    return MonomialIdeal(3, [(5, 0, 0), (0, 5, 0), (0, 4, 5), (4, 0, 5)])


class TestMonomial:
    def test_arithmetic(self):
        a, b = Monomial((2, 0, 1)), Monomial((1, 3, 0))
        assert (a * b).exponents == (3, 3, 1)
        assert a.lcm(b).exponents == (2, 3, 1)
        assert a.gcd(b).exponents == (1, 0, 0)
        assert (a / Monomial((1, 0, 1))).exponents == (1, 0, 0)
        assert a.degree == 3 and not a.is_squarefree
        assert a.support == frozenset({1, 3})

    def test_divides_and_division_error(self):
        assert Monomial((1, 0)).divides(Monomial((2, 1)))
        with pytest.raises(ValueError):
            Monomial((1, 0)) / Monomial((0, 1))

    def test_negative_exponent_rejected(self):
        with pytest.raises(ValueError):
            Monomial((1, -1))

    def test_str(self):
        assert str(Monomial((4, 4, 0))) == "t1^4*t2^4"
        assert str(Monomial((0, 1))) == "t2"
        assert str(Monomial.unit(2)) == "1"
        assert format_exponents((1, 2), ["x", "y"]) == "x*y^2"

    def test_ring_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            Monomial((1,)) * Monomial((1, 0))
        with pytest.raises(DimensionMismatchError):
            MonomialIdeal(2, [(1, 0, 0)])


class TestIdeal:
    def test_minimal_generators_sorted(self):
        I = MonomialIdeal(2, [(2, 1), (1, 0), (0, 3), (0, 4)])
        assert I.exponent_vectors == ((0, 3), (1, 0))

    def test_zero_and_unit(self):
        assert MonomialIdeal(2).is_zero and str(MonomialIdeal(2)) == "(0)"
        assert MonomialIdeal(2, [(0, 0), (1, 1)]).is_unit
        for op in (associated_primes, irreducible_decomposition, polarize):
            with pytest.raises(UndefinedInputError):
                op(MonomialIdeal(2))
            with pytest.raises(UndefinedInputError):
                op(MonomialIdeal(2, [(0, 0)]))

    def test_colon_by_zero_ideal(self):
        with pytest.raises(UndefinedInputError):
            colon(E51(), MonomialIdeal(3))

    def test_sum(self):
        I = MonomialIdeal(2, [(1, 0)]) + MonomialIdeal(2, [(2, 0), (0, 1)])
        assert I == MonomialIdeal.prime(2, (1, 2))


class TestMixedIdeal:
    def test_decomposition(self):
        comps = [str(c) for c in irreducible_decomposition(E51())]
        assert comps == ["(t1^4, t2^4)", "(t1^5, t2^5, t3^5)"]

    def test_intersection_reproduces_ideal(self):
        A = MonomialIdeal(3, [(4, 0, 0), (0, 4, 0)])
        B = MonomialIdeal(3, [(5, 0, 0), (0, 5, 0), (0, 0, 5)])
        assert intersect(A, B) == E51()

    def test_primes(self):
        assert associated_primes(E51()) == (PrimeSupport((1, 2)), PrimeSupport((1, 2, 3)))
        assert max_primes(E51()) == (PrimeSupport((1, 2, 3)),)
        assert height_and_dim(E51()) == (2, 1)

    def test_colons(self):
        assert colon_monomial(E51(), Monomial((3, 3, 5))) == MonomialIdeal.prime(3, (1, 2))
        assert colon_monomial(E51(), Monomial((4, 4, 0))) == MonomialIdeal(3, [(1, 0, 0), (0, 1, 0), (0, 0, 5)])
        assert Monomial((4, 4, 0)) not in E51()

    def test_polarization_size(self):
        pol = polarize(E51())
        assert pol.total_vars == 15 and pol.new_vars == 12
        assert pol.ideal.is_squarefree
        assert height_and_dim(pol.ideal)[0] == 2


# -- brute-force oracles ---------------------------------------------------------


@given(ideals(max_vars=3), ideals(max_vars=3))
def test_colon_matches_membership(I, J):
    if I.num_vars != J.num_vars:
        return
    Q = colon(I, J)
    for m in box(I):
        assert (m in Q) == all((m * g) in I for g in J.generators)


@given(ideals(max_vars=3), ideals(max_vars=3))
def test_intersection_matches_membership(I, J):
    if I.num_vars != J.num_vars:
        return
    K = intersect(I, J)
    for m in box(I + J):
        assert (m in K) == (m in I and m in J)


@given(ideals())
def test_decomposition_is_exact_and_irredundant(I):
    comps = [c.ideal(I.num_vars) for c in irreducible_decomposition(I)]
    for m in box(I):
        assert (m in I) == all(m in C for C in comps)
    for k in range(len(comps)):
        rest = comps[:k] + comps[k + 1 :]
        if rest:
            # dropping any component must enlarge the intersection
            assert any(m not in I and all(m in C for C in rest) for m in box(I))


def ass_oracle(I: MonomialIdeal) -> set[tuple[int, ...]]:
    """Primes of the form (I : f), f a monomial outside I; exponents up to gamma suffice."""
    out = set()
    for f in box(I, slack=0):
        if f in I:
            continue
        Q = colon_monomial(I, f)
        if all(g.degree == 1 for g in Q.generators):
            out.add(tuple(sorted(next(iter(g.support)) for g in Q.generators)))
    return out


@given(ideals())
def test_associated_primes_oracle(I):
    assert {p.vars for p in associated_primes(I)} == ass_oracle(I)


def dim_oracle(I: MonomialIdeal) -> int:
    """Largest variable set containing no generator support."""
    s = I.num_vars
    supports = [g.support for g in I.generators]
    for k in range(s, -1, -1):
        for U in itertools.combinations(range(1, s + 1), k):
            if not any(sup <= set(U) for sup in supports):
                return k
    raise AssertionError("unreachable")


@given(ideals())
def test_dimension_oracle(I):
    ht, dim = height_and_dim(I)
    assert dim == dim_oracle(I) and ht + dim == I.num_vars


@pytest.mark.parametrize("scheme", ["shifted", "standard"])
@given(I=ideals(max_vars=3))
def test_polarization_depolarizes(scheme, I):
    pol = polarize(I, scheme=scheme)
    gamma = I.max_exponents()
    assert pol.ideal.is_squarefree
    assert pol.total_vars == I.num_vars + sum(g - 1 for g in gamma if g)
    assert len(pol.ideal.generators) == len(I.generators)
    # substituting t_{i,j} -> t_i recovers G(I)
    back = []
    for g in pol.ideal.generators:
        exps = [0] * I.num_vars
        for k, e in enumerate(g.exponents):
            if e:
                exps[pol.var_map[k][0] - 1] += 1
        back.append(tuple(exps))
    assert sorted(back) == sorted(I.exponent_vectors)
    assert height_and_dim(pol.ideal)[0] == height_and_dim(I)[0]


def test_polarization_scheme_mapping():
    I = MonomialIdeal(2, [(3, 0), (1, 1)])
    shifted = polarize(I, "shifted")
    names = shifted.names()
    # t1^3 -> t1_2*t1_3*t1 (top power), t1 -> t1_2 (below the top)
    rendered = sorted(
        "*".join(names[k] for k, e in enumerate(g.exponents) if e) for g in shifted.ideal.generators
    )
    assert rendered == sorted(["t1*t1_2*t1_3", "t2*t1_2"])
    standard = polarize(I, "standard")
    names = standard.names()
    rendered = sorted(
        "*".join(names[k] for k, e in enumerate(g.exponents) if e) for g in standard.ideal.generators
    )
    assert rendered == sorted(["t1*t1_2*t1_3", "t1*t2"])


def test_polarization_unknown_scheme():
    with pytest.raises(ValueError):
        polarize(E51(), "other")


def test_family_is_deduplicated():
    fam = small_ideal_family()
    assert len(fam) == 6588
    assert all(not I.is_zero and not I.is_unit for I in fam)
