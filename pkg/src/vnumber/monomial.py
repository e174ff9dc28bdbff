"""Monomials and monomial ideals in ``S = K[t1, ..., ts]``.

Variables are 1-based in every public interface; exponent vectors are
plain tuples of Python ints, so no exponent can overflow.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatchError, UndefinedInputError

Exponents = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Monomial:
    """A monomial ``t^a`` given by its exponent vector ``a``.

    Ordering is lexicographic on the exponent vector.
    """

    exponents: Exponents

    def __post_init__(self) -> None:
        exps = tuple(self.exponents)
        for e in exps:
            if not isinstance(e, int) or isinstance(e, bool) or e < 0:
                raise ValueError(f"exponents must be non-negative integers, got {self.exponents!r}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def unit(cls, num_vars: int) -> Monomial:
        return cls((0,) * num_vars)

    @classmethod
    def variable(cls, num_vars: int, i: int) -> Monomial:
        """The variable ``t_i`` (1-based)."""
        if not 1 <= i <= num_vars:
            raise ValueError(f"variable index {i} outside 1..{num_vars}")
        exps = [0] * num_vars
        exps[i - 1] = 1
        return cls(tuple(exps))

    @classmethod
    def from_support(cls, num_vars: int, support: Iterable[int]) -> Monomial:
        """Squarefree monomial ``prod_{i in support} t_i``."""
        exps = [0] * num_vars
        for i in support:
            if not 1 <= i <= num_vars:
                raise ValueError(f"variable index {i} outside 1..{num_vars}")
            exps[i - 1] = 1
        return cls(tuple(exps))

    @property
    def num_vars(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    @property
    def is_unit(self) -> bool:
        return not any(self.exponents)

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for e in self.exponents)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i + 1 for i, e in enumerate(self.exponents) if e)

    def _check(self, other: Monomial) -> None:
        if other.num_vars != self.num_vars:
            raise DimensionMismatchError(
                f"monomials in {self.num_vars} and {other.num_vars} variables"
            )

    def divides(self, other: Monomial) -> bool:
        self._check(other)
        return _divides(self.exponents, other.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def lcm(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(_lcm(self.exponents, other.exponents))

    def gcd(self, other: Monomial) -> Monomial:
        self._check(other)
        return Monomial(tuple(min(a, b) for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: Monomial) -> Monomial:
        self._check(other)
        if not _divides(other.exponents, self.exponents):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __str__(self) -> str:
        return format_exponents(self.exponents)


def format_exponents(exps: Sequence[int], names: Sequence[str] | None = None) -> str:
    parts = []
    for i, e in enumerate(exps):
        if not e:
            continue
        name = names[i] if names is not None else f"t{i + 1}"
        parts.append(name if e == 1 else f"{name}^{e}")
    return "*".join(parts) if parts else "1"


# -- raw exponent-tuple helpers -------------------------------------------------


def _divides(a: Exponents, b: Exponents) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def _minimalize(gens: Iterable[Exponents]) -> tuple[Exponents, ...]:
    """Minimal generators of the ideal spanned by ``gens``, sorted lexicographically."""
    candidates = sorted(set(gens), key=lambda g: (sum(g), g))
    kept: list[Exponents] = []
    for g in candidates:
        if not any(_divides(h, g) for h in kept):
            kept.append(g)
    kept.sort()
    return tuple(kept)


def _colon_monomial(gens: Sequence[Exponents], m: Exponents) -> tuple[Exponents, ...]:
    return _minimalize(tuple(x - y if x > y else 0 for x, y in zip(g, m)) for g in gens)


def _intersect(a: Sequence[Exponents], b: Sequence[Exponents]) -> tuple[Exponents, ...]:
    return _minimalize(_lcm(g, h) for g in a for h in b)


def _is_monomial_prime(gens: Sequence[Exponents]) -> bool:
    return len(gens) > 0 and all(sum(g) == 1 for g in gens)


# -- ideals ----------------------------------------------------------------------


@dataclass(frozen=True, init=False)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generating set ``G(I)``.

    The constructor minimalizes whatever generators it is given. The zero
    ideal has no generators; the unit ideal is the single unit generator.
    """

    num_vars: int
    generators: tuple[Monomial, ...]
    _raw: tuple[Exponents, ...] = field(repr=False, compare=False)

    def __init__(self, num_vars: int, generators: Iterable[Monomial | Sequence[int]] = ()):
        if num_vars < 1:
            raise ValueError("num_vars must be positive")
        raw = []
        for g in generators:
            exps = g.exponents if isinstance(g, Monomial) else tuple(g)
            if len(exps) != num_vars:
                raise DimensionMismatchError(
                    f"generator {tuple(exps)} has {len(exps)} exponents, ring has {num_vars} variables"
                )
            raw.append(Monomial(tuple(exps)).exponents)
        minimal = _minimalize(raw)
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "_raw", minimal)
        object.__setattr__(self, "generators", tuple(Monomial(g) for g in minimal))

    @classmethod
    def _from_raw(cls, num_vars: int, raw: Iterable[Exponents]) -> MonomialIdeal:
        return cls(num_vars, raw)

    @classmethod
    def from_supports(cls, num_vars: int, supports: Iterable[Iterable[int]]) -> MonomialIdeal:
        """Squarefree ideal generated by ``prod_{i in A} t_i`` for each support ``A``."""
        return cls(num_vars, [Monomial.from_support(num_vars, a) for a in supports])

    @classmethod
    def prime(cls, num_vars: int, support: Iterable[int]) -> MonomialIdeal:
        return cls(num_vars, [Monomial.variable(num_vars, i) for i in support])

    @property
    def is_zero(self) -> bool:
        return not self._raw

    @property
    def is_unit(self) -> bool:
        return len(self._raw) == 1 and not any(self._raw[0])

    @property
    def is_squarefree(self) -> bool:
        return all(e <= 1 for g in self._raw for e in g)

    @property
    def exponent_vectors(self) -> tuple[Exponents, ...]:
        return self._raw

    def max_exponents(self) -> Exponents:
        """Per-variable maximum exponent over ``G(I)`` (0 if the variable never occurs)."""
        if not self._raw:
            return (0,) * self.num_vars
        return tuple(max(col) for col in zip(*self._raw))

    def _check(self, other: MonomialIdeal | Monomial) -> None:
        if other.num_vars != self.num_vars:
            raise DimensionMismatchError(
                f"ring mismatch: {self.num_vars} vs {other.num_vars} variables"
            )

    def contains(self, m: Monomial) -> bool:
        self._check(m)
        return any(_divides(g, m.exponents) for g in self._raw)

    __contains__ = contains

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __add__(self, other: MonomialIdeal) -> MonomialIdeal:
        self._check(other)
        return MonomialIdeal(self.num_vars, self._raw + other._raw)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"


def colon(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    """The ideal quotient ``(I : J)``, minimalized."""
    I._check(J)
    if J.is_zero:
        raise UndefinedInputError("colon by the zero ideal")
    result: tuple[Exponents, ...] | None = None
    for m in J._raw:
        part = _colon_monomial(I._raw, m)
        result = part if result is None else _intersect(result, part)
    return MonomialIdeal(I.num_vars, result or ())


def colon_monomial(I: MonomialIdeal, m: Monomial) -> MonomialIdeal:
    """Shorthand for ``(I : m)`` with a single monomial."""
    I._check(m)
    return MonomialIdeal(I.num_vars, _colon_monomial(I._raw, m.exponents))


def intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    I._check(J)
    return MonomialIdeal(I.num_vars, _intersect(I._raw, J._raw))


def contains(I: MonomialIdeal, m: Monomial) -> bool:
    return I.contains(m)


# -- decomposition ---------------------------------------------------------------


@dataclass(frozen=True, order=True, init=False)
class PrimeSupport:
    """Monomial prime ``(t_i : i in vars)``; ordered by its sorted variable tuple."""

    vars: tuple[int, ...]

    def __init__(self, vars: Iterable[int]):
        object.__setattr__(self, "vars", tuple(sorted(set(vars))))

    def __len__(self) -> int:
        return len(self.vars)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vars)

    def __contains__(self, i: object) -> bool:
        return i in self.vars

    def issubset(self, other: PrimeSupport) -> bool:
        return set(self.vars) <= set(other.vars)

    def ideal(self, num_vars: int) -> MonomialIdeal:
        return MonomialIdeal.prime(num_vars, self.vars)

    def __str__(self) -> str:
        return "(" + ",".join(f"t{i}" for i in self.vars) + ")"


@dataclass(frozen=True, order=True)
class IrreducibleComponent:
    """Irreducible monomial ideal ``(t_i^{e_i})``, stored as sorted ``(i, e_i)`` pairs."""

    pure_powers: tuple[tuple[int, int], ...]

    @property
    def support(self) -> PrimeSupport:
        return PrimeSupport(i for i, _ in self.pure_powers)

    def ideal(self, num_vars: int) -> MonomialIdeal:
        gens = []
        for i, e in self.pure_powers:
            exps = [0] * num_vars
            exps[i - 1] = e
            gens.append(tuple(exps))
        return MonomialIdeal(num_vars, gens)

    def __str__(self) -> str:
        return "(" + ", ".join(f"t{i}" if e == 1 else f"t{i}^{e}" for i, e in self.pure_powers) + ")"


def _require_proper_nonzero(I: MonomialIdeal) -> None:
    if I.is_zero:
        raise UndefinedInputError("operation undefined for the zero ideal")
    if I.is_unit:
        raise UndefinedInputError("operation undefined for the unit ideal")


@lru_cache(maxsize=65536)
def _irreducible_raw(gens: frozenset[Exponents]) -> frozenset[Exponents]:
    # A component is an exponent vector: entry e > 0 means t_i^e is a generator.
    for g in sorted(gens):
        nz = [i for i, e in enumerate(g) if e]
        if len(nz) < 2:
            continue
        i = nz[0]
        power = tuple(g[i] if j == i else 0 for j in range(len(g)))
        rest = tuple(0 if j == i else e for j, e in enumerate(g))
        others = gens - {g}
        left = _irreducible_raw(frozenset(_minimalize(others | {power})))
        right = _irreducible_raw(frozenset(_minimalize(others | {rest})))
        return left | right
    comp = [0] * len(next(iter(gens)))
    for g in gens:
        (i,) = [j for j, e in enumerate(g) if e]
        comp[i] = g[i]
    return frozenset({tuple(comp)})


def _component_contains(big: Exponents, small: Exponents) -> bool:
    """Whether the irreducible ideal ``small`` is contained in ``big``."""
    return all(b and b <= s for s, b in zip(small, big) if s)


def irreducible_decomposition(I: MonomialIdeal) -> tuple[IrreducibleComponent, ...]:
    """Irredundant irreducible decomposition, components sorted."""
    _require_proper_nonzero(I)
    comps = sorted(_irreducible_raw(frozenset(I._raw)))
    kept = [
        c
        for c in comps
        if not any(d != c and _component_contains(c, d) for d in comps)
    ]
    return tuple(
        sorted(
            IrreducibleComponent(tuple((i + 1, e) for i, e in enumerate(c) if e)) for c in kept
        )
    )


def associated_primes(I: MonomialIdeal) -> tuple[PrimeSupport, ...]:
    """``Ass(I)`` as the supports of an irredundant irreducible decomposition."""
    return tuple(sorted({c.support for c in irreducible_decomposition(I)}))


def max_primes(I: MonomialIdeal) -> tuple[PrimeSupport, ...]:
    primes = associated_primes(I)
    return tuple(
        p for p in primes if not any(p != q and p.issubset(q) for q in primes)
    )


def height_and_dim(I: MonomialIdeal) -> tuple[int, int]:
    height = min(len(p) for p in associated_primes(I))
    return height, I.num_vars - height


# -- polarization ----------------------------------------------------------------


@dataclass(frozen=True)
class Polarization:
    """Result of :func:`polarize`.

    ``var_map[k - 1] = (i, j)`` says variable ``k`` of the new ring is
    ``t_{i,j}``; the first ``s`` entries are ``(i, 1)``, identified with ``t_i``.
    """

    ideal: MonomialIdeal
    total_vars: int
    var_map: tuple[tuple[int, int], ...]

    @property
    def new_vars(self) -> int:
        return sum(1 for _, j in self.var_map if j > 1)

    def names(self) -> list[str]:
        return [f"t{i}" if j == 1 else f"t{i}_{j}" for i, j in self.var_map]


def polarize(I: MonomialIdeal, scheme: str = "shifted") -> Polarization:
    """Squarefree polarization of ``I``.

    ``scheme="shifted"`` sends ``t_i^c`` to ``t_{i,2}...t_{i,c+1}`` when
    ``c < gamma_i`` and to ``t_{i,2}...t_{i,gamma_i} t_i`` when ``c = gamma_i``;
    ``scheme="standard"`` uses ``t_{i,1}...t_{i,c}``. Both give the same
    height and regularity.
    """
    _require_proper_nonzero(I)
    if scheme not in ("shifted", "standard"):
        raise ValueError(f"unknown polarization scheme {scheme!r}")
    s = I.num_vars
    gamma = I.max_exponents()
    var_map: list[tuple[int, int]] = [(i, 1) for i in range(1, s + 1)]
    index: dict[tuple[int, int], int] = {(i, 1): i - 1 for i in range(1, s + 1)}
    for i in range(1, s + 1):
        for j in range(2, gamma[i - 1] + 1):
            index[(i, j)] = len(var_map)
            var_map.append((i, j))
    total = len(var_map)

    def copies(i: int, c: int) -> list[int]:
        g = gamma[i - 1]
        if scheme == "standard" or g == 1:
            return list(range(1, c + 1))
        if c < g:
            return list(range(2, c + 2))
        return list(range(2, g + 1)) + [1]

    gens = []
    for g in I._raw:
        exps = [0] * total
        for i, c in enumerate(g, start=1):
            for j in copies(i, c) if c else ():
                exps[index[(i, j)]] = 1
        gens.append(tuple(exps))
    return Polarization(MonomialIdeal(total, gens), total, tuple(var_map))
