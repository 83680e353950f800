"""Fuzzy sets and relations on a finite universe, and the lower/upper approximation operators."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Mapping, Sequence

from .algebra import ONE, ZERO, Algebra, AlgebraFlags, Chain, TNorm, fmt, probe_domain, unit
from .errors import (
    ChainNotClosed,
    DimensionMismatch,
    NotSimilarity,
    ParseError,
    UniverseMismatch,
    ValueNotInChain,
)
from .report import ValidationReport


@dataclass(frozen=True)
class Universe:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(str(n) for n in self.names)
        object.__setattr__(self, "names", names)
        if not names:
            raise ParseError("the universe must be non-empty")
        if len(set(names)) != len(names):
            raise ParseError("universe element names must be distinct")

    @cached_property
    def _index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UniverseMismatch(f"{name!r} is not in the universe") from None

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name) -> bool:
        return name in self._index


@dataclass(frozen=True)
class FuzzySet:
    """A total map universe -> [0, 1], stored as a value tuple in universe order."""

    universe: Universe
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != len(self.universe):
            raise DimensionMismatch(
                f"{len(self.values)} values for a universe of {len(self.universe)} elements"
            )

    @classmethod
    def from_mapping(cls, universe: Universe, mapping: Mapping) -> "FuzzySet":
        missing = [n for n in universe if n not in mapping]
        extra = [k for k in mapping if k not in universe]
        if missing or extra:
            raise UniverseMismatch(f"missing {missing}, unknown {extra}")
        return cls(universe, tuple(unit(mapping[n]) for n in universe))

    @classmethod
    def of(cls, universe: Universe, values: Iterable) -> "FuzzySet":
        return cls(universe, tuple(unit(v) for v in values))

    @classmethod
    def constant(cls, universe: Universe, value) -> "FuzzySet":
        v = unit(value)
        return cls(universe, (v,) * len(universe))

    def __getitem__(self, key) -> Fraction:
        if isinstance(key, str):
            return self.values[self.universe.index(key)]
        return self.values[key]

    def __len__(self) -> int:
        return len(self.values)

    def leq(self, other: "FuzzySet") -> bool:
        _same_universe(self, other)
        return all(a <= b for a, b in zip(self.values, other.values))

    __le__ = leq

    def as_dict(self) -> dict[str, str]:
        return {n: fmt(v) for n, v in zip(self.universe.names, self.values)}

    def __str__(self) -> str:
        return "{" + ", ".join(f"{n}: {fmt(v)}" for n, v in zip(self.universe.names, self.values)) + "}"


def _same_universe(*sets: FuzzySet) -> Universe:
    u = sets[0].universe
    for s in sets[1:]:
        if s.universe != u:
            raise UniverseMismatch("fuzzy sets live on different universes")
    return u


def pointwise_meet(sets: Sequence[FuzzySet]) -> FuzzySet:
    if not sets:
        raise ValueError("meet of an empty family")
    u = _same_universe(*sets)
    return FuzzySet(u, tuple(min(col) for col in zip(*(s.values for s in sets))))


def pointwise_join(sets: Sequence[FuzzySet]) -> FuzzySet:
    if not sets:
        raise ValueError("join of an empty family")
    u = _same_universe(*sets)
    return FuzzySet(u, tuple(max(col) for col in zip(*(s.values for s in sets))))


@dataclass(frozen=True)
class FuzzyRelation:
    universe: Universe
    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        n = len(self.universe)
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise DimensionMismatch(f"relation matrix must be {n}x{n}")

    @classmethod
    def of(cls, universe: Universe, rows: Iterable[Iterable]) -> "FuzzyRelation":
        return cls(universe, tuple(tuple(unit(v) for v in row) for row in rows))

    @classmethod
    def identity(cls, universe: Universe) -> "FuzzyRelation":
        n = len(universe)
        return cls(universe, tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    def __call__(self, a, b) -> Fraction:
        if isinstance(a, str):
            a = self.universe.index(a)
        if isinstance(b, str):
            b = self.universe.index(b)
        return self.matrix[a][b]

    @cached_property
    def range(self) -> frozenset[Fraction]:
        return frozenset(v for row in self.matrix for v in row)

    def reflexivity_witness(self):
        return next((self.universe.names[i] for i in range(len(self.universe)) if self.matrix[i][i] != ONE), None)

    def symmetry_witness(self):
        n = len(self.universe)
        names = self.universe.names
        for i in range(n):
            for j in range(i + 1, n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    return (names[i], names[j])
        return None

    def transitivity_witness(self, tnorm: TNorm):
        n = len(self.universe)
        m = self.matrix
        names = self.universe.names
        for x, y, z in product(range(n), repeat=3):
            if tnorm(m[x][y], m[y][z]) > m[x][z]:
                return (names[x], names[y], names[z])
        return None


def validate_relation(rel: FuzzyRelation, tnorm: TNorm) -> ValidationReport:
    report = ValidationReport()
    report.add("reflexive", (w := rel.reflexivity_witness()) is None, w)
    report.add("symmetric", (w := rel.symmetry_witness()) is None, w)
    report.add(f"{tnorm.value}-transitive", (w := rel.transitivity_witness(tnorm)) is None, w)
    return report


@dataclass(frozen=True, eq=False)
class ApproximationSpace:
    """A universe with a reflexive fuzzy relation and an operator algebra.

    When ``chain`` is given the space works in chain mode: relation entries and
    reference sets must take values in the chain, and the approximations of
    chain-valued sets are checked to stay inside it.
    """

    universe: Universe
    theta: FuzzyRelation
    algebra: Algebra
    chain: Chain | None = None
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.theta.universe != self.universe:
            raise UniverseMismatch("relation universe differs from the space universe")
        w = self.theta.reflexivity_witness()
        if w is not None:
            raise NotSimilarity(f"relation is not reflexive at {w!r}")
        if self.chain is not None:
            bad = next((v for v in self.theta.range if v not in self.chain), None)
            if bad is not None:
                raise ValueNotInChain(f"relation value {bad} is not in the chain {self.chain}")
            self._check_chain_closed()

    def _check_chain_closed(self):
        # Approximations only evaluate t-norm and implicator with a relation value
        # on the left, so closure is only needed on range(theta) x L.
        alg = self.algebra
        for t in sorted(self.theta.range):
            for v in self.chain:
                for name, op in (("t-norm", alg.tnorm), ("implicator", alg.implicator)):
                    try:
                        r = op(t, v)
                    except ValueNotInChain:
                        r = None
                    if r is None or r not in self.chain:
                        raise ChainNotClosed(
                            f"{name}({fmt(t)}, {fmt(v)}) = {r} leaves the chain {self.chain}"
                        )

    @classmethod
    def build(cls, names: Sequence[str], rows, algebra: Algebra | None = None, chain=None) -> "ApproximationSpace":
        universe = Universe(tuple(names))
        if chain is not None and not isinstance(chain, Chain):
            chain = Chain.of(chain)
        theta = FuzzyRelation.of(universe, rows)
        return cls(universe, theta, algebra or Algebra.kleene_dienes(), chain)

    @cached_property
    def flags(self) -> AlgebraFlags:
        return self.algebra.flags(probe_domain(self.algebra, self.chain))

    @cached_property
    def is_symmetric(self) -> bool:
        return self.theta.symmetry_witness() is None

    @cached_property
    def is_transitive(self) -> bool:
        return self.theta.transitivity_witness(self.algebra.tnorm) is None

    @property
    def is_similarity(self) -> bool:
        return self.is_symmetric and self.is_transitive

    def validate(self) -> ValidationReport:
        return validate_relation(self.theta, self.algebra.tnorm)

    def fuzzy_set(self, values) -> FuzzySet:
        if isinstance(values, Mapping):
            return FuzzySet.from_mapping(self.universe, values)
        return FuzzySet.of(self.universe, values)

    def check_in_chain(self, f: FuzzySet) -> None:
        if self.chain is None:
            return
        for name, v in zip(self.universe.names, f.values):
            if v not in self.chain:
                raise ValueNotInChain(f"{name}: {v} is not in the chain {self.chain}")

    def _own(self, f: FuzzySet) -> None:
        if f.universe != self.universe:
            raise UniverseMismatch("fuzzy set and space live on different universes")

    def lower(self, f: FuzzySet) -> FuzzySet:
        return self._approximations(f)[0]

    def upper(self, f: FuzzySet) -> FuzzySet:
        return self._approximations(f)[1]

    def _approximations(self, f: FuzzySet) -> tuple[FuzzySet, FuzzySet]:
        self._own(f)
        hit = self._cache.get(f.values)
        if hit is not None:
            return hit
        imp = self.algebra.implicator
        tnorm = self.algebra.tnorm
        lows, ups = [], []
        for row in self.theta.matrix:
            lows.append(min(imp(t, v) for t, v in zip(row, f.values)))
            ups.append(max(tnorm(t, v) for t, v in zip(row, f.values)))
        result = (FuzzySet(self.universe, tuple(lows)), FuzzySet(self.universe, tuple(ups)))
        if len(self._cache) < 200_000:
            self._cache[f.values] = result
        return result


    @cached_property
    def _rank_tables(self):
        """Operator tables over chain ranks: row[t][v] for theta rank t and value rank v."""
        chain = self.chain
        els = tuple(chain)
        used = sorted({chain.rank(t) for t in self.theta.range})
        imp = {t: tuple(chain.rank(self.algebra.implicator(els[t], v)) for v in els) for t in used}
        tn = {t: tuple(chain.rank(self.algebra.tnorm(els[t], v)) for v in els) for t in used}
        theta = tuple(tuple(chain.rank(t) for t in row) for row in self.theta.matrix)
        return theta, imp, tn

    def rank_approximations(self, ranks: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Lower and upper approximation of a chain-valued set given by its value ranks."""
        theta, imp, tn = self._rank_tables
        lows = tuple(min(imp[t][v] for t, v in zip(row, ranks)) for row in theta)
        ups = tuple(max(tn[t][v] for t, v in zip(row, ranks)) for row in theta)
        return lows, ups

    def from_ranks(self, ranks: Sequence[int]) -> FuzzySet:
        els = self.chain.elements
        return FuzzySet(self.universe, tuple(els[r] for r in ranks))


def lower_approx(space: ApproximationSpace, f: FuzzySet) -> FuzzySet:
    """x -> min over y of theta(x, y) |> f(y)."""
    return space.lower(f)


def upper_approx(space: ApproximationSpace, f: FuzzySet) -> FuzzySet:
    """x -> max over y of theta(x, y) (.) f(y)."""
    return space.upper(f)


def is_fixed_lower(space: ApproximationSpace, f: FuzzySet) -> bool:
    return space.lower(f) == f


def is_fixed_upper(space: ApproximationSpace, f: FuzzySet) -> bool:
    return space.upper(f) == f


def negate_set(space_or_alg, f: FuzzySet) -> FuzzySet:
    """Pointwise x |> 0; for S-implicators this is the declared negator."""
    alg = space_or_alg.algebra if isinstance(space_or_alg, ApproximationSpace) else space_or_alg
    return FuzzySet(f.universe, tuple(alg.n(v) for v in f.values))
