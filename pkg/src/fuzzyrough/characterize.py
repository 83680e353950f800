"""Deciding whether (F, G) is the (upper, lower) approximation pair of some reference set.

The decision reads off the maximal classes of E(F) and eps(G); accepted pairs
come with a constructive witness that is re-verified by recomputing both
approximations. ``brute_force_pair_oracle`` is an independent exhaustive check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .errors import (
    BudgetExceeded,
    ConditionIDRequired,
    FuzzyRoughError,
    NotSimilarity,
    SelectionImpossible,
    UniverseMismatch,
    ValidationError,
)
from .induced import FactorPoset, factor_poset, quasiorder_R, quasiorder_rho
from .space import ApproximationSpace, FuzzySet

DEFAULT_BUDGET = 10**6

FIXPOINT_G = "Fixpoint-G"
FIXPOINT_F = "Fixpoint-F"
ORDER = "Order"
CONDITION2 = "Condition2"
CONDITION3 = "Condition3"


@dataclass(frozen=True)
class RoughPair:
    """A (lower, upper) pair; ``witness`` is a reference set certifying it."""

    lower: FuzzySet
    upper: FuzzySet
    witness: FuzzySet | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.lower.universe != self.upper.universe:
            raise UniverseMismatch("lower and upper live on different universes")

    @property
    def universe(self):
        return self.lower.universe

    @property
    def certified(self) -> bool:
        return self.witness is not None

    @property
    def key(self) -> tuple:
        return (self.lower.values, self.upper.values)

    def matrix(self) -> str:
        """Two-row notation, upper row first."""
        up = " ".join(str(v) for v in self.upper.values)
        lo = " ".join(str(v) for v in self.lower.values)
        return f"{up} | {lo}"

    def to_dict(self) -> dict:
        doc = {"lower": self.lower.as_dict(), "upper": self.upper.as_dict()}
        if self.witness is not None:
            doc["witness"] = self.witness.as_dict()
        return doc


@dataclass(frozen=True)
class CharacterizationVerdict:
    accepted: bool
    failed_condition: str | None = None
    failed_class: tuple[str, ...] | None = None
    witness: FuzzySet | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        doc: dict = {"accepted": self.accepted}
        if self.accepted:
            doc["witness"] = self.witness.as_dict()
        else:
            doc["failed_condition"] = self.failed_condition
            if self.failed_class is not None:
                doc["failed_class"] = list(self.failed_class)
            if self.detail:
                doc["detail"] = self.detail
        return doc


@dataclass(frozen=True)
class ClassStructure:
    """Factor posets of R(F) and rho(G) computed together."""

    upper_poset: FactorPoset
    lower_poset: FactorPoset


def class_structure(space: ApproximationSpace, F: FuzzySet, G: FuzzySet) -> ClassStructure:
    return ClassStructure(
        factor_poset(quasiorder_R(space, F, check_fixed=False)),
        factor_poset(quasiorder_rho(space, G, check_fixed=False)),
    )


def _require_setting(space: ApproximationSpace, *sets: FuzzySet) -> None:
    for h in sets:
        if h.universe != space.universe:
            raise UniverseMismatch("fuzzy set and space live on different universes")
    if not space.flags.condition_ID:
        raise ConditionIDRequired("the characterization needs the hypotheses of (ID)")
    if not space.is_similarity:
        raise NotSimilarity("the characterization needs a similarity relation")


def _first_condition_failure(F: FuzzySet, G: FuzzySet, cs: ClassStructure):
    pF, pG = cs.upper_poset, cs.lower_poset
    eq = [g == f for g, f in zip(G.values, F.values)]
    # (2): maximal eps(G) classes made of maximal E(F) singletons need a point with G = F
    for k in pG.maximal:
        members = pG.partition.classes[k]
        if all(pF.is_maximal_singleton(i) for i in members) and not any(eq[i] for i in members):
            return CONDITION2, pG.partition.names(k)
    # (3): the dual statement for maximal E(F) classes
    for k in pF.maximal:
        members = pF.partition.classes[k]
        if all(pG.is_maximal_singleton(i) for i in members) and not any(eq[i] for i in members):
            return CONDITION3, pF.partition.names(k)
    return None


def is_fuzzy_rough_pair(space: ApproximationSpace, F: FuzzySet, G: FuzzySet) -> CharacterizationVerdict:
    """Decide whether (G, F) = (lower(f), upper(f)) for some f; F is the upper part."""
    _require_setting(space, F, G)
    names = space.universe.names
    if space.lower(G) != G:
        return CharacterizationVerdict(False, FIXPOINT_G, detail="lower(G) != G")
    if space.upper(F) != F:
        return CharacterizationVerdict(False, FIXPOINT_F, detail="upper(F) != F")
    bad = next((i for i, (g, f) in enumerate(zip(G.values, F.values)) if g > f), None)
    if bad is not None:
        return CharacterizationVerdict(False, ORDER, (names[bad],), detail=f"G({names[bad]}) > F({names[bad]})")
    cs = class_structure(space, F, G)
    failure = _first_condition_failure(F, G, cs)
    if failure is not None:
        cond, cls = failure
        return CharacterizationVerdict(False, cond, cls, detail="no element of the class has G = F")
    w = _witness_from_structure(space, F, G, cs)
    if space.lower(w) != G or space.upper(w) != F:
        raise FuzzyRoughError(f"constructed witness {w} does not reproduce the pair")
    return CharacterizationVerdict(True, witness=w)


def _select(cs: ClassStructure, F: FuzzySet, G: FuzzySet) -> list[int]:
    """One element per maximal eps(G) class, by type order 1, 2, 3, smallest index first."""
    pF, pG = cs.upper_poset, cs.lower_poset
    tests = (
        lambda i: not pF.in_maximal_class(i),
        lambda i: G.values[i] == F.values[i],
        lambda i: not pF.is_maximal_singleton(i),
    )
    picks = []
    for k in pG.maximal:
        members = pG.partition.classes[k]
        pick = next((i for test in tests for i in members if test(i)), None)
        if pick is None:
            raise SelectionImpossible(f"no representative in class {pG.partition.label(k)}")
        picks.append(pick)
    return picks


def _witness_from_structure(space: ApproximationSpace, F: FuzzySet, G: FuzzySet, cs: ClassStructure) -> FuzzySet:
    chosen = set(_select(cs, F, G))
    values = tuple(G.values[i] if i in chosen else F.values[i] for i in range(len(F.values)))
    return FuzzySet(space.universe, values)


def selected_representatives(space: ApproximationSpace, F: FuzzySet, G: FuzzySet) -> list[str]:
    """Names of the elements ``construct_witness`` sets to G."""
    _require_setting(space, F, G)
    names = space.universe.names
    return [names[i] for i in _select(class_structure(space, F, G), F, G)]


def construct_witness(space: ApproximationSpace, F: FuzzySet, G: FuzzySet) -> FuzzySet:
    """f = G on one selected element of each maximal eps(G) class, F elsewhere."""
    _require_setting(space, F, G)
    return _witness_from_structure(space, F, G, class_structure(space, F, G))


def brute_force_pair_oracle(
    space: ApproximationSpace,
    F: FuzzySet,
    G: FuzzySet,
    budget: int = DEFAULT_BUDGET,
    prune: bool = True,
) -> FuzzySet | None:
    """First f in lexicographic chain order with upper(f) = F and lower(f) = G.

    With ``prune`` the scan skips candidates outside G <= f <= F, which no
    solution can leave when theta is reflexive and the implicator is border.
    """
    if space.chain is None:
        raise ValidationError("the exhaustive oracle needs chain mode")
    for h in (F, G):
        if h.universe != space.universe:
            raise UniverseMismatch("fuzzy set and space live on different universes")
    chain = tuple(space.chain)
    n = len(space.universe)
    bound = len(chain) ** n
    if bound > budget:
        raise BudgetExceeded(bound, budget)
    rank = space.chain.rank
    target = (tuple(rank(v) for v in G.values), tuple(rank(v) for v in F.values)) if _in_chain(space, F, G) else None
    if target is None:
        return None  # approximations of chain-valued sets never leave the chain
    lo, hi = target
    if prune and space.flags.border:
        axes = [range(lo[i], hi[i] + 1) for i in range(n)]
    else:
        axes = [range(len(chain))] * n
    for ranks in product(*axes):
        if space.rank_approximations(ranks) == target:
            return space.from_ranks(ranks)
    return None


def _in_chain(space: ApproximationSpace, *sets: FuzzySet) -> bool:
    return all(v in space.chain for h in sets for v in h.values)
