"""Crisp quasiorders induced by approximation images, their classes and factor posets.

For F = upper(f) and G = lower(g):

    (a, b) in R(F)   iff  F(a) == theta(a, b) (.) F(b)
    (a, b) in rho(G) iff  G(a) == theta(a, b) |> G(b)

Both tests use exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    ConditionCRequired,
    FuzzyRoughError,
    NegatorNotInvolutive,
    NotAQuasiorder,
    NotLowerFixed,
    NotSimilarity,
    NotUpperFixed,
    UniverseMismatch,
)
from .algebra import probe_domain
from .report import ValidationReport
from .space import ApproximationSpace, FuzzySet, Universe, negate_set


@dataclass(frozen=True)
class CrispQuasiorder:
    universe: Universe
    adjacency: tuple[tuple[bool, ...], ...]

    def __post_init__(self):
        n = len(self.universe)
        adj = self.adjacency
        names = self.universe.names
        for i in range(n):
            if not adj[i][i]:
                raise NotAQuasiorder(f"not reflexive at {names[i]!r}")
        for i in range(n):
            for j in range(n):
                if adj[i][j]:
                    for k in range(n):
                        if adj[j][k] and not adj[i][k]:
                            raise NotAQuasiorder(
                                f"not transitive: ({names[i]},{names[j]}), ({names[j]},{names[k]}) present, "
                                f"({names[i]},{names[k]}) missing"
                            )

    @classmethod
    def from_pairs(cls, universe: Universe, pairs: Iterable[tuple[str, str]]) -> "CrispQuasiorder":
        n = len(universe)
        adj = [[i == j for j in range(n)] for i in range(n)]
        for a, b in pairs:
            adj[universe.index(a)][universe.index(b)] = True
        return cls(universe, tuple(map(tuple, adj)))

    def __contains__(self, pair) -> bool:
        a, b = pair
        if isinstance(a, str):
            a = self.universe.index(a)
        if isinstance(b, str):
            b = self.universe.index(b)
        return self.adjacency[a][b]

    def pairs(self, loops: bool = False) -> list[tuple[str, str]]:
        names = self.universe.names
        n = len(names)
        return [
            (names[i], names[j])
            for i in range(n)
            for j in range(n)
            if self.adjacency[i][j] and (loops or i != j)
        ]


@dataclass(frozen=True)
class ClassPartition:
    universe: Universe
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    def names(self, k: int) -> tuple[str, ...]:
        return tuple(self.universe.names[i] for i in self.classes[k])

    def label(self, k: int) -> str:
        return "{" + ",".join(self.names(k)) + "}"

    def is_singleton_class(self, i: int) -> bool:
        return len(self.classes[self.class_of[i]]) == 1


@dataclass(frozen=True)
class FactorPoset:
    quasiorder: CrispQuasiorder
    partition: ClassPartition
    leq: tuple[tuple[bool, ...], ...]
    maximal: tuple[int, ...]

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Hasse edges (lower, upper) between class indices."""
        m = len(self.partition.classes)
        out = []
        for a in range(m):
            for b in range(m):
                if a == b or not self.leq[a][b]:
                    continue
                if not any(c not in (a, b) and self.leq[a][c] and self.leq[c][b] for c in range(m)):
                    out.append((a, b))
        return tuple(out)

    def is_maximal_class(self, k: int) -> bool:
        return k in self.maximal

    def is_maximal_singleton(self, i: int) -> bool:
        """Whether {i} is itself a class and that class is maximal."""
        k = self.partition.class_of[i]
        return len(self.partition.classes[k]) == 1 and k in self.maximal

    def in_maximal_class(self, i: int) -> bool:
        return self.partition.class_of[i] in self.maximal

    def maximal_classes(self) -> list[tuple[str, ...]]:
        return [self.partition.names(k) for k in self.maximal]


def _check_domain(space: ApproximationSpace, h: FuzzySet) -> None:
    if h.universe != space.universe:
        raise UniverseMismatch("fuzzy set and space live on different universes")


def quasiorder_R(space: ApproximationSpace, F: FuzzySet, check_fixed: bool = True) -> CrispQuasiorder:
    _check_domain(space, F)
    if check_fixed and space.flags.condition_ID and space.upper(F) != F:
        raise NotUpperFixed(f"{F} is not a fixpoint of the upper approximation")
    tnorm = space.algebra.tnorm
    m = space.theta.matrix
    v = F.values
    n = len(v)
    adj = tuple(tuple(v[a] == tnorm(m[a][b], v[b]) for b in range(n)) for a in range(n))
    return CrispQuasiorder(space.universe, adj)


def quasiorder_rho(space: ApproximationSpace, G: FuzzySet, check_fixed: bool = True) -> CrispQuasiorder:
    _check_domain(space, G)
    if check_fixed and space.flags.condition_ID and space.lower(G) != G:
        raise NotLowerFixed(f"{G} is not a fixpoint of the lower approximation")
    imp = space.algebra.implicator
    m = space.theta.matrix
    v = G.values
    n = len(v)
    adj = tuple(tuple(v[a] == imp(m[a][b], v[b]) for b in range(n)) for a in range(n))
    return CrispQuasiorder(space.universe, adj)


def class_partition(q: CrispQuasiorder) -> ClassPartition:
    n = len(q.universe)
    adj = q.adjacency
    class_of = [-1] * n
    classes = []
    for i in range(n):
        if class_of[i] >= 0:
            continue
        members = tuple(j for j in range(n) if adj[i][j] and adj[j][i])
        for j in members:
            class_of[j] = len(classes)
        classes.append(members)
    return ClassPartition(q.universe, tuple(classes), tuple(class_of))


def factor_poset(q: CrispQuasiorder) -> FactorPoset:
    part = class_partition(q)
    reps = [c[0] for c in part.classes]
    m = len(reps)
    leq = tuple(tuple(q.adjacency[reps[a]][reps[b]] for b in range(m)) for a in range(m))
    maximal = tuple(k for k in range(m) if not any(leq[k][j] and j != k for j in range(m)))
    return FactorPoset(q, part, leq, maximal)


def check_inequality_characterization(space: ApproximationSpace, H: FuzzySet, kind: str) -> ValidationReport:
    """Under condition (C): (a,b) in R(F) iff F(a) <= theta(a,b); (a,b) in rho(G) iff G(a) >= n(theta(a,b))."""
    if not space.flags.condition_C:
        raise ConditionCRequired("the inequality characterization needs condition (C)")
    if not space.is_similarity:
        raise NotSimilarity("the inequality characterization needs a similarity relation")
    theta = space.theta.matrix
    names = space.universe.names
    n = len(names)
    report = ValidationReport()
    if kind == "R":
        q = quasiorder_R(space, H)
        predicate = lambda a, b: H.values[a] <= theta[a][b]  # noqa: E731
    elif kind == "rho":
        q = quasiorder_rho(space, H)
        alg = space.algebra
        predicate = lambda a, b: H.values[a] >= alg.n(theta[a][b])  # noqa: E731
    else:
        raise ValueError(f"kind must be 'R' or 'rho', got {kind!r}")
    bad = None
    for a in range(n):
        for b in range(n):
            if q.adjacency[a][b] != predicate(a, b):
                bad = (names[a], names[b])
                break
        if bad:
            break
    report.add(f"{kind} inequality characterization", bad is None, bad)
    return report


def n_is_involutive(space: ApproximationSpace, values: Iterable = ()) -> bool:
    alg = space.algebra
    domain = set(probe_domain(alg, space.chain)) | set(values)
    try:
        return all(alg.n(alg.n(x)) == x for x in domain)
    except FuzzyRoughError:
        return False


def duality_swap(space: ApproximationSpace, source: str, H: FuzzySet) -> CrispQuasiorder:
    """rho(n(F)) for source "R", R(n(G)) for source "rho"; checked against the direct quasiorder."""
    if not n_is_involutive(space, H.values):
        raise NegatorNotInvolutive("x |> 0 is not involutive")
    nH = negate_set(space, H)
    if source == "R":
        direct = quasiorder_R(space, H)
        swapped = quasiorder_rho(space, nH)
    elif source == "rho":
        direct = quasiorder_rho(space, H)
        swapped = quasiorder_R(space, nH)
    else:
        raise ValueError(f"source must be 'R' or 'rho', got {source!r}")
    if swapped != direct:
        raise FuzzyRoughError(f"duality swap disagrees with the direct quasiorder for {H}")
    return swapped


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def quasiorder_to_dot(q: CrispQuasiorder, name: str = "quasiorder") -> str:
    """Loops suppressed; mutual pairs emitted once with ``dir=both``."""
    names = q.universe.names
    n = len(names)
    adj = q.adjacency
    lines = [f"digraph {_quote(name)} {{"]
    for x in names:
        lines.append(f"  {_quote(x)};")
    for i in range(n):
        for j in range(n):
            if i == j or not adj[i][j]:
                continue
            if adj[j][i]:
                if i < j:
                    lines.append(f"  {_quote(names[i])} -> {_quote(names[j])} [dir=both];")
            else:
                lines.append(f"  {_quote(names[i])} -> {_quote(names[j])};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def factor_poset_to_dot(poset: FactorPoset, name: str = "factor_poset") -> str:
    part = poset.partition
    lines = [f"digraph {_quote(name)} {{", "  rankdir=BT;"]
    for k in range(len(part.classes)):
        extra = ", peripheries=2" if k in poset.maximal else ""
        lines.append(f"  c{k} [label={_quote(part.label(k))}{extra}];")
    for a, b in poset.covers:
        lines.append(f"  c{a} -> c{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
