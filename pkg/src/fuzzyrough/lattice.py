"""The ordered set of fuzzy rough pairs: duality, meet, join, enumeration and property checks.

Pairs are ordered componentwise: p <= q iff p.lower <= q.lower and p.upper <= q.upper.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Sequence

from .algebra import Algebra
from .characterize import (
    DEFAULT_BUDGET,
    RoughPair,
    class_structure,
    is_fuzzy_rough_pair,
)
from .errors import (
    BudgetExceeded,
    ConditionCRequired,
    ConditionDRequired,
    FuzzyRoughError,
    NotSimilarity,
    SelectionImpossible,
    UncertifiedPair,
    UniverseMismatch,
    ValidationError,
    ValueNotInChain,
)
from .induced import n_is_involutive
from .space import ApproximationSpace, FuzzySet, negate_set, pointwise_join, pointwise_meet


def frs_of(space: ApproximationSpace, f: FuzzySet, check_chain: bool = True) -> RoughPair:
    if check_chain:
        space.check_in_chain(f)
    low, up = space._approximations(f)
    return RoughPair(low, up, f)


def pair_leq(p: RoughPair, q: RoughPair) -> bool:
    if p.universe != q.universe:
        raise UniverseMismatch("pairs live on different universes")
    return p.lower.leq(q.lower) and p.upper.leq(q.upper)


def _algebra_of(space_or_alg) -> tuple[Algebra, object]:
    if isinstance(space_or_alg, ApproximationSpace):
        return space_or_alg.algebra, space_or_alg.flags
    return space_or_alg, space_or_alg.flags()


def dual_pair(space_or_alg, p: RoughPair) -> RoughPair:
    """Phi(G, F) = (n(F), n(G)), with n(x) = x |> 0."""
    alg, flags = _algebra_of(space_or_alg)
    if not flags.condition_D:
        raise ConditionDRequired("duality needs the hypotheses of (D)")
    witness = negate_set(alg, p.witness) if p.witness is not None else None
    return RoughPair(negate_set(alg, p.upper), negate_set(alg, p.lower), witness)


def _require_meet_setting(space: ApproximationSpace, pairs: Sequence[RoughPair], check_chain: bool) -> None:
    if not pairs:
        raise ValueError("meet/join of an empty family")
    if not space.flags.condition_C:
        raise ConditionCRequired("meet and join need condition (C)")
    if not space.is_similarity:
        raise NotSimilarity("meet and join need a similarity relation")
    for p in pairs:
        if p.universe != space.universe:
            raise UniverseMismatch("pair and space live on different universes")
        if p.witness is None:
            raise UncertifiedPair(f"pair {p.matrix()} carries no witness")
        low, up = space._approximations(p.witness)
        if low != p.lower or up != p.upper:
            raise UncertifiedPair(f"witness {p.witness} does not reproduce {p.matrix()}")
        if check_chain:
            for h in (p.lower, p.upper, p.witness):
                space.check_in_chain(h)


def _meet(space: ApproximationSpace, pairs: Sequence[RoughPair]) -> RoughPair:
    G = space.lower(pointwise_meet([p.witness for p in pairs]))
    if G != pointwise_meet([p.lower for p in pairs]):
        raise FuzzyRoughError("lower of the meet of witnesses differs from the meet of lowers")
    F = pointwise_meet([p.upper for p in pairs])
    verdict = is_fuzzy_rough_pair(space, F, G)
    if verdict.accepted:
        return RoughPair(G, F, verdict.witness)
    cs = class_structure(space, F, G)
    pF, pG = cs.upper_poset, cs.lower_poset
    tests = (
        lambda i: G.values[i] == F.values[i],
        lambda i: not pF.partition.is_singleton_class(i),
        lambda i: not pF.is_maximal_singleton(i),
    )
    chosen = set()
    for k in pG.maximal:
        members = pG.partition.classes[k]
        pick = next((i for test in tests for i in members if test(i)), None)
        if pick is None:
            raise SelectionImpossible(f"no representative in class {pG.partition.label(k)}")
        chosen.add(pick)
    f = FuzzySet(space.universe, tuple(G.values[i] if i in chosen else F.values[i] for i in range(len(G.values))))
    return frs_of(space, f, check_chain=False)


def meet(space: ApproximationSpace, pairs: Sequence[RoughPair]) -> RoughPair:
    """Greatest lower bound of certified fuzzy rough pairs."""
    pairs = list(pairs)
    _require_meet_setting(space, pairs, check_chain=True)
    result = _meet(space, pairs)
    _check_result(space, result)
    return result


def join(space: ApproximationSpace, pairs: Sequence[RoughPair]) -> RoughPair:
    """Least upper bound; computed as Phi(meet(Phi(p_i))) unless the pointwise join is already a pair."""
    pairs = list(pairs)
    _require_meet_setting(space, pairs, check_chain=True)
    G = pointwise_join([p.lower for p in pairs])
    F = pointwise_join([p.upper for p in pairs])
    verdict = is_fuzzy_rough_pair(space, F, G)
    if verdict.accepted:
        result = RoughPair(G, F, verdict.witness)
    else:
        # Phi may leave the chain (e.g. 1 - x on a chain not closed under it);
        # the inner meet runs on exact rationals and the result is checked afterwards.
        duals = [dual_pair(space, p) for p in pairs]
        result = dual_pair(space, _meet(space, duals))
    _check_result(space, result)
    return result


def _check_result(space: ApproximationSpace, result: RoughPair) -> None:
    for h in (result.lower, result.upper, result.witness):
        space.check_in_chain(h)


@dataclass
class LatticeDiagram:
    space: ApproximationSpace
    elements: list[RoughPair]
    leq: list[list[bool]]
    covers: list[tuple[int, int]]
    bottom: int | None
    top: int | None
    _index: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._index = {p.key: i for i, p in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, p: RoughPair) -> int:
        return self._index[p.key]

    def find(self, p: RoughPair) -> int | None:
        return self._index.get(p.key)

    @cached_property
    def _down(self) -> list[int]:
        m = len(self.elements)
        return [sum(1 << k for k in range(m) if self.leq[k][i]) for i in range(m)]

    @cached_property
    def _up(self) -> list[int]:
        m = len(self.elements)
        return [sum(1 << k for k in range(m) if self.leq[i][k]) for i in range(m)]

    def glb_table(self) -> list[list[int | None]]:
        return _bound_table(self._down)

    def lub_table(self) -> list[list[int | None]]:
        return _bound_table(self._up)

    @cached_property
    def _by_down(self) -> dict[int, int]:
        return {mask: k for k, mask in enumerate(self._down)}

    @cached_property
    def _by_up(self) -> dict[int, int]:
        return {mask: k for k, mask in enumerate(self._up)}

    def glb(self, i: int, j: int) -> int | None:
        return self._by_down.get(self._down[i] & self._down[j])

    def lub(self, i: int, j: int) -> int | None:
        return self._by_up.get(self._up[i] & self._up[j])

    def to_dict(self) -> dict:
        return diagram_document(self)


def _bound_table(masks: list[int]) -> list[list[int | None]]:
    # The glb of i and j is the common lower bound whose down-set is the whole
    # common down-set; likewise for lub with up-sets.
    by_mask = {mask: k for k, mask in enumerate(masks)}
    m = len(masks)
    return [[by_mask.get(masks[i] & masks[j]) for j in range(m)] for i in range(m)]


def _covers(leq: list[list[bool]]) -> list[tuple[int, int]]:
    m = len(leq)
    out = []
    for a in range(m):
        for b in range(m):
            if a != b and leq[a][b]:
                if not any(c != a and c != b and leq[a][c] and leq[c][b] for c in range(m)):
                    out.append((a, b))
    return out


def _dominated(p: tuple, q: tuple) -> bool:
    return all(a <= b for a, b in zip(p[0], q[0])) and all(a <= b for a, b in zip(p[1], q[1]))


def enumerate_lattice(space: ApproximationSpace, budget: int = DEFAULT_BUDGET) -> LatticeDiagram:
    """All pairs (lower(f), upper(f)) for f with values in the chain."""
    if space.chain is None:
        raise ValidationError("enumeration needs chain mode")
    chain = tuple(space.chain)
    n = len(space.universe)
    bound = len(chain) ** n
    if bound > budget:
        raise BudgetExceeded(bound, budget)
    seen: dict[tuple, tuple] = {}
    for ranks in product(range(len(chain)), repeat=n):
        low, up = space.rank_approximations(ranks)
        key = (low, up)
        if key not in seen:
            # first hit in lexicographic order is the smallest witness
            seen[key] = ranks
    keys = sorted(seen)
    elements = [
        RoughPair(space.from_ranks(low), space.from_ranks(up), space.from_ranks(seen[(low, up)])) for low, up in keys
    ]
    m = len(elements)
    leq = [[_dominated(keys[i], keys[j]) for j in range(m)] for i in range(m)]
    bottom = next((i for i in range(m) if all(leq[i])), None)
    top = next((i for i in range(m) if all(leq[k][i] for k in range(m))), None)
    return LatticeDiagram(space, elements, leq, _covers(leq), bottom, top)


@dataclass
class PropertyReport:
    is_lattice: bool
    lattice_witness: tuple | None = None
    is_distributive: bool | None = None
    distributive_witness: tuple | None = None
    is_modular: bool | None = None
    modular_witness: tuple | None = None
    is_self_dual: bool | None = None
    self_dual_witness: tuple | None = None
    notes: list[str] = field(default_factory=list)

    def to_dict(self, diagram: LatticeDiagram | None = None) -> dict:
        def show(w):
            if w is None:
                return None
            if diagram is None:
                return list(w)
            return [diagram.elements[i].matrix() if isinstance(i, int) else i for i in w]

        return {
            "is_lattice": self.is_lattice,
            "lattice_witness": show(self.lattice_witness),
            "is_distributive": self.is_distributive,
            "distributive_witness": show(self.distributive_witness),
            "is_modular": self.is_modular,
            "modular_witness": show(self.modular_witness),
            "is_self_dual": self.is_self_dual,
            "self_dual_witness": show(self.self_dual_witness),
            "notes": list(self.notes),
        }


def distributivity_witness(diagram: LatticeDiagram, glb=None, lub=None):
    """First ordered triple (x, y, z) with (x ^ y) v z != (x v z) ^ (y v z)."""
    glb = glb or diagram.glb_table()
    lub = lub or diagram.lub_table()
    m = len(diagram)
    for x in range(m):
        for y in range(m):
            xy = glb[x][y]
            for z in range(m):
                if lub[xy][z] != glb[lub[x][z]][lub[y][z]]:
                    return (x, y, z)
    return None


def modularity_witness(diagram: LatticeDiagram, glb=None, lub=None):
    """First (x, y, z) with x <= z and x v (y ^ z) != (x v y) ^ z."""
    glb = glb or diagram.glb_table()
    lub = lub or diagram.lub_table()
    leq = diagram.leq
    m = len(diagram)
    for x in range(m):
        for z in range(m):
            if not leq[x][z]:
                continue
            for y in range(m):
                if lub[x][glb[y][z]] != glb[lub[x][y]][z]:
                    return (x, y, z)
    return None


def self_duality_witness(diagram: LatticeDiagram):
    """Check that Phi maps the diagram onto itself reversing the order.

    Returns ``(verdict, witness, note)``; verdict is ``None`` when Phi cannot be
    used as the witness map (it leaves the chain or (D) fails).
    """
    space = diagram.space
    if not space.flags.condition_D or not n_is_involutive(space):
        return None, None, "duality map unavailable: (D) or involutivity of x |> 0 fails"
    image = []
    for i, p in enumerate(diagram.elements):
        try:
            q = dual_pair(space, p)
        except ValueNotInChain:
            return None, (i,), "duality map undefined outside the chain"
        j = diagram.find(q)
        if j is None:
            return None, (i,), "duality map leaves the enumerated pairs (negator does not preserve the chain)"
        image.append(j)
    m = len(image)
    if len(set(image)) != m:
        return False, None, "duality map is not injective"
    for i in range(m):
        for j in range(m):
            if diagram.leq[i][j] != diagram.leq[image[j]][image[i]]:
                return False, (i, j), "duality map does not reverse the order"
    return True, None, ""


def check_properties(space: ApproximationSpace, diagram: LatticeDiagram) -> PropertyReport:
    glb = diagram.glb_table()
    lub = diagram.lub_table()
    m = len(diagram)
    missing = next(((i, j) for i in range(m) for j in range(m) if glb[i][j] is None or lub[i][j] is None), None)
    report = PropertyReport(is_lattice=missing is None, lattice_witness=missing)
    if missing is None:
        w = distributivity_witness(diagram, glb, lub)
        report.is_distributive, report.distributive_witness = w is None, w
        w = modularity_witness(diagram, glb, lub)
        report.is_modular, report.modular_witness = w is None, w
    else:
        report.notes.append("not a lattice; distributivity and modularity not evaluated")
    verdict, w, note = self_duality_witness(diagram)
    report.is_self_dual, report.self_dual_witness = verdict, w
    if note:
        report.notes.append(note)
    return report


def _vector(h: FuzzySet) -> list[str]:
    return [str(v) for v in h.values]


def diagram_document(diagram: LatticeDiagram) -> dict:
    space = diagram.space
    return {
        "universe": list(space.universe.names),
        "chain": [str(v) for v in space.chain] if space.chain is not None else None,
        "elements": [
            {
                "id": i,
                "lower": _vector(p.lower),
                "upper": _vector(p.upper),
                "witness": _vector(p.witness) if p.witness is not None else None,
            }
            for i, p in enumerate(diagram.elements)
        ],
        "covers": [[a, b] for a, b in diagram.covers],
        "bottom": diagram.bottom,
        "top": diagram.top,
    }


def diagram_dot(doc: dict, name: str = "fuzzy_rough_sets") -> str:
    """Hasse diagram in DOT; each node shows the upper row above the lower row."""
    lines = [f'digraph "{name}" {{', "  rankdir=BT;", "  node [shape=box];"]
    for el in doc["elements"]:
        label = " ".join(el["upper"]) + "\\n" + " ".join(el["lower"])
        lines.append(f'  n{el["id"]} [label="{label}"];')
    for a, b in doc["covers"]:
        lines.append(f"  n{a} -> n{b};")
    lines.append("}")
    return "\n".join(lines) + "\n"
