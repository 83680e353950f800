"""Machine-checkable invariants of approximations, induced classes and the pair lattice.

Each check takes a space and a :class:`Sample` and returns ``None`` when the
statement holds, or a small JSON-friendly witness when it does not. A check
whose hypotheses fail for the space raises :class:`NotApplicable`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .characterize import brute_force_pair_oracle, class_structure, is_fuzzy_rough_pair
from .errors import NotAQuasiorder
from .induced import (
    FactorPoset,
    check_inequality_characterization,
    duality_swap,
    factor_poset,
    n_is_involutive,
    quasiorder_R,
    quasiorder_rho,
)
from .lattice import LatticeDiagram, dual_pair, join, meet
from .space import ApproximationSpace, FuzzySet, negate_set, pointwise_join, pointwise_meet


class NotApplicable(Exception):
    pass


@dataclass
class Sample:
    """Reference sets and derived data for one random space."""

    refs: list[FuzzySet]
    probes: list[FuzzySet]
    pair_candidates: list[tuple[FuzzySet, FuzzySet]] = field(default_factory=list)  # (F, G)
    element_pairs: list[tuple[int, int]] = field(default_factory=list)
    diagram: LatticeDiagram | None = None
    counts: dict = field(default_factory=dict)

    def bump(self, key: str, k: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + k


def _vec(h: FuzzySet) -> list[str]:
    return [str(v) for v in h.values]


def _gate(ok: bool, why: str) -> None:
    if not ok:
        raise NotApplicable(why)


def _needs_similarity(space: ApproximationSpace) -> None:
    _gate(space.flags.condition_ID, "(ID) hypotheses fail")
    _gate(space.is_similarity, "relation is not a similarity")


def _needs_C(space: ApproximationSpace) -> None:
    _gate(space.flags.condition_C, "condition (C) fails")
    _gate(space.is_similarity, "relation is not a similarity")


def _images(space: ApproximationSpace, sample: Sample):
    """(f, F, g, G) over all ordered pairs of reference sets."""
    for f, g in product(sample.refs, repeat=2):
        yield f, space.upper(f), g, space.lower(g)


# -- approximation operators ------------------------------------------------------------


def sandwich(space, sample):
    _gate(space.flags.border, "implicator is not border")
    for f in sample.refs + sample.probes:
        if not (space.lower(f).leq(f) and f.leq(space.upper(f))):
            return {"f": _vec(f)}
    return None


def monotonicity(space, sample):
    sets = sample.refs + sample.probes
    for f, g in product(sets, repeat=2):
        if f.leq(g):
            if not (space.lower(f).leq(space.lower(g)) and space.upper(f).leq(space.upper(g))):
                return {"f": _vec(f), "g": _vec(g)}
    return None


def duality(space, sample):
    _gate(space.flags.condition_D, "(D) hypotheses fail")
    for f in sample.refs + sample.probes:
        nf = negate_set(space, f)
        if negate_set(space, space.upper(f)) != space.lower(nf) or negate_set(space, space.lower(f)) != space.upper(nf):
            return {"f": _vec(f)}
    return None


def idempotence(space, sample):
    _gate(space.flags.condition_ID, "(ID) hypotheses fail")
    _gate(space.is_transitive, "relation is not transitive")
    for f in sample.refs + sample.probes:
        up, low = space.upper(f), space.lower(f)
        if space.upper(up) != up or space.lower(low) != low:
            return {"f": _vec(f)}
    return None


def finite_range(space, sample):
    _gate(space.chain is not None, "free mode")
    for f in sample.refs + sample.probes:
        for h in (space.lower(f), space.upper(f)):
            if any(v not in space.chain for v in h.values):
                return {"f": _vec(f)}
    return None


def morphisms(space, sample):
    sets = sample.refs + sample.probes
    for f, g in product(sets, repeat=2):
        if space.lower(pointwise_meet([f, g])) != pointwise_meet([space.lower(f), space.lower(g)]):
            return {"f": _vec(f), "g": _vec(g), "law": "lower of meet"}
        if space.upper(pointwise_join([f, g])) != pointwise_join([space.upper(f), space.upper(g)]):
            return {"f": _vec(f), "g": _vec(g), "law": "upper of join"}
    return None


# -- induced quasiorders ------------------------------------------------------------------


def quasiorders(space, sample):
    _gate(space.flags.condition_ID, "(ID) hypotheses fail")
    _gate(space.is_transitive, "relation is not transitive")
    for f, F, g, G in _images(space, sample):
        try:
            quasiorder_R(space, F)
            quasiorder_rho(space, G)
        except NotAQuasiorder:
            return {"f": _vec(f), "g": _vec(g)}
    return None


def membership_bounds(space, sample):
    """(a,b) in R(F) => F(a) <= theta(a,b); (a,b) in rho(G) => G(a) >= n(theta(a,b))."""
    _gate(space.flags.condition_ID, "(ID) hypotheses fail")
    _gate(space.is_transitive, "relation is not transitive")
    theta = space.theta.matrix
    n = len(space.universe)
    alg = space.algebra
    for f, F, g, G in _images(space, sample):
        qF = quasiorder_R(space, F, check_fixed=False).adjacency
        qG = quasiorder_rho(space, G, check_fixed=False).adjacency
        for a, b in product(range(n), repeat=2):
            if qF[a][b] and F.values[a] > theta[a][b]:
                return {"f": _vec(f), "pair": [a, b], "which": "R"}
            if qG[a][b] and G.values[a] < alg.n(theta[a][b]):
                return {"g": _vec(g), "pair": [a, b], "which": "rho"}
    return None


def operator_bounds(space, sample):
    """F(a) >= theta(a,y) (.) F(y) and G(a) <= theta(a,y) |> G(y)."""
    _gate(space.flags.condition_ID, "(ID) hypotheses fail")
    _gate(space.is_transitive, "relation is not transitive")
    theta = space.theta.matrix
    n = len(space.universe)
    t, imp = space.algebra.tnorm, space.algebra.implicator
    for f, F, g, G in _images(space, sample):
        for a, y in product(range(n), repeat=2):
            if F.values[a] < t(theta[a][y], F.values[y]) or G.values[a] > imp(theta[a][y], G.values[y]):
                return {"f": _vec(f), "g": _vec(g), "pair": [a, y]}
    return None


def negation_swap(space, sample):
    """R(F) = rho(n(F)) and rho(G) = R(n(G))."""
    _gate(space.flags.condition_D, "(D) hypotheses fail")
    _gate(space.is_transitive, "relation is not transitive")
    _gate(n_is_involutive(space), "x |> 0 is not involutive")
    for f, F, g, G in _images(space, sample):
        try:
            duality_swap(space, "R", F)
            duality_swap(space, "rho", G)
        except Exception as exc:  # any failure is a counterexample here
            return {"f": _vec(f), "g": _vec(g), "error": type(exc).__name__}
    return None


def inequality_characterization(space, sample):
    _needs_C(space)
    for f, F, g, G in _images(space, sample):
        r1 = check_inequality_characterization(space, F, "R")
        r2 = check_inequality_characterization(space, G, "rho")
        if not (r1.ok and r2.ok):
            return {"f": _vec(f), "g": _vec(g)}
    return None


def value_propagation(space, sample):
    """(a,b) in R(F), h <= F, h(b) = F(b) => upper(h)(a) = F(a); dually for rho(G)."""
    _gate(space.flags.condition_ID, "(ID) hypotheses fail")
    _gate(space.is_transitive, "relation is not transitive")
    n = len(space.universe)
    for f, F, g, G in _images(space, sample):
        qF = quasiorder_R(space, F).adjacency
        qG = quasiorder_rho(space, G).adjacency
        for h in sample.probes:
            below = pointwise_meet([h, F])
            above = pointwise_join([h, G])
            for b in range(n):
                hb = FuzzySet(F.universe, tuple(F.values[i] if i == b else below.values[i] for i in range(n)))
                up = space.upper(hb)
                hg = FuzzySet(G.universe, tuple(G.values[i] if i == b else above.values[i] for i in range(n)))
                low = space.lower(hg)
                for a in range(n):
                    if qF[a][b] and up.values[a] != F.values[a]:
                        return {"f": _vec(f), "h": _vec(hb), "pair": [a, b], "which": "R"}
                    if qG[a][b] and low.values[a] != G.values[a]:
                        return {"g": _vec(g), "h": _vec(hg), "pair": [a, b], "which": "rho"}
    return None


# -- classes and maximal classes --------------------------------------------------------


def _posets(space, F, G) -> tuple[FactorPoset, FactorPoset]:
    cs = class_structure(space, F, G)
    return cs.upper_poset, cs.lower_poset


def class_values(space, sample):
    """F constant on E(F) classes with F(a) <= theta(a,b); G constant on eps(G) classes with G(a) >= n(theta(a,b))."""
    _needs_similarity(space)
    theta = space.theta.matrix
    alg = space.algebra
    for f, F, g, G in _images(space, sample):
        pF, pG = _posets(space, F, G)
        for cls in pF.partition.classes:
            for a, b in product(cls, repeat=2):
                if F.values[a] != F.values[b] or F.values[a] > theta[a][b]:
                    return {"f": _vec(f), "class": list(cls)}
        for cls in pG.partition.classes:
            for a, b in product(cls, repeat=2):
                if G.values[a] != G.values[b] or G.values[a] < alg.n(theta[a][b]):
                    return {"g": _vec(g), "class": list(cls)}
    return None


def maximal_class_inequalities(space, sample):
    _needs_similarity(space)
    theta = space.theta.matrix
    t, imp, alg = space.algebra.tnorm, space.algebra.implicator, space.algebra
    n = len(space.universe)
    for f, F, g, G in _images(space, sample):
        pF, pG = _posets(space, F, G)
        for k in pF.maximal:
            E = pF.partition.classes[k]
            outside = [z for z in range(n) if z not in E]
            for a, b in product(E, repeat=2):
                for z in outside:
                    if not (t(theta[a][z], F.values[z]) < F.values[a] and theta[a][z] < theta[a][b]):
                        return {"f": _vec(f), "class": list(E), "z": z}
        for k in pG.maximal:
            E = pG.partition.classes[k]
            outside = [z for z in range(n) if z not in E]
            for a, b in product(E, repeat=2):
                if G.values[a] < alg.n(theta[a][b]):
                    return {"g": _vec(g), "class": list(E)}
                for z in outside:
                    if not (G.values[a] < imp(theta[a][z], G.values[z]) and theta[a][z] < theta[a][b]):
                        return {"g": _vec(g), "class": list(E), "z": z}
    return None


def strict_monotonicity(space, sample):
    _needs_similarity(space)
    for f, F, g, G in _images(space, sample):
        pF, pG = _posets(space, F, G)
        for P, H, sign in ((pF, F, 1), (pG, G, -1)):
            cls = P.partition.classes
            for i, j in product(range(len(cls)), repeat=2):
                if i != j and P.leq[i][j]:
                    lo, hi = H.values[cls[i][0]], H.values[cls[j][0]]
                    if not (lo < hi if sign > 0 else lo > hi):
                        return {"f": _vec(f), "g": _vec(g), "classes": [list(cls[i]), list(cls[j])]}
    return None


def maximal_nesting(space, sample):
    """Intersecting maximal classes are nested; intersecting classes satisfy (x,y) in R(F) or (y,x) in rho(G)."""
    _needs_similarity(space)
    for f, F, g, G in _images(space, sample):
        pF, pG = _posets(space, F, G)
        qF, qG = pF.quasiorder.adjacency, pG.quasiorder.adjacency
        for E in pF.partition.classes:
            for D in pG.partition.classes:
                if not set(E) & set(D):
                    continue
                for x, y in product(E, D):
                    if not (qF[x][y] or qG[y][x]):
                        return {"f": _vec(f), "g": _vec(g), "pair": [x, y]}
        for i in pF.maximal:
            for j in pG.maximal:
                E, D = set(pF.partition.classes[i]), set(pG.partition.classes[j])
                if E & D and not (E <= D or D <= E):
                    return {"f": _vec(f), "g": _vec(g), "classes": [sorted(E), sorted(D)]}
    return None


def below_maximal(space, sample):
    _needs_similarity(space)
    for f, F, g, G in _images(space, sample):
        for P in _posets(space, F, G):
            for k in range(len(P.partition.classes)):
                if not any(P.leq[k][m] for m in P.maximal):
                    return {"f": _vec(f), "g": _vec(g), "class": list(P.partition.classes[k])}
    return None


def maximal_values(space, sample):
    """F = max f on a maximal E(F) class; G = min g on a maximal eps(G) class; singletons hit f, g."""
    _needs_similarity(space)
    for f, F, g, G in _images(space, sample):
        pF, pG = _posets(space, F, G)
        for k in pF.maximal:
            E = pF.partition.classes[k]
            top = max(f.values[y] for y in E)
            if any(F.values[a] != top for a in E):
                return {"f": _vec(f), "class": list(E)}
        for k in pG.maximal:
            E = pG.partition.classes[k]
            bot = min(g.values[y] for y in E)
            if any(G.values[a] != bot for a in E):
                return {"g": _vec(g), "class": list(E)}
    return None


def maximality_by_inequalities(space, sample):
    """Under (C): maximal classes are exactly those with theta(a,z) < F(a) = F(b) <= theta(a,b)."""
    _needs_C(space)
    theta = space.theta.matrix
    alg = space.algebra
    n = len(space.universe)
    for f, F, g, G in _images(space, sample):
        pF, pG = _posets(space, F, G)
        for k, E in enumerate(pF.partition.classes):
            out = [z for z in range(n) if z not in E]
            pred = all(
                F.values[a] == F.values[b] <= theta[a][b] and all(theta[a][z] < F.values[a] for z in out)
                for a, b in product(E, repeat=2)
            )
            if pred != (k in pF.maximal):
                return {"f": _vec(f), "class": list(E)}
        for k, E in enumerate(pG.partition.classes):
            out = [z for z in range(n) if z not in E]
            pred = all(
                alg.n(theta[a][b]) <= G.values[a] == G.values[b] and all(G.values[a] < alg.n(theta[a][z]) for z in out)
                for a, b in product(E, repeat=2)
            )
            if pred != (k in pG.maximal):
                return {"g": _vec(g), "class": list(E)}
    return None


def singleton_laws(space, sample):
    """Under (C): {a} maximal in E(F) and upper(h)(a) >= F(a) => upper(h)(a) = h(a); dually for lower."""
    _needs_C(space)
    n = len(space.universe)
    for f, F, g, G in _images(space, sample):
        pF, pG = _posets(space, F, G)
        for h in sample.refs + sample.probes:
            up, low = space.upper(h), space.lower(h)
            for a in range(n):
                if pF.is_maximal_singleton(a) and up.values[a] >= F.values[a] and up.values[a] != h.values[a]:
                    return {"f": _vec(f), "h": _vec(h), "a": a}
                if pG.is_maximal_singleton(a) and low.values[a] <= G.values[a] and low.values[a] != h.values[a]:
                    return {"g": _vec(g), "h": _vec(h), "a": a}
    return None


def cross_propagation(space, sample):
    """For intersecting classes E of E(F) and D of eps(G):
    (x,y) not in R(F), x in E, y in D  =>  (x,z) in R(F) implies (y,z) in rho(G) for z outside E u D;
    and the dual with the roles of R(F) and rho(G) swapped.
    """
    _needs_C(space)
    n = len(space.universe)
    for f, F, g, G in _images(space, sample):
        pF, pG = _posets(space, F, G)
        qF, qG = pF.quasiorder.adjacency, pG.quasiorder.adjacency
        for E in pF.partition.classes:
            for D in pG.partition.classes:
                if not set(E) & set(D):
                    continue
                outside = [z for z in range(n) if z not in E and z not in D]
                for x, y in product(E, D):
                    if not qF[x][y]:
                        for z in outside:
                            if qF[x][z] and not qG[y][z]:
                                return {"f": _vec(f), "g": _vec(g), "xyz": [x, y, z], "which": "R"}
                for x, y in product(D, E):
                    if not qG[x][y]:
                        for z in outside:
                            if qG[x][z] and not qF[y][z]:
                                return {"f": _vec(f), "g": _vec(g), "xyz": [x, y, z], "which": "rho"}
    return None


def nested_maximality(space, sample):
    """Links between maximal eps(G) classes and the E(F) classes inside them."""
    _needs_C(space)
    n = len(space.universe)
    for f, F, g, G in _images(space, sample):
        pF, pG = _posets(space, F, G)
        qF, qG = pF.quasiorder.adjacency, pG.quasiorder.adjacency
        for i, E in enumerate(pF.partition.classes):
            for j, D in enumerate(pG.partition.classes):
                sE, sD = set(E), set(D)
                if not sE & sD:
                    continue
                if j in pG.maximal:
                    all_in = all(qF[x][y] for x in E for y in D)
                    closed = sE <= sD and not any(qF[t][z] for t in E for z in range(n) if z not in sD)
                    if not (all_in or closed):
                        return {"f": _vec(f), "g": _vec(g), "case": "i", "classes": [list(E), list(D)]}
                    if sE < sD and not any(qF[x][y] for x in E for y in sD - sE) and i not in pF.maximal:
                        return {"f": _vec(f), "g": _vec(g), "case": "ii", "classes": [list(E), list(D)]}
                if i in pF.maximal:
                    all_in = all(qG[x][y] for x in D for y in E)
                    closed = sD <= sE and not any(qG[t][z] for t in D for z in range(n) if z not in sE)
                    if not (all_in or closed):
                        return {"f": _vec(f), "g": _vec(g), "case": "iii", "classes": [list(E), list(D)]}
                    if sD < sE and not any(qG[x][y] for x in D for y in sE - sD) and j not in pG.maximal:
                        return {"f": _vec(f), "g": _vec(g), "case": "iv", "classes": [list(E), list(D)]}
    return None


# -- characterization -------------------------------------------------------------------


def oracle_agreement(space, sample):
    _needs_similarity(space)
    _gate(space.chain is not None, "free mode")
    for F, G in sample.pair_candidates:
        verdict = is_fuzzy_rough_pair(space, F, G)
        found = brute_force_pair_oracle(space, F, G)
        sample.bump("oracle comparisons")
        sample.bump("oracle accepted" if verdict.accepted else "oracle rejected")
        if verdict.accepted != (found is not None):
            return {"F": _vec(F), "G": _vec(G), "decision": verdict.accepted, "oracle": found is not None}
    return None


def witness_laws(space, sample):
    """Accepted witnesses lie between G and F and meet F (resp. G) on every maximal E(F) (resp. eps(G)) class."""
    _needs_similarity(space)
    for F, G in sample.pair_candidates:
        verdict = is_fuzzy_rough_pair(space, F, G)
        if not verdict.accepted:
            continue
        w = verdict.witness
        if not (G.leq(w) and w.leq(F)):
            return {"F": _vec(F), "G": _vec(G), "witness": _vec(w), "law": "sandwich"}
        pF, pG = _posets(space, F, G)
        for k in pF.maximal:
            if not any(w.values[i] == F.values[i] for i in pF.partition.classes[k]):
                return {"F": _vec(F), "G": _vec(G), "witness": _vec(w), "law": "hits F"}
        for k in pG.maximal:
            if not any(w.values[i] == G.values[i] for i in pG.partition.classes[k]):
                return {"F": _vec(F), "G": _vec(G), "witness": _vec(w), "law": "hits G"}
    return None


def singleton_classes_meet(space, sample):
    """For F = upper(f), G = lower(f): a maximal class made of maximal singletons of the other side has F = G somewhere."""
    _needs_similarity(space)
    for f in sample.refs + sample.probes:
        F, G = space.upper(f), space.lower(f)
        pF, pG = _posets(space, F, G)
        for P, Q in ((pF, pG), (pG, pF)):
            for k in P.maximal:
                members = P.partition.classes[k]
                if all(Q.is_maximal_singleton(i) for i in members):
                    if not any(F.values[i] == G.values[i] for i in members):
                        return {"f": _vec(f), "class": list(members)}
    return None


# -- lattice ---------------------------------------------------------------------------


def _needs_diagram(space, sample):
    _needs_C(space)
    _gate(sample.diagram is not None, "no enumerated diagram")


def meet_join_vs_diagram(space, sample):
    _needs_diagram(space, sample)
    d = sample.diagram
    for i, j in sample.element_pairs:
        p, q = d.elements[i], d.elements[j]
        g = d.glb(i, j)
        l = d.lub(i, j)
        m = meet(space, [p, q])
        sample.bump("meet comparisons")
        naive = is_fuzzy_rough_pair(space, pointwise_meet([p.upper, q.upper]), pointwise_meet([p.lower, q.lower]))
        if not naive.accepted:
            sample.bump("meet by construction")
        if g is None or m != d.elements[g]:
            return {"op": "meet", "p": p.to_dict(), "q": q.to_dict(), "got": m.to_dict()}
        jn = join(space, [p, q])
        sample.bump("join comparisons")
        if l is None or jn != d.elements[l]:
            return {"op": "join", "p": p.to_dict(), "q": q.to_dict(), "got": jn.to_dict()}
    return None


def absorption(space, sample):
    _needs_diagram(space, sample)
    d = sample.diagram
    for i, j in sample.element_pairs:
        p, q = d.elements[i], d.elements[j]
        if join(space, [p, meet(space, [p, q])]) != p or meet(space, [p, join(space, [p, q])]) != p:
            return {"p": p.to_dict(), "q": q.to_dict()}
    return None


def fixpoint_closure(space, sample):
    """Fixpoints of upper and of lower inside F(U, L) are closed under pointwise meet and join."""
    _needs_C(space)
    sets = sample.refs + sample.probes
    uppers = [space.upper(f) for f in sets]
    lowers = [space.lower(f) for f in sets]
    for side, fam, op_fix in (("upper", uppers, space.upper), ("lower", lowers, space.lower)):
        for sub in (fam, fam[:2]):
            for op in (pointwise_meet, pointwise_join):
                h = op(sub)
                if op_fix(h) != h:
                    return {"family": [_vec(x) for x in sub], "op": op.__name__, "side": side}
    return None


def meet_of_uppers_on_singletons(space, sample):
    """F = meet of upper(f_i); {a} a maximal E(F) class => F(a) = min f_i(a)."""
    _needs_C(space)
    fam = sample.refs + sample.probes
    F = pointwise_meet([space.upper(f) for f in fam])
    pF = factor_poset(quasiorder_R(space, F))
    for a in range(len(space.universe)):
        if pF.is_maximal_singleton(a) and F.values[a] != min(f.values[a] for f in fam):
            return {"family": [_vec(f) for f in fam], "a": a}
    return None


def duality_antiisomorphism(space, sample):
    _needs_diagram(space, sample)
    _gate(space.flags.condition_D, "(D) hypotheses fail")
    d = sample.diagram
    image = []
    for p in d.elements:
        try:
            j = d.find(dual_pair(space, p))
        except Exception:
            j = None
        if j is None:
            raise NotApplicable("duality leaves the chain")
        image.append(j)
    for i, j in product(range(len(d)), repeat=2):
        if d.leq[i][j] != d.leq[image[j]][image[i]]:
            return {"p": d.elements[i].to_dict(), "q": d.elements[j].to_dict()}
    if any(image[image[i]] != i for i in range(len(d))):
        return {"law": "not an involution"}
    return None


def bounds(space, sample):
    _gate(sample.diagram is not None, "no enumerated diagram")
    d = sample.diagram
    n = len(space.universe)
    zero, one = (0,) * n, (1,) * n
    if d.bottom is None or d.top is None:
        return {"bottom": d.bottom, "top": d.top}
    if d.elements[d.bottom].key != (zero, zero) or d.elements[d.top].key != (one, one):
        return {"bottom": d.elements[d.bottom].matrix(), "top": d.elements[d.top].matrix()}
    return None


def frs_pairs_accepted(space, sample):
    """Every enumerated pair passes the decision procedure."""
    _needs_diagram(space, sample)
    for p in sample.diagram.elements:
        if not is_fuzzy_rough_pair(space, p.upper, p.lower).accepted:
            return p.to_dict()
    return None


Check = Callable[[ApproximationSpace, Sample], object]

# name, check, needs a symmetric relation
INVENTORY: list[tuple[str, Check, bool]] = [
    ("approx: sandwich", sandwich, False),
    ("approx: monotonicity", monotonicity, False),
    ("approx: duality (D)", duality, False),
    ("approx: idempotence (ID)", idempotence, False),
    ("approx: finite range in chain", finite_range, False),
    ("approx: meet/join morphisms", morphisms, False),
    ("induced: quasiorders", quasiorders, False),
    ("induced: membership bounds", membership_bounds, False),
    ("induced: operator bounds", operator_bounds, False),
    ("induced: negation swap", negation_swap, False),
    ("induced: value propagation", value_propagation, False),
    ("induced: inequality characterization", inequality_characterization, True),
    ("classes: constant values", class_values, True),
    ("classes: maximal class inequalities", maximal_class_inequalities, True),
    ("classes: strict monotonicity", strict_monotonicity, True),
    ("classes: maximal nesting", maximal_nesting, True),
    ("classes: below a maximal class", below_maximal, True),
    ("classes: maximal class values", maximal_values, True),
    ("classes: maximality by inequalities", maximality_by_inequalities, True),
    ("classes: singleton laws", singleton_laws, True),
    ("classes: cross propagation", cross_propagation, True),
    ("classes: nested maximality", nested_maximality, True),
    ("pairs: oracle agreement", oracle_agreement, True),
    ("pairs: witness laws", witness_laws, True),
    ("pairs: singleton classes meet", singleton_classes_meet, True),
    ("lattice: meet/join vs diagram", meet_join_vs_diagram, True),
    ("lattice: absorption", absorption, True),
    ("lattice: fixpoint closure", fixpoint_closure, True),
    ("lattice: meet of uppers on singletons", meet_of_uppers_on_singletons, True),
    ("lattice: duality anti-isomorphism", duality_antiisomorphism, True),
    ("lattice: bounds", bounds, False),
    ("lattice: enumerated pairs accepted", frs_pairs_accepted, True),
]
