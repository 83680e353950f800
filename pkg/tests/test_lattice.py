import random
from fractions import Fraction as Q

import pytest

from fuzzyrough import fixtures
from fuzzyrough.algebra import Algebra, Chain, Implicator, Negator, TConorm, TNorm
from fuzzyrough.characterize import RoughPair
from fuzzyrough.errors import BudgetExceeded, ConditionCRequired, ConditionDRequired, UncertifiedPair, ValidationError
from fuzzyrough.lattice import (
    check_properties,
    diagram_document,
    diagram_dot,
    dual_pair,
    enumerate_lattice,
    frs_of,
    join,
    meet,
    pair_leq,
)
from fuzzyrough.space import ApproximationSpace, FuzzySet, negate_set


def fs(space, *xs):
    return FuzzySet(space.universe, tuple(Q(x) for x in xs))


def test_frs_of_examples(three_point):
    top = frs_of(three_point, FuzzySet.constant(three_point.universe, 1))
    assert top.matrix() == "1 1 1 | 1 1 1"
    m = frs_of(three_point, fs(three_point, "3/4", "1/2", "1/2"))
    assert m.lower.values == (Q(1, 2),) * 3
    assert m.upper.values == (Q(3, 4), Q(3, 4), Q(1, 2))


def test_pair_order(three_point):
    f1, f2 = fixtures.three_point_sets(three_point)
    a1, a2 = frs_of(three_point, f1), frs_of(three_point, f2)
    assert not pair_leq(a1, a2) and not pair_leq(a2, a1)
    assert pair_leq(a1, a1)
    bottom = frs_of(three_point, FuzzySet.constant(three_point.universe, 0))
    assert pair_leq(bottom, a1) and pair_leq(bottom, a2)


def test_dual_pair_in_reversal_space():
    space = fixtures.three_point(Negator.reversal(fixtures.CHAIN6))
    f1, f2 = fixtures.three_point_sets(space)
    for f in (f1, f2):
        p = frs_of(space, f)
        assert dual_pair(space, p) == frs_of(space, negate_set(space, f))
        assert dual_pair(space, dual_pair(space, p)) == p
    bottom = frs_of(space, FuzzySet.constant(space.universe, 0))
    assert dual_pair(space, bottom).matrix() == "1 1 1 | 1 1 1"


def test_dual_pair_needs_condition_d():
    goedel = Algebra(TNorm.MIN, TConorm.MAX, Negator.standard(), Implicator.residual(TNorm.MIN))
    space = ApproximationSpace.build("ab", [["1", "1/2"], ["1/2", "1"]], goedel, fixtures.CHAIN3)
    p = frs_of(space, FuzzySet.constant(space.universe, 0))
    with pytest.raises(ConditionDRequired):
        dual_pair(space, p)
    with pytest.raises(ConditionCRequired):
        meet(space, [p])


def test_meet_and_join_examples(three_point):
    f1, f2 = fixtures.three_point_sets(three_point)
    a1, a2 = frs_of(three_point, f1), frs_of(three_point, f2)
    c = frs_of(three_point, FuzzySet.constant(three_point.universe, "1/2"))
    j = join(three_point, [a1, c])
    assert j.matrix() == "1 3/4 1/2 | 1/2 1/2 1/2"
    assert three_point.lower(j.witness) == j.lower and three_point.upper(j.witness) == j.upper
    assert meet(three_point, [a1]) == a1
    assert join(three_point, [a1, a1]) == a1
    assert meet(three_point, [a1, a2, c]) == meet(three_point, [meet(three_point, [a1, a2]), c])


def test_family_errors(three_point):
    f1, _ = fixtures.three_point_sets(three_point)
    p = frs_of(three_point, f1)
    with pytest.raises(ValueError):
        meet(three_point, [])
    with pytest.raises(ValueError):
        join(three_point, [])
    with pytest.raises(UncertifiedPair):
        meet(three_point, [RoughPair(p.lower, p.upper)])
    with pytest.raises(UncertifiedPair):
        join(three_point, [RoughPair(p.lower, p.upper, FuzzySet.constant(three_point.universe, 0))])


def _agree_with_diagram(space, diagram, pairs):
    for i, j in pairs:
        p, q = diagram.elements[i], diagram.elements[j]
        assert diagram.find(meet(space, [p, q])) == diagram.glb(i, j), (p.matrix(), q.matrix())
        assert diagram.find(join(space, [p, q])) == diagram.lub(i, j), (p.matrix(), q.matrix())


def test_meet_join_against_diagram_coarse(coarse):
    d = enumerate_lattice(coarse)
    _agree_with_diagram(coarse, d, [(i, j) for i in range(len(d)) for j in range(len(d))])


@pytest.mark.parametrize("negator", [None, Negator.reversal(fixtures.CHAIN6)])
def test_meet_join_against_diagram_six_chain(negator):
    space = fixtures.three_point(negator)
    d = enumerate_lattice(space)
    rng = random.Random(7)
    m = len(d)
    _agree_with_diagram(space, d, [(rng.randrange(m), rng.randrange(m)) for _ in range(150)])


@pytest.mark.parametrize("chain,size", [(Chain.of("0", "1"), 2), (fixtures.CHAIN3, 3)])
def test_single_point_lattices_are_chains(chain, size):
    space = ApproximationSpace.build("a", [["1"]], chain=chain)
    d = enumerate_lattice(space)
    assert len(d) == size
    assert len(d.covers) == size - 1
    report = check_properties(space, d)
    assert report.is_lattice and report.is_distributive and report.is_modular


def test_enumeration_guards(three_point):
    with pytest.raises(BudgetExceeded):
        enumerate_lattice(three_point, budget=100)
    free = ApproximationSpace.build("ab", [["1", "1/2"], ["1/2", "1"]])
    with pytest.raises(ValidationError):
        enumerate_lattice(free)


def test_properties_of_six_chain_spaces():
    # with 1 - x the duality map leaves the chain, so self-duality is undecided
    space = fixtures.three_point()
    report = check_properties(space, enumerate_lattice(space))
    assert report.is_lattice and report.is_distributive is False and report.is_modular is False
    assert report.is_self_dual is None and report.notes
    space = fixtures.three_point(Negator.reversal(fixtures.CHAIN6))
    report = check_properties(space, enumerate_lattice(space))
    assert report.is_self_dual is True
    assert report.is_distributive is False


def test_coarse_lattice_is_distributive(coarse):
    report = check_properties(coarse, enumerate_lattice(coarse))
    assert report.is_distributive and report.is_modular and report.is_self_dual


def test_diagram_document_and_dot(coarse):
    d = enumerate_lattice(coarse)
    doc = diagram_document(d)
    assert doc["universe"] == ["a", "b", "c"]
    assert doc["chain"] == ["0", "1/2", "1"]
    keys = [(el["lower"], el["upper"]) for el in doc["elements"]]
    ranks = [tuple(tuple(coarse.chain.rank(Q(v)) for v in vec) for vec in key) for key in keys]
    assert ranks == sorted(ranks)
    assert doc["elements"][doc["bottom"]]["upper"] == ["0", "0", "0"]
    dot = diagram_dot(doc)
    assert dot.startswith('digraph "fuzzy_rough_sets" {\n  rankdir=BT;')
    assert dot.count(" -> ") == len(doc["covers"]) == 22
    assert 'n13 [label="1 1 1\\n1 1 1"];' in dot
