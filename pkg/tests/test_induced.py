from fractions import Fraction as Q
from itertools import product

import pytest

from fuzzyrough import fixtures
from fuzzyrough.algebra import Algebra, Implicator, Negator, TConorm, TNorm
from fuzzyrough.errors import (
    ConditionCRequired,
    NegatorNotInvolutive,
    NotAQuasiorder,
    NotLowerFixed,
    NotUpperFixed,
)
from fuzzyrough.induced import (
    CrispQuasiorder,
    check_inequality_characterization,
    class_partition,
    duality_swap,
    factor_poset,
    factor_poset_to_dot,
    quasiorder_R,
    quasiorder_rho,
    quasiorder_to_dot,
)
from fuzzyrough.space import ApproximationSpace, FuzzyRelation, FuzzySet, Universe, negate_set


def fs(space, *xs):
    return FuzzySet(space.universe, tuple(Q(x) for x in xs))


def test_three_point_quasiorders():
    space = fixtures.three_point()
    F = fs(space, "3/4", "3/4", "1/2")
    G = fs(space, "1/10", "1/10", "1/2")
    assert quasiorder_R(space, F).pairs() == [("a", "b"), ("b", "a")]
    assert quasiorder_rho(space, G).pairs() == []
    assert ("a", "b") in quasiorder_R(space, F)
    assert ("a", "c") not in quasiorder_R(space, F)


def test_constant_sets():
    u = Universe(("a", "b", "c"))
    space = ApproximationSpace(u, FuzzyRelation.identity(u), Algebra.kleene_dienes())
    assert quasiorder_R(space, FuzzySet.constant(u, 1)).pairs() == []
    three = fixtures.three_point()
    full = quasiorder_rho(three, FuzzySet.constant(three.universe, 1))
    assert len(full.pairs(loops=True)) == 9


def test_fixpoint_checks():
    space = fixtures.three_point()
    f1, _ = fixtures.three_point_sets(space)
    with pytest.raises(NotUpperFixed):
        quasiorder_R(space, f1)
    with pytest.raises(NotLowerFixed):
        quasiorder_rho(space, f1)
    # unchecked mode still builds the relation
    assert quasiorder_R(space, f1, check_fixed=False) is not None


def test_quasiorder_validation():
    u = Universe(("a", "b", "c"))
    with pytest.raises(NotAQuasiorder):
        CrispQuasiorder.from_pairs(u, [("a", "b"), ("b", "c")])
    with pytest.raises(NotAQuasiorder):
        CrispQuasiorder(u, ((False, False, False), (False, True, False), (False, False, True)))
    q = CrispQuasiorder.from_pairs(u, [("a", "b"), ("b", "c"), ("a", "c")])
    assert q.pairs() == [("a", "b"), ("a", "c"), ("b", "c")]


def test_discrete_quasiorder():
    u = Universe(("a", "b", "c"))
    poset = factor_poset(CrispQuasiorder.from_pairs(u, []))
    assert [len(c) for c in poset.partition.classes] == [1, 1, 1]
    assert poset.covers == ()
    assert poset.maximal == (0, 1, 2)


def test_classes_order_by_smallest_member():
    u = Universe(("a", "b", "c", "d"))
    q = CrispQuasiorder.from_pairs(u, [("b", "d"), ("d", "b"), ("a", "c"), ("c", "a"), ("b", "a"), ("d", "a"), ("b", "c"), ("d", "c")])
    part = class_partition(q)
    assert part.classes == ((0, 2), (1, 3))
    assert part.label(1) == "{b,d}"
    poset = factor_poset(q)
    assert poset.covers == ((1, 0),)
    assert poset.maximal_classes() == [("a", "c")]
    assert poset.in_maximal_class(2) and not poset.is_maximal_singleton(0)


def _reference_images():
    space = fixtures.reference_6()
    h = fixtures.reference_6_h(space)
    return space, space.upper(h), space.lower(h)


def test_reference_maximal_singletons():
    space, F, G = _reference_images()
    pF = factor_poset(quasiorder_R(space, F))
    pG = factor_poset(quasiorder_rho(space, G))
    assert [pF.is_maximal_singleton(i) for i in range(6)] == [False] * 5 + [True]
    assert [pG.in_maximal_class(i) for i in range(6)] == [True, True, False, False, True, True]


@pytest.mark.parametrize("kind", ["R", "rho"])
def test_inequality_characterization(kind):
    space, F, G = _reference_images()
    report = check_inequality_characterization(space, F if kind == "R" else G, kind)
    assert report.ok
    three = fixtures.three_point()
    H = fs(three, "3/4", "3/4", "1/2") if kind == "R" else fs(three, "1/10", "1/10", "1/2")
    assert check_inequality_characterization(three, H, kind).ok


def test_inequality_characterization_needs_condition_c():
    goedel = Algebra(TNorm.MIN, TConorm.MAX, Negator.standard(), Implicator.residual(TNorm.MIN))
    space = ApproximationSpace.build("ab", [["1", "1/2"], ["1/2", "1"]], goedel)
    with pytest.raises(ConditionCRequired):
        check_inequality_characterization(space, FuzzySet.constant(space.universe, 1), "R")


def _matrix(q):
    n = len(q.universe)
    return [[(i, j) in q for j in range(n)] for i in range(n)]


def test_duality_swap_three_point():
    space = fixtures.three_point()
    F = fs(space, "3/4", "3/4", "1/2")
    assert _matrix(quasiorder_rho(space, negate_set(space, F))) == _matrix(quasiorder_R(space, F))
    assert duality_swap(space, "R", F) == quasiorder_R(space, F)
    G = fs(space, "1/10", "1/10", "1/2")
    assert duality_swap(space, "rho", G) == quasiorder_rho(space, G)


def test_duality_swap_reference_all_pairs():
    space, F, G = _reference_images()
    swapped = duality_swap(space, "R", F)
    direct = quasiorder_R(space, F)
    assert all(((a, b) in swapped) == ((a, b) in direct) for a, b in product(range(6), repeat=2))
    assert duality_swap(space, "rho", G) == quasiorder_rho(space, G)


def test_duality_swap_needs_involution():
    goedel = Algebra(TNorm.MIN, TConorm.MAX, Negator.standard(), Implicator.residual(TNorm.MIN))
    space = ApproximationSpace.build("ab", [["1", "1/2"], ["1/2", "1"]], goedel, fixtures.CHAIN3)
    with pytest.raises(NegatorNotInvolutive):
        duality_swap(space, "R", FuzzySet.constant(space.universe, 1))


def test_dot_output():
    space, F, G = _reference_images()
    q = quasiorder_R(space, F)
    dot = quasiorder_to_dot(q, "R")
    assert dot.startswith('digraph "R" {')
    assert '"a" -> "b" [dir=both];' in dot
    assert '"e" -> "f";' in dot
    assert '"a" -> "a"' not in dot
    pdot = factor_poset_to_dot(factor_poset(q), "classes")
    assert "rankdir=BT;" in pdot
    assert 'c0 [label="{a,b}", peripheries=2];' in pdot
    assert 'c4 [label="{f}", peripheries=2];' in pdot
    assert "c3 -> c4;" in pdot
    assert dot == quasiorder_to_dot(quasiorder_R(space, F), "R")
