from fractions import Fraction as Q
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzyrough import fixtures
from fuzzyrough.algebra import Algebra, Chain, Implicator, Negator, TConorm, TNorm
from fuzzyrough.errors import ChainNotClosed, DimensionMismatch, NotSimilarity, UniverseMismatch, ValueNotInChain
from fuzzyrough.space import (
    ApproximationSpace,
    FuzzyRelation,
    FuzzySet,
    Universe,
    negate_set,
    pointwise_join,
    pointwise_meet,
    validate_relation,
)

ABC = Universe(("a", "b", "c"))


def naive_lower(space, f):
    # written straight from the definition, no caching or rank tables
    imp = space.algebra.implicator
    return [min(imp(space.theta(x, y), f[y]) for y in range(len(f))) for x in range(len(f))]


def naive_upper(space, f):
    tn = space.algebra.tnorm
    return [max(tn(space.theta(x, y), f[y]) for y in range(len(f))) for x in range(len(f))]


SPACES = {
    "three_point": fixtures.three_point,
    "three_point_reversal": lambda: fixtures.three_point(Negator.reversal(fixtures.CHAIN6)),
    "coarse": fixtures.three_point_coarse,
    "reference_6": fixtures.reference_6,
}


@pytest.mark.parametrize("name", sorted(SPACES))
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_approximations_match_definition(name, data):
    space = SPACES[name]()
    values = data.draw(st.lists(st.sampled_from(space.chain.elements), min_size=len(space.universe), max_size=len(space.universe)))
    f = FuzzySet(space.universe, tuple(values))
    assert list(space.lower(f).values) == naive_lower(space, f)
    assert list(space.upper(f).values) == naive_upper(space, f)


def test_rank_tables_agree_everywhere():
    space = fixtures.three_point()
    chain = space.chain
    for ranks in product(range(len(chain)), repeat=3):
        f = space.from_ranks(ranks)
        low, up = space.rank_approximations(ranks)
        assert space.from_ranks(low) == space.lower(f)
        assert space.from_ranks(up) == space.upper(f)


def test_worked_examples():
    space = fixtures.three_point()
    f1, f2 = fixtures.three_point_sets(space)
    assert space.lower(f1).values == (Q(1, 4), Q(1, 10), Q(1, 2))
    assert space.upper(f2).values == (Q(3, 4), Q(1), Q(1, 2))
    zero = FuzzySet.constant(space.universe, 0)
    assert space.upper(zero) == zero
    ref = fixtures.reference_6()
    h = fixtures.reference_6_h(ref)
    assert ref.lower(h).values == (0, 0, Q(1, 4), Q(1, 2), Q(1, 2), Q(1, 2))
    quarter = fixtures.reference_6_quarter_d()
    h = fixtures.reference_6_h(quarter)
    assert quarter.lower(h) == ref.lower(h) and quarter.upper(h) == ref.upper(h)


@given(st.lists(st.sampled_from([Q(k, 4) for k in range(5)]), min_size=3, max_size=3))
def test_identity_relation_fixes_everything(values):
    space = ApproximationSpace(ABC, FuzzyRelation.identity(ABC), Algebra.kleene_dienes())
    f = FuzzySet(ABC, tuple(values))
    assert space.lower(f) == f == space.upper(f)


def test_relation_validation():
    rel = FuzzyRelation.of(ABC, [["1", "3/4", "1/4"], ["3/4", "1", "1/4"], ["1/4", "1/4", "1"]])
    assert validate_relation(rel, TNorm.MIN).ok
    assert validate_relation(FuzzyRelation.identity(ABC), TNorm.PRODUCT).ok
    bad = FuzzyRelation.of(ABC, [["1", "1", "1/2"], ["1", "1", "1"], ["1/2", "1", "1"]])
    report = validate_relation(bad, TNorm.MIN)
    assert report["min-transitive"].witness == ("a", "b", "c")
    skew = FuzzyRelation.of(ABC, [["1", "1/2", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    assert validate_relation(skew, TNorm.MIN)["symmetric"].witness == ("a", "b")


def test_space_construction_errors():
    with pytest.raises(NotSimilarity):
        ApproximationSpace.build("abc", [["1/2", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]])
    with pytest.raises(DimensionMismatch):
        ApproximationSpace.build("abc", [["1", "0"], ["0", "1"]])
    with pytest.raises(ValueNotInChain):
        ApproximationSpace.build("ab", [["1", "1/3"], ["1/3", "1"]], chain=fixtures.CHAIN3)
    # product leaves {0, 1/2, 1} at (1/2, 1/2)
    prod = Algebra(TNorm.PRODUCT, TConorm.MAX, Negator.standard(), Implicator.s_implicator(TConorm.MAX, Negator.standard()))
    with pytest.raises(ChainNotClosed):
        ApproximationSpace.build("ab", [["1", "1/2"], ["1/2", "1"]], prod, fixtures.CHAIN3)


def test_closure_only_needed_on_relation_range():
    # 1 - x does not preserve the six-value chain, but only values of theta meet the operators
    space = fixtures.three_point()
    assert space.chain == fixtures.CHAIN6
    with pytest.raises(ChainNotClosed):
        ApproximationSpace.build("ab", [["1", "1/10"], ["1/10", "1"]], Algebra.kleene_dienes(), fixtures.CHAIN6)


def test_fuzzy_set_basics():
    f = FuzzySet.from_mapping(ABC, {"a": "1", "b": "1/10", "c": "0.5"})
    g = FuzzySet.of(ABC, ["1/10", "1", "1/2"])
    assert f["c"] == Q(1, 2) and f[1] == Q(1, 10)
    assert pointwise_meet([f, g]).values == (Q(1, 10), Q(1, 10), Q(1, 2))
    assert pointwise_join([f, g]).values == (1, 1, Q(1, 2))
    assert pointwise_join([f, f]) == f
    assert f.as_dict() == {"a": "1", "b": "1/10", "c": "1/2"}
    with pytest.raises(UniverseMismatch):
        FuzzySet.from_mapping(ABC, {"a": 1, "b": 0})
    with pytest.raises(DimensionMismatch):
        FuzzySet(ABC, (Q(1),))
    with pytest.raises(ValueError):
        pointwise_meet([])


def test_negate_set():
    std = Algebra.kleene_dienes()
    f = FuzzySet.of(ABC, ["0", "1", "1/4"])
    assert negate_set(std, f).values == (1, 0, Q(3, 4))
    rev = Algebra.kleene_dienes(Negator.reversal(fixtures.CHAIN3))
    assert negate_set(rev, FuzzySet.of(Universe(("a",)), ["1/2"])).values == (Q(1, 2),)


def test_chain_check_on_sets():
    space = fixtures.three_point_coarse()
    with pytest.raises(ValueNotInChain):
        space.check_in_chain(space.fuzzy_set(["1/4", "0", "0"]))
    space.check_in_chain(space.fuzzy_set(["1/2", "0", "1"]))


def test_similarity_flags():
    assert fixtures.three_point().is_similarity
    space = ApproximationSpace.build("abc", [["1", "1", "1/2"], ["1", "1", "1"], ["1/2", "1", "1"]], chain=Chain.of("0", "1/2", "1"))
    assert space.is_symmetric and not space.is_transitive
