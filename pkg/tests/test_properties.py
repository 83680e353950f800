"""Property-based checks with hypothesis-driven spaces and sets."""

import random
from fractions import Fraction as Q

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fuzzyrough.algebra import Algebra, Implicator, Negator, TConorm, TNorm
from fuzzyrough.ingest import max_min_compose, transitive_closure
from fuzzyrough.lattice import enumerate_lattice, frs_of, join, meet, pair_leq
from fuzzyrough.properties import INVENTORY, NotApplicable
from fuzzyrough.space import ApproximationSpace, FuzzyRelation, FuzzySet, Universe
from fuzzyrough.verify import VerifyConfig, build_sample, random_space

degrees = st.integers(0, 12).map(lambda k: Q(k, 12))


@given(degrees, degrees, degrees)
@pytest.mark.parametrize("tnorm", list(TNorm))
def test_tnorm_laws(tnorm, x, y, z):
    assert tnorm(x, y) == tnorm(y, x)
    assert tnorm(tnorm(x, y), z) == tnorm(x, tnorm(y, z))
    if y <= z:
        assert tnorm(x, y) <= tnorm(x, z)


@given(degrees, degrees, degrees)
@pytest.mark.parametrize("tnorm", list(TNorm))
def test_residuation(tnorm, x, y, z):
    imp = Implicator.residual(tnorm)
    assert (tnorm(x, z) <= y) == (z <= imp(x, y))


@given(degrees, degrees)
def test_conorm_is_dual_under_standard_negation(x, y):
    n = Negator.standard()
    for tn, tc in ((TNorm.MIN, TConorm.MAX), (TNorm.PRODUCT, TConorm.PROBSUM), (TNorm.LUKASIEWICZ, TConorm.BOUNDED_SUM)):
        assert n(tc(x, y)) == tn(n(x), n(y))


@st.composite
def relations(draw, max_size=5):
    n = draw(st.integers(1, max_size))
    u = Universe(tuple("abcdefg"[:n]))
    m = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = m[j][i] = draw(degrees)
    return FuzzyRelation(u, tuple(map(tuple, m)))


@given(relations())
def test_closure_is_least_transitive_cover(rel):
    closed = transitive_closure(rel)
    n = len(rel.universe)
    assert closed.transitivity_witness(TNorm.MIN) is None
    assert closed.symmetry_witness() is None
    assert all(rel.matrix[i][j] <= closed.matrix[i][j] for i in range(n) for j in range(n))
    assert max_min_compose(closed, closed) == closed
    # least cover: entries equal the best bottleneck path (Floyd-Warshall over max-min)
    best = [list(row) for row in rel.matrix]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                best[i][j] = max(best[i][j], min(best[i][k], best[k][j]))
    assert [list(row) for row in closed.matrix] == best


@settings(max_examples=40, deadline=None)
@given(relations(), st.data())
def test_free_mode_approximation_laws(rel, data):
    space = ApproximationSpace(rel.universe, transitive_closure(rel), Algebra.kleene_dienes())
    n = len(rel.universe)
    f = FuzzySet(rel.universe, tuple(data.draw(st.lists(degrees, min_size=n, max_size=n))))
    g = FuzzySet(rel.universe, tuple(data.draw(st.lists(degrees, min_size=n, max_size=n))))
    low, up = space.lower(f), space.upper(f)
    assert low.leq(f) and f.leq(up)
    assert space.lower(low) == low and space.upper(up) == up
    negf = FuzzySet(f.universe, tuple(1 - v for v in f.values))
    assert space.lower(negf).values == tuple(1 - v for v in up.values)
    both = FuzzySet(f.universe, tuple(map(min, f.values, g.values)))
    assert space.lower(both).values == tuple(map(min, low.values, space.lower(g).values))


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32), st.sampled_from(["kd", "goedel"]), st.booleans())
def test_inventory_on_random_spaces(seed, algebra, symmetric):
    config = VerifyConfig(seed=seed, samples=1, max_universe=3, max_chain=4, algebra=algebra, symmetric=symmetric)
    rng = random.Random(seed)
    space = random_space(rng, config)
    sample = build_sample(rng, space, config)
    for name, check, needs_symmetry in INVENTORY:
        if needs_symmetry and not symmetric:
            continue
        try:
            witness = check(space, sample)
        except NotApplicable:
            continue
        assert witness is None, (name, witness)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**32))
def test_meet_is_greatest_lower_bound(seed):
    rng = random.Random(seed)
    space = random_space(rng, VerifyConfig(max_universe=3, max_chain=4))
    assume(space.flags.condition_C and space.is_similarity)
    d = enumerate_lattice(space)
    els = d.elements
    p, q = rng.choice(els), rng.choice(els)
    m, j = meet(space, [p, q]), join(space, [p, q])
    assert pair_leq(m, p) and pair_leq(m, q)
    assert pair_leq(p, j) and pair_leq(q, j)
    assert all(pair_leq(r, m) for r in els if pair_leq(r, p) and pair_leq(r, q))
    assert all(pair_leq(j, r) for r in els if pair_leq(p, r) and pair_leq(q, r))
    assert frs_of(space, m.witness) == m
