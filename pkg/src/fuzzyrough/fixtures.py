"""Small worked spaces used by the tests, scripts and CLI examples.

``reference_6`` is the six-element space with two classes of close elements;
``reference_6_quarter_d`` keeps a 1/4 similarity to ``d``, while the
default variant uses 1/2, the value forced by the induced quasiorders.
``three_point`` is the three-element space on the chain
{0, 1/10, 1/4, 1/2, 3/4, 1}; ``three_point_coarse`` glues a and b together
on the chain {0, 1/2, 1}.
"""

from __future__ import annotations

from .algebra import Algebra, Chain, Negator
from .space import ApproximationSpace, FuzzySet

NAMES6 = ("a", "b", "c", "d", "e", "f")
NAMES3 = ("a", "b", "c")

CHAIN6 = Chain.of("0", "1/10", "1/4", "1/2", "3/4", "1")
CHAIN3 = Chain.of("0", "1/2", "1")
CHAIN_QUARTERS = Chain.of("0", "1/4", "1/2", "3/4", "1")


def _rows6(to_d: str):
    t = to_d
    return [
        ["1", "1", "3/4", t, "0", "0"],
        ["1", "1", "3/4", t, "0", "0"],
        ["3/4", "3/4", "1", t, "0", "0"],
        [t, t, t, "1", "0", "0"],
        ["0", "0", "0", "0", "1", "1/2"],
        ["0", "0", "0", "0", "1/2", "1"],
    ]


def reference_6() -> ApproximationSpace:
    return ApproximationSpace.build(NAMES6, _rows6("1/2"), Algebra.kleene_dienes(), CHAIN_QUARTERS)


def reference_6_quarter_d() -> ApproximationSpace:
    return ApproximationSpace.build(NAMES6, _rows6("1/4"), Algebra.kleene_dienes(), CHAIN_QUARTERS)


def reference_6_h(space: ApproximationSpace) -> FuzzySet:
    return space.fuzzy_set(["0", "1", "1/4", "1/2", "1/2", "3/4"])


def three_point(negator: Negator | None = None) -> ApproximationSpace:
    # The standard negator is used even though the chain is not closed under 1 - x.
    rows = [["1", "3/4", "1/4"], ["3/4", "1", "1/4"], ["1/4", "1/4", "1"]]
    alg = Algebra.kleene_dienes(negator or Negator.standard())
    return ApproximationSpace.build(NAMES3, rows, alg, CHAIN6)


def three_point_sets(space: ApproximationSpace) -> tuple[FuzzySet, FuzzySet]:
    return space.fuzzy_set(["1", "1/10", "1/2"]), space.fuzzy_set(["1/10", "1", "1/2"])


def three_point_coarse() -> ApproximationSpace:
    rows = [["1", "1", "1/2"], ["1", "1", "1/2"], ["1/2", "1/2", "1"]]
    return ApproximationSpace.build(NAMES3, rows, Algebra.kleene_dienes(), CHAIN3)
