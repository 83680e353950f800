"""Exact fuzzy rough set computations on finite approximation spaces."""

from .algebra import Algebra, Chain, Implicator, Negator, TConorm, TNorm, unit
from .characterize import (
    CharacterizationVerdict,
    RoughPair,
    brute_force_pair_oracle,
    construct_witness,
    is_fuzzy_rough_pair,
)
from .induced import factor_poset, quasiorder_R, quasiorder_rho
from .lattice import check_properties, dual_pair, enumerate_lattice, frs_of, join, meet, pair_leq
from .space import ApproximationSpace, FuzzyRelation, FuzzySet, Universe

__all__ = [
    "Algebra",
    "ApproximationSpace",
    "Chain",
    "CharacterizationVerdict",
    "FuzzyRelation",
    "FuzzySet",
    "Implicator",
    "Negator",
    "RoughPair",
    "TConorm",
    "TNorm",
    "Universe",
    "brute_force_pair_oracle",
    "check_properties",
    "construct_witness",
    "dual_pair",
    "enumerate_lattice",
    "factor_poset",
    "frs_of",
    "is_fuzzy_rough_pair",
    "join",
    "meet",
    "pair_leq",
    "quasiorder_R",
    "quasiorder_rho",
    "unit",
]
