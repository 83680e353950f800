"""Randomized checking of the invariant inventory on small chain-valued spaces.

A run is a pure function of its :class:`VerifyConfig`; the transcript is a
JSON document with per-property tallies and the first counterexample of each
failing property.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass
from fractions import Fraction

from .algebra import Algebra, Chain, Implicator, Negator, TConorm, TNorm
from .errors import BudgetExceeded
from .ingest import transitive_closure
from .io import emit_space
from .lattice import enumerate_lattice
from .properties import INVENTORY, NotApplicable, Sample
from .space import ApproximationSpace, FuzzyRelation, FuzzySet, Universe

ALGEBRAS = ("kd", "goedel", "mixed")


@dataclass(frozen=True)
class VerifyConfig:
    seed: int = 42
    samples: int = 200
    max_universe: int = 5
    max_chain: int = 5
    symmetric: bool = True
    algebra: str = "kd"  # kd: condition (C); goedel: min with its residuum; mixed: either
    refs: int = 3  # random reference sets per space
    probes: int = 3  # extra random sets for operator laws
    pair_candidates: int = 3  # (F, G) pairs per space for the oracle comparison
    element_pairs: int = 3  # diagram element pairs per space for meet/join
    budget: int = 10**5  # largest |L|^|U| enumerated per space

    def __post_init__(self):
        if self.algebra not in ALGEBRAS:
            raise ValueError(f"algebra must be one of {ALGEBRAS}")
        if self.max_universe < 1 or self.max_chain < 2:
            raise ValueError("need max_universe >= 1 and max_chain >= 2")


_GRID = tuple(Fraction(k, 12) for k in range(1, 12))


def random_chain(rng: random.Random, size: int, symmetric: bool) -> Chain:
    inner = size - 2
    if symmetric:
        halves = [x for x in _GRID if x < Fraction(1, 2)]
        picks = set(rng.sample(halves, inner // 2))
        values = picks | {1 - x for x in picks}
        if inner % 2:
            values.add(Fraction(1, 2))
    else:
        values = set(rng.sample(_GRID, inner))
    return Chain(tuple(sorted(values | {Fraction(0), Fraction(1)})))


def random_space(rng: random.Random, config: VerifyConfig) -> ApproximationSpace:
    n = rng.randint(1, config.max_universe)
    size = rng.randint(2, config.max_chain)
    kind = config.algebra if config.algebra != "mixed" else rng.choice(("kd", "goedel"))
    standard = kind == "kd" and rng.random() < 1 / 3
    chain = random_chain(rng, size, symmetric=standard)
    els = tuple(chain)
    m = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m[i][j] = Fraction(0) if rng.random() < 0.4 else rng.choice(els)
            m[j][i] = m[i][j] if config.symmetric else (Fraction(0) if rng.random() < 0.4 else rng.choice(els))
    universe = Universe(tuple(chr(ord("a") + i) for i in range(n)))
    theta = transitive_closure(FuzzyRelation(universe, tuple(map(tuple, m))))
    negator = Negator.standard() if standard else Negator.reversal(chain)
    if kind == "kd":
        alg = Algebra.kleene_dienes(negator)
    else:
        alg = Algebra(TNorm.MIN, TConorm.MAX, negator, Implicator.residual(TNorm.MIN))
    return ApproximationSpace(universe, theta, alg, chain)


def random_set(rng: random.Random, space: ApproximationSpace) -> FuzzySet:
    els = tuple(space.chain)
    return FuzzySet(space.universe, tuple(rng.choice(els) for _ in space.universe))


def _pair_candidates(rng: random.Random, space: ApproximationSpace, count: int):
    out = []
    for k in range(count):
        f, g = random_set(rng, space), random_set(rng, space)
        mode = k % 3
        if mode == 0:
            out.append((space.upper(f), space.lower(f)))
        elif mode == 1:
            out.append((space.upper(g), space.lower(f)))
        else:
            # componentwise meet of two pairs: the typical non-pair
            out.append(
                (
                    FuzzySet(space.universe, tuple(map(min, space.upper(f).values, space.upper(g).values))),
                    FuzzySet(space.universe, tuple(map(min, space.lower(f).values, space.lower(g).values))),
                )
            )
    return out


def build_sample(rng: random.Random, space: ApproximationSpace, config: VerifyConfig) -> Sample:
    sample = Sample(
        refs=[random_set(rng, space) for _ in range(config.refs)],
        probes=[random_set(rng, space) for _ in range(config.probes)],
    )
    sample.pair_candidates = _pair_candidates(rng, space, config.pair_candidates)
    try:
        sample.diagram = enumerate_lattice(space, budget=config.budget)
    except BudgetExceeded:
        sample.diagram = None
    if sample.diagram is not None:
        m = len(sample.diagram)
        leq = sample.diagram.leq
        crossing = [(i, j) for i in range(m) for j in range(i + 1, m) if not leq[i][j] and not leq[j][i]]
        for k in range(config.element_pairs):
            # alternate uniform pairs with incomparable ones, where meet and join do real work
            if k % 2 and crossing:
                sample.element_pairs.append(rng.choice(crossing))
            else:
                sample.element_pairs.append((rng.randrange(m), rng.randrange(m)))
    return sample


def _sample_doc(space: ApproximationSpace, sample: Sample) -> dict:
    return {
        "space": emit_space(space),
        "refs": [[str(v) for v in f.values] for f in sample.refs],
        "probes": [[str(v) for v in f.values] for f in sample.probes],
    }


def run(config: VerifyConfig = VerifyConfig()) -> dict:
    rng = random.Random(config.seed)
    tallies = {name: {"pass": 0, "fail": 0, "n/a": 0} for name, _, _ in INVENTORY}
    counterexamples: dict[str, dict] = {}
    counts: dict[str, int] = {}
    for index in range(config.samples):
        space = random_space(rng, config)
        sample = build_sample(rng, space, config)
        for name, check, needs_symmetry in INVENTORY:
            if needs_symmetry and not config.symmetric:
                tallies[name]["n/a"] += 1
                continue
            try:
                witness = check(space, sample)
            except NotApplicable:
                tallies[name]["n/a"] += 1
                continue
            except Exception as exc:  # a crash is a failure with a reproducer
                witness = {"error": f"{type(exc).__name__}: {exc}"}
            if witness is None:
                tallies[name]["pass"] += 1
            else:
                tallies[name]["fail"] += 1
                if name not in counterexamples:
                    counterexamples[name] = {"sample": index, "witness": witness, **_sample_doc(space, sample)}
        for key, value in sample.counts.items():
            counts[key] = counts.get(key, 0) + value
    return {
        "config": asdict(config),
        "tallies": tallies,
        "comparisons": dict(sorted(counts.items())),
        "failures": sum(t["fail"] for t in tallies.values()),
        "counterexamples": counterexamples,
    }
