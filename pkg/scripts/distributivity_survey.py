"""How often is the lattice of rough pairs distributive, modular or self-dual?

Draws seeded random similarity spaces (same generator as ``verify``),
enumerates each lattice and tallies the property checks by universe size and
negator. Prints a JSON summary.

    python scripts/distributivity_survey.py --samples 300 --max-universe 3 --max-chain 5
"""

import argparse
import random
from collections import defaultdict
from dataclasses import dataclass

from fuzzyrough import io
from fuzzyrough.errors import BudgetExceeded
from fuzzyrough.lattice import check_properties, enumerate_lattice
from fuzzyrough.verify import VerifyConfig, random_space


@dataclass(frozen=True)
class SurveyConfig:
    seed: int = 7
    samples: int = 300
    max_universe: int = 3
    max_chain: int = 5
    budget: int = 5000


def survey(config: SurveyConfig) -> dict:
    rng = random.Random(config.seed)
    gen = VerifyConfig(max_universe=config.max_universe, max_chain=config.max_chain, algebra="kd")
    table = defaultdict(lambda: {"spaces": 0, "distributive": 0, "modular": 0, "self_dual": 0, "self_dual_undecided": 0})
    skipped = 0
    for _ in range(config.samples):
        space = random_space(rng, gen)
        try:
            d = enumerate_lattice(space, budget=config.budget)
        except BudgetExceeded:
            skipped += 1
            continue
        r = check_properties(space, d)
        key = f"|U|={len(space.universe)} negator={space.algebra.negator.kind.value}"
        row = table[key]
        row["spaces"] += 1
        row["distributive"] += bool(r.is_distributive)
        row["modular"] += bool(r.is_modular)
        row["self_dual"] += r.is_self_dual is True
        row["self_dual_undecided"] += r.is_self_dual is None
    return {"config": vars(config), "skipped": skipped, "by_shape": dict(sorted(table.items()))}


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in vars(SurveyConfig()).items():
        p.add_argument("--" + name.replace("_", "-"), type=int, default=default)
    args = p.parse_args()
    print(io.dumps(survey(SurveyConfig(**vars(args)))), end="")


if __name__ == "__main__":
    main()
