"""Does the product topology identity need separated factors?

Samples factor lists without any separatedness requirement and compares the
topology of the product class with the product of the factor topologies.
"""

import argparse
from dataclasses import dataclass

from ueq import classes as C
from ueq import generators as G
from ueq import topology as T


@dataclass(frozen=True)
class Config:
    seed: int = 42
    trials: int = 2000
    max_factors: int = 3
    max_factor_size: int = 4
    max_generators: int = 4


def run(cfg: Config) -> dict:
    tally = {"trials": 0, "all_separated": 0, "some_not_separated": 0, "mismatches": 0}
    for i in range(cfg.trials):
        rng = G.trial_rng("product-sep", i, cfg.seed)
        k = rng.randint(1, cfg.max_factors)
        factors = [G.space(rng, rng.randint(1, cfg.max_factor_size), cfg.max_generators) for _ in range(k)]
        key = "all_separated" if all(C.is_separated(c) for c in factors) else "some_not_separated"
        tally[key] += 1
        tally["trials"] += 1
        lhs = T.induce_topology(C.product(factors))
        rhs = T.product_topology([T.induce_topology(c) for c in factors])
        tally["mismatches"] += not T.topologies_equal(lhs, rhs)
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--trials", type=int, default=Config.trials)
    args = ap.parse_args()
    for k, v in run(Config(seed=args.seed, trials=args.trials)).items():
        print(f"{k:20s} {v}")


if __name__ == "__main__":
    main()
