"""Class -> two-valued metrics -> metric class, tallied by richness.

Every class built from metric balls contains the full relation (balls of
radius above the largest distance), so the round trip can only be exact
when the starting class already contains it.
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from ueq import classes as C
from ueq import generators as G
from ueq import pseudometrics as P
from ueq import relations as R
from ueq import topology as T


@dataclass(frozen=True)
class Config:
    seed: int = 42
    trials: int = 200
    max_carrier: int = 4
    max_generators: int = 2


def run(cfg: Config) -> Counter:
    tally = Counter()
    for i in range(cfg.trials):
        rng = G.trial_rng("round-trip", i, cfg.seed)
        n = rng.randint(1, cfg.max_carrier)
        c = G.space(rng, n, cfg.max_generators)
        back = P.class_from_family(P.metrics_from_class(c))
        rich = "rich" if C.is_rich(c) else "not rich"
        tally[(rich, "exact" if back == c else "differs")] += 1
        tally[("c plus full relation", back.members == c.members | {R.full(n)})] += 1
        tally[("same topology", T.induce_topology(back) == T.induce_topology(c))] += 1
    return tally


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--trials", type=int, default=Config.trials)
    args = ap.parse_args()
    for key, count in sorted(run(Config(seed=args.seed, trials=args.trials)).items(), key=str):
        print(f"{' / '.join(map(str, key)):32s} {count}")


if __name__ == "__main__":
    main()
