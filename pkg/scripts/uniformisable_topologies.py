"""Count the finite topologies that some class induces.

Enumerates every topology on n points through its minimal neighbourhoods
and searches for a uniformising class.  Induced topologies have clopen
minimal neighbourhoods, so the uniformisable ones are exactly the
partition topologies and their count is the Bell number.
"""

import argparse
import itertools

from ueq import pseudometrics as P
from ueq import relations as R
from ueq import topology as T


def topologies(n: int):
    for nb in itertools.product(range(1, 1 << n), repeat=n):
        try:
            yield T.FiniteTopology(n, nb)
        except ValueError:
            continue


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=4)
    args = ap.parse_args()
    print(f"{'n':>2s} {'topologies':>10s} {'uniformisable':>13s} {'partitions':>10s}")
    for n in range(1, args.max_n + 1):
        total = uniform = 0
        for t in topologies(n):
            total += 1
            uniform += P.search_uniformising_class(t, max_generators=1) is not None
        print(f"{n:2d} {total:10d} {uniform:13d} {len(R.all_relations(n)):10d}")


if __name__ == "__main__":
    main()
