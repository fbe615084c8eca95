"""Seeded random instances for the verification harness.

All randomness flows through an explicit :class:`random.Random`, whose
Mersenne Twister stream is identical on every platform for a given integer
seed.
"""

from __future__ import annotations

import hashlib
import random
from fractions import Fraction

from . import classes as C
from . import relations as R
from .classes import UeqClass
from .pseudometrics import TransitivePseudoMetric, as_matrix


def sub_seed(check_id: str, trial: int, seed: int) -> int:
    """Per-trial seed, independent of execution order."""
    digest = hashlib.sha256(f"{check_id}|{trial}|{seed}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def trial_rng(check_id: str, trial: int, seed: int) -> random.Random:
    return random.Random(sub_seed(check_id, trial, seed))


def relation(rng: random.Random, n: int) -> R.EquivRel:
    k = rng.randint(1, n)
    return R.canonical([rng.randrange(k) for _ in range(n)])


def refinement(rng: random.Random, u: R.EquivRel) -> R.EquivRel:
    """A random relation finer than ``u``."""
    return R.meet(u, relation(rng, u.n))


def space(rng: random.Random, n: int, max_generators: int = 4, *, rich=False, discrete=False) -> UeqClass:
    gens = [relation(rng, n) for _ in range(rng.randint(1, max_generators))]
    if rich:
        gens.append(R.full(n))
    if discrete:
        gens.append(R.delta(n))
    return C.generate(n, gens)


def separated_space(rng: random.Random, n: int, max_generators: int = 4) -> UeqClass:
    gens = [relation(rng, n) for _ in range(rng.randint(1, max_generators))]
    for _ in range(8):
        if R.meet_all(gens) == R.delta(n):
            break
        gens.append(relation(rng, n))
    else:
        gens.append(R.delta(n))
    return C.generate(n, gens)


def connected_space(rng: random.Random, n: int, max_generators: int = 4) -> UeqClass:
    return C.generate(n, [R.full(n)] * rng.randint(1, max_generators))


def values(rng: random.Random, n: int, m: int) -> tuple[int, ...]:
    return tuple(rng.randrange(m) for _ in range(n))


def surjection(rng: random.Random, n: int, m: int) -> tuple[int, ...]:
    """Uniform-ish surjection; requires ``n >= m``."""
    vals = list(range(m)) + [rng.randrange(m) for _ in range(n - m)]
    rng.shuffle(vals)
    return tuple(vals)


def injection(rng: random.Random, n: int, m: int) -> tuple[int, ...]:
    """Requires ``n <= m``."""
    return tuple(rng.sample(range(m), n))


def subset(rng: random.Random, n: int, nonempty=True) -> frozenset[int]:
    while True:
        s = frozenset(x for x in range(n) if rng.random() < 0.5)
        if s or not nonempty:
            return s


def _radius(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(1, 4), rng.choice((1, 2, 4)))


def ultrametric(rng: random.Random, n: int) -> TransitivePseudoMetric:
    """Random transitive pseudo-metric from an agglomerative merge history."""
    clusters = [[x] for x in range(n)]
    dist = [[Fraction(0)] * n for _ in range(n)]
    height = Fraction(0)
    while len(clusters) > 1:
        i, j = sorted(rng.sample(range(len(clusters)), 2))
        # height 0 merges make points indistinguishable (pseudo-metric)
        if rng.random() < 0.8:
            height += _radius(rng)
        for x in clusters[i]:
            for y in clusters[j]:
                dist[x][y] = dist[y][x] = height
        clusters[i].extend(clusters.pop(j))
    return TransitivePseudoMetric(tuple(map(tuple, dist)))


def line_metric(rng: random.Random, n: int):
    """Distances between random points on a line: a pseudo-metric, rarely transitive."""
    pts = [Fraction(rng.randint(0, 8), rng.choice((1, 2))) for _ in range(n)]
    return as_matrix([[abs(p - q) for q in pts] for p in pts])


def pseudometric(rng: random.Random, n: int):
    if rng.random() < 0.5:
        return ultrametric(rng, n).dist
    return line_metric(rng, n)
