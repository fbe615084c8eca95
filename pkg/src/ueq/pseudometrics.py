"""Transitive pseudo-metrics and the classes and topologies they generate.

Distances are exact :class:`fractions.Fraction` values; strict ball
membership ``d < r`` is threshold sensitive and must not be rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _triples
from typing import Sequence, Union

from . import classes as C
from . import relations as R
from . import topology as T
from .classes import UeqClass
from .errors import (
    CarrierMismatch,
    CharacterizationMismatch,
    EmptyFamily,
    NonPositiveAlpha,
    NotAPseudoMetric,
    NotTransitive,
)
from .maps import SpaceMap

Matrix = tuple[tuple[Fraction, ...], ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    """Coerce to a square matrix of Fractions and check the pseudo-metric axioms."""
    try:
        m = tuple(tuple(Fraction(v) for v in row) for row in rows)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise NotAPseudoMetric(f"distances must be rationals: {e}") from None
    n = len(m)
    if n < 1 or any(len(row) != n for row in m):
        raise NotAPseudoMetric("distance matrix must be square and nonempty")
    for x in range(n):
        if m[x][x] != 0:
            raise NotAPseudoMetric(f"d({x},{x}) = {m[x][x]} is not zero")
        for y in range(n):
            if m[x][y] < 0:
                raise NotAPseudoMetric(f"d({x},{y}) is negative")
            if m[x][y] != m[y][x]:
                raise NotAPseudoMetric(f"d({x},{y}) != d({y},{x})")
    for x, y, z in _triples(range(n), repeat=3):
        if m[x][z] > m[x][y] + m[y][z]:
            raise NotAPseudoMetric(f"triangle inequality fails on ({x},{y},{z})")
    return m


@dataclass(frozen=True)
class TransitivePseudoMetric:
    dist: Matrix

    def __post_init__(self):
        object.__setattr__(self, "dist", as_matrix(self.dist))
        if not is_transitive(self.dist):
            raise NotTransitive("pseudo-metric is not transitive")

    @property
    def n(self) -> int:
        return len(self.dist)

    def __call__(self, x: int, y: int) -> Fraction:
        return self.dist[x][y]


@dataclass(frozen=True)
class MetricFamily:
    n: int
    metrics: tuple[TransitivePseudoMetric, ...]

    def __post_init__(self):
        object.__setattr__(self, "metrics", tuple(self.metrics))
        if not self.metrics:
            raise EmptyFamily("a metric family needs at least one metric")
        for d in self.metrics:
            if d.n != self.n:
                raise CarrierMismatch(f"metric on {d.n} points in a family on {self.n}")


MatrixLike = Union[TransitivePseudoMetric, Sequence[Sequence]]


def _matrix(d: MatrixLike) -> Matrix:
    if isinstance(d, TransitivePseudoMetric):
        return d.dist
    return as_matrix(d)


def is_r_transitive(d: MatrixLike, r) -> bool:
    m = _matrix(d)
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    n = len(m)
    return all(
        m[x][z] < r
        for x, y, z in _triples(range(n), repeat=3)
        if m[x][y] < r and m[y][z] < r
    )


def critical_radii(d: MatrixLike) -> list[Fraction]:
    """Distinct positive distances: the only radii where a ball relation changes."""
    m = _matrix(d)
    return sorted({v for row in m for v in row if v > 0})


def satisfies_strong_triangle(d: MatrixLike) -> bool:
    m = _matrix(d)
    n = len(m)
    return all(
        m[x][z] <= max(m[x][y], m[y][z]) for x, y, z in _triples(range(n), repeat=3)
    )


def is_transitive(d: MatrixLike) -> bool:
    """r-transitive for every r > 0.

    A violation at some r means ``max(d(x,y), d(y,z)) < r <= d(x,z)``, so
    testing ``r = d(x,z)`` over the attained distances is exhaustive.  The
    strong triangle law is checked as an independent route.
    """
    m = _matrix(d)
    by_sweep = all(is_r_transitive(m, r) for r in critical_radii(m))
    by_strong = satisfies_strong_triangle(m)
    if by_sweep != by_strong:
        raise CharacterizationMismatch("threshold sweep and strong triangle law disagree")
    return by_sweep


def d_alpha(n: int, alpha) -> TransitivePseudoMetric:
    R.check_carrier(n)
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise NonPositiveAlpha(f"alpha must be positive, got {alpha}")
    return TransitivePseudoMetric(
        tuple(tuple(Fraction(0) if x == y else alpha for y in range(n)) for x in range(n))
    )


def _transitive(d: MatrixLike) -> TransitivePseudoMetric:
    if isinstance(d, TransitivePseudoMetric):
        return d
    return TransitivePseudoMetric(_matrix(d))


def ball_relation(d: MatrixLike, r) -> R.EquivRel:
    """``{(x, y) : d(x, y) < r}`` as a partition."""
    d = _transitive(d)
    r = Fraction(r)
    if r <= 0:
        raise ValueError("radius must be positive")
    n = d.n
    return R.from_pairs(n, ((x, y) for x in range(n) for y in range(n) if d.dist[x][y] < r))


def ball_radii(d: MatrixLike) -> list[Fraction]:
    """One radius per distinct ball relation: each attained positive distance, then max + 1."""
    radii = critical_radii(d)
    top = radii[-1] if radii else Fraction(0)
    return radii + [top + 1]


def ball_relations(d: MatrixLike) -> list[R.EquivRel]:
    d = _transitive(d)
    return list(dict.fromkeys(ball_relation(d, r) for r in ball_radii(d)))


def class_from_metric(d: MatrixLike) -> UeqClass:
    d = _transitive(d)
    return C.generate(d.n, ball_relations(d))


def class_from_family(fam: MetricFamily) -> UeqClass:
    return C.generate(fam.n, [b for d in fam.metrics for b in ball_relations(d)])


def subbase_topology(fam: MetricFamily) -> T.FiniteTopology:
    """Topology generated by the open balls ``B_d(x, r)`` as a sub-base."""
    subbase = set()
    for d in fam.metrics:
        for r in ball_radii(d):
            for x in range(fam.n):
                subbase.add(R.to_mask(y for y in range(fam.n) if d.dist[x][y] < r))
    return T.from_subbase(fam.n, subbase)


def topology_from_family(fam: MetricFamily) -> T.FiniteTopology:
    by_balls = subbase_topology(fam)
    by_class = T.induce_topology(class_from_family(fam))
    if not T.topologies_equal(by_balls, by_class):
        raise CharacterizationMismatch("ball sub-base topology differs from the class-induced topology")
    return by_balls


def metric_of_relation(u: R.EquivRel) -> TransitivePseudoMetric:
    """Two-valued metric: 0 inside a block, 1 across blocks."""
    n = u.n
    return TransitivePseudoMetric(
        tuple(
            tuple(Fraction(0) if u.related(x, y) else Fraction(1) for y in range(n))
            for x in range(n)
        )
    )


def metrics_from_class(c: UeqClass) -> MetricFamily:
    return MetricFamily(c.n, tuple(metric_of_relation(u) for u in c))


def evaluation_embedding(fam: MetricFamily) -> SpaceMap:
    """``x -> (x, ..., x)`` from ``(X, U_D)`` into the product of the ``(X, U_d)``."""
    factors = [class_from_metric(d) for d in fam.metrics]
    sizes = [fam.n] * len(factors)
    R.product_size(sizes)
    target = C.product(factors)
    values = tuple(R.encode((x,) * len(sizes), sizes) for x in range(fam.n))
    return SpaceMap(class_from_family(fam), target, values)


def is_equivalently_uniformisable_via(t: T.FiniteTopology, c: UeqClass) -> bool:
    if t.n != c.n:
        raise CarrierMismatch(f"topology on {t.n} points, class on {c.n}")
    return T.topologies_equal(t, T.induce_topology(c))


def search_uniformising_class(t: T.FiniteTopology, max_generators: int = 2) -> UeqClass | None:
    """Exhaustive search for a class inducing ``t`` (small carriers only)."""
    for c in C.all_classes(t.n, max_generators):
        if is_equivalently_uniformisable_via(t, c):
            return c
    return None
