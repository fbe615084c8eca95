"""Finite topologies, represented by minimal open neighbourhoods.

Subsets of a carrier are handled as integer bitmasks internally; public
functions accept any iterable of elements and return frozensets.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import relations as R
from .classes import UeqClass
from .errors import CarrierMismatch, CharacterizationMismatch, EmptySubset


@dataclass(frozen=True)
class FiniteTopology:
    """``min_nbhd[x]`` is the bitmask of the smallest open set containing x."""

    n: int
    min_nbhd: tuple[int, ...]

    def __post_init__(self):
        R.check_carrier(self.n)
        if len(self.min_nbhd) != self.n:
            raise ValueError("need one minimal neighbourhood per element")
        for x, m in enumerate(self.min_nbhd):
            if not m >> x & 1:
                raise ValueError(f"minimal neighbourhood of {x} does not contain it")
            if m >> self.n:
                raise ValueError(f"minimal neighbourhood of {x} leaves the carrier")
            for y in _bits(m):
                if self.min_nbhd[y] & ~m:
                    raise ValueError(f"neighbourhood of {x} is not open around {y}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def nbhd(self, x: int) -> frozenset[int]:
        return R.from_mask(self.min_nbhd[x])

    @cached_property
    def opens(self) -> frozenset[int]:
        """All open sets as bitmasks (unions of minimal neighbourhoods)."""
        opens = {0}
        for m in set(self.min_nbhd):
            opens |= {o | m for o in opens}
        return frozenset(opens)

    def open_sets(self) -> list[frozenset[int]]:
        return [R.from_mask(m) for m in sorted(self.opens)]


def _bits(mask: int):
    x = 0
    while mask:
        if mask & 1:
            yield x
        mask >>= 1
        x += 1


def _mask(t_or_n, s: Iterable[int]) -> int:
    n = t_or_n if isinstance(t_or_n, int) else t_or_n.n
    m = 0
    for x in s:
        if not 0 <= x < n:
            raise IndexError(f"element {x} outside carrier of size {n}")
        m |= 1 << x
    return m


def from_opens(n: int, opens: Iterable[Iterable[int] | int]) -> FiniteTopology:
    """Topology from an explicit open-set family (bitmasks or element sets).

    The family must already be a topology; the minimal neighbourhood of x
    is the intersection of the members containing x.
    """
    masks = {o if isinstance(o, int) else _mask(n, o) for o in opens}
    full = (1 << n) - 1
    if 0 not in masks or full not in masks:
        raise ValueError("open family must contain the empty set and the carrier")
    for a in masks:
        for b in masks:
            if a | b not in masks or a & b not in masks:
                raise ValueError("open family is not closed under union and intersection")
    return FiniteTopology(n, _intersections_containing(n, masks))


def from_subbase(n: int, subbase: Iterable[int]) -> FiniteTopology:
    """Topology generated by a family of subsets (bitmasks) as a sub-base."""
    return FiniteTopology(n, _intersections_containing(n, set(subbase)))


def _intersections_containing(n: int, sets: Iterable[int]) -> tuple[int, ...]:
    full = (1 << n) - 1
    nb = [full] * n
    for s in sets:
        for x in _bits(s):
            nb[x] &= s
    return tuple(nb)


def discrete(n: int) -> FiniteTopology:
    return FiniteTopology(n, tuple(1 << x for x in range(n)))


def indiscrete(n: int) -> FiniteTopology:
    return FiniteTopology(n, ((1 << n) - 1,) * n)


def induce_topology(space: UeqClass) -> FiniteTopology:
    """Topology with base ``{U[x]}``: its minimal neighbourhoods are the bottom blocks."""
    b = space.bottom
    return FiniteTopology(space.n, tuple(b.mask_of(x) for x in range(space.n)))


def is_open(t: FiniteTopology, g: Iterable[int]) -> bool:
    m = _mask(t, g)
    return all(t.min_nbhd[x] & ~m == 0 for x in _bits(m))


def closure_mask(t: FiniteTopology, m: int) -> int:
    return sum(1 << x for x in range(t.n) if t.min_nbhd[x] & m)


def closure(t: FiniteTopology, s: Iterable[int]) -> frozenset[int]:
    return R.from_mask(closure_mask(t, _mask(t, s)))


def is_dense(space: UeqClass, d: Iterable[int]) -> bool:
    """Every point is related to some point of ``d`` by every member.

    Cross-checked against the topological reading (closure of d is the
    whole carrier).
    """
    dm = _mask(space.n, d)
    full = (1 << space.n) - 1
    by_relations = all(
        all(u.mask_of(x) & dm for x in range(space.n)) for u in space.members
    )
    by_closure = closure_mask(induce_topology(space), dm) == full
    if by_relations != by_closure:
        raise CharacterizationMismatch(
            f"density of {sorted(R.from_mask(dm))}: relations say {by_relations}, closure says {by_closure}"
        )
    return by_relations


def topology_connected(t: FiniteTopology) -> bool:
    """Connectedness of a finite space via the neighbourhood graph."""
    seen = 1
    frontier = [0]
    while frontier:
        x = frontier.pop()
        # x ~ y whenever one lies in the other's minimal neighbourhood
        reach = t.min_nbhd[x] | sum(1 << y for y in range(t.n) if t.min_nbhd[y] >> x & 1)
        new = reach & ~seen
        seen |= new
        frontier.extend(_bits(new))
    return seen == t.full_mask


def is_connected(space: UeqClass) -> bool:
    connected = topology_connected(induce_topology(space))
    if connected != (space.bottom == R.full(space.n)):
        raise CharacterizationMismatch("connectedness disagrees with the bottom relation being full")
    return connected


def subspace_topology(t: FiniteTopology, y: Iterable[int]) -> FiniteTopology:
    """Trace topology on ``y``, re-indexed by increasing element order."""
    ys = sorted(set(y))
    if not ys:
        raise EmptySubset("subspace needs a nonempty subset")
    ym = _mask(t, ys)
    pos = {x: i for i, x in enumerate(ys)}
    nb = []
    for x in ys:
        m = t.min_nbhd[x] & ym
        nb.append(sum(1 << pos[z] for z in _bits(m)))
    return FiniteTopology(len(ys), tuple(nb))


def product_topology(ts: Sequence[FiniteTopology]) -> FiniteTopology:
    """Initial topology of the projections on the mixed-radix product carrier."""
    if not ts:
        raise ValueError("product needs at least one factor")
    sizes = [t.n for t in ts]
    n = R.product_size(sizes)
    subbase = set()
    for i, t in enumerate(ts):
        proj = R.projection(i, sizes)
        for g in set(t.min_nbhd):
            subbase.add(sum(1 << z for z in range(n) if g >> proj[z] & 1))
    return from_subbase(n, subbase)


def topologies_equal(a: FiniteTopology, b: FiniteTopology) -> bool:
    if a.n != b.n:
        raise CarrierMismatch(f"topologies on {a.n} and {b.n} points")
    return a.min_nbhd == b.min_nbhd


def preimage_open(values: Sequence[int], g: int) -> int:
    return sum(1 << x for x, y in enumerate(values) if g >> y & 1)


def is_topologically_continuous(values: Sequence[int], src: FiniteTopology, dst: FiniteTopology) -> bool:
    # preimages of minimal neighbourhoods suffice: they form a base
    return all(is_open(src, R.from_mask(preimage_open(values, g))) for g in set(dst.min_nbhd))


def is_topological_embedding(values: Sequence[int], src: FiniteTopology, dst: FiniteTopology) -> bool:
    """Injective, continuous, and a homeomorphism onto the image subspace."""
    if len(set(values)) != len(values):
        return False
    if not is_topologically_continuous(values, src, dst):
        return False
    image = subspace_topology(dst, values)
    pos = {y: i for i, y in enumerate(sorted(values))}
    onto = [pos[y] for y in values]
    inverse = [0] * len(values)
    for x, i in enumerate(onto):
        inverse[i] = x
    return is_topologically_continuous(inverse, image, src)


def specialization_edges(t: FiniteTopology) -> list[tuple[int, int]]:
    """Pairs ``(x, y)``, x != y, with x in the closure of {y}."""
    return [
        (x, y)
        for x in range(t.n)
        for y in range(t.n)
        if x != y and t.min_nbhd[x] >> y & 1
    ]
