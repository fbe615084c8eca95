"""U-equivalence classes: meet-closed families of equivalence relations."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from . import relations as R
from .errors import CarrierMismatch, EmptyFamily, EmptyGeneratorSet, EmptySubset
from .relations import EquivRel


@dataclass(frozen=True)
class UeqClass:
    """A meet-closed family of relations on ``0..n-1`` with the generators it came from.

    Equality is by ``(n, members)``.  Build instances with :func:`generate`
    (or the constructors built on it); the constructor does not close
    ``members`` itself.
    """

    n: int
    generators: tuple[EquivRel, ...] = field(compare=False)
    members: frozenset[EquivRel]
    closure_rounds: int = field(default=0, compare=False)

    def __contains__(self, u: EquivRel) -> bool:
        return u in self.members

    def __iter__(self):
        return iter(sorted(self.members, key=lambda u: u.block_id))

    def __len__(self) -> int:
        return len(self.members)

    @cached_property
    def bottom(self) -> EquivRel:
        return R.meet_all(self.generators)

    @property
    def space_key(self) -> tuple:
        return (self.n, tuple(sorted(u.block_id for u in self.members)))


@dataclass(frozen=True)
class CoverWitness:
    relation: EquivRel
    centers: tuple[int, ...]

    def covers(self) -> bool:
        m = 0
        for x in self.centers:
            m |= self.relation.mask_of(x)
        return m == (1 << self.relation.n) - 1


def generate(n: int, s: Iterable[EquivRel]) -> UeqClass:
    """The class of all finite meets of members of ``s``."""
    R.check_carrier(n)
    gens = tuple(s)
    if not gens:
        raise EmptyGeneratorSet("cannot generate a class from no relations")
    for g in gens:
        if g.n != n:
            raise CarrierMismatch(f"generator on {g.n} points for carrier of size {n}")
    distinct = list(dict.fromkeys(gens))
    members = set(distinct)
    frontier = list(distinct)
    rounds = 0
    # every meet of k generators is reached after k-1 rounds
    while frontier:
        rounds += 1
        fresh = []
        for m in frontier:
            for g in distinct:
                r = R.meet(m, g)
                if r not in members:
                    members.add(r)
                    fresh.append(r)
        frontier = fresh
    return UeqClass(n, gens, frozenset(members), rounds)


def contains(c: UeqClass, u: EquivRel) -> bool:
    if u.n != c.n:
        raise CarrierMismatch(f"relation on {u.n} points, class on {c.n}")
    return u in c.members


def induced_class(fs: Sequence[tuple[Sequence[int], UeqClass]]) -> UeqClass:
    """Smallest class on the common domain making every ``f_i`` continuous.

    Each entry is ``(values, target_class)``.  Pulling back generators is
    enough because preimages commute with meets.
    """
    if not fs:
        raise EmptyFamily("induced class needs at least one function")
    n = len(fs[0][0])
    gens = []
    for values, target in fs:
        if len(values) != n:
            raise CarrierMismatch("functions in an induced family must share a domain")
        gens.extend(R.preimage_relation(values, g) for g in target.generators)
    return generate(n, gens)


def pullback_members(values: Sequence[int], target: UeqClass) -> frozenset[EquivRel]:
    """Direct image set ``{(f x f)^-1(V) : V in target}``."""
    return frozenset(R.preimage_relation(values, v) for v in target.members)


def inclusion(a: Iterable[int]) -> tuple[int, ...]:
    """Values of the inclusion map of ``a`` (re-indexed in increasing order)."""
    return tuple(sorted(set(a)))


def relative(c: UeqClass, a: Iterable[int]) -> UeqClass:
    incl = inclusion(a)
    if not incl:
        raise EmptySubset("relative class needs a nonempty subset")
    for x in incl:
        if not 0 <= x < c.n:
            raise IndexError(f"element {x} outside carrier of size {c.n}")
    return induced_class([(incl, c)])


def product(spaces: Sequence[UeqClass]) -> UeqClass:
    """Product class on the mixed-radix product carrier."""
    if not spaces:
        raise EmptyFamily("product needs at least one factor")
    sizes = [c.n for c in spaces]
    n = R.product_size(sizes)
    gens = [
        R.product_lift(i, sizes, g)
        for i, c in enumerate(spaces)
        for g in c.generators
    ]
    return generate(n, gens)


def is_rich(c: UeqClass) -> bool:
    return R.full(c.n) in c.members


def is_separated(c: UeqClass) -> bool:
    return bottom(c) == R.delta(c.n)


def bottom(c: UeqClass) -> EquivRel:
    return c.bottom


def cover_witness(u: EquivRel) -> CoverWitness:
    """Block minima as centres: the smallest cover by ``u``-blocks."""
    return CoverWitness(u, tuple(sorted(u.block_masks)))


def totally_bounded_witness(c: UeqClass) -> dict[EquivRel, CoverWitness]:
    return {u: cover_witness(u) for u in c}


def all_classes(n: int, max_generators: int) -> list[UeqClass]:
    """Every distinct class generated by at most ``max_generators`` relations on n points."""
    rels = R.all_relations(n)
    seen: dict[tuple, UeqClass] = {}
    for k in range(1, max_generators + 1):
        for gens in combinations(rels, k):
            c = generate(n, gens)
            seen.setdefault(c.space_key, c)
    return list(seen.values())
