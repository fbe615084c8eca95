"""Predicates on functions between U-equivalence spaces.

Every quantifier is evaluated exhaustively over class members and carrier
elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import classes as C
from . import relations as R
from .classes import UeqClass
from .errors import CarrierMismatch, CharacterizationMismatch, EmptySubset, NotLeftInverse


@dataclass(frozen=True)
class SpaceMap:
    source: UeqClass
    target: UeqClass
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(self.values))
        if len(self.values) != self.source.n:
            raise ValueError(f"map has {len(self.values)} values for a source of size {self.source.n}")
        for v in self.values:
            if not 0 <= v < self.target.n:
                raise IndexError(f"value {v} outside target of size {self.target.n}")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def image(self) -> frozenset[int]:
        return frozenset(self.values)


def is_injective(f: SpaceMap) -> bool:
    return len(set(f.values)) == len(f.values)


def is_surjective(f: SpaceMap) -> bool:
    return len(set(f.values)) == f.target.n


def compose(g: SpaceMap, f: SpaceMap) -> SpaceMap:
    """``g o f``; the middle spaces must have the same carrier."""
    if f.target.n != g.source.n:
        raise CarrierMismatch("cannot compose: middle carriers differ")
    return SpaceMap(f.source, g.target, tuple(g.values[y] for y in f.values))


def inverse(f: SpaceMap) -> SpaceMap:
    if not (is_injective(f) and is_surjective(f)):
        raise ValueError("only bijections have inverses")
    inv = [0] * f.target.n
    for x, y in enumerate(f.values):
        inv[y] = x
    return SpaceMap(f.target, f.source, tuple(inv))


def is_continuous(f: SpaceMap) -> bool:
    # generators suffice: preimages commute with meets and the source is meet-closed
    return all(R.preimage_relation(f.values, v) in f.source.members for v in f.target.generators)


def is_open_map(f: SpaceMap) -> bool:
    """For each U there is V with ``V[f(x)]`` inside ``f(U[x])`` for all x."""
    targets = list(f.target.members)
    for u in f.source.members:
        block_image = {}
        for b, mask in u.block_masks.items():
            block_image[b] = R.to_mask(f.values[y] for y in R.from_mask(mask))
        images = [block_image[u.block_id[x]] for x in range(f.source.n)]
        if not any(
            all(v.mask_of(f.values[x]) & ~images[x] == 0 for x in range(f.source.n))
            for v in targets
        ):
            return False
    return True


def is_u_surjection(f: SpaceMap) -> bool:
    hit = R.to_mask(f.values)
    full = (1 << f.target.n) - 1
    for v in f.target.members:
        reached = 0
        for b, mask in v.block_masks.items():
            if mask & hit:
                reached |= mask
        if reached != full:
            return False
    return True


def is_u_equivalence(f: SpaceMap) -> bool:
    if not (is_injective(f) and is_surjective(f)):
        return False
    return is_continuous(f) and is_continuous(inverse(f))


def corestriction(f: SpaceMap) -> SpaceMap:
    """``f`` regarded as a map onto its image with the relative class."""
    image = C.inclusion(f.values)
    pos = {y: i for i, y in enumerate(image)}
    return SpaceMap(f.source, C.relative(f.target, image), tuple(pos[y] for y in f.values))


def embedding_by_definition(f: SpaceMap) -> bool:
    """Injective and a U-equivalence onto its image with the relative class."""
    return is_injective(f) and is_u_equivalence(corestriction(f))


def embedding_by_characterization(f: SpaceMap) -> bool:
    """Injective, continuous, and the source class is the class induced by f."""
    return (
        is_injective(f)
        and is_continuous(f)
        and f.source.members == C.induced_class([(f.values, f.target)]).members
    )


def is_u_embedding(f: SpaceMap) -> bool:
    """Both embedding tests are evaluated; they must agree."""
    by_definition = embedding_by_definition(f)
    by_characterization = embedding_by_characterization(f)
    if by_definition != by_characterization:
        raise CharacterizationMismatch(
            f"embedding test disagrees for values {f.values}: "
            f"definition {by_definition}, characterization {by_characterization}"
        )
    return by_definition


def left_inverse_embedding_check(f: SpaceMap, g: SpaceMap) -> bool:
    """Given a left inverse ``g`` of ``f``, report whether f is an embedding."""
    if g.source.n != f.target.n or g.target.n != f.source.n:
        raise NotLeftInverse("carriers do not line up for g o f")
    if any(g.values[f.values[x]] != x for x in range(f.source.n)):
        raise NotLeftInverse("g o f is not the identity")
    return is_u_embedding(f)


def kernel(values: Sequence[int]) -> R.EquivRel:
    """Relate x, y iff they have the same image."""
    return R.canonical(list(values))


def is_transverse(space: UeqClass, values: Sequence[int]) -> bool:
    """Some member meets the kernel of the map exactly in the diagonal."""
    if len(values) != space.n:
        raise CarrierMismatch(f"map has {len(values)} values for a space of size {space.n}")
    ker = kernel(values)
    diag = R.delta(space.n)
    return any(R.meet(ker, u) == diag for u in space.members)


def coincidence_set(alpha: SpaceMap, beta: SpaceMap) -> frozenset[int]:
    if alpha.source.n != beta.source.n or alpha.target.n != beta.target.n:
        raise CarrierMismatch("coincidence set needs maps with the same carriers")
    return frozenset(x for x, (a, b) in enumerate(zip(alpha.values, beta.values)) if a == b)


def inclusion_map(space: UeqClass, a: Iterable[int]) -> SpaceMap:
    incl = C.inclusion(a)
    if not incl:
        raise EmptySubset("inclusion of the empty set")
    return SpaceMap(C.relative(space, incl), space, incl)


def has_open_core(space: UeqClass, a: Iterable[int]) -> bool:
    """Some member V0 has ``V0[x]`` inside ``a`` for every x in ``a``."""
    am = R.to_mask(a)
    pts = list(R.from_mask(am))
    return any(all(v.mask_of(x) & ~am == 0 for x in pts) for v in space.members)


def refines_traces(space: UeqClass, a: Iterable[int]) -> bool:
    """For each U some V has ``V[x]`` inside ``U[x] & a`` for every x in ``a``."""
    am = R.to_mask(a)
    pts = list(R.from_mask(am))
    members = list(space.members)
    return all(
        any(all(v.mask_of(x) & ~(u.mask_of(x) & am) == 0 for x in pts) for v in members)
        for u in members
    )


def is_u_open_subset(space: UeqClass, a: Iterable[int]) -> bool:
    """Whether the inclusion of ``a`` is U-equivalently open.

    For rich classes the open-core criterion is evaluated too and must agree.
    """
    a = C.inclusion(a)
    verdict = is_open_map(inclusion_map(space, a))
    if C.is_rich(space) and verdict != has_open_core(space, a):
        raise CharacterizationMismatch(f"openness of {list(a)} disagrees with the open-core criterion")
    return verdict
