"""Equivalence relations on finite carriers, stored as canonical partitions.

A carrier of size ``n`` is the range ``0..n-1``.  An :class:`EquivRel`
keeps, for every element, the minimum element of its block, so two
relations are mathematically equal exactly when their ``block_id`` tuples
are equal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as _cartesian
from typing import Iterable, Sequence

from .errors import CarrierMismatch, CoverageError, OverlapError, TooManyFactors

PRODUCT_CAP = 4096


def check_carrier(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError(f"carrier size must be a positive integer, got {n!r}")
    return n


def to_mask(elements: Iterable[int]) -> int:
    m = 0
    for x in elements:
        m |= 1 << x
    return m


def from_mask(mask: int) -> frozenset[int]:
    out = []
    x = 0
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return frozenset(out)


def _check_elements(n: int, elements: Iterable[int]) -> None:
    for x in elements:
        if not 0 <= x < n:
            raise IndexError(f"element {x} outside carrier of size {n}")


@dataclass(frozen=True)
class EquivRel:
    """Canonical partition: ``block_id[x]`` is the least element of x's block."""

    block_id: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.block_id)

    def related(self, x: int, y: int) -> bool:
        return self.block_id[x] == self.block_id[y]

    @cached_property
    def block_masks(self) -> dict[int, int]:
        """Block label -> bitmask of the block."""
        masks: dict[int, int] = {}
        for x, b in enumerate(self.block_id):
            masks[b] = masks.get(b, 0) | (1 << x)
        return masks

    def mask_of(self, x: int) -> int:
        return self.block_masks[self.block_id[x]]

    def blocks(self) -> list[frozenset[int]]:
        return [from_mask(m) for _, m in sorted(self.block_masks.items())]

    def pairs(self) -> set[tuple[int, int]]:
        return {
            (x, y)
            for x in range(self.n)
            for y in range(self.n)
            if self.block_id[x] == self.block_id[y]
        }

    def __repr__(self) -> str:
        inner = ",".join("{" + ",".join(map(str, sorted(b))) + "}" for b in self.blocks())
        return f"EquivRel({inner})"


def canonical(labels: Sequence) -> EquivRel:
    """Relabel an arbitrary labelling (equal labels = same block) by block minima."""
    first: dict = {}
    out = []
    for x, lab in enumerate(labels):
        out.append(first.setdefault(lab, x))
    return EquivRel(tuple(out))


def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> EquivRel:
    check_carrier(n)
    labels: list[int | None] = [None] * n
    for k, block in enumerate(blocks):
        for x in block:
            _check_elements(n, (x,))
            if labels[x] is not None:
                raise OverlapError(f"element {x} appears in more than one block")
            labels[x] = k
    missing = [x for x, lab in enumerate(labels) if lab is None]
    if missing:
        raise CoverageError(f"blocks do not cover elements {missing}")
    return canonical(labels)


def from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> EquivRel:
    """Smallest equivalence relation containing ``pairs``."""
    check_carrier(n)
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x, y in pairs:
        _check_elements(n, (x, y))
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)
    return canonical([find(x) for x in range(n)])


def delta(n: int) -> EquivRel:
    check_carrier(n)
    return EquivRel(tuple(range(n)))


def full(n: int) -> EquivRel:
    check_carrier(n)
    return EquivRel((0,) * n)


def _same_carrier(a: EquivRel, b: EquivRel) -> None:
    if a.n != b.n:
        raise CarrierMismatch(f"carrier sizes differ: {a.n} vs {b.n}")


def meet(a: EquivRel, b: EquivRel) -> EquivRel:
    _same_carrier(a, b)
    return canonical(list(zip(a.block_id, b.block_id)))


def meet_all(rels: Iterable[EquivRel]) -> EquivRel:
    it = iter(rels)
    acc = next(it)
    for r in it:
        acc = meet(acc, r)
    return acc


def block_of(u: EquivRel, x: int) -> frozenset[int]:
    _check_elements(u.n, (x,))
    return from_mask(u.mask_of(x))


def saturate(u: EquivRel, a: Iterable[int]) -> frozenset[int]:
    """``U[A]``: union of the blocks meeting ``a``."""
    a = list(a)
    _check_elements(u.n, a)
    m = 0
    for x in a:
        m |= u.mask_of(x)
    return from_mask(m)


def refines(a: EquivRel, b: EquivRel) -> bool:
    """True iff ``a`` is a subset of ``b`` as a set of pairs."""
    _same_carrier(a, b)
    seen: dict[int, int] = {}
    for la, lb in zip(a.block_id, b.block_id):
        if seen.setdefault(la, lb) != lb:
            return False
    return True


def preimage_relation(f: Sequence[int], v: EquivRel) -> EquivRel:
    """Pull ``v`` back along the total function ``f`` (given as a value list)."""
    check_carrier(len(f))
    _check_elements(v.n, f)
    return canonical([v.block_id[y] for y in f])


def restrict(u: EquivRel, a: Sequence[int]) -> EquivRel:
    """Trace of ``u`` on the subset ``a``, re-indexed by position in ``a``."""
    return preimage_relation(a, u)


def product_size(sizes: Sequence[int]) -> int:
    if not sizes:
        raise ValueError("a product needs at least one factor")
    total = 1
    for s in sizes:
        total *= check_carrier(s)
    if total > PRODUCT_CAP:
        raise TooManyFactors(f"product carrier of size {total} exceeds cap {PRODUCT_CAP}")
    return total


def encode(coords: Sequence[int], sizes: Sequence[int]) -> int:
    """Mixed-radix index of a tuple, most significant factor first."""
    if len(coords) != len(sizes):
        raise IndexError(f"{len(coords)} coordinates for {len(sizes)} factors")
    idx = 0
    for c, s in zip(coords, sizes):
        if not 0 <= c < s:
            raise IndexError(f"coordinate {c} outside factor of size {s}")
        idx = idx * s + c
    return idx


def decode(idx: int, sizes: Sequence[int]) -> tuple[int, ...]:
    coords = []
    for s in reversed(sizes):
        idx, c = divmod(idx, s)
        coords.append(c)
    return tuple(reversed(coords))


def projection(i: int, sizes: Sequence[int]) -> list[int]:
    """Value list of the i-th canonical projection from the product carrier."""
    if not 0 <= i < len(sizes):
        raise IndexError(f"factor index {i} out of range for {len(sizes)} factors")
    n = product_size(sizes)
    return [decode(z, sizes)[i] for z in range(n)]


def product_lift(i: int, sizes: Sequence[int], u_i: EquivRel) -> EquivRel:
    """Relate two tuples iff their i-th coordinates are ``u_i``-related."""
    if not 0 <= i < len(sizes):
        raise IndexError(f"factor index {i} out of range for {len(sizes)} factors")
    if u_i.n != sizes[i]:
        raise CarrierMismatch(f"relation on {u_i.n} points lifted from factor of size {sizes[i]}")
    inner = 1
    for s in sizes[i + 1:]:
        inner *= s
    n = product_size(sizes)
    return canonical([u_i.block_id[(z // inner) % sizes[i]] for z in range(n)])


def all_relations(n: int) -> list[EquivRel]:
    """Every equivalence relation on ``n`` points (restricted growth strings)."""
    check_carrier(n)
    out = []

    def grow(prefix: list[int], top: int) -> None:
        if len(prefix) == n:
            out.append(canonical(prefix))
            return
        for lab in range(top + 2):
            prefix.append(lab)
            grow(prefix, max(top, lab))
            prefix.pop()

    grow([0], 0)
    return out


def all_subsets(n: int) -> list[frozenset[int]]:
    return [frozenset(c) for c in _subsets_iter(n)]


def _subsets_iter(n: int):
    for bits in _cartesian((0, 1), repeat=n):
        yield tuple(x for x, b in enumerate(bits) if b)
