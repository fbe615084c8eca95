"""Brute-force reference computations.

Everything here works on explicit pair sets and element sets and avoids the
partition shortcuts used by the main modules, so it can serve as an
independent check on them.  Exponential in the carrier size; keep inputs
small.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .classes import UeqClass
from .relations import EquivRel


def pairs_of(u: EquivRel) -> frozenset[tuple[int, int]]:
    return frozenset(u.pairs())


def rel_from_pair_set(n: int, pairs) -> EquivRel:
    """Partition from a pair set that is already an equivalence relation."""
    return EquivRel(tuple(min(y for y in range(n) if (x, y) in pairs) for x in range(n)))


def closure_pairs(n: int, pairs) -> frozenset[tuple[int, int]]:
    """Reflexive-symmetric-transitive closure by fixpoint iteration."""
    rel = {(x, x) for x in range(n)} | set(pairs) | {(y, x) for x, y in pairs}
    while True:
        extra = {(x, z) for x, y in rel for y2, z in rel if y == y2} - rel
        if not extra:
            return frozenset(rel)
        rel |= extra


def meet(a: EquivRel, b: EquivRel) -> EquivRel:
    return rel_from_pair_set(a.n, pairs_of(a) & pairs_of(b))


def refines(a: EquivRel, b: EquivRel) -> bool:
    return pairs_of(a) <= pairs_of(b)


def preimage(f, v: EquivRel) -> EquivRel:
    n = len(f)
    vp = pairs_of(v)
    return rel_from_pair_set(n, {(x, y) for x in range(n) for y in range(n) if (f[x], f[y]) in vp})


def block(u: EquivRel, x: int) -> frozenset[int]:
    return frozenset(y for y in range(u.n) if (x, y) in pairs_of(u))


def subset_meets(n: int, gens) -> frozenset[EquivRel]:
    """Meets of every nonempty subset of ``gens``."""
    gens = list(dict.fromkeys(gens))
    out = set()
    for k in range(1, len(gens) + 1):
        for combo in combinations(gens, k):
            acc = pairs_of(combo[0])
            for g in combo[1:]:
                acc &= pairs_of(g)
            out.add(rel_from_pair_set(n, acc))
    return frozenset(out)


def all_subsets(n: int) -> list[frozenset[int]]:
    return [
        frozenset(x for x in range(n) if bits >> x & 1) for bits in range(1 << n)
    ]


def literal_opens(c: UeqClass) -> frozenset[frozenset[int]]:
    """``{G : every x in G has some member U with U[x] inside G}``."""
    blocks = [[block(u, x) for x in range(c.n)] for u in c.members]
    return frozenset(
        g for g in all_subsets(c.n)
        if all(any(bl[x] <= g for bl in blocks) for x in g)
    )


def base_opens(c: UeqClass) -> frozenset[frozenset[int]]:
    """All unions of sets from the base ``{U[x] : U in members, x in X}``."""
    base = {block(u, x) for u in c.members for x in range(c.n)}
    opens = {frozenset()}
    for b in base:
        opens |= {o | b for o in opens}
    return frozenset(opens)


def closure_by_complement(opens, n: int, s) -> frozenset[int]:
    """Complement of the union of the open sets missing ``s``."""
    s = frozenset(s)
    outside = frozenset().union(*[g for g in opens if not g & s])
    return frozenset(range(n)) - outside


def clopen_sets(opens, n: int) -> list[frozenset[int]]:
    full = frozenset(range(n))
    return [g for g in opens if full - g in opens]


def is_dense_literal(c: UeqClass, d) -> bool:
    d = frozenset(d)
    return all(
        any(u.related(a, x) for a in d) for u in c.members for x in range(c.n)
    )


def strong_triangle(m) -> bool:
    n = len(m)
    return all(
        m[x][z] <= max(m[x][y], m[y][z])
        for x in range(n) for y in range(n) for z in range(n)
    )


def transitive_by_sampling(m, denominator: int = 4) -> bool:
    """r-transitivity over the grid ``k/denominator`` up to the largest distance + 1."""
    n = len(m)
    top = max(max(row) for row in m) + 1
    k = 1
    while Fraction(k, denominator) <= top:
        r = Fraction(k, denominator)
        for x in range(n):
            for y in range(n):
                for z in range(n):
                    if m[x][y] < r and m[y][z] < r and not m[x][z] < r:
                        return False
        k += 1
    return True
