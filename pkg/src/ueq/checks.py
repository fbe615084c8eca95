"""Numbered property checks on seeded random finite instances.

Each check draws its own instances from a per-trial RNG, so the verdict
sequence depends only on ``(check id, trial index, seed)``.  A trial whose
hypotheses are not met is *vacuous* and counted apart from passes.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field
from typing import Callable

from . import classes as C
from . import generators as G
from . import instances as I
from . import maps as M
from . import oracles as O
from . import pseudometrics as P
from . import relations as R
from . import topology as T
from .errors import UeqError, UnknownCheckId
from .maps import SpaceMap


@dataclass(frozen=True)
class HarnessConfig:
    seed: int = 42
    trials: int = 500
    max_carrier: int = 6
    exhaustive_carrier: int = 4
    max_generators: int = 4
    max_factors: int = 3
    max_factor_size: int = 3
    max_metrics: int = 2


@dataclass
class CheckResult:
    check_id: str
    passes: int = 0
    failures: int = 0
    vacuous: int = 0
    counterexample: dict | None = None

    @property
    def trials(self) -> int:
        return self.passes + self.failures + self.vacuous

    @property
    def hit_rate(self) -> float:
        return (self.passes + self.failures) / self.trials if self.trials else 0.0

    @property
    def ok(self) -> bool:
        # a check that never met its hypotheses verified nothing
        return self.failures == 0 and (self.trials == 0 or self.vacuous < self.trials)


@dataclass
class VerificationReport:
    seed: int
    caps: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> str:
        checks = []
        for c in self.checks:
            d = {"check_id": c.check_id, "passes": c.passes, "failures": c.failures, "vacuous": c.vacuous}
            if c.counterexample is not None:
                d["counterexample"] = c.counterexample
            checks.append(d)
        doc = {"seed": self.seed, "caps": self.caps, "ok": self.ok, "checks": checks}
        return json.dumps(doc, sort_keys=True, indent=2)


Outcome = tuple[str, dict | None]
VACUOUS: Outcome = ("vacuous", None)


def verdict(ok: bool, witness: Callable[[], dict]) -> Outcome:
    return ("pass", None) if ok else ("fail", witness())


@dataclass(frozen=True)
class PropertyCheck:
    id: str
    description: str
    trial: Callable[[random.Random, HarnessConfig], Outcome]
    conditioned: bool = False


CHECKS: dict[str, PropertyCheck] = {}


def check(check_id: str, description: str, conditioned: bool = False):
    def register(fn):
        CHECKS[check_id] = PropertyCheck(check_id, description, fn, conditioned)
        return fn
    return register


def _n(rng: random.Random, cfg: HarnessConfig, lo: int = 1, hi: int | None = None) -> int:
    return rng.randint(lo, min(hi or cfg.max_carrier, cfg.max_carrier))


def _space(rng, cfg, n, **kw):
    return G.space(rng, n, cfg.max_generators, **kw)


def _factors(rng, cfg, separated=False):
    k = rng.randint(1, cfg.max_factors)
    make = G.separated_space if separated else G.space
    return [make(rng, rng.randint(1, cfg.max_factor_size), cfg.max_generators) for _ in range(k)]


# -- generated and induced classes ------------------------------------------


@check("P2.1", "generated class equals the set of meets of nonempty generator subsets")
def _p21(rng, cfg):
    n = _n(rng, cfg)
    gens = [G.relation(rng, n) for _ in range(rng.randint(1, cfg.max_generators))]
    c = C.generate(n, gens)
    k = len(set(gens))
    ok = (
        c.members == O.subset_meets(n, gens)
        and len(c) <= 2 ** k - 1
        and c.closure_rounds <= k
        and all(g in c for g in gens)
        and c.bottom in c
    )
    return verdict(ok, lambda: {"space": I.space_doc(c)})


def _random_family(rng, cfg, n):
    fs = []
    for _ in range(rng.randint(1, 3)):
        m = _n(rng, cfg)
        fs.append((G.values(rng, n, m), _space(rng, cfg, m)))
    return fs


@check("P2.2", "induced class makes every map continuous and lies inside any such class")
def _p22(rng, cfg):
    n = _n(rng, cfg)
    fs = _random_family(rng, cfg, n)
    u = C.induced_class(fs)
    ok = all(M.is_continuous(SpaceMap(u, v, f)) for f, v in fs)
    needed = [R.preimage_relation(f, m) for f, v in fs for m in v.members]
    extra = [G.relation(rng, n) for _ in range(rng.randint(0, 2))]
    w = C.generate(n, needed + extra)
    ok = ok and u.members <= w.members
    other = _space(rng, cfg, n)
    if all(M.is_continuous(SpaceMap(other, v, f)) for f, v in fs):
        ok = ok and u.members <= other.members
    return verdict(ok, lambda: {"maps": [I.map_doc(SpaceMap(u, v, f)) for f, v in fs]})


@check("P2.3", "class induced by one map is exactly the set of pulled-back members")
def _p23(rng, cfg):
    n, m = _n(rng, cfg), _n(rng, cfg)
    f, v = G.values(rng, n, m), _space(rng, cfg, m)
    u = C.induced_class([(f, v)])
    return verdict(u.members == C.pullback_members(f, v), lambda: {"map": I.map_doc(SpaceMap(u, v, f))})


@check("P2.4", "into an induced class, a map is continuous iff its composite is")
def _p24(rng, cfg):
    n, m, p = _n(rng, cfg), _n(rng, cfg), _n(rng, cfg)
    phi, psi = G.values(rng, n, m), G.values(rng, m, p)
    w = _space(rng, cfg, p)
    v = C.induced_class([(psi, w)])
    comp = tuple(psi[y] for y in phi)
    gens = [G.relation(rng, n) for _ in range(rng.randint(1, cfg.max_generators))]
    if rng.random() < 0.5:
        gens += [R.preimage_relation(comp, g) for g in w.generators]
    u = C.generate(n, gens)
    ok = M.is_continuous(SpaceMap(u, v, phi)) == M.is_continuous(SpaceMap(u, w, comp))
    return verdict(ok, lambda: {"phi": I.map_doc(SpaceMap(u, v, phi)), "psi": I.map_doc(SpaceMap(v, w, psi))})


# -- embeddings ---------------------------------------------------------------


def embedding_instance(rng, cfg, max_carrier=5) -> SpaceMap:
    """Random map, biased towards injective maps and induced source classes."""
    n = _n(rng, cfg, hi=max_carrier)
    m = rng.randint(n, max(n, min(max_carrier, cfg.max_carrier))) if rng.random() < 0.7 else _n(rng, cfg, hi=max_carrier)
    f = G.injection(rng, n, m) if m >= n and rng.random() < 0.7 else G.values(rng, n, m)
    v = _space(rng, cfg, m)
    if rng.random() < 0.5:
        u = C.induced_class([(f, v)])
    else:
        u = _space(rng, cfg, n)
    return SpaceMap(u, v, f)


@check("P2.6", "definitional embedding agrees with injective + continuous + induced source")
def _p26(rng, cfg):
    f = embedding_instance(rng, cfg)
    ok = M.embedding_by_definition(f) == M.embedding_by_characterization(f)
    return verdict(ok, lambda: {"map": I.map_doc(f)})


def _left_inverse_instance(rng, cfg):
    n = _n(rng, cfg)
    m = rng.randint(n, cfg.max_carrier)
    f = G.injection(rng, n, m)
    g = [rng.randrange(n) for _ in range(m)]
    for x, y in enumerate(f):
        g[y] = x
    fg = [f[x] for x in g]
    seed_rels = [G.relation(rng, m) for _ in range(rng.randint(1, cfg.max_generators - 1 or 1))]
    # fg is idempotent, so this generator set is closed under pulling back along fg
    v = C.generate(m, seed_rels + [R.preimage_relation(fg, s) for s in seed_rels])
    u = C.induced_class([(f, v)]) if rng.random() < 0.7 else _space(rng, cfg, n)
    return SpaceMap(u, v, f), SpaceMap(v, u, tuple(g))


@check("P2.7", "a continuous map with a continuous left inverse is an embedding", conditioned=True)
def _p27(rng, cfg):
    f, g = _left_inverse_instance(rng, cfg)
    if not (M.is_continuous(f) and M.is_continuous(g)):
        return VACUOUS
    return verdict(M.left_inverse_embedding_check(f, g), lambda: {"f": I.map_doc(f), "g": I.map_doc(g)})


# -- total boundedness ----------------------------------------------------------


@check("P2.8", "covers assembled from covers of the pieces of a finite covering cover X")
def _p28(rng, cfg):
    n = _n(rng, cfg)
    c = _space(rng, cfg, n)
    pieces = [set(G.subset(rng, n)) for _ in range(rng.randint(1, 3))]
    for x in range(n):
        if not any(x in p for p in pieces):
            rng.choice(pieces).add(x)
    ok = True
    for u in c:
        centers = set()
        for piece in pieces:
            incl = C.inclusion(piece)
            uj = R.restrict(u, incl)
            ok = ok and uj in C.relative(c, incl)
            w = C.cover_witness(uj)
            ok = ok and w.covers()
            centers |= {incl[i] for i in w.centers}
        ok = ok and C.CoverWitness(u, tuple(sorted(centers))).covers()
    return verdict(ok, lambda: {"space": I.space_doc(c), "pieces": [sorted(p) for p in pieces]})


@check("P2.9", "covers of a totally bounded target pull back to covers of the domain")
def _p29(rng, cfg):
    n, m = _n(rng, cfg), _n(rng, cfg)
    f, v = G.values(rng, n, m), _space(rng, cfg, m)
    u = C.induced_class([(f, v)])
    ok = True
    for vv in v:
        ys = C.cover_witness(vv).centers
        pre = R.preimage_relation(f, vv)
        centers = []
        for y in ys:
            fibre = [x for x in range(n) if vv.related(f[x], y)]
            if fibre:
                centers.append(fibre[0])
        ok = ok and pre in u and C.CoverWitness(pre, tuple(centers)).covers()
    ok = ok and all(w.covers() for w in C.totally_bounded_witness(u).values())
    return verdict(ok, lambda: {"map": I.map_doc(SpaceMap(u, v, f))})


# -- products -------------------------------------------------------------------


@check("P2.10", "a map into a product is continuous iff every coordinate map is")
def _p210(rng, cfg):
    factors = _factors(rng, cfg)
    sizes = [c.n for c in factors]
    prod = C.product(factors)
    n = _n(rng, cfg)
    phi = G.values(rng, n, prod.n)
    coords = [tuple(R.decode(z, sizes)[j] for z in phi) for j in range(len(sizes))]
    gens = [G.relation(rng, n) for _ in range(rng.randint(1, 2))]
    if rng.random() < 0.5:
        gens += [R.preimage_relation(cj, g) for cj, c in zip(coords, factors) for g in c.generators]
    a = C.generate(n, gens)
    whole = M.is_continuous(SpaceMap(a, prod, phi))
    parts = all(M.is_continuous(SpaceMap(a, c, cj)) for cj, c in zip(coords, factors))
    return verdict(whole == parts, lambda: {"map": I.map_doc(SpaceMap(a, prod, phi)), "factors": sizes})


@check("P2.11", "a product of separated classes is separated")
def _p211(rng, cfg):
    factors = _factors(rng, cfg, separated=True)
    prod = C.product(factors)
    ok = all(C.is_separated(c) for c in factors) and C.is_separated(prod)
    return verdict(ok, lambda: {"factors": [I.space_doc(c) for c in factors]})


def _product_topology_agrees(factors) -> bool:
    prod = C.product(factors)
    return T.topologies_equal(
        T.induce_topology(prod), T.product_topology([T.induce_topology(c) for c in factors])
    )


@check("P2.12", "topology of the product class is the product of the induced topologies")
def _p212(rng, cfg):
    factors = _factors(rng, cfg, separated=True)
    return verdict(_product_topology_agrees(factors), lambda: {"factors": [I.space_doc(c) for c in factors]})


@check("P2.12u", "the same product topology identity without requiring separated factors")
def _p212u(rng, cfg):
    factors = _factors(rng, cfg)
    return verdict(_product_topology_agrees(factors), lambda: {"factors": [I.space_doc(c) for c in factors]})


# -- open subsets, coincidence sets, density ------------------------------------


def _open_candidate(rng, c):
    if rng.random() < 0.5:
        return G.subset(rng, c.n)
    u = rng.choice(list(c.members))
    return R.saturate(u, G.subset(rng, c.n))


@check("P3.1", "for rich classes: inclusion open <=> trace refinement <=> open core", conditioned=True)
def _p31(rng, cfg):
    n = _n(rng, cfg)
    c = _space(rng, cfg, n, rich=rng.random() < 0.9)
    if not C.is_rich(c):
        return VACUOUS
    a = _open_candidate(rng, c)
    by_map = M.is_open_map(M.inclusion_map(c, a))
    ok = by_map == M.refines_traces(c, a) == M.has_open_core(c, a)
    return verdict(ok, lambda: I.subset_doc(c, a))


def transverse_map(rng, v: C.UeqClass) -> tuple[int, ...]:
    """A map out of ``v``'s carrier that is injective on the blocks of some member."""
    member = v.bottom if rng.random() < 0.5 else rng.choice(list(v.members))
    width = max(len(b) for b in member.blocks())
    p = width if rng.random() < 0.7 else width + 1
    phi = [0] * v.n
    for b in member.blocks():
        for x, z in zip(sorted(b), rng.sample(range(p), len(b))):
            phi[x] = z
    return tuple(phi)


def _fibre_twin(rng, alpha, phi, keep):
    """A map agreeing with ``alpha`` after ``phi``; each point kept with probability ``keep``."""
    beta = []
    for y in alpha:
        if rng.random() < keep:
            beta.append(y)
        else:
            beta.append(rng.choice([w for w in range(len(phi)) if phi[w] == phi[y]]))
    return tuple(beta)


def coincidence_instance(rng, cfg, keep):
    n, m = _n(rng, cfg), _n(rng, cfg)
    v = _space(rng, cfg, m)
    phi = transverse_map(rng, v)
    alpha = G.values(rng, n, m)
    beta = _fibre_twin(rng, alpha, phi, keep)
    gens = [G.relation(rng, n) for _ in range(rng.randint(0, 2))] + [R.full(n)]
    gens += [R.preimage_relation(alpha, g) for g in v.generators]
    gens += [R.preimage_relation(beta, g) for g in v.generators]
    u = C.generate(n, gens)
    return SpaceMap(u, v, alpha), SpaceMap(u, v, beta), phi


def _coincidence_premises(a: SpaceMap, b: SpaceMap, phi) -> bool:
    return (
        C.is_rich(a.source)
        and M.is_continuous(a)
        and M.is_continuous(b)
        and M.is_transverse(a.target, phi)
        and all(phi[x] == phi[y] for x, y in zip(a.values, b.values))
    )


def _coincidence_doc(a, b, phi):
    return {"alpha": I.map_doc(a), "beta": I.map_doc(b), "phi": list(phi)}


@check("P3.2", "nonempty coincidence sets are open under the transversality hypotheses", conditioned=True)
def _p32(rng, cfg):
    a, b, phi = coincidence_instance(rng, cfg, keep=0.5)
    coinc = M.coincidence_set(a, b)
    if not coinc or not _coincidence_premises(a, b, phi):
        return VACUOUS
    return verdict(M.is_u_open_subset(a.source, coinc), lambda: _coincidence_doc(a, b, phi))


@check("P3.4", "an open U-surjection from a rich space is surjective", conditioned=True)
def _p34(rng, cfg):
    n = _n(rng, cfg)
    m = _n(rng, cfg, hi=n) if rng.random() < 0.7 else _n(rng, cfg)
    mode = rng.random()
    if mode < 0.4:
        u = G.connected_space(rng, n)
    else:
        u = _space(rng, cfg, n, rich=True)
    v = _space(rng, cfg, m, discrete=rng.random() < 0.5)
    f = G.surjection(rng, n, m) if n >= m and rng.random() < 0.6 else G.values(rng, n, m)
    fm = SpaceMap(u, v, f)
    if not (C.is_rich(u) and M.is_u_surjection(fm) and M.is_open_map(fm)):
        return VACUOUS
    return verdict(M.is_surjective(fm), lambda: {"map": I.map_doc(fm)})


@check("P3.6", "in a rich space an open dense subset is everything", conditioned=True)
def _p36(rng, cfg):
    n = _n(rng, cfg)
    c = _space(rng, cfg, n, rich=True)
    if rng.random() < 0.7:
        b = c.bottom
        dense = {rng.choice(sorted(blk)) for blk in b.blocks()} | set(G.subset(rng, n, nonempty=False))
        a = R.saturate(rng.choice(list(c.members)), dense)
    else:
        a = G.subset(rng, n)
    if not (C.is_rich(c) and M.is_u_open_subset(c, a) and T.is_dense(c, a)):
        return VACUOUS
    return verdict(a == frozenset(range(n)), lambda: I.subset_doc(c, a))


@check("P3.7", "maps agreeing on a dense coincidence set are equal", conditioned=True)
def _p37(rng, cfg):
    a, b, phi = coincidence_instance(rng, cfg, keep=1.0 if rng.random() < 0.5 else 0.7)
    coinc = M.coincidence_set(a, b)
    if not coinc or not _coincidence_premises(a, b, phi) or not T.is_dense(a.source, coinc):
        return VACUOUS
    return verdict(a.values == b.values, lambda: _coincidence_doc(a, b, phi))


def _maybe_connected(rng, cfg, n):
    if rng.random() < 0.6:
        return G.connected_space(rng, n, cfg.max_generators)
    return _space(rng, cfg, n)


@check("P3.8", "every nonempty subset of a connected space is dense", conditioned=True)
def _p38(rng, cfg):
    n = _n(rng, cfg)
    c = _maybe_connected(rng, cfg, n)
    top = T.induce_topology(c)
    a = G.subset(rng, n)
    # closure(U[A]) <= U[U[A]] <= U[A] holds in every space
    steps = True
    for u in c:
        ua = R.saturate(u, a)
        steps = steps and T.closure(top, ua) <= R.saturate(u, ua) <= ua
    if not steps:
        return ("fail", I.subset_doc(c, a))
    if not T.is_connected(c):
        return VACUOUS
    ok = all(T.is_dense(c, s) for s in O.all_subsets(n) if s)
    return verdict(ok, lambda: {"space": I.space_doc(c)})


@check("P3.9", "open subsets of a connected space are empty or full", conditioned=True)
def _p39(rng, cfg):
    n = _n(rng, cfg)
    c = _maybe_connected(rng, cfg, n)
    if not T.is_connected(c):
        return VACUOUS
    full = frozenset(range(n))
    bad = [s for s in O.all_subsets(n) if s and M.is_u_open_subset(c, s) and s != full]
    return verdict(not bad, lambda: I.subset_doc(c, bad[0]))


@check("P3.10", "in a connected rich space, maps agreeing at one point are equal", conditioned=True)
def _p310(rng, cfg):
    n, m = _n(rng, cfg), _n(rng, cfg)
    v = _space(rng, cfg, m)
    if rng.random() < 0.7:
        u = G.connected_space(rng, n, cfg.max_generators)
        block = sorted(rng.choice(v.bottom.blocks()))
        alpha = tuple(rng.choice(block) for _ in range(n))
    else:
        u = _space(rng, cfg, n, rich=True)
        alpha = G.values(rng, n, m)
    phi = transverse_map(rng, v)
    beta = _fibre_twin(rng, alpha, phi, keep=1.0 if rng.random() < 0.6 else 0.5)
    a, b = SpaceMap(u, v, alpha), SpaceMap(u, v, beta)
    if not (M.coincidence_set(a, b) and T.is_connected(u) and _coincidence_premises(a, b, phi)):
        return VACUOUS
    return verdict(alpha == beta, lambda: _coincidence_doc(a, b, phi))


# -- uniformisability -----------------------------------------------------------


def pulled_back_topology(values, dst: T.FiniteTopology) -> T.FiniteTopology:
    """Initial topology of ``values`` into ``dst``."""
    return T.FiniteTopology(
        len(values), tuple(T.preimage_open(values, dst.min_nbhd[y]) for y in values)
    )


@check("P4.2", "a space homeomorphic to a class-induced space is uniformised by the induced class")
def _p42(rng, cfg):
    m = _n(rng, cfg)
    v = _space(rng, cfg, m)
    f = G.injection(rng, m, m)
    tv = T.induce_topology(v)
    t = pulled_back_topology(f, tv)
    u = C.induced_class([(f, v)])
    ok = T.is_topological_embedding(f, t, tv) and P.is_equivalently_uniformisable_via(t, u)
    return verdict(ok, lambda: {"map": I.map_doc(SpaceMap(u, v, f)), "topology": I.topology_doc(t)})


@check("P4.3", "topology of the relative class is the subspace topology")
def _p43(rng, cfg):
    n = _n(rng, cfg)
    c = _space(rng, cfg, n)
    a = G.subset(rng, n)
    ok = T.topologies_equal(T.induce_topology(C.relative(c, a)), T.subspace_topology(T.induce_topology(c), a))
    return verdict(ok, lambda: I.subset_doc(c, a))


@check("P4.4", "a space embedded in a class-induced space is uniformised by the induced class")
def _p44(rng, cfg):
    m = _n(rng, cfg)
    n = _n(rng, cfg, hi=m)
    v = _space(rng, cfg, m)
    f = G.injection(rng, n, m)
    tv = T.induce_topology(v)
    t = pulled_back_topology(f, tv)
    u = C.induced_class([(f, v)])
    ok = T.is_topological_embedding(f, t, tv) and P.is_equivalently_uniformisable_via(t, u)
    return verdict(ok, lambda: {"map": I.map_doc(SpaceMap(u, v, f)), "topology": I.topology_doc(t)})


@check("P4.5", "transitivity by threshold sweep, strong triangle law and radius sampling agree")
def _p45(rng, cfg):
    n = _n(rng, cfg, hi=5)
    m = G.pseudometric(rng, n)
    sweep = all(P.is_r_transitive(m, r) for r in P.critical_radii(m))
    ok = sweep == O.strong_triangle(m) == O.transitive_by_sampling(m) == P.is_transitive(m)
    if ok and sweep:
        radii = P.ball_radii(m)
        balls = [P.ball_relation(m, r) for r in radii]
        ok = all(R.refines(balls[i], balls[i + 1]) for i in range(len(balls) - 1))
    return verdict(ok, lambda: I.metric_doc(m))


def _family(rng, cfg, n) -> P.MetricFamily:
    k = rng.randint(1, cfg.max_metrics)
    return P.MetricFamily(n, tuple(G.ultrametric(rng, n) for _ in range(k)))


@check("P4.6", "a space embedded in a product of transitive metric spaces is uniformisable")
def _p46(rng, cfg):
    m = _n(rng, cfg, hi=4)
    fam = _family(rng, cfg, m)
    factors = [P.class_from_metric(d) for d in fam.metrics]
    prod = C.product(factors)
    tp = T.product_topology([P.subbase_topology(P.MetricFamily(m, (d,))) for d in fam.metrics])
    n = _n(rng, cfg, hi=min(4, prod.n))
    g = G.injection(rng, n, prod.n)
    t = pulled_back_topology(g, tp)
    u = C.induced_class([(g, prod)])
    ok = (
        T.topologies_equal(T.induce_topology(prod), tp)
        and T.is_topological_embedding(g, t, tp)
        and P.is_equivalently_uniformisable_via(t, u)
    )
    return verdict(ok, lambda: {"family": I.family_doc(fam), "embedding": list(g), "topology": I.topology_doc(t)})


@check("P4.8", "ball sub-base topology equals the topology of the family's class")
def _p48(rng, cfg):
    n = _n(rng, cfg, hi=5)
    fam = _family(rng, cfg, n)
    ok = T.topologies_equal(P.subbase_topology(fam), T.induce_topology(P.class_from_family(fam)))
    return verdict(ok, lambda: I.family_doc(fam))


@check("P4.9", "the evaluation map of a metric family is a U-embedding")
def _p49(rng, cfg):
    n = _n(rng, cfg, hi=5)
    fam = _family(rng, cfg, n)
    return verdict(M.is_u_embedding(P.evaluation_embedding(fam)), lambda: I.family_doc(fam))


@check("P4.10", "class-induced topology from metrics embeds into the product of metric topologies")
def _p410(rng, cfg):
    n = _n(rng, cfg, hi=4)
    c = C.generate(n, [G.relation(rng, n) for _ in range(rng.randint(1, 2))])
    fam = P.metrics_from_class(c)
    back = P.class_from_family(fam)
    f = P.evaluation_embedding(fam)
    src = T.induce_topology(back)
    dst = T.product_topology([P.subbase_topology(P.MetricFamily(n, (d,))) for d in fam.metrics])
    ok = (
        back.members == c.members | {R.full(n)}
        and T.topologies_equal(src, T.induce_topology(c))
        and T.is_topological_embedding(f.values, src, dst)
    )
    return verdict(ok, lambda: {"space": I.space_doc(c)})


# -- running ------------------------------------------------------------------


def run_check(pc: PropertyCheck, cfg: HarnessConfig) -> CheckResult:
    res = CheckResult(pc.id)
    for i in range(cfg.trials):
        rng = G.trial_rng(pc.id, i, cfg.seed)
        try:
            status, witness = pc.trial(rng, cfg)
        except (UeqError, AssertionError, ValueError, IndexError) as e:
            status, witness = "fail", {"error": f"{type(e).__name__}: {e}"}
        if status == "pass":
            res.passes += 1
        elif status == "vacuous":
            res.vacuous += 1
        else:
            res.failures += 1
            if res.counterexample is None:
                res.counterexample = {"trial": i, "instance": witness}
    return res


def run_checks(ids, cfg: HarnessConfig = HarnessConfig()) -> VerificationReport:
    ids = list(ids)
    unknown = [i for i in ids if i not in CHECKS]
    if unknown:
        raise UnknownCheckId(f"unknown check ids: {', '.join(unknown)}")
    caps = {k: v for k, v in asdict(cfg).items() if k != "seed"}
    report = VerificationReport(cfg.seed, caps)
    for cid in ids:
        report.checks.append(run_check(CHECKS[cid], cfg))
    return report
