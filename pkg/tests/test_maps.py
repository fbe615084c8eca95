import pytest
from hypothesis import given, strategies as st

from ueq import classes as C
from ueq import maps as M
from ueq import oracles as O
from ueq import relations as R
from ueq.errors import CarrierMismatch, EmptySubset, NotLeftInverse
from ueq.maps import SpaceMap

from conftest import functions, spaces


def cls(n, *gens):
    return C.generate(n, gens)


def discrete_class(n):
    return C.generate(n, R.all_relations(n))


def indiscrete(n):
    return cls(n, R.full(n))


def delta_class(n):
    return cls(n, R.delta(n))


# literal readings of the definitions, used as oracles


def continuous_literal(f):
    return all(O.preimage(f.values, v) in f.source.members for v in f.target.members)


def open_literal(f):
    n = f.source.n
    return all(
        any(
            all(O.block(v, f.values[x]) <= {f.values[y] for y in O.block(u, x)} for x in range(n))
            for v in f.target.members
        )
        for u in f.source.members
    )


def u_surjection_literal(f):
    return all(
        any(y in O.block(v, f.values[x]) for x in range(f.source.n))
        for y in range(f.target.n)
        for v in f.target.members
    )


def test_continuity_examples():
    u = cls(4, R.from_blocks(4, [{0, 1}, {2, 3}]))
    assert M.is_continuous(SpaceMap(u, u, (0, 1, 2, 3)))
    assert M.is_continuous(SpaceMap(indiscrete(3), indiscrete(2), (0, 1, 0)))
    assert not M.is_continuous(SpaceMap(delta_class(3), indiscrete(2), (0, 1, 0)))
    f = SpaceMap(indiscrete(2), delta_class(2), (0, 1))
    assert continuous_literal(f) is False
    assert M.is_continuous(f) is False


def test_open_map_examples():
    disc = discrete_class(3)
    for vals in [(0, 0, 0, 0), (2, 1, 1, 0), (0, 1, 2, 2)]:
        assert M.is_open_map(SpaceMap(cls(4, R.from_blocks(4, [{0, 1}, {2, 3}])), disc, vals))
    u = cls(3, R.from_blocks(3, [{0, 2}, {1}]))
    assert M.is_open_map(SpaceMap(u, u, (0, 1, 2)))
    const = SpaceMap(delta_class(2), indiscrete(2), (0, 0))
    assert open_literal(const) is False
    assert M.is_open_map(const) is False


def test_u_surjection_examples():
    assert M.is_u_surjection(SpaceMap(delta_class(3), delta_class(2), (0, 1, 1)))
    f = SpaceMap(delta_class(2), indiscrete(3), (0, 0))
    assert u_surjection_literal(f) and M.is_u_surjection(f)
    g = SpaceMap(delta_class(2), delta_class(3), (0, 1))
    assert not u_surjection_literal(g) and not M.is_u_surjection(g)


def test_u_equivalence_examples():
    u = cls(3, R.from_blocks(3, [{0, 2}, {1}]))
    assert M.is_u_equivalence(SpaceMap(u, u, (0, 1, 2)))
    assert not M.is_u_equivalence(SpaceMap(discrete_class(3), indiscrete(3), (0, 1, 2)))
    assert not M.is_u_equivalence(SpaceMap(u, u, (0, 0, 2)))


def test_embedding_examples():
    x = cls(5, R.from_blocks(5, [{0, 1, 4}, {2, 3}]), R.from_blocks(5, [{0, 2}, {1, 3, 4}]))
    a = (1, 2, 4)
    assert M.is_u_embedding(SpaceMap(C.relative(x, a), x, a))
    assert not M.is_u_embedding(SpaceMap(discrete_class(2), indiscrete(2), (0, 1)))
    v = cls(3, R.from_blocks(3, [{0, 1}, {2}]))
    f = (2, 0, 1)
    u = C.induced_class([(f, v)])
    assert M.embedding_by_characterization(SpaceMap(u, v, f))
    assert M.is_u_embedding(SpaceMap(u, v, f))


def test_left_inverse_examples():
    y = cls(3, R.from_blocks(3, [{0}, {1, 2}]))
    f, g = (0, 1), (0, 1, 1)
    x = C.induced_class([(f, y)])
    fm, gm = SpaceMap(x, y, f), SpaceMap(y, x, g)
    assert M.is_continuous(fm) and M.is_continuous(gm)
    assert M.is_u_embedding(fm)
    assert M.left_inverse_embedding_check(fm, gm)
    ident = SpaceMap(y, y, (0, 1, 2))
    assert M.left_inverse_embedding_check(ident, ident)
    with pytest.raises(NotLeftInverse):
        M.left_inverse_embedding_check(fm, SpaceMap(y, x, (1, 0, 0)))


def test_transverse_examples():
    u = cls(3, R.from_blocks(3, [{0, 1}, {2}]))
    assert M.is_transverse(u, (2, 0, 1))
    # constant map: kernel is everything, so the member itself must be the diagonal
    assert O.meet(R.full(3), R.delta(3)) == R.delta(3)
    assert M.is_transverse(delta_class(3), (0, 0, 0))
    assert O.meet(R.full(3), R.full(3)) != R.delta(3)
    assert not M.is_transverse(indiscrete(3), (0, 0, 0))


def test_coincidence_examples():
    s = delta_class(3)
    t = delta_class(2)
    a = SpaceMap(s, t, (0, 1, 0))
    assert M.coincidence_set(a, a) == {0, 1, 2}
    assert M.coincidence_set(a, SpaceMap(s, t, (1, 0, 1))) == frozenset()
    assert M.coincidence_set(a, SpaceMap(s, t, (0, 0, 0))) == {0, 2}
    with pytest.raises(CarrierMismatch):
        M.coincidence_set(a, SpaceMap(delta_class(2), t, (0, 0)))


def test_u_open_subset_examples():
    rich = cls(4, R.full(4), R.from_blocks(4, [{0, 1}, {2, 3}]))
    assert M.is_u_open_subset(rich, range(4))
    assert M.has_open_core(rich, {0, 1})
    assert M.is_u_open_subset(rich, {0, 1})
    assert not M.has_open_core(indiscrete(4), {0, 1})
    assert not M.is_u_open_subset(indiscrete(4), {0, 1})
    with pytest.raises(EmptySubset):
        M.is_u_open_subset(rich, [])


@given(st.data())
def test_predicates_match_literal_definitions(data):
    n, m = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4))
    f = SpaceMap(data.draw(spaces(n=n, max_generators=3)), data.draw(spaces(n=m, max_generators=3)), data.draw(functions(n, m)))
    assert M.is_continuous(f) == continuous_literal(f)
    assert M.is_open_map(f) == open_literal(f)
    assert M.is_u_surjection(f) == u_surjection_literal(f)


@given(st.data())
def test_embedding_characterizations_agree(data):
    n = data.draw(st.integers(1, 4))
    m = data.draw(st.integers(n, 5))
    v = data.draw(spaces(n=m, max_generators=3))
    vals = tuple(data.draw(st.permutations(range(m)))[:n])
    u = C.induced_class([(vals, v)]) if data.draw(st.booleans()) else data.draw(spaces(n=n, max_generators=3))
    f = SpaceMap(u, v, vals)
    assert M.embedding_by_definition(f) == M.embedding_by_characterization(f)


@given(st.lists(spaces(max_n=3, max_generators=2), min_size=1, max_size=3), st.data())
def test_map_into_product_is_continuous_iff_coordinates_are(factors, data):
    sizes = [c.n for c in factors]
    prod = C.product(factors)
    n = data.draw(st.integers(1, 4))
    a = data.draw(spaces(n=n, max_generators=3))
    phi = data.draw(functions(n, prod.n))
    coords = [tuple(R.decode(z, sizes)[j] for z in phi) for j in range(len(sizes))]
    assert M.is_continuous(SpaceMap(a, prod, phi)) == all(
        M.is_continuous(SpaceMap(a, c, cj)) for cj, c in zip(coords, factors)
    )


@given(spaces(), st.data())
def test_open_subset_three_way_for_rich_classes(c, data):
    c = C.generate(c.n, list(c.generators) + [R.full(c.n)])
    a = data.draw(st.sets(st.integers(0, c.n - 1), min_size=1))
    by_map = M.is_open_map(M.inclusion_map(c, a))
    assert by_map == M.refines_traces(c, a) == M.has_open_core(c, a)
