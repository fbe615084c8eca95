import itertools

import pytest
from hypothesis import given, strategies as st

from ueq import classes as C
from ueq import oracles as O
from ueq import pseudometrics as P
from ueq import relations as R
from ueq import topology as T
from ueq.dot import emit_dot
from ueq.errors import CarrierMismatch, EmptySubset
from ueq.maps import SpaceMap, is_continuous

from conftest import functions, spaces

U4 = R.from_blocks(4, [{0, 1}, {2, 3}])


def open_family(t):
    return frozenset(t.open_sets())


def test_induced_topology_examples():
    c = C.generate(4, [U4])
    assert O.base_opens(c) == {frozenset(), frozenset({0, 1}), frozenset({2, 3}), frozenset(range(4))}
    assert open_family(T.induce_topology(c)) == O.base_opens(c)
    assert T.induce_topology(C.generate(3, [R.delta(3)])) == T.discrete(3)
    assert T.induce_topology(C.generate(3, [R.full(3)])) == T.indiscrete(3)


def test_from_opens_and_validation():
    sierpinski = T.from_opens(2, [[], [0], [0, 1]])
    assert sierpinski.min_nbhd == (0b01, 0b11)
    with pytest.raises(ValueError):
        T.from_opens(2, [[0], [0, 1]])
    with pytest.raises(ValueError):
        T.from_opens(3, [[], [0], [1], [0, 1, 2]])
    with pytest.raises(ValueError):
        T.FiniteTopology(2, (0b10, 0b10))
    with pytest.raises(ValueError):
        T.FiniteTopology(3, (0b011, 0b110, 0b100))


def test_closure_and_density_examples():
    c = C.generate(4, [U4])
    t = T.induce_topology(c)
    assert T.closure(t, {0}) == {0, 1}
    assert O.closure_by_complement(O.base_opens(c), 4, {0, 2}) == frozenset(range(4))
    assert T.is_dense(c, {0, 2})
    assert not T.is_dense(c, {0, 1})
    assert T.is_dense(C.generate(3, [R.full(3)]), {1})
    assert not T.is_dense(C.generate(3, [R.delta(3)]), {0, 1})
    assert T.is_dense(C.generate(3, [R.delta(3)]), range(3))


def test_connectedness_examples():
    assert T.is_connected(C.generate(3, [R.full(3)]))
    assert not T.is_connected(C.generate(4, [U4]))
    assert not T.is_connected(C.generate(4, [U4, R.full(4)]))
    assert T.is_connected(C.generate(1, [R.delta(1)]))
    sierpinski = T.from_opens(2, [[], [0], [0, 1]])
    assert T.topology_connected(sierpinski)
    assert not T.topology_connected(T.discrete(2))


def test_subspace_examples():
    t = T.induce_topology(C.generate(4, [U4]))
    assert T.subspace_topology(t, {1, 2}) == T.discrete(2)
    assert T.subspace_topology(t, {0, 1}) == T.indiscrete(2)
    with pytest.raises(EmptySubset):
        T.subspace_topology(t, [])


def test_product_topology_example():
    p = T.product_topology([T.discrete(2), T.indiscrete(2)])
    # mixed radix (a, b) -> 2a + b; opens are {}, {0,1}, {2,3}, all
    assert open_family(p) == {frozenset(), frozenset({0, 1}), frozenset({2, 3}), frozenset(range(4))}
    lifted = C.product([C.generate(2, [R.delta(2)]), C.generate(2, [R.full(2)])])
    assert T.induce_topology(lifted) == p


def test_topologies_equal_mismatch():
    with pytest.raises(CarrierMismatch):
        T.topologies_equal(T.discrete(2), T.discrete(3))


def test_specialization_and_dot():
    sierpinski = T.from_opens(2, [[], [0], [0, 1]])
    assert T.specialization_edges(sierpinski) == [(1, 0)]
    assert T.closure(sierpinski, {0}) == {0, 1}
    dot = emit_dot(sierpinski)
    assert dot.startswith("digraph specialization {")
    assert "1 -> 0;" in dot and "0 -> 1;" not in dot
    assert emit_dot(sierpinski) == dot


def test_sierpinski_is_not_uniformisable():
    sierpinski = T.from_opens(2, [[], [0], [0, 1]])
    assert P.search_uniformising_class(sierpinski, max_generators=2) is None
    assert P.search_uniformising_class(T.discrete(3)) is not None


def all_topologies(n):
    subsets = range(1 << n)
    found = set()
    # every finite topology is generated by its minimal neighbourhoods
    for nb in itertools.product(subsets, repeat=n):
        try:
            found.add(T.FiniteTopology(n, nb))
        except ValueError:
            pass
    return found


@pytest.mark.parametrize("n", [1, 2, 3])
def test_uniformisable_iff_specialization_is_symmetric(n):
    for t in all_topologies(n):
        edges = set(T.specialization_edges(t))
        symmetric = all((y, x) in edges for x, y in edges)
        assert (P.search_uniformising_class(t, max_generators=1) is not None) == symmetric


def test_topology_counts_match_known_sequence():
    # 1, 4, 29 labelled topologies on 1, 2, 3 points
    assert [len(all_topologies(n)) for n in (1, 2, 3)] == [1, 4, 29]


@given(spaces(max_n=4))
def test_induced_topology_matches_literal_construction(c):
    t = open_family(T.induce_topology(c))
    assert t == O.literal_opens(c) == O.base_opens(c)


@given(spaces(max_n=4), st.data())
def test_closure_matches_complement_oracle(c, data):
    s = data.draw(st.sets(st.integers(0, c.n - 1)))
    t = T.induce_topology(c)
    assert T.closure(t, s) == O.closure_by_complement(O.literal_opens(c), c.n, s)
    assert T.is_dense(c, s) == O.is_dense_literal(c, s)


@given(spaces(max_n=4))
def test_connected_iff_no_proper_clopen(c):
    clopen = O.clopen_sets(O.literal_opens(c), c.n)
    assert T.is_connected(c) == (len(clopen) == 2)


@given(spaces(max_n=5), st.data())
def test_relative_topology_is_subspace_topology(c, data):
    a = data.draw(st.sets(st.integers(0, c.n - 1), min_size=1))
    assert T.induce_topology(C.relative(c, a)) == T.subspace_topology(T.induce_topology(c), a)


@given(st.lists(spaces(max_n=3, max_generators=3), min_size=1, max_size=3))
def test_product_topology_matches_induced(factors):
    lhs = T.induce_topology(C.product(factors))
    rhs = T.product_topology([T.induce_topology(c) for c in factors])
    assert T.topologies_equal(lhs, rhs)


@given(st.data())
def test_continuous_maps_are_topologically_continuous(data):
    n, m = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4))
    u, v = data.draw(spaces(n=n)), data.draw(spaces(n=m))
    f = data.draw(functions(n, m))
    if is_continuous(SpaceMap(u, v, f)):
        assert T.is_topologically_continuous(f, T.induce_topology(u), T.induce_topology(v))
