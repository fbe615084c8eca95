import hashlib
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ueq import classes as C
from ueq import generators as G
from ueq import instances as I
from ueq import pseudometrics as P
from ueq import relations as R
from ueq import topology as T
from ueq.errors import SchemaError, ValidationError
from ueq.maps import SpaceMap

from conftest import functions, spaces

SPACE = {"kind": "space", "carrier": 4, "generators": [[[0, 1], [2, 3]], [[0, 1, 2], [3]]]}


def parse(doc):
    return I.parse_instance(json.dumps(doc))


def test_parse_space():
    inst = parse(SPACE)
    assert inst.kind == "space"
    assert inst.value == C.generate(4, [R.from_blocks(4, [{0, 1}, {2, 3}]), R.from_blocks(4, [{0, 1, 2}, {3}])])
    assert len(inst.value) == 3


def test_parse_other_kinds():
    m = parse({"kind": "map", "source": {"carrier": 2, "generators": [[[0, 1]]]}, "target": SPACE, "values": [0, 3]})
    assert isinstance(m.value, SpaceMap) and m.value.values == (0, 3)
    d = parse({"kind": "metric", "carrier": 2, "dist": [[0, "3/2"], [" 3 / 2 ", 0]]})
    assert d.value[0][1] == Fraction(3, 2)
    fam = parse({"kind": "family", "carrier": 2, "metrics": [[[0, 1], [1, 0]]]})
    assert fam.value.metrics[0].dist == P.d_alpha(2, 1).dist
    t = parse({"kind": "topology", "carrier": 2, "opens": [[], [0], [0, 1]]})
    assert t.value == T.FiniteTopology(2, (0b01, 0b11))
    t2 = parse({"kind": "topology", "carrier": 2, "min_nbhd": [[0], [0, 1]]})
    assert t2.value == t.value
    s = parse({"kind": "subset", "space": SPACE, "elements": [2, 0]})
    assert s.value[1] == {0, 2}


@pytest.mark.parametrize(
    "doc",
    [
        {"carrier": 2, "generators": [[[0, 1]]]},
        {"kind": "nope"},
        {"kind": "space", "carrier": 0, "generators": [[[0]]]},
        {"kind": "space", "carrier": 2, "generators": []},
        {"kind": "space", "carrier": 2, "generators": [[[0, -1]]]},
        {"kind": "metric", "carrier": 2, "dist": [[0, "a"], ["a", 0]]},
        {"kind": "topology", "carrier": 2},
        {"kind": "topology", "carrier": 2, "opens": [[]], "min_nbhd": [[0], [1]]},
    ],
)
def test_schema_errors(doc):
    with pytest.raises(SchemaError):
        parse(doc)


@pytest.mark.parametrize(
    "doc",
    [
        {"kind": "space", "carrier": 3, "generators": [[[0, 1], [1, 2]]]},
        {"kind": "space", "carrier": 3, "generators": [[[0, 1]]]},
        {"kind": "space", "carrier": 4, "generators": [[[0, 1, 2, 3]]], "factors": [3, 2]},
        {"kind": "map", "source": {"carrier": 2, "generators": [[[0, 1]]]}, "target": SPACE, "values": [0]},
        {"kind": "map", "source": {"carrier": 2, "generators": [[[0, 1]]]}, "target": SPACE, "values": [0, 4]},
        {"kind": "metric", "carrier": 2, "dist": [[0, 1], [2, 0]]},
        {"kind": "metric", "carrier": 3, "dist": [[0, 1], [1, 0]]},
        {"kind": "family", "carrier": 3, "metrics": [[[0, 1, 2], [1, 0, 1], [2, 1, 0]]]},
        {"kind": "topology", "carrier": 3, "opens": [[], [0], [1], [0, 1, 2]]},
        {"kind": "topology", "carrier": 2, "min_nbhd": [[1], [1]]},
        {"kind": "subset", "space": SPACE, "elements": [5]},
    ],
)
def test_validation_errors(doc):
    with pytest.raises(ValidationError):
        parse(doc)


def test_malformed_json_reports_position():
    with pytest.raises(SchemaError, match="line 2"):
        I.parse_instance('{"kind": "space",\n  carrier: 3}')


def test_load_from_file(tmp_path):
    p = tmp_path / "s.json"
    p.write_text(json.dumps(SPACE))
    assert I.load(p).value == parse(SPACE).value


def test_dumps_is_canonical():
    assert I.dumps({"b": 1, "a": [2]}) == '{"a": [2], "b": 1}'


@given(spaces())
def test_space_round_trip(c):
    assert parse(I.space_doc(c)).value == c
    assert parse(I.members_doc(c)).value == c


@given(st.data())
def test_map_and_subset_round_trip(data):
    n, m = data.draw(st.integers(1, 4)), data.draw(st.integers(1, 4))
    f = SpaceMap(data.draw(spaces(n=n)), data.draw(spaces(n=m)), data.draw(functions(n, m)))
    back = parse(I.map_doc(f)).value
    assert (back.source, back.target, back.values) == (f.source, f.target, f.values)
    a = data.draw(st.frozensets(st.integers(0, n - 1)))
    assert parse(I.subset_doc(f.source, a)).value == (f.source, a)


@given(st.integers(0, 2**32), st.integers(1, 5))
def test_metric_round_trip(seed, n):
    rng = random.Random(seed)
    d = G.ultrametric(rng, n)
    assert parse(I.metric_doc(d)).value == d.dist
    fam = P.MetricFamily(n, (d, G.ultrametric(rng, n)))
    assert parse(I.family_doc(fam)).value == fam


@given(spaces())
def test_topology_round_trip(c):
    t = T.induce_topology(c)
    assert parse(I.topology_doc(t)).value == t


@given(st.integers(0, 2**32), st.integers(1, 6))
def test_generators_are_sound(seed, n):
    rng = random.Random(seed)
    assert C.is_separated(G.separated_space(rng, n))
    assert C.bottom(G.connected_space(rng, n)) == R.full(n)
    assert C.is_rich(G.space(rng, n, rich=True))
    assert R.delta(n) in G.space(rng, n, discrete=True)
    u = G.relation(rng, n)
    assert R.refines(G.refinement(rng, u), u)
    m = rng.randint(1, n)
    assert set(G.surjection(rng, n, m)) == set(range(m))
    inj = G.injection(rng, m, n)
    assert len(set(inj)) == m
    assert G.subset(rng, n)
    assert P.is_transitive(G.ultrametric(rng, n))
    P.as_matrix(G.line_metric(rng, n))


def test_sub_seeds_are_stable():
    assert G.sub_seed("P2.6", 0, 42) == G.sub_seed("P2.6", 0, 42)
    assert G.sub_seed("P2.6", 0, 42) != G.sub_seed("P2.6", 1, 42)
    assert G.sub_seed("P2.6", 0, 42) != G.sub_seed("P2.7", 0, 42)
    # first eight bytes of the sha256 digest, big-endian
    expected = int.from_bytes(hashlib.sha256(b"P2.6|0|42").digest()[:8], "big")
    assert G.sub_seed("P2.6", 0, 42) == expected
