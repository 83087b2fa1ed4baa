import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolsyn.network import (
    BooleanNetwork,
    GenomeFormatError,
    constant_network,
    identity_network,
    input_index,
    load_genome,
    random_network,
    save_genome,
    shift_network,
    step,
    transition_map,
)


def naive_step(tables, state, n):
    """Per-node evaluator built from explicit neighbour lists and bit strings."""
    bits = [(state >> i) & 1 for i in range(n)]
    out = 0
    for node in range(n):
        parents = [(node - 2) % n, (node - 1) % n, node, (node + 1) % n, (node + 2) % n]
        row = int("".join(str(bits[p]) for p in parents), 2)
        out += int(tables[node][row]) * 2**node
    return out


def rotate_left(s, n=12):
    return ((s << 1) | (s >> (n - 1))) & ((1 << n) - 1)


def test_input_index_examples():
    assert input_index(0, 0) == 0
    assert input_index(4095, 5) == 31
    assert input_index(1 << 11, 0) == 8


def test_input_index_exhaustive_against_string_packing():
    for state in range(0, 4096, 7):
        for node in range(12):
            parents = [(node + off) % 12 for off in (-2, -1, 0, 1, 2)]
            expect = int("".join(str((state >> p) & 1) for p in parents), 2)
            assert input_index(state, node) == expect


def test_step_examples(identity, constant, shift):
    for s in (0, 1, 1234, 4095):
        assert step(constant, s) == 0
        assert step(identity, s) == s
    assert step(shift, 0b000000000001) == 0b000000000010


def test_step_matches_naive_evaluator():
    rng = np.random.default_rng(7)
    for _ in range(5):
        net = random_network(rng)
        for s in rng.integers(0, 4096, size=50):
            assert step(net, int(s)) == naive_step(net.tables, int(s), 12)


def test_transition_map_examples(identity, constant, shift):
    assert np.all(transition_map(constant) == 0)
    assert np.array_equal(transition_map(identity), np.arange(4096))
    tm = transition_map(shift)
    assert all(tm[s] == rotate_left(s) for s in range(4096))


def test_transition_map_agrees_with_step_exhaustively():
    net = random_network(np.random.default_rng(11))
    tm = transition_map(net)
    assert len(tm) == 4096 and tm.max() < 4096
    assert all(tm[s] == step(net, s) for s in range(4096))


@pytest.mark.parametrize("n", [3, 5, 8])
def test_transition_map_small_n(n):
    net = random_network(np.random.default_rng(n), n=n)
    tm = transition_map(net)
    assert len(tm) == 1 << n
    assert all(tm[s] == naive_step(net.tables, s, n) for s in range(1 << n))


def test_step_is_pure():
    net = random_network(np.random.default_rng(3))
    assert step(net, 999) == step(net, 999)
    assert np.array_equal(transition_map(net), transition_map(net))


def test_random_network_seeding():
    a = random_network(np.random.default_rng(5))
    b = random_network(np.random.default_rng(5))
    c = random_network(np.random.default_rng(6))
    assert a == b
    assert a != c
    assert a.tables.shape == (12, 32)


def test_random_network_bits_are_fair():
    rng = np.random.default_rng(0)
    frac = np.mean([random_network(rng).tables.mean() for _ in range(1000)])
    assert abs(frac - 0.5) < 0.02


def test_network_is_immutable():
    net = identity_network()
    with pytest.raises(ValueError):
        net.tables[0, 0] = 1


@pytest.mark.parametrize(
    "bad",
    [np.zeros((12, 30)), np.zeros((12, 16)), np.full((12, 32), 2), np.zeros(32)],
)
def test_network_rejects_bad_tables(bad):
    with pytest.raises(ValueError):
        BooleanNetwork(bad)


@given(st.integers(min_value=0, max_value=2**63 - 1))
def test_genome_round_trip(seed):
    net = random_network(np.random.default_rng(seed))
    doc = json.loads(json.dumps(net.to_dict()))
    assert BooleanNetwork.from_dict(doc) == net


def test_genome_hex_layout():
    doc = shift_network().to_dict()
    assert doc["n"] == 12 and doc["k"] == 5
    # row j -> bit of the -1 parent, i.e. bit 3 of j; entry 0 is the most significant hex bit
    expect = int("".join(str((j >> 3) & 1) for j in range(32)), 2)
    assert doc["tables"] == [f"{expect:08x}"] * 12
    assert constant_network(1).to_dict()["tables"][0] == "ffffffff"


def test_genome_file_round_trip(tmp_path):
    net = random_network(np.random.default_rng(99))
    save_genome(net, tmp_path / "g.json")
    assert load_genome(tmp_path / "g.json") == net


@pytest.mark.parametrize(
    "text",
    [
        "{not json",
        '{"n": 12, "k": 5}',
        '{"n": 2, "k": 5, "tables": ["ffffffff"]}',
        '{"n": 1, "k": 5, "tables": ["xyz"]}',
        '{"n": 1, "k": 5, "tables": ["zzzzzzzz"]}',
    ],
)
def test_malformed_genomes(tmp_path, text):
    p = tmp_path / "bad.json"
    p.write_text(text)
    with pytest.raises(GenomeFormatError, match="bad.json"):
        load_genome(p)
