"""Ring-lattice boolean networks and their exact state-transition maps.

A global state is an integer whose bit ``i`` holds the state of node ``i``.
Node ``i`` reads the nodes at ring offsets ``-r..+r`` (``k = 2r + 1``); the
parent at offset ``-r`` is the most significant bit of the truth-table index.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

N_NODES = 12
IN_DEGREE = 5


class GenomeFormatError(ValueError):
    """Raised when a genome document cannot be parsed."""


def ring_offsets(k: int = IN_DEGREE) -> tuple[int, ...]:
    if k < 1 or k % 2 == 0:
        raise ValueError(f"in-degree must be odd and positive, got {k}")
    r = k // 2
    return tuple(range(-r, r + 1))


def input_index(state: int, node: int, n: int = N_NODES, k: int = IN_DEGREE) -> int:
    """Pack the parent bits of ``node`` into a truth-table row index."""
    idx = 0
    for off in ring_offsets(k):
        idx = (idx << 1) | ((state >> ((node + off) % n)) & 1)
    return idx


@lru_cache(maxsize=None)
def _index_table(n: int, k: int) -> np.ndarray:
    # (n, 2**n) truth-table row read by each node in each global state
    states = np.arange(1 << n, dtype=np.int64)
    table = np.zeros((n, 1 << n), dtype=np.int64)
    for node in range(n):
        for off in ring_offsets(k):
            table[node] = (table[node] << 1) | ((states >> ((node + off) % n)) & 1)
    table.setflags(write=False)
    return table


@dataclass(frozen=True, eq=False)
class BooleanNetwork:
    """``n`` truth tables of ``2**k`` bits on the fixed ring lattice.

    ``tables[i, j]`` is the next state of node ``i`` when its parents
    read ``j``.
    """

    tables: np.ndarray

    def __post_init__(self):
        t = np.array(self.tables, dtype=np.uint8)
        if t.ndim != 2:
            raise ValueError("tables must be a 2-d array (nodes x rows)")
        n, rows = t.shape
        k = rows.bit_length() - 1
        if rows != 1 << k or k % 2 == 0:
            raise ValueError(f"table length must be 2**k with odd k, got {rows}")
        if n < 1:
            raise ValueError("network needs at least one node")
        if np.any(t > 1):
            raise ValueError("truth-table entries must be 0 or 1")
        t.setflags(write=False)
        object.__setattr__(self, "tables", t)

    @property
    def n(self) -> int:
        return self.tables.shape[0]

    @property
    def k(self) -> int:
        return self.tables.shape[1].bit_length() - 1

    def __eq__(self, other):
        if not isinstance(other, BooleanNetwork):
            return NotImplemented
        return np.array_equal(self.tables, other.tables)

    def __hash__(self):
        return hash(self.tables.tobytes())

    def to_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "tables": encode_tables(self.tables)}

    @classmethod
    def from_dict(cls, doc: dict) -> "BooleanNetwork":
        try:
            n, k, tables = int(doc["n"]), int(doc["k"]), doc["tables"]
        except (KeyError, TypeError, ValueError) as exc:
            raise GenomeFormatError(f"genome needs integer 'n', 'k' and 'tables': {exc}") from None
        if not isinstance(tables, list) or len(tables) != n:
            raise GenomeFormatError(f"expected {n} table strings")
        return cls(decode_tables(tables, k))


def encode_tables(tables: np.ndarray) -> list[str]:
    rows = tables.shape[1]
    if rows % 4:
        raise ValueError("hex encoding needs a multiple of 4 table rows")
    width = rows // 4
    out = []
    for row in tables:
        value = int("".join(str(int(b)) for b in row), 2)
        out.append(f"{value:0{width}x}")
    return out


def decode_tables(hexes: list[str], k: int) -> np.ndarray:
    rows = 1 << k
    width = rows // 4
    tables = np.zeros((len(hexes), rows), dtype=np.uint8)
    for i, h in enumerate(hexes):
        if not isinstance(h, str) or len(h) != width:
            raise GenomeFormatError(f"table {i}: expected {width} hex digits, got {h!r}")
        try:
            value = int(h, 16)
        except ValueError:
            raise GenomeFormatError(f"table {i}: not hexadecimal: {h!r}") from None
        tables[i] = [(value >> (rows - 1 - j)) & 1 for j in range(rows)]
    return tables


def save_genome(net: BooleanNetwork, path) -> None:
    Path(path).write_text(json.dumps(net.to_dict()) + "\n")


def load_genome(path) -> BooleanNetwork:
    try:
        doc = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise GenomeFormatError(f"{path}: invalid JSON at line {exc.lineno}: {exc.msg}") from None
    try:
        return BooleanNetwork.from_dict(doc)
    except (GenomeFormatError, ValueError) as exc:
        raise GenomeFormatError(f"{path}: {exc}") from None


def step(net: BooleanNetwork, state: int) -> int:
    """Synchronous one-step update of a single global state."""
    nxt = 0
    for i in range(net.n):
        nxt |= int(net.tables[i, input_index(state, i, net.n, net.k)]) << i
    return nxt


def transition_map(net: BooleanNetwork) -> np.ndarray:
    """Successor of every global state, as a read-only int64 array of length ``2**n``."""
    idx = _index_table(net.n, net.k)
    bits = np.take_along_axis(net.tables, idx, axis=1).astype(np.int64)
    nxt = (bits << np.arange(net.n, dtype=np.int64)[:, None]).sum(axis=0)
    nxt.setflags(write=False)
    return nxt


def random_network(rng: np.random.Generator, n: int = N_NODES, k: int = IN_DEGREE) -> BooleanNetwork:
    return BooleanNetwork(rng.integers(0, 2, size=(n, 1 << k), dtype=np.uint8))


def _table_from_rule(rule, n: int, k: int) -> BooleanNetwork:
    rows = np.arange(1 << k)
    return BooleanNetwork(np.tile(rule(rows).astype(np.uint8), (n, 1)))


def constant_network(value: int = 0, n: int = N_NODES, k: int = IN_DEGREE) -> BooleanNetwork:
    return _table_from_rule(lambda rows: np.full_like(rows, value), n, k)


def identity_network(n: int = N_NODES, k: int = IN_DEGREE) -> BooleanNetwork:
    """Every node copies its own current state."""
    return _table_from_rule(lambda rows: (rows >> (k // 2)) & 1, n, k)


def shift_network(n: int = N_NODES, k: int = IN_DEGREE) -> BooleanNetwork:
    """Every node copies its -1 neighbour: a cyclic left rotation of the state."""
    return _table_from_rule(lambda rows: (rows >> (k // 2 + 1)) & 1, n, k)
