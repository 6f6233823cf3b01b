"""Small exact labeled graphs stored as adjacency bit-rows.

Vertex ``i`` of an ``n``-vertex graph is the integer ``i`` in ``range(n)``;
bit ``j`` of ``rows[i]`` is set iff ``ij`` is an edge.  ``n`` is capped at
:data:`MAX_VERTICES` so every row fits in a 16-bit word and exhaustive
subset scans stay cheap.

Two text encodings are supported:

* the edge-list format (first line ``n``, then one ``u v`` pair per line,
  1-based), and
* graph6 (see ``docs/graph6.md`` for the exact bit layout).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import ParseError, RangeError, TooLarge

MAX_VERTICES = 16


@dataclass(frozen=True)
class SmallGraph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise TooLarge(f"graph has {self.n} vertices; limit is {MAX_VERTICES}")
        if len(self.rows) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~full:
                raise ValueError(f"row {i} references a vertex >= n")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(row):
                if not self.rows[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")

    @classmethod
    def _trusted(cls, n: int, rows: Sequence[int]) -> SmallGraph:
        # Skips validation; only for rows built by this package's own searches.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> SmallGraph:
        if n > MAX_VERTICES:
            raise TooLarge(f"graph has {n} vertices; limit is {MAX_VERTICES}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise RangeError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, matrix) -> SmallGraph:
        m = np.asarray(matrix, dtype=bool)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("adjacency matrix must be square")
        rows = tuple(int(sum(1 << int(j) for j in np.flatnonzero(r))) for r in m)
        return cls(m.shape[0], rows)

    @classmethod
    def empty(cls, n: int) -> SmallGraph:
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> SmallGraph:
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << i) for i in range(n)))

    @classmethod
    def cycle(cls, n: int) -> SmallGraph:
        if n < 3:
            raise RangeError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> SmallGraph:
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def star(cls, leaves: int) -> SmallGraph:
        """``K_{1,leaves}`` with the centre at vertex 0."""
        return cls.from_edges(leaves + 1, ((0, j) for j in range(1, leaves + 1)))

    # -- queries ------------------------------------------------------------

    @property
    def vertices(self) -> int:
        """Bitmask of all vertices."""
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(r.bit_count() for r in self.rows)

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees()))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i]) if j > i]

    @property
    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        for i, j in self.edges():
            m[i, j] = m[j, i] = True
        return m

    # -- constructions ------------------------------------------------------

    def union(self, other: SmallGraph) -> SmallGraph:
        """Disjoint union; ``other``'s vertices are shifted past ours."""
        shift = self.n
        rows = list(self.rows) + [r << shift for r in other.rows]
        return SmallGraph(self.n + other.n, tuple(rows))

    def join(self, other: SmallGraph) -> SmallGraph:
        """Disjoint union plus every edge between the two parts."""
        g = self.union(other)
        mine = (1 << self.n) - 1
        theirs = ((1 << other.n) - 1) << self.n
        rows = [r | theirs if i < self.n else r | mine for i, r in enumerate(g.rows)]
        return SmallGraph(g.n, tuple(rows))

    def with_edges(self, edges: Iterable[tuple[int, int]]) -> SmallGraph:
        rows = list(self.rows)
        for u, v in edges:
            if u == v or rows[u] >> v & 1:
                raise ValueError(f"cannot add edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return SmallGraph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> SmallGraph:
        """Return the graph with old vertex ``v`` renamed ``perm[v]``."""
        return SmallGraph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __str__(self) -> str:
        return f"SmallGraph(n={self.n}, edges={self.edges()})"


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- text formats -----------------------------------------------------------


def format_edge_list(g: SmallGraph) -> str:
    lines = [str(g.n)] + [f"{u + 1} {v + 1}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> SmallGraph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty graph text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ParseError(f"first line must be the vertex count, got {lines[0]!r}") from None
    if n < 0:
        raise ParseError("vertex count must be nonnegative")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"edge line must be 'u v', got {ln!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {ln!r}") from None
        if not (1 <= u <= n and 1 <= v <= n) or u == v:
            raise ParseError(f"bad edge {ln!r} for n={n}")
        edges.append((u - 1, v - 1))
    return SmallGraph.from_edges(n, edges)


def to_graph6(g: SmallGraph) -> str:
    # n <= 16 always fits the single-byte size header.
    bits = [g.rows[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        out.append(chr(v + 63))
    return "".join(out)


def from_graph6(text: str) -> SmallGraph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise ParseError("graph6 text must be nonempty printable characters 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise ParseError("multi-byte graph6 sizes exceed the vertex limit")
    npairs = n * (n - 1) // 2
    if len(s) - 1 != -(-npairs // 6):
        raise ParseError(f"graph6 body length {len(s) - 1} does not match n={n}")
    bits = []
    for c in s[1:]:
        v = ord(c) - 63
        bits.extend(v >> (5 - k) & 1 for k in range(6))
    if any(bits[npairs:]):
        raise ParseError("graph6 padding bits must be zero")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return SmallGraph.from_edges(n, edges)


def read_graph(text: str) -> SmallGraph:
    """Parse either encoding; a first line that is a bare integer means edge list."""
    body = [ln for ln in text.splitlines() if ln.split("#", 1)[0].strip()]
    if not body:
        raise ParseError("empty graph text")
    if body[0].strip().lstrip("-").isdigit():
        return parse_edge_list(text)
    if len(body) != 1:
        raise ParseError("graph6 input must be a single line")
    return from_graph6(body[0])
