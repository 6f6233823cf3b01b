from __future__ import annotations

import networkx as nx
import numpy as np
import pytest

from factorseq.graph import SmallGraph


def to_nx(g: SmallGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def random_graph(rng: np.random.Generator, n: int, p: float | None = None) -> SmallGraph:
    p = rng.uniform(0.15, 0.85) if p is None else p
    return SmallGraph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


K4 = SmallGraph.complete(4)
STAR = SmallGraph.star(3)  # center 0
C5 = SmallGraph.cycle(5)
P3 = SmallGraph.path(3)
