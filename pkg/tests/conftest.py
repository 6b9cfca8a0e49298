"""Shared helpers: seeded random long-edge graphs for property sweeps."""

from __future__ import annotations

import random

from longedge import LongEdgeGraph, make_graph

# (length, weight) pairs for a single edge of each small cogenus
_EDGE_SHAPES = {
    1: [(2, 1), (1, 2)],
    2: [(3, 1), (1, 3)],
    3: [(4, 1), (2, 2), (1, 4)],
    4: [(5, 1), (1, 5)],
    5: [(6, 1), (3, 2), (2, 3), (1, 6)],
}


def random_graph(rng: random.Random, max_cogenus: int, max_start: int = 8) -> LongEdgeGraph:
    """A random nonempty long-edge graph with cogenus in 1..max_cogenus."""
    budget = rng.randint(1, max_cogenus)
    triples = []
    while budget > 0:
        c = rng.randint(1, budget)
        length, weight = rng.choice(_EDGE_SHAPES[c])
        start = rng.randint(0, max_start)
        triples.append((start, start + length, weight))
        budget -= c
    return make_graph(triples)
