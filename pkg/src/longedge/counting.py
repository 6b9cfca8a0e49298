"""Exact ordering counts and Severi degrees.

The count attached to a long-edge graph is the number of linear orderings
of the vertices of its subdivided degree-d extension, refined by the
distribution of the subdivision midpoints into gaps.  Per gap the count is
a falling factorial; everything here is arbitrary-precision integer
arithmetic, never floating point.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Sequence

from .graphs import (
    LongEdgeGraph,
    automorphism_count,
    is_allowable,
    multiplicity,
    weight_profile,
)
from .templates import enumerate_graphs

DEFAULT_ORACLE_TOKENS = 12


def falling_factorial(a: int, m: int) -> int:
    """a (a-1) ... (a-m+1), with the empty product equal to 1."""
    out = 1
    for j in range(m):
        out *= a - j
    return out


def enumerate_distributions(g: LongEdgeGraph) -> list[tuple[int, ...]]:
    """Every assignment of one spanned gap to each edge, as tuples aligned
    with the canonical edge order.  The empty graph has one empty assignment."""
    spans = [range(e.start, e.end) for e in g.edges]
    return list(itertools.product(*spans))


def n_star(g: LongEdgeGraph, dist: Sequence[int], d: int) -> int:
    """Ordering count for labeled edges under one midpoint distribution.

    Zero when the graph is not allowable for d; otherwise the product over
    gaps i of the falling factorial (i - w_i + m_i)_(m_i), which is
    strictly positive.
    """
    if not is_allowable(g, d):
        return 0
    w = weight_profile(g)
    m: dict[int, int] = {}
    for gap in dist:
        m[gap] = m.get(gap, 0) + 1
    out = 1
    for gap, mi in m.items():
        out *= falling_factorial(gap - w.get(gap, 0) + mi, mi)
    return out


def n_graph(g: LongEdgeGraph, d: int) -> int:
    """Full weighted ordering count: multiplicity times the labeled count
    summed over all distributions, divided by the automorphism count.

    The division is always exact (automorphisms act freely on labeled
    orderings); a remainder indicates a bug and aborts loudly.
    """
    total = sum(n_star(g, dist, d) for dist in enumerate_distributions(g))
    alpha = automorphism_count(g)
    q, r = divmod(multiplicity(g) * total, alpha)
    if r:
        raise RuntimeError(
            f"internal invariant violation: automorphism count {alpha} "
            f"does not divide weighted ordering sum for {g}"
        )
    return q


def _chunk_sum(args: tuple[list[LongEdgeGraph], int]) -> int:
    graphs, d = args
    return sum(n_graph(g, d) for g in graphs)


def severi_degree(d: int, delta: int, jobs: int = 1) -> int:
    """Number of degree-d plane curves with delta nodes through the
    matching number of general points: the sum of n_graph over all
    allowable long-edge graphs of cogenus delta.

    ``jobs`` > 1 splits the sum into per-process chunks; exact integer
    addition commutes, so the result is identical for any job count.
    """
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1:
        return sum(n_graph(g, d) for g in enumerate_graphs(delta, d))
    graphs = list(enumerate_graphs(delta, d))
    if not graphs:
        return 0
    size = max(1, -(-len(graphs) // jobs))
    chunks = [(graphs[i : i + size], d) for i in range(0, len(graphs), size)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return sum(pool.map(_chunk_sum, chunks))


def _distinct_permutations(tokens: tuple) -> Iterable[tuple]:
    """All distinct orderings of a multiset, one per equivalence class."""
    if not tokens:
        yield ()
        return
    seen = set()
    for i, t in enumerate(tokens):
        if t in seen:
            continue
        seen.add(t)
        for rest in _distinct_permutations(tokens[:i] + tokens[i + 1 :]):
            yield (t,) + rest


def orderings_oracle(
    g: LongEdgeGraph, d: int, max_tokens: int = DEFAULT_ORACLE_TOKENS
) -> int:
    """Labeled ordering count by brute enumeration, independent of n_star.

    Builds the degree-d extension explicitly: i - w_i indistinct short
    tokens over each gap i plus one labeled midpoint per long edge, then
    enumerates every midpoint-to-gap assignment and every distinct
    interleaving inside each gap, collecting canonical outcomes in a set.
    Refuses to run when the extension holds more than ``max_tokens`` edges
    over the graph's span.
    """
    if not is_allowable(g, d):
        return 0
    if g.is_empty:
        return 1
    w = weight_profile(g)
    lo, hi = g.left_end, g.right_end
    span_gaps = [i for i in range(lo, hi) if i <= d]
    shorts = {i: i - w.get(i, 0) for i in span_gaps}
    token_count = sum(shorts.values()) + g.n_edges
    if token_count > max_tokens:
        raise ValueError(
            f"oracle too large: {token_count} extension edges over the span "
            f"exceed the bound of {max_tokens}"
        )
    spans = [range(e.start, e.end) for e in g.edges]
    outcomes = set()
    for assignment in itertools.product(*spans):
        per_gap = []
        for i in span_gaps:
            tokens = tuple(["s"] * shorts[i]) + tuple(
                f"e{j}" for j, gap in enumerate(assignment) if gap == i
            )
            per_gap.append(tuple(_distinct_permutations(tokens)))
        for combo in itertools.product(*per_gap):
            outcomes.add(combo)
    return len(outcomes)
