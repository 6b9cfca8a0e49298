"""Template enumeration and composition of allowable long-edge graphs.

A template is the atomic building block: a nonempty graph starting at
vertex 0 whose internal vertices are all covered.  Every long-edge graph
is a unique disjoint union of rightward-translated templates, so the
allowable graphs of a given cogenus can be enumerated by composing
templates along the vertex line.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .graphs import (
    EMPTY_GRAPH,
    Edge,
    LongEdgeGraph,
    disjoint_union,
    is_template,
    offset,
    weight_profile,
)


@dataclass(frozen=True)
class TemplateCatalog:
    """All templates of one cogenus, duplicate-free, canonically sorted."""

    delta: int
    templates: tuple[LongEdgeGraph, ...]

    def __len__(self) -> int:
        return len(self.templates)

    def __iter__(self):
        return iter(self.templates)


def _candidate_edges(delta: int) -> list[Edge]:
    """Edges that can appear in a cogenus-delta template.

    Each edge contributes length*weight - 1 >= 1 to the cogenus, so
    length*weight <= delta + 1; covering forces the right end <= delta + 1,
    hence start <= delta.
    """
    out = []
    for cog in range(1, delta + 1):
        lw = cog + 1
        for length in range(1, lw + 1):
            if lw % length:
                continue
            w = lw // length
            for s in range(0, delta + 2 - length):
                out.append(Edge(s, s + length, w))
    return sorted(out)


@lru_cache(maxsize=None)
def enumerate_templates(delta: int) -> TemplateCatalog:
    """Complete catalog of templates with the given cogenus.

    Searches every edge multiset inside the bounding box [0, delta+1] with
    total cogenus delta and keeps the ones that are templates.  delta = 0
    yields the empty catalog (a long edge always has cogenus >= 1).
    """
    if delta < 0:
        raise ValueError("cogenus must be nonnegative")
    if delta == 0:
        return TemplateCatalog(0, ())
    candidates = _candidate_edges(delta)
    found: list[LongEdgeGraph] = []

    def rec(start_idx: int, remaining: int, acc: list[Edge]) -> None:
        if remaining == 0:
            g = LongEdgeGraph(tuple(acc))
            if is_template(g):
                found.append(g)
            return
        for i in range(start_idx, len(candidates)):
            c = candidates[i].cogenus
            if c <= remaining:
                acc.append(candidates[i])
                rec(i, remaining - c, acc)
                acc.pop()

    rec(0, delta, [])
    return TemplateCatalog(delta, tuple(sorted(set(found))))


def min_allowable_offset(template: LongEdgeGraph) -> int:
    """Smallest rightward translation after which every gap weight fits
    under its gap index: max over gaps i of (w_i - i)."""
    return max(wi - i for i, wi in weight_profile(template).items())


def allowable_offsets(template: LongEdgeGraph, d: int) -> range:
    """The contiguous offsets k for which the translated template is
    allowable for d; possibly empty for small d."""
    lo = min_allowable_offset(template)
    right = template.right_end
    hi = d + 1 - right
    if any(e.end == right and e.weight != 1 for e in template.edges):
        hi -= 1
    return range(lo, hi + 1)


def _compositions(total: int) -> Iterator[tuple[int, ...]]:
    """Ordered compositions of ``total`` into positive parts, lexicographic."""
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def enumerate_graphs(delta: int, d: int) -> Iterator[LongEdgeGraph]:
    """All long-edge graphs of cogenus delta allowable for d, lazily.

    Graphs are assembled as ordered sequences of offset templates whose
    spans do not overlap (sharing a boundary vertex is fine); uniqueness of
    the template decomposition makes the stream duplicate-free.  Order is
    deterministic: by composition, then template index, then offsets.
    delta = 0 yields exactly the empty graph.
    """
    if delta < 0:
        raise ValueError("cogenus must be nonnegative")
    if delta == 0:
        yield EMPTY_GRAPH
        return

    def build(parts: tuple[int, ...], min_start: int, acc: list[LongEdgeGraph]):
        if not parts:
            yield disjoint_union(acc)
            return
        catalog = enumerate_templates(parts[0])
        for template in catalog:
            span = template.right_end
            for k in allowable_offsets(template, d):
                if k < min_start:
                    continue
                acc.append(offset(template, k))
                yield from build(parts[1:], k + span, acc)
                acc.pop()

    for composition in _compositions(delta):
        yield from build(composition, 0, [])
