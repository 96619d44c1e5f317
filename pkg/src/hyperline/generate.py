"""Seeded random generation of simple connected hypergraphs.

Rejection sampling: draw m edges with cardinalities in 2..max_card, retry
until the edge set is simple (distinct, non-nested) and the incidence
structure is connected. Deterministic for a fixed seed.
"""

from __future__ import annotations

import random

from .core import Hypergraph, is_connected


def generate_hypergraph(
    n: int,
    m: int,
    max_card: int,
    seed: int,
    max_attempts: int = 5000,
) -> Hypergraph:
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if m < 1:
        raise ValueError("need at least 1 edge")
    if max_card < 2:
        raise ValueError("max cardinality must be >= 2")
    rng = random.Random(seed)
    top = min(max_card, n)
    labels = [str(i + 1) for i in range(n)]
    for _ in range(max_attempts):
        edges = []
        for _ in range(m):
            card = rng.randint(2, top)
            edges.append(tuple(sorted(rng.sample(range(n), card))))
        if _simple(edges):
            h = Hypergraph(labels, edges)
            if is_connected(h):
                return h
    raise ValueError(
        f"could not generate a simple connected hypergraph with "
        f"n={n}, m={m}, max_card={max_card} after {max_attempts} attempts"
    )


def _simple(edges: list[tuple[int, ...]]) -> bool:
    if len(set(edges)) != len(edges):
        return False
    sets = [set(e) for e in edges]
    for i in range(len(sets)):
        for j in range(len(sets)):
            if i != j and sets[i] <= sets[j]:
                return False
    return True
