"""Structural predicates: regularity flavors, linearity, and collars.

A collar is a hypergraph in which every vertex lies in exactly two edges
and intersecting edges can be 2-colored with distinct colors; it plays the
role an even cycle plays among graphs. Collars are recognized directly and
searched for as sub-hypergraphs by bounded exhaustive enumeration.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .core import Hypergraph, degree_profile, is_uniform
from .line import line_multigraph


@dataclass(frozen=True)
class CollarWitness:
    """Edge subset forming a collar, with its proper 2-coloring.

    `connected` records whether the chosen edges form a single component;
    disconnected collars are accepted but flagged.
    """

    edge_indices: tuple[int, ...]
    coloring: Mapping[int, int]
    connected: bool = True

    def signed_entry(self, i: int) -> int:
        """+1 for color 1, -1 for color 2, 0 outside the collar."""
        c = self.coloring.get(i)
        return 0 if c is None else (1 if c == 1 else -1)


@dataclass(frozen=True)
class RegularityReport:
    regular: int | None
    edge_regular: int | None
    skew_edge_regular: int | None
    linear: bool


def regularity_report(h: Hypergraph) -> RegularityReport:
    """All four structure predicates in one pass.

    regular: the common vertex degree d, if any. edge_regular: the common
    value of sum_{v in e} d(v). skew_edge_regular: the common value of
    sum_{v in e} (d(v) - 1), which discounts degree-one padding. linear:
    no two edges share more than one vertex.
    """
    degs = degree_profile(h).degrees
    regular = degs[0] if len(set(degs)) == 1 else None
    sums = [sum(degs[v] for v in e) for e in h.edges]
    skews = [s - len(e) for s, e in zip(sums, h.edges)]
    edge_regular = sums[0] if sums and len(set(sums)) == 1 else None
    skew = skews[0] if skews and len(set(skews)) == 1 else None
    sets = [set(e) for e in h.edges]
    linear = all(
        len(sets[i] & sets[j]) <= 1
        for i in range(h.m)
        for j in range(i + 1, h.m)
    )
    return RegularityReport(regular, edge_regular, skew, linear)


def line_is_regular(h: Hypergraph) -> bool:
    g = line_multigraph(h).graph
    return len({g.degree(v) for v in range(g.order)}) <= 1


def skew_iff_line_regular_check(h: Hypergraph) -> bool:
    """Self-test: line-multigraph regularity must match skew edge-regularity."""
    skew = regularity_report(h).skew_edge_regular is not None
    return line_is_regular(h) == skew


def _line_adjacency_sets(h: Hypergraph, chosen: list[int]) -> dict[int, list[int]]:
    sets = {i: set(h.edges[i]) for i in chosen}
    adj: dict[int, list[int]] = {i: [] for i in chosen}
    for a in range(len(chosen)):
        for b in range(a + 1, len(chosen)):
            i, j = chosen[a], chosen[b]
            if sets[i] & sets[j]:
                adj[i].append(j)
                adj[j].append(i)
    return adj


def _two_color(adj: dict[int, list[int]]) -> tuple[dict[int, int] | None, bool]:
    """BFS 2-coloring, component roots colored 1 in ascending index order.

    Returns (coloring or None on an odd cycle, single-component flag).
    """
    coloring: dict[int, int] = {}
    components = 0
    for root in sorted(adj):
        if root in coloring:
            continue
        components += 1
        coloring[root] = 1
        queue = deque([root])
        while queue:
            i = queue.popleft()
            for j in adj[i]:
                if j not in coloring:
                    coloring[j] = 3 - coloring[i]
                    queue.append(j)
                elif coloring[j] == coloring[i]:
                    return None, components == 1
    return coloring, components <= 1


def is_collar(h: Hypergraph) -> CollarWitness | None:
    """Recognize a collar: 2-regular with a 2-colorable line graph.

    Multiplicities are irrelevant to proper coloring, so bipartiteness of
    the underlying simple line graph is what is checked.
    """
    if h.m == 0 or h.n == 0:
        return None
    if any(d != 2 for d in degree_profile(h).degrees):
        return None
    chosen = list(range(h.m))
    coloring, connected = _two_color(_line_adjacency_sets(h, chosen))
    if coloring is None:
        return None
    return CollarWitness(tuple(chosen), coloring, connected)


def check_collar_witness(
    h: Hypergraph, edge_indices: tuple[int, ...], coloring: Mapping[int, int]
) -> None:
    """Raise unless the edge subset plus coloring really is a collar.

    Every covered vertex must lie in exactly two chosen edges, and chosen
    edges that intersect must carry different colors.
    """
    chosen = sorted(set(edge_indices))
    if not chosen:
        raise ValueError("empty collar")
    if chosen[0] < 0 or chosen[-1] >= h.m:
        raise IndexError("collar edge index out of range")
    if set(coloring) != set(chosen) or not all(c in (1, 2) for c in coloring.values()):
        raise ValueError("coloring invalid: must map exactly the collar edges to {1, 2}")
    count: dict[int, int] = {}
    for i in chosen:
        for v in h.edges[i]:
            count[v] = count.get(v, 0) + 1
    if any(c != 2 for c in count.values()):
        raise ValueError("not 2-regular on collar vertices")
    sets = {i: set(h.edges[i]) for i in chosen}
    for a in range(len(chosen)):
        for b in range(a + 1, len(chosen)):
            i, j = chosen[a], chosen[b]
            if sets[i] & sets[j] and coloring[i] == coloring[j]:
                raise ValueError(f"coloring invalid: adjacent edges {i}, {j} share a color")


def collar_implies_bipartite_check(h: Hypergraph) -> bool:
    """For a collar, assert the line multigraph is bipartite (and, for a
    k-uniform collar, k-regular)."""
    witness = is_collar(h)
    if witness is None:
        raise ValueError("not a collar")
    g = line_multigraph(h).graph
    for i, j, _ in g.pairs():
        if witness.coloring[i] == witness.coloring[j]:
            return False
    k = is_uniform(h)
    if k is not None:
        if any(g.degree(v) != k for v in range(g.order)):
            return False
    return True


def find_collar_subhypergraph(
    h: Hypergraph, max_edges: int = 20
) -> CollarWitness | None:
    """Exhaustive lexicographic search for a collar among edge subsets.

    A subset qualifies when every vertex it covers lies in exactly two of
    its edges and its line graph is bipartite. Subsets are grown in
    ascending index order, pruned as soon as a vertex would exceed two
    incidences or a deficient vertex can no longer be completed, and the
    lexicographically first witness is returned. Instances above
    `max_edges` are refused rather than searched.
    """
    if h.m > max_edges:
        raise ValueError(f"instance exceeds search cap ({max_edges} edges)")
    sets = [set(e) for e in h.edges]
    last_idx: dict[int, int] = {}
    for i, e in enumerate(h.edges):
        for v in e:
            last_idx[v] = i
    count: dict[int, int] = {}
    chosen: list[int] = []

    def complete() -> bool:
        return bool(chosen) and all(c == 2 for c in count.values() if c)

    def attempt(start: int) -> CollarWitness | None:
        for j in range(start, h.m):
            if any(c == 1 and last_idx[v] < j for v, c in count.items()):
                return None  # some covered vertex can never reach two edges
            if any(count.get(v, 0) >= 2 for v in sets[j]):
                continue
            for v in sets[j]:
                count[v] = count.get(v, 0) + 1
            chosen.append(j)
            if complete():
                coloring, connected = _two_color(_line_adjacency_sets(h, chosen))
                if coloring is not None:
                    return CollarWitness(tuple(chosen), coloring, connected)
                # any valid superset adds only disjoint edges; the odd cycle stays
            else:
                found = attempt(j + 1)
                if found is not None:
                    return found
            chosen.pop()
            for v in sets[j]:
                count[v] -= 1
        return None

    return attempt(0)
