"""Hypergraph text format: one edge per line.

Each non-blank line lists the vertex labels of one hyperedge, separated by
whitespace. A token beginning with '#' starts a comment running to the end
of the line (only token-initial '#' counts, so labels like "v#2" produced
by the power construction survive a round trip). Labels are mapped to
indices in first-appearance order; edges keep line order.
"""

from __future__ import annotations

import os

from .core import Hypergraph, validate


class HypergraphParseError(ValueError):
    pass


def parse_text(text: str, source: str = "<string>") -> Hypergraph:
    """Parse the edge-per-line format, rejecting structurally invalid input.

    Violations (singleton edges, duplicates, nested edges) are reported
    with the source line numbers of the offending edges.
    """
    labels: list[str] = []
    index: dict[str, int] = {}
    edges: list[list[int]] = []
    edge_lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = []
        for tok in raw.split():
            if tok.startswith("#"):
                break
            tokens.append(tok)
        if not tokens:
            continue
        edge = []
        for tok in tokens:
            if tok not in index:
                index[tok] = len(labels)
                labels.append(tok)
            edge.append(index[tok])
        edges.append(edge)
        edge_lines.append(lineno)
    h = Hypergraph(labels, edges)
    problems = [v for v in validate(h) if v.severity == "error"]
    if problems:
        msgs = []
        for v in problems:
            where = ", ".join(f"line {edge_lines[i]}" for i in v.edges)
            if v.rule == "cardinality-one":
                msgs.append(f"cardinality-one hyperedge at {where}")
            elif v.rule == "duplicate-edge":
                msgs.append(f"duplicate hyperedge ({where})")
            elif v.rule == "nested-edge":
                a, b = v.edges
                msgs.append(
                    f"hyperedge at line {edge_lines[a]} is contained in "
                    f"hyperedge at line {edge_lines[b]}"
                )
            else:
                msgs.append(f"{v.message} ({where})")
        raise HypergraphParseError(f"{source}: " + "; ".join(msgs))
    return h


def parse_path(path: str | os.PathLike) -> Hypergraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_text(fh.read(), source=str(path))


def emit(h: Hypergraph) -> str:
    """Serialize back to the edge-per-line format."""
    for label in h.labels:
        if not label or label.split() != [label] or label.startswith("#"):
            raise ValueError(f"label {label!r} cannot be written to the text format")
    lines = [" ".join(h.labels[v] for v in e) for e in h.edges]
    return "\n".join(lines) + "\n"
