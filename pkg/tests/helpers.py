"""Test-side reimplementations used to cross-check library results.

These deliberately avoid the library's internal shortcuts: component
sizes come from an actual flood fill, and the tiny brute-force minimum
below enumerates colorings directly instead of reusing the oracle.
"""

from __future__ import annotations

import itertools

from cubisect import Multigraph


def same_color_component_sizes(g: Multigraph, colors) -> list[int]:
    """Sizes of the connected components of each one-color subgraph."""
    seen = [False] * g.n
    sizes = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        size = 1
        stack = [start]
        while stack:
            v = stack.pop()
            for u in g.distinct_neighbors(v):
                if not seen[u] and colors[u] == colors[v]:
                    seen[u] = True
                    size += 1
                    stack.append(u)
        sizes.append(size)
    return sizes


def epsilon_of(g: Multigraph, colors) -> int:
    return sum(m for u, v, m in g.edge_pairs() if colors[u] == colors[v])


def tiny_brute_min(g: Multigraph) -> int | None:
    """Minimum epsilon over 2-bisections by definition; for n <= 10 only."""
    assert g.n <= 10
    best = None
    for black in itertools.combinations(range(g.n), g.n // 2):
        colors = [1] * g.n
        for v in black:
            colors[v] = 0
        if max(same_color_component_sizes(g, colors)) > 2:
            continue
        eps = epsilon_of(g, colors)
        best = eps if best is None else min(best, eps)
    return best


def balanced_colorings(n: int):
    """Every balanced coloring with vertex 0 black, as tuples."""
    for rest in itertools.combinations(range(1, n), n // 2 - 1):
        black = {0, *rest}
        yield tuple(0 if v in black else 1 for v in range(n))
