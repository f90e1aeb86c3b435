"""Definition-level reference implementations used as independent oracles.

Everything here works on plain vertex sets and adjacency dicts and decides
properties straight from their definitions (subset enumeration, per-vertex
deletion), deliberately sharing no code path with the library algorithms it
cross-checks.
"""

from __future__ import annotations

from itertools import combinations

from contractia import Graph, bits, mask_of


def adj_dict(g: Graph) -> dict[int, set[int]]:
    return {v: set(bits(g.adj[v])) for v in range(g.n)}


def bf_connected(adj: dict[int, set[int]], subset) -> bool:
    subset = set(subset)
    if not subset:
        return False
    start = min(subset)
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u in subset and u not in seen:
                seen.add(u)
                stack.append(u)
    return seen == subset


def bf_biconnected(adj: dict[int, set[int]], subset) -> bool:
    # n >= 3, connected, and still connected after deleting any one vertex
    subset = set(subset)
    if len(subset) < 3:
        return False
    if not bf_connected(adj, subset):
        return False
    return all(bf_connected(adj, subset - {v}) for v in subset)


def bf_vertex_connectivity(g: Graph) -> int:
    adj = adj_dict(g)
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    for size in range(g.n - 1):
        for cut in combinations(range(g.n), size):
            rest = set(range(g.n)) - set(cut)
            if len(rest) >= 2 and not bf_connected(adj, rest):
                return size
    return g.n - 1


def bf_cutsets(g: Graph, size: int) -> list[tuple[int, ...]]:
    adj = adj_dict(g)
    out = []
    for cut in combinations(range(g.n), size):
        rest = set(range(g.n)) - set(cut)
        if len(rest) >= 2 and not bf_connected(adj, rest):
            out.append(cut)
    return out


def bf_is_contractible(g: Graph, w_mask: int) -> bool:
    adj = adj_dict(g)
    w = set(bits(w_mask))
    rest = set(range(g.n)) - w
    return bf_connected(adj, w) and bf_biconnected(adj, rest)


def bf_oracle_lex(g: Graph, size_min: int, size_max: int) -> int | None:
    """Independent subset order: plain lexicographic combinations per size."""
    adj = adj_dict(g)
    everything = set(range(g.n))
    for size in range(size_min, size_max + 1):
        for combo in combinations(range(g.n), size):
            w = set(combo)
            if bf_connected(adj, w) and bf_biconnected(adj, everything - w):
                return mask_of(combo)
    return None


def bf_connected_subset_masks(g: Graph, k: int) -> set[int]:
    adj = adj_dict(g)
    return {
        mask_of(combo)
        for combo in combinations(range(g.n), k)
        if bf_connected(adj, combo)
    }
