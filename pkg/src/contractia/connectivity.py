"""Exact vertex connectivity, cutset enumeration and splitting relations.

Connectivity is computed exactly via vertex-disjoint augmenting paths
(max-flow on the vertex-split digraph); the test suite cross-checks it
against brute-force cutset enumeration on small graphs, since every
predicate downstream hinges on exact 2-/3-connectivity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import (
    ContractiaError,
    Graph,
    bit,
    bits,
    connected_components,
    is_connected,
    mask_of,
    vertex_list,
)


class ConnectivityError(ContractiaError, ValueError):
    pass


@dataclass(frozen=True)
class Cutset:
    """A disconnecting vertex set with a witness pair it separates."""

    vertices: int
    witness: tuple[int, int]

    def sorted_vertices(self) -> list[int]:
        return vertex_list(self.vertices)


def _max_disjoint_paths(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths.

    Unit-capacity max flow on the split digraph: node v becomes v_in -> v_out
    with capacity 1, every edge uv becomes u_out -> v_in and v_out -> u_in.
    Intended for non-adjacent s, t (Menger's vertex form).
    """
    n = g.n
    # node encoding: 2v = v_in, 2v + 1 = v_out; source = s_out, sink = t_in
    source, sink = 2 * s + 1, 2 * t
    cap: dict[tuple[int, int], int] = {}
    succ: list[list[int]] = [[] for _ in range(2 * n)]

    def add_edge(a: int, b: int, c: int) -> None:
        cap[(a, b)] = c
        cap[(b, a)] = 0
        succ[a].append(b)
        succ[b].append(a)

    for v in range(n):
        add_edge(2 * v, 2 * v + 1, 1)
    for u in range(n):
        for v in bits(g.adj[u]):
            add_edge(2 * u + 1, 2 * v, 1)

    flow = 0
    while True:
        # BFS for an augmenting path in the residual digraph
        prev = {source: source}
        queue = [source]
        while queue and sink not in prev:
            nxt = []
            for a in queue:
                for b in succ[a]:
                    if b not in prev and cap[(a, b)] > 0:
                        prev[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in prev:
            return flow
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Exact vertex connectivity; n - 1 for complete graphs."""
    if g.n < 2:
        raise ConnectivityError("vertex connectivity needs at least 2 vertices")
    if g.m == g.n * (g.n - 1) // 2:
        return g.n - 1
    if not is_connected(g):
        return 0
    best = g.n - 1
    for s in range(g.n):
        if g.degree(s) < best:
            best = g.degree(s)  # the neighborhood of s is a cutset candidate
        for t in range(s + 1, g.n):
            if not g.has_edge(s, t):
                k = _max_disjoint_paths(g, s, t)
                if k < best:
                    best = k
    return best


def is_k_connected(g: Graph, k: int) -> bool:
    """Connectivity >= k with the vertex-count guard n >= k + 1.

    Convention: graphs with n <= 2 are not 2-connected; K3 is.
    """
    if k <= 0:
        return True
    if g.n < k + 1:
        return False
    return vertex_connectivity(g) >= k


def is_biconnected_subgraph(g: Graph, mask: int | None = None) -> bool:
    """2-connectivity of the induced subgraph on ``mask`` (default: all of G).

    Fast articulation-point test used in the oracle's hot loop; agrees with
    ``is_k_connected(induced(g, mask), 2)`` by the same n >= 3 convention.
    """
    verts = g.full_mask if mask is None else mask
    if verts.bit_count() < 3:
        return False
    adj = g.adj
    n = g.n
    disc = [0] * n
    low = [0] * n
    root = (verts & -verts).bit_length() - 1
    clock = 1
    disc[root] = low[root] = 1
    root_children = 0
    visited = 1
    # stack entries: (vertex, parent, pending neighbor mask)
    stack = [(root, -1, adj[root] & verts)]
    while stack:
        v, parent, pending = stack[-1]
        if pending:
            u_bit = pending & -pending
            stack[-1] = (v, parent, pending ^ u_bit)
            u = u_bit.bit_length() - 1
            if not disc[u]:
                clock += 1
                disc[u] = low[u] = clock
                visited += 1
                if v == root:
                    root_children += 1
                # mask the tree edge out; simple graphs have no parallel edge
                stack.append((u, v, adj[u] & verts & ~(1 << v)))
            elif disc[u] < low[v]:
                low[v] = disc[u]
        else:
            stack.pop()
            if parent != -1:
                if low[v] < low[parent]:
                    low[parent] = low[v]
                if parent != root and low[v] >= disc[parent]:
                    return False
            elif root_children > 1:
                return False
    return visited == verts.bit_count()


def enumerate_cutsets(g: Graph, size: int) -> list[Cutset]:
    """All size-subsets whose removal disconnects G, in lexicographic order.

    Each cutset carries a witness: the smallest vertices of the first two
    components of G minus the cutset.
    """
    if size < 1:
        raise ConnectivityError("cutset size must be positive")
    if size >= g.n - 1:
        raise ConnectivityError(
            f"cutset size {size} leaves fewer than 2 vertices in a graph on {g.n}"
        )
    out = []
    for combo in combinations(range(g.n), size):
        m = mask_of(combo)
        comps = connected_components(g, g.full_mask & ~m)
        if len(comps) >= 2:
            w = ((comps[0] & -comps[0]).bit_length() - 1,
                 (comps[1] & -comps[1]).bit_length() - 1)
            out.append(Cutset(m, w))
    return out


def splits(g: Graph, cutset: int, x: int) -> bool:
    """True iff ``x`` minus the cutset meets >= 2 components of G - cutset."""
    comps = connected_components(g, g.full_mask & ~cutset)
    if len(comps) < 2:
        raise ConnectivityError("splitting is only defined for cutsets")
    rest = x & ~cutset
    hit = 0
    for comp in comps:
        if comp & rest:
            hit += 1
            if hit >= 2:
                return True
    return False


def independent(g: Graph, s: Cutset, t: Cutset) -> bool:
    """Neither cutset splits the other (symmetric)."""
    return not splits(g, s.vertices, t.vertices) and not splits(g, t.vertices, s.vertices)
