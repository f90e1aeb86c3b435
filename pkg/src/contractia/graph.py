"""Immutable bitmask-backed simple graphs and vertex-set primitives.

Vertex sets are plain ints used as bitmasks: bit ``v`` set means vertex ``v``
is a member.  Set algebra is therefore ``&``, ``|``, ``^``, ``~`` plus
``int.bit_count()``, which stays word-cheap for the desk-scale graphs
(n <= 64) this package targets and degrades gracefully beyond.

All algorithms downstream prefer to stay in original vertex ids and restrict
operations with a mask; :func:`delete_set` / :func:`induced` build honest
subgraphs and return a :class:`Relabeling` for the boundary cases where a
standalone graph object is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator


class ContractiaError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(ContractiaError, ValueError):
    """Invalid graph construction or vertex-set argument."""


def bit(v: int) -> int:
    return 1 << v


def mask_of(ids: Iterable[int]) -> int:
    m = 0
    for v in ids:
        m |= 1 << v
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield the vertex ids of a mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def vertex_list(mask: int) -> list[int]:
    return list(bits(mask))


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertex ids 0..n-1.

    ``adj[v]`` is the neighbor set of ``v`` as a bitmask.  Instances are
    immutable; every operation in this package is a pure function over them.
    """

    n: int
    adj: tuple[int, ...]

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def m(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    @cached_property
    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adj), default=0)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, in lexicographic order."""
        for u in range(self.n):
            high = self.adj[u] >> (u + 1) << (u + 1)
            for v in bits(high):
                yield (u, v)

    def __repr__(self) -> str:  # debugging aid; edges sorted, stable
        return f"Graph(n={self.n}, edges={list(self.edges())})"


@dataclass(frozen=True)
class Relabeling:
    """Stable old-id <-> new-id table for a subgraph.

    ``old_ids[new]`` is the original id of subgraph vertex ``new``; original
    ids are kept in ascending order so the table is canonical for a given
    vertex set.
    """

    old_ids: tuple[int, ...]

    @cached_property
    def _new_by_old(self) -> dict[int, int]:
        return {old: new for new, old in enumerate(self.old_ids)}

    def old_of(self, new_v: int) -> int:
        return self.old_ids[new_v]

    def new_of(self, old_v: int) -> int:
        return self._new_by_old[old_v]

    def old_mask(self, new_mask: int) -> int:
        return mask_of(self.old_ids[v] for v in bits(new_mask))

    def new_mask(self, old_mask: int) -> int:
        return mask_of(self._new_by_old[v] for v in bits(old_mask))


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, loops are rejected."""
    if n < 0:
        raise GraphError(f"vertex count must be nonnegative, got {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge ({u}, {v}) not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def _check_subset(g: Graph, mask: int, what: str) -> None:
    if mask < 0 or mask & ~g.full_mask:
        raise GraphError(f"{what} is not a subset of the vertex set")


def _induced_on(g: Graph, keep: int) -> tuple[Graph, Relabeling]:
    old_ids = tuple(bits(keep))
    rel = Relabeling(old_ids)
    adj = []
    for old_v in old_ids:
        row = g.adj[old_v] & keep
        new_row = 0
        for old_u in bits(row):
            new_row |= 1 << rel.new_of(old_u)
        adj.append(new_row)
    return Graph(len(old_ids), tuple(adj)), rel


def delete_set(g: Graph, r: int) -> tuple[Graph, Relabeling]:
    """Graph minus the vertex set ``r``, plus the id-remapping table."""
    _check_subset(g, r, "deletion set")
    return _induced_on(g, g.full_mask & ~r)


def induced(g: Graph, r: int) -> tuple[Graph, Relabeling]:
    """Induced subgraph on the vertex set ``r``, plus the remapping table."""
    _check_subset(g, r, "induced set")
    return _induced_on(g, r)


def neighbors_of_set(g: Graph, r: int) -> int:
    """Vertices outside ``r`` adjacent to at least one member of ``r``."""
    _check_subset(g, r, "set")
    acc = 0
    for v in bits(r):
        acc |= g.adj[v]
    return acc & ~r


def edges_between(g: Graph, r: int, r1: int) -> int:
    """Number of edges with one end in ``r`` and the other in ``r1``."""
    _check_subset(g, r, "first set")
    _check_subset(g, r1, "second set")
    if r & r1:
        raise GraphError("edge counting requires disjoint sets")
    return sum((g.adj[v] & r1).bit_count() for v in bits(r))


def reachable_from(g: Graph, start: int, within: int) -> int:
    """All vertices of ``within`` reachable from the vertex mask ``start``."""
    reach = start & within
    frontier = reach
    while frontier:
        acc = 0
        for v in bits(frontier):
            acc |= g.adj[v]
        frontier = acc & within & ~reach
        reach |= frontier
    return reach


def is_connected_set(g: Graph, r: int) -> bool:
    """True iff the induced subgraph on ``r`` is connected.

    The empty set is not connected; singletons are.
    """
    _check_subset(g, r, "set")
    if r == 0:
        return False
    start = r & -r
    return reachable_from(g, start, r) == r


def connected_components(g: Graph, within: int | None = None) -> list[int]:
    """Component masks of the induced subgraph, ordered by smallest vertex."""
    todo = g.full_mask if within is None else within
    comps = []
    while todo:
        start = todo & -todo
        comp = reachable_from(g, start, todo)
        comps.append(comp)
        todo &= ~comp
    return comps


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return is_connected_set(g, g.full_mask)
