"""Contractibility predicate, maximality, brute-force oracle and diagnostics.

A vertex set W of a 3-connected graph is contractible when the subgraph it
induces is connected and the rest of the graph is 2-connected.  The oracle
enumerates connected candidate sets directly (growing by neighbors, so every
candidate is connected by construction) and keeps the first witness in a
fixed deterministic order, which makes "none" answers reproducible and
cross-checkable by an independent enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import (
    ContractiaError,
    Graph,
    bit,
    bits,
    delete_set,
    is_connected_set,
    neighbors_of_set,
    vertex_list,
)
from .connectivity import is_biconnected_subgraph
from .decomposition import Part, decompose

DEFAULT_BUDGET = 10_000_000

CLAUSE_SET_NOT_CONNECTED = "set-not-connected"
CLAUSE_REMAINDER_NOT_2_CONNECTED = "remainder-not-2-connected"


class PreconditionError(ContractiaError, ValueError):
    pass


class BudgetExceededError(ContractiaError, RuntimeError):
    """Oracle candidate budget exhausted; distinct from a 'none exists' answer."""

    def __init__(self, examined: int):
        super().__init__(f"oracle budget exceeded after {examined} candidate sets")
        self.examined = examined


def is_contractible(g: Graph, w: int) -> bool:
    """True iff W induces a connected subgraph and G - W is 2-connected."""
    return failing_clause(g, w) is None


def failing_clause(g: Graph, w: int) -> str | None:
    """None when contractible, else the first clause that fails."""
    if w == 0 or w == g.full_mask:
        raise PreconditionError("W must be a nonempty proper subset of the vertices")
    if w & ~g.full_mask:
        raise PreconditionError("W is not a subset of the vertex set")
    if not is_connected_set(g, w):
        return CLAUSE_SET_NOT_CONNECTED
    if not is_biconnected_subgraph(g, g.full_mask & ~w):
        return CLAUSE_REMAINDER_NOT_2_CONNECTED
    return None


def extend_once(g: Graph, w: int) -> int | None:
    """Smallest vertex x with W + x contractible, or None when W is maximal."""
    if not is_contractible(g, w):
        raise PreconditionError("extension requires a contractible starting set")
    for x in bits(g.full_mask & ~w):
        if is_contractible(g, w | bit(x)):
            return x
    return None


def _grow(g: Graph, cur: int, ext: int, banned: int, need: int) -> Iterator[int]:
    # each connected superset of `cur` avoiding `banned` appears exactly once:
    # the branch for extension vertex u owns the sets containing u but none of
    # the extension vertices tried before it
    while ext:
        u_bit = ext & -ext
        ext ^= u_bit
        new_cur = cur | u_bit
        if need == 1:
            yield new_cur
        else:
            u = u_bit.bit_length() - 1
            child_ext = (ext | (g.adj[u] & ~banned)) & ~new_cur
            yield from _grow(g, new_cur, child_ext, banned, need - 1)
        banned |= u_bit


def connected_subsets(g: Graph, k: int) -> Iterator[int]:
    """All connected k-vertex sets, each once, in a fixed deterministic order.

    Sets are grouped by their minimum vertex (ascending); growth only ever
    adds neighbors of the current set, so candidates are connected by
    construction.
    """
    if k < 1:
        return
    for v in range(g.n):
        start = bit(v)
        if k == 1:
            yield start
            continue
        below = start - 1
        yield from _grow(g, start, g.adj[v] & ~below & ~start, below | start, k - 1)


def oracle_find(
    g: Graph,
    size_min: int,
    size_max: int,
    *,
    budget: int = DEFAULT_BUDGET,
) -> int | None:
    """First contractible set with size in [size_min, size_max], else None.

    Enumerates smallest sizes first; the returned witness is re-verified
    before being handed back.  Raises :class:`BudgetExceededError` once more
    than ``budget`` candidate sets have been examined.
    """
    if size_min < 1:
        raise PreconditionError("size_min must be at least 1")
    examined = 0
    for size in range(size_min, min(size_max, g.n - 1) + 1):
        for cand in connected_subsets(g, size):
            examined += 1
            if examined > budget:
                raise BudgetExceededError(examined)
            if is_biconnected_subgraph(g, g.full_mask & ~cand):
                assert is_contractible(g, cand)
                return cand
    return None


def is_simple_cycle(g: Graph, mask: int | None = None) -> bool:
    """True iff the induced subgraph on ``mask`` is a single cycle."""
    verts = g.full_mask if mask is None else mask
    if verts.bit_count() < 3:
        return False
    for v in bits(verts):
        if (g.adj[v] & verts).bit_count() != 2:
            return False
    return is_connected_set(g, verts) if verts else False


def _is_path_set(g: Graph, mask: int) -> bool:
    # simple path: connected, max degree <= 2 inside, exactly |mask| - 1 edges
    count = mask.bit_count()
    if count == 0:
        return False
    if count == 1:
        return True
    half_edges = 0
    for v in bits(mask):
        d = (g.adj[v] & mask).bit_count()
        if d > 2:
            return False
        half_edges += d
    return half_edges == 2 * (count - 1) and is_connected_set(g, mask)


@dataclass(frozen=True)
class StructureReport:
    """Outcome of the structural checks on G - W for a maximal W.

    ``pendant_parts`` are expressed in original vertex ids; ``violations``
    is empty exactly when every itemized check passed.
    """

    is_cycle_remainder: bool
    pendant_parts: tuple[Part, ...]
    violations: tuple[str, ...]


def _named(mask: int) -> str:
    return "{" + ",".join(str(v) for v in vertex_list(mask)) + "}"


def check_remainder_structure(g: Graph, w: int) -> StructureReport:
    """Check the structural guarantees of G - W for a maximal contractible W.

    Requires W maximal (no single-vertex extension) and G - W not a simple
    cycle.  Checks, for H = G - W and its part decomposition:

    * every inner vertex of a cycle part has a neighbor in W;
    * there are >= 2 pendant parts, all cycles of length >= 4;
    * H minus the interior of any pendant part stays 2-connected;
    * for every pair of pendant parts, the interiors induce simple paths of
      >= 2 vertices, are disjoint, consist of degree-2 vertices of H, and
      neither interior has neighbors in the other.
    """
    if extend_once(g, w) is not None:
        raise PreconditionError("W is not maximal: a single-vertex extension exists")
    rem = g.full_mask & ~w
    if is_simple_cycle(g, rem):
        raise PreconditionError("remainder is a simple cycle; checks do not apply")

    h, rel = delete_set(g, w)
    dec = decompose(h)
    violations: list[str] = []

    def to_old(mask: int) -> int:
        return rel.old_mask(mask)

    parts_old = [
        Part(
            vertices=to_old(p.vertices),
            boundary=to_old(p.boundary),
            interior=to_old(p.interior),
            is_cycle=p.is_cycle,
            is_pendant=p.is_pendant,
        )
        for p in dec.parts
    ]
    pendant = [p for p in parts_old if p.is_pendant]

    for p in parts_old:
        if not p.is_cycle:
            continue
        for v in bits(p.interior):
            if not g.adj[v] & w:
                violations.append(
                    f"inner-vertex-adjacency: vertex {v} of cycle part "
                    f"{_named(p.vertices)} has no neighbor in W"
                )

    if len(pendant) < 2:
        violations.append(f"pendant-count: expected >= 2 pendant parts, found {len(pendant)}")
    for p in pendant:
        if not p.is_cycle:
            violations.append(f"pendant-shape: pendant part {_named(p.vertices)} is not a cycle")
        if p.size() < 4:
            violations.append(
                f"pendant-length: pendant part {_named(p.vertices)} has length {p.size()} < 4"
            )

    for p in pendant:
        if not is_biconnected_subgraph(g, rem & ~p.interior):
            violations.append(
                f"remainder-after-interior: removing {_named(p.interior)} "
                "leaves a non-2-connected remainder"
            )

    for i in range(len(pendant)):
        for j in range(i + 1, len(pendant)):
            w1 = pendant[i].interior
            w2 = pendant[j].interior
            pair = f"{_named(w1)}/{_named(w2)}"
            for side in (w1, w2):
                if not _is_path_set(g, side):
                    violations.append(f"interior-path: {_named(side)} does not induce a simple path")
                if side.bit_count() < 2:
                    violations.append(f"interior-size: {_named(side)} has fewer than 2 vertices")
            if w1 & w2:
                violations.append(f"interior-disjoint: interiors overlap for pair {pair}")
            for v in bits(w1 | w2):
                if (g.adj[v] & rem).bit_count() != 2:
                    violations.append(
                        f"interior-degree: vertex {v} has remainder degree != 2 (pair {pair})"
                    )
            if neighbors_of_set(g, w1) & w2 or neighbors_of_set(g, w2) & w1:
                violations.append(f"interior-separation: interiors are adjacent for pair {pair}")

    return StructureReport(
        is_cycle_remainder=False,
        pendant_parts=tuple(pendant),
        violations=tuple(violations),
    )
