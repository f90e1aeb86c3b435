"""Decomposition of a 2-connected graph by its single 2-cutsets.

Single cutsets are the 2-cutsets independent from every other 2-cutset.
Parts are the maximal vertex sets split by none of them; together with the
cutsets they form a bipartite incidence tree whose leaves are parts.  The
augmented graph adds a virtual edge across each single cutset so that
cycle-shaped parts can be recognized.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graph import (
    ContractiaError,
    Graph,
    bit,
    bits,
    connected_components,
    vertex_list,
)
from .connectivity import Cutset, enumerate_cutsets, independent, is_k_connected


class NotTwoConnectedError(ContractiaError, ValueError):
    pass


class DecompositionError(ContractiaError, RuntimeError):
    """Internal validation failure; signals an implementation bug."""


@dataclass(frozen=True)
class Part:
    vertices: int
    boundary: int   # vertices lying in some single cutset
    interior: int   # the rest
    is_cycle: bool
    is_pendant: bool

    def size(self) -> int:
        return self.vertices.bit_count()

    def sorted_vertices(self) -> list[int]:
        return vertex_list(self.vertices)


@dataclass(frozen=True)
class BlockTree:
    """Bipartite incidence structure between single cutsets and parts.

    ``edges`` holds (cutset index, part index) pairs; indices refer to the
    ``cutsets`` and ``parts`` tuples.  Validated to be a tree whose leaves
    are all part nodes before it is returned to callers.
    """

    cutsets: tuple[int, ...]
    parts: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @cached_property
    def node_count(self) -> int:
        return len(self.cutsets) + len(self.parts)

    def part_degree(self, part_idx: int) -> int:
        return sum(1 for _, p in self.edges if p == part_idx)

    def cutset_degree(self, cut_idx: int) -> int:
        return sum(1 for c, _ in self.edges if c == cut_idx)


@dataclass(frozen=True)
class Decomposition:
    single_cutsets: tuple[Cutset, ...]
    parts: tuple[Part, ...]
    block_tree: BlockTree


def _require_2_connected(g: Graph) -> None:
    if not is_k_connected(g, 2):
        raise NotTwoConnectedError("operation requires a 2-connected graph")


def single_cutsets(g: Graph) -> list[Cutset]:
    """All 2-cutsets that are independent with every other 2-cutset."""
    _require_2_connected(g)
    if g.n <= 3:
        return []
    all2 = enumerate_cutsets(g, 2)
    return [
        s for s in all2
        if all(s is t or independent(g, s, t) for t in all2)
    ]


def augmented(g: Graph) -> Graph:
    """G plus an edge across each single cutset; idempotent when they exist."""
    adj = list(g.adj)
    for s in single_cutsets(g):
        a, b = vertex_list(s.vertices)
        adj[a] |= bit(b)
        adj[b] |= bit(a)
    return Graph(g.n, tuple(adj))


def _is_cycle_in(adj_rows: tuple[int, ...], mask: int) -> bool:
    # cycle: >= 3 vertices, all degrees exactly 2 within mask, connected
    if mask.bit_count() < 3:
        return False
    reach = mask & -mask
    frontier = reach
    for v in bits(mask):
        if (adj_rows[v] & mask).bit_count() != 2:
            return False
    while frontier:
        acc = 0
        for v in bits(frontier):
            acc |= adj_rows[v]
        frontier = acc & mask & ~reach
        reach |= frontier
    return reach == mask


def _refine_parts(g: Graph, singles: list[Cutset]) -> list[int]:
    """Maximal vertex sets split by no single cutset.

    Refine {V} against each cutset's blocks (component + cutset); a candidate
    that a cutset splits is replaced by its intersections with the blocks.
    Once a candidate fits in one block of a cutset it stays unsplit by that
    cutset forever, so a single pass over the cutsets suffices; pruning
    non-maximal survivors leaves exactly the maximal unsplit sets.
    """
    candidates = {g.full_mask}
    for s in singles:
        comps = connected_components(g, g.full_mask & ~s.vertices)
        blocks = [comp | s.vertices for comp in comps]
        refined: set[int] = set()
        for cand in candidates:
            outside = cand & ~s.vertices
            touching = [b for b in blocks if b & outside]
            if len(touching) <= 1:
                refined.add(cand)
            else:
                refined.update(cand & b for b in touching)
        candidates = refined
    ordered = sorted(candidates, key=vertex_list)
    return [
        c for c in ordered
        if not any(o != c and c & o == c for o in ordered)
    ]


def _verify_parts(g: Graph, singles: list[Cutset], parts: list[int]) -> None:
    # direct check against the definition: unsplit, and maximal up to inclusion
    comps_by_cut = {
        s.vertices: connected_components(g, g.full_mask & ~s.vertices)
        for s in singles
    }

    def split_by(cut: int, x: int) -> bool:
        rest = x & ~cut
        hit = 0
        for comp in comps_by_cut[cut]:
            if comp & rest:
                hit += 1
                if hit >= 2:
                    return True
        return False

    covered = 0
    for p in parts:
        covered |= p
        for s in singles:
            if split_by(s.vertices, p):
                raise DecompositionError("constructed part is split by a single cutset")
        for v in bits(g.full_mask & ~p):
            if not any(split_by(s.vertices, p | bit(v)) for s in singles):
                raise DecompositionError("constructed part is not maximal")
    if covered != g.full_mask:
        raise DecompositionError("parts do not cover the vertex set")
    if singles and any(p == g.full_mask for p in parts):
        raise DecompositionError("a part equals V(G) although single cutsets exist")


def _build_tree(singles: list[Cutset], part_masks: list[int]) -> BlockTree:
    cut_masks = tuple(s.vertices for s in singles)
    edges = tuple(
        (ci, pi)
        for ci, cm in enumerate(cut_masks)
        for pi, pm in enumerate(part_masks)
        if cm & pm == cm
    )
    tree = BlockTree(cut_masks, tuple(part_masks), edges)
    _validate_tree(tree)
    return tree


def _validate_tree(tree: BlockTree) -> None:
    nodes = tree.node_count
    if nodes == 0:
        raise DecompositionError("empty incidence structure")
    if len(tree.edges) != nodes - 1:
        raise DecompositionError("incidence structure is not a tree (edge count)")
    # connectivity over the bipartite node set
    adj: dict[tuple[str, int], list[tuple[str, int]]] = {}
    for ci in range(len(tree.cutsets)):
        adj[("c", ci)] = []
    for pi in range(len(tree.parts)):
        adj[("p", pi)] = []
    for ci, pi in tree.edges:
        adj[("c", ci)].append(("p", pi))
        adj[("p", pi)].append(("c", ci))
    seen = set()
    stack = [next(iter(adj))]
    while stack:
        node = stack.pop()
        if node in seen:
            continue
        seen.add(node)
        stack.extend(adj[node])
    if len(seen) != nodes:
        raise DecompositionError("incidence structure is not connected")
    for ci in range(len(tree.cutsets)):
        if tree.cutset_degree(ci) < 2:
            raise DecompositionError("a cutset node is a leaf")


def decompose(g: Graph) -> Decomposition:
    """Single cutsets, parts with interiors/flags, and the validated tree.

    Deterministic: cutsets in lexicographic order, parts ordered by their
    sorted vertex lists.
    """
    _require_2_connected(g)
    singles = single_cutsets(g)
    part_masks = _refine_parts(g, singles)
    _verify_parts(g, singles, part_masks)

    cut_union = 0
    for s in singles:
        cut_union |= s.vertices
    aug = augmented(g)

    tree = _build_tree(singles, part_masks)
    multi_node = tree.node_count >= 2

    parts = []
    for pi, m in enumerate(part_masks):
        parts.append(Part(
            vertices=m,
            boundary=m & cut_union,
            interior=m & ~cut_union,
            is_cycle=_is_cycle_in(aug.adj, m),
            # a lone tree node has no leaf/edge structure to be pendant in
            is_pendant=multi_node and tree.part_degree(pi) == 1,
        ))

    acc = 0
    for p in parts:
        if acc & p.interior:
            raise DecompositionError("part interiors overlap")
        acc |= p.interior
    if acc != g.full_mask & ~cut_union:
        raise DecompositionError("part interiors do not partition V minus the cutsets")

    return Decomposition(tuple(singles), tuple(parts), tree)


def block_tree(g: Graph) -> BlockTree:
    return decompose(g).block_tree


def classify_pendant(g: Graph, dec: Decomposition) -> list[Part]:
    """Pendant parts in deterministic (part) order."""
    return [p for p in dec.parts if p.is_pendant]


def block_tree_to_dot(tree: BlockTree) -> str:
    """DOT text: cutset nodes boxed, part nodes oval, labels sorted ids."""
    lines = ["graph block_tree {"]
    for ci, cm in enumerate(tree.cutsets):
        label = ",".join(str(v) for v in vertex_list(cm))
        lines.append(f'  c{ci} [shape=box, label="{label}"];')
    for pi, pm in enumerate(tree.parts):
        label = ",".join(str(v) for v in vertex_list(pm))
        lines.append(f'  p{pi} [shape=oval, label="{label}"];')
    for ci, pi in tree.edges:
        lines.append(f"  c{ci} -- p{pi};")
    lines.append("}")
    return "\n".join(lines)
