"""Graph construction for test corpora: families, random graphs, graph6 I/O.

graph6 is the interchange format (short form only, n <= 62): one printable
line per graph holding the size byte n + 63 followed by the upper-triangle
adjacency bits in column order (0,1),(0,2),(1,2),(0,3),... packed 6 bits per
character, most significant bit first, zero-padded.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .graph import ContractiaError, Graph, build_graph
from .connectivity import vertex_connectivity


class Graph6Error(ContractiaError, ValueError):
    pass


class CorpusError(ContractiaError, ValueError):
    pass


class GenerationError(ContractiaError, RuntimeError):
    pass


FAMILY_NAMES = ("complete", "complete_bipartite", "cycle", "wheel",
                "circulant", "prism", "theta")


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[int, ...]
    seed: int | None = None


def parse_family(text: str, seed: int | None = None) -> FamilySpec:
    """Parse CLI syntax like ``wheel:6`` or ``circulant:12,1,2,3``."""
    name, _, rest = text.partition(":")
    if not rest:
        raise GenerationError(f"family spec needs parameters, got {text!r}")
    try:
        params = tuple(int(p) for p in rest.split(","))
    except ValueError as exc:
        raise GenerationError(f"bad family parameters in {text!r}: {exc}") from None
    return FamilySpec(name, params, seed)


def complete(n: int) -> Graph:
    return build_graph(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise GenerationError("cycles need at least 3 vertices")
    return build_graph(n, ((i, (i + 1) % n) for i in range(n)))


def wheel(n: int) -> Graph:
    """Hub vertex 0 joined to a cycle on vertices 1..n-1."""
    if n < 4:
        raise GenerationError("wheels need at least 4 vertices")
    rim = n - 1
    edges = [(0, 1 + i) for i in range(rim)]
    edges += [(1 + i, 1 + (i + 1) % rim) for i in range(rim)]
    return build_graph(n, edges)


def circulant(n: int, jumps: tuple[int, ...]) -> Graph:
    if n < 3 or not jumps:
        raise GenerationError("circulants need n >= 3 and at least one jump")
    if any(j < 1 or j > n // 2 for j in jumps):
        raise GenerationError("circulant jumps must satisfy 1 <= j <= n/2")
    edges = [(i, (i + j) % n) for j in jumps for i in range(n)]
    return build_graph(n, edges)


def prism(n: int) -> Graph:
    """Two n-cycles joined by a perfect matching (3-regular)."""
    if n < 3:
        raise GenerationError("prisms need cycles of length >= 3")
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(n + i, n + (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return build_graph(2 * n, edges)


def theta(l1: int, l2: int, l3: int) -> Graph:
    """Vertices 0 and 1 joined by three disjoint paths with li inner vertices."""
    if min(l1, l2, l3) < 1:
        raise GenerationError("theta paths need at least one inner vertex each")
    edges = []
    nxt = 2
    for length in (l1, l2, l3):
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return build_graph(nxt, edges)


def petersen() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return build_graph(10, edges)


def icosahedron() -> Graph:
    edges = [(0, i) for i in range(1, 6)]
    edges += [(11, i) for i in range(6, 11)]
    edges += [(1 + i, 1 + (i + 1) % 5) for i in range(5)]
    edges += [(6 + i, 6 + (i + 1) % 5) for i in range(5)]
    edges += [(1 + i, 6 + i) for i in range(5)]
    edges += [(1 + i, 6 + (i + 1) % 5) for i in range(5)]
    return build_graph(12, edges)


def generate(spec: FamilySpec) -> Graph:
    """Deterministic graph for a family spec; validates parameter arity."""
    fam, p = spec.family, spec.params
    try:
        if fam == "complete":
            (n,) = p
            return complete(n)
        if fam == "complete_bipartite":
            a, b = p
            if a < 1 or b < 1:
                raise GenerationError("both sides need at least one vertex")
            return complete_bipartite(a, b)
        if fam == "cycle":
            (n,) = p
            return cycle(n)
        if fam == "wheel":
            (n,) = p
            return wheel(n)
        if fam == "circulant":
            n, *jumps = p
            return circulant(n, tuple(jumps))
        if fam == "prism":
            (n,) = p
            return prism(n)
        if fam == "theta":
            l1, l2, l3 = p
            return theta(l1, l2, l3)
    except ValueError as exc:
        raise GenerationError(f"bad parameters for family {fam}: {exc}") from None
    raise GenerationError(f"unknown family {fam!r} (choose from {', '.join(FAMILY_NAMES)})")


def random_k_connected(
    n: int,
    edge_prob: float,
    seed: int,
    k: int,
    max_attempts: int = 2000,
) -> tuple[Graph, int]:
    """Rejection-sample edge-probability graphs until connectivity >= k.

    Deterministic for a given seed; returns (graph, attempts used).
    """
    rng = random.Random(seed)
    for attempt in range(1, max_attempts + 1):
        edges = [e for e in combinations(range(n), 2) if rng.random() < edge_prob]
        g = build_graph(n, edges)
        if n >= k + 1 and vertex_connectivity(g) >= k:
            return g, attempt
    raise GenerationError(
        f"no {k}-connected sample in {max_attempts} attempts "
        f"(n={n}, p={edge_prob}, seed={seed})"
    )


def random_3_connected(
    n: int, edge_prob: float, seed: int, max_attempts: int = 2000
) -> tuple[Graph, int]:
    return random_k_connected(n, edge_prob, seed, 3, max_attempts)


def matches_k34(g: Graph) -> bool:
    """Exact isomorphism test against the complete bipartite graph K_{3,4}."""
    if g.n != 7 or g.m != 12:
        return False
    side_a = [v for v in range(7) if g.degree(v) == 4]
    side_b = [v for v in range(7) if g.degree(v) == 3]
    if len(side_a) != 3 or len(side_b) != 4:
        return False
    b_mask = 0
    for v in side_b:
        b_mask |= 1 << v
    return all(g.adj[v] == b_mask for v in side_a)


def to_graph6(g: Graph) -> str:
    if g.n > 62:
        raise Graph6Error("only the short graph6 form (n <= 62) is supported")
    out = [chr(g.n + 63)]
    acc = 0
    nbits = 0
    for col in range(1, g.n):
        for row in range(col):
            acc = acc << 1 | (g.adj[row] >> col & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise Graph6Error("empty graph6 line")
    size = ord(line[0]) - 63
    if line[0] == "~":
        raise Graph6Error("long graph6 size forms (n > 62) are not supported")
    if not 0 <= size <= 62:
        raise Graph6Error(f"bad size character {line[0]!r}")
    need = size * (size - 1) // 2
    body = line[1:]
    if len(body) != (need + 5) // 6:
        raise Graph6Error(
            f"expected {(need + 5) // 6} data characters for n={size}, got {len(body)}"
        )
    bits_acc = 0
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise Graph6Error(f"bad data character {ch!r}")
        bits_acc = bits_acc << 6 | val
    total_bits = 6 * len(body)
    pad = total_bits - need
    if pad and bits_acc & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    edges = []
    pos = 0
    for col in range(1, size):
        for row in range(col):
            if bits_acc >> (total_bits - 1 - pos) & 1:
                edges.append((row, col))
            pos += 1
    return build_graph(size, edges)


def read_corpus(path: str | Path) -> Iterator[tuple[int, Graph]]:
    """Yield (line number, graph) for each non-comment line of a corpus file."""
    path = Path(path)
    try:
        lines = path.read_text().splitlines()
    except OSError as exc:
        raise CorpusError(f"cannot read corpus {path}: {exc}") from None
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield line_no, parse_graph6(line)
        except Graph6Error as exc:
            raise CorpusError(f"{path}:{line_no}: {exc}") from None
