"""Constructive search for k-contractible sets.

The driver grows a contractible set one vertex at a time.  When the current
set is maximal, a replacement step trades one vertex of the set for an
adjacent degree-2 pair of the remainder: pick four remainder vertices
v1..v4 (v1v2 an edge, all of remainder degree 2), choose a common neighbor
x of v3 and v4 inside the set that avoids the "forbidden-route" vertices,
and take {v1, v2} plus the set minus x.  Which quadruple to use is decided
by a case analysis on the remainder: simple cycle, a pendant part with at
least 5 vertices, or all pendant parts of size 4.

Every produced set is re-verified; if the principled choice of x ever fails
verification the step falls back to trying every candidate (tagged), and the
driver falls back to the exhaustive oracle (tagged); silent failure would
hide exactly the gaps this package exists to detect.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .graph import (
    ContractiaError,
    Graph,
    bit,
    bits,
    delete_set,
    vertex_list,
)
from .connectivity import is_k_connected
from .contractible import (
    BudgetExceededError,
    DEFAULT_BUDGET,
    PreconditionError,
    check_remainder_structure,
    extend_once,
    is_contractible,
    is_simple_cycle,
    oracle_find,
)
from .decomposition import Part, decompose

TAG_BASE_ORACLE = "base-oracle"
TAG_EXTEND_ONCE = "extend-once"
TAG_CASE_CYCLE = "case1-cycle"
TAG_CASE_PENDANT5 = "case2.1-pendant5"
TAG_CASE_PENDANT4 = "case2.2.1-pendant4"
TAG_FALLBACK_EXHAUSTIVE = "fallback-exhaustive-C"
TAG_FALLBACK_ORACLE = "fallback-oracle"


class SelectionConditionError(ContractiaError, ValueError):
    """The candidate/forbidden cardinality condition |C| > |F| fails."""


class NoRouteTargetError(ContractiaError, ValueError):
    """Every vertex of W is forbidden, so no shortest-path target exists."""


class ExchangeFailedError(ContractiaError, RuntimeError):
    """No exchange candidate produced a verified contractible set."""


class SearchHypothesisError(ContractiaError, ValueError):
    """A structural hypothesis of the step (e.g. remainder size) is violated."""


class PropertyViolationError(ContractiaError, RuntimeError):
    """A property the search asserts unconditionally failed; a finding."""


class UnreachablePendantCaseError(ContractiaError, RuntimeError):
    """Both orientations failed the cardinality condition for every pendant pair.

    Carries the neighborhood counters of the first pair as a diagnostic; the
    counting argument rules this out whenever the degree hypotheses hold.
    """

    def __init__(self, stats: "PendantStats", hypotheses_held: bool):
        suffix = (" UNDER SATISFIED HYPOTHESES (counterexample or bug)"
                  if hypotheses_held else "")
        super().__init__(
            f"no pendant pair admits the exchange{suffix}; first-pair stats: {stats}"
        )
        self.stats = stats
        self.hypotheses_held = hypotheses_held


def delta_threshold(k: int) -> int:
    """Minimum-degree bound floor((2k + 1) / 3) + 2 required at target size k."""
    if k < 5:
        raise PreconditionError(f"threshold is defined for k >= 5, got {k}")
    return (2 * k + 1) // 3 + 2


def hypotheses_satisfied(g: Graph, k: int) -> bool:
    """Size and degree conditions under which the constructive route is run."""
    return k >= 5 and g.n >= k + 3 and g.min_degree >= delta_threshold(k)


@dataclass(frozen=True)
class SelectionTrace:
    """Bookkeeping of one exchange selection.

    ``candidates`` is the common W-neighborhood of v3 and v4, ``forbidden``
    the W-vertices with no neighbor among {v1, v2}, ``path_neighbors`` the
    shortest-route second vertices protecting connectivity.  On the primary
    path the chosen vertex always lies in candidates minus path_neighbors.
    """

    candidates: int
    forbidden: int
    path_neighbors: int
    chosen: int
    result: int


def select_common_neighbor(
    g: Graph, w: int, v1: int, v2: int, v3: int, v4: int
) -> SelectionTrace:
    """Pick the exchange vertex x and build the size-|W|+1 replacement set.

    x is the smallest common W-neighbor of v3 and v4 outside the protected
    route vertices; the replacement set is {v1, v2} plus W minus x.
    """
    quad = (v1, v2, v3, v4)
    if len(set(quad)) != 4:
        raise PreconditionError("v1..v4 must be distinct")
    if any(w >> v & 1 for v in quad):
        raise PreconditionError("v1..v4 must lie outside W")
    if not g.has_edge(v1, v2):
        raise PreconditionError("v1 and v2 must be adjacent")

    candidates = g.adj[v3] & g.adj[v4] & w
    forbidden = w & ~(g.adj[v1] | g.adj[v2])
    if candidates.bit_count() <= forbidden.bit_count():
        raise SelectionConditionError(
            f"need more candidates than forbidden vertices: "
            f"|C|={candidates.bit_count()} <= |F|={forbidden.bit_count()}"
        )
    if forbidden == w:
        # unreachable when the cardinality condition holds (C is inside W)
        raise NoRouteTargetError("every vertex of W is forbidden")

    path_neighbors = 0
    if forbidden:
        # BFS layering inside G(W) from the non-forbidden vertices; each
        # forbidden vertex contributes its smallest strictly-closer neighbor
        dist = {v: 0 for v in bits(w & ~forbidden)}
        frontier = w & ~forbidden
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= w
            new = 0
            for u in bits(nxt):
                if u not in dist:
                    dist[u] = d
                    new |= bit(u)
            frontier = new
        for f in bits(forbidden):
            if f not in dist:
                raise PreconditionError("W does not induce a connected subgraph")
            for u in bits(g.adj[f] & w):
                if dist.get(u, -1) == dist[f] - 1:
                    path_neighbors |= bit(u)
                    break  # bits() ascends, so this is the smallest-id choice

    pool = candidates & ~path_neighbors
    assert pool, "candidate pool empty despite |C| > |F| >= |P|"
    x = (pool & -pool).bit_length() - 1
    result = (w & ~bit(x)) | bit(v1) | bit(v2)

    assert path_neighbors.bit_count() <= forbidden.bit_count()
    assert result.bit_count() == w.bit_count() + 1
    return SelectionTrace(candidates, forbidden, path_neighbors, x, result)


def _check_quad(g: Graph, w: int, quad: tuple[int, int, int, int]) -> None:
    rem = g.full_mask & ~w
    if g.n < w.bit_count() + 4:
        raise PreconditionError("graph too small: need at least |W| + 4 vertices")
    for v in quad:
        if w >> v & 1:
            raise PreconditionError(f"vertex {v} lies in W")
        if (g.adj[v] & rem).bit_count() != 2:
            raise PreconditionError(f"vertex {v} must have remainder degree 2")


def _exchange_step(
    g: Graph,
    w: int,
    quad: tuple[int, int, int, int],
    cross_check: bool,
) -> tuple[int, SelectionTrace, bool]:
    """Run one exchange; returns (new set, trace, used exhaustive fallback)."""
    _check_quad(g, w, quad)
    trace = select_common_neighbor(g, w, *quad)

    if cross_check:
        # independently confirm some valid x exists outside the route vertices
        v1, v2 = quad[0], quad[1]
        pool = trace.candidates & ~trace.path_neighbors
        witnesses = [
            x for x in bits(pool)
            if is_contractible(g, (w & ~bit(x)) | bit(v1) | bit(v2))
        ]
        if not witnesses:
            raise PropertyViolationError(
                f"no valid exchange vertex in C\\P for quad {quad} on W={vertex_list(w)}"
            )
        if trace.chosen != witnesses[0] or not is_contractible(g, trace.result):
            raise PropertyViolationError(
                f"principled choice x={trace.chosen} fails verification for quad {quad}"
            )

    if is_contractible(g, trace.result):
        return trace.result, trace, False

    # verification of the principled x failed: try every candidate in order
    v1, v2 = quad[0], quad[1]
    for x in bits(trace.candidates):
        cand = (w & ~bit(x)) | bit(v1) | bit(v2)
        if is_contractible(g, cand):
            return cand, replace(trace, chosen=x, result=cand), True
    raise ExchangeFailedError(
        f"all {trace.candidates.bit_count()} exchange candidates failed for quad {quad}"
    )


def extend_by_exchange(
    g: Graph, w: int, v1: int, v2: int, v3: int, v4: int
) -> int:
    """Verified contractible set of size |W| + 1 built by the exchange step."""
    result, _, _ = _exchange_step(g, w, (v1, v2, v3, v4), cross_check=False)
    return result


@dataclass(frozen=True)
class PendantStats:
    """Neighborhood-in-W counters for the interiors of two pendant 4-parts.

    For interiors {a1, a2} and {b1, b2}: ``a_common`` counts the shared
    W-neighbors of a1 and a2, ``a_only_1``/``a_only_2`` the exclusive ones;
    likewise for b.  Under the degree hypotheses each interior vertex has at
    least k - c - 2 neighbors in W, which forces the weighted total below to
    reach 4(k - c - 2), while the case condition caps it at 2k - 2.
    """

    a_common: int
    a_only_1: int
    a_only_2: int
    b_common: int
    b_only_1: int
    b_only_2: int
    k: int
    c: int

    @property
    def weighted_total(self) -> int:
        return (2 * self.a_common + self.a_only_1 + self.a_only_2
                + 2 * self.b_common + self.b_only_1 + self.b_only_2)

    @property
    def degree_floor(self) -> int:
        return self.k - self.c - 2

    def degree_bounds_hold(self) -> bool:
        f = self.degree_floor
        return (self.a_common + self.a_only_1 >= f
                and self.a_common + self.a_only_2 >= f
                and self.b_common + self.b_only_1 >= f
                and self.b_common + self.b_only_2 >= f)


def pendant_pair_stats(
    g: Graph, w: int, part_a: Part, part_b: Part, c: int | None = None
) -> PendantStats:
    """Counters for a pair of pendant 4-vertex parts of G - W (original ids)."""
    for p in (part_a, part_b):
        if not p.is_pendant or p.size() != 4 or p.interior.bit_count() != 2:
            raise PreconditionError("stats need pendant parts on 4 vertices with 2-vertex interiors")
    k = w.bit_count() + 1
    if c is None:
        c = max(0, (k - 5) // 3)
    a1, a2 = vertex_list(part_a.interior)
    b1, b2 = vertex_list(part_b.interior)
    na1, na2 = g.adj[a1] & w, g.adj[a2] & w
    nb1, nb2 = g.adj[b1] & w, g.adj[b2] & w
    return PendantStats(
        a_common=(na1 & na2).bit_count(),
        a_only_1=(na1 & ~na2).bit_count(),
        a_only_2=(na2 & ~na1).bit_count(),
        b_common=(nb1 & nb2).bit_count(),
        b_only_1=(nb1 & ~nb2).bit_count(),
        b_only_2=(nb2 & ~nb1).bit_count(),
        k=k,
        c=c,
    )


@dataclass(frozen=True)
class StepResult:
    found: int
    case: str
    trace: SelectionTrace | None


def _cycle_order(g: Graph, mask: int) -> list[int]:
    # start at the smallest vertex, walk toward its smaller neighbor
    start = (mask & -mask).bit_length() - 1
    first = ((g.adj[start] & mask) & -(g.adj[start] & mask)).bit_length() - 1
    order = [start, first]
    while True:
        nxt_mask = g.adj[order[-1]] & mask & ~bit(order[-2]) & ~bit(start)
        if not nxt_mask:
            break
        order.append((nxt_mask & -nxt_mask).bit_length() - 1)
    return order


def _interior_path(g: Graph, rem: int, part: Part) -> list[int]:
    # interior vertices of a cycle part form a chain in the remainder;
    # order it from the smaller boundary vertex
    r = (part.boundary & -part.boundary).bit_length() - 1
    interior = part.interior
    first_mask = g.adj[r] & interior
    path = [(first_mask & -first_mask).bit_length() - 1]
    seen = bit(path[0])
    while len(path) < interior.bit_count():
        nxt = g.adj[path[-1]] & interior & ~seen
        path.append((nxt & -nxt).bit_length() - 1)
        seen |= nxt & -nxt
    return path


def _check_cycle_counting(g: Graph, w: int, order: list[int], k: int, c: int) -> None:
    # the intersection/complement cardinalities the cycle case relies on;
    # checked whenever the degree hypotheses actually hold
    m = len(order)
    for i in range(m):
        ri, r1, r2, r3 = (order[i % m], order[(i + 1) % m],
                          order[(i + 2) % m], order[(i + 3) % m])
        common = (g.adj[ri] & g.adj[r3] & w).bit_count()
        uncovered = (w & ~(g.adj[r1] | g.adj[r2])).bit_count()
        if common < c + 2 or uncovered > c + 1:
            raise PropertyViolationError(
                f"cycle-case counting failed at position {i}: "
                f"|common|={common} (need >= {c + 2}), "
                f"|uncovered|={uncovered} (need <= {c + 1})"
            )


def step_from_maximal(
    g: Graph,
    w: int,
    c: int | None = None,
    *,
    cross_check: bool = False,
) -> StepResult:
    """Grow a maximal contractible set by one vertex via the exchange step.

    ``c`` is the slack parameter of the degree hypothesis (minimum degree
    >= |W| + 1 - c); when omitted it is derived from the target size.
    """
    k = w.bit_count() + 1
    if c is None:
        c = max(0, (k - 5) // 3)
    rem = g.full_mask & ~w
    if rem.bit_count() < 4:
        raise SearchHypothesisError("remainder has fewer than 4 vertices")

    if is_simple_cycle(g, rem):
        order = _cycle_order(g, rem)
        m = len(order)
        if g.min_degree >= k - c and k >= 3 * c + 5:
            _check_cycle_counting(g, w, order, k, c)
        last_error: ContractiaError | None = None
        for i in range(m):
            quad = (order[(i + 1) % m], order[(i + 2) % m],
                    order[i % m], order[(i + 3) % m])
            try:
                found, trace, fb = _exchange_step(g, w, quad, cross_check)
            except (SelectionConditionError, ExchangeFailedError) as exc:
                last_error = exc
                continue
            return StepResult(found, TAG_FALLBACK_EXHAUSTIVE if fb else TAG_CASE_CYCLE, trace)
        raise ExchangeFailedError(f"no cycle position admits the exchange: {last_error}")

    # remainder is 2-connected and not a cycle: decompose it
    h, rel = delete_set(g, w)
    dec = decompose(h)
    pendant = [
        Part(
            vertices=rel.old_mask(p.vertices),
            boundary=rel.old_mask(p.boundary),
            interior=rel.old_mask(p.interior),
            is_cycle=p.is_cycle,
            is_pendant=True,
        )
        for p in dec.parts
        if p.is_pendant
    ]
    if len(pendant) < 2 or any(not p.is_cycle or p.size() < 4 for p in pendant):
        raise SearchHypothesisError(
            "remainder lacks two pendant cycle parts of length >= 4; "
            "is W really maximal contractible?"
        )

    big = [p for p in pendant if p.size() >= 5]
    if big:
        last_error = None
        for part in big:
            w123 = _interior_path(g, rem, part)[:3]
            others = 0
            for other in pendant:
                if other.vertices != part.vertices:
                    others |= other.interior
            for u in bits(others):
                quad = (w123[0], w123[1], w123[2], u)
                try:
                    found, trace, fb = _exchange_step(g, w, quad, cross_check)
                except (SelectionConditionError, ExchangeFailedError) as exc:
                    last_error = exc
                    continue
                return StepResult(
                    found, TAG_FALLBACK_EXHAUSTIVE if fb else TAG_CASE_PENDANT5, trace
                )
        raise ExchangeFailedError(f"no long-pendant quadruple admits the exchange: {last_error}")

    # all pendant parts have exactly 4 vertices
    first_stats: PendantStats | None = None
    last_error = None
    for i in range(len(pendant)):
        for j in range(i + 1, len(pendant)):
            part_a, part_b = pendant[i], pendant[j]
            stats = pendant_pair_stats(g, w, part_a, part_b, c)
            if first_stats is None:
                first_stats = stats
            a1, a2 = vertex_list(part_a.interior)
            b1, b2 = vertex_list(part_b.interior)
            uncovered_a = (w & ~(g.adj[a1] | g.adj[a2])).bit_count()
            uncovered_b = (w & ~(g.adj[b1] | g.adj[b2])).bit_count()
            quads = []
            if stats.b_common > uncovered_a:
                quads.append((a1, a2, b1, b2))
            if stats.a_common > uncovered_b:
                quads.append((b1, b2, a1, a2))
            for quad in quads:
                try:
                    found, trace, fb = _exchange_step(g, w, quad, cross_check)
                except (SelectionConditionError, ExchangeFailedError) as exc:
                    last_error = exc
                    continue
                return StepResult(
                    found, TAG_FALLBACK_EXHAUSTIVE if fb else TAG_CASE_PENDANT4, trace
                )
    if last_error is not None:
        raise ExchangeFailedError(f"every admissible pendant-pair quadruple failed: {last_error}")
    assert first_stats is not None
    raise UnreachablePendantCaseError(
        stats=first_stats,
        hypotheses_held=g.min_degree >= k - c and k >= 3 * c + 5 and g.n >= k + 3,
    )


@dataclass(frozen=True)
class Level:
    k: int
    case: str
    trace: SelectionTrace | None
    set_after: int


@dataclass(frozen=True)
class SearchResult:
    """A verified k-contractible set with its per-level construction trace."""

    k: int
    found: int
    levels: tuple[Level, ...]
    fallback_reason: str | None = None

    def sorted_vertices(self) -> list[int]:
        return vertex_list(self.found)

    def case_tags(self) -> list[str]:
        return [lv.case for lv in self.levels]


def find_k_contractible(
    g: Graph,
    k: int,
    *,
    budget: int = DEFAULT_BUDGET,
    check: bool = False,
    connectivity: int | None = None,
) -> SearchResult | None:
    """Find a k-contractible set; None if provably none exists.

    When the size and degree hypotheses hold, runs the constructive
    induction: a 4-vertex base from the oracle, then one vertex per level by
    single-vertex extension or, at maximal sets, the exchange step.  On any
    constructive failure (or when the hypotheses fail) the exhaustive oracle
    decides the answer; the taken route is recorded level by level.

    ``check`` additionally cross-validates every exchange, the structural
    guarantees of every maximal intermediate set, and per-level oracle
    agreement, raising :class:`PropertyViolationError` on any mismatch.
    """
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if connectivity is not None:
        three_connected = connectivity >= 3 and g.n >= 4
    else:
        three_connected = is_k_connected(g, 3)
    if not three_connected:
        raise PreconditionError("search requires a 3-connected graph")

    fallback_reason: str | None = None
    if hypotheses_satisfied(g, k):
        try:
            return constructive_search(g, k, budget=budget, check=check)
        except (BudgetExceededError, PropertyViolationError):
            raise
        except ContractiaError as exc:
            fallback_reason = f"{type(exc).__name__}: {exc}"

    w = oracle_find(g, k, k, budget=budget)
    if w is None:
        return None
    assert is_contractible(g, w)
    return SearchResult(
        k=k,
        found=w,
        levels=(Level(k, TAG_FALLBACK_ORACLE, None, w),),
        fallback_reason=fallback_reason,
    )


def constructive_search(
    g: Graph, k: int, *, budget: int = DEFAULT_BUDGET, check: bool = False
) -> SearchResult:
    """Run the constructive induction unconditionally (no oracle fallback)."""
    w = oracle_find(g, 4, 4, budget=budget)
    if w is None:
        raise SearchHypothesisError("no 4-contractible base set exists")
    levels = [Level(4, TAG_BASE_ORACLE, None, w)]
    for j in range(5, k + 1):
        x = extend_once(g, w)
        if x is not None:
            w |= bit(x)
            levels.append(Level(j, TAG_EXTEND_ONCE, None, w))
        else:
            if check and not is_simple_cycle(g, g.full_mask & ~w):
                report = check_remainder_structure(g, w)
                if report.violations:
                    raise PropertyViolationError(
                        "structural checks failed at level "
                        f"{j}: {'; '.join(report.violations)}"
                    )
            step = step_from_maximal(g, w, (j - 5) // 3, cross_check=check)
            w = step.found
            levels.append(Level(j, step.case, step.trace, w))
        if check and oracle_find(g, j, j, budget=budget) is None:
            raise PropertyViolationError(
                f"oracle disagrees: constructive route found a {j}-set "
                "but exhaustive enumeration found none"
            )
    assert is_contractible(g, w)
    return SearchResult(k=k, found=w, levels=tuple(levels))
