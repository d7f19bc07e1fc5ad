"""Exact desk-scale oracles.

Computes the density (maximum of 2|E(H)|/(|V(H)|-1) over odd vertex subsets
of size at least three), the chromatic index and the total chromatic number
by exhaustive backtracking, enumerates k-dense vertex sets, tests edge
criticality, and cross-checks the density identity chi' = ceil(rho) for
graphs with chi' > Delta + 1.

Every returned number comes with a machine-checkable witness, and every
"no smaller palette exists" claim is certified by an exhausted search (or by
a bound that makes the search unnecessary: the max degree or the density).
Caps and the node budget are explicit errors, never silent truncation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coloring import EdgeColoring, TotalColoring, coloring_to_doc
from .config import DEFAULT_CONFIG, RunConfig
from .errors import (
    BudgetExceededError,
    GuaranteeViolationError,
    InstanceTooLargeError,
)
from .multigraph import Multigraph

__all__ = [
    "DensityWitness",
    "ChromaticCertificate",
    "DensityIdentityReport",
    "density",
    "chromatic_index",
    "total_chromatic_number",
    "find_k_edge_coloring",
    "is_k_dense",
    "maximal_k_dense_subgraphs",
    "gs_verify",
    "is_edge_critical",
]


class _Budget:
    """Search-node meter; raises once the configured cap is crossed."""

    __slots__ = ("limit", "spent")

    def __init__(self, limit: int) -> None:
        self.limit = limit
        self.spent = 0

    def spend(self) -> None:
        self.spent += 1
        if self.spent > self.limit:
            raise BudgetExceededError(
                f"search budget of {self.limit} nodes exhausted"
            )


@dataclass(frozen=True)
class DensityWitness:
    """Exact density value with a maximizing odd vertex set.

    ``value`` is the exact rational 2|E(H)|/(|V(H)|-1) of the best subset;
    ``witness`` is the lexicographically smallest maximizer, or ``None``
    when the value is zero (fewer than three vertices, or no edges).
    """

    value: Fraction
    witness: tuple[int, ...] | None

    def to_doc(self) -> dict:
        return {
            "value": str(self.value),
            "witness": list(self.witness) if self.witness is not None else None,
        }


@dataclass(frozen=True)
class ChromaticCertificate:
    """An exact chromatic quantity plus the witness coloring.

    ``lower_bound_reason`` records why k-1 colors are impossible:
    ``max-degree`` (k equals the maximum degree, or Delta+1 for the total
    number), ``density`` (k equals the density ceiling), or ``exhaustion``
    (the k-1 search ran to completion without a coloring).
    """

    quantity: str
    k: int
    witness: EdgeColoring | TotalColoring
    lower_bound_reason: str
    search_nodes: int

    def to_doc(self) -> dict:
        return {
            "quantity": self.quantity,
            "k": self.k,
            "lower_bound_reason": self.lower_bound_reason,
            "search_nodes": self.search_nodes,
            "coloring": coloring_to_doc(self.witness),
        }


@dataclass(frozen=True)
class DensityIdentityReport:
    """Outcome of the chi' = ceil(rho) cross-check."""

    ok: bool
    vacuous: bool
    chi_prime: int
    delta: int
    rho: Fraction
    ceil_rho: int

    def to_doc(self) -> dict:
        return {
            "ok": self.ok,
            "vacuous": self.vacuous,
            "chi_prime": self.chi_prime,
            "delta": self.delta,
            "rho": str(self.rho),
            "ceil_rho": self.ceil_rho,
        }


def density(graph: Multigraph, config: RunConfig = DEFAULT_CONFIG) -> DensityWitness:
    """Maximize 2|E(G[S])|/(|S|-1) over odd subsets S with |S| >= 3.

    Depth-first lexicographic enumeration with an admissible completion
    bound: a partial subset is abandoned when even adding the highest-degree
    remaining vertices cannot beat the incumbent.  The first maximizer found
    is kept, which makes the witness the lexicographically smallest one.
    """
    n = graph.n
    if n > config.density_max_n:
        raise InstanceTooLargeError(
            f"density enumeration capped at n = {config.density_max_n}, got {n}"
        )
    if n < 3:
        return DensityWitness(Fraction(0), None)
    cnt = graph.adjacency_counts
    deg = graph.degrees
    best_num, best_den = 0, 1
    best: tuple[int, ...] | None = None
    subset: list[int] = []
    to_subset = [0] * n  # parallel-edge count from each vertex into the subset

    def walk(start: int, inner: int) -> None:
        nonlocal best_num, best_den, best
        size = len(subset)
        if size >= 3 and size % 2 == 1:
            num, den = 2 * inner, size - 1
            if num * best_den > best_num * den:
                best_num, best_den, best = num, den, tuple(subset)
        if start == n:
            return
        pool = sorted((deg[v] for v in range(start, n)), reverse=True)
        gain = 0
        promising = False
        for extra in range(len(pool) + 1):
            total = size + extra
            if (
                total >= 3
                and total % 2 == 1
                and 2 * (inner + gain) * best_den > best_num * (total - 1)
            ):
                promising = True
                break
            if extra < len(pool):
                gain += pool[extra]
        if not promising:
            return
        for v in range(start, n):
            added = to_subset[v]
            subset.append(v)
            row = cnt[v]
            for w in range(v + 1, n):
                to_subset[w] += row[w]
            walk(v + 1, inner + added)
            for w in range(v + 1, n):
                to_subset[w] -= row[w]
            subset.pop()

    walk(0, 0)
    if best is None:
        return DensityWitness(Fraction(0), None)
    return DensityWitness(Fraction(best_num, best_den), best)


def is_k_dense(graph: Multigraph, vertices, k: int) -> bool:
    """Odd set of at least three vertices inducing exactly k(|S|-1)/2 edges."""
    inside = graph._vertex_set(vertices)
    size = len(inside)
    if size < 3 or size % 2 == 0:
        return False
    return 2 * graph.edges_inside(inside) == k * (size - 1)


def maximal_k_dense_subgraphs(
    graph: Multigraph, k: int, config: RunConfig = DEFAULT_CONFIG
) -> list[tuple[int, ...]]:
    """All inclusion-maximal k-dense vertex sets, sorted lexicographically."""
    n = graph.n
    if n > config.density_max_n:
        raise InstanceTooLargeError(
            f"k-dense enumeration capped at n = {config.density_max_n}, got {n}"
        )
    cnt = graph.adjacency_counts
    deg = graph.degrees
    found: list[tuple[int, ...]] = []
    subset: list[int] = []
    to_subset = [0] * n

    def walk(start: int, inner: int) -> None:
        size = len(subset)
        if size >= 3 and size % 2 == 1 and 2 * inner == k * (size - 1):
            found.append(tuple(subset))
        if start == n:
            return
        # completion bound: can any extension still reach density exactly k?
        pool = sorted((deg[v] for v in range(start, n)), reverse=True)
        gain = 0
        reachable = False
        for extra in range(len(pool) + 1):
            total = size + extra
            if total >= 3 and total % 2 == 1 and 2 * (inner + gain) >= k * (total - 1):
                reachable = True
                break
            if extra < len(pool):
                gain += pool[extra]
        if not reachable:
            return
        for v in range(start, n):
            added = to_subset[v]
            subset.append(v)
            row = cnt[v]
            for w in range(v + 1, n):
                to_subset[w] += row[w]
            walk(v + 1, inner + added)
            for w in range(v + 1, n):
                to_subset[w] -= row[w]
            subset.pop()

    walk(0, 0)
    sets = [frozenset(s) for s in found]
    maximal = [
        tuple(sorted(s))
        for s in sets
        if not any(s < other for other in sets)
    ]
    return sorted(set(maximal))


def _edge_color_search(
    graph: Multigraph, k: int, budget: _Budget
) -> list[int] | None:
    """Proper k-edge-coloring by backtracking, or None when none exists.

    Edges are processed in order of decreasing endpoint degree sum, with
    ties broken by endpoint pair so parallel classes stay contiguous, then
    by id; the i-th processed edge may use at most one color beyond those
    already in use (symmetry breaking).  Parallel edges are interchangeable,
    so colors are additionally forced ascending along each parallel class
    (every proper coloring canonicalizes into this form).  A branch is cut
    when some vertex has fewer free colors than uncolored incident edges,
    or some uncolored edge has no color free at both ends.
    """
    m = graph.m
    if m == 0:
        return []
    deg = graph.degrees
    if max(deg) > k:
        return None
    edges = graph.edges
    incidence = graph.incidence

    def rank(e: int) -> tuple[int, int, int, int]:
        u, v = edges[e]
        lo, hi = (u, v) if u < v else (v, u)
        return (-(deg[u] + deg[v]), lo, hi, e)

    order = sorted(range(m), key=rank)
    last_parallel: dict[tuple[int, int], int] = {}
    parallel_pred = [-1] * m
    for e, (u, v) in enumerate(edges):
        key = (u, v) if u < v else (v, u)
        if key in last_parallel:
            parallel_pred[e] = last_parallel[key]
        last_parallel[key] = e
    full = (1 << k) - 1
    vertex_mask = [0] * graph.n
    uncolored_at = list(deg)
    assign = [0] * m

    def forward_ok(u: int, v: int) -> bool:
        for w in (u, v):
            if k - vertex_mask[w].bit_count() < uncolored_at[w]:
                return False
            for eid in incidence[w]:
                if assign[eid] == 0:
                    a, b = edges[eid]
                    if (vertex_mask[a] | vertex_mask[b]) == full:
                        return False
        return True

    def extend(pos: int, used: int) -> bool:
        budget.spend()
        if pos == m:
            return True
        e = order[pos]
        u, v = edges[e]
        cap = used + 1 if used < k else k
        avail = ~(vertex_mask[u] | vertex_mask[v]) & ((1 << cap) - 1)
        pred = parallel_pred[e]
        if pred >= 0 and assign[pred]:
            avail &= ~((1 << assign[pred]) - 1)  # ascending within the class
        while avail:
            bit = avail & -avail
            avail -= bit
            assign[e] = bit.bit_length()
            vertex_mask[u] |= bit
            vertex_mask[v] |= bit
            uncolored_at[u] -= 1
            uncolored_at[v] -= 1
            if forward_ok(u, v) and extend(pos + 1, max(used, assign[e])):
                return True
            assign[e] = 0
            vertex_mask[u] ^= bit
            vertex_mask[v] ^= bit
            uncolored_at[u] += 1
            uncolored_at[v] += 1
        return False

    return assign if extend(0, 0) else None


def chromatic_index(
    graph: Multigraph, config: RunConfig = DEFAULT_CONFIG
) -> ChromaticCertificate:
    """Exact chromatic index with a proper witness coloring.

    The search starts at max(Delta, ceil(rho)) and increments; when the
    returned k exceeds both bounds, infeasibility of k-1 was certified by
    an exhausted backtracking run.
    """
    if graph.m > config.chi_index_max_edges:
        raise InstanceTooLargeError(
            f"chromatic-index search capped at m = {config.chi_index_max_edges}, "
            f"got {graph.m}"
        )
    if graph.m == 0:
        return ChromaticCertificate(
            "chromatic-index", 0, EdgeColoring(0, ()), "max-degree", 0
        )
    delta = graph.max_degree()
    lower = max(delta, 1)
    ceil_rho: int | None = None
    if graph.n <= config.density_max_n:
        ceil_rho = math.ceil(density(graph, config).value)
        lower = max(lower, ceil_rho)
    budget = _Budget(config.node_budget)
    upper = delta + graph.multiplicity()  # Vizing's bound for multigraphs
    for k in range(lower, upper + 1):
        assignment = _edge_color_search(graph, k, budget)
        if assignment is not None:
            if k == delta:
                reason = "max-degree"
            elif ceil_rho is not None and k == ceil_rho:
                reason = "density"
            else:
                reason = "exhaustion"
            return ChromaticCertificate(
                "chromatic-index",
                k,
                EdgeColoring(k, tuple(assignment)),
                reason,
                budget.spent,
            )
    raise GuaranteeViolationError(
        "no edge coloring found within Delta + multiplicity; this is a bug"
    )


def _dense_class_search(
    graph: Multigraph, k: int, budget: _Budget
) -> list[int] | None:
    """k-edge-coloring of a k-dense graph, one color class at a time.

    In a k-dense graph every class of a proper k-coloring is forced to be a
    near-perfect matching of exactly (n-1)/2 edges.  Classes are
    interchangeable, so each class is anchored at the smallest edge not yet
    assigned; members are added in ascending id order, and an edge stands
    aside while an unassigned parallel twin with a smaller id exists.
    Every proper coloring canonicalizes into this form by relabeling
    classes and swapping parallel twins, so the search is exhaustive.
    """
    n, m = graph.n, graph.m
    size = (n - 1) // 2
    edges = graph.edges
    by_pair: dict[tuple[int, int], list[int]] = {}
    twin_before: list[list[int]] = []
    for e, (u, v) in enumerate(edges):
        key = (u, v) if u < v else (v, u)
        twin_before.append(list(by_pair.get(key, ())))
        by_pair.setdefault(key, []).append(e)
    assign = [0] * m
    # counting invariants: each of the k classes covers a vertex at most
    # once and misses exactly one, so v is missed by exactly k - deg(v)
    # classes and its unassigned edges must fit into the classes left
    un_deg = list(graph.degrees)
    miss_left = [k - d for d in graph.degrees]
    if any(x < 0 for x in miss_left):
        return None
    full_cover = (1 << n) - 1

    def take(e: int, color: int) -> None:
        assign[e] = color
        un_deg[edges[e][0]] -= 1
        un_deg[edges[e][1]] -= 1

    def give_back(e: int) -> None:
        assign[e] = 0
        un_deg[edges[e][0]] += 1
        un_deg[edges[e][1]] += 1

    def build_class(color: int, start: int) -> bool:
        budget.spend()
        anchor = start
        while anchor < m and assign[anchor]:
            anchor += 1
        if anchor == m:
            return True
        if color > k:
            return False
        u, v = edges[anchor]
        take(anchor, color)
        if grow(color, anchor, anchor + 1, (1 << u) | (1 << v), 1):
            return True
        give_back(anchor)
        return False

    def grow(color: int, anchor: int, nxt: int, covered: int, count: int) -> bool:
        budget.spend()
        if count == size:
            missed = (full_cover ^ covered).bit_length() - 1
            if miss_left[missed] == 0:
                return False
            remaining = k - color
            for v in range(n):
                if un_deg[v] > remaining:
                    return False
            miss_left[missed] -= 1
            # everything below the anchor is already assigned
            if build_class(color + 1, anchor + 1):
                return True
            miss_left[missed] += 1
            return False
        exhausted = 0
        for v in range(n):
            if not (covered >> v) & 1 and un_deg[v] == 0:
                exhausted += 1
                if exhausted > 1:
                    return False  # only one vertex may go uncovered
        for e in range(nxt, m):
            if assign[e]:
                continue
            u, v = edges[e]
            if (covered >> u) & 1 or (covered >> v) & 1:
                continue
            if any(not assign[f] for f in twin_before[e]):
                continue
            take(e, color)
            if grow(color, anchor, e + 1, covered | (1 << u) | (1 << v), count + 1):
                return True
            give_back(e)
        return False

    return assign if build_class(1, 0) else None


def find_k_edge_coloring(
    graph: Multigraph, k: int, config: RunConfig = DEFAULT_CONFIG
) -> EdgeColoring | None:
    """Feasibility-only search for a proper k-edge-coloring.

    Unlike :func:`chromatic_index` this has no edge cap (only the node
    budget) and proves nothing about k-1.  For k-dense inputs the search
    decomposes the edges into exact near-perfect matching classes, which
    handles the large dense hosts produced by the embedding.
    """
    budget = _Budget(config.node_budget)
    if is_k_dense(graph, range(graph.n), k):
        assignment = _dense_class_search(graph, k, budget)
    else:
        assignment = _edge_color_search(graph, k, budget)
    if assignment is None:
        return None
    return EdgeColoring(k, tuple(assignment))


def _total_conflicts(graph: Multigraph) -> list[list[int]]:
    """Conflict lists over the n + m total-coloring elements.

    Element i < n is vertex i; element n + e is edge e.  Conflicts: adjacent
    vertices, vertex/incident edge, and edges sharing an endpoint.
    """
    n = graph.n
    adj: list[set[int]] = [set() for _ in range(n + graph.m)]
    for eid, (u, v) in enumerate(graph.edges):
        adj[u].add(v)
        adj[v].add(u)
        adj[u].add(n + eid)
        adj[v].add(n + eid)
        adj[n + eid].update((u, v))
    for ids in graph.incidence:
        for i, e in enumerate(ids):
            for f in ids[i + 1 :]:
                adj[n + e].add(n + f)
                adj[n + f].add(n + e)
    return [sorted(s) for s in adj]


def _conflict_color_search(
    neighbors: list[list[int]], order: list[int], k: int, budget: _Budget
) -> list[int] | None:
    """Proper coloring of a conflict graph with colors 1..k, or None."""
    count = len(neighbors)
    if count == 0:
        return []
    if k == 0:
        return None
    full = (1 << k) - 1
    forbidden = [0] * count
    colored = [False] * count
    assign = [0] * count

    def extend(pos: int, used: int) -> bool:
        budget.spend()
        if pos == count:
            return True
        i = order[pos]
        cap = used + 1 if used < k else k
        avail = ~forbidden[i] & ((1 << cap) - 1)
        while avail:
            bit = avail & -avail
            avail -= bit
            assign[i] = bit.bit_length()
            colored[i] = True
            touched = []
            dead = False
            for j in neighbors[i]:
                if not colored[j] and not forbidden[j] & bit:
                    forbidden[j] |= bit
                    touched.append(j)
                    if forbidden[j] == full:
                        dead = True
            if not dead and extend(pos + 1, max(used, assign[i])):
                return True
            for j in touched:
                forbidden[j] ^= bit
            colored[i] = False
            assign[i] = 0
        return False

    return assign if extend(0, 0) else None


def total_chromatic_number(
    graph: Multigraph, config: RunConfig = DEFAULT_CONFIG
) -> ChromaticCertificate:
    """Exact total chromatic number with a total witness coloring.

    Backtracking over the n + m elements starting from the Delta + 1 lower
    bound (a maximum-degree vertex and its incident edges are mutually
    conflicting); there is no structural bound beyond that, so any climb is
    certified by exhaustion.
    """
    n, m = graph.n, graph.m
    if n + m > config.total_max_elements:
        raise InstanceTooLargeError(
            f"total-coloring search capped at n + m = {config.total_max_elements}, "
            f"got {n + m}"
        )
    if n + m == 0:
        return ChromaticCertificate(
            "total-chromatic-number", 0, TotalColoring(0, (), ()), "max-degree", 0
        )
    neighbors = _total_conflicts(graph)
    order = sorted(range(n + m), key=lambda x: (-len(neighbors[x]), x))
    lower = graph.max_degree() + 1
    budget = _Budget(config.node_budget)
    for k in range(lower, n + m + 1):
        assignment = _conflict_color_search(neighbors, order, k, budget)
        if assignment is not None:
            reason = "max-degree" if k == lower else "exhaustion"
            witness = TotalColoring(
                k, tuple(assignment[n:]), tuple(assignment[:n])
            )
            return ChromaticCertificate(
                "total-chromatic-number", k, witness, reason, budget.spent
            )
    raise GuaranteeViolationError(
        "no total coloring found with n + m colors; this is a bug"
    )


def gs_verify(
    graph: Multigraph, config: RunConfig = DEFAULT_CONFIG
) -> DensityIdentityReport:
    """Check chi' = ceil(rho) for graphs with chi' > Delta + 1.

    Vacuously true when chi' <= Delta + 1; the report carries chi', Delta,
    rho and ceil(rho) either way.
    """
    cert = chromatic_index(graph, config)
    dens = density(graph, config)
    delta = graph.max_degree()
    ceil_rho = math.ceil(dens.value)
    vacuous = cert.k <= delta + 1
    return DensityIdentityReport(
        ok=vacuous or cert.k == ceil_rho,
        vacuous=vacuous,
        chi_prime=cert.k,
        delta=delta,
        rho=dens.value,
        ceil_rho=ceil_rho,
    )


def is_edge_critical(graph: Multigraph, config: RunConfig = DEFAULT_CONFIG) -> bool:
    """True when deleting any single edge lowers the chromatic index."""
    base = chromatic_index(graph, config).k
    for eid in range(graph.m):
        if chromatic_index(graph.without_edge(eid), config).k >= base:
            return False
    return True
