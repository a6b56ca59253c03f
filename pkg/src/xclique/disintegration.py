"""Core extraction by iterative low-degree peeling and the
circumference-preserving edge-maximal closure.

The (t+1)-core is unique regardless of deletion order; the recorded trace
fixes one reproducible order (lowest qualifying index first, after an
optional seed vertex).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import Graph, add_edge, induced_subgraph
from .invariants import circumference, count_cliques


class DisintegrationError(Exception):
    pass


class SeedDegreeError(DisintegrationError):
    """Seed vertex has degree above the peeling threshold."""


@dataclass(frozen=True)
class DisintegrationTrace:
    """Deletion log plus the residual core in original vertex labels."""

    deleted: tuple[tuple[int, int], ...]  # (vertex, degree at deletion)
    core_vertices: tuple[int, ...]
    core: Graph  # induced subgraph on core_vertices; order 0 when null

    def is_null(self) -> bool:
        return self.core.n == 0


def _peel(g: Graph, t: int, first: int | None) -> DisintegrationTrace:
    alive = (1 << g.n) - 1
    deleted = []
    if first is not None:
        d = g.adj[first].bit_count()
        if d > t:
            raise SeedDegreeError(f"seed {first} has degree {d} > t = {t}")
        deleted.append((first, d))
        alive &= ~(1 << first)
    while alive:
        victim = -1
        bits = alive
        while bits:
            v = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            if (g.adj[v] & alive).bit_count() <= t:
                victim = v
                break
        if victim < 0:
            break
        deleted.append((victim, (g.adj[victim] & alive).bit_count()))
        alive &= ~(1 << victim)
    core_vertices = []
    bits = alive
    while bits:
        core_vertices.append((bits & -bits).bit_length() - 1)
        bits &= bits - 1
    return DisintegrationTrace(
        tuple(deleted), tuple(core_vertices), induced_subgraph(g, core_vertices)
    )


def core(g: Graph, t: int) -> DisintegrationTrace:
    """Delete vertices of degree <= t until none remain or min degree > t."""
    return _peel(g, t, None)


def core_with_seed(g: Graph, t: int, w: int) -> DisintegrationTrace:
    """Same core, with w forced to be the first deletion."""
    g._check_vertex(w)
    return _peel(g, t, w)


def core_vertex_set(g: Graph, t: int, order_hint=None) -> int:
    """Bitmask of the (t+1)-core, peeling in an arbitrary caller-chosen order.

    order_hint maps a list of qualifying vertices to the one to delete next;
    used to demonstrate order-independence of the result.
    """
    alive = (1 << g.n) - 1
    while alive:
        candidates = []
        bits = alive
        while bits:
            v = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            if (g.adj[v] & alive).bit_count() <= t:
                candidates.append(v)
        if not candidates:
            break
        victim = candidates[0] if order_hint is None else order_hint(candidates)
        alive &= ~(1 << victim)
    return alive


def clique_bound_from_trace(trace: DisintegrationTrace, s: int) -> int:
    """Upper bound on the s-clique count implied by a peeling trace.

    Every s-clique is charged either to its earliest-deleted vertex
    (at most C(degree-at-deletion, s-1) cliques each) or to the core.
    """
    if s < 2:
        raise DisintegrationError("clique size must be >= 2")
    total = sum(comb(d, s - 1) for _, d in trace.deleted)
    if not trace.is_null():
        total += count_cliques(trace.core).n_s(s)
    return total


def proof_shadow_bound(g: Graph, s: int, w: int | None = None) -> int:
    """Executable shadow of the core argument bounding N_s for a 2-connected
    nonhamiltonian graph: close up around a minimum-degree vertex, peel at
    half the circumference, and account per-deletion plus the residual core.

    The returned value is an upper bound on N_s(g); for graphs in the
    theorem's class it also stays below the closed-form maximum.
    """
    if w is None:
        degs = [g.adj[v].bit_count() for v in range(g.n)]
        w = degs.index(min(degs))
    q = circumference_closure(g, (w,))
    c = circumference(q)
    t = c // 2
    trace = core_with_seed(q, t, w)
    if trace.is_null():
        return clique_bound_from_trace(trace, s)
    d = trace.core.n
    second = core_with_seed(q, c - d + 1, w)
    if set(second.core_vertices) != set(trace.core_vertices):
        raise DisintegrationError(
            "second peeling changed the core; closure was not edge-maximal"
        )
    return clique_bound_from_trace(second, s)


def circumference_closure(g: Graph, protected=()) -> Graph:
    """Add non-edges avoiding the protected set while the circumference stays
    unchanged, scanning lexicographically, until edge-maximal.

    Each candidate costs one exact circumference query, so inputs are limited
    by the exact-solver budget.
    """
    wmask = 0
    for v in protected:
        g._check_vertex(v)
        wmask |= 1 << v
    c0 = circumference(g)
    changed = True
    while changed:
        changed = False
        for u in range(g.n):
            if wmask >> u & 1:
                continue
            for v in range(u + 1, g.n):
                if wmask >> v & 1 or g.has_edge(u, v):
                    continue
                candidate = add_edge(g, u, v)
                if circumference(candidate) == c0:
                    g = candidate
                    changed = True
                    break
            if changed:
                break
    return g
