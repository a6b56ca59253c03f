"""Exact structural invariants: circumference, detour order, hamiltonicity,
2-connectivity, clique counting and the classical sufficient conditions.

The longest-cycle and longest-path solvers are exact subset dynamic programs
over (visited-set, endpoint) states.  They are exponential by nature; queries
are capped at 24 vertices and an optional wall-clock budget (XCL_BUDGET_MS)
so that oversized inputs fail loudly instead of returning heuristic values.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .graphs import Graph, bits_to_list, complete, join

EXACT_SOLVER_MAX_ORDER = 24


class SolverBudgetError(Exception):
    """Input exceeds the exact-solver budget (order cap or time cap)."""


class InvariantError(Exception):
    """Invalid input to an invariant computation."""


def _budget_deadline() -> float | None:
    ms = os.environ.get("XCL_BUDGET_MS")
    if ms is None:
        return None
    return time.monotonic() + int(ms) / 1000.0


def _check_solver_order(n: int) -> None:
    if n > EXACT_SOLVER_MAX_ORDER:
        raise SolverBudgetError(
            f"order {n} exceeds exact-solver budget of {EXACT_SOLVER_MAX_ORDER}"
        )


def circumference(g: Graph) -> int:
    """Length of a longest cycle; 0 if acyclic.

    For each start vertex s, explores paths whose visited set has s as its
    minimum element, closing a cycle when the current endpoint sees s.
    """
    _check_solver_order(g.n)
    deadline = _budget_deadline()
    adj = g.adj
    n = g.n
    best = 0
    for s in range(n - 2):
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)
        start_bit = 1 << s
        cur = {start_bit: start_bit}
        while cur:
            if deadline is not None and time.monotonic() > deadline:
                raise SolverBudgetError("exact solver exceeded XCL_BUDGET_MS")
            nxt: dict[int, int] = {}
            for mask, ends in cur.items():
                count = mask.bit_count()
                ebits = ends
                while ebits:
                    v = (ebits & -ebits).bit_length() - 1
                    ebits &= ebits - 1
                    row = adj[v]
                    if count >= 3 and row & start_bit and count > best:
                        best = count
                    ext = row & allowed & ~mask
                    while ext:
                        ubit = ext & -ext
                        ext ^= ubit
                        m2 = mask | ubit
                        nxt[m2] = nxt.get(m2, 0) | ubit
            cur = nxt
        if best == n:
            break
    return best


def detour_order(g: Graph) -> int:
    """Number of vertices in a longest path."""
    if g.n == 0:
        raise InvariantError("detour order undefined for the order-0 graph")
    _check_solver_order(g.n)
    deadline = _budget_deadline()
    adj = g.adj
    best = 1
    cur = {1 << v: 1 << v for v in range(g.n)}
    depth = 1
    while cur:
        if deadline is not None and time.monotonic() > deadline:
            raise SolverBudgetError("exact solver exceeded XCL_BUDGET_MS")
        best = depth
        nxt: dict[int, int] = {}
        for mask, ends in cur.items():
            ebits = ends
            while ebits:
                v = (ebits & -ebits).bit_length() - 1
                ebits &= ebits - 1
                ext = adj[v] & ~mask
                while ext:
                    ubit = ext & -ext
                    ext ^= ubit
                    m2 = mask | ubit
                    nxt[m2] = nxt.get(m2, 0) | ubit
        cur = nxt
        depth += 1
    return best


def is_hamiltonian(g: Graph) -> bool:
    """Spanning cycle exists; False for orders below 3 by convention."""
    if g.n < 3:
        return False
    return circumference(g) == g.n


def is_traceable(g: Graph) -> bool:
    if g.n == 0:
        return False
    return detour_order(g) == g.n


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        bits = frontier
        while bits:
            v = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def is_two_connected(g: Graph) -> bool:
    """Connected, order >= 3, no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    # Iterative DFS with lowpoint computation rooted at 0.
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    timer = 0
    root_children = 0
    stack = [(0, iter(g.neighbors(0)))]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        v, it = stack[-1]
        advanced = False
        for u in it:
            if disc[u] == -1:
                parent[u] = v
                disc[u] = low[u] = timer
                timer += 1
                if v == 0:
                    root_children += 1
                stack.append((u, iter(g.neighbors(u))))
                advanced = True
                break
            elif u != parent[v]:
                low[v] = min(low[v], disc[u])
        if not advanced:
            stack.pop()
            if parent[v] != -1:
                p = parent[v]
                low[p] = min(low[p], low[v])
                if p != 0 and low[v] >= disc[p]:
                    return False
    return root_children <= 1


@dataclass(frozen=True)
class CliqueProfile:
    """Entry s-1 is the number of s-cliques, for s = 1..n."""

    counts: tuple[int, ...]

    def n_s(self, s: int) -> int:
        if s < 1:
            raise InvariantError("clique size must be >= 1")
        if s > len(self.counts):
            return 0
        return self.counts[s - 1]


def degeneracy_order(g: Graph) -> list[int]:
    """Repeatedly remove a lowest-degree vertex (lowest index on ties)."""
    alive = (1 << g.n) - 1
    order = []
    for _ in range(g.n):
        best_v = -1
        best_d = g.n + 1
        bits = alive
        while bits:
            v = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            d = (g.adj[v] & alive).bit_count()
            if d < best_d:
                best_d = d
                best_v = v
        order.append(best_v)
        alive &= ~(1 << best_v)
    return order


def count_cliques(g: Graph) -> CliqueProfile:
    """Exact s-clique counts for all s, by recursive expansion along a
    degeneracy ordering with bitset candidate intersection."""
    n = g.n
    counts = [0] * n
    if n == 0:
        return CliqueProfile(())
    order = degeneracy_order(g)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    # Reordered adjacency restricted to later vertices in the ordering.
    later = [0] * n
    for v in range(n):
        bits = g.adj[v]
        while bits:
            u = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            if pos[u] > pos[v]:
                later[pos[v]] |= 1 << pos[u]

    def expand(cand: int, depth: int) -> None:
        counts[depth - 1] += 1
        while cand:
            ubit = cand & -cand
            cand ^= ubit
            u = ubit.bit_length() - 1
            expand(cand & later[u], depth + 1)

    for i in range(n):
        expand(later[i], 1)
    return CliqueProfile(tuple(counts))


@dataclass(frozen=True)
class PathWitness:
    """A path with its endpoint path-degrees for the min{m+1, d(x)+d(y)} bound."""

    vertices: tuple[int, ...]
    m: int
    dpx: int
    dpy: int


def path_witness(g: Graph, vertices) -> PathWitness:
    vs = tuple(vertices)
    if not vs:
        raise InvariantError("path must have at least one vertex")
    if len(set(vs)) != len(vs):
        raise InvariantError("path repeats a vertex")
    for a, b in zip(vs, vs[1:]):
        if not g.has_edge(a, b):
            raise InvariantError(f"({a}, {b}) is not an edge")
    on_path = 0
    for v in vs:
        on_path |= 1 << v
    dpx = (g.adj[vs[0]] & on_path).bit_count()
    dpy = (g.adj[vs[-1]] & on_path).bit_count()
    return PathWitness(vs, len(vs) - 1, dpx, dpy)


def kopylov_bound(g: Graph, witness: PathWitness) -> int:
    """Certified circumference lower bound min{m+1, d_P(x)+d_P(y)} for a path
    in a 2-connected graph."""
    for v in witness.vertices:
        g._check_vertex(v)
    for a, b in zip(witness.vertices, witness.vertices[1:]):
        if not g.has_edge(a, b):
            raise InvariantError("witness path is not a path of this graph")
    return min(witness.m + 1, witness.dpx + witness.dpy)


def dirac_lower_bound(g: Graph) -> int:
    """min{n, 2*delta}; a circumference lower bound for 2-connected graphs."""
    if g.n == 0:
        return 0
    return min(g.n, 2 * min(row.bit_count() for row in g.adj))


def chvatal_hamiltonian(degrees) -> bool:
    """Degree-sequence sufficient condition for hamiltonicity.

    True guarantees a Hamilton cycle; False is inconclusive.  Input must be
    sorted nondecreasing with length >= 3.
    """
    ds = list(degrees)
    n = len(ds)
    if n < 3:
        raise InvariantError("condition needs order >= 3")
    if any(a > b for a, b in zip(ds, ds[1:])):
        raise InvariantError("degree sequence must be sorted nondecreasing")
    for i in range(1, (n + 1) // 2):
        if 2 * i < n and ds[i - 1] <= i and ds[n - i - 1] < n - i:
            return False
    return True


def is_graphical(degrees) -> bool:
    """Erdos-Gallai test: is the sequence realized by some simple graph?"""
    ds = sorted(degrees, reverse=True)
    n = len(ds)
    if n == 0:
        return True
    if ds[0] > n - 1 or ds[-1] < 0:
        return False
    if sum(ds) % 2:
        return False
    prefix = 0
    for r in range(1, n + 1):
        prefix += ds[r - 1]
        tail = sum(min(d, r) for d in ds[r:])
        if prefix > r * (r - 1) + tail:
            return False
    return True


def detour_via_apex(g: Graph) -> int:
    """Longest-path order computed as circumference(G join K1) - 1.

    Independent of the direct path solver; used to cross-check the
    join/detour identity.
    """
    return circumference(join(g, complete(1))) - 1
