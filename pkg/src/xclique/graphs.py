"""Core graph type: immutable bitset adjacency, constructors, combinators,
graph6 codec and canonical labeling.

Graphs are simple, undirected and 0-indexed, with order capped at 64 so each
adjacency row fits in one machine word.  All operations return new graphs;
nothing is mutated after construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

MAX_ORDER = 64

GRAPH6_HEADER = ">>graph6<<"


class GraphError(Exception):
    """Base class for graph construction and codec errors."""


class OrderOverflowError(GraphError):
    """Requested order exceeds the 64-vertex cap."""


class NotAnEdgeError(GraphError):
    """Edge deletion requested for a non-edge."""


class Graph6Error(GraphError):
    """Malformed graph6 input."""


def _check_order(n: int) -> None:
    if not 0 <= n <= MAX_ORDER:
        raise OrderOverflowError(f"order {n} outside supported range 0..{MAX_ORDER}")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with bitset adjacency rows."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.n)
        if len(self.adj) != self.n:
            raise GraphError("adjacency length does not match order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has neighbor bits above order")
            if row >> v & 1:
                raise GraphError(f"vertex {v} is self-adjacent")
        for v, row in enumerate(self.adj):
            bits = row
            while bits:
                u = (bits & -bits).bit_length() - 1
                bits &= bits - 1
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for order {self.n}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return bits_to_list(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in bits_to_list(self.adj[u] >> (u + 1) << (u + 1))
        ]

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted nondecreasing."""
        return tuple(sorted(row.bit_count() for row in self.adj))


def bits_to_list(bits: int) -> list[int]:
    out = []
    while bits:
        out.append((bits & -bits).bit_length() - 1)
        bits &= bits - 1
    return out


def from_edges(n: int, edges) -> Graph:
    _check_order(n)
    rows = [0] * n
    for u, v in edges:
        if u == v or not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"bad edge ({u}, {v}) for order {n}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete(n: int) -> Graph:
    _check_order(n)
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty(n: int) -> Graph:
    _check_order(n)
    return Graph(n, (0,) * n)


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs order >= 3")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    _check_order(n)
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ row) & ~(1 << v) for v, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _check_order(n)
    rows = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    _check_order(n)
    gmask = (1 << g.n) - 1
    hmask = ((1 << n) - 1) ^ gmask
    rows = [row | hmask for row in g.adj]
    rows += [(row << g.n) | gmask for row in h.adj]
    return Graph(n, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        raise GraphError("no self-loops")
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    if not g.has_edge(u, v):
        raise NotAnEdgeError(f"({u}, {v}) is not an edge")
    rows = list(g.adj)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def relabel(g: Graph, perm) -> Graph:
    """Apply a permutation: vertex v of g becomes perm[v] in the result."""
    perm = tuple(perm)
    if sorted(perm) != list(range(g.n)):
        raise GraphError("not a permutation of the vertex set")
    rows = [0] * g.n
    for v, row in enumerate(g.adj):
        newrow = 0
        bits = row
        while bits:
            u = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            newrow |= 1 << perm[u]
        rows[perm[v]] = newrow
    return Graph(g.n, tuple(rows))


def induced_subgraph(g: Graph, vertices) -> Graph:
    """Subgraph induced by the given vertices, relabeled 0..k-1 in list order."""
    vs = list(vertices)
    pos = {v: i for i, v in enumerate(vs)}
    if len(pos) != len(vs):
        raise GraphError("duplicate vertices in induced subgraph")
    rows = [0] * len(vs)
    for i, v in enumerate(vs):
        bits = g.adj[v]
        while bits:
            u = (bits & -bits).bit_length() - 1
            bits &= bits - 1
            if u in pos:
                rows[i] |= 1 << pos[u]
    return Graph(len(vs), tuple(rows))


def degree(g: Graph, v: int) -> int:
    return g.degree(v)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise GraphError("min_degree undefined for the order-0 graph")
    return min(row.bit_count() for row in g.adj)


def size(g: Graph) -> int:
    return g.size()


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------

def _upper_triangle_bits(g: Graph) -> list[int]:
    # column-major: x01, x02, x12, x03, x13, x23, ...
    return [g.adj[i] >> j & 1 for j in range(g.n) for i in range(j)]


def encode_graph6(g: Graph) -> str:
    if g.n <= 62:
        head = chr(g.n + 63)
    else:
        head = "~" + "".join(chr(63 + (g.n >> sh & 0x3F)) for sh in (12, 6, 0))
    bits = _upper_triangle_bits(g)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise Graph6Error("empty graph6 line")
    for ch in line:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside graph6 range")
    if line[0] == "~":
        if len(line) < 4:
            raise Graph6Error("truncated long-form order field")
        n = 0
        for ch in line[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = line[4:]
    else:
        n = ord(line[0]) - 63
        body = line[1:]
    _check_order(n)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    if len(body) != nchars:
        raise Graph6Error(
            f"expected {nchars} adjacency characters for order {n}, got {len(body)}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> sh & 1 for sh in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    idx = 0
    for j in range(n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# Canonical labeling: iterated equitable refinement with backtracking.
# The canonical form is the lexicographic minimum, over the discrete orderings
# reachable from the invariant refinement partition, of the column-major
# upper-triangle bit string; the label is that form rendered as a graph6 line.
# The minimum is over the refinement search tree, not all n! permutations, so
# the label is isomorphism-invariant and complete but not globally lex-least.
# ---------------------------------------------------------------------------

def _refine(adj, cells):
    """Equitable refinement of an ordered partition; split keys are sorted so
    the refined order is isomorphism-invariant."""
    cells = [list(c) for c in cells]
    changed = True
    while changed:
        changed = False
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        newcells = []
        for c in cells:
            if len(c) == 1:
                newcells.append(c)
                continue
            keyed = {}
            for v in c:
                key = tuple((adj[v] & m).bit_count() for m in masks)
                keyed.setdefault(key, []).append(v)
            if len(keyed) > 1:
                changed = True
            for key in sorted(keyed):
                newcells.append(keyed[key])
        cells = newcells
    return cells


def _collapse_homogeneous(adj, cells):
    """Split cells whose vertices are pairwise interchangeable (identical
    neighborhoods outside the cell, and the cell induces a clique or an
    independent set) into singletons in index order."""
    out = []
    for c in cells:
        if len(c) == 1:
            out.append(c)
            continue
        m = 0
        for v in c:
            m |= 1 << v
        outside = {adj[v] & ~m for v in c}
        inside_clique = all(adj[v] & m == m ^ (1 << v) for v in c)
        inside_empty = all(adj[v] & m == 0 for v in c)
        if len(outside) == 1 and (inside_clique or inside_empty):
            out.extend([v] for v in sorted(c))
        else:
            out.append(c)
    return out


def _partial_code(adj, prefix):
    """Upper-triangle bits among the first len(prefix) canonical positions."""
    code = []
    for j in range(1, len(prefix)):
        col = adj[prefix[j]]
        code.extend(col >> prefix[i] & 1 for i in range(j))
    return code


def _canonical_permutation(g: Graph) -> tuple[int, ...]:
    n = g.n
    if n <= 1:
        return tuple(range(n))
    adj = g.adj
    degs = {}
    for v in range(n):
        degs.setdefault(adj[v].bit_count(), []).append(v)
    cells = _collapse_homogeneous(adj, _refine(adj, [degs[d] for d in sorted(degs)]))

    best_code: list[int] | None = None
    best_perm: tuple[int, ...] | None = None

    def visit(cells):
        nonlocal best_code, best_perm
        prefix = []
        split_at = None
        for i, c in enumerate(cells):
            if len(c) > 1:
                split_at = i
                break
            prefix.append(c[0])
        if best_code is not None and prefix:
            partial = _partial_code(adj, prefix)
            if partial > best_code[: len(partial)]:
                return
        if split_at is None:
            code = _partial_code(adj, prefix)
            if best_code is None or code < best_code:
                best_code = code
                best_perm = tuple(prefix)
            return
        cell = cells[split_at]
        for v in sorted(cell):
            branched = (
                cells[:split_at]
                + [[v], [u for u in cell if u != v]]
                + cells[split_at + 1 :]
            )
            visit(_collapse_homogeneous(adj, _refine(adj, branched)))

    visit(cells)
    assert best_perm is not None
    # best_perm lists vertices in canonical position order; invert for relabel.
    inv = [0] * n
    for pos, v in enumerate(best_perm):
        inv[v] = pos
    return tuple(inv)


def canonical_form(g: Graph) -> Graph:
    """An isomorphism-invariant relabeling of g."""
    return relabel(g, _canonical_permutation(g))


def canonical_label(g: Graph) -> str:
    """Canonical graph6 line; equal labels certify isomorphism."""
    return encode_graph6(canonical_form(g))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size() != h.size():
        return False
    return canonical_label(g) == canonical_label(h)


def all_permutation_labels(g: Graph):
    """Brute-force check helper: every relabeling's graph6 line (small n only)."""
    for perm in itertools.permutations(range(g.n)):
        yield encode_graph6(relabel(g, perm))
