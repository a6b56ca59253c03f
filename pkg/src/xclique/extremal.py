"""Extremal constructions and their closed-form clique counts.

Families (blocks are assigned in a fixed order so witnesses are
reproducible: hub clique first, middle clique second, independent part
last):

  build_F(n, c, k)      K_k  v (K_{c+1-2k} + bar K_{n-c-1+k})
  build_G(n, c, k)      K_t  v (K_{c+1-2t} + bar K_{n-c-1+t}) with t = floor(c/2),
                        then the last independent vertex loses its edges to the
                        last t-k hub vertices
  build_Gq(n, c, k, q)  same, with the last q independent vertices each losing
                        edges to the same last t-k hub vertices
  build_Fprime / build_Gprime    the longest-path analogues with detour order p

All evaluators use exact integer arithmetic; out-of-range parameters raise
instead of clamping.
"""

from __future__ import annotations

from math import comb

from .graphs import Graph, complete, delete_edge, disjoint_union, empty, join


class ParameterError(ValueError):
    """Parameters outside a formula's or construction's validity range."""


def _check_nck(n: int, c: int, k: int) -> None:
    if not (n - 1 >= c >= 2 * k >= 4):
        raise ParameterError(
            f"(n={n}, c={c}, k={k}) violates n-1 >= c >= 2k >= 4"
        )


def _check_s(s: int) -> None:
    if s < 2:
        raise ParameterError(f"clique size s={s} must be >= 2")


def half(c: int) -> int:
    return c // 2


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def build_F(n: int, c: int, k: int) -> Graph:
    _check_nck(n, c, k)
    return join(complete(k), disjoint_union(complete(c + 1 - 2 * k), empty(n - c - 1 + k)))


def build_G(n: int, c: int, k: int) -> Graph:
    return build_Gq(n, c, k, 1)


def build_Gq(n: int, c: int, k: int, q: int) -> Graph:
    _check_nck(n, c, k)
    t = half(c)
    indep = n - c - 1 + t
    if not 1 <= q <= k:
        raise ParameterError(f"q={q} must satisfy 1 <= q <= k={k}")
    if q > indep:
        raise ParameterError(
            f"q={q} exceeds the {indep} independent vertices available"
        )
    g = join(complete(t), disjoint_union(complete(c + 1 - 2 * t), empty(indep)))
    # Hub vertices are 0..t-1; the independent part occupies the last indep slots.
    for w in range(n - q, n):
        for hub in range(k, t):
            g = delete_edge(g, w, hub)
    return g


def build_Fprime(n: int, p: int, k: int) -> Graph:
    if not (k >= 2 and p >= 2 * k and n - p + k >= 1 and p <= n - 1):
        raise ParameterError(f"(n={n}, p={p}, k={k}) invalid for the F' family")
    return join(complete(k), disjoint_union(complete(p - 2 * k), empty(n - p + k)))


def build_Gprime(n: int, p: int, k: int) -> Graph:
    t = (p + 1) // 2
    if not (k >= 2 and t - 1 - k >= 0 and p + 2 - 2 * t >= 0 and p <= n - 1):
        raise ParameterError(f"(n={n}, p={p}, k={k}) invalid for the G' family")
    indep = n - p + t - 1
    if indep < 1:
        raise ParameterError(f"(n={n}, p={p}, k={k}) leaves no independent vertex")
    g = join(complete(t - 1), disjoint_union(complete(p + 2 - 2 * t), empty(indep)))
    for hub in range(k, t - 1):
        g = delete_edge(g, n - 1, hub)
    return g


def tight_erdos_gallai_graph(n: int, c: int) -> Graph:
    """((n-1)/(c-1)) copies of K_{c-1}, all joined to one apex; size c(n-1)/2."""
    if c < 3 or (n - 1) % (c - 1) != 0:
        raise ParameterError(f"(n={n}, c={c}) needs c >= 3 and (c-1) | (n-1)")
    blocks = empty(0)
    for _ in range((n - 1) // (c - 1)):
        blocks = disjoint_union(blocks, complete(c - 1))
    return join(blocks, complete(1))


# ---------------------------------------------------------------------------
# Closed-form clique counts and bounds
# ---------------------------------------------------------------------------

def f_s(n: int, c: int, k: int, s: int) -> int:
    _check_nck(n, c, k)
    _check_s(s)
    return comb(c + 1 - k, s) + (n - c - 1 + k) * comb(k, s - 1)


def g_s(n: int, c: int, k: int, s: int) -> int:
    _check_nck(n, c, k)
    _check_s(s)
    t = half(c)
    return comb(c + 1 - t, s) + (n - c - 2 + t) * comb(t, s - 1) + comb(k, s - 1)


def g_sq(n: int, c: int, k: int, q: int, s: int) -> int:
    _check_nck(n, c, k)
    _check_s(s)
    t = half(c)
    if not 1 <= q <= k:
        raise ParameterError(f"q={q} must satisfy 1 <= q <= k={k}")
    if q > n - c - 1 + t:
        raise ParameterError(f"q={q} exceeds the independent part")
    return (
        q * comb(k, s - 1)
        + (n - q - c - 1 + t) * comb(t, s - 1)
        + comb(c + 1 - t, s)
    )


def phi_s(n: int, c: int, k: int, s: int) -> int:
    """Maximum s-clique count over 2-connected nonhamiltonian graphs of order n,
    circumference c and minimum degree exactly k."""
    return max(f_s(n, c, k, s), g_s(n, c, k, s))


def h_s_bound(n: int, c: int, k: int, s: int) -> int:
    """Upper bound for minimum degree at least k: max{f_s(n,c,k), f_s(n,c,t)}."""
    return max(f_s(n, c, k, s), f_s(n, c, half(c), s))


def erdos_h(n: int, k: int) -> int:
    if not 1 <= k <= (n - 1) // 2:
        raise ParameterError(f"k={k} must satisfy 1 <= k <= (n-1)/2 for n={n}")
    return comb(n - k, 2) + k * k


def lambda_s(n: int, c: int, x: int, s: int) -> int:
    """The convex accounting function (n-c-2+x) C(x, s-1) + C(c+1-x, s)."""
    _check_s(s)
    if not 2 <= x <= half(c):
        raise ParameterError(f"x={x} must lie in [2, floor(c/2)] for c={c}")
    if c > n - 1:
        raise ParameterError(f"c={c} must be at most n-1={n - 1}")
    return (n - c - 2 + x) * comb(x, s - 1) + comb(c + 1 - x, s)


def phi_piecewise(n: int, k: int) -> tuple[int, frozenset[str]]:
    """Maximum size of a 2-connected nonhamiltonian graph of order n with
    minimum degree k, plus which families attain it.

    The descriptor set is a subset of {"F", "G"}: "F" names
    K_k v (K_{n-2k} + bar K_k) and "G" names build_G(n, n-1, k).
    """
    if k < 2 or n < 2 * k + 1:
        raise ParameterError(f"(n={n}, k={k}) admits no valid graph class")
    odd = n % 2 == 1
    f_value = comb(n - k, 2) + k * k
    if odd:
        g_value = (3 * n * n - 8 * n + 5) // 8 + k
        on_f_branch = n >= 6 * k - 5
        boundary = n == 6 * k - 5
        f_only = n >= 6 * k - 3
    else:
        g_value = (3 * n * n - 10 * n + 16) // 8 + k
        on_f_branch = n >= 6 * k - 8
        boundary = n == 6 * k - 8
        f_only = n >= 6 * k - 6
    if on_f_branch:
        value = f_value
        if boundary:
            families = frozenset({"F", "G"})
        elif f_only:
            families = frozenset({"F"})
        else:
            # Odd n = 6k-4 cannot occur; even n = 6k-7/6k-9 cannot occur.
            families = frozenset({"F"})
    else:
        value = g_value
        families = frozenset({"G"})
    return value, families


def piecewise_family_graph(n: int, k: int, family: str) -> Graph:
    """The named extremal graph behind a phi_piecewise descriptor."""
    if family == "F":
        return join(complete(k), disjoint_union(complete(n - 2 * k), empty(k)))
    if family == "G":
        return build_G(n, n - 1, k)
    raise ParameterError(f"unknown family {family!r}")


def psi(n: int, p: int, k: int) -> int:
    """Maximum size of a nontraceable graph of order n, detour order p and
    minimum degree k: max{f(n, p-1, k), g(n, p-1, k)}."""
    return max(f_s(n, p - 1, k, 2), g_s(n, p - 1, k, 2))
