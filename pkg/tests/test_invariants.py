import random
from itertools import combinations
from math import comb

import pytest

from conftest import random_graph, random_two_connected
from xclique.graphs import (
    add_edge,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    join,
    path_graph,
)
from xclique.invariants import (
    InvariantError,
    SolverBudgetError,
    chvatal_hamiltonian,
    circumference,
    count_cliques,
    detour_order,
    detour_via_apex,
    dirac_lower_bound,
    is_graphical,
    is_hamiltonian,
    is_traceable,
    is_two_connected,
    kopylov_bound,
    path_witness,
)


def test_circumference_cycles_and_trees():
    for n in range(3, 9):
        assert circumference(cycle(n)) == n
    assert circumference(path_graph(6)) == 0
    assert circumference(empty(5)) == 0
    assert circumference(complete(2)) == 0


def test_circumference_theta_graph():
    # C6 plus a chord: two shorter cycles but the 6-cycle survives
    assert circumference(add_edge(cycle(6), 0, 3)) == 6


def test_detour_order():
    for n in range(1, 8):
        assert detour_order(path_graph(n)) == n
    assert detour_order(empty(5)) == 1
    with pytest.raises(InvariantError):
        detour_order(empty(0))


def test_detour_join_identity(rng):
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 9))
        if g.size() == 0:
            continue
        assert detour_order(g) == detour_via_apex(g)


def test_hamiltonian_and_traceable():
    assert is_hamiltonian(cycle(6))
    assert not is_hamiltonian(complete(2))
    for n in (5, 6, 7):
        g = join(complete(1), disjoint_union(complete(n - 2), complete(1)))
        assert not is_hamiltonian(g)
        assert is_traceable(g)


def test_two_connectivity():
    assert is_two_connected(cycle(4))
    assert is_two_connected(complete(3))
    assert not is_two_connected(path_graph(4))
    assert not is_two_connected(join(complete(1), disjoint_union(complete(3), complete(1))))
    assert not is_two_connected(complete(2))
    assert not is_two_connected(disjoint_union(cycle(3), cycle(3)))


def test_clique_profile_complete():
    assert count_cliques(complete(4)).counts == (4, 6, 4, 1)
    for n in (5, 6):
        assert count_cliques(complete(n)).counts == tuple(
            comb(n, s) for s in range(1, n + 1)
        )


def _brute_clique_counts(g):
    counts = [0] * g.n
    for s in range(1, g.n + 1):
        for vs in combinations(range(g.n), s):
            if all(g.has_edge(u, v) for u, v in combinations(vs, 2)):
                counts[s - 1] += 1
    return tuple(counts)


def test_clique_counts_against_brute_force(rng):
    for _ in range(25):
        g = random_graph(rng, rng.randint(1, 7))
        profile = count_cliques(g)
        assert profile.counts == _brute_clique_counts(g)
        assert profile.n_s(1) == g.n
        assert profile.n_s(2) == g.size()
        assert profile.n_s(g.n + 3) == 0


def test_clique_monotone_under_edge_addition(rng):
    for _ in range(10):
        g = random_graph(rng, 7, 0.4)
        nonedges = [
            (u, v)
            for u, v in combinations(range(7), 2)
            if not g.has_edge(u, v)
        ]
        if not nonedges:
            continue
        h = add_edge(g, *rng.choice(nonedges))
        assert circumference(h) >= circumference(g)
        assert detour_order(h) >= detour_order(g)
        for s in range(1, 8):
            assert count_cliques(h).n_s(s) >= count_cliques(g).n_s(s)


def test_chvatal_condition():
    assert chvatal_hamiltonian([5] * 6)  # K6
    assert not chvatal_hamiltonian([2, 2, 2, 2, 2])  # C5: inconclusive
    with pytest.raises(InvariantError):
        chvatal_hamiltonian([3, 2, 2])
    with pytest.raises(InvariantError):
        chvatal_hamiltonian([1, 1])


def test_chvatal_sound_small(rng):
    for _ in range(60):
        g = random_graph(rng, rng.randint(3, 7))
        if chvatal_hamiltonian(g.degree_sequence()):
            assert is_hamiltonian(g)


def test_dirac_bound():
    assert dirac_lower_bound(complete(6)) == 6
    assert dirac_lower_bound(cycle(8)) == 4
    for _ in range(30):
        g = random_two_connected(random.Random(7), 7, 0.45)
        assert circumference(g) >= dirac_lower_bound(g)


def test_kopylov_bound():
    n = 6
    witness = path_witness(complete(n), range(n))
    assert kopylov_bound(complete(n), witness) == n
    c = cycle(5)
    w = path_witness(c, [0, 1, 2, 3, 4])
    assert kopylov_bound(c, w) == min(5, 4) == 4 <= circumference(c)


def test_path_witness_validation():
    with pytest.raises(InvariantError):
        path_witness(cycle(5), [0, 2])  # not an edge
    with pytest.raises(InvariantError):
        path_witness(cycle(5), [0, 1, 0])  # repeated vertex
    w = path_witness(cycle(5), [0, 1, 2])
    assert (w.m, w.dpx, w.dpy) == (2, 1, 1)


def test_is_graphical():
    assert is_graphical([3, 3, 3, 3])
    assert not is_graphical([3, 3, 1, 1])
    assert not is_graphical([1])
    assert not is_graphical([5, 1, 1])
    assert is_graphical([])
    assert is_graphical([0, 0])


def test_graphical_matches_enumeration(rng):
    # every realized degree sequence tests graphical; random non-sequences mostly don't
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 8))
        assert is_graphical(g.degree_sequence())


def test_extremal_degree_sequences_graphical():
    # hub/middle/dominating/apex shape arising from the piecewise maximum-size argument
    for n, i, k in [(13, 6, 4), (11, 5, 3), (15, 7, 3), (13, 6, 3)]:
        seq = (
            [k]
            + [i] * (i - 1)
            + [n - i - 1] * (n - 2 * i)
            + [n - 2] * (i - k)
            + [n - 1] * k
        )
        assert len(seq) == n
        assert is_graphical(seq)


def test_solver_order_cap():
    with pytest.raises(SolverBudgetError):
        circumference(empty(25))
    with pytest.raises(SolverBudgetError):
        detour_order(empty(25))


def test_solver_time_budget(monkeypatch, rng):
    monkeypatch.setenv("XCL_BUDGET_MS", "0")
    g = random_graph(rng, 18, 0.5)
    with pytest.raises(SolverBudgetError):
        circumference(g)
