import pytest

from xclique.extremal import (
    ParameterError,
    build_F,
    build_Fprime,
    build_G,
    build_Gprime,
    build_Gq,
    erdos_h,
    f_s,
    g_s,
    g_sq,
    h_s_bound,
    lambda_s,
    phi_piecewise,
    phi_s,
    piecewise_family_graph,
    psi,
    tight_erdos_gallai_graph,
)
from xclique.graphs import are_isomorphic, canonical_label, complete, empty, join, min_degree
from xclique.invariants import (
    circumference,
    count_cliques,
    detour_order,
    is_hamiltonian,
    is_two_connected,
)


def valid_nck(n_max):
    for n in range(5, n_max + 1):
        for c in range(4, n):
            for k in range(2, c // 2 + 1):
                yield n, c, k


# formulas, frozen values


def test_f_s_values():
    assert f_s(15, 14, 7, 2) == 77
    assert f_s(15, 14, 3, 2) == 75
    assert f_s(10, 6, 2, 3) == 15


def test_g_s_values():
    assert g_s(15, 14, 3, 2) == 73
    assert g_s(13, 12, 3, 2) == 54
    assert g_s(13, 12, 4, 2) == 55


def test_g_sq_values():
    assert g_sq(15, 14, 3, 2, 2) == 69
    for n, c, k in valid_nck(10):
        assert g_sq(n, c, k, 1, 2) == g_s(n, c, k, 2)


def test_phi_s_values():
    assert phi_s(15, 14, 3, 2) == max(75, 73) == 75
    assert phi_s(15, 14, 7, 2) == 77
    for n, c in [(10, 8), (12, 9), (15, 14)]:
        t = c // 2
        assert phi_s(n, c, t, 2) == f_s(n, c, t, 2)


def test_g_equals_f_at_half_c():
    for n, c, _ in valid_nck(14):
        t = c // 2
        for s in (2, 3, 4):
            assert g_s(n, c, t, s) == f_s(n, c, t, s)


def test_h_s_bound():
    assert h_s_bound(15, 14, 3, 2) == 77
    for n, c, _ in valid_nck(12):
        t = c // 2
        assert h_s_bound(n, c, t, 2) == f_s(n, c, t, 2)
    for n, c, k in valid_nck(15):
        for s in (2, 3):
            assert h_s_bound(n, c, k, s) >= phi_s(n, c, k, s)


def test_h_s_bound_is_max_over_larger_min_degree():
    for n, c, k in valid_nck(15):
        for s in (2, 3):
            sweep = max(phi_s(n, c, kp, s) for kp in range(k, c // 2 + 1))
            assert h_s_bound(n, c, k, s) == sweep


def test_erdos_h():
    assert erdos_h(5, 2) == 7
    assert erdos_h(15, 3) == 75
    with pytest.raises(ParameterError):
        erdos_h(5, 3)


def test_lambda_s():
    assert lambda_s(15, 14, 7, 2) == 70
    assert lambda_s(15, 14, 7, 2) == g_s(15, 14, 3, 2) - 3
    for n, c, k in valid_nck(12):
        t = c // 2
        for s in (2, 3):
            assert lambda_s(n, c, t, s) + __import__("math").comb(k, s - 1) == g_s(n, c, k, s)


def test_lambda_convexity_sample():
    for n in range(8, 21):
        for c in range(6, n):
            t = c // 2
            for s in (2, 3, 4, 5):
                diffs = [
                    lambda_s(n, c, x + 1, s) - lambda_s(n, c, x, s)
                    for x in range(2, t)
                ]
                assert all(a <= b for a, b in zip(diffs, diffs[1:]))


def test_parameter_validation():
    for bad in [(10, 5, 3), (10, 10, 2), (8, 7, 1), (6, 4, 3)]:
        with pytest.raises(ParameterError):
            f_s(*bad, 2)
        with pytest.raises(ParameterError):
            build_F(*bad)
    with pytest.raises(ParameterError):
        g_sq(10, 8, 3, 0, 2)
    with pytest.raises(ParameterError):
        g_sq(10, 8, 3, 4, 2)
    with pytest.raises(ParameterError):
        f_s(10, 8, 2, 1)


# constructions


def test_build_F_flagship():
    g = build_F(15, 14, 7)
    assert g.size() == 77
    assert min_degree(g) == 7


def test_build_F_ore_extremal():
    assert are_isomorphic(build_F(5, 4, 2), join(complete(2), empty(3)))


def test_build_G_zero_deletions():
    for n, c in [(10, 8), (12, 11), (9, 6)]:
        t = c // 2
        assert build_G(n, c, t) == build_F(n, c, t)


def test_build_G_size():
    assert build_G(13, 12, 3).size() == 54


def test_build_Gq_q1():
    for n, c, k in valid_nck(10):
        assert build_Gq(n, c, k, 1) == build_G(n, c, k)


def test_build_Gq_size():
    assert build_Gq(15, 14, 3, 2).size() == 69


def test_build_Gq_min_degree_multiplicity():
    for n, c, k in valid_nck(12):
        t = c // 2
        for q in range(1, min(k, n - c - 1 + t) + 1):
            g = build_Gq(n, c, k, q)
            degs = [g.degree(v) for v in range(g.n)]
            assert min(degs) == k
            if k < t:
                assert degs.count(k) == q


def test_constructions_realize_their_parameters():
    # order, min degree, circumference, 2-connectivity, nonhamiltonicity
    for n, c, k in valid_nck(12):
        for g in (build_F(n, c, k), build_G(n, c, k)):
            assert g.n == n
            assert min_degree(g) == k
            assert circumference(g) == c
            assert is_two_connected(g)
            assert not is_hamiltonian(g)


def test_clique_profiles_match_formulas():
    for n, c, k in valid_nck(12):
        t = c // 2
        fprof = count_cliques(build_F(n, c, k))
        gprof = count_cliques(build_G(n, c, k))
        for s in range(2, n + 1):
            assert fprof.n_s(s) == f_s(n, c, k, s)
            assert gprof.n_s(s) == g_s(n, c, k, s)
        for q in range(2, min(k, n - c - 1 + t) + 1):
            qprof = count_cliques(build_Gq(n, c, k, q))
            for s in range(2, n + 1):
                assert qprof.n_s(s) == g_sq(n, c, k, q, s)


def test_path_families():
    for n, p, k in [(12, 8, 3), (16, 14, 3), (10, 7, 2), (12, 11, 4)]:
        fp = build_Fprime(n, p, k)
        assert (fp.n, min_degree(fp)) == (n, k)
        assert detour_order(fp) == p
        assert fp.size() == f_s(n, p - 1, k, 2)
        gp = build_Gprime(n, p, k)
        assert (gp.n, min_degree(gp)) == (n, k)
        assert detour_order(gp) == p
        assert gp.size() == g_s(n, p - 1, k, 2)
        # apex join turns detour order into circumference
        assert circumference(join(fp, complete(1))) == p + 1


def test_psi():
    assert psi(16, 14, 3) == 73
    for n, p, k in [(12, 8, 3), (16, 14, 3)]:
        assert psi(n, p, k) in (
            build_Fprime(n, p, k).size(),
            build_Gprime(n, p, k).size(),
        )
    # t-1 = k degenerates G' to F'
    assert are_isomorphic(build_Gprime(10, 7, 3), build_Fprime(10, 7, 3))


def test_phi_piecewise_values():
    assert phi_piecewise(13, 3) == (54, frozenset({"F", "G"}))
    assert phi_piecewise(15, 3) == (75, frozenset({"F"}))
    assert phi_piecewise(13, 4) == (55, frozenset({"G"}))
    with pytest.raises(ParameterError):
        phi_piecewise(5, 3)


def test_phi_piecewise_cross_checks():
    # value always matches the best closed form over all circumferences
    for n in range(5, 14):
        for k in range(2, (n - 1) // 2 + 1):
            value, families = phi_piecewise(n, k)
            best = max(phi_s(n, c, k, 2) for c in range(2 * k, n))
            assert value == best
            for fam in families:
                g = piecewise_family_graph(n, k, fam)
                assert g.size() == value
                assert min_degree(g) == k


def test_piecewise_algebraic_identities():
    for k in range(2, 20):
        for n in range(2 * k + 1, 41):
            if n % 2:
                assert g_s(n, n - 1, k, 2) == (3 * n * n - 8 * n + 5) // 8 + k
            else:
                assert g_s(n, n - 1, k, 2) == (3 * n * n - 10 * n + 16) // 8 + k


def test_tight_erdos_gallai_graph():
    g = tight_erdos_gallai_graph(13, 4)
    assert g.size() * 2 == 4 * 12
    assert circumference(g) == 4
    with pytest.raises(ParameterError):
        tight_erdos_gallai_graph(12, 4)
