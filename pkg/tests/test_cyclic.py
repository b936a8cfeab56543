import pytest

from dellkit import (
    ModuleExprError,
    UnsupportedOperationError,
    chi,
    direct_sum,
    format_expr,
    format_key,
    is_projective,
    iterate_syzygy,
    left_complements,
    module_expr,
    parse_module_expr,
    path_module,
    pd_expr,
    pd_key,
    projective_module,
    right_complements,
    simple_module,
    syzygy,
    syzygy_expr,
    trajectories,
    uniserial_module,
)
from dellkit import cyclic, fixtures

INF = float("inf")


def names(algebra, paths):
    return sorted(algebra.quiver.path_name(p) for p in paths)


# -- keys ---------------------------------------------------------------------


def test_key_canonical_order(contra84):
    q = contra84.quiver
    key = uniserial_module(contra84, q.path_by_names(["a0", "a1"]))
    assert key.basis == ((), (q.arrow_index["a0"],), (q.arrow_index["a0"], q.arrow_index["a1"]))


def test_path_module_collapses_isomorphic_paths(contra84):
    # the arrow a0 and the loop-then-a0 path generate isomorphic modules
    q = contra84.quiver
    k1 = path_module(contra84, q.path_by_names(["a0"]))
    k2 = path_module(contra84, q.path_by_names(["g", "a0"]))
    assert k1 == k2
    assert k1 == uniserial_module(contra84, q.path_by_names(["a1"]))


def test_trivial_path_module_is_projective(lin3):
    assert path_module(lin3, lin3.quiver.trivial_path(0)) == projective_module(lin3, 0)


def test_sink_path_module_is_projective(lin3):
    b = lin3.quiver.path_by_names(["a2"])
    assert is_projective(lin3, path_module(lin3, b))
    assert not is_projective(lin3, simple_module(lin3, 0))


def test_format_key(lin3, sim5):
    assert format_key(lin3, simple_module(lin3, 0)) == "S(1)"
    assert format_key(lin3, projective_module(lin3, 0)) == "P(1)"
    g = sim5.quiver.path_by_names(["g"])
    assert format_key(sim5, uniserial_module(sim5, g)) == "U(g)"


# -- complements ----------------------------------------------------------------


def test_right_complements_lin3(lin3):
    a = lin3.quiver.path_by_names(["a1"])
    assert names(lin3, right_complements(lin3, a)) == ["a2"]


def test_left_complements_lin3(lin3):
    b = lin3.quiver.path_by_names(["a2"])
    assert names(lin3, left_complements(lin3, b)) == ["a1"]


def test_complements_reject_trivial(lin3):
    with pytest.raises(ValueError):
        right_complements(lin3, lin3.quiver.trivial_path(0))
    with pytest.raises(ValueError):
        left_complements(lin3, lin3.quiver.trivial_path(0))


def test_right_complements_contra(contra84):
    a0 = contra84.quiver.path_by_names(["a0"])
    assert names(contra84, right_complements(contra84, a0)) == ["a1.a2"]
    a1a2 = contra84.quiver.path_by_names(["a1", "a2"])
    assert "a0" in names(contra84, left_complements(contra84, a1a2))


def test_truncated_complements_have_complementary_length():
    a = fixtures.random_truncated(11, 4, 7, 4)
    for rho in a.nonzero_paths(include_trivial=False):
        for mu in right_complements(a, rho):
            assert len(mu) == a.truncation - len(rho)


def test_left_complement_on_cycle(cycle3):
    # J^2 on a 3-cycle: the only left complement of an arrow is its predecessor
    q = cycle3.quiver
    for i, arrow in enumerate(q.arrows):
        lc = left_complements(cycle3, q.path([i]))
        assert len(lc) == 1
        assert lc[0].target == arrow.source


# -- syzygies --------------------------------------------------------------------


def test_syzygy_simple_lin3(lin3):
    got = syzygy(lin3, simple_module(lin3, 0))
    assert got == module_expr(lin3, [simple_module(lin3, 1)])


def test_syzygy_of_projective_is_zero(lin3):
    for v in range(3):
        assert syzygy(lin3, projective_module(lin3, v)).is_zero


def test_second_syzygy_projective(lin3):
    e = module_expr(lin3, [simple_module(lin3, 0)])
    omega2 = iterate_syzygy(lin3, e, 2)
    assert not omega2.keys
    assert omega2.projectives == ((2, 1),)


def test_syzygy_additive(lin3):
    s1 = module_expr(lin3, [simple_module(lin3, 0)])
    doubled = module_expr(lin3, [(simple_module(lin3, 0), 2)])
    assert syzygy_expr(lin3, doubled) == direct_sum(
        syzygy_expr(lin3, s1), syzygy_expr(lin3, s1)
    )


def test_syzygy_simple_sim(sim5):
    got = syzygy(sim5, simple_module(sim5, 0))
    assert got == module_expr(
        sim5, [simple_module(sim5, 0), simple_module(sim5, 1)]
    )


def test_syzygy_contra_loop_simple(contra84):
    q = contra84.quiver
    got = syzygy(contra84, simple_module(contra84, 0))
    expected = module_expr(
        contra84,
        [
            uniserial_module(contra84, q.path_by_names(["a1"])),
            uniserial_module(contra84, q.path_by_names(["a0", "a1"])),
            simple_module(contra84, 4),
            simple_module(contra84, 5),
            simple_module(contra84, 6),
            simple_module(contra84, 7),
        ],
    )
    assert got == expected


def test_syzygy_contra_uniserial_step(contra84):
    q = contra84.quiver
    u1 = uniserial_module(contra84, q.path_by_names(["a1"]))
    u3 = uniserial_module(contra84, q.path_by_names(["a3"]))
    assert syzygy(contra84, u1) == module_expr(contra84, [u3])


# -- class graph and pd -------------------------------------------------------------


def test_class_graph_lin3(lin3):
    s1 = simple_module(lin3, 0)
    table = cyclic.omega_class_graph(lin3, [s1])
    assert set(table) == {s1, simple_module(lin3, 1)}
    assert table[simple_module(lin3, 1)].class_set == frozenset()


def test_class_graph_sim_self_loop(sim5):
    s1 = simple_module(sim5, 0)
    table = cyclic.omega_class_graph(sim5, [s1])
    assert s1 in table[s1].class_set


def test_class_graph_cycle_permutation(cycle3):
    simples = [simple_module(cycle3, v) for v in range(3)]
    table = cyclic.omega_class_graph(cycle3, simples)
    for v in range(3):
        succ = table[simples[v]].class_set
        assert len(succ) == 1
        (child,) = succ
        assert child == simples[(v + 1) % 3]


def test_pd_values(lin3, sim5, contra84):
    assert pd_key(lin3, simple_module(lin3, 0)) == 2
    assert pd_key(sim5, simple_module(sim5, 0)) == INF
    u1 = uniserial_module(contra84, contra84.quiver.path_by_names(["a1"]))
    assert pd_key(contra84, u1) == 3


def test_pd_additivity(lin3):
    e1 = module_expr(lin3, [simple_module(lin3, 0)])
    e2 = module_expr(lin3, [simple_module(lin3, 1)])
    assert pd_expr(lin3, direct_sum(e1, e2)) == max(
        pd_expr(lin3, e1), pd_expr(lin3, e2)
    )


def test_pd_projective_expr(lin3):
    assert pd_expr(lin3, module_expr(lin3, [projective_module(lin3, 0)])) == 0


# -- trajectories ---------------------------------------------------------------------


def test_trajectory_lin3(lin3):
    a = lin3.quiver.path_by_names(["a1"])
    ts = trajectories(lin3, a, 1)
    assert len(ts) == 1
    assert names(lin3, ts[0].paths) == ["a1", "a2"]


def test_trajectory_backward(lin3):
    b = lin3.quiver.path_by_names(["a2"])
    ts = trajectories(lin3, b, 1, direction="backward")
    assert len(ts) == 1
    assert [lin3.quiver.path_name(p) for p in ts[0].paths] == ["a1", "a2"]


def test_trajectory_zero_length(lin3):
    a = lin3.quiver.path_by_names(["a1"])
    ts = trajectories(lin3, a, 0)
    assert len(ts) == 1 and ts[0].paths == (a,)


def test_trajectory_nonprojective_interior():
    a = fixtures.random_truncated(5, 3, 5, 3)
    for rho in a.nonzero_paths(include_trivial=False):
        for t in trajectories(a, rho, 2):
            for p in t.paths[:-1]:
                assert not is_projective(a, path_module(a, p))


def test_trajectory_pd_lower_bound():
    a = fixtures.random_truncated(9, 4, 6, 3)
    for rho in a.nonzero_paths(include_trivial=False):
        for k in (2, 3):
            if trajectories(a, rho, k):
                assert pd_key(a, path_module(a, rho)) >= k


def test_trajectory_endpoints_match_syzygy(lin3, sim5):
    from collections import Counter

    for algebra in (lin3, sim5):
        for rho in algebra.nonzero_paths(include_trivial=False):
            for k in range(4):
                counts = cyclic.trajectory_endpoint_counts(algebra, rho, k)
                explicit = Counter(
                    t.endpoint for t in trajectories(algebra, rho, k)
                )
                assert counts == explicit


# -- chi ---------------------------------------------------------------------------------


def test_chi_values(lin3, sim5, cycle3):
    assert chi(lin3, module_expr(lin3, [simple_module(lin3, 0)])) == 2
    for v in range(sim5.quiver.num_vertices):
        assert chi(sim5, module_expr(sim5, [simple_module(sim5, v)])) == 0
    for v in range(3):
        assert chi(cycle3, module_expr(cycle3, [simple_module(cycle3, v)])) == 0


def test_chi_additivity(lin3):
    e1 = module_expr(lin3, [simple_module(lin3, 0)])
    e2 = module_expr(lin3, [simple_module(lin3, 1)])
    assert chi(lin3, direct_sum(e1, e2)) == max(chi(lin3, e1), chi(lin3, e2))


def test_chi_requires_truncated(contra84):
    with pytest.raises(UnsupportedOperationError):
        chi(contra84, module_expr(contra84, [simple_module(contra84, 0)]))


def test_chi_of_non_path_key(sim5):
    g = sim5.quiver.path_by_names(["g"])
    e = module_expr(sim5, [uniserial_module(sim5, g)])
    assert chi(sim5, e) == 1


# -- expression grammar ---------------------------------------------------------------


def test_parse_module_expr(sim5):
    e = parse_module_expr(sim5, "2*S(1) + U(g) + P(2)")
    assert e.projectives == ((1, 1),)
    assert dict(e.keys)[simple_module(sim5, 0)] == 2
    assert format_expr(sim5, e) == "2*S(1) + U(g) + P(2)"


def test_parse_module_expr_pm(contra84):
    e = parse_module_expr(contra84, "PM(g.a0)")
    assert e.keys[0][0] == path_module(
        contra84, contra84.quiver.path_by_names(["g", "a0"])
    )


def test_parse_module_expr_errors(sim5):
    for bad in ("S(99)", "U(zz)", "Q(1)", "0*S(1)", "S(1) +", "U(g.a5.a4)"):
        with pytest.raises(ModuleExprError):
            parse_module_expr(sim5, bad)


def test_zero_path_rejected(contra84):
    with pytest.raises(ModuleExprError):
        parse_module_expr(contra84, "PM(g.g)")


def test_trajectory_endpoints_up_to_six(lin3, cycle3):
    from collections import Counter

    for algebra in (lin3, cycle3):
        for rho in algebra.nonzero_paths(include_trivial=False):
            profile = cyclic.trajectory_endpoint_profile(algebra, rho, 6)
            expr = module_expr(algebra, [path_module(algebra, rho)])
            for k in range(7):
                got = Counter()
                for mu, count in profile[k].items():
                    key = path_module(algebra, mu)
                    if is_projective(algebra, key):
                        got[("P", key.vertex)] += count
                    else:
                        got[key] += count
                want = Counter(dict(expr.keys))
                for v, m in expr.projectives:
                    want[("P", v)] += m
                assert got == want
                expr = syzygy_expr(algebra, expr)
