from fractions import Fraction

from dellkit import (
    module_expr,
    path_module,
    pd_bounded,
    projective_cover,
    projective_module,
    rep_of_expr,
    rep_of_key,
    simple_module,
    syzygy_rep,
    uniserial_module,
    verify_decomposition,
)
from dellkit import cyclic, fixtures, oracle


def test_rep_of_simple(lin3):
    rep = rep_of_key(lin3, simple_module(lin3, 0))
    assert rep.dims == (1, 0, 0)
    assert all(all(not x for x in row) for m in rep.maps.values() for row in m)


def test_rep_of_projective_lin3(lin3):
    rep = rep_of_key(lin3, projective_module(lin3, 0))
    assert rep.dims == (1, 1, 0)
    a1 = lin3.quiver.arrow_index["a1"]
    a2 = lin3.quiver.arrow_index["a2"]
    assert rep.maps[a1] == [[1]]
    assert rep.maps[a2] == []  # target space is zero


def test_rep_of_contra_uniserial(contra84):
    q = contra84.quiver
    rep = rep_of_key(
        contra84, uniserial_module(contra84, q.path_by_names(["a0", "a1"]))
    )
    assert sum(rep.dims) == 3
    assert [v for v, d in enumerate(rep.dims) if d] == [0, 1, 2]


def test_reps_are_bound_by_ideal(contra84, sim5):
    for algebra in (contra84, sim5):
        for key in cyclic.standard_universe(algebra)[:12]:
            assert oracle.is_bound_by_ideal(algebra, rep_of_key(algebra, key))


def test_cover_of_simple_is_vertex_projective(lin3):
    cover = projective_cover(lin3, rep_of_key(lin3, simple_module(lin3, 0)))
    assert cover.top_multiplicities == (1, 0, 0)
    assert cover.rep.dims == (1, 1, 0)


def test_cover_of_projective_is_itself(lin3):
    rep = rep_of_key(lin3, projective_module(lin3, 1))
    cover = projective_cover(lin3, rep)
    assert cover.rep.dims == rep.dims
    assert syzygy_rep(lin3, rep).is_zero


def test_cover_hom_commutes(sim5):
    for key in cyclic.standard_universe(sim5):
        rep = rep_of_key(sim5, key)
        cover = projective_cover(sim5, rep)
        assert oracle.hom_is_valid(sim5, cover.rep, rep, cover.hom)


def test_syzygy_rep_simple_lin3(lin3):
    rep = syzygy_rep(lin3, rep_of_key(lin3, simple_module(lin3, 0)))
    assert rep.dims == (0, 1, 0)


def test_syzygy_rep_dimension_count(sim5):
    for key in cyclic.standard_universe(sim5):
        rep = rep_of_key(sim5, key)
        cover = projective_cover(sim5, rep)
        kernel = oracle.kernel_of_cover(sim5, cover)
        assert kernel.rep.total_dimension == cover.rep.total_dimension - rep.total_dimension
        assert oracle.is_bound_by_ideal(sim5, cover.rep)
        assert oracle.is_bound_by_ideal(sim5, kernel.rep)


def test_syzygy_rep_contra_loop_simple(contra84):
    got = syzygy_rep(contra84, rep_of_key(contra84, simple_module(contra84, 0)))
    expected = rep_of_expr(
        contra84, cyclic.syzygy(contra84, simple_module(contra84, 0))
    )
    assert got.dims == expected.dims


def test_pd_bounded(lin3, sim5):
    assert pd_bounded(lin3, rep_of_key(lin3, simple_module(lin3, 0)), 5) == 2
    assert pd_bounded(sim5, rep_of_key(sim5, simple_module(sim5, 0)), 8) is None
    assert pd_bounded(lin3, rep_of_key(lin3, projective_module(lin3, 0)), 0) == 0


def test_pd_bounded_agrees_with_class_graph():
    a = fixtures.random_truncated(21, 4, 6, 3)
    for key in cyclic.standard_universe(a):
        exact = cyclic.pd_key(a, key)
        got = pd_bounded(a, rep_of_key(a, key), 6)
        if exact != float("inf") and exact <= 6:
            assert got == exact
        else:
            assert got is None


def test_verify_decomposition_all_fixtures(lin3, sim5, cycle3):
    for algebra in (lin3, sim5, cycle3):
        for key in cyclic.standard_universe(algebra):
            report = verify_decomposition(algebra, key)
            assert report.passed, (cyclic.format_key(algebra, key), report.problems)


def test_verify_decomposition_contra(contra84):
    for key in cyclic.standard_universe(contra84):
        report = verify_decomposition(contra84, key)
        assert report.passed, (cyclic.format_key(contra84, key), report.problems)


def test_verify_reports_kernel_dims(lin3):
    report = verify_decomposition(lin3, simple_module(lin3, 0))
    assert report.kernel_dims == (0, 1, 0)
    assert report.kernel_dims == report.predicted_dims


def test_exact_arithmetic_in_kernels(sim2):
    cover = projective_cover(sim2, rep_of_key(sim2, simple_module(sim2, 0)))
    kernel = oracle.kernel_of_cover(sim2, cover)
    for mat in kernel.inclusion.values():
        for row in mat:
            for x in row:
                assert isinstance(x, (int, Fraction))
