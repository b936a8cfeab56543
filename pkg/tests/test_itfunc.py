import pytest

from dellkit import (
    UnsupportedOperationError,
    build_class_system,
    module_expr,
    phi,
    phidim_bounds,
    phidim_truncated,
    simple_module,
    syzygy_finite_report,
    uniserial_module,
)
from dellkit import cyclic, fixtures
from dellkit.linalg import ColumnSpace, nullspace, rank, solve_columns


def test_class_system_lin3(lin3):
    s1, s2 = simple_module(lin3, 0), simple_module(lin3, 1)
    system = build_class_system(lin3, [s1, s2])
    assert system.basis == (s1, s2)
    mat = system.dense_matrix()
    # the first simple maps to the second, the second dies
    assert mat == [[0, 0], [1, 0]]


def test_class_system_cycle_permutation(cycle3):
    simples = [simple_module(cycle3, v) for v in range(3)]
    system = build_class_system(cycle3, simples)
    mat = system.dense_matrix()
    assert sorted(sum(row) for row in mat) == [1, 1, 1]
    assert sorted(sum(col) for col in zip(*mat)) == [1, 1, 1]
    assert all(mat[i][i] == 0 for i in range(3))


def test_class_system_sim2(sim2):
    s1, s2 = simple_module(sim2, 0), simple_module(sim2, 1)
    system = build_class_system(sim2, [s1, s2])
    i1, i2 = system.index[s1], system.index[s2]
    col1 = system.columns[i1]
    assert col1 == {i1: 1, i2: 1}
    # the second simple resolves by the projective at the sink
    assert system.columns[i2] == {}


def test_phi_lin3(lin3):
    s1, s2 = simple_module(lin3, 0), simple_module(lin3, 1)
    assert phi(lin3, module_expr(lin3, [s1, s2])) == 2
    assert phi(lin3, module_expr(lin3, [s1])) == 2
    assert phi(lin3, module_expr(lin3, [s2])) == 1


def test_phi_zero_on_projectives(lin3):
    from dellkit import projective_module

    e = module_expr(lin3, [projective_module(lin3, 0)])
    assert phi(lin3, e) == 0
    assert phi(lin3, module_expr(lin3, [])) == 0


def test_phi_multiplicity_invariance(sim5):
    s1 = simple_module(sim5, 0)
    e = module_expr(sim5, [s1])
    for k in (2, 3, 5):
        assert phi(sim5, cyclic.expr_power(e, k)) == phi(sim5, e)


def test_phi_zero_on_infinite_pd_indecomposable(sim5):
    s1 = simple_module(sim5, 0)
    assert cyclic.pd_key(sim5, s1) == float("inf")
    assert phi(sim5, module_expr(sim5, [s1])) == 0


def test_phi_matches_pd_when_finite(sim2):
    # a 2-dimensional module with pd 2, sitting over the loop vertex
    g = sim2.quiver.path_by_names(["g"])
    e = module_expr(sim2, [uniserial_module(sim2, g)])
    assert cyclic.pd_expr(sim2, e) == 2
    assert phi(sim2, e) == 2


def test_phidim_values(lin3, sim2, sim5, cycle3):
    assert phidim_truncated(lin3) == 2
    assert phidim_truncated(cycle3) == 0
    assert phidim_truncated(sim5) == 5
    assert phidim_truncated(sim2) >= phi(
        sim2, module_expr(sim2, [simple_module(sim2, 0), simple_module(sim2, 1)])
    )


def test_phidim_requires_truncated(contra84):
    with pytest.raises(UnsupportedOperationError):
        phidim_truncated(contra84)


def test_phidim_bounds(contra84, lin3):
    lower, upper = phidim_bounds(contra84)
    assert upper == lower + 1
    # in the truncated non-selfinjective case the upper bound is the value
    assert phidim_bounds(lin3)[1] == phidim_truncated(lin3)


def test_syzygy_finite_report(lin3, cycle3):
    rep = syzygy_finite_report(lin3)
    assert rep.is_syzygy_finite_on_class
    assert rep.class_counts[-1] == 0  # everything resolves
    rep = syzygy_finite_report(cycle3)
    assert rep.stabilization_level == 0
    assert rep.class_counts == (3,)


# -- exact linear algebra ------------------------------------------------------------


def test_rank_exact():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([]) == 0


def test_rank_needs_no_floats():
    # a matrix whose float echelon would lose the rank drop
    m = [[1, 10**20], [1, 10**20 + 1]]
    assert rank(m) == 2
    assert rank([[10**20, 10**20], [10**20, 10**20]]) == 1


def test_nullspace():
    vecs = nullspace([[1, 1, 0], [0, 0, 1]], 3)
    assert len(vecs) == 1
    x, y, z = vecs[0]
    assert x + y == 0 and z == 0


def test_solve_columns():
    sols = solve_columns([[1, 0], [1, 1]], [[2, 3]])
    assert sols == [[2, 1]]
    assert solve_columns([[1], [1]], [[1, 2]]) is None


def test_column_space_incremental():
    space = ColumnSpace(3)
    assert space.add([1, 1, 0])
    assert not space.add([2, 2, 0])
    assert space.add([0, 1, 1])
    assert space.rank == 2
    assert space.contains([1, 0, -1])
    assert not space.contains([0, 0, 1])
