"""Property tests over seeded random truncated algebras."""

import random

from hypothesis import HealthCheck, given, settings
import hypothesis.strategies as st

from dellkit import cyclic, deloop, fixtures, itfunc, oracle

SLOW = settings(
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

seeds = st.integers(min_value=0, max_value=10**6)


def small_algebra(seed):
    rng = random.Random(f"prop:{seed}")
    return fixtures.random_truncated(
        seed, rng.randint(1, 4), rng.randint(1, 6), rng.randint(2, 3)
    )


@SLOW
@given(seeds)
def test_nonzero_paths_prefix_closed(seed):
    a = small_algebra(seed)
    for v in range(a.quiver.num_vertices):
        arrows = {p.arrows for p in a.nonzero_paths_from(v)}
        for t in arrows:
            assert all(t[:i] in arrows for i in range(len(t)))


@SLOW
@given(seeds)
def test_opposite_involution_and_path_reversal(seed):
    a = small_algebra(seed)
    op = a.opposite()
    assert op.opposite() == a
    mine = {(p.source, p.arrows) for p in a.nonzero_paths()}
    assert {(p.target, tuple(reversed(p.arrows))) for p in op.nonzero_paths()} == mine


@SLOW
@given(seeds, seeds)
def test_dell_of_sum_is_max(seed, expr_seed):
    a = small_algebra(seed)
    rng = random.Random(expr_seed)
    e1 = fixtures.random_expr(a, rng)
    e2 = fixtures.random_expr(a, rng)
    lhs = deloop.dell_module(a, cyclic.direct_sum(e1, e2)).value
    rhs = max(deloop.dell_module(a, e1).value, deloop.dell_module(a, e2).value)
    assert lhs == rhs


@SLOW
@given(seeds, seeds)
def test_pd_of_sum_is_max(seed, expr_seed):
    a = small_algebra(seed)
    rng = random.Random(expr_seed)
    e1 = fixtures.random_expr(a, rng)
    e2 = fixtures.random_expr(a, rng)
    assert cyclic.pd_expr(a, cyclic.direct_sum(e1, e2)) == max(
        cyclic.pd_expr(a, e1), cyclic.pd_expr(a, e2)
    )


@SLOW
@given(seeds)
def test_trunc_theorem_on_random(seed):
    a = small_algebra(seed)
    assert deloop.check_trunc_theorem(a).passed


@SLOW
@given(seeds)
def test_gelinas_and_phidim_inequalities(seed):
    a = small_algebra(seed)
    assert deloop.gelinas_inequality_check(a).passed
    assert deloop.phidim_upper_check(a).passed


@SLOW
@given(seeds, seeds)
def test_dell_chi_sandwich(seed, expr_seed):
    a = small_algebra(seed)
    rng = random.Random(expr_seed)
    e = fixtures.random_expr(a, rng)
    d = deloop.dell_module(a, e).value
    c = cyclic.chi(a, e)
    assert d <= c <= cyclic.chi(a, cyclic.syzygy_expr(a, e)) + 1


@SLOW
@given(seeds, seeds)
def test_phi_axioms_random(seed, expr_seed):
    a = small_algebra(seed)
    rng = random.Random(expr_seed)
    e = fixtures.random_expr(a, rng)
    other = fixtures.random_expr(a, rng)
    p = itfunc.phi(a, e)
    dim = cyclic.pd_expr(a, e)
    if dim != float("inf"):
        assert p == dim
    assert p <= itfunc.phi(a, cyclic.direct_sum(e, other))
    assert itfunc.phi(a, cyclic.expr_power(e, 3)) == p
    assert p <= itfunc.phi(a, cyclic.syzygy_expr(a, e)) + 1


@settings(max_examples=12, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(seeds)
def test_trajectory_identity_random(seed):
    from dellkit.suite import trajectory_identity_check

    a = small_algebra(seed)
    assert trajectory_identity_check(a, max_power=3).passed


@settings(max_examples=10, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(seeds)
def test_oracle_agrees_on_random_keys(seed):
    a = small_algebra(seed)
    rng = random.Random(seed)
    universe = cyclic.standard_universe(a)
    for key in rng.sample(universe, min(6, len(universe))):
        assert oracle.verify_decomposition(a, key).passed


@SLOW
@given(seeds)
def test_syzygy_drops_dell_or_chi_monotonicity(seed):
    # chi of a syzygy never exceeds chi of the module itself
    a = small_algebra(seed)
    for v in range(a.quiver.num_vertices):
        e = cyclic.module_expr(a, [cyclic.simple_module(a, v)])
        c = cyclic.chi(a, e)
        assert cyclic.chi(a, cyclic.syzygy_expr(a, e)) <= max(c, 1)
