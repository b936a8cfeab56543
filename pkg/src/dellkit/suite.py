"""The cross-cutting invariant suite run by batch checks and tests.

One algebra in, a list of named pass/fail reports out.  Everything here
combines results from at least two modules, which is why it lives apart
from them.
"""

from __future__ import annotations

import os
import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import cyclic, deloop, fixtures, itfunc, oracle
from .deloop import CheckReport
from .quiver import MonomialAlgebra, is_selfinjective_truncated

ORACLE_PATH_LIMIT = 300


def phi_axiom_check(
    algebra: MonomialAlgebra, exprs=None, seed: int = 0
) -> CheckReport:
    """The five standard properties of phi over sampled expressions.

    Checks, per expression M (and a second sample N): phi == pd whenever
    pd is finite; phi vanishes on indecomposables of infinite pd; phi is
    monotone under adding summands; invariant under multiplicities; and
    drops by at most one along a syzygy.
    """
    rng = random.Random(seed)
    if exprs is None:
        exprs = [fixtures.random_expr(algebra, rng) for _ in range(8)]
    failures = []
    for expr in exprs:
        p = itfunc.phi(algebra, expr)
        dim = cyclic.pd_expr(algebra, expr)
        if dim != float("inf") and p != dim:
            failures.append(
                f"phi {p} != pd {dim} on {cyclic.format_expr(algebra, expr)}"
            )
        other = fixtures.random_expr(algebra, rng)
        if not p <= itfunc.phi(algebra, cyclic.direct_sum(expr, other)):
            failures.append(
                f"phi dropped under a direct summand on "
                f"{cyclic.format_expr(algebra, expr)}"
            )
        k = rng.randint(2, 4)
        if itfunc.phi(algebra, cyclic.expr_power(expr, k)) != p:
            failures.append(
                f"phi changed under multiplicity {k} on "
                f"{cyclic.format_expr(algebra, expr)}"
            )
        if not p <= itfunc.phi(algebra, cyclic.syzygy_expr(algebra, expr)) + 1:
            failures.append(
                f"phi exceeded phi(syzygy)+1 on {cyclic.format_expr(algebra, expr)}"
            )
    for key in cyclic.standard_universe(algebra):
        if cyclic.is_projective(algebra, key):
            continue
        if cyclic.pd_key(algebra, key) == float("inf"):
            single = cyclic.module_expr(algebra, [key])
            if itfunc.phi(algebra, single) != 0:
                failures.append(
                    f"phi nonzero on infinite-pd indecomposable "
                    f"{cyclic.format_key(algebra, key)}"
                )
    return CheckReport(
        "phi-axioms",
        not failures,
        (("exprs_checked", len(exprs)), ("failures", tuple(failures))),
    )


def trajectory_identity_check(
    algebra: MonomialAlgebra, max_power: int = 5
) -> CheckReport:
    """Endpoint multisets of complement chains match iterated syzygies.

    Truncated algebras only: for every nontrivial nonzero path and every
    k up to the given power, the multiset of keys of the chain endpoints
    equals the summand multiset of the k-th syzygy of the path module.
    """
    failures = []
    checked = 0
    for rho in algebra.nonzero_paths(include_trivial=False):
        expr_k = cyclic.module_expr(algebra, [cyclic.path_module(algebra, rho)])
        profile = cyclic.trajectory_endpoint_profile(algebra, rho, max_power)
        for k in range(max_power + 1):
            got: Counter = Counter()
            for mu, count in profile[k].items():
                key = cyclic.path_module(algebra, mu)
                if cyclic.is_projective(algebra, key):
                    got[("P", key.vertex)] += count
                else:
                    got[key] += count
            want: Counter = Counter()
            for key, m in expr_k.keys:
                want[key] += m
            for v, m in expr_k.projectives:
                want[("P", v)] += m
            checked += 1
            if got != want:
                failures.append(
                    f"path {algebra.quiver.path_name(rho)}, power {k}"
                )
            expr_k = cyclic.syzygy_expr(algebra, expr_k)
    return CheckReport(
        "trajectory-identity",
        not failures,
        (("cases_checked", checked), ("failures", tuple(failures))),
    )


def oracle_equivalence_check(algebra: MonomialAlgebra) -> CheckReport:
    """Exact linear-algebra verification of every predicted syzygy."""
    if algebra.num_nonzero_paths() > ORACLE_PATH_LIMIT:
        return CheckReport(
            "oracle-equivalence",
            True,
            (("skipped", f"more than {ORACLE_PATH_LIMIT} nonzero paths"),),
        )
    failures = []
    keys = cyclic.standard_universe(algebra)
    for key in keys:
        report = oracle.verify_decomposition(algebra, key)
        if not report.passed:
            failures.append(
                f"{cyclic.format_key(algebra, key)}: " + "; ".join(report.problems)
            )
    return CheckReport(
        "oracle-equivalence",
        not failures,
        (("keys_checked", len(keys)), ("failures", tuple(failures))),
    )


def run_invariant_suite(
    algebra: MonomialAlgebra, seed: int = 0, with_oracle: bool = True
) -> list[CheckReport]:
    """All applicable checks for one algebra."""
    reports = []
    if algebra.is_truncated:
        reports.append(deloop.check_trunc_theorem(algebra))
        reports.append(deloop.gelinas_inequality_check(algebra))
        reports.append(deloop.phidim_upper_check(algebra))
        reports.append(trajectory_identity_check(algebra, max_power=3))
        reports.append(deloop.chi_bound_check(algebra))
        if algebra.truncation == 2 and not is_selfinjective_truncated(algebra):
            reports.append(deloop.rad_square_zero_checks(algebra))
    reports.append(phi_axiom_check(algebra, seed=seed))
    if with_oracle:
        reports.append(oracle_equivalence_check(algebra))
    return reports


@dataclass(frozen=True)
class SuiteResult:
    label: str
    reports: tuple[CheckReport, ...]

    @property
    def passed(self):
        return all(r.passed for r in self.reports)


def batch_check(
    algebras: list[tuple[str, MonomialAlgebra]],
    seed: int = 0,
    with_oracle: bool = True,
) -> list[SuiteResult]:
    """Run the suite over many algebras, optionally in worker threads.

    Parallelism is capped by the DELLKIT_THREADS environment variable
    (default 1); results come back in submission order either way.
    """
    workers = int(os.environ.get("DELLKIT_THREADS", "1") or "1")

    def run(item):
        label, algebra = item
        return SuiteResult(
            label, tuple(run_invariant_suite(algebra, seed=seed, with_oracle=with_oracle))
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, algebras))
    return [run(item) for item in algebras]
