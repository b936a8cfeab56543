"""Delooping levels, finitistic dimension, and the theorem-level checks.

The delooping level of a module is the least n such that its n-th syzygy
is, stably, a direct summand of some (n+1)-st syzygy.  Because direct
sums of candidate comodules realize any multiplicities, the test happens
at the level of iso-class sets: dell(M) = min n with every nonprojective
class of Omega^n(M) inside the set S_{n+1} of classes realizable as
summands of (n+1)-st syzygies.

For truncated algebras the chain S_1 >= S_2 >= ... is exact: S_1 is the
set of all nontrivial nonprojective path-module classes (every first
syzygy is a sum of path modules, and each of those occurs as a summand of
the syzygy of a uniserial or a simple).  For general monomial algebras
the same chain only collects the syzygies realizable from monomial-basis
modules, hence a subset of the truth, and the computed dell is a
certified upper bound; every result carries an exactness flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import cyclic, itfunc
from .cyclic import CyclicModule, ModuleExpr
from .errors import UnsupportedOperationError
from .quiver import MonomialAlgebra, is_selfinjective_truncated

INFINITY = float("inf")


@dataclass(frozen=True)
class RealizableChain:
    """Decreasing sets of classes realizable as k-th syzygy summands."""

    sets: tuple[frozenset[CyclicModule], ...]  # sets[i] is S_{i+1}
    exact: bool

    @property
    def stable_index(self) -> int:
        """Least n such that S_{n+1} equals the stable tail."""
        return len(self.sets) - 1

    def level(self, n: int) -> frozenset[CyclicModule]:
        """S_n for n >= 1 (constant beyond the stabilization point)."""
        assert n >= 1
        return self.sets[min(n - 1, len(self.sets) - 1)]


def realizable_chain(algebra: MonomialAlgebra) -> RealizableChain:
    cache = algebra.caches.setdefault("deloop", {})
    if "chain" not in cache:
        current = cyclic.path_module_classes(algebra)
        sets = [current]
        while True:
            nxt = cyclic.syzygy_class_image(algebra, current)
            assert nxt <= current, "chain is not decreasing"
            if nxt == current:
                break
            sets.append(nxt)
            current = nxt
        cache["chain"] = RealizableChain(tuple(sets), algebra.is_truncated)
    return cache["chain"]


@dataclass(frozen=True)
class DellResult:
    value: object  # int or float('inf')
    exact: bool
    witness: object = None

    def __repr__(self):
        flag = "exact" if self.exact else "upper bound"
        return f"DellResult({self.value}, {flag})"


def dell_module(algebra: MonomialAlgebra, expr: ModuleExpr) -> DellResult:
    """Delooping level of a direct sum of monomial-basis modules."""
    chain = realizable_chain(algebra)
    classes = expr.class_set
    n = 0
    seen = set()
    while True:
        target = chain.level(n + 1)
        if classes <= target:
            witness = {
                "level": n,
                "classes": tuple(sorted(classes, key=CyclicModule.sort_key)),
            }
            return DellResult(n, chain.exact, witness)
        if n + 1 >= chain.stable_index + 1:
            # chain frozen from here on; a repeated class set can never pass
            if classes in seen:
                witness = {
                    "repeating_classes": tuple(
                        sorted(classes, key=CyclicModule.sort_key)
                    )
                }
                return DellResult(INFINITY, chain.exact, witness)
            seen.add(classes)
        classes = cyclic.syzygy_class_image(algebra, classes)
        n += 1


def dell_algebra(algebra: MonomialAlgebra) -> DellResult:
    """Max of the delooping levels of the simple modules."""
    per_simple = {}
    value = 0
    exact = algebra.is_truncated
    for v in range(algebra.quiver.num_vertices):
        res = dell_module(
            algebra, cyclic.module_expr(algebra, [cyclic.simple_module(algebra, v)])
        )
        per_simple[algebra.quiver.vertex_names[v]] = res.value
        value = max(value, res.value)
    return DellResult(value, exact, {"per_simple": per_simple})


def _uniserial_plus_simples(algebra: MonomialAlgebra) -> ModuleExpr:
    keys = [
        cyclic.uniserial_module(algebra, p)
        for p in algebra.nonzero_paths(include_trivial=False)
    ]
    keys += [
        cyclic.simple_module(algebra, v) for v in range(algebra.quiver.num_vertices)
    ]
    return cyclic.module_expr(algebra, keys)


def Dell_algebra(algebra: MonomialAlgebra) -> DellResult:
    """Global delooping level: the sup of dell over all modules.

    Exact for truncated algebras: zero in the selfinjective case, and
    otherwise max(1, dell of the sum of every uniserial on a nonzero path
    plus every simple), because any syzygy already splits into path
    modules and those all divide syzygies of that one test module.  For
    other monomial algebras the same formula is reported as an upper
    bound for the monomial-basis module class.
    """
    if algebra.is_truncated and is_selfinjective_truncated(algebra):
        return DellResult(0, True, {"selfinjective": True})
    inner = dell_module(algebra, _uniserial_plus_simples(algebra))
    value = max(1, inner.value) if inner.value != INFINITY else INFINITY
    return DellResult(value, algebra.is_truncated, inner.witness)


def findim_truncated(algebra: MonomialAlgebra) -> int:
    """Finitistic dimension of a truncated algebra.

    Zero when no connected component has both an arrow and a sink (then
    every finite projective dimension is zero); otherwise one more than
    the largest finite pd of a path module, each of which is realized by
    a module one syzygy step earlier.
    """
    if not algebra.is_truncated:
        raise UnsupportedOperationError(
            "findim is computed for truncated algebras only"
        )
    q = algebra.quiver
    sinks = set(q.sinks())
    effective = False
    for comp in q.undirected_components():
        has_arrow = any(q.out_arrows[v] for v in comp)
        if has_arrow and comp & sinks:
            effective = True
            break
    if not effective:
        return 0
    best = 0
    for p in algebra.nonzero_paths(include_trivial=False):
        value = cyclic.pd_key(algebra, cyclic.path_module(algebra, p))
        if value != INFINITY:
            best = max(best, value)
    return 1 + best


# -- theorem-level report operations -------------------------------------------------


@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    details: tuple[tuple[str, object], ...]

    def detail(self, key):
        return dict(self.details)[key]


def check_trunc_theorem(algebra: MonomialAlgebra) -> CheckReport:
    """dell(A) == Dell(A) == findim of the opposite, for truncated A.

    When findim of the opposite vanishes the theorem does not apply; the
    report then checks the selfinjective/global-level-one dichotomy.
    """
    if not algebra.is_truncated:
        raise UnsupportedOperationError("check applies to truncated algebras only")
    fop = findim_truncated(algebra.opposite())
    d = dell_algebra(algebra).value
    gd = Dell_algebra(algebra).value
    if fop > 0:
        passed = d == gd == fop
        branch = "main"
    else:
        expected = 0 if is_selfinjective_truncated(algebra) else 1
        passed = d == 0 and gd == expected
        branch = "findim_op_zero"
    return CheckReport(
        "trunc-theorem",
        passed,
        (
            ("branch", branch),
            ("dell", d),
            ("Dell", gd),
            ("findim_op", fop),
        ),
    )


def gelinas_inequality_check(algebra: MonomialAlgebra) -> CheckReport:
    """findim of the opposite never exceeds dell (truncated algebras)."""
    if not algebra.is_truncated:
        raise UnsupportedOperationError("check applies to truncated algebras only")
    fop = findim_truncated(algebra.opposite())
    d = dell_algebra(algebra).value
    return CheckReport(
        "gelinas",
        fop <= d,
        (("findim_op", fop), ("dell", d)),
    )


def all_radical_square_zero_keys(algebra: MonomialAlgebra) -> list[CyclicModule]:
    """Every cyclic monomial-basis module of a level-2 truncation.

    With radical square zero a prefix-closed basis is the trivial path
    plus any subset of the outgoing arrows, so the full key universe is
    small enough to enumerate.
    """
    assert algebra.truncation == 2
    out = []
    for v in range(algebra.quiver.num_vertices):
        arrows = algebra.quiver.out_arrows[v]
        for mask in range(1 << len(arrows)):
            chosen = [
                (arrows[i],) for i in range(len(arrows)) if mask & (1 << i)
            ]
            out.append(cyclic.CyclicModule(v, tuple([()] + sorted(chosen))))
    return out


def rad_square_zero_checks(algebra: MonomialAlgebra) -> CheckReport:
    """Level-2 sandwich 1 <= dell(M) <= max(1, dell(top M)) and the
    dell/Dell dichotomy, verified over every key of the algebra."""
    if not (algebra.is_truncated and algebra.truncation == 2):
        raise UnsupportedOperationError(
            "radical-square-zero checks need a level-2 truncation"
        )
    if is_selfinjective_truncated(algebra):
        raise UnsupportedOperationError(
            "radical-square-zero checks assume a non-selfinjective algebra"
        )
    failures = []
    checked = 0
    for key in all_radical_square_zero_keys(algebra):
        if key.is_simple or cyclic.is_projective(algebra, key):
            continue
        checked += 1
        d = dell_module(algebra, cyclic.module_expr(algebra, [key])).value
        top = dell_module(
            algebra,
            cyclic.module_expr(algebra, [cyclic.simple_module(algebra, key.vertex)]),
        ).value
        if not (1 <= d <= max(1, top)):
            failures.append(
                f"{cyclic.format_key(algebra, key)}: dell={d}, dell(top)={top}"
            )
    d_alg = dell_algebra(algebra).value
    gd = Dell_algebra(algebra).value
    if d_alg == 0:
        dichotomy_ok = gd == 1
    else:
        dichotomy_ok = gd == d_alg
    return CheckReport(
        "rad-square-zero",
        not failures and dichotomy_ok,
        (
            ("keys_checked", checked),
            ("module_failures", tuple(failures)),
            ("dell", d_alg),
            ("Dell", gd),
            ("dichotomy_ok", dichotomy_ok),
        ),
    )


def chi_bound_check(
    algebra: MonomialAlgebra, exprs: Optional[list[ModuleExpr]] = None
) -> CheckReport:
    """dell(M) <= chi(M) <= chi(Omega M) + 1 over the given expressions."""
    if not algebra.is_truncated:
        raise UnsupportedOperationError("chi is defined for truncated algebras only")
    if exprs is None:
        exprs = [
            cyclic.module_expr(algebra, [key])
            for key in cyclic.standard_universe(algebra)
        ]
    failures = []
    for expr in exprs:
        d = dell_module(algebra, expr).value
        c = cyclic.chi(algebra, expr)
        c_next = cyclic.chi(algebra, cyclic.syzygy_expr(algebra, expr))
        if not (d <= c <= c_next + 1):
            failures.append(
                f"{cyclic.format_expr(algebra, expr)}: dell={d}, chi={c}, "
                f"chi(syzygy)={c_next}"
            )
    return CheckReport(
        "chi-bounds",
        not failures,
        (("exprs_checked", len(exprs)), ("failures", tuple(failures))),
    )


def phidim_upper_check(algebra: MonomialAlgebra) -> CheckReport:
    """Dell(A) <= phi-dimension for truncated algebras."""
    if not algebra.is_truncated:
        raise UnsupportedOperationError("check applies to truncated algebras only")
    gd = Dell_algebra(algebra).value
    pdim = itfunc.phidim_truncated(algebra)
    return CheckReport(
        "dell-vs-phidim",
        gd <= pdim,
        (("Dell", gd), ("phidim", pdim)),
    )
