"""Deterministic generators for the standard test families.

Families:

* ``LIN(n, l)``    -- equioriented line on n vertices, truncated at l.
* ``CYCLE(n, l)``  -- single oriented n-cycle, truncated at l (the
  selfinjective Nakayama fixtures).
* ``SIM(n)``       -- radical-square-zero algebra on a loop followed by a
  tail of length n; the standard asymmetry example (finitistic dimension
  n on one side, delooping level 0 on the other).
* ``CONTRA(n, k)`` -- monomial family whose delooping level outgrows the
  finitistic dimension of the opposite; see :func:`contra`.
* ``RANDOM(seed, vertices, arrows, l)`` -- seeded truncated algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from . import cyclic, deloop
from .cyclic import CyclicModule
from .errors import AlgebraError
from .quiver import MonomialAlgebra, Quiver


def lin(n: int, l: int = 2, name: Optional[str] = None) -> MonomialAlgebra:
    if n < 1:
        raise AlgebraError("LIN needs at least one vertex")
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = [(f"a{i}", str(i), str(i + 1)) for i in range(1, n)]
    return MonomialAlgebra(
        Quiver(vertices, arrows), truncation=l, name=name or f"LIN{n}_l{l}"
    )


def cycle(n: int, l: int = 2, name: Optional[str] = None) -> MonomialAlgebra:
    if n < 1:
        raise AlgebraError("CYCLE needs at least one vertex")
    vertices = [str(i) for i in range(1, n + 1)]
    arrows = [
        (f"a{i}", str(i), str(i % n + 1)) for i in range(1, n + 1)
    ]
    return MonomialAlgebra(
        Quiver(vertices, arrows), truncation=l, name=name or f"CYCLE{n}_l{l}"
    )


def sim(n: int, name: Optional[str] = None) -> MonomialAlgebra:
    """Loop at vertex 1 plus a chain 1 -> 2 -> ... -> n+1, radical square zero."""
    if n < 1:
        raise AlgebraError("SIM needs n >= 1")
    vertices = [str(i) for i in range(1, n + 2)]
    arrows = [("g", "1", "1")]
    arrows += [(f"a{i}", str(i), str(i + 1)) for i in range(1, n + 1)]
    return MonomialAlgebra(
        Quiver(vertices, arrows), truncation=2, name=name or f"SIM{n}"
    )


def contra(n: int, k: int, name: Optional[str] = None) -> MonomialAlgebra:
    """Monomial family with a loop, a long chain and four shortcut arrows.

    Vertices 0..n, a loop g at 0, chain arrows a0..a(n-1), and shortcuts
    b1..b4 from 0 to k-1+i.  The ideal kills the loop square, the loop
    followed by any shortcut, each shortcut extended one step down the
    chain, the first three chain arrows, and every four consecutive chain
    arrows starting from a1.
    """
    if k < 4 or n < k + 4:
        raise AlgebraError("CONTRA needs n >= k + 4 >= 8")
    vertices = [str(i) for i in range(n + 1)]
    arrows = [("g", "0", "0")]
    arrows += [(f"a{i}", str(i), str(i + 1)) for i in range(n)]
    arrows += [(f"b{i}", "0", str(k - 1 + i)) for i in range(1, 5)]
    quiver = Quiver(vertices, arrows)
    rel = []
    for i in range(1, n - 3):
        rel.append(quiver.path_by_names([f"a{i}", f"a{i+1}", f"a{i+2}", f"a{i+3}"]))
    for i in range(1, 5):
        rel.append(quiver.path_by_names([f"b{i}", f"a{k-1+i}"]))
        rel.append(quiver.path_by_names(["g", f"b{i}"]))
    rel.append(quiver.path_by_names(["g", "g"]))
    rel.append(quiver.path_by_names(["a0", "a1", "a2"]))
    return MonomialAlgebra(quiver, relations=rel, name=name or f"CONTRA{n}_{k}")


def random_truncated(
    seed: int, vertices: int, arrows: int, l: int, name: Optional[str] = None
) -> MonomialAlgebra:
    """Seeded truncated algebra; identical seed gives an identical algebra."""
    if vertices < 1 or arrows < 0 or l < 2:
        raise AlgebraError("RANDOM needs vertices >= 1, arrows >= 0, l >= 2")
    rng = random.Random(seed)
    names = [f"v{i}" for i in range(1, vertices + 1)]
    arrow_specs = []
    for j in range(1, arrows + 1):
        src = rng.choice(names)
        tgt = rng.choice(names)
        arrow_specs.append((f"a{j}", src, tgt))
    return MonomialAlgebra(
        Quiver(names, arrow_specs),
        truncation=l,
        name=name or f"RND{seed}_v{vertices}a{arrows}l{l}",
    )


def random_sample(seed: int, max_vertices=5, max_arrows=8, max_level=4) -> MonomialAlgebra:
    """One draw of the standard random corpus: sizes derived from the seed."""
    rng = random.Random(f"sizes:{seed}")
    v = rng.randint(1, max_vertices)
    a = rng.randint(1, max_arrows)
    l = rng.randint(2, max_level)
    return random_truncated(seed, v, a, l)


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: Optional[int] = None
    k: Optional[int] = None
    l: Optional[int] = None
    seed: Optional[int] = None
    vertices: Optional[int] = None
    arrows: Optional[int] = None


def generate(spec: FamilySpec) -> MonomialAlgebra:
    fam = spec.family.upper()
    if fam == "LIN":
        return lin(_need(spec.n, "n"), spec.l or 2)
    if fam == "CYCLE":
        return cycle(_need(spec.n, "n"), spec.l or 2)
    if fam == "SIM":
        return sim(_need(spec.n, "n"))
    if fam == "CONTRA":
        return contra(_need(spec.n, "n"), _need(spec.k, "k"))
    if fam == "RANDOM":
        return random_truncated(
            _need(spec.seed, "seed"),
            _need(spec.vertices, "vertices"),
            _need(spec.arrows, "arrows"),
            spec.l or 2,
        )
    raise AlgebraError(f"unknown family {spec.family!r}")


def _need(value, what):
    if value is None:
        raise AlgebraError(f"family parameter {what!r} is required")
    return value


def random_expr(algebra: MonomialAlgebra, rng: random.Random, max_summands=3, max_mult=2):
    """Random direct sum over the standard key universe."""
    universe = cyclic.standard_universe(algebra)
    count = rng.randint(1, max_summands)
    picks = [
        (rng.choice(universe), rng.randint(1, max_mult)) for _ in range(count)
    ]
    return cyclic.module_expr(algebra, picks)


# -- the CONTRA report ---------------------------------------------------------------


@dataclass(frozen=True)
class ContraReport:
    n: int
    k: int
    passed: bool
    syzygy_of_loop_simple_ok: bool
    torsionless_simples_ok: bool
    dell_loop_simple: object
    pd_step_two_uniserial: object
    dell_equals_pd_plus_one: bool
    realizable_matches_expected: bool
    floor_bound_ok: bool
    details: tuple[tuple[str, object], ...]


def _contra_expected_first_level(algebra, n, k) -> frozenset:
    """Expected realizable first-syzygy classes of CONTRA(n, k).

    The two uniserials hanging off vertex 0, the simple at vertex 2 (it
    embeds in the projective at 0 through the loop path), and for every
    chain position the simple, the one-step and two-step uniserials,
    whenever those are not projective.
    """
    q = algebra.quiver

    def u(names):
        return cyclic.uniserial_module(algebra, q.path_by_names(names))

    expected = {u(["a0", "a1"]), u(["a1"]), cyclic.simple_module(algebra, 2)}
    for i in range(4, n + 1):
        for key in (
            cyclic.simple_module(algebra, i),
            u([f"a{i-1}"]),
            u([f"a{i-2}", f"a{i-1}"]),
        ):
            if not cyclic.is_projective(algebra, key):
                expected.add(key)
    return frozenset(expected)


def contraej_report(n: int, k: int) -> ContraReport:
    """Reproduce the homological profile of the CONTRA family.

    Checks, in order: the syzygy of the simple at the loop vertex; the
    torsionless simples along the chain; dell of the loop simple against
    pd of the one-step uniserial at vertex 1 plus one; the realizable
    first-syzygy class set; and the floor(n/4) lower bound for the
    algebra-level delooping level.
    """
    algebra = contra(n, k)
    q = algebra.quiver

    def u(names):
        return cyclic.uniserial_module(algebra, q.path_by_names(names))

    s0 = cyclic.module_expr(algebra, [cyclic.simple_module(algebra, 0)])
    omega_s0 = cyclic.syzygy_expr(algebra, s0)
    expected_omega = cyclic.module_expr(
        algebra,
        [u(["a1"]), u(["a0", "a1"])]
        + [cyclic.simple_module(algebra, k + i) for i in range(4)],
    )
    syz_ok = omega_s0 == expected_omega

    torsionless = [2] + list(range(4, n + 1))
    tors_ok = all(
        deloop.dell_module(
            algebra, cyclic.module_expr(algebra, [cyclic.simple_module(algebra, v)])
        ).value
        == 0
        for v in torsionless
    )

    dell_s0 = deloop.dell_module(algebra, s0).value
    pd_u1 = cyclic.pd_key(algebra, u(["a1"]))
    dell_pd_ok = dell_s0 == pd_u1 + 1

    chain = deloop.realizable_chain(algebra)
    expected_level = _contra_expected_first_level(algebra, n, k)
    realizable_ok = chain.level(1) == expected_level

    dell_alg = deloop.dell_algebra(algebra).value
    floor_ok = dell_alg >= n // 4

    passed = syz_ok and tors_ok and dell_pd_ok and realizable_ok and floor_ok
    return ContraReport(
        n=n,
        k=k,
        passed=passed,
        syzygy_of_loop_simple_ok=syz_ok,
        torsionless_simples_ok=tors_ok,
        dell_loop_simple=dell_s0,
        pd_step_two_uniserial=pd_u1,
        dell_equals_pd_plus_one=dell_pd_ok,
        realizable_matches_expected=realizable_ok,
        floor_bound_ok=floor_ok,
        details=(
            ("syzygy_of_S0", cyclic.format_expr(algebra, omega_s0)),
            ("dell_S0", dell_s0),
            ("pd_U_a1", pd_u1),
            ("dell_algebra", dell_alg),
            ("floor_n_over_4", n // 4),
            ("realizable_count", len(chain.level(1))),
        ),
    )
