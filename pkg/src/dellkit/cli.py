"""Command line front end.

Exit codes: 0 success, 1 unsupported operation for the given algebra,
2 malformed input (file or expression), 3 a check command found failures.
Output is deterministic; ``--format json-like`` switches from the human
table to one ``key=value`` record per line with bracketed lists.
"""

from __future__ import annotations

import argparse
import sys

from . import algfile, cyclic, deloop, fixtures, itfunc, oracle, suite
from .errors import AlgebraError, DellkitError, UnsupportedOperationError
from .quiver import (
    MonomialAlgebra,
    cycle_successor_set,
    is_selfinjective_truncated,
)

INF = float("inf")


def _fmt_value(value):
    if value == INF:
        return "inf"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_fmt_value(v) for v in value) + "]"
    return str(value)


def emit(records, fmt):
    for key, value in records:
        if fmt == "json-like":
            print(f"{key}={_fmt_value(value)}")
        else:
            print(f"{key}: {_fmt_value(value)}")


def _load(args) -> MonomialAlgebra:
    algebra = algfile.load_algebra(args.algebra)
    if getattr(args, "opposite", False):
        algebra = algebra.opposite()
    return algebra


def _expr(algebra, args):
    return cyclic.parse_module_expr(algebra, args.module)


def cmd_info(args):
    a = _load(args)
    q = a.quiver
    records = [
        ("algebra", a.name),
        ("vertices", list(q.vertex_names)),
        ("arrows", [f"{x.name}:{q.vertex_names[x.source]}->{q.vertex_names[x.target]}" for x in q.arrows]),
        ("mode", f"truncated:{a.truncation}" if a.is_truncated else "relations"),
    ]
    if not a.is_truncated:
        records.append(("relations", [q.path_name(r) for r in a.relations]))
    records += [
        ("nonzero_paths", a.num_nonzero_paths()),
        ("sources", [q.vertex_names[v] for v in q.sources()]),
        ("sinks", [q.vertex_names[v] for v in q.sinks()]),
        ("cycle_successors", sorted(q.vertex_names[v] for v in cycle_successor_set(a))),
    ]
    if a.is_truncated:
        records.append(("selfinjective", is_selfinjective_truncated(a)))
    emit(records, args.format)
    return 0


def cmd_syzygy(args):
    a = _load(args)
    expr = _expr(a, args)
    result = cyclic.iterate_syzygy(a, expr, args.power)
    emit(
        [
            ("module", cyclic.format_expr(a, expr)),
            ("power", args.power),
            ("syzygy", cyclic.format_expr(a, result)),
        ],
        args.format,
    )
    return 0


def cmd_pd(args):
    a = _load(args)
    expr = _expr(a, args)
    value = cyclic.pd_expr(a, expr)
    emit([("module", cyclic.format_expr(a, expr)), ("pd", value)], args.format)
    return 0


def cmd_trajectories(args):
    a = _load(args)
    rho = a.quiver.path_by_names(args.path.split("."))
    if not a.is_nonzero(rho.source, rho.arrows):
        raise AlgebraError(f"path {args.path!r} lies in the ideal")
    found = cyclic.trajectories(a, rho, args.length, args.direction)
    records = [
        ("path", args.path),
        ("length", args.length),
        ("direction", args.direction),
        ("count", len(found)),
    ]
    for i, t in enumerate(
        sorted(found, key=lambda t: tuple(p.sort_key() for p in t.paths))
    ):
        records.append(
            (f"trajectory_{i}", [a.quiver.path_name(p) for p in t.paths])
        )
    emit(records, args.format)
    return 0


def cmd_chi(args):
    a = _load(args)
    expr = _expr(a, args)
    emit(
        [("module", cyclic.format_expr(a, expr)), ("chi", cyclic.chi(a, expr))],
        args.format,
    )
    return 0


def cmd_phi(args):
    a = _load(args)
    expr = _expr(a, args)
    emit(
        [("module", cyclic.format_expr(a, expr)), ("phi", itfunc.phi(a, expr))],
        args.format,
    )
    return 0


def cmd_phidim(args):
    a = _load(args)
    if a.is_truncated:
        emit(
            [("phidim", itfunc.phidim_truncated(a)), ("exact", True)],
            args.format,
        )
    else:
        lower, upper = itfunc.phidim_bounds(a)
        emit(
            [
                ("phidim_lower", lower),
                ("phidim_upper", upper),
                ("exact", False),
            ],
            args.format,
        )
    return 0


def _apply_mode(algebra, result, mode):
    if mode == "exact" and not algebra.is_truncated:
        raise UnsupportedOperationError(
            "exact mode requires a truncated algebra; rerun with --mode bound"
        )
    exact = result.exact and mode != "bound"
    return result.value, exact


def cmd_dell(args):
    a = _load(args)
    if args.module:
        expr = _expr(a, args)
        res = deloop.dell_module(a, expr)
        records = [("module", cyclic.format_expr(a, expr))]
    else:
        res = deloop.dell_algebra(a)
        records = []
    value, exact = _apply_mode(a, res, args.mode)
    records += [("dell", value), ("exact", exact)]
    emit(records, args.format)
    return 0


def cmd_Dell(args):
    a = _load(args)
    value, exact = _apply_mode(a, deloop.Dell_algebra(a), args.mode)
    emit([("Dell", value), ("exact", exact)], args.format)
    return 0


def cmd_findim(args):
    a = _load(args)
    emit([("findim", deloop.findim_truncated(a))], args.format)
    return 0


def _emit_reports(reports, fmt):
    bad = 0
    for r in reports:
        emit([(f"check.{r.name}", "pass" if r.passed else "FAIL")], fmt)
        for key, value in r.details:
            emit([(f"check.{r.name}.{key}", value)], fmt)
        if not r.passed:
            bad += 1
    emit([("failures", bad)], fmt)
    return 3 if bad else 0


def cmd_check(args):
    if args.what == "contraej":
        report = fixtures.contraej_report(args.n, args.k)
        records = [
            ("contraej", f"n={report.n} k={report.k}"),
            ("syzygy_of_loop_simple_ok", report.syzygy_of_loop_simple_ok),
            ("torsionless_simples_ok", report.torsionless_simples_ok),
            ("dell_equals_pd_plus_one", report.dell_equals_pd_plus_one),
            ("realizable_matches_expected", report.realizable_matches_expected),
            ("floor_bound_ok", report.floor_bound_ok),
        ]
        records += list(report.details)
        records.append(("passed", report.passed))
        emit(records, args.format)
        return 0 if report.passed else 3

    if args.what == "batch":
        algebras = _batch_algebras(args)
        results = suite.batch_check(
            algebras, seed=args.seed, with_oracle=not args.no_oracle
        )
        bad = 0
        for result in results:
            emit([(f"suite.{result.label}", "pass" if result.passed else "FAIL")], args.format)
            if not result.passed:
                bad += 1
                for r in result.reports:
                    if not r.passed:
                        emit(
                            [(f"suite.{result.label}.{r.name}", dict(r.details))],
                            args.format,
                        )
        emit([("algebras", len(results)), ("failures", bad)], args.format)
        return 3 if bad else 0

    if not args.algebra:
        raise AlgebraError(f"check {args.what!r} needs --algebra")
    a = _load(args)
    if args.what == "trunc-theorem":
        reports = [deloop.check_trunc_theorem(a)]
    elif args.what == "gelinas":
        reports = [deloop.gelinas_inequality_check(a)]
    elif args.what == "rad-square-zero":
        reports = [deloop.rad_square_zero_checks(a)]
    elif args.what == "phi-axioms":
        reports = [suite.phi_axiom_check(a, seed=args.seed)]
    elif args.what == "suite":
        reports = suite.run_invariant_suite(a, seed=args.seed, with_oracle=not args.no_oracle)
    else:
        raise AlgebraError(f"unknown check {args.what!r}")
    return _emit_reports(reports, args.format)


def _batch_algebras(args):
    algebras = []
    if args.dir:
        import pathlib

        for path in sorted(pathlib.Path(args.dir).glob("*.alg")):
            algebras.append((path.name, algfile.load_algebra(path)))
    elif args.family:
        fam = args.family.upper()
        if fam == "RANDOM":
            lo, hi = (int(x) for x in args.seeds.split(":"))
            for seed in range(lo, hi + 1):
                a = fixtures.random_sample(
                    seed, args.max_vertices, args.max_arrows, args.max_trunc
                )
                algebras.append((a.name, a))
        else:
            for n in range(args.start, args.end + 1):
                spec = fixtures.FamilySpec(family=fam, n=n, k=args.k, l=args.l)
                a = fixtures.generate(spec)
                algebras.append((a.name, a))
    else:
        raise AlgebraError("batch check needs --dir or --family")
    return algebras


def cmd_verify(args):
    a = _load(args)
    keys = cyclic.standard_universe(a)
    failures = []
    pd_checked = 0
    for key in keys:
        report = oracle.verify_decomposition(a, key)
        if not report.passed:
            failures.append((cyclic.format_key(a, key), report.problems))
        exact = cyclic.pd_key(a, key)
        if exact != INF and exact <= args.bound:
            pd_checked += 1
            if oracle.pd_bounded(a, oracle.rep_of_key(a, key), args.bound) != exact:
                failures.append((cyclic.format_key(a, key), ("pd mismatch",)))
        elif exact == INF:
            # probe shallowly: resolutions of infinite-pd modules grow fast
            pd_checked += 1
            probe = min(args.bound, 3)
            if oracle.pd_bounded(a, oracle.rep_of_key(a, key), probe) is not None:
                failures.append((cyclic.format_key(a, key), ("finite pd reported",)))
    records = [
        ("keys_checked", len(keys)),
        ("pd_cross_checked", pd_checked),
        ("failures", len(failures)),
    ]
    for name, problems in failures:
        records.append((f"failure.{name}", list(problems)))
    emit(records, args.format)
    return 3 if failures else 0


def cmd_fixture(args):
    spec = fixtures.FamilySpec(
        family=args.family,
        n=args.n,
        k=args.k,
        l=args.l,
        seed=args.seed,
        vertices=args.vertices,
        arrows=args.arrows,
    )
    a = fixtures.generate(spec)
    text = algfile.render_algebra_file(a)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text)
        emit([("written", args.out)], args.format)
    else:
        sys.stdout.write(text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dellkit",
        description="Homological invariants of finite-dimensional monomial path algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, module=False, needs_algebra=True):
        if needs_algebra:
            p.add_argument("--algebra", required=True, help="algebra file")
            p.add_argument(
                "--opposite", action="store_true", help="work in the opposite algebra"
            )
        if module:
            p.add_argument("--module", required=True, help="module expression")
        p.add_argument(
            "--format", choices=["text", "json-like"], default="text"
        )

    p = sub.add_parser("info", help="structural summary of an algebra")
    common(p)
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("syzygy", help="iterated syzygy of a module expression")
    common(p, module=True)
    p.add_argument("--power", type=int, default=1)
    p.set_defaults(func=cmd_syzygy)

    p = sub.add_parser("pd", help="projective dimension (exact, detects infinity)")
    common(p, module=True)
    p.set_defaults(func=cmd_pd)

    p = sub.add_parser("trajectories", help="complement chains from a path")
    common(p)
    p.add_argument("--path", required=True, help="dot-separated arrow names")
    p.add_argument("--length", type=int, required=True)
    p.add_argument(
        "--direction", choices=["forward", "backward"], default="forward"
    )
    p.set_defaults(func=cmd_trajectories)

    p = sub.add_parser("chi", help="syzygy stabilization level (truncated only)")
    common(p, module=True)
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("phi", help="Igusa-Todorov phi of a module expression")
    common(p, module=True)
    p.set_defaults(func=cmd_phi)

    p = sub.add_parser("phidim", help="phi-dimension (exact for truncated)")
    common(p)
    p.set_defaults(func=cmd_phidim)

    p = sub.add_parser("dell", help="delooping level of the algebra or a module")
    common(p)
    p.add_argument("--module", help="module expression (default: the algebra)")
    p.add_argument("--mode", choices=["auto", "exact", "bound"], default="auto")
    p.set_defaults(func=cmd_dell)

    p = sub.add_parser("Dell", help="global delooping level")
    common(p)
    p.add_argument("--mode", choices=["auto", "exact", "bound"], default="auto")
    p.set_defaults(func=cmd_Dell)

    p = sub.add_parser("findim", help="finitistic dimension (truncated only)")
    common(p)
    p.set_defaults(func=cmd_findim)

    p = sub.add_parser("check", help="theorem-level checks")
    p.add_argument(
        "what",
        choices=[
            "trunc-theorem",
            "gelinas",
            "rad-square-zero",
            "phi-axioms",
            "suite",
            "contraej",
            "batch",
        ],
    )
    p.add_argument("--algebra", help="algebra file (single-algebra checks)")
    p.add_argument("--opposite", action="store_true")
    p.add_argument("--format", choices=["text", "json-like"], default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-oracle", action="store_true")
    p.add_argument("--n", type=int, default=8, help="contraej: chain length")
    p.add_argument("--k", type=int, default=4, help="contraej: shortcut offset")
    p.add_argument("--l", type=int, default=2, help="family truncation level")
    p.add_argument("--dir", help="batch: directory of .alg files")
    p.add_argument("--family", help="batch: family name")
    p.add_argument("--start", type=int, default=1, help="batch family range start")
    p.add_argument("--end", type=int, default=5, help="batch family range end")
    p.add_argument("--seeds", default="1:20", help="batch RANDOM seed range lo:hi")
    p.add_argument("--max-vertices", type=int, default=5)
    p.add_argument("--max-arrows", type=int, default=8)
    p.add_argument("--max-trunc", type=int, default=3)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="oracle verification of every syzygy")
    common(p)
    p.add_argument(
        "--bound", type=int, default=64,
        help="resolution depth cap for the pd cross-check",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fixture", help="emit a generated algebra file")
    p.add_argument("--family", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--vertices", type=int)
    p.add_argument("--arrows", type=int)
    p.add_argument("--out")
    p.add_argument("--format", choices=["text", "json-like"], default="text")
    p.set_defaults(func=cmd_fixture)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except AlgebraError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except UnsupportedOperationError as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return 1
    except DellkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
