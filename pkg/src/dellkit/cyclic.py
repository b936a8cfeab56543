"""Syzygy calculus on cyclic modules with monomial basis.

Every module this package computes with is a finite direct sum of cyclic
modules ``C(v, D)``: the quotient of the indecomposable projective at a
vertex ``v`` by the span of the nonzero paths outside a prefix-closed set
``D``.  The class contains the simples (``D`` = trivial path only), the
projectives (``D`` = everything), the path modules ``rho*A`` (``D`` = the
right extensions of ``rho``) and the uniserial modules built on a fixed
path (``D`` = its prefixes) - and it is closed under syzygies:

    Omega(C(v, D)) = direct sum over nu of C(t(nu), D_nu),

where nu runs over the minimal nonzero paths from ``v`` outside ``D`` and
``D_nu`` collects the extensions of ``nu`` staying outside the ideal.
Each summand is the path module of ``nu``.  Distinct minimal complements
are prefix-incomparable, so inside the projective cover the submodules
they generate meet trivially; the rep oracle re-verifies this with exact
linear algebra rather than trusting it.

Two cyclic modules are isomorphic exactly when their keys agree, so
isomorphism testing is equality throughout.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .errors import ModuleExprError, UnsupportedOperationError
from .quiver import MonomialAlgebra, Path, cycle_successor_set


@dataclass(frozen=True)
class CyclicModule:
    """Canonical key ``(v, D)`` of a cyclic module with monomial basis.

    ``basis`` stores the arrow-id tuples of the paths in ``D`` (all start
    at ``vertex``), sorted length-lexicographically, so equal modules have
    equal keys.
    """

    vertex: int
    basis: tuple[tuple[int, ...], ...]
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_hash", hash((self.vertex, self.basis)))

    def __hash__(self):
        return self._hash

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def is_simple(self):
        return self.basis == ((),)

    def sort_key(self):
        return (self.vertex, len(self.basis), self.basis)


def _make_key(vertex: int, arrow_tuples: Iterable[tuple[int, ...]]) -> CyclicModule:
    basis = tuple(sorted(set(arrow_tuples), key=lambda t: (len(t), t)))
    assert basis and basis[0] == (), "monomial basis must contain the trivial path"
    return CyclicModule(vertex, basis)


def simple_module(algebra: MonomialAlgebra, v: int) -> CyclicModule:
    return CyclicModule(v, ((),))


def projective_module(algebra: MonomialAlgebra, v: int) -> CyclicModule:
    return _make_key(v, (p.arrows for p in algebra.nonzero_paths_from(v)))


def path_module(algebra: MonomialAlgebra, rho: Path) -> CyclicModule:
    """Key of ``rho*A``: basis = extensions of ``rho`` outside the ideal."""
    if rho.is_trivial:
        return projective_module(algebra, rho.source)
    cache = algebra.caches.setdefault("path_module", {})
    k = (rho.source, rho.arrows)
    if k not in cache:
        assert algebra.is_nonzero(rho.source, rho.arrows), "path lies in the ideal"
        v = rho.target
        collected = []
        stack = [algebra.quiver.trivial_path(v)]
        while stack:
            mu = stack.pop()
            collected.append(mu.arrows)
            for child in algebra.path_children(mu):
                if algebra.is_nonzero(rho.source, rho.arrows + child.arrows):
                    stack.append(child)
        cache[k] = _make_key(v, collected)
    return cache[k]


def uniserial_module(algebra: MonomialAlgebra, rho: Path) -> CyclicModule:
    """Key of the uniserial module whose radical series follows ``rho``."""
    assert not rho.is_trivial and algebra.is_nonzero(rho.source, rho.arrows)
    prefixes = [rho.arrows[:i] for i in range(len(rho.arrows) + 1)]
    return _make_key(rho.source, prefixes)


def is_projective(algebra: MonomialAlgebra, key: CyclicModule) -> bool:
    return key.dimension == len(algebra.nonzero_paths_from(key.vertex))


def dimension_vector(algebra: MonomialAlgebra, key: CyclicModule) -> tuple[int, ...]:
    dims = [0] * algebra.quiver.num_vertices
    q = algebra.quiver
    for arrows in key.basis:
        t = key.vertex if not arrows else q.arrows[arrows[-1]].target
        dims[t] += 1
    return tuple(dims)


def format_key(algebra: MonomialAlgebra, key: CyclicModule) -> str:
    q = algebra.quiver
    vname = q.vertex_names[key.vertex]
    if key.is_simple:
        return f"S({vname})"
    if is_projective(algebra, key):
        return f"P({vname})"
    chain = _uniserial_chain(key)
    if chain is not None:
        return "U(" + ".".join(q.arrows[a].name for a in chain) + ")"
    paths = ",".join(
        "e" if not arrows else ".".join(q.arrows[a].name for a in arrows)
        for arrows in key.basis
    )
    return f"C({vname}|{paths})"


def _uniserial_chain(key: CyclicModule) -> Optional[tuple[int, ...]]:
    longest = key.basis[-1]
    if key.dimension != len(longest) + 1:
        return None
    if all(longest[: len(t)] == t for t in key.basis):
        return longest
    return None


# -- direct sums -------------------------------------------------------------


@dataclass(frozen=True)
class ModuleExpr:
    """Formal direct sum: nonprojective keys plus projective vertex summands."""

    keys: tuple[tuple[CyclicModule, int], ...]
    projectives: tuple[tuple[int, int], ...] = ()

    @property
    def is_zero(self):
        return not self.keys and not self.projectives

    @property
    def class_set(self) -> frozenset[CyclicModule]:
        return frozenset(k for k, _ in self.keys)

    def key_counter(self) -> Counter:
        return Counter(dict(self.keys))

    def total_multiplicity(self):
        return sum(m for _, m in self.keys) + sum(m for _, m in self.projectives)


def module_expr(
    algebra: MonomialAlgebra,
    summands: Iterable = (),
    projective_vertices: Iterable[int] = (),
) -> ModuleExpr:
    """Normalize summands into a canonical expression.

    ``summands`` may mix keys and ``(key, multiplicity)`` pairs; projective
    keys are folded into the projective multiset.
    """
    keys: Counter = Counter()
    projs: Counter = Counter()
    for item in summands:
        if isinstance(item, CyclicModule):
            key, mult = item, 1
        else:
            key, mult = item
        if mult < 0:
            raise ValueError("negative multiplicity")
        if mult == 0:
            continue
        if is_projective(algebra, key):
            projs[key.vertex] += mult
        else:
            keys[key] += mult
    for v in projective_vertices:
        projs[v] += 1
    return ModuleExpr(
        tuple(sorted(keys.items(), key=lambda kv: kv[0].sort_key())),
        tuple(sorted(projs.items())),
    )


def direct_sum(*exprs: ModuleExpr) -> ModuleExpr:
    keys: Counter = Counter()
    projs: Counter = Counter()
    for e in exprs:
        for k, m in e.keys:
            keys[k] += m
        for v, m in e.projectives:
            projs[v] += m
    return ModuleExpr(
        tuple(sorted(keys.items(), key=lambda kv: kv[0].sort_key())),
        tuple(sorted(projs.items())),
    )


def expr_power(expr: ModuleExpr, k: int) -> ModuleExpr:
    assert k >= 0
    return ModuleExpr(
        tuple((key, m * k) for key, m in expr.keys if k),
        tuple((v, m * k) for v, m in expr.projectives if k),
    )


def format_expr(algebra: MonomialAlgebra, expr: ModuleExpr) -> str:
    if expr.is_zero:
        return "0"
    parts = []
    for key, m in expr.keys:
        s = format_key(algebra, key)
        parts.append(s if m == 1 else f"{m}*{s}")
    for v, m in expr.projectives:
        s = f"P({algebra.quiver.vertex_names[v]})"
        parts.append(s if m == 1 else f"{m}*{s}")
    return " + ".join(parts)


# -- complements and syzygies ---------------------------------------------------


def minimal_complements(
    algebra: MonomialAlgebra, vertex: int, basis: frozenset[tuple[int, ...]]
) -> list[Path]:
    """Minimal nonzero paths from ``vertex`` outside the prefix-closed set."""
    out = []
    stack = [algebra.quiver.trivial_path(vertex)]
    while stack:
        p = stack.pop()
        for child in algebra.path_children(p):
            if child.arrows in basis:
                stack.append(child)
            else:
                out.append(child)
    out.sort(key=Path.sort_key)
    return out


def right_complements(algebra: MonomialAlgebra, rho: Path) -> list[Path]:
    """Minimal nonzero paths ``mu`` from t(rho) with ``rho.mu`` in the ideal.

    These generate the kernel of the cover of ``rho*A``; over a truncated
    algebra with level ``l`` they are exactly the paths of length
    ``l - len(rho)`` out of the target.
    """
    if rho.is_trivial:
        raise ValueError("complement paths are defined for nontrivial paths only")
    cache = algebra.caches.setdefault("right_complements", {})
    k = (rho.source, rho.arrows)
    if k not in cache:
        key = path_module(algebra, rho)
        cache[k] = minimal_complements(algebra, key.vertex, frozenset(key.basis))
    return cache[k]


def left_complements(algebra: MonomialAlgebra, rho: Path) -> list[Path]:
    """Mirror of :func:`right_complements` through the opposite algebra."""
    if rho.is_trivial:
        raise ValueError("complement paths are defined for nontrivial paths only")
    cache = algebra.caches.setdefault("left_complements", {})
    k = (rho.source, rho.arrows)
    if k not in cache:
        op = algebra.opposite()
        mirrored = right_complements(op, algebra.reverse_path(rho))
        cache[k] = sorted((op.reverse_path(m) for m in mirrored), key=Path.sort_key)
    return cache[k]


def _left_complement_set(algebra: MonomialAlgebra, mu: Path) -> frozenset:
    cache = algebra.caches.setdefault("left_complement_sets", {})
    k = (mu.source, mu.arrows)
    if k not in cache:
        cache[k] = frozenset(
            (p.source, p.arrows) for p in left_complements(algebra, mu)
        )
    return cache[k]


def syzygy(algebra: MonomialAlgebra, key: CyclicModule) -> ModuleExpr:
    """Kernel of the projective cover, as a sum of path modules."""
    cache = algebra.caches.setdefault("syzygy", {})
    if key not in cache:
        comps = minimal_complements(algebra, key.vertex, frozenset(key.basis))
        cache[key] = module_expr(algebra, (path_module(algebra, nu) for nu in comps))
    return cache[key]


def syzygy_expr(algebra: MonomialAlgebra, expr: ModuleExpr) -> ModuleExpr:
    parts = [expr_power(syzygy(algebra, key), m) for key, m in expr.keys]
    return direct_sum(*parts) if parts else ModuleExpr(())


def iterate_syzygy(algebra: MonomialAlgebra, expr: ModuleExpr, n: int) -> ModuleExpr:
    assert n >= 0
    for _ in range(n):
        expr = syzygy_expr(algebra, expr)
    return expr


def syzygy_class_image(
    algebra: MonomialAlgebra, classes: frozenset[CyclicModule]
) -> frozenset[CyclicModule]:
    out: set[CyclicModule] = set()
    for key in classes:
        out.update(syzygy(algebra, key).class_set)
    return frozenset(out)


def omega_class_graph(
    algebra: MonomialAlgebra, seeds: Optional[Iterable[CyclicModule]] = None
) -> dict[CyclicModule, ModuleExpr]:
    """Syzygy table on the nonprojective keys reachable from the seeds.

    Defaults to the standard universe (path modules, simples, uniserials);
    finite because after one step everything is a path module.
    """
    if seeds is None:
        seeds = standard_universe(algebra)
    table: dict[CyclicModule, ModuleExpr] = {}
    queue = sorted(
        (k for k in seeds if not is_projective(algebra, k)),
        key=CyclicModule.sort_key,
    )
    while queue:
        key = queue.pop()
        if key in table:
            continue
        expr = syzygy(algebra, key)
        table[key] = expr
        for child in expr.class_set:
            if child not in table:
                queue.append(child)
    return table


def standard_universe(algebra: MonomialAlgebra) -> list[CyclicModule]:
    """Simples, projectives, path modules and uniserials, deduplicated."""
    keys = set()
    for v in range(algebra.quiver.num_vertices):
        keys.add(simple_module(algebra, v))
        keys.add(projective_module(algebra, v))
    for p in algebra.nonzero_paths(include_trivial=False):
        keys.add(path_module(algebra, p))
        keys.add(uniserial_module(algebra, p))
    return sorted(keys, key=CyclicModule.sort_key)


def path_module_classes(algebra: MonomialAlgebra) -> frozenset[CyclicModule]:
    """Classes of nonprojective ``rho*A`` over all nontrivial nonzero paths."""
    cache = algebra.caches.setdefault("misc", {})
    if "path_classes" not in cache:
        cache["path_classes"] = frozenset(
            key
            for key in (
                path_module(algebra, p)
                for p in algebra.nonzero_paths(include_trivial=False)
            )
            if not is_projective(algebra, key)
        )
    return cache["path_classes"]


# -- projective dimension ----------------------------------------------------------


def pd_key(algebra: MonomialAlgebra, key: CyclicModule):
    """Projective dimension of one key: exact, with genuine infinity.

    A key has infinite pd exactly when it reaches a cycle of the syzygy
    class graph; otherwise pd follows the longest-path recursion.
    """
    if is_projective(algebra, key):
        return 0
    cache = algebra.caches.setdefault("pd", {})
    if key in cache:
        return cache[key]

    # reachable subgraph (summand classes are nonprojective by construction)
    graph: dict[CyclicModule, ModuleExpr] = {}
    stack = [key]
    while stack:
        k = stack.pop()
        if k in graph:
            continue
        graph[k] = syzygy(algebra, k)
        assert not graph[k].is_zero, "nonprojective key with zero syzygy"
        stack.extend(c for c in graph[k].class_set if c not in graph)

    order = _topological_order(graph)
    if order is None:
        # anything that reaches a strongly connected part resolves forever
        condemned = _keys_reaching_cycles(graph)
        for k in condemned:
            cache[k] = float("inf")
        order = _topological_order(
            {k: v for k, v in graph.items() if k not in condemned}
        )
        assert order is not None
    for k in order:
        if k in cache:
            continue
        # children first by topological order; projective summands give the 0
        cache[k] = 1 + max((cache[c] for c in graph[k].class_set), default=0)
    return cache[key]


def _topological_order(graph) -> Optional[list[CyclicModule]]:
    """Children-first order, or None when the graph has a directed cycle."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = {k: WHITE for k in graph}
    order = []
    for root in graph:
        if color[root] != WHITE:
            continue
        stack = [(root, iter(graph[root].class_set))]
        color[root] = GRAY
        while stack:
            node, it = stack[-1]
            for child in it:
                if child not in graph:
                    continue  # already resolved elsewhere (pd cache)
                if color[child] == GRAY:
                    return None
                if color[child] == WHITE:
                    color[child] = GRAY
                    stack.append((child, iter(graph[child].class_set)))
                    break
            else:
                color[node] = BLACK
                order.append(node)
                stack.pop()
    return order


def _keys_reaching_cycles(graph) -> set[CyclicModule]:
    # Tarjan SCC on the class graph, then backward closure of the cyclic part
    index: dict[CyclicModule, int] = {}
    low: dict[CyclicModule, int] = {}
    on_stack: set[CyclicModule] = set()
    stack: list[CyclicModule] = []
    counter = [0]
    cyclic: set[CyclicModule] = set()

    for root in graph:
        if root in index:
            continue
        work = [(root, iter(graph[root].class_set))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for child in it:
                if child not in graph:
                    continue
                if child not in index:
                    index[child] = low[child] = counter[0]
                    counter[0] += 1
                    stack.append(child)
                    on_stack.add(child)
                    work.append((child, iter(graph[child].class_set)))
                    advanced = True
                    break
                if child in on_stack:
                    low[node] = min(low[node], index[child])
            if advanced:
                continue
            work.pop()
            if work:
                low[work[-1][0]] = min(low[work[-1][0]], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == node:
                        break
                if len(comp) > 1 or node in graph[node].class_set:
                    cyclic.update(comp)

    # backward closure: anything with a path into the cyclic part
    reverse: dict[CyclicModule, list[CyclicModule]] = {k: [] for k in graph}
    for k, expr in graph.items():
        for child in expr.class_set:
            if child in reverse:
                reverse[child].append(k)
    pending = list(cyclic)
    while pending:
        node = pending.pop()
        for parent in reverse[node]:
            if parent not in cyclic:
                cyclic.add(parent)
                pending.append(parent)
    return cyclic


def pd_expr(algebra: MonomialAlgebra, expr: ModuleExpr):
    """pd of a direct sum = max over summands (projectives contribute 0)."""
    values = [pd_key(algebra, key) for key, _ in expr.keys]
    return max(values, default=0)


# -- trajectories ----------------------------------------------------------------


@dataclass(frozen=True)
class Trajectory:
    """Paths chained by the complement relation on both sides."""

    paths: tuple[Path, ...]

    @property
    def length(self):
        return len(self.paths) - 1

    @property
    def endpoint(self) -> Path:
        return self.paths[-1]


def trajectories(
    algebra: MonomialAlgebra, rho: Path, k: int, direction: str = "forward"
) -> list[Trajectory]:
    """All complement chains of length ``k`` starting (or ending) at ``rho``."""
    assert k >= 0
    if direction == "backward":
        op = algebra.opposite()
        mirrored = trajectories(op, algebra.reverse_path(rho), k, "forward")
        return [
            Trajectory(tuple(op.reverse_path(p) for p in reversed(t.paths)))
            for t in mirrored
        ]
    if direction != "forward":
        raise ValueError("direction must be 'forward' or 'backward'")
    chains = [(rho,)]
    for _ in range(k):
        nxt = []
        for chain in chains:
            last = chain[-1]
            lk = (last.source, last.arrows)
            for mu in right_complements(algebra, last):
                if lk in _left_complement_set(algebra, mu):
                    nxt.append(chain + (mu,))
        chains = nxt
    return [Trajectory(c) for c in chains]


def trajectory_endpoint_profile(
    algebra: MonomialAlgebra, rho: Path, max_k: int
) -> list[Counter]:
    """Endpoint multisets of the chains from ``rho``, for every length
    0..max_k at once.

    Dynamic programming on the final path, so exponentially many chains
    stay polynomial to count.
    """
    level: Counter = Counter({(rho.source, rho.arrows): 1})
    paths = {(rho.source, rho.arrows): rho}
    profile = []
    for _ in range(max_k + 1):
        snapshot: Counter = Counter()
        for pk, count in level.items():
            snapshot[paths[pk]] += count
        profile.append(snapshot)
        nxt: Counter = Counter()
        new_paths = {}
        for pk, count in level.items():
            last = paths[pk]
            for mu in right_complements(algebra, last):
                mk = (mu.source, mu.arrows)
                if pk in _left_complement_set(algebra, mu):
                    nxt[mk] += count
                    new_paths[mk] = mu
        level, paths = nxt, new_paths
    return profile


def trajectory_endpoint_counts(
    algebra: MonomialAlgebra, rho: Path, k: int
) -> Counter:
    """Multiset of endpoints of the length-``k`` chains from ``rho``."""
    return trajectory_endpoint_profile(algebra, rho, k)[k]


# -- the chi invariant --------------------------------------------------------------


def chi(algebra: MonomialAlgebra, expr: ModuleExpr) -> int:
    """Least k such that the k-th syzygy is made of path modules whose
    targets come after a cycle (projective summands aside).

    Defined for truncated algebras only, where it is always finite and
    bounds the delooping level from above.
    """
    if not algebra.is_truncated:
        raise UnsupportedOperationError(
            "chi is defined for truncated algebras only"
        )
    pm = path_module_classes(algebra)
    succ = cycle_successor_set(algebra)
    classes = expr.class_set
    seen = set()
    k = 0
    while True:
        if all(key in pm and key.vertex in succ for key in classes):
            return k
        if classes in seen:
            raise AssertionError("chi failed to stabilize on a truncated algebra")
        seen.add(classes)
        classes = syzygy_class_image(algebra, classes)
        k += 1


# -- module expression grammar -------------------------------------------------------


def parse_module_expr(algebra: MonomialAlgebra, text: str) -> ModuleExpr:
    """Parse ``3*S(v) + PM(a.b) + U(g) + P(w)`` into an expression."""
    summands = []
    for raw in text.split("+"):
        term = raw.strip()
        if not term:
            raise ModuleExprError(f"empty summand in {text!r}")
        mult = 1
        if "*" in term:
            head, term = term.split("*", 1)
            try:
                mult = int(head.strip())
            except ValueError:
                raise ModuleExprError(f"bad multiplicity {head.strip()!r}")
            if mult < 1:
                raise ModuleExprError(f"multiplicity must be >= 1, got {mult}")
            term = term.strip()
        if not (term.endswith(")") and "(" in term):
            raise ModuleExprError(f"bad summand {term!r}")
        kind, arg = term[:-1].split("(", 1)
        kind = kind.strip()
        arg = arg.strip()
        if kind in ("S", "P"):
            if arg not in algebra.quiver.vertex_index:
                raise ModuleExprError(f"unknown vertex {arg!r}")
            v = algebra.quiver.vertex_index[arg]
            key = simple_module(algebra, v) if kind == "S" else projective_module(algebra, v)
        elif kind in ("PM", "U"):
            try:
                p = algebra.quiver.path_by_names([s.strip() for s in arg.split(".")])
            except Exception as exc:
                raise ModuleExprError(f"bad path {arg!r}: {exc}")
            if not algebra.is_nonzero(p.source, p.arrows):
                raise ModuleExprError(f"path {arg!r} lies in the ideal")
            key = path_module(algebra, p) if kind == "PM" else uniserial_module(algebra, p)
        else:
            raise ModuleExprError(f"unknown summand kind {kind!r}")
        summands.append((key, mult))
    return module_expr(algebra, summands)
