"""Syzygy class groups and the Igusa-Todorov function phi.

The free abelian group on the nonprojective keys reachable from a seed
set carries the endomorphism induced by the syzygy; phi of a module is
the step at which the rank of the iterated image of its summand-class
subgroup stops dropping.  Ranks are exact (fraction arithmetic), and the
stabilization index of the full kernel chain caps the search: once the
kernel of T^k stops growing, no restricted rank can drop again.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import cyclic
from .cyclic import CyclicModule, ModuleExpr
from .errors import UnsupportedOperationError
from .linalg import ColumnSpace
from .quiver import MonomialAlgebra, is_selfinjective_truncated


@dataclass(frozen=True)
class ClassSystem:
    """Ordered basis of nonprojective keys plus the syzygy matrix.

    ``columns[j]`` maps a basis index ``i`` to the multiplicity of
    ``basis[i]`` in the syzygy of ``basis[j]``.
    """

    basis: tuple[CyclicModule, ...]
    index: dict
    columns: tuple[dict, ...]

    @property
    def rank(self):
        return len(self.basis)

    def apply(self, vec):
        out = [0] * len(self.basis)
        for j, x in enumerate(vec):
            if x:
                for i, m in self.columns[j].items():
                    out[i] += m * x
        return out

    def dense_matrix(self):
        n = len(self.basis)
        rows = [[0] * n for _ in range(n)]
        for j, col in enumerate(self.columns):
            for i, m in col.items():
                rows[i][j] = m
        return rows


def build_class_system(algebra: MonomialAlgebra, seeds) -> ClassSystem:
    table = cyclic.omega_class_graph(algebra, seeds)
    basis = tuple(sorted(table, key=CyclicModule.sort_key))
    index = {k: i for i, k in enumerate(basis)}
    columns = []
    for key in basis:
        col = {index[c]: m for c, m in table[key].keys}
        columns.append(col)
    return ClassSystem(basis, index, tuple(columns))


def _span_dimension_profile(system: ClassSystem, start_vectors, max_steps):
    """Dimensions of T^k applied to a span, for k = 0..max_steps."""
    n = system.rank
    dims = []
    vectors = list(start_vectors)
    for _ in range(max_steps + 1):
        space = ColumnSpace(n)
        vectors = [v for v in vectors if space.add(v)]
        vectors = [list(r) for r in space.rows]
        dims.append(space.rank)
        vectors = [system.apply(v) for v in vectors]
    return dims


def _kernel_stabilization_index(system: ClassSystem) -> int:
    """First k with rank T^k == rank T^(k+1); kernels freeze from there."""
    n = system.rank
    if n == 0:
        return 0
    identity = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    prev = None
    vectors = identity
    k = 0
    while True:
        space = ColumnSpace(n)
        vectors = [v for v in vectors if space.add(v)]
        vectors = [list(r) for r in space.rows]
        if prev is not None and space.rank == prev:
            return k - 1
        prev = space.rank
        vectors = [system.apply(v) for v in vectors]
        k += 1
        assert k <= n + 1, "rank chain failed to stabilize"


def _full_system(algebra: MonomialAlgebra) -> ClassSystem:
    cache = algebra.caches.setdefault("itfunc", {})
    if "full_system" not in cache:
        cache["full_system"] = build_class_system(
            algebra, cyclic.path_module_classes(algebra)
        )
    return cache["full_system"]


def phi(algebra: MonomialAlgebra, expr: ModuleExpr) -> int:
    """Rank-stabilization onset of the syzygy action on the classes of
    the distinct nonprojective summands; 0 for zero/projective input."""
    if not expr.keys:
        return 0
    seeds = [k for k, _ in expr.keys]
    system = build_class_system(algebra, seeds)
    n = system.rank
    start = []
    for key in seeds:
        vec = [0] * n
        vec[system.index[key]] = 1
        start.append(vec)
    s = _kernel_stabilization_index(system)
    dims = _span_dimension_profile(system, start, s)
    target = dims[s]
    for k, d in enumerate(dims):
        if d == target:
            return k
    raise AssertionError("unreachable: rank profile never met its tail")


def phidim_truncated(algebra: MonomialAlgebra) -> int:
    """phi-dimension of a truncated algebra.

    Zero exactly in the selfinjective case; otherwise one more than the
    rank stabilization onset of the full path-class system, since every
    first syzygy is a sum of path modules and every nontrivial path
    module occurs as a first-syzygy summand.
    """
    if not algebra.is_truncated:
        raise UnsupportedOperationError(
            "exact phi-dimension is computed for truncated algebras only; "
            "see phidim_bounds for general monomial algebras"
        )
    if is_selfinjective_truncated(algebra):
        return 0
    system = _full_system(algebra)
    return _kernel_stabilization_index(system) + 1


def phidim_bounds(algebra: MonomialAlgebra) -> tuple[int, int]:
    """Certified lower and heuristic upper bound for any monomial algebra.

    The lower bound is phi of the sum of all path-module keys (a genuine
    module); the upper bound adds one syzygy step and is exact in the
    truncated non-selfinjective case.
    """
    system = _full_system(algebra)
    s = _kernel_stabilization_index(system)
    return s, s + 1


@dataclass(frozen=True)
class SyzygyFiniteReport:
    is_syzygy_finite_on_class: bool
    stabilization_level: int
    class_counts: tuple[int, ...]


def syzygy_finite_report(algebra: MonomialAlgebra) -> SyzygyFiniteReport:
    """Track how the reachable class set shrinks under syzygy images.

    On the monomial-basis class the group is always finitely generated;
    the report gives the level where the image set stops moving.
    """
    system = _full_system(algebra)
    current = frozenset(system.basis)
    counts = [len(current)]
    level = 0
    while True:
        nxt = cyclic.syzygy_class_image(algebra, current)
        if nxt == current:
            break
        assert nxt <= current, "syzygy image left the reachability closure"
        current = nxt
        counts.append(len(current))
        level += 1
    return SyzygyFiniteReport(True, level, tuple(counts))
