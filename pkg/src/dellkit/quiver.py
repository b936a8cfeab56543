"""Quivers, paths, and finite-dimensional monomial path algebras.

A quiver is a finite directed multigraph; loops and parallel arrows are
allowed.  Paths compose left to right: in the composite ``a.b`` the target
of ``a`` equals the source of ``b``.  A monomial algebra is the path
algebra modulo an admissible ideal generated by paths of length >= 2,
given either by an explicit list of generators or as the truncation ideal
(all paths of a fixed length ``l``).  Admissibility means only finitely
many paths survive outside the ideal; the whole calculus of this package
lives on that finite set, so the ground field never appears.

Vertices and arrows are named strings; internally everything is dense
integer ids.  All structures are immutable after construction and safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Optional, Sequence

from .errors import AlgebraError, NotAdmissibleError


class Arrow(NamedTuple):
    name: str
    source: int
    target: int


@dataclass(frozen=True)
class Path:
    """A (possibly trivial) composable arrow sequence.

    ``arrows`` holds arrow ids in travel order; ``source``/``target`` are
    vertex ids.  Trivial paths have no arrows and source == target.
    """

    source: int
    target: int
    arrows: tuple[int, ...]

    def __len__(self):
        return len(self.arrows)

    @property
    def is_trivial(self):
        return not self.arrows

    def sort_key(self):
        # length-lexicographic; used for every canonical ordering
        return (len(self.arrows), self.arrows, self.source)


class Quiver:
    """Finite quiver with named vertices and arrows."""

    def __init__(self, vertices: Sequence[str], arrows: Sequence[tuple[str, str, str]]):
        if len(set(vertices)) != len(vertices):
            raise AlgebraError("duplicate vertex names")
        self.vertex_names = tuple(vertices)
        self.vertex_index = {name: i for i, name in enumerate(self.vertex_names)}
        arrow_list = []
        for name, src, tgt in arrows:
            if src not in self.vertex_index:
                raise AlgebraError(f"arrow {name!r}: unknown vertex {src!r}")
            if tgt not in self.vertex_index:
                raise AlgebraError(f"arrow {name!r}: unknown vertex {tgt!r}")
            arrow_list.append(Arrow(name, self.vertex_index[src], self.vertex_index[tgt]))
        names = [a.name for a in arrow_list]
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate arrow names")
        self.arrows = tuple(arrow_list)
        self.arrow_index = {a.name: i for i, a in enumerate(self.arrows)}
        out_: list[list[int]] = [[] for _ in self.vertex_names]
        in_: list[list[int]] = [[] for _ in self.vertex_names]
        for i, a in enumerate(self.arrows):
            out_[a.source].append(i)
            in_[a.target].append(i)
        self.out_arrows = tuple(tuple(v) for v in out_)
        self.in_arrows = tuple(tuple(v) for v in in_)

    @property
    def num_vertices(self):
        return len(self.vertex_names)

    # -- path construction -------------------------------------------------

    def trivial_path(self, v: int) -> Path:
        return Path(v, v, ())

    def path(self, arrow_ids: Sequence[int]) -> Path:
        """Build a path from arrow ids, checking left-to-right composability."""
        if not arrow_ids:
            raise AlgebraError("a path of arrows must contain at least one arrow")
        prev = None
        for i in arrow_ids:
            a = self.arrows[i]
            if prev is not None and prev != a.source:
                raise AlgebraError(
                    f"arrows {self.arrows[arrow_ids[0]].name}..{a.name} do not compose"
                )
            prev = a.target
        return Path(self.arrows[arrow_ids[0]].source, prev, tuple(arrow_ids))

    def path_by_names(self, names: Sequence[str]) -> Path:
        ids = []
        for n in names:
            if n not in self.arrow_index:
                raise AlgebraError(f"unknown arrow {n!r}")
            ids.append(self.arrow_index[n])
        return self.path(ids)

    def extend(self, p: Path, arrow_id: int) -> Path:
        a = self.arrows[arrow_id]
        assert a.source == p.target
        return Path(p.source, a.target, p.arrows + (arrow_id,))

    def compose(self, p: Path, q: Path) -> Path:
        if p.target != q.source:
            raise AlgebraError("paths do not compose: target/source mismatch")
        return Path(p.source, q.target, p.arrows + q.arrows)

    def path_name(self, p: Path) -> str:
        if p.is_trivial:
            return f"e({self.vertex_names[p.source]})"
        return ".".join(self.arrows[i].name for i in p.arrows)

    # -- structural predicates ---------------------------------------------

    def sources(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.num_vertices) if not self.in_arrows[v])

    def sinks(self) -> tuple[int, ...]:
        return tuple(v for v in range(self.num_vertices) if not self.out_arrows[v])

    def cycle_vertices(self) -> frozenset[int]:
        """Vertices lying on some directed cycle (Tarjan, iterative)."""
        n = self.num_vertices
        index = [None] * n
        low = [0] * n
        on_stack = [False] * n
        stack: list[int] = []
        counter = 0
        result = set()
        for root in range(n):
            if index[root] is not None:
                continue
            work = [(root, iter(self.out_arrows[root]))]
            index[root] = low[root] = counter
            counter += 1
            stack.append(root)
            on_stack[root] = True
            while work:
                v, it = work[-1]
                advanced = False
                for aid in it:
                    w = self.arrows[aid].target
                    if index[w] is None:
                        index[w] = low[w] = counter
                        counter += 1
                        stack.append(w)
                        on_stack[w] = True
                        work.append((w, iter(self.out_arrows[w])))
                        advanced = True
                        break
                    if on_stack[w]:
                        low[v] = min(low[v], index[w])
                if advanced:
                    continue
                work.pop()
                if work:
                    pv = work[-1][0]
                    low[pv] = min(low[pv], low[v])
                if low[v] == index[v]:
                    comp = []
                    while True:
                        w = stack.pop()
                        on_stack[w] = False
                        comp.append(w)
                        if w == v:
                            break
                    if len(comp) > 1:
                        result.update(comp)
                    else:
                        w = comp[0]
                        if any(self.arrows[a].target == w for a in self.out_arrows[w]):
                            result.add(w)  # self-loop
        return frozenset(result)

    def cycle_successors(self) -> frozenset[int]:
        """Vertices reachable (by a possibly trivial path) from a cycle."""
        seen = set(self.cycle_vertices())
        queue = list(seen)
        while queue:
            v = queue.pop()
            for aid in self.out_arrows[v]:
                w = self.arrows[aid].target
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return frozenset(seen)

    def undirected_components(self) -> tuple[frozenset[int], ...]:
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a in self.arrows:
            ra, rb = find(a.source), find(a.target)
            if ra != rb:
                parent[ra] = rb
        comps: dict[int, set[int]] = {}
        for v in range(self.num_vertices):
            comps.setdefault(find(v), set()).add(v)
        return tuple(frozenset(c) for c in comps.values())

    def reversed_quiver(self) -> "Quiver":
        return Quiver(
            self.vertex_names,
            [
                (a.name, self.vertex_names[a.target], self.vertex_names[a.source])
                for a in self.arrows
            ],
        )


def _contains_subpath(arrows: tuple[int, ...], sub: tuple[int, ...]) -> bool:
    k = len(sub)
    if k > len(arrows):
        return False
    return any(arrows[i : i + k] == sub for i in range(len(arrows) - k + 1))


class MonomialAlgebra:
    """A path algebra bound by an admissible monomial ideal.

    Construction computes the finite set of nonzero paths (those outside
    the ideal) once; every later operation is a lookup against it.  For
    explicit generators, admissibility is decided first on the suffix
    automaton of the avoidance language: the nonzero paths are infinite in
    number exactly when that automaton has a reachable cycle.
    """

    def __init__(
        self,
        quiver: Quiver,
        truncation: Optional[int] = None,
        relations: Iterable[Path] = (),
        name: str = "A",
    ):
        relations = tuple(relations)
        if truncation is not None and relations:
            raise AlgebraError("give either a truncation level or relations, not both")
        if truncation is not None and truncation < 2:
            raise AlgebraError("truncation level must be an integer >= 2")
        self.quiver = quiver
        self.name = name
        self.truncation = truncation
        for r in relations:
            if len(r) < 2:
                raise AlgebraError(
                    f"relation {quiver.path_name(r)} has length {len(r)} < 2"
                )
        self.relations = _reduce_generators(relations)
        self._opposite: Optional[MonomialAlgebra] = None
        # per-operation memo tables, filled lazily by the calculus modules
        self.caches: dict[str, dict] = {}
        if truncation is not None:
            per_vertex = _truncated_paths(quiver, truncation)
        else:
            per_vertex = _relation_paths(quiver, self.relations)
        self._nonzero_from = tuple(
            tuple(sorted(per_vertex[v], key=Path.sort_key))
            for v in range(quiver.num_vertices)
        )
        self._nonzero_set = frozenset(
            (p.source, p.arrows) for paths in self._nonzero_from for p in paths
        )
        # prefix tree: children of each nonzero path under one-arrow extension
        tree: list[dict[tuple[int, ...], list[Path]]] = [
            {} for _ in range(quiver.num_vertices)
        ]
        for v in range(quiver.num_vertices):
            for p in self._nonzero_from[v]:
                tree[v].setdefault(p.arrows, [])
                if p.arrows:
                    tree[v][p.arrows[:-1]].append(p)
        self._tree_from = tuple(tree)

    # -- basic queries -------------------------------------------------------

    @property
    def is_truncated(self) -> bool:
        return self.truncation is not None

    def is_nonzero(self, source: int, arrows: tuple[int, ...]) -> bool:
        return (source, arrows) in self._nonzero_set

    def nonzero_paths_from(self, v: int) -> tuple[Path, ...]:
        """All paths outside the ideal starting at ``v`` (prefix-closed)."""
        return self._nonzero_from[v]

    def nonzero_paths(self, include_trivial: bool = True):
        for v in range(self.quiver.num_vertices):
            for p in self._nonzero_from[v]:
                if include_trivial or p.arrows:
                    yield p

    def num_nonzero_paths(self) -> int:
        return len(self._nonzero_set)

    def path_children(self, p: Path) -> list[Path]:
        return self._tree_from[p.source].get(p.arrows, [])

    # -- the opposite algebra --------------------------------------------------

    def reverse_path(self, p: Path) -> Path:
        """The same path read backwards, as a path of the opposite algebra."""
        return Path(p.target, p.source, tuple(reversed(p.arrows)))

    def opposite(self) -> "MonomialAlgebra":
        """Arrow-reversed algebra; an involution up to object identity."""
        if self._opposite is None:
            op = MonomialAlgebra(
                self.quiver.reversed_quiver(),
                truncation=self.truncation,
                relations=[self.reverse_path(r) for r in self.relations],
                name=self.name + "_op",
            )
            op._opposite = self
            self._opposite = op
        return self._opposite

    def __eq__(self, other):
        if not isinstance(other, MonomialAlgebra):
            return NotImplemented
        return (
            self.quiver.vertex_names == other.quiver.vertex_names
            and self.quiver.arrows == other.quiver.arrows
            and self.truncation == other.truncation
            and set(self.relations) == set(other.relations)
        )

    __hash__ = None  # mutable caches; compare structurally, never hash

    def __repr__(self):
        kind = (
            f"truncated l={self.truncation}"
            if self.is_truncated
            else f"{len(self.relations)} relations"
        )
        return (
            f"MonomialAlgebra({self.name}: {self.quiver.num_vertices} vertices, "
            f"{len(self.quiver.arrows)} arrows, {kind})"
        )


# -- predicates in operation form ----------------------------------------------


def has_sources(algebra: MonomialAlgebra) -> bool:
    return bool(algebra.quiver.sources())


def has_sinks(algebra: MonomialAlgebra) -> bool:
    return bool(algebra.quiver.sinks())


def is_successor_of_cycle(algebra: MonomialAlgebra, v: int) -> bool:
    """True when some vertex on a directed cycle has a path to ``v``."""
    return v in cycle_successor_set(algebra)


def cycle_successor_set(algebra: MonomialAlgebra) -> frozenset[int]:
    cache = algebra.caches.setdefault("quiver", {})
    if "cycle_successors" not in cache:
        cache["cycle_successors"] = algebra.quiver.cycle_successors()
    return cache["cycle_successors"]


def is_selfinjective_truncated(algebra: MonomialAlgebra) -> bool:
    """Selfinjectivity test for truncated algebras.

    A truncated algebra is selfinjective exactly when every connected
    component of its quiver is a single oriented cycle (isolated vertices
    count as semisimple components).  Equivalently: every vertex has
    in-degree == out-degree == 1, or no arrows at all.
    """
    q = algebra.quiver
    for v in range(q.num_vertices):
        i, o = len(q.in_arrows[v]), len(q.out_arrows[v])
        if (i, o) not in ((0, 0), (1, 1)):
            return False
    return True


# -- nonzero path enumeration ----------------------------------------------------


def _truncated_paths(quiver: Quiver, level: int) -> list[list[Path]]:
    per_vertex: list[list[Path]] = [[] for _ in range(quiver.num_vertices)]
    for v in range(quiver.num_vertices):
        stack = [quiver.trivial_path(v)]
        while stack:
            p = stack.pop()
            per_vertex[v].append(p)
            if len(p) + 1 < level:
                for aid in quiver.out_arrows[p.target]:
                    stack.append(quiver.extend(p, aid))
    return per_vertex


def _reduce_generators(relations: tuple[Path, ...]) -> tuple[Path, ...]:
    # drop duplicates and any generator containing another as a subpath
    uniq = sorted(set(relations), key=Path.sort_key)
    kept: list[Path] = []
    for r in uniq:
        if not any(_contains_subpath(r.arrows, s.arrows) for s in kept if s != r):
            kept.append(r)
    return tuple(kept)


def _relation_paths(quiver: Quiver, gens: tuple[Path, ...]) -> list[list[Path]]:
    """Enumerate paths avoiding every generator as a subpath.

    Raises :class:`NotAdmissibleError` when the avoidance language is
    infinite, detected as a reachable cycle in the suffix automaton whose
    states are the last ``max(len(g)) - 1`` arrows of a live path.
    """
    gen_set = {g.arrows for g in gens}
    gen_lengths = sorted({len(t) for t in gen_set})
    max_len = max(gen_lengths, default=0)
    window = max(max_len - 1, 0)

    def killed(arrows: tuple[int, ...]) -> bool:
        # does the path acquire a generator as a suffix on its last arrow?
        n = len(arrows)
        return any(L <= n and arrows[n - L :] in gen_set for L in gen_lengths)

    # cycle detection on suffix states (vertex, last-`window` arrows)
    colors: dict[tuple[int, tuple[int, ...]], int] = {}
    GRAY, BLACK = 1, 2

    def successors(state):
        v, suffix = state
        for aid in quiver.out_arrows[v]:
            ext = suffix + (aid,)
            if gen_set and killed(ext):
                continue
            yield (quiver.arrows[aid].target, ext[-window:] if window else ())

    for v0 in range(quiver.num_vertices):
        start = (v0, ())
        if colors.get(start) == BLACK:
            continue
        stack = [(start, successors(start))]
        colors[start] = GRAY
        while stack:
            state, it = stack[-1]
            for nxt in it:
                c = colors.get(nxt)
                if c == GRAY:
                    raise NotAdmissibleError(
                        "ideal is not admissible: infinitely many nonzero paths "
                        f"(growing cycle through vertex {quiver.vertex_names[nxt[0]]!r})"
                    )
                if c is None:
                    colors[nxt] = GRAY
                    stack.append((nxt, successors(nxt)))
                    break
            else:
                colors[state] = BLACK
                stack.pop()

    per_vertex: list[list[Path]] = [[] for _ in range(quiver.num_vertices)]
    for v in range(quiver.num_vertices):
        stack = [quiver.trivial_path(v)]
        while stack:
            p = stack.pop()
            per_vertex[v].append(p)
            for aid in quiver.out_arrows[p.target]:
                ext = p.arrows + (aid,)
                if not killed(ext):
                    stack.append(quiver.extend(p, aid))
    return per_vertex
