"""Brute-force verification engine on explicit quiver representations.

Everything the combinatorial calculus asserts gets a second, independent
life here: modules become vector spaces over the rationals with one
matrix per arrow, covers and kernels are honest linear algebra, and the
predicted syzygy decompositions are checked by exact rank computations.
No result from :mod:`dellkit.cyclic` is consumed except the predictions
under test.

Conventions: the matrix of an arrow has one row per basis vector of the
target space and one column per basis vector of the source space; a path
acts by applying its arrows in travel order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import cyclic
from .cyclic import CyclicModule
from .linalg import ColumnSpace, mat_vec, nullspace, rank, solve_columns
from .quiver import MonomialAlgebra, Path


@dataclass
class Rep:
    """Representation bound by the ideal: dims per vertex, matrix per arrow."""

    dims: tuple[int, ...]
    maps: dict  # arrow id -> list of rows (target dim x source dim)

    @property
    def total_dimension(self):
        return sum(self.dims)

    @property
    def is_zero(self):
        return self.total_dimension == 0


def zero_rep(algebra: MonomialAlgebra) -> Rep:
    n = algebra.quiver.num_vertices
    return Rep(tuple([0] * n), {i: [] for i in range(len(algebra.quiver.arrows))})


def rep_of_key(algebra: MonomialAlgebra, key: CyclicModule) -> Rep:
    """Explicit representation of a monomial-basis cyclic module.

    Basis vectors are the paths of the key, indexed per target vertex in
    length-lexicographic order; an arrow appends itself when the extended
    path stays in the basis and kills the vector otherwise.
    """
    q = algebra.quiver
    slots: list[list[tuple[int, ...]]] = [[] for _ in range(q.num_vertices)]
    position = {}
    for arrows in key.basis:  # already length-lex sorted
        t = key.vertex if not arrows else q.arrows[arrows[-1]].target
        position[arrows] = (t, len(slots[t]))
        slots[t].append(arrows)
    dims = tuple(len(s) for s in slots)
    maps = {}
    for aid, arrow in enumerate(q.arrows):
        rows = [[0] * dims[arrow.source] for _ in range(dims[arrow.target])]
        for col, arrows in enumerate(slots[arrow.source]):
            ext = arrows + (aid,)
            if ext in position:
                _, row = position[ext]
                rows[row][col] = 1
        maps[aid] = rows
    return Rep(dims, maps)


def rep_direct_sum(algebra: MonomialAlgebra, reps) -> Rep:
    q = algebra.quiver
    reps = list(reps)
    dims = tuple(sum(r.dims[v] for r in reps) for v in range(q.num_vertices))
    maps = {}
    for aid, arrow in enumerate(q.arrows):
        rows = [[0] * dims[arrow.source] for _ in range(dims[arrow.target])]
        roff = 0
        coff = 0
        for r in reps:
            block = r.maps[aid]
            for i in range(r.dims[arrow.target]):
                for j in range(r.dims[arrow.source]):
                    rows[roff + i][coff + j] = block[i][j]
            roff += r.dims[arrow.target]
            coff += r.dims[arrow.source]
        maps[aid] = rows
    return Rep(dims, maps)


def rep_of_expr(algebra: MonomialAlgebra, expr) -> Rep:
    parts = []
    for key, mult in expr.keys:
        parts.extend([rep_of_key(algebra, key)] * mult)
    for v, mult in expr.projectives:
        parts.extend([rep_of_key(algebra, cyclic.projective_module(algebra, v))] * mult)
    if not parts:
        return zero_rep(algebra)
    return rep_direct_sum(algebra, parts)


def apply_path(algebra: MonomialAlgebra, rep: Rep, path: Path, vec):
    """Act by a path on a vector sitting at its source vertex."""
    for aid in path.arrows:
        vec = mat_vec(rep.maps[aid], vec)
    return vec


def is_bound_by_ideal(algebra: MonomialAlgebra, rep: Rep) -> bool:
    """Check that every ideal generator acts as zero."""
    q = algebra.quiver
    if algebra.is_truncated:
        generators = [
            p.arrows + (aid,)
            for p in algebra.nonzero_paths(include_trivial=False)
            if len(p) == algebra.truncation - 1
            for aid in q.out_arrows[p.target]
        ]
    else:
        generators = [r.arrows for r in algebra.relations]
    for arrows in generators:
        src = q.arrows[arrows[0]].source
        for col in range(rep.dims[src]):
            vec = [Fraction(int(i == col)) for i in range(rep.dims[src])]
            for aid in arrows:
                vec = mat_vec(rep.maps[aid], vec)
            if any(vec):
                return False
    return True


def hom_is_valid(algebra: MonomialAlgebra, source: Rep, target: Rep, maps) -> bool:
    """Commuting squares: f_target . T_alpha == T_alpha . f_source."""
    q = algebra.quiver
    for aid, arrow in enumerate(q.arrows):
        for col in range(source.dims[arrow.source]):
            vec = [int(i == col) for i in range(source.dims[arrow.source])]
            left = mat_vec(maps[arrow.target], mat_vec(source.maps[aid], vec))
            right = mat_vec(target.maps[aid], mat_vec(maps[arrow.source], vec))
            if left != right:
                return False
    return True


@dataclass
class Cover:
    """Projective cover: the covering representation, the surjection, and
    labels (vertex, copy, path) for the cover's monomial basis."""

    rep: Rep
    hom: dict  # vertex -> matrix (dim M_v x dim cover_v)
    top_multiplicities: tuple[int, ...]
    labels: tuple  # per vertex: tuple of (gen_vertex, copy_index, path)


def projective_cover(algebra: MonomialAlgebra, rep: Rep) -> Cover:
    """Minimal projective cover, built from a lifted basis of the top.

    The top at each vertex is the cokernel of the incoming arrow images;
    preimages are chosen as the lexicographically first standard basis
    vectors, which makes the construction reproducible.  Surjectivity is
    verified before returning.
    """
    q = algebra.quiver
    generators = []  # (vertex, coordinate vector in rep)
    top_mult = [0] * q.num_vertices
    for v in range(q.num_vertices):
        if rep.dims[v] == 0:
            continue
        radical = ColumnSpace(rep.dims[v])
        for aid in q.in_arrows[v]:
            src = q.arrows[aid].source
            for col in range(rep.dims[src]):
                vec = [row[col] for row in rep.maps[aid]]
                radical.add(vec)
        for j in range(rep.dims[v]):
            probe = [int(i == j) for i in range(rep.dims[v])]
            if radical.add(probe):
                generators.append((v, probe))
                top_mult[v] += 1

    # assemble the cover as one projective per generator copy
    copy_index: dict[int, int] = {}
    slots: list[list[tuple]] = [[] for _ in range(q.num_vertices)]
    position = {}
    gen_labels = []
    for v, probe in generators:
        c = copy_index.get(v, 0)
        copy_index[v] = c + 1
        gen_labels.append((v, c))
        for mu in algebra.nonzero_paths_from(v):
            label = (v, c, mu)
            position[label] = (mu.target, len(slots[mu.target]))
            slots[mu.target].append(label)
    dims = tuple(len(s) for s in slots)
    maps = {}
    for aid, arrow in enumerate(q.arrows):
        rows = [[0] * dims[arrow.source] for _ in range(dims[arrow.target])]
        for col, (v, c, mu) in enumerate(slots[arrow.source]):
            ext = mu.arrows + (aid,)
            if algebra.is_nonzero(v, ext):
                _, row = position[(v, c, Path(v, arrow.target, ext))]
                rows[row][col] = 1
        maps[aid] = rows
    cover_rep = Rep(dims, maps)

    # the surjection: each cover basis path acts on its generator's preimage
    images: dict[tuple, list] = {}
    for (v, probe), (gv, gc) in zip(generators, gen_labels):
        for mu in algebra.nonzero_paths_from(v):
            images[(gv, gc, mu)] = apply_path(algebra, rep, mu, probe)
    hom = {}
    for w in range(q.num_vertices):
        rows = [[Fraction(0)] * dims[w] for _ in range(rep.dims[w])]
        for col, label in enumerate(slots[w]):
            vec = images[label]
            for i, x in enumerate(vec):
                rows[i][col] = Fraction(x)
        hom[w] = rows
    for w in range(q.num_vertices):
        if rank(hom[w]) != rep.dims[w]:
            raise AssertionError("projective cover failed to surject")
    return Cover(cover_rep, hom, tuple(top_mult), tuple(tuple(s) for s in slots))


@dataclass
class Kernel:
    rep: Rep
    inclusion: dict  # vertex -> matrix (dim cover_v x dim kernel_v)


def kernel_of_cover(algebra: MonomialAlgebra, cover: Cover) -> Kernel:
    """Kernel subrepresentation of the cover surjection, with induced maps."""
    q = algebra.quiver
    basis = {}
    for w in range(q.num_vertices):
        basis[w] = nullspace(cover.hom[w], cover.rep.dims[w])
    dims = tuple(len(basis[w]) for w in range(q.num_vertices))
    maps = {}
    for aid, arrow in enumerate(q.arrows):
        v, w = arrow.source, arrow.target
        targets = [mat_vec(cover.rep.maps[aid], k) for k in basis[v]]
        if dims[w] == 0:
            assert all(not any(t) for t in targets), "kernel is not a subrep"
            maps[aid] = []
            continue
        a_rows = [
            [basis[w][j][i] for j in range(dims[w])]
            for i in range(cover.rep.dims[w])
        ]
        sols = solve_columns(a_rows, targets) if targets else []
        assert sols is not None, "kernel is not closed under the arrow action"
        rows = [[Fraction(0)] * dims[v] for _ in range(dims[w])]
        for col, sol in enumerate(sols):
            for i, x in enumerate(sol):
                rows[i][col] = x
        maps[aid] = rows
    inclusion = {
        w: [
            [basis[w][j][i] for j in range(dims[w])]
            for i in range(cover.rep.dims[w])
        ]
        for w in range(q.num_vertices)
    }
    for w in range(q.num_vertices):
        if rank(inclusion[w]) != dims[w]:
            raise AssertionError("kernel inclusion is not injective")
    return Kernel(Rep(dims, maps), inclusion)


def syzygy_rep(algebra: MonomialAlgebra, rep: Rep) -> Rep:
    """Kernel of the projective cover (exact, including multiplicities)."""
    cover = projective_cover(algebra, rep)
    kernel = kernel_of_cover(algebra, cover)
    assert kernel.rep.total_dimension == cover.rep.total_dimension - rep.total_dimension
    return kernel.rep


def pd_bounded(algebra: MonomialAlgebra, rep: Rep, bound: int):
    """Projective dimension by iterated covers; None when above the bound."""
    assert bound >= 0
    current = rep
    for k in range(bound + 1):
        current = syzygy_rep(algebra, current)
        if current.is_zero:
            return k
    return None


@dataclass
class DecompositionReport:
    key: CyclicModule
    passed: bool
    problems: tuple[str, ...]
    kernel_dims: tuple[int, ...]
    predicted_dims: tuple[int, ...]


def verify_decomposition(algebra: MonomialAlgebra, key: CyclicModule) -> DecompositionReport:
    """Check the predicted syzygy of a key against exact linear algebra.

    Three independent facts are established inside the cover: the kernel
    has the predicted dimension vector; every predicted minimal
    complement path is a kernel element generating a subrepresentation of
    the predicted size; and those subrepresentations are jointly
    independent and span the kernel.
    """
    q = algebra.quiver
    problems = []
    rep = rep_of_key(algebra, key)
    cover = projective_cover(algebra, rep)
    expected_top = tuple(
        int(v == key.vertex) for v in range(q.num_vertices)
    )
    if cover.top_multiplicities != expected_top:
        problems.append(
            f"cover is not the vertex projective: top {cover.top_multiplicities}"
        )
    kernel_basis = {
        w: nullspace(cover.hom[w], cover.rep.dims[w]) for w in range(q.num_vertices)
    }
    kernel_dims = tuple(len(kernel_basis[w]) for w in range(q.num_vertices))

    complements = cyclic.minimal_complements(
        algebra, key.vertex, frozenset(key.basis)
    )
    predicted = [cyclic.path_module(algebra, nu) for nu in complements]
    predicted_dims = [0] * q.num_vertices
    for pkey in predicted:
        for v, d in enumerate(cyclic.dimension_vector(algebra, pkey)):
            predicted_dims[v] += d
    predicted_dims = tuple(predicted_dims)
    if kernel_dims != predicted_dims:
        problems.append(
            f"kernel dimension vector {kernel_dims} != predicted {predicted_dims}"
        )

    # locate each complement inside the cover and close under the action
    index_at = {}
    for w in range(q.num_vertices):
        for i, (v, c, mu) in enumerate(cover.labels[w]):
            index_at[(v, c, mu.arrows)] = (w, i)
    spans = {w: [] for w in range(q.num_vertices)}  # per-summand spaces
    for nu, pkey in zip(complements, predicted):
        w0, i0 = index_at[(key.vertex, 0, nu.arrows)]
        start = [int(i == i0) for i in range(cover.rep.dims[w0])]
        if any(mat_vec(cover.hom[w0], start)):
            problems.append(
                f"complement {q.path_name(nu)} is not in the kernel"
            )
            continue
        sub = {w: ColumnSpace(cover.rep.dims[w]) for w in range(q.num_vertices)}
        queue = [(w0, start)]
        sub[w0].add(start)
        while queue:
            w, vec = queue.pop()
            for aid in q.out_arrows[w]:
                img = mat_vec(cover.rep.maps[aid], vec)
                if any(img) and sub[q.arrows[aid].target].add(img):
                    queue.append((q.arrows[aid].target, img))
        sub_dims = tuple(sub[w].rank for w in range(q.num_vertices))
        want = cyclic.dimension_vector(algebra, pkey)
        if sub_dims != want:
            problems.append(
                f"submodule of {q.path_name(nu)} has dims {sub_dims}, "
                f"predicted {want}"
            )
        for w in range(q.num_vertices):
            spans[w].append(sub[w])

    # joint independence and spanning
    for w in range(q.num_vertices):
        total = ColumnSpace(cover.rep.dims[w])
        count = 0
        for sp in spans[w]:
            for row in sp.rows:
                total.add(row)
            count += sp.rank
        if total.rank != count:
            problems.append(f"summand subspaces overlap at vertex {w}")
        if total.rank != kernel_dims[w]:
            problems.append(
                f"summands span {total.rank} of {kernel_dims[w]} kernel "
                f"dimensions at vertex {w}"
            )

    return DecompositionReport(
        key, not problems, tuple(problems), kernel_dims, predicted_dims
    )
