"""Homological invariants of finite-dimensional monomial path algebras.

Exact syzygy calculus on monomial-basis cyclic modules, projective
dimension with genuine infinity detection, delooping levels (per module,
per algebra, and global), finitistic dimension for truncated algebras,
the Igusa-Todorov function phi, and an independent exact-linear-algebra
oracle over the rationals.
"""

from .algfile import load_algebra, parse_algebra, render_algebra_file
from .cyclic import (
    CyclicModule,
    ModuleExpr,
    Trajectory,
    chi,
    direct_sum,
    format_expr,
    format_key,
    is_projective,
    iterate_syzygy,
    left_complements,
    module_expr,
    parse_module_expr,
    path_module,
    pd_expr,
    pd_key,
    projective_module,
    right_complements,
    simple_module,
    syzygy,
    syzygy_expr,
    trajectories,
    trajectory_endpoint_counts,
    uniserial_module,
)
from .deloop import (
    Dell_algebra,
    DellResult,
    RealizableChain,
    check_trunc_theorem,
    dell_algebra,
    dell_module,
    findim_truncated,
    gelinas_inequality_check,
    rad_square_zero_checks,
    realizable_chain,
)
from .errors import (
    AlgebraError,
    AlgebraSyntaxError,
    DellkitError,
    ModuleExprError,
    NotAdmissibleError,
    UnsupportedOperationError,
)
from .itfunc import (
    build_class_system,
    phi,
    phidim_bounds,
    phidim_truncated,
    syzygy_finite_report,
)
from .oracle import (
    Rep,
    pd_bounded,
    projective_cover,
    rep_of_expr,
    rep_of_key,
    syzygy_rep,
    verify_decomposition,
)
from .quiver import (
    MonomialAlgebra,
    Path,
    Quiver,
    has_sinks,
    has_sources,
    is_selfinjective_truncated,
    is_successor_of_cycle,
)

__version__ = "0.1.0"
