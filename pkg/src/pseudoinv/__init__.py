"""Generalized inverses, matrix partial orders and reverse order laws."""

from .inverses import (
    InversePackage,
    PenroseClass,
    UnsolvableEquationError,
    douglas_reduced_solution,
    group_inverse,
    inverse_package,
    is_ep,
    moore_penrose,
    penrose_class,
    pinv,
)
from .linalg import (
    DEFAULT_TOL,
    ComplementarityError,
    LinalgError,
    ShapeError,
    Subspace,
    SubspaceRelation,
    TolerancePolicy,
    oblique_projector,
    predicates,
    rank,
    schatten_norm,
    subspace_relate,
    weighted_schatten,
)
from .orders import OrderRelation, OrderReport, OrderVerdict, dagger_order_report, holds, order_report
from .rol import RolReport, ab_class_membership, rol_check, sufficient_conditions
from .subtractivity import SubtractivityVerdict, invertible_factor_witnesses
from .subtractivity import check as subtractivity_check
from .weighted import (
    HypothesisError,
    MInverseSolution,
    Weight,
    is_mn_weighted_gen_inverse,
    m_inverse,
    m_inverse_membership,
    weighted_lsq_check,
)

__version__ = "0.1.0"
