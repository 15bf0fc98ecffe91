"""One-shot analysis of a matrix pair: orders, subtractivity and the reverse order law."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import subtractivity
from .linalg import DEFAULT_TOL, ShapeError, TolerancePolicy, as_matrix
from .orders import OrderReport, dagger_order_report, order_report
from .rol import RolReport, rol_check
from .serialize import matrix_from_json, matrix_to_json
from .subtractivity import SubtractivityVerdict


@dataclass
class AnalysisReport:
    """Everything measured on ``(A, B)``.

    ``dagger_orders`` holds the six orders between ``A†`` and ``B†``, so a
    monotonicity statement can be read off by comparing it with ``orders``.
    """

    a: np.ndarray
    b: np.ndarray
    orders: OrderReport
    dagger_orders: OrderReport
    subtractivity: SubtractivityVerdict
    rol: RolReport
    tolerance: TolerancePolicy

    def to_json(self) -> dict:
        return {
            "a": matrix_to_json(self.a),
            "b": matrix_to_json(self.b),
            "orders": self.orders.to_json(),
            "dagger_orders": self.dagger_orders.to_json(),
            "subtractivity": self.subtractivity.to_json(),
            "rol": self.rol.to_json(),
            "tolerance": {
                "rank_rel": self.tolerance.rank_rel,
                "eq_rel": self.tolerance.eq_rel,
                "psd_rel": self.tolerance.psd_rel,
            },
        }

    @classmethod
    def from_json(cls, d: dict) -> "AnalysisReport":
        return cls(
            a=matrix_from_json(d["a"], "a"),
            b=matrix_from_json(d["b"], "b"),
            orders=OrderReport.from_json(d["orders"]),
            dagger_orders=OrderReport.from_json(d["dagger_orders"]),
            subtractivity=SubtractivityVerdict.from_json(d["subtractivity"]),
            rol=RolReport.from_json(d["rol"]),
            tolerance=TolerancePolicy(**d["tolerance"]),
        )


def analyze(a, b, tol: TolerancePolicy | None = None) -> AnalysisReport:
    tol = tol or DEFAULT_TOL
    a, b = as_matrix(a), as_matrix(b)
    if a.shape != b.shape or a.shape[0] != a.shape[1]:
        raise ShapeError(f"analysis needs square matrices of equal size, got {a.shape} and {b.shape}")
    return AnalysisReport(
        a=a,
        b=b,
        orders=order_report(a, b, tol),
        dagger_orders=dagger_order_report(a, b, tol),
        subtractivity=subtractivity.check(a, b, tol),
        rol=rol_check(a, b, tol),
        tolerance=tol,
    )
