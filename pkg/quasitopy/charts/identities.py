"""
Numerical verification of the chart identities of a blowdown.

Each identity is evaluated with both sides computed independently; the residual is
``|lhs - rhs| / max(1, |lhs|)``.
"""
from collections import OrderedDict
from dataclasses import dataclass
from fractions import Fraction
import logging
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Optional,
    Tuple,
)

import numpy as np
import pandas as pd

from quasitopy.charts.charts import (
    Chart,
    LocalModelParams,
    OrbitPoint,
    blowdown_orbit_map,
    chart_eval,
    delta,
)
from quasitopy.charts.sampling import (
    DEFAULT_TOLERANCE,
    sample_points,
)
from quasitopy.errors import DomainError

logger = logging.getLogger(__name__)


def discrepancy_exponent(k: int, m: int) -> Fraction:
    """
    Exponent of ``z2'`` in the pullback of the holomorphic volume form under the
    blowdown, ``(k + 1) / m - 1``. It vanishes exactly for crepant blowdowns.

    Examples
    --------
    >>> discrepancy_exponent(1, 3)
    Fraction(-1, 3)
    """
    if not 0 < k <= m:
        msg = "need 0 < k <= m, got k=%r, m=%r" % (k, m)
        raise DomainError(msg)
    return Fraction(k + 1, m) - 1


def invariant_monomials(k: int, m: int) -> List[Tuple[int, int]]:
    """
    Exponents ``(i, j)`` with ``0 <= i, j <= m``, not both zero and ``m | ik + j``.

    The monomials ``z1(w)^i z2(w)^j`` are the invariants of the action of Z_m at
    the new vertex and include a generating set of the invariant ring.
    """
    return [
        (i, j)
        for i in range(m + 1)
        for j in range(m + 1)
        if (i, j) != (0, 0) and (i * k + j) % m == 0
    ]


def _residual(lhs: Any, rhs: Any) -> np.ndarray:
    lhs = np.asarray(lhs, dtype=complex)
    return np.abs(lhs - rhs) / np.maximum(1.0, np.abs(lhs))


@dataclass
class ResidualReport:
    """
    Residuals of a batch of points: one row per point, one column per identity.
    """

    residuals: pd.DataFrame
    tolerance: float = DEFAULT_TOLERANCE

    def max(self) -> pd.Series:
        return self.residuals.max()

    @property
    def passed(self) -> bool:
        return bool((self.max() < self.tolerance).all())

    def failures(self) -> List[str]:
        worst = self.max()
        return [str(name) for name in worst.index[~(worst < self.tolerance)]]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": int(len(self.residuals)),
            "tolerance": self.tolerance,
            "passed": self.passed,
            "max_residual": {str(name): float(value) for name, value in self.max().items()},
        }


def _frame(columns: "OrderedDict[str, np.ndarray]", n: int) -> pd.DataFrame:
    data = {name: np.broadcast_to(values, (n,)) for name, values in columns.items()}
    frame = pd.DataFrame(data, columns=list(columns))
    frame.index.name = "point"
    return frame


def _check_collar(params: LocalModelParams, pt: OrbitPoint, p_hat: np.ndarray) -> None:
    if np.any(p_hat <= 0) or np.any(p_hat >= params.eps1):
        msg = "p_hat must lie in (0, eps1=%r)" % params.eps1
        raise DomainError(msg, reason="outsideCollar")
    if np.any(np.asarray(pt.p1) <= 0) or np.any(np.asarray(pt.p2) <= 0):
        msg = "p1 and p2 must be positive"
        raise DomainError(msg, reason="vanishingLocus")
    q1 = np.asarray(pt.q1)
    q2 = np.asarray(pt.q2)
    if np.any(q1 < 0) or np.any(q2 < 0) or np.any(params.m * q1 / params.k + q2 >= 0.5):
        msg = "angular coordinates cross the branch cut: need (m/k) q1 + q2 < 1/2"
        raise DomainError(msg, reason="branchCut")


def verify_blowdown_identities(
    params: LocalModelParams,
    pt: OrbitPoint,
    monomials: Optional[Iterable[Tuple[int, int]]] = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> ResidualReport:
    """
    Evaluate the coordinate formulas of the blowdown map at ``pt``.

    Checked, per point:

    * ``bldn_v1_*``, ``bldn_v2_*``: the chart w coordinates of the image against
      the formulas in the v1 and v2 charts.
    * ``inverse_v1_*``, ``inverse_v2_*``: the formulas recovering the v1 and v2
      coordinates from the w coordinates of the image.
    * ``holo_v1_*``, ``holo_v2_*``: the blowdown map in the primed coordinates,
      where it is holomorphic.
    * ``trans_primed_*``: the transition between the two primed charts.
    * ``pullback_v1[i,j]``, ``pullback_v2[i,j]``: the pullback of the invariant
      monomial ``z1(w)^i z2(w)^j``, for each pair in ``monomials`` (by default
      :func:`invariant_monomials`).

    Parameters
    ----------
    params : LocalModelParams
    pt : OrbitPoint
        Points with ``0 < p_hat < eps1``, ``p1, p2 > 0`` and
        ``(m / k) q1 + q2 < 1/2``, e.g. from :func:`sample_points`.
    monomials : iterable of (int, int), optional
    tolerance : float, default 1e-9

    Returns
    -------
    ResidualReport

    Raises
    ------
    DomainError
        If a point violates the preconditions, or a pair in ``monomials`` is not
        invariant.
    """
    k, m = params.k, params.m
    p_hat = np.asarray(pt.p_hat(params), dtype=float)
    _check_collar(params, pt, p_hat)

    if monomials is None:
        monomials = invariant_monomials(k, m)
    monomials = list(monomials)
    for i, j in monomials:
        if (i * k + j) % m:
            msg = "monomial (%d, %d) is not invariant: %d does not divide %d" % (i, j, m, i * k + j)
            raise DomainError(msg, reason="notInvariant")

    scale = delta(params, p_hat)
    image = blowdown_orbit_map(params, pt)
    r1 = np.asarray(image.p1, dtype=float)
    r2 = np.asarray(image.p2, dtype=float)
    p1 = np.asarray(pt.p1, dtype=float)
    p2 = np.asarray(pt.p2, dtype=float)

    v1 = chart_eval(params, pt, Chart.V1, p_hat)
    v2 = chart_eval(params, pt, Chart.V2, p_hat)
    w = chart_eval(params, image, Chart.W)
    v1p = chart_eval(params, pt, Chart.V1_PRIMED, p_hat)
    v2p = chart_eval(params, pt, Chart.V2_PRIMED, p_hat)

    columns: "OrderedDict[str, np.ndarray]" = OrderedDict()

    columns["bldn_v1_z1"] = _residual(
        w.z1, v1.z1 * v1.z2 ** (k / m) * np.sqrt(scale ** k / p_hat ** (k / m))
    )
    columns["bldn_v1_z2"] = _residual(
        w.z2, v1.z2 ** (1 / m) * np.sqrt(scale * p2 / p_hat ** (1 / m))
    )
    columns["bldn_v2_z1"] = _residual(
        w.z1, v2.z1 ** (k / m) * np.sqrt(scale ** k * p1 / p_hat ** (k / m))
    )
    columns["bldn_v2_z2"] = _residual(
        w.z2, v2.z1 ** (1 / m) * v2.z2 * np.sqrt(scale / p_hat ** (1 / m))
    )

    columns["inverse_v1_z1"] = _residual(v1.z1, w.z1 / w.z2 ** k * np.sqrt(r2 ** k / scale ** k))
    columns["inverse_v1_z2"] = _residual(v1.z2, w.z2 ** m * np.sqrt(p_hat / r2 ** m))
    columns["inverse_v2_z1"] = _residual(v2.z1, w.z1 ** (m / k) * np.sqrt(p_hat / r1 ** (m / k)))
    columns["inverse_v2_z2"] = _residual(
        v2.z2, w.z2 / w.z1 ** (1 / k) * np.sqrt(r1 ** (1 / k) / scale)
    )

    columns["holo_v1_z1"] = _residual(w.z1, v1p.z1 * v1p.z2 ** (k / m))
    columns["holo_v1_z2"] = _residual(w.z2, v1p.z2 ** (1 / m))
    columns["holo_v2_z1"] = _residual(w.z1, v2p.z1 ** (k / m))
    columns["holo_v2_z2"] = _residual(w.z2, v2p.z1 ** (1 / m) * v2p.z2)

    columns["trans_primed_z1"] = _residual(v2p.z1, v1p.z1 ** (m / k) * v1p.z2)
    columns["trans_primed_z2"] = _residual(v2p.z2, v1p.z1 ** (-1 / k))

    for i, j in monomials:
        weight = (i * k + j) // m
        invariant = w.z1 ** i * w.z2 ** j
        pullback_v1 = v1p.z1 ** i * v1p.z2 ** weight
        pullback_v2 = v2p.z1 ** weight * v2p.z2 ** j
        columns["pullback_v1[%d,%d]" % (i, j)] = _residual(invariant, pullback_v1)
        columns["pullback_v2[%d,%d]" % (i, j)] = _residual(invariant, pullback_v2)

    report = ResidualReport(_frame(columns, len(pt)), tolerance)
    logger.debug("k=%d, m=%d: %d points, passed=%s", k, m, len(pt), report.passed)
    return report


def verify_general_transition(
    a: int,
    b: int,
    c: int,
    d: int,
    pt: OrbitPoint,
    s: float = 1.0,
    t: float = 1.0,
    tolerance: float = DEFAULT_TOLERANCE,
) -> ResidualReport:
    """
    Transition between the charts at the two endpoints of an edge.

    The edge has characteristic vector lambda2 = (a, b) and neighbours lambda1 = (1, 0)
    and lambda3 = (c, d). With ``D = ad - bc`` the chart coordinates are

        z1(v1) = sqrt(p1) e(q1 - (a/b) q2),   z2(v1) = sqrt(p_hat) e(q2 / b),
        z1(v2) = sqrt(p_hat) e((d q1 - c q2) / D),   z2(v2) = sqrt(p2) e((-b q1 + a q2) / D),

    where ``e(x) = exp(2 pi i x)``, and the identity checked is

        z1(v2) = z1(v1)^(d/D) z2(v1) sqrt(p1)^(-d/D),
        z2(v2) = z1(v1)^(-b/D) sqrt(p2) sqrt(p1)^(b/D).

    Parameters
    ----------
    a, b, c, d : int
        ``b`` and ``D`` must be nonzero.
    pt : OrbitPoint
        Interior points, ``|q1 - (a/b) q2| < 1/2``; see
        :func:`~quasitopy.charts.sampling.sample_transition_points`.
    s, t : float, default 1.0
        Coefficients of ``p_hat = p2 + s p1 - t``.
    tolerance : float, default 1e-9

    Returns
    -------
    ResidualReport
        Columns ``trans_z1`` and ``trans_z2``.

    Raises
    ------
    DomainError
        On a vanishing locus (``p1``, ``p2`` or ``p_hat`` not positive), for a
        degenerate edge, or when ``z1(v1)`` is on the branch cut.
    """
    det = a * d - b * c
    if b == 0 or det == 0:
        msg = "degenerate vectors (1,0), (%d,%d), (%d,%d)" % (a, b, c, d)
        raise DomainError(msg, reason="dependentAdjacent")

    p1 = np.asarray(pt.p1, dtype=float)
    p2 = np.asarray(pt.p2, dtype=float)
    q1 = np.asarray(pt.q1, dtype=float)
    q2 = np.asarray(pt.q2, dtype=float)
    p_hat = p2 + s * p1 - t
    if np.any(p1 <= 0) or np.any(p2 <= 0) or np.any(p_hat <= 0):
        msg = "p1, p2 and p_hat must be positive in the interior"
        raise DomainError(msg, reason="vanishingLocus")
    if np.any(np.abs(q1 - a * q2 / b) >= 0.5):
        msg = "z1(v1) crosses the branch cut: need |q1 - (a/b) q2| < 1/2"
        raise DomainError(msg, reason="branchCut")

    def e(turns: np.ndarray) -> np.ndarray:
        return np.exp(2j * np.pi * turns)

    z1_v1 = np.sqrt(p1) * e(q1 - a * q2 / b)
    z2_v1 = np.sqrt(p_hat) * e(q2 / b)
    z1_v2 = np.sqrt(p_hat) * e((d * q1 - c * q2) / det)
    z2_v2 = np.sqrt(p2) * e((-b * q1 + a * q2) / det)

    columns: "OrderedDict[str, np.ndarray]" = OrderedDict()
    columns["trans_z1"] = _residual(z1_v2, z1_v1 ** (d / det) * z2_v1 * np.sqrt(p1) ** (-d / det))
    columns["trans_z2"] = _residual(
        z2_v2, z1_v1 ** (-b / det) * np.sqrt(p2) * np.sqrt(p1) ** (b / det)
    )
    return ResidualReport(_frame(columns, len(pt)), tolerance)


def verify_chart_identities(
    params: LocalModelParams, n: int = 1000, seed: int = 0, tolerance: float = DEFAULT_TOLERANCE
) -> ResidualReport:
    """Sample ``n`` points with :func:`sample_points` and verify the blowdown identities."""
    points = sample_points(params, n, seed)
    return verify_blowdown_identities(params, points, tolerance=tolerance)
