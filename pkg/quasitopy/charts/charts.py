"""
Explicit coordinate charts near a blown down edge.

After a change of basis the deleted edge E2 has lambda1 = (1, 0), lambda2 = (0, 1)
and lambda3 = (-k, m). A point of the orbit space near E2 is ``(p1, p2, q1, q2)``
where p1 and p2 are the affine coordinates vanishing on E1 and E3, ``(q1, q2)`` are
the angular coordinates of the torus, and ``p_hat = p2 + s p1 - t`` vanishes on E2.

All functions broadcast over numpy arrays held in the fields of an OrbitPoint.
"""
from dataclasses import dataclass
from enum import Enum
from typing import (
    Any,
    Optional,
)

import numpy as np

from quasitopy._typing import FloatOrArray
from quasitopy.errors import DomainError

TWO_PI_I = 2j * np.pi


@dataclass(frozen=True)
class LocalModelParams:
    """
    Data of the local model: ``0 < k <= m``, the edge equation ``p_hat = p2 + s p1 - t``
    and the collar ``0 < eps1 < eps2 < 1`` on which the blowdown map is modified.
    """

    k: int
    m: int
    s: float = 1.0
    t: float = 1.0
    eps1: float = 0.1
    eps2: float = 0.5

    def __post_init__(self) -> None:
        if not 0 < self.k <= self.m:
            msg = "need 0 < k <= m, got k=%r, m=%r" % (self.k, self.m)
            raise DomainError(msg)
        if self.s <= 0 or self.t <= 0:
            msg = "s and t must be positive, got s=%r, t=%r" % (self.s, self.t)
            raise DomainError(msg)
        if not 0 < self.eps1 < self.eps2 < 1:
            msg = "need 0 < eps1 < eps2 < 1, got %r, %r" % (self.eps1, self.eps2)
            raise DomainError(msg)


@dataclass(frozen=True)
class OrbitPoint:
    """
    A point (or a batch of points) ``(p1, p2, q1, q2)``.

    Images under the blowdown map are OrbitPoints too, with ``(r1, r2)`` stored in
    ``(p1, p2)``.
    """

    p1: FloatOrArray
    p2: FloatOrArray
    q1: FloatOrArray
    q2: FloatOrArray

    @classmethod
    def from_p_hat(
        cls,
        params: LocalModelParams,
        p1: FloatOrArray,
        p_hat: FloatOrArray,
        q1: FloatOrArray,
        q2: FloatOrArray,
    ) -> "OrbitPoint":
        return cls(p1, np.asarray(p_hat) + params.t - params.s * np.asarray(p1), q1, q2)

    def p_hat(self, params: LocalModelParams) -> FloatOrArray:
        return self.p2 + params.s * self.p1 - params.t

    def __len__(self) -> int:
        return int(np.size(self.p1))


class Chart(Enum):
    V1 = "v1"
    V2 = "v2"
    W = "w"
    V1_PRIMED = "v1primed"
    V2_PRIMED = "v2primed"


@dataclass(frozen=True)
class ChartValue:
    z1: Any
    z2: Any
    chart: Chart


def _require_nonnegative(value: FloatOrArray, name: str) -> None:
    if np.any(np.asarray(value) < 0):
        msg = "%s must be nonnegative" % name
        raise DomainError(msg, reason="negativeRadius")


def _require_nonzero(value: FloatOrArray, name: str) -> None:
    if np.any(np.asarray(value) == 0):
        msg = "%s vanishes where the chart divides by it" % name
        raise DomainError(msg, reason="vanishingLocus")


def _smoothstep(u: np.ndarray) -> np.ndarray:
    return u ** 3 * (10 - 15 * u + 6 * u ** 2)


def delta(params: LocalModelParams, x: FloatOrArray) -> FloatOrArray:
    """
    The non-decreasing cutoff of the blowdown map.

    ``x ** (1/m)`` below ``eps1``, ``1`` above ``eps2``, and in between
    ``x ** ((1 - S(u)) / m)`` where ``u`` rescales ``[eps1, eps2]`` to ``[0, 1]``
    and ``S`` is the quintic smoothstep.

    Parameters
    ----------
    params : LocalModelParams
    x : float or ndarray
        Nonnegative.

    Returns
    -------
    float or ndarray

    Raises
    ------
    DomainError
        If ``x`` is negative.

    Examples
    --------
    >>> delta(LocalModelParams(k=1, m=2), 0.04)
    0.2
    """
    _require_nonnegative(x, "p_hat")
    values = np.asarray(x, dtype=float)

    u = np.clip((values - params.eps1) / (params.eps2 - params.eps1), 0.0, 1.0)
    blended = values ** ((1 - _smoothstep(u)) / params.m)
    out = np.where(
        values < params.eps1,
        values ** (1.0 / params.m),
        np.where(values > params.eps2, 1.0, blended),
    )
    if np.ndim(x) == 0:
        return float(out)
    return out


def blowdown_orbit_map(params: LocalModelParams, pt: OrbitPoint) -> OrbitPoint:
    """
    The blowdown map on the orbit space,

        (p1, p2, q1, q2) -> (delta(p_hat)^k p1, delta(p_hat) p2, q1, q2).

    It collapses ``p_hat = 0`` to the new vertex and is the identity where
    ``p_hat > eps2``.
    """
    scale = delta(params, pt.p_hat(params))
    return OrbitPoint(scale ** params.k * pt.p1, scale * pt.p2, pt.q1, pt.q2)


def _phase(turns: FloatOrArray) -> Any:
    return np.exp(TWO_PI_I * np.asarray(turns))


def chart_eval(
    params: LocalModelParams, pt: OrbitPoint, chart: Chart, p_hat: Optional[FloatOrArray] = None
) -> ChartValue:
    """
    Complex coordinates of ``pt`` in one of the charts around the deleted edge.

    Parameters
    ----------
    params : LocalModelParams
    pt : OrbitPoint
        For ``Chart.W`` the point is read as an image point ``(r1, r2, q1, q2)``.
    chart : Chart
        ``V1`` and ``V2`` are the charts at the endpoints of E2 in X, ``W`` the chart
        at the new vertex of Y, and the primed charts the coordinates near E2 in
        which the blowdown map is holomorphic.
    p_hat : float or ndarray, optional
        Precomputed value of ``pt.p_hat(params)``.

    Returns
    -------
    ChartValue

    Raises
    ------
    DomainError
        If a radius is negative, or a primed chart divides by a vanishing
        function (``p2`` for ``V1_PRIMED``, ``p1`` for ``V2_PRIMED`` and ``p_hat``
        for both).

    Examples
    --------
    >>> params = LocalModelParams(k=1, m=2)
    >>> pt = OrbitPoint.from_p_hat(params, 0.25, 0.04, 0.1, 0.2)
    >>> abs(chart_eval(params, pt, Chart.V1).z1)
    0.5
    """
    k, m = params.k, params.m

    if chart is Chart.W:
        _require_nonnegative(pt.p1, "r1")
        _require_nonnegative(pt.p2, "r2")
        z1 = np.sqrt(pt.p1) * _phase(pt.q1 + k * np.asarray(pt.q2) / m)
        z2 = np.sqrt(pt.p2) * _phase(np.asarray(pt.q2) / m)
        return ChartValue(z1, z2, chart)

    if p_hat is None:
        p_hat = pt.p_hat(params)
    _require_nonnegative(pt.p1, "p1")
    _require_nonnegative(pt.p2, "p2")
    _require_nonnegative(p_hat, "p_hat")

    if chart is Chart.V1:
        z1 = np.sqrt(pt.p1) * _phase(pt.q1)
        z2 = np.sqrt(p_hat) * _phase(pt.q2)
        return ChartValue(z1, z2, chart)

    if chart is Chart.V2:
        z1 = np.sqrt(p_hat) * _phase(m * np.asarray(pt.q1) / k + pt.q2)
        z2 = np.sqrt(pt.p2) * _phase(-np.asarray(pt.q1) / k)
        return ChartValue(z1, z2, chart)

    _require_nonzero(p_hat, "p_hat")
    scale = delta(params, p_hat)

    if chart is Chart.V1_PRIMED:
        _require_nonzero(pt.p2, "p2")
        base = chart_eval(params, pt, Chart.V1, p_hat)
        z1 = base.z1 * np.sqrt(1.0 / np.asarray(pt.p2) ** k)
        z2 = base.z2 * np.sqrt(scale ** m * np.asarray(pt.p2) ** m / p_hat)
        return ChartValue(z1, z2, chart)

    if chart is Chart.V2_PRIMED:
        _require_nonzero(pt.p1, "p1")
        base = chart_eval(params, pt, Chart.V2, p_hat)
        p1 = np.asarray(pt.p1, dtype=float)
        z1 = base.z1 * np.sqrt(scale ** m * p1 ** (m / k) / p_hat)
        z2 = base.z2 * np.sqrt(p1 ** (-1.0 / k))
        return ChartValue(z1, z2, chart)

    msg = "unknown chart %r" % chart
    raise ValueError(msg)
