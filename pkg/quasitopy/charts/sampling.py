"""
Seeded rejection sampling of points where the chart identities are evaluated.

Fractional powers use the principal branch, so every base raised to a fractional
power must keep its phase strictly inside (-pi, pi). The samplers only return
points satisfying this, with a margin, and points at a fixed distance from the
loci where a chart coordinate vanishes.
"""
from enum import (
    Enum,
    auto,
)
import logging
from typing import (
    List,
    Tuple,
)

import numpy as np

from quasitopy.charts.charts import (
    LocalModelParams,
    OrbitPoint,
)

logger = logging.getLogger(__name__)


class margin(Enum):
    BRANCH = auto()
    VANISHING = auto()


margin_width = {
    margin.BRANCH: 1e-6,
    margin.VANISHING: 1e-6,
}

DEFAULT_TOLERANCE = 1e-9

# angular coordinates are drawn from this sub-interval of [0, 1)
ANGLE_WINDOW = (0.05, 0.45)

DEFAULT_PARAMETER_SETS: List[Tuple[int, int]] = [(1, 2), (2, 3), (1, 3), (2, 5)]


def _angles(rng: np.random.Generator, size: int) -> np.ndarray:
    low, high = ANGLE_WINDOW
    return rng.uniform(low, high, size)


def _collect(batches: List[np.ndarray], n: int) -> np.ndarray:
    if not batches:
        return np.empty(0)
    return np.concatenate(batches)[:n]


def sample_points(params: LocalModelParams, n: int, seed: int = 0) -> OrbitPoint:
    """
    ``n`` points of the collar 0 < p_hat < eps1 around the deleted edge.

    Parameters
    ----------
    params : LocalModelParams
    n : int
        Number of points.
    seed : int, default 0
        Seed of the generator; the points are a function of ``(params, n, seed)``.

    Returns
    -------
    OrbitPoint
        Fields are arrays of length ``n``. Every point has
        ``(m / k) q1 + q2 < 1/2`` up to the branch margin and ``p1``, ``p2``,
        ``p_hat`` bounded away from zero.
    """
    rng = np.random.default_rng(seed)
    vanishing = margin_width[margin.VANISHING]
    branch = margin_width[margin.BRANCH]
    ratio = params.k / params.m

    accepted = 0
    p1s, p2s, q1s, q2s = [], [], [], []
    while accepted < n:
        size = 2 * (n - accepted) + 8
        p_hat = rng.uniform(vanishing, params.eps1 - vanishing, size)
        p1 = rng.uniform(vanishing, 0.9 * params.t / params.s, size)
        p2 = p_hat + params.t - params.s * p1
        # q1 is scaled so that (m / k) q1 stays inside the angle window
        u1 = _angles(rng, size)
        q2 = _angles(rng, size)
        q1 = ratio * u1

        keep = (u1 + q2 < 0.5 - branch) & (p2 > vanishing)
        logger.debug("sample_points: kept %d of %d draws", int(keep.sum()), size)

        p1s.append(p1[keep])
        p2s.append(p2[keep])
        q1s.append(q1[keep])
        q2s.append(q2[keep])
        accepted += int(keep.sum())

    return OrbitPoint(_collect(p1s, n), _collect(p2s, n), _collect(q1s, n), _collect(q2s, n))


def sample_transition_points(
    a: int, b: int, c: int, d: int, n: int, seed: int = 0, s: float = 1.0, t: float = 1.0
) -> OrbitPoint:
    """
    ``n`` interior points of the overlap of two adjacent vertex charts.

    The points satisfy ``|q1 - (a / b) q2| < 1/2`` up to the branch margin, with
    ``p1``, ``p2`` and ``p_hat = p2 + s p1 - t`` bounded away from zero.
    """
    rng = np.random.default_rng(seed)
    vanishing = margin_width[margin.VANISHING]
    branch = margin_width[margin.BRANCH]
    slope = a / b
    scale = max(1.0, abs(slope))

    accepted = 0
    p1s, p2s, q1s, q2s = [], [], [], []
    while accepted < n:
        size = 2 * (n - accepted) + 8
        p_hat = rng.uniform(vanishing, 1.0, size)
        p1 = rng.uniform(vanishing, 0.9 * t / s, size)
        p2 = p_hat + t - s * p1
        q1 = _angles(rng, size)
        q2 = _angles(rng, size) / scale

        keep = (np.abs(q1 - slope * q2) < 0.5 - branch) & (p2 > vanishing)
        logger.debug("sample_transition_points: kept %d of %d draws", int(keep.sum()), size)

        p1s.append(p1[keep])
        p2s.append(p2[keep])
        q1s.append(q1[keep])
        q2s.append(q2[keep])
        accepted += int(keep.sum())

    return OrbitPoint(_collect(p1s, n), _collect(p2s, n), _collect(q1s, n), _collect(q2s, n))
