import numpy as np
from numpy.testing import assert_array_equal

from quasitopy.charts.charts import LocalModelParams
from quasitopy.charts.sampling import (
    DEFAULT_PARAMETER_SETS,
    margin,
    margin_width,
    sample_points,
    sample_transition_points,
)


class TestSamplePoints:
    def test_constraints(self) -> None:
        for k, m in DEFAULT_PARAMETER_SETS + [(1, 1), (5, 12), (1, 12)]:
            params = LocalModelParams(k=k, m=m)
            pt = sample_points(params, 500, seed=3)
            assert len(pt) == 500

            p_hat = pt.p_hat(params)
            assert np.all(p_hat > 0) and np.all(p_hat < params.eps1)
            assert np.all(pt.p1 > 0) and np.all(pt.p2 > 0)
            assert np.all(pt.q1 > 0) and np.all(pt.q2 > 0)
            assert np.all(m * pt.q1 / k + pt.q2 < 0.5)

    def test_seeded(self) -> None:
        params = LocalModelParams(k=2, m=3)
        first = sample_points(params, 50, seed=9)
        second = sample_points(params, 50, seed=9)
        assert_array_equal(first.p1, second.p1)
        assert_array_equal(first.q2, second.q2)
        assert not np.array_equal(first.p1, sample_points(params, 50, seed=10).p1)

    def test_empty(self) -> None:
        pt = sample_points(LocalModelParams(k=1, m=2), 0)
        assert len(pt) == 0

    def test_margins(self) -> None:
        assert margin_width[margin.BRANCH] == 1e-6
        assert margin_width[margin.VANISHING] == 1e-6


class TestSampleTransitionPoints:
    def test_constraints(self) -> None:
        for a, b, c, d in [(0, 1, -1, 0), (0, 1, -2, 3), (3, 1, -1, 0), (-2, 5, 1, 1)]:
            pt = sample_transition_points(a, b, c, d, 300, seed=1)
            assert len(pt) == 300
            p_hat = pt.p2 + pt.p1 - 1.0
            assert np.all(p_hat > 0)
            assert np.all(pt.p1 > 0) and np.all(pt.p2 > 0)
            assert np.all(np.abs(pt.q1 - a * pt.q2 / b) < 0.5)

    def test_edge_coefficients(self) -> None:
        pt = sample_transition_points(0, 1, -1, 0, 100, seed=0, s=2.0, t=3.0)
        assert np.all(pt.p2 + 2.0 * pt.p1 - 3.0 > 0)
