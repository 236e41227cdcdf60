from fractions import Fraction

import numpy as np
import pandas as pd
import pytest

from quasitopy.charts.charts import (
    LocalModelParams,
    OrbitPoint,
)
from quasitopy.charts.identities import (
    ResidualReport,
    discrepancy_exponent,
    invariant_monomials,
    verify_blowdown_identities,
    verify_chart_identities,
    verify_general_transition,
)
from quasitopy.charts.sampling import (
    DEFAULT_PARAMETER_SETS,
    sample_points,
    sample_transition_points,
)
from quasitopy.errors import DomainError

FIXED_COLUMNS = [
    "bldn_v1_z1",
    "bldn_v1_z2",
    "bldn_v2_z1",
    "bldn_v2_z2",
    "inverse_v1_z1",
    "inverse_v1_z2",
    "inverse_v2_z1",
    "inverse_v2_z2",
    "holo_v1_z1",
    "holo_v1_z2",
    "holo_v2_z1",
    "holo_v2_z2",
    "trans_primed_z1",
    "trans_primed_z2",
]


class TestDiscrepancyExponent:
    def test_examples(self) -> None:
        assert discrepancy_exponent(1, 2) == 0
        assert discrepancy_exponent(2, 3) == 0
        assert discrepancy_exponent(1, 3) == Fraction(-1, 3)
        assert type(discrepancy_exponent(1, 3)) is Fraction

    def test_zero_iff_crepant(self) -> None:
        for m in range(1, 13):
            for k in range(1, m + 1):
                assert (discrepancy_exponent(k, m) == 0) is (k + 1 == m)
                assert discrepancy_exponent(k, m) <= Fraction(1, m)

    def test_invalid(self) -> None:
        with pytest.raises(DomainError):
            discrepancy_exponent(3, 2)
        with pytest.raises(DomainError):
            discrepancy_exponent(0, 2)


class TestInvariantMonomials:
    def test_examples(self) -> None:
        assert invariant_monomials(1, 2) == [(0, 2), (1, 1), (2, 0), (2, 2)]
        assert (1, 2) in invariant_monomials(1, 3)

    def test_divisibility(self) -> None:
        for m in range(1, 8):
            for k in range(1, m + 1):
                monomials = invariant_monomials(k, m)
                assert (0, m) in monomials and (m, 0) in monomials
                assert (1, m - k) in monomials
                assert all((i * k + j) % m == 0 for i, j in monomials)


class TestVerifyBlowdownIdentities:
    def test_report(self) -> None:
        params = LocalModelParams(k=1, m=2)
        report = verify_blowdown_identities(params, sample_points(params, 200, seed=0))
        assert isinstance(report, ResidualReport)
        assert isinstance(report.residuals, pd.DataFrame)
        assert report.residuals.shape == (200, len(FIXED_COLUMNS) + 8)
        assert list(report.residuals.columns[: len(FIXED_COLUMNS)]) == FIXED_COLUMNS
        assert report.residuals.index.name == "point"
        assert report.passed, report.failures()
        assert report.failures() == []

        document = report.to_dict()
        assert document["points"] == 200
        assert document["passed"] is True
        assert set(document["max_residual"]) == set(report.residuals.columns)

    def test_integer_exponent_monomial(self) -> None:
        # ik + j = m, so the pullback is z1'(v1) z2'(v1)
        for k, m in DEFAULT_PARAMETER_SETS:
            params = LocalModelParams(k=k, m=m)
            report = verify_blowdown_identities(
                params, sample_points(params, 100, seed=4), monomials=[(1, m - k)]
            )
            assert "pullback_v1[1,%d]" % (m - k) in report.residuals.columns
            assert report.passed

    def test_single_point(self) -> None:
        params = LocalModelParams(k=2, m=5)
        pt = OrbitPoint.from_p_hat(params, 0.3, 0.01, 0.05, 0.1)
        report = verify_blowdown_identities(params, pt)
        assert len(report.residuals) == 1
        assert report.passed

    def test_not_invariant(self) -> None:
        params = LocalModelParams(k=1, m=2)
        with pytest.raises(DomainError) as excinfo:
            verify_blowdown_identities(params, sample_points(params, 10), monomials=[(1, 0)])
        assert excinfo.value.reason == "notInvariant"

    def test_outside_collar(self) -> None:
        params = LocalModelParams(k=1, m=2)
        pt = OrbitPoint.from_p_hat(params, 0.3, 0.2, 0.05, 0.1)
        with pytest.raises(DomainError) as excinfo:
            verify_blowdown_identities(params, pt)
        assert excinfo.value.reason == "outsideCollar"

    def test_branch_cut(self) -> None:
        params = LocalModelParams(k=1, m=2)
        pt = OrbitPoint.from_p_hat(params, 0.3, 0.05, 0.2, 0.2)
        with pytest.raises(DomainError) as excinfo:
            verify_blowdown_identities(params, pt)
        assert excinfo.value.reason == "branchCut"

    def test_failing_tolerance(self) -> None:
        params = LocalModelParams(k=1, m=3)
        report = verify_blowdown_identities(params, sample_points(params, 20), tolerance=0.0)
        assert not report.passed
        assert len(report.failures()) > 0

    @pytest.mark.slow
    def test_parameter_sets(self) -> None:
        for k, m in DEFAULT_PARAMETER_SETS:
            report = verify_chart_identities(LocalModelParams(k=k, m=m), n=1000, seed=0)
            assert len(report.residuals) == 1000
            assert report.passed, (k, m, report.failures())
            assert report.max().max() < 1e-9


class TestVerifyGeneralTransition:
    def test_identity_edge(self) -> None:
        pt = OrbitPoint(np.array([0.4]), np.array([0.8]), np.array([0.1]), np.array([0.3]))
        report = verify_general_transition(0, 1, -1, 0, pt)
        assert list(report.residuals.columns) == ["trans_z1", "trans_z2"]
        assert report.passed

    def test_random_points(self) -> None:
        for a, b, c, d in [(0, 1, -2, 3), (0, 1, -1, 0), (3, 1, -1, 0), (-2, 5, 1, 1)]:
            pt = sample_transition_points(a, b, c, d, 1000, seed=2)
            report = verify_general_transition(a, b, c, d, pt)
            assert report.passed, (a, b, c, d, report.failures())

    def test_edge_coefficients(self) -> None:
        pt = sample_transition_points(0, 1, -2, 3, 100, seed=0, s=2.0, t=3.0)
        assert verify_general_transition(0, 1, -2, 3, pt, s=2.0, t=3.0).passed

    def test_vanishing(self) -> None:
        pt = OrbitPoint(0.0, 1.5, 0.1, 0.2)
        with pytest.raises(DomainError) as excinfo:
            verify_general_transition(0, 1, -1, 0, pt)
        assert excinfo.value.reason == "vanishingLocus"

    def test_degenerate(self) -> None:
        pt = OrbitPoint(0.4, 0.8, 0.1, 0.2)
        with pytest.raises(DomainError) as excinfo:
            verify_general_transition(1, 0, 0, 1, pt)
        assert excinfo.value.reason == "dependentAdjacent"
        with pytest.raises(DomainError):
            verify_general_transition(0, 1, 0, 2, pt)

    def test_branch_cut(self) -> None:
        pt = OrbitPoint(0.4, 0.8, 0.6, 0.0)
        with pytest.raises(DomainError) as excinfo:
            verify_general_transition(0, 1, -1, 0, pt)
        assert excinfo.value.reason == "branchCut"
