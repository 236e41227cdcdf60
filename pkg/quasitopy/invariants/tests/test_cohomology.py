from fractions import Fraction

import numpy as np
import pandas as pd
import pandas._testing as tm
import pytest

import quasitopy as qt
from quasitopy.core.model import (
    rotate,
    vertices,
)
from quasitopy.errors import (
    GenericityFailure,
    NotAManifold,
)
from quasitopy.invariants.cohomology import (
    cr_total_dimension,
    render_degree,
)
from quasitopy.invariants.localgroup import is_SL_model

TRIANGLE = [(1, 0), (0, 1), (-1, -1)]
SQUARE = [(1, 0), (0, 1), (-1, 0), (0, -1)]
X = [(1, 0), (0, 1), (-1, 2), (-2, 3), (1, -2), (0, 1), (-1, -1)]
Y = [(1, 0), (-1, 2), (-2, 3), (1, -2), (0, 1), (-1, -1)]
T = [(1, 0), (2, 3), (-1, -1)]


def model(edges):
    return qt.QuasitoricModel.from_edges(edges)


def brute_force_todd(edges, direction):
    """Index count written out without the dual basis array."""
    m = model(edges)
    count = 0
    for v in vertices(m):
        u, w = v.first, v.second
        mu1 = (w.y, -w.x)
        mu2 = (-u.y, u.x)
        pairings = [mu[0] * direction[0] + mu[1] * direction[1] for mu in (mu1, mu2)]
        if all(p > 0 for p in pairings):
            count += 1
    return count


@pytest.fixture(scope="module")
def corpus():
    return qt.random.random_models(300, seed=3)


class TestSingularBetti:
    def test_examples(self) -> None:
        expected = qt.BettiTable([1, 1, 1], index=[0, 2, 4], dtype="int64")
        expected.index.name = "degree"
        expected.name = "dimension"
        tm.assert_series_equal(qt.singular_betti(model(TRIANGLE)), expected)

        assert qt.singular_betti(model(X)).to_dict() == {0: 1, 2: 5, 4: 1}
        assert qt.singular_betti(model(Y)).to_dict() == {0: 1, 2: 4, 4: 1}

    def test_type(self) -> None:
        table = qt.singular_betti(model(X))
        assert type(table) is qt.BettiTable
        assert type(table + table) is qt.BettiTable

    def test_total_is_edge_count(self, corpus) -> None:
        for m in corpus:
            assert qt.singular_betti(m).total() == len(m)


class TestCRBetti:
    def test_manifold(self) -> None:
        table = qt.cr_betti(model(X))
        assert type(table) is qt.CRBettiTable
        assert table.to_json_dict() == {"0": 1, "2": 5, "4": 1}

    def test_model_y(self) -> None:
        assert qt.cr_betti(model(Y)).to_json_dict() == {"0": 1, "2": 5, "4": 1}

    def test_model_t(self) -> None:
        table = qt.cr_betti(model(T))
        assert table.to_dict() == {
            Fraction(0): 1,
            Fraction(4, 3): 1,
            Fraction(2): 1,
            Fraction(8, 3): 1,
            Fraction(4): 1,
        }
        assert table.to_json_dict() == {"0": 1, "4/3": 1, "2": 1, "8/3": 1, "4": 1}
        assert list(table.index) == sorted(table.index)

    def test_total_dimension(self, corpus) -> None:
        for m in corpus:
            expected = len(m) + sum(abs(v.det) - 1 for v in vertices(m))
            assert qt.cr_betti(m).total() == expected
            assert cr_total_dimension(m) == expected

    def test_odd_degrees_iff_not_sl(self, corpus) -> None:
        for m in corpus:
            degrees = set(qt.cr_betti(m).index)
            extra = degrees - {0, 2, 4}
            assert bool(extra) is not is_SL_model(m)

    def test_rotation_invariant(self, corpus) -> None:
        for m in corpus[:50]:
            expected = qt.cr_betti(m)
            for shift in range(1, len(m)):
                tm.assert_series_equal(qt.cr_betti(rotate(m, shift)), expected)
                tm.assert_series_equal(qt.singular_betti(rotate(m, shift)), qt.singular_betti(m))


class TestRenderDegree:
    def test_render(self) -> None:
        assert render_degree(Fraction(4, 3)) == "4/3"
        assert render_degree(Fraction(6, 3)) == "2"
        assert render_degree(0) == "0"


class TestToddGenus:
    def test_examples(self) -> None:
        assert qt.todd_genus(model(TRIANGLE)) == 1
        assert qt.todd_genus(model(SQUARE)) == 1
        assert qt.todd_genus(model(X)) == 2

    def test_brute_force(self) -> None:
        assert brute_force_todd(TRIANGLE, (10, 1)) == 1
        assert brute_force_todd(SQUARE, (10, 1)) == 1
        assert brute_force_todd(X, (10, 1)) == 2

    def test_explicit_directions(self) -> None:
        assert qt.todd_genus(model(X), (4, 1)) == 2
        assert qt.todd_genus(model(X), (1, 4)) == 2
        assert qt.todd_genus(model(X), (-1, 1)) == 2

    def test_independent_of_direction(self) -> None:
        rng = np.random.default_rng(0)
        checked = 0
        for edges in (TRIANGLE, SQUARE, X):
            m = model(edges)
            expected = qt.todd_genus(m)
            count = 0
            while count < 25:
                direction = tuple(int(c) for c in rng.integers(-50, 51, 2))
                try:
                    assert qt.todd_genus(m, direction) == expected
                except GenericityFailure:
                    continue
                count += 1
            checked += count
        assert checked == 75

    def test_rotation_invariant(self) -> None:
        m = model(X)
        for shift in range(len(m)):
            assert qt.todd_genus(rotate(m, shift)) == 2

    def test_not_a_manifold(self) -> None:
        with pytest.raises(NotAManifold):
            qt.todd_genus(model(Y))

    def test_not_positive(self) -> None:
        with pytest.raises(qt.ValidationError):
            qt.todd_genus(model(TRIANGLE[::-1]))

    def test_non_generic_direction(self) -> None:
        with pytest.raises(GenericityFailure):
            qt.todd_genus(model(SQUARE), (1, 0))

    @pytest.mark.parametrize("a", [2 ** 30, 2 ** 31, 2 ** 61, 2 ** 70, 2 ** 200])
    def test_large_coordinates(self, a) -> None:
        # (x, y) -> (x + a y, x + (a + 1) y) has determinant 1
        def transform(edges):
            return [(x + a * y, x + (a + 1) * y) for x, y in edges]

        assert qt.todd_genus(model(transform(TRIANGLE))) == 1
        assert qt.todd_genus(model(transform(X))) == 2
        assert qt.todd_genus(model(transform(X)), (3 * a, 1)) == brute_force_todd(
            transform(X), (3 * a, 1)
        )

    def test_blowup_preserves(self) -> None:
        # a smooth corner blowup of the triangle gives the Hirzebruch surface F_1
        blown_up, inserted = qt.blowup(model(TRIANGLE), 0)
        assert inserted == qt.LatticeVector(1, 1)
        assert qt.todd_genus(blown_up) == 1


def test_betti_table_frame() -> None:
    table = qt.cr_betti(model(T))
    frame = table.to_frame()
    assert isinstance(frame, pd.DataFrame)
    assert list(frame.columns) == ["dimension"]
