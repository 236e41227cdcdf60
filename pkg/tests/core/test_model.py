import json

import pytest

import quasitopy as qt
from quasitopy.core.model import (
    is_manifold,
    rotate,
    vertices,
    winding_number,
)

TRIANGLE = [(1, 0), (0, 1), (-1, -1)]
SQUARE = [(1, 0), (0, 1), (-1, 0), (0, -1)]
X = [(1, 0), (0, 1), (-1, 2), (-2, 3), (1, -2), (0, 1), (-1, -1)]
Y = [(1, 0), (-1, 2), (-2, 3), (1, -2), (0, 1), (-1, -1)]


class TestParseModel:
    def test_triangle(self) -> None:
        model = qt.parse_model(b'{"edges":[[1,0],[0,1],[-1,-1]]}')
        assert len(model) == 3
        assert model == qt.QuasitoricModel.from_edges(TRIANGLE)

    def test_model_x(self) -> None:
        text = json.dumps({"edges": [list(e) for e in X]})
        model = qt.parse_model(text)
        assert len(model) == 7
        assert model.to_list() == [list(e) for e in X]

    def test_not_primitive(self) -> None:
        with pytest.raises(qt.ValidationError) as excinfo:
            qt.parse_model('{"edges":[[1,0],[2,4],[-1,-1]]}')
        report = excinfo.value.report
        assert not report.valid
        assert [f.kind for f in report.failures] == ["notPrimitive"]
        assert report.failures[0].index == 1

    @pytest.mark.parametrize(
        "text",
        [
            "not json",
            "[]",
            '{"vectors": [[1, 0]]}',
            '{"edges": [[1, 0], [0, 1], [-1]]}',
            '{"edges": [[1, 0], [0, 1.5], [-1, -1]]}',
            '{"edges": [[1, 0], [0, true], [-1, -1]]}',
            '{"edges": {"0": [1, 0]}}',
        ],
    )
    def test_malformed(self, text) -> None:
        with pytest.raises(qt.ParseError):
            qt.parse_model(text)

    def test_extra_keys_ignored(self) -> None:
        model = qt.parse_model('{"edges":[[1,0],[0,1],[-1,-1]],"site":{"k":1}}')
        assert model.to_list() == [[1, 0], [0, 1], [-1, -1]]

    def test_without_validation(self) -> None:
        model = qt.parse_model('{"edges":[[1,0],[-1,0],[0,1]]}', validate=False)
        assert len(model) == 3


class TestSerializeModel:
    def test_canonical(self) -> None:
        model = qt.QuasitoricModel.from_edges(TRIANGLE)
        assert qt.serialize_model(model) == b'{"edges":[[1,0],[0,1],[-1,-1]]}'

    def test_parse_serialize(self) -> None:
        text = b'{ "edges" : [ [1, 0], [0, 1],\n [-1, 2], [-2, 3], [1, -2], [0, 1], [-1, -1] ] }'
        canonical = qt.serialize_model(qt.parse_model(text))
        assert qt.serialize_model(qt.parse_model(canonical)) == canonical
        assert qt.parse_model(canonical) == qt.QuasitoricModel.from_edges(X)


class TestValidate:
    def test_model_x(self) -> None:
        report = qt.validate(qt.QuasitoricModel.from_edges(X))
        assert report.valid
        assert report.positively_omnioriented
        assert report.to_dict() == {"valid": True, "positively_omnioriented": True}

    def test_square(self) -> None:
        report = qt.validate(qt.QuasitoricModel.from_edges(SQUARE))
        assert report.valid and report.positively_omnioriented

    def test_dependent_adjacent(self) -> None:
        model = qt.QuasitoricModel.from_edges([(1, 0), (-1, 0), (0, 1)], validate=False)
        report = qt.validate(model)
        assert not report.valid
        assert not report.positively_omnioriented
        assert report.failures[0].kind == "dependentAdjacent"
        assert report.failures[0].index == 0

    def test_too_few_edges(self) -> None:
        report = qt.validate(qt.QuasitoricModel.from_edges([(1, 0), (0, 1)], validate=False))
        assert not report.valid
        assert "tooFewEdges" in [f.kind for f in report.failures]

    def test_valid_not_positive(self) -> None:
        # clockwise listing reversed
        model = qt.QuasitoricModel.from_edges(TRIANGLE[::-1])
        report = qt.validate(model)
        assert report.valid
        assert not report.positively_omnioriented

    def test_from_edges_rejects_invalid(self) -> None:
        with pytest.raises(qt.ValidationError):
            qt.QuasitoricModel.from_edges([(1, 0), (-1, 0), (0, 1)])


class TestVertices:
    def test_dets(self) -> None:
        assert [v.det for v in vertices(qt.QuasitoricModel.from_edges(TRIANGLE))] == [1, 1, 1]
        assert [v.det for v in vertices(qt.QuasitoricModel.from_edges(Y))] == [2, 1, 1, 1, 1, 1]
        assert [v.det for v in vertices(qt.QuasitoricModel.from_edges(X))] == [1] * 7

    def test_adjacency(self) -> None:
        model = qt.QuasitoricModel.from_edges(Y)
        last = model.vertex(5)
        assert last.first == model.edges[5]
        assert last.second == model.edges[0]
        assert model.vertex(6) == model.vertex(0)

    def test_positive_dets(self) -> None:
        for model in qt.random.random_models(100, seed=1):
            assert all(v.det >= 1 for v in vertices(model))

    def test_is_manifold(self) -> None:
        assert is_manifold(qt.QuasitoricModel.from_edges(X))
        assert not is_manifold(qt.QuasitoricModel.from_edges(Y))


class TestRotate:
    def test_rotate(self) -> None:
        model = qt.QuasitoricModel.from_edges(Y)
        rotated = rotate(model, 2)
        assert rotated.to_list() == [list(e) for e in Y[2:] + Y[:2]]
        assert rotate(model, len(model)) == model
        assert rotate(rotate(model, 4), 2) == model

    def test_vertex_dets_rotate(self) -> None:
        model = qt.QuasitoricModel.from_edges(Y)
        dets = [v.det for v in vertices(model)]
        for shift in range(len(model)):
            assert [v.det for v in vertices(rotate(model, shift))] == dets[shift:] + dets[:shift]


class TestWindingNumber:
    def test_fans(self) -> None:
        assert winding_number(qt.QuasitoricModel.from_edges(TRIANGLE)) == 1
        assert winding_number(qt.QuasitoricModel.from_edges(SQUARE)) == 1

    def test_model_x(self) -> None:
        # (0, 1) appears twice and the vectors go around the origin twice
        x = qt.QuasitoricModel.from_edges(X)
        assert winding_number(x) == 2
        assert winding_number(qt.QuasitoricModel.from_edges(Y)) == 2
        for shift in range(len(x)):
            assert winding_number(rotate(x, shift)) == 2

    def test_reversed(self) -> None:
        assert winding_number(qt.QuasitoricModel.from_edges(TRIANGLE[::-1])) == -1
        assert winding_number(qt.QuasitoricModel.from_edges(X[::-1])) == -2
