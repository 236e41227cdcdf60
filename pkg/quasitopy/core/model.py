"""
The combinatorial model (P, Lambda) of a four dimensional quasitoric orbifold.

Only the number of edges and the cyclic list of characteristic vectors matter: two
polygons with matching characteristic vectors give equivariantly diffeomorphic
orbifolds, so no polygon geometry is ever stored.

Conventions
-----------
* ``edges`` is listed in clockwise order around the polygon.
* Vertex ``i`` is where edge ``i`` meets edge ``i + 1 (mod m)``.
* The model is positively omnioriented when ``det2(edges[i], edges[i + 1]) > 0``
  for every vertex ``i``.
"""
from dataclasses import dataclass
import json
from typing import (
    Any,
    Dict,
    Iterable,
    List,
    Optional,
    Tuple,
)

import numpy as np

from quasitopy._typing import IntPair
from quasitopy.core.lattice import (
    LatticeVector,
    det2,
    is_primitive,
)
from quasitopy.errors import (
    ParseError,
    ValidationError,
)


@dataclass(frozen=True)
class Vertex:
    """Vertex ``index`` of a model, where ``first`` and ``second`` meet."""

    index: int
    first: LatticeVector
    second: LatticeVector
    det: int

    @property
    def is_smooth(self) -> bool:
        return abs(self.det) == 1


@dataclass(frozen=True)
class Finding:
    """One failed condition of a model: ``kind`` names it, ``index`` locates it."""

    kind: str
    reason: str
    index: Optional[int] = None

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"kind": self.kind}
        if self.index is not None:
            out["index"] = self.index
        out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class ValidationReport:
    valid: bool
    positively_omnioriented: bool
    failures: Tuple[Finding, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "valid": self.valid,
            "positively_omnioriented": self.positively_omnioriented,
        }
        if self.failures:
            out["failures"] = [finding.to_dict() for finding in self.failures]
        return out


@dataclass(frozen=True)
class QuasitoricModel:
    """
    Clockwise cyclic list of characteristic vectors.

    The constructor does not check anything so that invalid models can be
    reported on; use :meth:`from_edges` or :func:`parse_model` to get a checked
    model.

    Examples
    --------
    >>> X = QuasitoricModel.from_edges(
            [(1, 0), (0, 1), (-1, 2), (-2, 3), (1, -2), (0, 1), (-1, -1)]
        )
    >>> len(X)
    7
    """

    edges: Tuple[LatticeVector, ...]

    @classmethod
    def from_edges(cls, edges: Iterable[IntPair], validate: bool = True) -> "QuasitoricModel":
        model = cls(tuple(LatticeVector.from_pair(edge) for edge in edges))
        if validate:
            check_model(model, positive=False)
        return model

    def __len__(self) -> int:
        return len(self.edges)

    def edge(self, index: int) -> LatticeVector:
        return self.edges[index % len(self.edges)]

    def vertex(self, index: int) -> Vertex:
        first = self.edge(index)
        second = self.edge(index + 1)
        return Vertex(index % len(self.edges), first, second, det2(first, second))

    def vertices(self) -> List[Vertex]:
        return vertices(self)

    def to_list(self) -> List[List[int]]:
        return [edge.to_list() for edge in self.edges]


def validate(model: QuasitoricModel) -> ValidationReport:
    """
    Check the characteristic function conditions and positive omniorientation.

    Findings are collected, never raised.

    Parameters
    ----------
    model : QuasitoricModel

    Returns
    -------
    ValidationReport
        ``valid`` requires at least three edges, primitive vectors and linearly
        independent adjacent vectors; ``positively_omnioriented`` additionally
        requires every adjacent determinant to be positive.

    Examples
    --------
    >>> validate(QuasitoricModel.from_edges([(1, 0), (-1, 0), (0, 1)], validate=False))
    ValidationReport(valid=False, positively_omnioriented=False, failures=(...))
    """
    failures: List[Finding] = []
    n = len(model)

    if n < 3:
        failures.append(Finding("tooFewEdges", "a polygon needs at least 3 edges, got %d" % n))

    for index, edge in enumerate(model.edges):
        if not is_primitive(edge):
            msg = "edge vector %s is not primitive" % edge
            failures.append(Finding("notPrimitive", msg, index))

    dets = [det2(model.edges[i], model.edges[(i + 1) % n]) for i in range(n)]
    for index, det in enumerate(dets):
        if det == 0:
            failures.append(
                Finding(
                    "dependentAdjacent",
                    "edges %d and %d are linearly dependent" % (index, (index + 1) % n),
                    index,
                )
            )

    valid = not failures
    positive = valid and all(det > 0 for det in dets)
    return ValidationReport(valid, positive, tuple(failures))


def check_model(model: QuasitoricModel, positive: bool = True) -> ValidationReport:
    """
    Raise :class:`ValidationError` unless ``model`` is valid (and, when ``positive``
    is set, positively omnioriented).
    """
    report = validate(model)
    if not report.valid:
        msg = "invalid model: %s" % "; ".join(finding.reason for finding in report.failures)
        raise ValidationError(msg, report)
    if positive and not report.positively_omnioriented:
        msg = "model is not positively omnioriented"
        raise ValidationError(msg, report)
    return report


def vertices(model: QuasitoricModel) -> List[Vertex]:
    """
    The ``m`` vertices of ``model``; vertex ``i`` pairs edge ``i`` with edge ``i + 1``.

    Examples
    --------
    >>> [v.det for v in vertices(QuasitoricModel.from_edges([(1, 0), (0, 1), (-1, -1)]))]
    [1, 1, 1]
    """
    return [model.vertex(index) for index in range(len(model))]


def rotate(model: QuasitoricModel, shift: int) -> QuasitoricModel:
    """Relabel the edges cyclically so that edge ``shift`` comes first."""
    n = len(model)
    shift %= n
    return QuasitoricModel(model.edges[shift:] + model.edges[:shift])


def is_manifold(model: QuasitoricModel) -> bool:
    return all(vertex.is_smooth for vertex in vertices(model))


def winding_number(model: QuasitoricModel) -> int:
    """
    Number of times the characteristic vectors turn around the origin.

    Consecutive vectors turn by the angle in (-pi, pi) whose sign is that of the
    vertex determinant. A positively omnioriented model coming from a complete fan
    winds once; a quasitoric model may wind several times.

    Examples
    --------
    >>> X = QuasitoricModel.from_edges(
            [(1, 0), (0, 1), (-1, 2), (-2, 3), (1, -2), (0, 1), (-1, -1)]
        )
    >>> winding_number(X)
    2
    """
    pairs = [(vertex.first, vertex.second) for vertex in vertices(model)]
    dets = np.array([float(det2(u, v)) for u, v in pairs])
    dots = np.array([float(u.x * v.x + u.y * v.y) for u, v in pairs])
    turns = np.arctan2(dets, dots)
    return int(np.rint(turns.sum() / (2 * np.pi)))


def parse_model(text: bytes, validate: bool = True) -> QuasitoricModel:
    """
    Read a model document ``{"edges": [[x, y], ...]}``.

    Keys other than ``"edges"`` are ignored, so the documents written by the
    command line front end can be read back.

    Parameters
    ----------
    text : bytes or str
        UTF-8 JSON document.
    validate : bool, default True
        Run :func:`check_model` (without the positivity requirement).

    Raises
    ------
    ParseError
        If the document is not of the documented form.
    ValidationError
        If ``validate`` is set and the model is invalid.
    """
    try:
        document = json.loads(text)
    except (ValueError, UnicodeDecodeError) as exc:
        raise ParseError("malformed JSON: %s" % exc) from exc

    if not isinstance(document, dict) or "edges" not in document:
        raise ParseError('expected an object with an "edges" member')

    raw_edges = document["edges"]
    if not isinstance(raw_edges, list):
        raise ParseError('"edges" must be a list of integer pairs')

    edges = []
    for index, pair in enumerate(raw_edges):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(c, int) and not isinstance(c, bool) for c in pair)
        ):
            msg = "edge %d is not an integer pair: %r" % (index, pair)
            raise ParseError(msg)
        edges.append(LatticeVector(pair[0], pair[1]))

    model = QuasitoricModel(tuple(edges))
    if validate:
        check_model(model, positive=False)
    return model


def model_document(model: QuasitoricModel) -> Dict[str, Any]:
    return {"edges": model.to_list()}


def serialize_model(model: QuasitoricModel) -> bytes:
    """
    Canonical form of a model document: minimal whitespace, edges in stored order.

    Examples
    --------
    >>> serialize_model(QuasitoricModel.from_edges([(1, 0), (0, 1), (-1, -1)]))
    b'{"edges":[[1,0],[0,1],[-1,-1]]}'
    """
    return json.dumps(model_document(model), separators=(",", ":")).encode("utf-8")
