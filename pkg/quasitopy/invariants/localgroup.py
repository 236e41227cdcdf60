"""
Local groups G_v = N / N(v) at the vertices of a model.

An element is represented by ``g = a1 * first + a2 * second`` with rational
coefficients reduced into [0, 1). It acts on the vertex chart by

    g . (z1, z2) = (exp(2 pi i a2) z1, exp(2 pi i a1) z2)

Note the swap: ``a2`` rotates ``z1`` and ``a1`` rotates ``z2``. The SL test does not
see the swap, but :func:`singularity_type` does.
"""
from dataclasses import dataclass
from fractions import Fraction
import functools
import logging
from typing import (
    List,
    NamedTuple,
    Tuple,
)

import numpy as np
import pandas as pd

from quasitopy._typing import Rational
from quasitopy.core.model import (
    QuasitoricModel,
    Vertex,
    vertices,
)

logger = logging.getLogger(__name__)

# largest magnitude for which the grid can be evaluated in int64 without overflow
_INT64_SAFE = 2 ** 62


def _frac_part(value: Rational) -> Rational:
    return value - (value.numerator // value.denominator)


@dataclass(frozen=True, order=True)
class LocalGroupElement:
    """
    Element of a local group with coefficients ``(a1, a2)`` in [0, 1)^2.

    ``weight1`` and ``weight2`` are the rotation exponents on ``z1`` and ``z2``;
    ``age`` is their sum (the degree shifting number).
    """

    a1: Rational
    a2: Rational
    weight1: Rational
    weight2: Rational
    age: Rational

    @classmethod
    def from_coefficients(cls, a1: Rational, a2: Rational) -> "LocalGroupElement":
        a1 = _frac_part(Fraction(a1))
        a2 = _frac_part(Fraction(a2))
        return cls(a1, a2, a2, a1, a1 + a2)

    @property
    def is_identity(self) -> bool:
        return self.a1 == 0 and self.a2 == 0

    def __add__(self, other: "LocalGroupElement") -> "LocalGroupElement":
        return LocalGroupElement.from_coefficients(self.a1 + other.a1, self.a2 + other.a2)

    def inverse(self) -> "LocalGroupElement":
        return LocalGroupElement.from_coefficients(-self.a1, -self.a2)


class SingularityType(NamedTuple):
    """Cyclic quotient type 1/d (1, q)."""

    order: int
    weight: int

    def __str__(self) -> str:
        return "1/%d(1,%d)" % (self.order, self.weight)


class TwistedSector(NamedTuple):
    vertex_index: int
    element: LocalGroupElement


@dataclass(frozen=True)
class LocalGroup:
    vertex: Vertex
    order: int
    elements: Tuple[LocalGroupElement, ...]

    def identity(self) -> LocalGroupElement:
        return next(g for g in self.elements if g.is_identity)

    def nontrivial(self) -> List[LocalGroupElement]:
        return [g for g in self.elements if not g.is_identity]

    def generator(self) -> LocalGroupElement:
        """The element with ``weight1 = 1/d``; it generates the group."""
        target = Fraction(1, self.order)
        if self.order == 1:
            return self.identity()
        return next(g for g in self.elements if g.weight1 == target)

    def is_cyclic(self) -> bool:
        """Whether the multiples of :meth:`generator` exhaust the group."""
        generator = self.generator()
        seen = set()
        current = self.identity()
        for _ in range(self.order):
            seen.add(current)
            current = current + generator
        return current.is_identity and seen == set(self.elements)


def _grid(vertex: Vertex, d: int) -> np.ndarray:
    """
    Indices ``(i, j)`` of the d x d grid with ``(i/d) first + (j/d) second`` integral.
    """
    u, v = vertex.first, vertex.second
    bound = max(abs(u.x), abs(u.y), abs(v.x), abs(v.y), 1) * d * 2
    if bound < _INT64_SAFE:
        index = np.arange(d * d, dtype=np.int64)
    else:
        index = np.array(range(d * d), dtype=object)

    i, j = index // d, index % d
    xs = i * u.x + j * v.x
    ys = i * u.y + j * v.y
    mask = ((xs % d == 0) & (ys % d == 0)).astype(bool)
    return np.stack([i[mask], j[mask]], axis=1)


@functools.lru_cache(maxsize=4096)
def local_group(vertex: Vertex) -> LocalGroup:
    """
    Enumerate the local group at ``vertex`` over the exhaustive rational grid.

    Parameters
    ----------
    vertex : Vertex
        A vertex of a valid model, so ``d = |det| >= 1``.

    Returns
    -------
    LocalGroup
        ``d`` elements in lexicographic ``(a1, a2)`` order, identity first.

    Examples
    --------
    >>> g = local_group(QuasitoricModel.from_edges([(1, 0), (2, 3), (-1, -1)]).vertex(0))
    >>> [str(e.age) for e in g.elements]
    ['0', '2/3', '4/3']
    """
    d = abs(vertex.det)
    grid = _grid(vertex, d)
    logger.debug("vertex %d: %d grid points of %d are integral", vertex.index, len(grid), d * d)

    elements = tuple(
        LocalGroupElement.from_coefficients(Fraction(int(i), d), Fraction(int(j), d))
        for i, j in grid
    )
    return LocalGroup(vertex, d, elements)


def is_SL(vertex: Vertex) -> bool:
    """
    Whether the local group acts inside SL(2, C), i.e. ``a1 + a2`` is an integer for
    every element (every nontrivial element has age 1).
    """
    return all((g.a1 + g.a2).denominator == 1 for g in local_group(vertex).elements)


def singularity_type(vertex: Vertex) -> SingularityType:
    """
    Normal form 1/d (1, q) of the singularity at ``vertex``.

    Examples
    --------
    >>> str(singularity_type(QuasitoricModel.from_edges([(1, 0), (-2, 3), (0, -1)]).vertex(0)))
    '1/3(1,2)'
    """
    group = local_group(vertex)
    if group.order == 1:
        return SingularityType(1, 0)
    weight = group.generator().weight2 * group.order
    return SingularityType(group.order, int(weight))


def twisted_sectors(model: QuasitoricModel) -> List[TwistedSector]:
    """
    All pairs (vertex, nontrivial element), ordered by vertex index and then by
    ``(a1, a2)``.
    """
    return [
        TwistedSector(vertex.index, element)
        for vertex in vertices(model)
        for element in local_group(vertex).nontrivial()
    ]


def singular_vertices(model: QuasitoricModel) -> List[int]:
    return [vertex.index for vertex in vertices(model) if not vertex.is_smooth]


def is_SL_model(model: QuasitoricModel) -> bool:
    return all(is_SL(vertex) for vertex in vertices(model))


def vertex_frame(model: QuasitoricModel) -> pd.DataFrame:
    """
    Per vertex summary: adjacent vectors, determinant, group order, type, SL flag.
    """
    rows = []
    for vertex in vertices(model):
        rows.append(
            {
                "first": str(vertex.first),
                "second": str(vertex.second),
                "det": vertex.det,
                "order": abs(vertex.det),
                "type": str(singularity_type(vertex)),
                "sl": is_SL(vertex),
            }
        )
    frame = pd.DataFrame(rows, columns=["first", "second", "det", "order", "type", "sl"])
    frame.index.name = "vertex"
    return frame
