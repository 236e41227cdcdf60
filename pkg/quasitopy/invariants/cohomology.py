"""
Betti numbers of the underlying space, Chen-Ruan Betti numbers, Todd genus.
"""
from collections import Counter
from fractions import Fraction
from typing import (
    Dict,
    Mapping,
    Optional,
    Tuple,
    Union,
)

import numpy as np
import pandas as pd

from quasitopy._typing import Rational
from quasitopy.core.model import (
    QuasitoricModel,
    check_model,
    vertices,
)
from quasitopy.errors import (
    GenericityFailure,
    NotAManifold,
)
from quasitopy.invariants.localgroup import (
    local_group,
    twisted_sectors,
)

Degree = Union[int, Rational]

# largest magnitude for which pairings can be evaluated in int64 without overflow
_INT64_SAFE = 2 ** 31


def render_degree(degree: Degree) -> str:
    """``"n"`` for integral degrees, ``"p/q"`` in lowest terms otherwise."""
    return str(Fraction(degree))


class BettiTable(pd.Series):
    """
    Dimension of the cohomology in each degree; absent degrees have dimension 0.

    Examples
    --------
    >>> singular_betti(QuasitoricModel.from_edges([(1, 0), (0, 1), (-1, -1)]))
    degree
    0    1
    2    1
    4    1
    Name: dimension, dtype: int64
    """

    @property
    def _constructor(self):
        return type(self)

    @classmethod
    def from_dimensions(cls, dimensions: Mapping[Degree, int]) -> "BettiTable":
        degrees = sorted(d for d, dim in dimensions.items() if dim)
        table = cls([dimensions[d] for d in degrees], index=degrees, dtype="int64")
        table.index.name = "degree"
        table.name = "dimension"
        return table

    def total(self) -> int:
        return int(self.sum())

    def to_json_dict(self) -> Dict[str, int]:
        return {render_degree(degree): int(dim) for degree, dim in self.items()}


class CRBettiTable(BettiTable):
    """Chen-Ruan Betti numbers, indexed by exact rational degree."""


def singular_betti(model: QuasitoricModel) -> BettiTable:
    """
    Betti numbers of the underlying space: 1, m - 2, 1 in degrees 0, 2, 4.
    """
    m = len(model)
    return BettiTable.from_dimensions({0: 1, 2: m - 2, 4: 1})


def cr_betti(model: QuasitoricModel) -> CRBettiTable:
    """
    Chen-Ruan Betti numbers.

    Each twisted sector (v, g) adds one dimension in degree ``2 * age(g)`` to the
    Betti numbers of the underlying space.

    Parameters
    ----------
    model : QuasitoricModel
        A valid model.

    Returns
    -------
    CRBettiTable

    Examples
    --------
    >>> T = QuasitoricModel.from_edges([(1, 0), (2, 3), (-1, -1)])
    >>> cr_betti(T).to_json_dict()
    {'0': 1, '4/3': 1, '2': 1, '8/3': 1, '4': 1}
    """
    dimensions: Counter = Counter()
    for degree, dim in singular_betti(model).items():
        dimensions[Fraction(degree)] += int(dim)
    for sector in twisted_sectors(model):
        dimensions[2 * sector.element.age] += 1
    return CRBettiTable.from_dimensions(dimensions)


def cr_total_dimension(model: QuasitoricModel) -> int:
    """``m + sum(|G_v| - 1)``, counted from the local groups."""
    return len(model) + sum(local_group(vertex).order - 1 for vertex in vertices(model))


def _dual_bases(model: QuasitoricModel) -> np.ndarray:
    """
    Array of shape (m, 2, 2): for each vertex with pair (u, v) the rows
    (v_y, -v_x) and (-u_y, u_x), dual to (u, v) when det2(u, v) = 1.

    Entries are int64 while every coordinate is below ``_INT64_SAFE`` and Python
    ints (object dtype) beyond.
    """
    rows = [[[v.second.y, -v.second.x], [-v.first.y, v.first.x]] for v in vertices(model)]
    bound = max(abs(c) for edge in model.to_list() for c in edge)
    dtype = np.int64 if bound < _INT64_SAFE else object
    return np.array(rows, dtype=dtype)


def _index_count(mu: np.ndarray, direction: Tuple[int, int]) -> int:
    nu = (int(direction[0]), int(direction[1]))
    if mu.dtype == object or max(abs(nu[0]), abs(nu[1])) >= _INT64_SAFE:
        pairings = mu.astype(object) @ np.array(nu, dtype=object)
    else:
        pairings = mu @ np.array(nu, dtype=np.int64)
    negative = np.array(pairings < 0, dtype=bool)
    if np.any(np.array(pairings == 0, dtype=bool)):
        msg = "direction %r is orthogonal to a weight" % (direction,)
        raise GenericityFailure(msg)
    index = negative.sum(axis=1)
    return int((index == 0).sum())


def todd_genus(model: QuasitoricModel, direction: Optional[Tuple[int, int]] = None) -> int:
    """
    Todd genus of a positively omnioriented quasitoric manifold.

    For a generic direction nu the index of a vertex is the number of dual basis
    vectors pairing negatively with nu; the Todd genus is the number of vertices of
    index 0.

    Parameters
    ----------
    model : QuasitoricModel
        Valid, positively omnioriented, every vertex determinant equal to 1.
    direction : tuple of int, optional
        The direction nu. By default ``(B, 1)`` with ``B`` one more than the largest
        dual basis coefficient, which is always generic.

    Returns
    -------
    int

    Raises
    ------
    NotAManifold
        If some vertex determinant differs from 1.
    GenericityFailure
        If an explicit ``direction`` is orthogonal to some dual basis vector.

    References
    ----------
    .. [1] V. Buchstaber, T. Panov, *Toric Topology*, AMS 2015, chapter 9.

    Examples
    --------
    >>> todd_genus(QuasitoricModel.from_edges([(1, 0), (0, 1), (-1, -1)]))
    1
    """
    check_model(model)
    for vertex in vertices(model):
        if vertex.det != 1:
            msg = "vertex %d has determinant %d" % (vertex.index, vertex.det)
            raise NotAManifold(msg)

    mu = _dual_bases(model)
    if direction is not None:
        return _index_count(mu, direction)

    bound = 1 + int(np.abs(mu).max())
    while True:
        try:
            return _index_count(mu, (bound, 1))
        except GenericityFailure:
            bound += 1
