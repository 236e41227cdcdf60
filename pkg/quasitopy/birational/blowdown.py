"""
Blowdowns and blowups of quasitoric orbifolds.

Combinatorially a blowdown deletes an edge E2 (vector lambda2) and lets its
neighbours E1, E3 meet at a new vertex w. Only the case with a smooth endpoint on E2
is handled: up to a change of basis of N, lambda1 = (1, 0), lambda2 = (0, 1) and
lambda3 = (-k, m) with 0 < k <= m. The vertex (lambda2, lambda3) then has local
group Z_k and w has local group Z_m.
"""
from dataclasses import dataclass
from enum import Enum
import logging
from typing import (
    Any,
    Dict,
    List,
    Optional,
    Tuple,
)

from quasitopy.core.lattice import (
    LatticeVector,
    det2,
    unimodular_complement,
)
from quasitopy.core.model import (
    QuasitoricModel,
    check_model,
)
from quasitopy.errors import (
    IndexOutOfRange,
    NotAdmissible,
    TooFewEdges,
)

logger = logging.getLogger(__name__)


class Side(Enum):
    """Which endpoint of the deleted edge is the smooth one."""

    FIRST = "first"
    SECOND = "second"


@dataclass(frozen=True)
class BlowdownSite:
    """
    An admissible edge deletion.

    ``lambda1`` precedes and ``lambda3`` follows ``lambda2 = edges[edge_index]``.
    With ``smooth_side`` FIRST, det2(lambda1, lambda2) = 1, ``k = det2(lambda2,
    lambda3)`` and ``m = det2(lambda1, lambda3)``; SECOND mirrors this with
    det2(lambda2, lambda3) = 1 and ``k = det2(lambda1, lambda2)``.
    """

    edge_index: int
    lambda1: LatticeVector
    lambda2: LatticeVector
    lambda3: LatticeVector
    smooth_side: Side
    k: int
    m: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "edge": self.edge_index,
            "lambda1": self.lambda1.to_list(),
            "lambda2": self.lambda2.to_list(),
            "lambda3": self.lambda3.to_list(),
            "smooth_side": self.smooth_side.value,
            "k": self.k,
            "m": self.m,
        }


def _check_index(index: int, n: int, what: str) -> None:
    if not 0 <= index < n:
        msg = "%s index %d out of range for a model with %d edges" % (what, index, n)
        raise IndexOutOfRange(msg)


def blowdown_site(model: QuasitoricModel, edge_index: int) -> BlowdownSite:
    """
    Check whether the edge ``edge_index`` can be blown down.

    The conditions are det2(lambda1, lambda2) = 1 and
    0 < det2(lambda2, lambda3) <= det2(lambda1, lambda3), or their mirror image with
    the roles of the two endpoints exchanged. When both hold the first endpoint is
    used.

    Parameters
    ----------
    model : QuasitoricModel
        Valid, positively omnioriented, at least 4 edges.
    edge_index : int

    Returns
    -------
    BlowdownSite

    Raises
    ------
    TooFewEdges
        If the model is a triangle.
    NotAdmissible
        With ``reason`` ``neighborsDependent`` when lambda1 and lambda3 are parallel,
        ``noSmoothEndpoint`` when neither endpoint of the edge is smooth and
        ``inequalityFails`` otherwise.

    Examples
    --------
    >>> X = QuasitoricModel.from_edges(
            [(1, 0), (0, 1), (-1, 2), (-2, 3), (1, -2), (0, 1), (-1, -1)]
        )
    >>> site = blowdown_site(X, 1)
    >>> site.k, site.m, site.smooth_side
    (1, 2, <Side.FIRST: 'first'>)
    """
    check_model(model)
    n = len(model)
    if n < 4:
        msg = "cannot blow down an edge of a %d-gon" % n
        raise TooFewEdges(msg)
    _check_index(edge_index, n, "edge")

    lambda1 = model.edge(edge_index - 1)
    lambda2 = model.edge(edge_index)
    lambda3 = model.edge(edge_index + 1)
    det12 = det2(lambda1, lambda2)
    det23 = det2(lambda2, lambda3)
    det13 = det2(lambda1, lambda3)

    if det13 == 0:
        msg = "neighbours %s and %s of edge %d are linearly dependent" % (
            lambda1,
            lambda3,
            edge_index,
        )
        raise NotAdmissible(msg, reason="neighborsDependent")

    if det12 == 1 and 0 < det23 <= det13:
        return BlowdownSite(edge_index, lambda1, lambda2, lambda3, Side.FIRST, det23, det13)
    if det23 == 1 and 0 < det12 <= det13:
        return BlowdownSite(edge_index, lambda1, lambda2, lambda3, Side.SECOND, det12, det13)

    if det12 != 1 and det23 != 1:
        msg = "neither endpoint of edge %d is smooth (determinants %d, %d)" % (
            edge_index,
            det12,
            det23,
        )
        raise NotAdmissible(msg, reason="noSmoothEndpoint")

    msg = "edge %d fails 0 < k <= m (determinants %d, %d, %d)" % (
        edge_index,
        det12,
        det23,
        det13,
    )
    raise NotAdmissible(msg, reason="inequalityFails")


def blowdown_sites(model: QuasitoricModel) -> List[BlowdownSite]:
    """All admissible sites of ``model``, by edge index; empty for a triangle."""
    if len(model) < 4:
        return []
    sites = []
    for edge_index in range(len(model)):
        try:
            sites.append(blowdown_site(model, edge_index))
        except NotAdmissible:
            continue
    return sites


def _check_site(model: QuasitoricModel, site: BlowdownSite) -> None:
    n = len(model)
    _check_index(site.edge_index, n, "edge")
    neighbourhood = (
        model.edge(site.edge_index - 1),
        model.edge(site.edge_index),
        model.edge(site.edge_index + 1),
    )
    if neighbourhood != (site.lambda1, site.lambda2, site.lambda3):
        msg = "site at edge %d does not belong to this model" % site.edge_index
        raise ValueError(msg)


def blowdown(model: QuasitoricModel, site: BlowdownSite) -> QuasitoricModel:
    """
    Delete the edge of ``site``; the new vertex (lambda1, lambda3) has determinant
    ``site.m``.
    """
    _check_site(model, site)
    edges = model.edges[: site.edge_index] + model.edges[site.edge_index + 1 :]
    return QuasitoricModel(edges)


def image_vertex(model: QuasitoricModel, site: BlowdownSite) -> int:
    """Index of the vertex (lambda1, lambda3) in ``blowdown(model, site)``."""
    return (site.edge_index - 1) % (len(model) - 1)


def is_crepant(site: BlowdownSite) -> bool:
    """
    Whether the blowdown pulls the canonical sheaf back to the canonical sheaf,
    i.e. ``k + 1 = m``.

    Equivalently det2(lambda1, lambda3) = det2(lambda1, lambda2) + det2(lambda2,
    lambda3), which is symmetric in the two endpoints.
    """
    return site.k + 1 == site.m


def euler_change(site: BlowdownSite) -> int:
    """
    Change of the total Chen-Ruan dimension under the blowdown: the edge and the
    Z_k vertex (1 + k) are replaced by the Z_m vertex (m).
    """
    return site.m - (site.k + 1)


def insertion_position(vertex_index: int, n: int) -> int:
    """
    Position of the edge inserted by a blowup at ``vertex_index`` of an ``n``-gon.

    The wrap vertex ``n - 1`` inserts in front, so that a blowup at
    :func:`image_vertex` restores the edge list of the blown down model exactly,
    except after deleting the last edge, where the list comes back rotated by
    one place.
    """
    return vertex_index + 1 if vertex_index < n - 1 else 0


def _inserted_vector(lambda1: LatticeVector, lambda3: LatticeVector, side: Side) -> LatticeVector:
    m = det2(lambda1, lambda3)
    if side is Side.FIRST:
        base = unimodular_complement(lambda1)
        offset = det2(base, lambda3)
        k = (offset - 1) % m + 1
        return base + ((k - offset) // m) * lambda1

    # det2(-w, lambda3) = det2(lambda3, w) = 1
    base = -unimodular_complement(lambda3)
    offset = det2(lambda1, base)
    k = (offset - 1) % m + 1
    return base + ((k - offset) // m) * lambda3


def blowup(
    model: QuasitoricModel, vertex_index: int, side: Side = Side.FIRST
) -> Tuple[QuasitoricModel, LatticeVector]:
    """
    Insert a new edge at a vertex, inverting a blowdown.

    With ``side`` FIRST the inserted vector lambda2 satisfies det2(lambda1, lambda2)
    = 1 and det2(lambda2, lambda3) in [1, m], which fixes it uniquely; SECOND is the
    mirror image.

    Parameters
    ----------
    model : QuasitoricModel
        Valid and positively omnioriented.
    vertex_index : int
    side : Side, default Side.FIRST

    Returns
    -------
    (QuasitoricModel, LatticeVector)
        The blown up model and the inserted vector.

    Examples
    --------
    >>> Y = QuasitoricModel.from_edges([(1, 0), (-1, 2), (-2, 3), (1, -2), (0, 1), (-1, -1)])
    >>> X, inserted = blowup(Y, 0)
    >>> inserted
    LatticeVector(x=0, y=1)
    """
    check_model(model)
    n = len(model)
    _check_index(vertex_index, n, "vertex")

    vertex = model.vertex(vertex_index)
    inserted = _inserted_vector(vertex.first, vertex.second, side)
    position = insertion_position(vertex_index, n)
    edges = model.edges[:position] + (inserted,) + model.edges[position:]
    return QuasitoricModel(edges), inserted


def _site_k(
    lambda1: LatticeVector, lambda2: LatticeVector, lambda3: LatticeVector, side: Side
) -> int:
    return det2(lambda2, lambda3) if side is Side.FIRST else det2(lambda1, lambda2)


def crepant_blowup(
    model: QuasitoricModel, vertex_index: int
) -> Optional[Tuple[QuasitoricModel, LatticeVector]]:
    """
    The blowup at ``vertex_index`` whose blowdown is crepant, if there is one.

    Present exactly when the vertex is singular of type 1/m (1, m - 1).
    """
    check_model(model)
    _check_index(vertex_index, len(model), "vertex")
    vertex = model.vertex(vertex_index)
    for side in Side:
        inserted = _inserted_vector(vertex.first, vertex.second, side)
        if _site_k(vertex.first, inserted, vertex.second, side) + 1 == vertex.det:
            return blowup(model, vertex_index, side)
    return None


def resolve_vertex(
    model: QuasitoricModel, vertex_index: int
) -> Tuple[QuasitoricModel, List[LatticeVector]]:
    """
    Resolve the singularity at ``vertex_index`` by repeated FIRST side blowups.

    Each step replaces a vertex of determinant m by vertices of determinant 1 and
    k <= m - 1, so the loop ends.

    Returns
    -------
    (QuasitoricModel, list of LatticeVector)
        The resolved model and the inserted vectors in order.

    Examples
    --------
    >>> M = QuasitoricModel.from_edges([(1, 0), (-2, 3), (-1, 1), (0, -1)])
    >>> resolve_vertex(M, 0)[1]
    [LatticeVector(x=0, y=1), LatticeVector(x=-1, y=2)]
    """
    check_model(model)
    _check_index(vertex_index, len(model), "vertex")
    inserted: List[LatticeVector] = []
    current = vertex_index
    while model.vertex(current).det != 1:
        logger.debug("resolving vertex %d of determinant %d", current, model.vertex(current).det)
        position = insertion_position(current, len(model))
        model, vector = blowup(model, current, Side.FIRST)
        inserted.append(vector)
        # the remaining singular vertex pairs the inserted edge with lambda3
        current = position
    return model, inserted


def resolve_all(model: QuasitoricModel) -> Tuple[QuasitoricModel, List[LatticeVector]]:
    """Resolve every singular vertex, lowest index first."""
    check_model(model)
    inserted: List[LatticeVector] = []
    index = 0
    while index < len(model):
        if model.vertex(index).det != 1:
            model, vectors = resolve_vertex(model, index)
            inserted.extend(vectors)
        index += 1
    return model, inserted
