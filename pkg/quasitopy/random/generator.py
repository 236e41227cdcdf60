import logging
from typing import (
    List,
    Optional,
    Tuple,
)

import numpy as np

from quasitopy.birational.blowdown import (
    crepant_blowup,
    insertion_position,
)
from quasitopy.core.lattice import (
    LatticeVector,
    det2,
    is_primitive,
)
from quasitopy.core.model import (
    QuasitoricModel,
    validate,
    winding_number,
)
from quasitopy.invariants.localgroup import singular_vertices

logger = logging.getLogger(__name__)

MAX_TRIES = 100000


def _primitive_vector(rng: np.random.Generator, bound: int) -> LatticeVector:
    while True:
        x, y = rng.integers(-bound, bound + 1, 2)
        v = LatticeVector(int(x), int(y))
        if is_primitive(v):
            return v


def _primitive_vectors(rng: np.random.Generator, size: int, bound: int) -> List[LatticeVector]:
    vectors: List[LatticeVector] = []
    while len(vectors) < size:
        v = _primitive_vector(rng, bound)
        if v not in vectors:
            vectors.append(v)
    return vectors


def random_model(
    rng: Optional[np.random.Generator] = None, max_edges: int = 8, bound: int = 9
) -> QuasitoricModel:
    """Generate a random valid, positively omnioriented model.

    Primitive vectors with entries in ``[-bound, bound]`` are sorted by angle; the
    draw is rejected unless every angular gap between consecutive vectors is less
    than pi, which makes every vertex determinant positive.

    Parameters
    ----------
    rng : numpy.random.Generator, optional
        Defaults to ``np.random.default_rng()``.
    max_edges : int, default 8
        The number of edges is drawn uniformly from ``3..max_edges``.
    bound : int, default 9

    Returns
    -------
    QuasitoricModel
    """
    if rng is None:
        rng = np.random.default_rng()
    if max_edges < 3 or bound < 1:
        msg = "need max_edges >= 3 and bound >= 1, got %r, %r" % (max_edges, bound)
        raise ValueError(msg)

    for attempt in range(MAX_TRIES):
        n = int(rng.integers(3, max_edges + 1))
        vectors = _primitive_vectors(rng, n, bound)
        angles = np.array([np.arctan2(v.y, v.x) for v in vectors])
        order = np.argsort(angles)
        gaps = np.diff(np.append(angles[order], angles[order][0] + 2 * np.pi))
        if np.any(gaps >= np.pi):
            continue

        model = QuasitoricModel(tuple(vectors[i] for i in order))
        if validate(model).positively_omnioriented:
            logger.debug("random_model: %d-gon after %d attempts", n, attempt + 1)
            return model

    msg = "no model found after %d attempts" % MAX_TRIES
    raise RuntimeError(msg)


def random_walk_model(
    rng: Optional[np.random.Generator] = None,
    max_edges: int = 8,
    bound: int = 9,
    min_winding: int = 1,
) -> QuasitoricModel:
    """Generate a random positively omnioriented model by a walk.

    Each next primitive vector is drawn until ``det2(previous, next) > 0``, and the
    walk is kept when the last vector and the first also have positive
    determinant. Vectors may repeat, so the list can wind around the origin several
    times and need not come from a fan.

    Parameters
    ----------
    rng : numpy.random.Generator, optional
        Defaults to ``np.random.default_rng()``.
    max_edges : int, default 8
    bound : int, default 9
    min_winding : int, default 1
        Walks with a smaller :func:`~quasitopy.core.model.winding_number` are
        rejected. Winding ``w`` needs at least ``2 w + 1`` edges.

    Returns
    -------
    QuasitoricModel
    """
    if rng is None:
        rng = np.random.default_rng()
    if bound < 1 or min_winding < 1 or max_edges < 2 * min_winding + 1:
        msg = "need bound >= 1, min_winding >= 1 and max_edges >= 2 * min_winding + 1"
        msg += ", got max_edges=%r, bound=%r, min_winding=%r" % (max_edges, bound, min_winding)
        raise ValueError(msg)

    for attempt in range(MAX_TRIES):
        n = int(rng.integers(2 * min_winding + 1, max_edges + 1))
        edges = [_primitive_vector(rng, bound)]
        while len(edges) < n:
            v = _primitive_vector(rng, bound)
            if det2(edges[-1], v) > 0:
                edges.append(v)
        if det2(edges[-1], edges[0]) <= 0:
            continue

        model = QuasitoricModel(tuple(edges))
        winding = winding_number(model)
        if winding >= min_winding:
            logger.debug(
                "random_walk_model: %d-gon winding %d after %d attempts", n, winding, attempt + 1
            )
            return model

    msg = "no walk found after %d attempts" % MAX_TRIES
    raise RuntimeError(msg)


def _mixed_model(rng: np.random.Generator, max_edges: int, bound: int) -> QuasitoricModel:
    # a fan or, when there is room for it, a walk winding at least twice
    if max_edges >= 5 and rng.integers(2):
        return random_walk_model(rng, max_edges, bound, min_winding=2)
    return random_model(rng, max_edges, bound)


def random_models(
    n: int, seed: int = 0, max_edges: int = 8, bound: int = 9
) -> List[QuasitoricModel]:
    """``n`` models determined by ``seed``.

    Each model comes from :func:`random_model` or, with probability one half, from
    :func:`random_walk_model` with winding number at least 2.
    """
    rng = np.random.default_rng(seed)
    return [_mixed_model(rng, max_edges, bound) for _ in range(n)]


def an_model(n: int) -> QuasitoricModel:
    """A 4-gon with one vertex of type 1/(n+1) (1, n) and smooth elsewhere.

    Examples
    --------
    >>> an_model(2).to_list()
    [[1, 0], [-2, 3], [-1, 1], [0, -1]]
    """
    if n < 1:
        msg = "n must be positive, got %r" % n
        raise ValueError(msg)
    return QuasitoricModel.from_edges([(1, 0), (-n, n + 1), (-1, 1), (0, -1)])


def crepant_model(
    rng: Optional[np.random.Generator] = None, max_edges: int = 8, bound: int = 9
) -> Tuple[QuasitoricModel, int]:
    """Generate a random model together with an edge whose blowdown is crepant.

    A random model (drawn as in :func:`random_models`) with a vertex admitting a
    crepant blowup is drawn and blown up there.

    Returns
    -------
    (QuasitoricModel, int)
        The blown up model and the index of the inserted edge.
    """
    if rng is None:
        rng = np.random.default_rng()

    for attempt in range(MAX_TRIES):
        model = _mixed_model(rng, max_edges, bound)
        candidates = [i for i in singular_vertices(model) if crepant_blowup(model, i) is not None]
        if not candidates:
            continue

        vertex_index = int(rng.choice(candidates))
        result = crepant_blowup(model, vertex_index)
        assert result is not None
        blown_up, inserted = result
        edge_index = insertion_position(vertex_index, len(model))
        assert blown_up.edge(edge_index) == inserted
        logger.debug("crepant_model: vertex %d after %d attempts", vertex_index, attempt + 1)
        return blown_up, edge_index

    msg = "no model with a crepant blowup found after %d attempts" % MAX_TRIES
    raise RuntimeError(msg)
