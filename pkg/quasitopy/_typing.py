from fractions import Fraction
from typing import (
    Sequence,
    Tuple,
    Union,
)

import numpy as np

# scalars

Rational = Fraction

# Either a float or a numpy array of floats. Chart computations broadcast, so an
# OrbitPoint may hold single coordinates or whole batches of sampled points.
FloatOrArray = Union[float, np.ndarray]

# A characteristic vector as it appears in a model document: ``[x, y]`` or ``(x, y)``.
IntPair = Union[Tuple[int, int], Sequence[int]]
