"""
Exact integer linear algebra on the rank two lattice N.

Python integers are unbounded, so determinants and Bezout coefficients can never
overflow however long a resolution chain grows.
"""
from dataclasses import dataclass
import math
from typing import (
    Iterator,
    List,
    Tuple,
)

from quasitopy._typing import IntPair
from quasitopy.errors import NotPrimitive


@dataclass(frozen=True, order=True)
class LatticeVector:
    """
    A characteristic vector in N = Z^2.

    Primitivity is not enforced on construction, use :func:`is_primitive`.

    Examples
    --------
    >>> u = LatticeVector(1, 0)
    >>> u + 2 * LatticeVector(0, 1)
    LatticeVector(x=1, y=2)
    """

    x: int
    y: int

    @classmethod
    def from_pair(cls, pair: IntPair) -> "LatticeVector":
        x, y = pair
        return cls(int(x), int(y))

    def __add__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "LatticeVector") -> "LatticeVector":
        return LatticeVector(self.x - other.x, self.y - other.y)

    def __neg__(self) -> "LatticeVector":
        return LatticeVector(-self.x, -self.y)

    def __mul__(self, scalar: int) -> "LatticeVector":
        return LatticeVector(scalar * self.x, scalar * self.y)

    __rmul__ = __mul__

    def __iter__(self) -> Iterator[int]:
        yield self.x
        yield self.y

    def to_list(self) -> List[int]:
        return [self.x, self.y]

    def __str__(self) -> str:
        return "(%d,%d)" % (self.x, self.y)


def det2(u: LatticeVector, v: LatticeVector) -> int:
    """
    Determinant of the matrix with columns ``u`` and ``v``.

    Examples
    --------
    >>> det2(LatticeVector(1, 0), LatticeVector(-1, 2))
    2
    """
    return u.x * v.y - u.y * v.x


def is_primitive(v: LatticeVector) -> bool:
    """
    Whether ``v`` is primitive, i.e. gcd(|x|, |y|) = 1. The zero vector is not.
    """
    return math.gcd(v.x, v.y) == 1


def _extended_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """Return ``(g, s, t)`` with ``a * s + b * t = g = gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def _complement_key(v: LatticeVector) -> Tuple[int, int, int, int]:
    return (abs(v.x), abs(v.y), v.x, v.y)


def unimodular_complement(u: LatticeVector) -> LatticeVector:
    """
    Canonical vector ``v`` with ``det2(u, v) = 1``.

    All solutions form the line ``v0 + t * u``; the one returned is the smallest
    under the ordering ``(|x|, |y|, x, y)``.

    Parameters
    ----------
    u : LatticeVector
        A primitive vector.

    Returns
    -------
    LatticeVector

    Raises
    ------
    NotPrimitive
        If ``u`` is not primitive.

    Examples
    --------
    >>> unimodular_complement(LatticeVector(0, 1))
    LatticeVector(x=-1, y=0)
    """
    if not is_primitive(u):
        msg = "vector %s is not primitive" % u
        raise NotPrimitive(msg)

    # u.x * s + u.y * t = 1, so (x, y) = (-t, s) has det2(u, (x, y)) = 1
    _, s, t = _extended_gcd(u.x, u.y)
    v0 = LatticeVector(-t, s)

    shifts = set()
    for coordinate, step in ((v0.x, u.x), (v0.y, u.y)):
        if step:
            base = (-coordinate) // step
            shifts.update((base, base + 1))

    return min((v0 + shift * u for shift in shifts), key=_complement_key)
