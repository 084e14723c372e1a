"""
Coefficient functions: polynomials in x1..xd over the Gaussian rationals.

A PolyFunction wraps an element of a sympy sparse polynomial ring so every
operation is exact and zero coefficients are never stored.
"""
from functools import lru_cache

from sympy import QQ_I
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from gsystems.algebra.base import AxisError, DimensionError, graded_key
from gsystems.algebra.scalars import to_scalar

__all__ = (
    "PolyFunction",
    "x_ring",
    "poly_mul",
    "poly_partial",
    "poly_compose_affine",
)


@lru_cache(maxsize=None)
def x_ring(dimension: int):
    """
    The polynomial ring QQ_I[x1..xd], cached per dimension.
    """
    if dimension < 1:
        raise DimensionError("a positive integer", dimension, "dimension")
    names = ",".join(f"x{j}" for j in range(1, dimension + 1))
    return ring(names, QQ_I, grlex)[0]


class PolyFunction:
    """
    Args:
        dimension: number of coordinates d
        poly: element of ``x_ring(dimension)``; the zero polynomial when omitted
    """
    __slots__ = ("dimension", "poly")

    def __init__(self, dimension: int, poly=None):
        R = x_ring(dimension)
        self.dimension = dimension
        self.poly = R.zero if poly is None else poly
        if self.poly.ring is not R:
            raise DimensionError(dimension, self.poly.ring.ngens, "polynomial ring")

    @classmethod
    def zero(cls, dimension):
        return cls(dimension)

    @classmethod
    def one(cls, dimension):
        return cls(dimension, x_ring(dimension).one)

    @classmethod
    def constant(cls, dimension, value):
        return cls(dimension, x_ring(dimension).ground_new(to_scalar(value)))

    @classmethod
    def variable(cls, dimension, j):
        if not 1 <= j <= dimension:
            raise AxisError(j, dimension)
        return cls(dimension, x_ring(dimension).gens[j - 1])

    @classmethod
    def monomial(cls, dimension, beta, coefficient=1):
        if len(beta) != dimension:
            raise DimensionError(dimension, len(beta), "exponent")
        return cls.from_terms(dimension, {tuple(beta): coefficient})

    @classmethod
    def from_terms(cls, dimension, terms):
        """
        Build from a mapping exponent tuple -> scalar. Zero scalars are dropped.
        """
        data = {}
        for beta, c in dict(terms).items():
            beta = tuple(int(e) for e in beta)
            if len(beta) != dimension or any(e < 0 for e in beta):
                raise DimensionError(dimension, beta, "exponent")
            c = to_scalar(c)
            if c:
                data[beta] = data.get(beta, QQ_I.zero) + c
        return cls(dimension, x_ring(dimension).from_dict(data))

    def terms(self) -> list:
        """
        (exponent, coefficient) pairs in canonical graded lexicographic order.
        """
        return sorted(self.poly.items(), key=lambda t: graded_key(t[0]))

    def coefficient(self, beta):
        return self.poly.get(tuple(beta), QQ_I.zero)

    def degree(self) -> int:
        """
        Total degree; -1 for the zero polynomial.
        """
        if not self.poly:
            return -1
        return max(sum(beta) for beta in self.poly.keys())

    def is_zero(self) -> bool:
        return not self.poly

    def is_constant(self) -> bool:
        return self.degree() <= 0

    def constant_term(self):
        return self.coefficient((0,) * self.dimension)

    def _check(self, other):
        if not isinstance(other, PolyFunction):
            return NotImplemented
        if other.dimension != self.dimension:
            raise DimensionError(self.dimension, other.dimension)
        return other

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return PolyFunction(self.dimension, self.poly + other.poly)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return PolyFunction(self.dimension, self.poly - other.poly)

    def __neg__(self):
        return PolyFunction(self.dimension, -self.poly)

    def __mul__(self, other):
        if isinstance(other, PolyFunction):
            return poly_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = to_scalar(c)
        return PolyFunction(self.dimension, self.poly * c if c else x_ring(self.dimension).zero)

    def partial(self, j):
        return poly_partial(self, j)

    def compose_affine(self, phi):
        return poly_compose_affine(self, phi)

    def __eq__(self, other):
        if not isinstance(other, PolyFunction):
            return NotImplemented
        return self.dimension == other.dimension and self.poly == other.poly

    def __hash__(self):
        return hash((self.dimension, tuple(self.terms())))

    def __bool__(self):
        return bool(self.poly)

    def __repr__(self):
        return f"PolyFunction({self.dimension}, {self.poly})"

    def __str__(self):
        return str(self.poly)


def poly_mul(f: PolyFunction, g: PolyFunction) -> PolyFunction:
    if f.dimension != g.dimension:
        raise DimensionError(f.dimension, g.dimension)
    return PolyFunction(f.dimension, f.poly * g.poly)


def poly_partial(f: PolyFunction, j: int) -> PolyFunction:
    """
    Exact partial derivative along axis ``j`` (1-based).
    """
    if not 1 <= j <= f.dimension:
        raise AxisError(j, f.dimension)
    return PolyFunction(f.dimension, f.poly.diff(f.poly.ring.gens[j - 1]))


def poly_compose_affine(f: PolyFunction, phi) -> PolyFunction:
    """
    f∘φ, computed by simultaneous substitution of the coordinate
    polynomials of φ.
    """
    if phi.dimension != f.dimension:
        raise DimensionError(f.dimension, phi.dimension, "affine map")
    if not f.poly or phi.is_identity():
        return f
    R = f.poly.ring
    substitution = [(R.gens[j], c.poly) for j, c in enumerate(phi.components())]
    return PolyFunction(f.dimension, f.poly.compose(substitution))
