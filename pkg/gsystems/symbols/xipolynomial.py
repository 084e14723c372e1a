"""
Polynomials in ξ with polynomial coefficients in x, Σ_α f_α(x) ξ^α.

They are stored as elements of the joint ring QQ_I[x1..xd, xi1..xid]; an
exponent tuple is the x-exponent β followed by the ξ-exponent α.
"""
from functools import lru_cache

from sympy import QQ_I
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from gsystems.algebra import (AxisError,
                              DimensionError,
                              PolyFunction,
                              graded_key,
                              to_scalar,
                              )

__all__ = ("XiPolynomial", "xi_ring")


@lru_cache(maxsize=None)
def xi_ring(dimension: int):
    if dimension < 1:
        raise DimensionError("a positive integer", dimension, "dimension")
    xs = [f"x{j}" for j in range(1, dimension + 1)]
    xis = [f"xi{j}" for j in range(1, dimension + 1)]
    return ring(",".join(xs + xis), QQ_I, grlex)[0]


class XiPolynomial:
    """
    Args:
        dimension: number of coordinates d
        poly: element of ``xi_ring(dimension)``; zero when omitted
    """
    __slots__ = ("dimension", "poly")

    def __init__(self, dimension: int, poly=None):
        R = xi_ring(dimension)
        self.dimension = dimension
        self.poly = R.zero if poly is None else poly
        if self.poly.ring is not R:
            raise DimensionError(dimension, self.poly.ring.ngens // 2, "symbol ring")

    @classmethod
    def zero(cls, dimension):
        return cls(dimension)

    @classmethod
    def one(cls, dimension):
        return cls(dimension, xi_ring(dimension).one)

    @classmethod
    def constant(cls, dimension, value):
        return cls(dimension, xi_ring(dimension).ground_new(to_scalar(value)))

    @classmethod
    def xi(cls, dimension, j):
        if not 1 <= j <= dimension:
            raise AxisError(j, dimension)
        return cls(dimension, xi_ring(dimension).gens[dimension + j - 1])

    @classmethod
    def from_function(cls, f: PolyFunction):
        d = f.dimension
        pad = (0,) * d
        return cls(d, xi_ring(d).from_dict({beta + pad: c for beta, c in f.poly.items()}))

    @classmethod
    def from_coefficients(cls, dimension, coefficients):
        """
        Build from a mapping ξ-exponent α -> PolyFunction f_α.
        """
        data = {}
        for alpha, f in dict(coefficients).items():
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != dimension or any(a < 0 for a in alpha):
                raise DimensionError(dimension, alpha, "xi exponent")
            if f.dimension != dimension:
                raise DimensionError(dimension, f.dimension, "coefficient")
            for beta, c in f.poly.items():
                data[beta + alpha] = c
        return cls(dimension, xi_ring(dimension).from_dict(data))

    def coefficients(self) -> dict:
        """
        Mapping α -> f_α, keyed in graded lexicographic order of α.
        """
        d = self.dimension
        grouped = {}
        for monom, c in self.poly.items():
            grouped.setdefault(monom[d:], {})[monom[:d]] = c
        return {
            alpha: PolyFunction.from_terms(d, grouped[alpha])
            for alpha in sorted(grouped, key=graded_key)
        }

    def coefficient(self, alpha) -> PolyFunction:
        return self.coefficients().get(tuple(alpha), PolyFunction.zero(self.dimension))

    def xi_degree(self) -> int:
        """
        max |α| over stored terms; -1 for zero.
        """
        d = self.dimension
        return max((sum(m[d:]) for m in self.poly.keys()), default=-1)

    def x_degree(self) -> int:
        d = self.dimension
        return max((sum(m[:d]) for m in self.poly.keys()), default=-1)

    def is_xi_free(self) -> bool:
        return self.xi_degree() <= 0

    def xi_homogeneous_part(self, j: int):
        """
        The terms with |α| = j.
        """
        d = self.dimension
        part = {m: c for m, c in self.poly.items() if sum(m[d:]) == j}
        return XiPolynomial(d, xi_ring(d).from_dict(part))

    def to_function(self) -> PolyFunction:
        """
        The ξ^0 coefficient, used for ξ-free polynomials.
        """
        return self.coefficient((0,) * self.dimension)

    def precompose(self, phi):
        """
        Coefficients precomposed with φ: f_α(x) -> f_α(φ(x)).
        """
        if phi.dimension != self.dimension:
            raise DimensionError(self.dimension, phi.dimension, "affine map")
        if not self.poly or phi.is_identity():
            return self
        return self._substitute(x_images=phi.components())

    def transform_xi(self, matrix):
        """
        ξ -> Mᵀξ, that is ξ_j -> Σ_k M[k][j] ξ_k.
        """
        d = self.dimension
        if not self.poly:
            return self
        R = xi_ring(d)
        images = []
        for j in range(d):
            p = R.zero
            for k in range(d):
                if matrix[k][j]:
                    p += R.gens[d + k] * matrix[k][j]
            images.append(p)
        return self._substitute(xi_images=images)

    def _substitute(self, x_images=None, xi_images=None):
        d = self.dimension
        R = xi_ring(d)
        substitution = []
        if x_images is not None:
            for j, f in enumerate(x_images):
                substitution.append((R.gens[j], XiPolynomial.from_function(f).poly))
        if xi_images is not None:
            for j, p in enumerate(xi_images):
                substitution.append((R.gens[d + j], p))
        return XiPolynomial(d, self.poly.compose(substitution))

    def diff_x(self, j):
        if not 1 <= j <= self.dimension:
            raise AxisError(j, self.dimension)
        return XiPolynomial(self.dimension, self.poly.diff(self.poly.ring.gens[j - 1]))

    def diff_xi(self, j):
        if not 1 <= j <= self.dimension:
            raise AxisError(j, self.dimension)
        return XiPolynomial(self.dimension, self.poly.diff(self.poly.ring.gens[self.dimension + j - 1]))

    def diff_x_multi(self, alpha):
        p = self.poly
        for j, a in enumerate(alpha):
            for _ in range(a):
                p = p.diff(p.ring.gens[j])
        return XiPolynomial(self.dimension, p)

    def diff_xi_multi(self, alpha):
        p = self.poly
        d = self.dimension
        for j, a in enumerate(alpha):
            for _ in range(a):
                p = p.diff(p.ring.gens[d + j])
        return XiPolynomial(d, p)

    def _check(self, other):
        if not isinstance(other, XiPolynomial):
            raise TypeError(f"expected XiPolynomial, got {type(other).__name__}")
        if other.dimension != self.dimension:
            raise DimensionError(self.dimension, other.dimension)

    def __add__(self, other):
        self._check(other)
        return XiPolynomial(self.dimension, self.poly + other.poly)

    def __sub__(self, other):
        self._check(other)
        return XiPolynomial(self.dimension, self.poly - other.poly)

    def __neg__(self):
        return XiPolynomial(self.dimension, -self.poly)

    def __mul__(self, other):
        if isinstance(other, XiPolynomial):
            self._check(other)
            return XiPolynomial(self.dimension, self.poly * other.poly)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = to_scalar(c)
        if not c:
            return XiPolynomial(self.dimension)
        return XiPolynomial(self.dimension, self.poly * c)

    def __eq__(self, other):
        if not isinstance(other, XiPolynomial):
            return NotImplemented
        return self.dimension == other.dimension and self.poly == other.poly

    def __hash__(self):
        return hash((self.dimension, tuple(sorted(self.poly.items()))))

    def __bool__(self):
        return bool(self.poly)

    def __repr__(self):
        return f"XiPolynomial({self.dimension}, {self.poly})"

    def __str__(self):
        return str(self.poly)
