"""
Invertible affine maps x ↦ A x + b of R^d with exact Gaussian-rational entries.
"""
from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from gsystems.algebra.base import DimensionError, SingularMapError
from gsystems.algebra.polyfunction import PolyFunction, x_ring
from gsystems.algebra.scalars import to_scalar

__all__ = (
    "AffineDiffeo",
    "affine_compose",
    "affine_invert",
)


def _matrix(rows):
    n = len(rows)
    return DomainMatrix([list(r) for r in rows], (n, len(rows[0]) if n else 0), QQ_I)


def _identity_rows(d):
    return [[QQ_I.one if i == j else QQ_I.zero for j in range(d)] for i in range(d)]


def _mat_vec(rows, vec):
    return [sum((a * v for a, v in zip(row, vec)), QQ_I.zero) for row in rows]


class AffineDiffeo:
    """
    Args:
        matrix: d×d nested list of scalars (A)
        offset: length-d list of scalars (b); zero when omitted

    The inverse ``x ↦ C x + c`` is always recomputed and verified, never
    taken from input.
    """
    __slots__ = ("dimension", "matrix", "offset", "inverse_matrix", "inverse_offset")

    def __init__(self, matrix, offset=None):
        d = len(matrix)
        if d < 1 or any(len(row) != d for row in matrix):
            raise DimensionError("a square matrix", [len(row) for row in matrix], "affine matrix")
        offset = [0] * d if offset is None else offset
        if len(offset) != d:
            raise DimensionError(d, len(offset), "affine offset")
        self.dimension = d
        self.matrix = tuple(tuple(to_scalar(a) for a in row) for row in matrix)
        self.offset = tuple(to_scalar(b) for b in offset)

        A = _matrix(self.matrix)
        if not A.det():
            raise SingularMapError([[str(a) for a in row] for row in self.matrix])
        C = A.inv().to_list()
        if (A * _matrix(C)).to_list() != _identity_rows(d):
            raise SingularMapError([[str(a) for a in row] for row in self.matrix])
        self.inverse_matrix = tuple(tuple(row) for row in C)
        self.inverse_offset = tuple(-c for c in _mat_vec(C, self.offset))

    @classmethod
    def identity(cls, dimension):
        return cls(_identity_rows(dimension))

    @classmethod
    def translation(cls, offset):
        return cls(_identity_rows(len(offset)), offset)

    def is_identity(self) -> bool:
        return (
            [list(r) for r in self.matrix] == _identity_rows(self.dimension)
            and not any(self.offset)
        )

    def components(self) -> list:
        """
        Coordinate polynomials φ_1(x), ..., φ_d(x).
        """
        R = x_ring(self.dimension)
        out = []
        for row, b in zip(self.matrix, self.offset):
            p = R.ground_new(b)
            for a, g in zip(row, R.gens):
                if a:
                    p += g * a
            out.append(PolyFunction(self.dimension, p))
        return out

    def inverse(self):
        return AffineDiffeo(self.inverse_matrix, self.inverse_offset)

    def __call__(self, point):
        return [y + b for y, b in zip(_mat_vec(self.matrix, [to_scalar(p) for p in point]), self.offset)]

    def __eq__(self, other):
        if not isinstance(other, AffineDiffeo):
            return NotImplemented
        return self.matrix == other.matrix and self.offset == other.offset

    def __hash__(self):
        return hash((self.matrix, self.offset))

    def __repr__(self):
        A = [[str(a) for a in row] for row in self.matrix]
        return f"AffineDiffeo(A={A}, b={[str(b) for b in self.offset]})"


def affine_compose(phi1: AffineDiffeo, phi2: AffineDiffeo) -> AffineDiffeo:
    """
    φ₁∘φ₂: x ↦ A₁(A₂x + b₂) + b₁.
    """
    if phi1.dimension != phi2.dimension:
        raise DimensionError(phi1.dimension, phi2.dimension, "affine map")
    A = (_matrix(phi1.matrix) * _matrix(phi2.matrix)).to_list()
    b = [y + b1 for y, b1 in zip(_mat_vec(phi1.matrix, phi2.offset), phi1.offset)]
    return AffineDiffeo(A, b)


def affine_invert(phi: AffineDiffeo) -> AffineDiffeo:
    inverse = phi.inverse()
    if not affine_compose(phi, inverse).is_identity():
        raise SingularMapError([[str(a) for a in row] for row in phi.matrix])
    return inverse
