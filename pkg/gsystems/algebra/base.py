"""
Shared plumbing for the polynomial-backed value types: the errors raised on
mismatched operands and the multi-index helpers used by every graded basis.
"""
from itertools import product

from gsystems.errors import GSystemsError

__all__ = (
    "DimensionError",
    "AxisError",
    "SingularMapError",
    "multi_indices",
    "graded_key",
)


class DimensionError(GSystemsError):
    """
    raised when two operands live over different R^d
    """
    def __init__(self, expected, got, what="operand"):
        self.expected = expected
        self.got = got
        super().__init__(f"dimension mismatch for {what}: expected {expected}, got {got}")


class AxisError(GSystemsError):
    """
    raised when a partial derivative is requested along an axis outside 1..d
    """
    def __init__(self, axis, dimension):
        self.axis = axis
        self.dimension = dimension
        super().__init__(f"axis {axis} out of range 1..{dimension}")


class SingularMapError(GSystemsError):
    """
    raised when an affine map has a non-invertible linear part
    """
    def __init__(self, matrix):
        self.matrix = matrix
        super().__init__(f"affine map is not invertible, singular matrix {matrix}")


def graded_key(index: tuple) -> tuple:
    """
    Sort key of the graded lexicographic order: total degree first, then the
    exponent of x1, x2, ... in decreasing order.
    """
    return (sum(index), tuple(-e for e in index))


def multi_indices(dimension: int, max_degree: int) -> list:
    """
    All multi-indices of length ``dimension`` with total degree at most
    ``max_degree``, in graded lexicographic order.
    """
    if max_degree < 0:
        return []
    found = [
        index for index in product(range(max_degree + 1), repeat=dimension)
        if sum(index) <= max_degree
    ]
    return sorted(found, key=graded_key)
