"""
Truncated formal ħ-expansions: graded symbols, formal functions and
ungraded amplitudes.
"""
from gsystems.algebra import DimensionError, PolyFunction, to_scalar
from gsystems.errors import GSystemsError
from gsystems.symbols.xipolynomial import XiPolynomial

__all__ = (
    "GradingError",
    "TruncationError",
    "NonInvertibleError",
    "FormalSymbol",
    "FormalFunction",
    "Amplitude",
)


class GradingError(GSystemsError):
    """
    raised when the ħⁿ level of a symbol has ξ-degree above n
    """
    def __init__(self, level, xi_degree):
        self.level = level
        self.xi_degree = xi_degree
        super().__init__(f"grading violated at level {level}: xi-degree {xi_degree} > {level}")


class TruncationError(GSystemsError):
    """
    raised when operands carry different truncation orders
    """
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__(f"truncation order mismatch: {left} vs {right}")


class NonInvertibleError(GSystemsError):
    """
    raised when a symbol has no inverse for the star product
    """
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"symbol is not invertible: {reason}")


class _Expansion:
    """
    Shared plumbing of the truncated ħ-series types. ``levels`` holds the
    coefficients of ħ^0 .. ħ^order.
    """
    __slots__ = ("dimension", "order", "levels")

    _level_type = XiPolynomial

    def __init__(self, dimension, levels):
        levels = tuple(levels)
        if not levels:
            raise TruncationError("at least 0", "empty")
        for lv in levels:
            if not isinstance(lv, self._level_type):
                raise TypeError(f"level must be {self._level_type.__name__}, got {type(lv).__name__}")
            if lv.dimension != dimension:
                raise DimensionError(dimension, lv.dimension, "level")
        self.dimension = dimension
        self.order = len(levels) - 1
        self.levels = levels

    def level(self, n):
        if 0 <= n <= self.order:
            return self.levels[n]
        return self._level_type.zero(self.dimension)

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"expected {type(self).__name__}, got {type(other).__name__}")
        if other.dimension != self.dimension:
            raise DimensionError(self.dimension, other.dimension)
        if other.order != self.order:
            raise TruncationError(self.order, other.order)

    def _new(self, levels):
        return type(self)(self.dimension, levels)

    def __add__(self, other):
        self._check(other)
        return self._new(a + b for a, b in zip(self.levels, other.levels))

    def __sub__(self, other):
        self._check(other)
        return self._new(a - b for a, b in zip(self.levels, other.levels))

    def __neg__(self):
        return self._new(-a for a in self.levels)

    def scale(self, c):
        c = to_scalar(c)
        return self._new(a.scale(c) for a in self.levels)

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def with_order(self, order):
        """
        Re-truncate at ``order``, padding with zero levels when it grows.
        """
        if order < 0:
            raise TruncationError("nonnegative", order)
        return self._new(self.level(n) for n in range(order + 1))

    def shift(self, k):
        """
        Multiply by ħ^k keeping the truncation order.
        """
        return self._new(self.level(n - k) for n in range(self.order + 1))

    def is_zero(self):
        return not any(self.levels)

    def filtration_degree(self):
        """
        Lowest n with a nonzero ħⁿ level; order + 1 for zero.
        """
        return next((n for n, lv in enumerate(self.levels) if lv), self.order + 1)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return (
            self.dimension == other.dimension
            and self.order == other.order
            and self.levels == other.levels
        )

    def __hash__(self):
        return hash((type(self).__name__, self.dimension, self.levels))

    def __repr__(self):
        body = " + ".join(f"h^{n}*({lv})" for n, lv in enumerate(self.levels) if lv) or "0"
        return f"{type(self).__name__}(d={self.dimension}, N={self.order}: {body})"


class FormalSymbol(_Expansion):
    """
    P = P⁰(x) + Σ_{n≥1} ħⁿ Pⁿ(x, ξ) truncated at ħ^N, with deg_ξ Pⁿ ≤ n.

    Args:
        dimension: number of coordinates d
        levels: sequence of XiPolynomial, P⁰ .. P^N
    """
    __slots__ = ()

    def __init__(self, dimension, levels):
        super().__init__(dimension, levels)
        for n, lv in enumerate(self.levels):
            if lv.xi_degree() > n:
                raise GradingError(n, lv.xi_degree())

    @classmethod
    def zero(cls, dimension, order):
        return cls(dimension, [XiPolynomial.zero(dimension)] * (order + 1))

    @classmethod
    def one(cls, dimension, order):
        return cls.constant(dimension, order, 1)

    @classmethod
    def constant(cls, dimension, order, value):
        return cls.from_function(PolyFunction.constant(dimension, value), order)

    @classmethod
    def from_function(cls, f: PolyFunction, order):
        """
        A ξ-independent, ħ-free symbol f(x).
        """
        levels = [XiPolynomial.from_function(f)] + [XiPolynomial.zero(f.dimension)] * order
        return cls(f.dimension, levels)

    def is_xi_free(self):
        return all(lv.is_xi_free() for lv in self.levels)

    def is_classical(self):
        """
        True when the symbol is a function of x alone (ξ-free and ħ-free).
        """
        return self.levels[0].is_xi_free() and not any(self.levels[1:])

    def x_degree(self):
        return max(lv.x_degree() for lv in self.levels)

    def xi_degree(self):
        return max(lv.xi_degree() for lv in self.levels)

    def leading_function(self) -> PolyFunction:
        return self.levels[0].to_function()


class FormalFunction(_Expansion):
    """
    ψ = Σ ħ^k ψ^k(x) truncated at ħ^N.

    Args:
        dimension: number of coordinates d
        levels: sequence of PolyFunction
    """
    __slots__ = ()

    _level_type = PolyFunction

    @classmethod
    def zero(cls, dimension, order):
        return cls(dimension, [PolyFunction.zero(dimension)] * (order + 1))

    @classmethod
    def from_function(cls, f: PolyFunction, order=0):
        return cls(f.dimension, [f] + [PolyFunction.zero(f.dimension)] * order)


class Amplitude(_Expansion):
    """
    a = a⁰(x, ξ) + a¹(x, ξ)ħ + ... with no restriction on ξ-degrees.
    """
    __slots__ = ()

    @classmethod
    def zero(cls, dimension, order):
        return cls(dimension, [XiPolynomial.zero(dimension)] * (order + 1))
