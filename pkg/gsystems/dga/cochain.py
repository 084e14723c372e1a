"""
Cochains of the amplitude complex: tables G^k -> FormalSymbol over a fixed
affine action. Degree-0 cochains carry a single symbol under the key ().
"""
from gsystems.algebra import DimensionError
from gsystems.errors import GSystemsError
from gsystems.groups import AffineAction, enumerate_tuples
from gsystems.symbols import FormalSymbol, TruncationError

__all__ = (
    "CochainError",
    "NormalizationError",
    "Cochain",
    "zero_cochain",
    "unit_cochain",
    "constant_cochain",
)


class CochainError(GSystemsError):
    """
    raised for malformed cochain tables and mismatched cochain contexts
    """
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"cochain error: {reason}")


class NormalizationError(GSystemsError):
    """
    raised when a cochain of degree >= 1 is required to satisfy a(e,...,e) = 1 and does not
    """
    def __init__(self, degree, value):
        self.degree = degree
        self.value = value
        super().__init__(f"degree-{degree} cochain is not normalized: value at the identity tuple is {value!r}")


class Cochain:
    """
    Args:
        action: the AffineAction the cochain lives over
        degree: cochain degree k
        values: dict mapping every k-tuple of element labels to a FormalSymbol
    """
    __slots__ = ("action", "degree", "values", "dimension", "order")

    def __init__(self, action: AffineAction, degree: int, values: dict):
        if degree < 0:
            raise CochainError(f"negative degree {degree}")
        tuples = enumerate_tuples(action.group, degree)
        values = {tuple(key): v for key, v in values.items()}
        missing = [t for t in tuples if t not in values]
        if missing:
            raise CochainError(f"missing values at {missing[:3]}{'...' if len(missing) > 3 else ''}")
        if len(values) != len(tuples):
            extra = [t for t in values if t not in set(tuples)]
            raise CochainError(f"values at tuples outside G^{degree}: {extra[:3]}")
        first = values[tuples[0]]
        for t in tuples:
            v = values[t]
            if not isinstance(v, FormalSymbol):
                raise CochainError(f"value at {t} is {type(v).__name__}, expected FormalSymbol")
            if v.dimension != action.dimension:
                raise DimensionError(action.dimension, v.dimension, f"value at {t}")
            if v.order != first.order:
                raise TruncationError(first.order, v.order)
        self.action = action
        self.degree = degree
        self.values = {t: values[t] for t in tuples}
        self.dimension = action.dimension
        self.order = first.order

    @property
    def group(self):
        return self.action.group

    def __getitem__(self, key):
        if not isinstance(key, tuple):
            key = (key,)
        return self.values[key]

    def items(self):
        return self.values.items()

    def identity_tuple(self):
        return (self.group.identity,) * self.degree

    def is_normalized(self) -> bool:
        """
        a(e, ..., e) = 1. Degree-0 cochains are exempt.
        """
        if self.degree == 0:
            return True
        return self.values[self.identity_tuple()] == FormalSymbol.one(self.dimension, self.order)

    def check_normalized(self):
        if not self.is_normalized():
            raise NormalizationError(self.degree, self.values[self.identity_tuple()])
        return self

    def same_context(self, other) -> bool:
        return (
            isinstance(other, Cochain)
            and self.action == other.action
            and self.order == other.order
        )

    def _check(self, other):
        if not isinstance(other, Cochain):
            raise TypeError(f"expected Cochain, got {type(other).__name__}")
        if self.action != other.action:
            raise CochainError("cochains live over different actions")
        if self.order != other.order:
            raise TruncationError(self.order, other.order)
        if self.degree != other.degree:
            raise CochainError(f"degree mismatch {self.degree} vs {other.degree}")

    def map_values(self, fn):
        return Cochain(self.action, self.degree, {t: fn(v) for t, v in self.values.items()})

    def __add__(self, other):
        self._check(other)
        return Cochain(self.action, self.degree, {t: v + other.values[t] for t, v in self.values.items()})

    def __sub__(self, other):
        self._check(other)
        return Cochain(self.action, self.degree, {t: v - other.values[t] for t, v in self.values.items()})

    def __neg__(self):
        return self.map_values(lambda v: -v)

    def scale(self, c):
        return self.map_values(lambda v: v.scale(c))

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def level(self, n):
        """
        The cochain keeping only the ħⁿ level of every value.
        """
        def keep(v):
            return FormalSymbol(v.dimension, [lv if m == n else type(lv).zero(v.dimension) for m, lv in enumerate(v.levels)])
        return self.map_values(keep)

    def with_order(self, order):
        return self.map_values(lambda v: v.with_order(order))

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values.values())

    def filtration_degree(self) -> int:
        return min(v.filtration_degree() for v in self.values.values())

    def x_degree(self) -> int:
        return max(v.x_degree() for v in self.values.values())

    def xi_degree(self) -> int:
        return max(v.xi_degree() for v in self.values.values())

    def is_classical(self) -> bool:
        return all(v.is_classical() for v in self.values.values())

    def nonzero_tuples(self):
        return [t for t, v in self.values.items() if not v.is_zero()]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Cochain):
            return NotImplemented
        return (
            self.action == other.action
            and self.degree == other.degree
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.degree, tuple(self.values.items())))

    def __repr__(self):
        return f"{type(self).__name__}(degree={self.degree}, d={self.dimension}, N={self.order}, |G|={self.group.order})"


def zero_cochain(action: AffineAction, degree: int, order: int) -> Cochain:
    zero = FormalSymbol.zero(action.dimension, order)
    return Cochain(action, degree, {t: zero for t in enumerate_tuples(action.group, degree)})


def constant_cochain(action: AffineAction, degree: int, symbol: FormalSymbol) -> Cochain:
    return Cochain(action, degree, {t: symbol for t in enumerate_tuples(action.group, degree)})


def unit_cochain(action: AffineAction, degree: int = 1, order: int = 0) -> Cochain:
    """
    Every value equal to the unit symbol 1. In degree 1 this is the pullback
    representation g ↦ Op(1, φ_g).
    """
    return constant_cochain(action, degree, FormalSymbol.one(action.dimension, order))
