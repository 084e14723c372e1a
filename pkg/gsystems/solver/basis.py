"""
Coordinates on finite windows of Pol^k(n): cochains G^k -> {ξ-polynomials of
degree ≤ n with x-degree ≤ D}, placed at ħ-level n.
"""
from sympy import QQ_I

from gsystems.algebra import multi_indices
from gsystems.dga import Cochain, zero_cochain
from gsystems.errors import GSystemsError
from gsystems.groups import AffineAction, enumerate_tuples
from gsystems.symbols import FormalSymbol, XiPolynomial, xi_ring

__all__ = (
    "WindowError",
    "GradedBasis",
    "CochainSpace",
    "CochainVector",
)


class WindowError(GSystemsError):
    """
    raised when a polynomial or cochain has terms outside a coordinate window
    """
    def __init__(self, what, monomial, n, D):
        self.monomial = monomial
        self.n = n
        self.D = D
        super().__init__(f"{what} has term {monomial} outside the window xi-degree <= {n}, x-degree <= {D}")


class GradedBasis:
    """
    Monomials x^β ξ^α with |α| ≤ n and |β| ≤ D, ordered by α then β in
    graded lexicographic order.

    Args:
        dimension: number of coordinates d
        n: ξ-degree cap
        D: x-degree window
    """
    __slots__ = ("dimension", "n", "D", "monomials", "_index")

    def __init__(self, dimension: int, n: int, D: int):
        self.dimension = dimension
        self.n = n
        self.D = D
        self.monomials = [
            beta + alpha
            for alpha in multi_indices(dimension, n)
            for beta in multi_indices(dimension, D)
        ]
        self._index = {m: i for i, m in enumerate(self.monomials)}

    def __len__(self):
        return len(self.monomials)

    def coordinates(self, p: XiPolynomial) -> dict:
        """
        Sparse coordinates {index: scalar}. Raises WindowError on a term
        outside the window.
        """
        out = {}
        for monom, c in p.poly.items():
            i = self._index.get(monom)
            if i is None:
                raise WindowError("polynomial", monom, self.n, self.D)
            out[i] = c
        return out

    def element(self, coordinates: dict) -> XiPolynomial:
        data = {self.monomials[i]: c for i, c in coordinates.items() if c}
        return XiPolynomial(self.dimension, xi_ring(self.dimension).from_dict(data))

    def __repr__(self):
        return f"GradedBasis(d={self.dimension}, n={self.n}, D={self.D}, size={len(self)})"


class CochainSpace:
    """
    The window of degree-k cochains with values at ħ-level ``n`` (truncation
    order ``n``) and coefficients in ``GradedBasis(d, n, D)``. Coordinates
    are laid out tuple-major in the enumeration order of G^k.

    Args:
        action: the affine action
        degree: cochain degree k
        n: ħ-level and ξ-degree cap
        D: x-degree window
    """
    __slots__ = ("action", "degree", "n", "D", "basis", "tuples")

    def __init__(self, action: AffineAction, degree: int, n: int, D: int):
        self.action = action
        self.degree = degree
        self.n = n
        self.D = D
        self.basis = GradedBasis(action.dimension, n, D)
        self.tuples = enumerate_tuples(action.group, degree) if D >= 0 else []

    def __len__(self):
        return len(self.tuples) * len(self.basis)

    def vector(self, cochain: Cochain) -> "CochainVector":
        """
        Coordinates of the ħⁿ level of ``cochain``. Other levels are ignored.
        """
        coords = {}
        size = len(self.basis)
        for j, t in enumerate(self.tuples):
            for i, c in self.basis.coordinates(cochain.values[t].level(self.n)).items():
                coords[j * size + i] = c
        return CochainVector(self, coords)

    def cochain(self, coordinates: dict) -> Cochain:
        if not self.tuples:
            return zero_cochain(self.action, self.degree, self.n)
        size = len(self.basis)
        d = self.action.dimension
        grouped = [{} for _ in self.tuples]
        for i, c in coordinates.items():
            if c:
                grouped[i // size][i % size] = c
        zero = XiPolynomial.zero(d)
        values = {}
        for j, t in enumerate(self.tuples):
            levels = [zero] * self.n + [self.basis.element(grouped[j])]
            values[t] = FormalSymbol(d, levels)
        return Cochain(self.action, self.degree, values)

    def basis_cochain(self, i: int) -> Cochain:
        return self.cochain({i: QQ_I.one})

    def __repr__(self):
        return f"CochainSpace(k={self.degree}, n={self.n}, D={self.D}, dim={len(self)})"


class CochainVector:
    """
    A cochain of a window in coordinates.

    Args:
        space: the CochainSpace
        coordinates: sparse dict index -> scalar
    """
    __slots__ = ("space", "coordinates")

    def __init__(self, space: CochainSpace, coordinates: dict):
        self.space = space
        self.coordinates = {i: c for i, c in coordinates.items() if c}

    def to_cochain(self) -> Cochain:
        return self.space.cochain(self.coordinates)

    def dense(self) -> list:
        out = [QQ_I.zero] * len(self.space)
        for i, c in self.coordinates.items():
            out[i] = c
        return out

    def is_zero(self) -> bool:
        return not self.coordinates

    def __eq__(self, other):
        if not isinstance(other, CochainVector):
            return NotImplemented
        return self.coordinates == other.coordinates and len(self.space) == len(other.space)

    def __hash__(self):
        return hash(tuple(sorted(self.coordinates.items(), key=lambda t: t[0])))
