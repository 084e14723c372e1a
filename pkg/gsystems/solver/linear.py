"""
Exact linear algebra over QQ_I on cochain windows, by fraction-free
row reduction (``DomainMatrix.rref_den``).
"""
import logging

from sympy import QQ_I
from sympy.polys.matrices import DomainMatrix

from gsystems.solver.basis import CochainSpace, CochainVector

__all__ = (
    "LinearMap",
    "EchelonForm",
    "echelon",
)

logger = logging.getLogger(__name__)


class EchelonForm:
    """
    Reduced row echelon data of a matrix: R/den is the RREF and ``pivots``
    the pivot columns.
    """
    __slots__ = ("entries", "den", "pivots", "ncols")

    def __init__(self, entries: dict, den, pivots, ncols):
        self.entries = entries
        self.den = den
        self.pivots = tuple(pivots)
        self.ncols = ncols

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def free_columns(self, ncols=None) -> list:
        pivots = set(self.pivots)
        return [j for j in range(self.ncols if ncols is None else ncols) if j not in pivots]


def echelon(rows: int, cols: int, entries: dict) -> EchelonForm:
    """
    Fraction-free RREF of the sparse matrix ``entries`` {(i, j): scalar}.
    Zero-sized shapes short-circuit to rank 0.
    """
    if rows == 0 or cols == 0:
        return EchelonForm({}, QQ_I.one, (), cols)
    M = DomainMatrix.from_dok(entries, (rows, cols), QQ_I)
    R, den, pivots = M.rref_den(method="FF")
    return EchelonForm(R.to_dok(), den, pivots, cols)


class LinearMap:
    """
    A linear map between cochain windows with its exact matrix.

    Args:
        domain: source CochainSpace
        codomain: target CochainSpace
        entries: sparse matrix {(row, column): scalar}, rows indexed by the codomain
    """
    __slots__ = ("domain", "codomain", "entries", "_echelon")

    def __init__(self, domain: CochainSpace, codomain: CochainSpace, entries: dict):
        self.domain = domain
        self.codomain = codomain
        self.entries = {k: v for k, v in entries.items() if v}
        self._echelon = None

    @property
    def shape(self):
        return (len(self.codomain), len(self.domain))

    def matrix(self) -> DomainMatrix:
        return DomainMatrix.from_dok(self.entries, self.shape, QQ_I)

    def echelon(self) -> EchelonForm:
        if self._echelon is None:
            self._echelon = echelon(*self.shape, self.entries)
        return self._echelon

    def rank(self) -> int:
        return self.echelon().rank

    def apply(self, vector: CochainVector) -> CochainVector:
        out = {}
        for (i, j), a in self.entries.items():
            c = vector.coordinates.get(j)
            if c:
                out[i] = out.get(i, QQ_I.zero) + a * c
        return CochainVector(self.codomain, out)

    def kernel(self) -> list:
        """
        Kernel basis, one vector per free column: x_f = den and
        x_p = -R[i][f] on the pivot of row i.
        """
        E = self.echelon()
        basis = []
        for f in E.free_columns():
            coords = {f: E.den}
            for i, p in enumerate(E.pivots):
                r = E.entries.get((i, f))
                if r:
                    coords[p] = -r
            basis.append(CochainVector(self.domain, coords))
        return basis

    def solve(self, rhs: CochainVector):
        """
        A particular solution with zero free coordinates, or None when
        ``rhs`` is not in the image. Also returns (rank, augmented rank).
        """
        rows, cols = self.shape
        entries = dict(self.entries)
        for i, c in rhs.coordinates.items():
            entries[i, cols] = c
        E = echelon(rows, cols + 1, entries)
        rank = self.rank()
        if cols in E.pivots:
            return None, rank, E.rank
        coords = {}
        for i, p in enumerate(E.pivots):
            r = E.entries.get((i, cols))
            if r:
                coords[p] = r / E.den
        logger.debug("solved %dx%d system, rank %d", rows, cols, rank)
        return CochainVector(self.domain, coords), rank, E.rank

    def is_zero(self) -> bool:
        return not self.entries

    def compose(self, other: "LinearMap") -> "LinearMap":
        """
        self∘other, as a sparse product.
        """
        by_row = {}
        for (k, j), b in other.entries.items():
            by_row.setdefault(k, []).append((j, b))
        out = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                out[i, j] = out.get((i, j), QQ_I.zero) + a * b
        return LinearMap(other.domain, self.codomain, out)

    def __repr__(self):
        return f"LinearMap({self.domain!r} -> {self.codomain!r}, nnz={len(self.entries)})"
