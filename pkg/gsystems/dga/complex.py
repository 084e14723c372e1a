"""
The differential graded algebra of G-amplitude cochains.

    (da)(g₁, ..., g_{k+1}) = Σ_{i=1}^{k} (-1)^i a(g₁, ..., g_i g_{i+1}, ..., g_{k+1})

    (a ⋆ b)(g₁, ..., g_{k+l}) = a(g₁..g_k) ⋆ b(g_{k+1}..g_{k+l})

where the star product uses φ_{g₁⋯g_k} and φ_{g_{k+1}⋯g_{k+l}}.
"""
import logging

from gsystems.errors import GSystemsError
from gsystems.groups import enumerate_tuples
from gsystems.objects import Witness
from gsystems.symbols import FormalSymbol, TruncationError, star_compose
from gsystems.dga.cochain import Cochain, CochainError

__all__ = (
    "NotMaurerCartanError",
    "MCElement",
    "differential_d",
    "cup_star",
    "mc_residual",
    "twisted_differential",
    "coboundary",
    "as_mc_element",
    "degree_zero_cochain",
)

logger = logging.getLogger(__name__)


class NotMaurerCartanError(GSystemsError):
    """
    raised when a cochain required to solve da + a⋆a = 0 does not
    """
    def __init__(self, witness: Witness):
        self.witness = witness
        super().__init__(f"not a Maurer-Cartan element: residual nonzero at {witness.arguments}")


def differential_d(a: Cochain) -> Cochain:
    """
    Inner-face differential. In degree 0 the sum is empty and the result is
    the zero 1-cochain.
    """
    G, k = a.group, a.degree
    out = {}
    zero = FormalSymbol.zero(a.dimension, a.order)
    for t in enumerate_tuples(G, k + 1):
        acc = zero
        for i in range(1, k + 1):
            merged = t[:i - 1] + (G.mul(t[i - 1], t[i]),) + t[i + 1:]
            term = a.values[merged]
            acc = acc - term if i % 2 else acc + term
        out[t] = acc
    return Cochain(a.action, k + 1, out)


def cup_star(a: Cochain, b: Cochain) -> Cochain:
    if a.action != b.action:
        raise CochainError("cochains live over different actions")
    if a.order != b.order:
        raise TruncationError(a.order, b.order)
    G, action = a.group, a.action
    k, l = a.degree, b.degree
    out = {}
    for t in enumerate_tuples(G, k + l):
        head, tail = t[:k], t[k:]
        out[t] = star_compose(
            a.values[head], action.phi_of_tuple(head),
            b.values[tail], action.phi_of_tuple(tail),
        )
    return Cochain(action, k + l, out)


def mc_residual(a: Cochain) -> Cochain:
    """
    da + a ⋆ a for a degree-1 cochain.
    """
    if a.degree != 1:
        raise CochainError(f"Maurer-Cartan residual needs a degree-1 cochain, got degree {a.degree}")
    return differential_d(a) + cup_star(a, a)


class MCElement(Cochain):
    """
    A normalized degree-1 cochain whose Maurer-Cartan residual vanishes at
    every pair and every ħ-order. Verified at construction.

    Args:
        cochain: the degree-1 Cochain to promote
    """
    __slots__ = ()

    def __init__(self, cochain: Cochain):
        if cochain.degree != 1:
            raise CochainError(f"Maurer-Cartan elements have degree 1, got {cochain.degree}")
        super().__init__(cochain.action, 1, cochain.values)
        self.check_normalized()
        residual = mc_residual(self)
        bad = residual.nonzero_tuples()
        if bad:
            w = Witness(list(bad[0]), FormalSymbol.zero(self.dimension, self.order), residual.values[bad[0]])
            w.difference = residual.values[bad[0]]
            raise NotMaurerCartanError(w)

    def with_order(self, order):
        """
        Re-truncated copy. Zero padding can leave a nonzero residual at the
        new levels, so the copy is verified again.
        """
        return MCElement(super().with_order(order))


def as_mc_element(P0) -> MCElement:
    if isinstance(P0, MCElement):
        return P0
    return MCElement(P0)


def twisted_differential(P0, a: Cochain) -> Cochain:
    """
    d_{P0} a = da + P0 ⋆ a - (-1)^k a ⋆ P0. ``P0`` must be Maurer-Cartan.
    """
    P0 = as_mc_element(P0)
    out = differential_d(a) + cup_star(P0, a)
    right = cup_star(a, P0)
    return out + right if a.degree % 2 else out - right


def coboundary(action, K: FormalSymbol) -> Cochain:
    """
    δK: g ↦ K∘φ_g⁻¹ - K, a 1-cochain built from degree-0 data.
    """
    if K.dimension != action.dimension:
        raise CochainError(f"symbol dimension {K.dimension} does not match action dimension {action.dimension}")
    out = {}
    for g in action.group.elements:
        pulled = FormalSymbol(K.dimension, [lv.precompose(action.phi_inverse(g)) for lv in K.levels])
        out[(g,)] = pulled - K
    return Cochain(action, 1, out)


def degree_zero_cochain(action, symbol: FormalSymbol) -> Cochain:
    return Cochain(action, 0, {(): symbol})
