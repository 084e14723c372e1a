"""
Order-by-order constructions in the ħ-adic filtration.

Existence: extend P0 + ħP1 to a Maurer-Cartan element ω by solving
d_{P0}Pⁿ = -(ħⁿ level of the residual of P0 + ... + ħ^{n-1}P^{n-1}).

Rigidity: build a unit u = 1 + ħu¹ + ... with a_g ⋆ u = u ⋆ P0_g by solving
d_{P0}u^m = -(ħ^m level of a ⋆ u_{m-1} - u_{m-1} ⋆ P0).
"""
import logging

from gsystems.dga import (Cochain,
                          CochainError,
                          ConsistencyError,
                          MCElement,
                          NotMaurerCartanError,
                          as_mc_element,
                          cup_star,
                          degree_zero_cochain,
                          gauge_relation_check,
                          mc_residual,
                          twisted_differential,
                          zero_cochain,
                          )
from gsystems.errors import GSystemsError
from gsystems.objects import ExtensionTrace, ObstructionCertificate, OrderRecord, Window, Witness
from gsystems.symbols import FormalSymbol, invert_unit
from gsystems.solver.cohomology import NotCocycleError, graded_p0, matrix_of_twisted_d

__all__ = (
    "ObstructionError",
    "solve_in_window",
    "solve_order",
    "mc_extend",
    "rigidity_gauge",
)

logger = logging.getLogger(__name__)


class ObstructionError(GSystemsError):
    """
    raised when an order-by-order construction meets a non-exact cocycle
    """
    def __init__(self, certificate: ObstructionCertificate):
        self.certificate = certificate
        super().__init__(
            f"{certificate.problem} obstructed at order {certificate.order}: "
            f"rank {certificate.rank} < augmented rank {certificate.rank_augmented}"
        )


def solve_in_window(lmap, rhs: Cochain, *, problem: str, order: int, trace: ExtensionTrace = None):
    """
    Solve lmap(x) = rhs. Returns the solution cochain (free coordinates set
    to zero) or an ObstructionCertificate.
    """
    target = lmap.codomain
    window = Window(target.n, lmap.domain.degree, lmap.domain.D, target.D)
    vector = target.vector(rhs)
    solution, rank, rank_augmented = lmap.solve(vector)
    if solution is None:
        certificate = ObstructionCertificate(problem, order, window, rhs, rank, rank_augmented)
        certificate.rhs_coordinates = [[i, c] for i, c in sorted(vector.coordinates.items(), key=lambda t: t[0])]
        logger.info("%s obstructed at order %d (rank %d, augmented %d)", problem, order, rank, rank_augmented)
        return certificate
    if trace is not None:
        trace.records.append(OrderRecord(order, window, rank, len(lmap.domain) - rank, vector.is_zero()))
    logger.info("%s order %d solved on window D=%d (rank %d)", problem, order, lmap.domain.D, rank)
    return solution.to_cochain()


def _first_low_level(cochain: Cochain, n: int):
    """
    (tuple, level) of the first nonzero value below level n, or None.
    """
    for t, v in cochain.values.items():
        for m in range(min(n, v.order + 1)):
            if v.levels[m]:
                return t, m
    return None


def _record_zero(trace, order, n, k):
    if trace is not None:
        trace.records.append(OrderRecord(order, Window(n, k, -1, -1), 0, 0, True))


def solve_order(P0, partial: Cochain, n: int, *, trace: ExtensionTrace = None):
    """
    Given ω_{n-1} = P0 + ħP1 + ... + ħ^{n-1}P^{n-1} (``partial``, MC through
    ħ^{n-1}), solve d_{P0}Pⁿ = -(residual of ω_{n-1})ⁿ. Returns Pⁿ as a
    cochain at ħ-level n (truncation order n) or an ObstructionCertificate.
    """
    if n < 1:
        raise CochainError(f"orders are solved from 1 on, got {n}")
    if partial.degree != 1:
        raise CochainError(f"partial solution must have degree 1, got {partial.degree}")
    P0 = graded_p0(P0, n)
    omega = partial.with_order(n - 1).with_order(n)
    residual = mc_residual(omega)
    low = _first_low_level(residual, n)
    if low is not None:
        t, m = low
        w = Witness(list(t), FormalSymbol.zero(omega.dimension, n), residual.values[t])
        w.note = f"partial solution has a nonzero residual at level {m}"
        raise NotMaurerCartanError(w)
    rhs = -residual.level(n)

    if rhs.is_zero():
        _record_zero(trace, n, n, 1)
        return zero_cochain(P0.action, 1, n)
    closed = twisted_differential(P0, rhs)
    if not closed.is_zero():
        raise ConsistencyError("solve_order", f"right-hand side at order {n} is not a d_P0-cocycle")

    lmap = matrix_of_twisted_d(P0, n, 1, max(rhs.x_degree(), 0))
    result = solve_in_window(lmap, rhs, problem="mc_extend", order=n, trace=trace)
    if isinstance(result, Cochain) and twisted_differential(P0, result) != rhs:
        raise ConsistencyError("solve_order", f"solution at order {n} does not reproduce the right-hand side")
    return result


def mc_extend(P0, P1: Cochain, N: int, *, trace: ExtensionTrace = None) -> MCElement:
    """
    ω = P0 + ħP1 + O(ħ²), Maurer-Cartan through ħ^N. ``P1`` contributes its
    ħ¹ level and must be d_{P0}-closed. Raises ObstructionError when some
    order cannot be solved.
    """
    P0 = as_mc_element(P0)
    if N < 0:
        raise CochainError(f"truncation order must be nonnegative, got {N}")
    base = graded_p0(P0, max(N, 1))
    first = P1.with_order(max(N, 1)).level(1)
    closed = twisted_differential(base, first).level(1)
    if not closed.is_zero():
        raise NotCocycleError("P1", closed.nonzero_tuples())
    omega = base + first
    if trace is not None and N >= 1:
        record = OrderRecord(1, Window(1, 1, max(first.x_degree(), 0), None), None, None, first.is_zero())
        record.source = "input"
        trace.records.append(record)
    for n in range(2, N + 1):
        result = solve_order(P0, omega, n, trace=trace)
        if isinstance(result, ObstructionCertificate):
            raise ObstructionError(result)
        omega = omega + result.with_order(omega.order)
    omega = MCElement(omega.with_order(N))
    logger.info("extended to a Maurer-Cartan element through order %d", N)
    return omega


def rigidity_gauge(a, N: int, *, trace: ExtensionTrace = None) -> FormalSymbol:
    """
    A unit u = 1 + ħu¹ + ... + ħ^N u^N with a_g ⋆ u = u ⋆ P0_g for every g,
    where P0 is the ħ^0 part of ``a``. Raises ObstructionError when some
    order cannot be solved.
    """
    a = as_mc_element(a)
    if N < 0:
        raise CochainError(f"truncation order must be nonnegative, got {N}")
    a = a.with_order(N) if a.order != N else a
    P0 = graded_p0(a, N)
    d = a.dimension
    u = FormalSymbol.one(d, N)
    for m in range(1, N + 1):
        U = degree_zero_cochain(a.action, u)
        mismatch = cup_star(a, U) - cup_star(U, P0)
        if _first_low_level(mismatch, m) is not None:
            raise ConsistencyError("rigidity_gauge", f"intertwining defect below order {m} is nonzero")
        rhs = -mismatch.level(m)
        if rhs.is_zero():
            _record_zero(trace, m, m, 0)
            continue
        P0m = graded_p0(P0, m)
        rhs_m = rhs.with_order(m)
        if not twisted_differential(P0m, rhs_m).is_zero():
            raise ConsistencyError("rigidity_gauge", f"defect at order {m} is not a d_P0-cocycle")
        lmap = matrix_of_twisted_d(P0m, m, 0, max(rhs_m.x_degree(), 0))
        result = solve_in_window(lmap, rhs_m, problem="rigidity_gauge", order=m, trace=trace)
        if isinstance(result, ObstructionCertificate):
            raise ObstructionError(result)
        u = u + result[()].with_order(N)

    invert_unit(u)
    if not gauge_relation_check(a, P0, u).passed:
        raise ConsistencyError("rigidity_gauge", "constructed unit does not intertwine")
    logger.info("gauged to the leading term through order %d", N)
    return u
