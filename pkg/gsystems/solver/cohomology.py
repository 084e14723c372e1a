"""
Matrices of the twisted differential d_{P0} on cochain windows, exact
cohomology ranks, and two independent cross-checks: finite-group averaging
and the coefficientwise splitting for trivial actions.
"""
import logging

from sympy import QQ, QQ_I

from gsystems.algebra import AffineDiffeo, PolyFunction
from gsystems.dga import (Cochain,
                          CochainError,
                          ConsistencyError,
                          MCElement,
                          as_mc_element,
                          twisted_differential,
                          unit_cochain,
                          )
from gsystems.errors import GSystemsError
from gsystems.groups import enumerate_tuples
from gsystems.objects import CheckReport, CohomologyReport, OracleResult, Window, Witness
from gsystems.symbols import FormalSymbol, XiPolynomial, star_compose
from gsystems.solver.basis import CochainSpace
from gsystems.solver.linear import LinearMap

__all__ = (
    "NotCocycleError",
    "TrivialActionRequiredError",
    "graded_p0",
    "x_degree_shift",
    "matrix_of_twisted_d",
    "cohomology_report",
    "cocycle_basis",
    "averaging_homotopy_oracle",
    "trivial_action_split_check",
)

logger = logging.getLogger(__name__)

WINDOW_CLOSED = "cohomology"
WINDOW_RELATIVE = "window-relative bound"


class NotCocycleError(GSystemsError):
    """
    raised when a cochain required to be d_{P0}-closed is not
    """
    def __init__(self, what, tuples):
        self.what = what
        self.tuples = tuples
        super().__init__(f"{what} is not a cocycle, nonzero at {tuples[:3]}")


class TrivialActionRequiredError(GSystemsError):
    """
    raised when a check that needs the trivial action receives another one
    """
    def __init__(self, elements):
        self.elements = elements
        super().__init__(f"trivial action required, elements {elements} act nontrivially")


def graded_p0(P0, order: int) -> MCElement:
    """
    The ħ^0 part of a Maurer-Cartan element, re-truncated at ``order``. The
    ħ^0 part of an MC element is MC, and padding it keeps the residual zero.
    """
    P0 = as_mc_element(P0)
    if P0.order == order and P0.level(0) == P0:
        return P0
    return MCElement(P0.level(0).with_order(order))


def x_degree_shift(P0) -> int:
    """
    p = max x-degree of P0: d_{P0} maps x-degree ≤ D to x-degree ≤ D + p.
    """
    return max(0, max(v.levels[0].x_degree() for v in P0.values.values()))


def _differential_columns(P0: MCElement, source: CochainSpace, target: CochainSpace) -> dict:
    entries = {}
    size = len(source.basis)
    for j, t in enumerate(source.tuples):
        for b in range(size):
            col = j * size + b
            image = twisted_differential(P0, source.basis_cochain(col))
            for row, c in target.vector(image).coordinates.items():
                entries[row, col] = c
    return entries


def matrix_of_twisted_d(P0, n: int, k: int, D_in: int) -> LinearMap:
    """
    Matrix of d_{P0}: Pol^k(n) → Pol^{k+1}(n) on the window of x-degree
    ≤ D_in. The codomain window is D_in + p, with p from ``x_degree_shift``.
    Columns are images of basis cochains computed by ``twisted_differential``.
    """
    if n < 0 or k < 0:
        raise CochainError(f"window needs n >= 0 and k >= 0, got n={n}, k={k}")
    P0 = graded_p0(P0, n)
    p = x_degree_shift(P0)
    source = CochainSpace(P0.action, k, n, D_in)
    target = CochainSpace(P0.action, k + 1, n, D_in + p if D_in >= 0 else -1)
    entries = _differential_columns(P0, source, target) if len(source) else {}
    logger.debug("assembled d_P0 on window n=%d k=%d D=%d: %dx%d", n, k, D_in, len(target), len(source))
    return LinearMap(source, target, entries)


def cohomology_report(P0, n: int, k: int, D: int, *, cross_check: bool = False) -> CohomologyReport:
    """
    dim ker(C^k_D → C^{k+1}_{D+p}) - rank(C^{k-1}_{D-p} → C^k_D). When p = 0
    the windows are subcomplexes and the result is the cohomology of the
    window; otherwise it is labeled a window-relative bound.

    With ``cross_check`` the averaging oracle is asked for primitives of the
    kernel basis; it must agree with the rank computation where it applies.
    """
    P0 = graded_p0(P0, n)
    p = x_degree_shift(P0)
    outgoing = matrix_of_twisted_d(P0, n, k, D)
    dim_kernel = len(outgoing.domain) - outgoing.rank()
    if k >= 1 and D - p >= 0:
        dim_image = matrix_of_twisted_d(P0, n, k - 1, D - p).rank()
    else:
        dim_image = 0

    report = CohomologyReport(Window(n, k, D, D + p), len(outgoing.domain), dim_kernel, dim_image)
    report.window_closed = p == 0
    report.label = WINDOW_CLOSED if report.window_closed else WINDOW_RELATIVE
    logger.info("window n=%d k=%d D=%d: ker %d, im %d, H %d (%s)", n, k, D, dim_kernel, dim_image, report.h_dim, report.label)

    if cross_check and k >= 1:
        verdicts = [averaging_homotopy_oracle(P0, v.to_cochain()) for v in outgoing.kernel()]
        if any(not r.applicable for r in verdicts):
            report.oracle = "declined"
        else:
            if report.window_closed and report.h_dim != 0:
                raise ConsistencyError("cohomology report", "averaging found primitives for every cocycle but H is nonzero")
            report.oracle = "exact"
    return report


def cocycle_basis(P0, n: int, k: int, D: int) -> list:
    """
    Kernel basis of d_{P0} on the window, as cochains at ħ-level n.
    """
    return [v.to_cochain() for v in matrix_of_twisted_d(P0, n, k, D).kernel()]


def _constant_values(P0):
    out = {}
    for (g,), v in P0.values.items():
        if not v.is_classical() or v.leading_function().degree() > 0:
            return None
        out[g] = v
    return out


def averaging_homotopy_oracle(P0, z: Cochain) -> OracleResult:
    """
    For constant-valued P0 (a character times the pullback representation)
    and a d_{P0}-cocycle z of degree k ≥ 1,

        w(h₁..h_{k-1}) = (-1)^k |G|⁻¹ Σ_g z(h₁..h_{k-1}, g) ⋆ P0_{g⁻¹}

    satisfies d_{P0} w = z. Declines for non-constant P0.
    """
    if z.degree < 1:
        raise CochainError("averaging needs a cochain of degree >= 1")
    P0 = graded_p0(P0, z.order)
    closed = twisted_differential(P0, z)
    if not closed.is_zero():
        raise NotCocycleError("averaging input", closed.nonzero_tuples())
    constants = _constant_values(P0)
    if constants is None:
        return OracleResult(False, "P0 has non-constant values; averaging does not contract the twisted complex")

    G, action = z.group, z.action
    identity = AffineDiffeo.identity(z.dimension)
    weight = QQ_I(QQ((-1) ** z.degree, G.order), QQ(0))
    zero = FormalSymbol.zero(z.dimension, z.order)
    values = {}
    for h in enumerate_tuples(G, z.degree - 1):
        acc = zero
        for g in G.elements:
            g_inv = G.inv(g)
            acc = acc + star_compose(z.values[h + (g,)], identity, constants[g_inv], action.phi(g_inv))
        values[h] = acc.scale(weight)
    w = Cochain(action, z.degree - 1, values)
    if twisted_differential(P0, w) != z:
        raise ConsistencyError("averaging oracle", "primitive does not reproduce the cocycle")
    result = OracleResult(True, "constant P0")
    result.primitive = w
    return result


def _coefficientwise_group_differential(P: Cochain) -> Cochain:
    """
    Σ_α (δ̃f_α) ξ^α with δ̃ the standard group-cohomology differential with
    trivial coefficients, computed on the coefficient functions f_α level by
    level.
    """
    G, k, d = P.group, P.degree, P.dimension
    values = {}
    for t in enumerate_tuples(G, k + 1):
        faces = [(1, t[1:])]
        for i in range(1, k + 1):
            faces.append(((-1) ** i, t[:i - 1] + (G.mul(t[i - 1], t[i]),) + t[i + 1:]))
        faces.append(((-1) ** (k + 1), t[:k]))
        levels = []
        for m in range(P.order + 1):
            coefficients = {}
            for sign, face in faces:
                for alpha, f in P.values[face].level(m).coefficients().items():
                    acc = coefficients.get(alpha, PolyFunction.zero(d))
                    coefficients[alpha] = acc + f if sign > 0 else acc - f
            levels.append(XiPolynomial.from_coefficients(d, coefficients))
        values[t] = FormalSymbol(d, levels)
    return Cochain(P.action, k + 1, values)


def trivial_action_split_check(P: Cochain) -> CheckReport:
    """
    For the trivial action and P0 = 1, d_{P0} acts coefficientwise as the
    group-cohomology differential: d₁P = Σ_α (δ̃f_α) ξ^α.
    """
    moving = [g for g, phi in P.action.maps.items() if not phi.is_identity()]
    if moving:
        raise TrivialActionRequiredError(moving)
    unit = unit_cochain(P.action, 1, P.order)
    via_dga = twisted_differential(unit, P)
    via_coefficients = _coefficientwise_group_differential(P)
    report = CheckReport("trivial_action_split", True, len(via_dga.values))
    for t, v in via_dga.values.items():
        expected = via_coefficients.values[t]
        if v != expected:
            w = Witness(list(t), expected, v)
            w.difference = v - expected
            report.add_witness(w)
    return report
