"""
Report-valued checks on cochains: representations, gauge relations and the
ξ-independent (multiplicative and additive) cocycle conditions.

A failed check returns a report with witnesses. Exceptions are raised only
for violated preconditions, or when two independent computations disagree.
"""
import logging
from itertools import product

from gsystems.algebra import AffineDiffeo, PolyFunction, multi_indices, poly_compose_affine, poly_mul
from gsystems.errors import GSystemsError
from gsystems.groups import AffineAction, enumerate_tuples
from gsystems.objects import CheckReport, Witness
from gsystems.symbols import FormalFunction, FormalSymbol, invert_unit, op_apply, star_compose
from gsystems.dga.cochain import Cochain, CochainError, zero_cochain
from gsystems.dga.complex import (MCElement,
                                  as_mc_element,
                                  cup_star,
                                  differential_d,
                                  mc_residual,
                                  twisted_differential,
                                  )

__all__ = (
    "ConsistencyError",
    "NotXiIndependentError",
    "CocycleInputError",
    "mc_check",
    "dga_axioms_check",
    "representation_check",
    "gauge_relation_check",
    "conjugate_by_unit",
    "xi_multiplicative_cocycle_check",
    "additive_cocycle_check",
    "coboundary_intertwiner_check",
    "operator_representation_check",
    "quotient_differential_check",
    "monomial_probes",
)

logger = logging.getLogger(__name__)


class ConsistencyError(GSystemsError):
    """
    raised when two independent computations of the same quantity disagree
    """
    def __init__(self, what, detail=""):
        self.what = what
        self.detail = detail
        super().__init__(f"internal inconsistency in {what}{': ' + detail if detail else ''}")


class NotXiIndependentError(GSystemsError):
    """
    raised when a check restricted to ξ-free, ħ-free cochains receives anything else
    """
    def __init__(self, element):
        self.element = element
        super().__init__(f"value at {element} depends on xi or on h")


class CocycleInputError(GSystemsError):
    """
    raised when an additive phase table violates a precondition of a check
    """
    def __init__(self, reason):
        self.reason = reason
        super().__init__(f"invalid additive cocycle input: {reason}")


def _require_degree_one(a, what):
    if a.degree != 1:
        raise CochainError(f"{what} needs a degree-1 cochain, got degree {a.degree}")


def _symbol_witness(arguments, expected, actual, note=None):
    w = Witness(list(arguments), expected, actual)
    w.difference = actual - expected
    w.note = note
    return w


def representation_check(a: Cochain) -> CheckReport:
    """
    a_{g₁} ⋆ a_{g₂} = a_{g₁g₂} (with φ_{g₁}, φ_{g₂}) for every pair. The
    verdict is cross-checked against the Maurer-Cartan residual.
    """
    _require_degree_one(a, "representation check")
    G, action = a.group, a.action
    report = CheckReport("representation", True, G.order ** 2)
    for g1, g2 in product(G.elements, repeat=2):
        composed = star_compose(a[g1], action.phi(g1), a[g2], action.phi(g2))
        target = a[G.mul(g1, g2)]
        if composed != target:
            report.add_witness(_symbol_witness((g1, g2), target, composed, f"a_{g1} * a_{g2} != a_{G.mul(g1, g2)}"))

    residual = mc_residual(a)
    residual_zero = residual.is_zero()
    if residual_zero != report.passed:
        raise ConsistencyError("representation check", "verdict disagrees with the Maurer-Cartan residual")
    failing = {tuple(w.arguments) for w in report.witnesses}
    if failing != set(residual.nonzero_tuples()):
        raise ConsistencyError("representation check", "witnesses disagree with the Maurer-Cartan residual")
    report.details = {"mc_residual_zero": residual_zero, "normalized": a.is_normalized()}
    if not report.passed:
        logger.info("representation check failed at %d pairs", len(report.witnesses))
    return report


def gauge_relation_check(a, b, u: FormalSymbol) -> CheckReport:
    """
    a_g ⋆ u = u ⋆ b_g for all g, with u at the identity map. Raises
    NonInvertibleError when u has no inverse.
    """
    a, b = as_mc_element(a), as_mc_element(b)
    if a.action != b.action:
        raise CochainError("gauge relation between cochains over different actions")
    invert_unit(u)
    identity = AffineDiffeo.identity(a.dimension)
    report = CheckReport("gauge", True, a.group.order)
    for g in a.group.elements:
        phi = a.action.phi(g)
        left = star_compose(a[g], phi, u, identity)
        right = star_compose(u, identity, b[g], phi)
        if left != right:
            report.add_witness(_symbol_witness((g,), right, left, f"a_{g} * u != u * b_{g}"))
    if not report.passed:
        logger.info("gauge relation failed at %d elements", len(report.witnesses))
    return report


def conjugate_by_unit(a, u: FormalSymbol) -> MCElement:
    """
    b_g = u⁻¹ ⋆ a_g ⋆ u. The result is verified Maurer-Cartan and gauge
    related to ``a`` through ``u``.
    """
    a = as_mc_element(a)
    u_inv = invert_unit(u)
    identity = AffineDiffeo.identity(a.dimension)
    values = {}
    for g in a.group.elements:
        phi = a.action.phi(g)
        values[(g,)] = star_compose(star_compose(u_inv, identity, a[g], phi), phi, u, identity)
    b = MCElement(Cochain(a.action, 1, values))
    if not gauge_relation_check(a, b, u).passed:
        raise ConsistencyError("conjugate_by_unit", "conjugated element is not gauge related to its source")
    return b


def xi_multiplicative_cocycle_check(a: Cochain) -> CheckReport:
    """
    a_{g₁g₂}(x) = a_{g₁}(x) a_{g₂}(φ_{g₁}⁻¹(x)) for ξ-free, ħ-free values.
    Cross-checked against the Maurer-Cartan residual.
    """
    _require_degree_one(a, "multiplicative cocycle check")
    for (g,), v in a.items():
        if not v.is_classical():
            raise NotXiIndependentError(g)
    G, action = a.group, a.action
    f = {g: a[g].leading_function() for g in G.elements}
    report = CheckReport("multiplicative_cocycle", True, G.order ** 2)
    for g1, g2 in product(G.elements, repeat=2):
        lhs = f[G.mul(g1, g2)]
        rhs = poly_mul(f[g1], poly_compose_affine(f[g2], action.phi_inverse(g1)))
        if lhs != rhs:
            w = Witness([g1, g2], lhs, rhs)
            w.difference = rhs - lhs
            report.add_witness(w)
    residual_zero = mc_residual(a).is_zero()
    if residual_zero != report.passed:
        raise ConsistencyError("multiplicative cocycle check", "verdict disagrees with the Maurer-Cartan residual")
    report.details = {"mc_residual_zero": residual_zero}
    return report


def _phase_table(action: AffineAction, S: dict) -> dict:
    table = {}
    for g in action.group.elements:
        if g not in S:
            raise CocycleInputError(f"no phase for element {g}")
        if S[g].dimension != action.dimension:
            raise CocycleInputError(f"phase of {g} has dimension {S[g].dimension}, action has {action.dimension}")
        table[g] = S[g]
    return table


def additive_cocycle_check(action: AffineAction, S: dict) -> CheckReport:
    """
    S_{g₁g₂} = S_{g₁} + S_{g₂}∘φ_{g₁}⁻¹ for a table of phase functions,
    the linearized form of the multiplicative condition on e^{iS}.
    """
    S = _phase_table(action, S)
    G = action.group
    if S[G.identity]:
        raise CocycleInputError(f"phase at the identity must vanish, got {S[G.identity]}")
    report = CheckReport("additive_cocycle", True, G.order ** 2)
    for g1, g2 in product(G.elements, repeat=2):
        lhs = S[G.mul(g1, g2)]
        rhs = S[g1] + poly_compose_affine(S[g2], action.phi_inverse(g1))
        if lhs != rhs:
            w = Witness([g1, g2], lhs, rhs)
            w.difference = rhs - lhs
            report.add_witness(w)
    return report


def coboundary_intertwiner_check(action: AffineAction, S: dict, S_tilde: dict, K: PolyFunction) -> CheckReport:
    """
    S̃_g - S_g = K∘φ_g⁻¹ - K for every g: the additive content of
    Op(e^{iS}, φ)∘K̂ = K̂∘Op(e^{iS̃}, φ).
    """
    for name, table in (("S", S), ("S_tilde", S_tilde)):
        if not additive_cocycle_check(action, table).passed:
            raise CocycleInputError(f"{name} is not an additive cocycle")
    if K.dimension != action.dimension:
        raise CocycleInputError(f"K has dimension {K.dimension}, action has {action.dimension}")
    report = CheckReport("coboundary_intertwiner", True, action.group.order)
    for g in action.group.elements:
        lhs = S_tilde[g] - S[g]
        rhs = poly_compose_affine(K, action.phi_inverse(g)) - K
        if lhs != rhs:
            w = Witness([g], rhs, lhs)
            w.difference = lhs - rhs
            report.add_witness(w)
    return report


def monomial_probes(dimension: int, max_degree: int, order: int) -> list:
    """
    Formal functions x^β, |β| ≤ max_degree, placed at ħ^0.
    """
    return [
        FormalFunction.from_function(PolyFunction.monomial(dimension, beta), order)
        for beta in multi_indices(dimension, max_degree)
    ]


def operator_representation_check(a: Cochain, probes=None, max_degree: int = 3) -> CheckReport:
    """
    Op(a_{g₁g₂}, φ_{g₁g₂})ψ = Op(a_{g₁}, φ_{g₁}) Op(a_{g₂}, φ_{g₂})ψ on probe
    functions, by operator application only.
    """
    _require_degree_one(a, "operator representation check")
    if probes is None:
        probes = monomial_probes(a.dimension, max_degree, a.order)
    G, action = a.group, a.action
    report = CheckReport("operator_representation", True, G.order ** 2 * len(probes))
    for g1, g2 in product(G.elements, repeat=2):
        g12 = G.mul(g1, g2)
        for psi in probes:
            lhs = op_apply(a[g12], action.phi(g12), psi)
            rhs = op_apply(a[g1], action.phi(g1), op_apply(a[g2], action.phi(g2), psi))
            if lhs != rhs:
                w = Witness([g1, g2], lhs, rhs)
                w.note = f"probe {psi.levels[0]}"
                report.add_witness(w)
                break
    return report


def quotient_differential_check(P0, P1: Cochain, a: Cochain) -> CheckReport:
    """
    With γ = P0 + ħP1 (``P1`` given as a degree-1 cochain in F¹), the
    γ-twisted commutator differential agrees with d_{P0} on the lowest
    ħ-level of ``a``.
    """
    P0 = as_mc_element(P0)
    _require_degree_one(P1, "quotient differential check")
    if P1.filtration_degree() < 1:
        raise CochainError("the correction term must vanish at order 0")
    gamma = P0 + P1
    sign = -1 if a.degree % 2 == 0 else 1
    d_gamma = differential_d(a) + cup_star(gamma, a) + cup_star(a, gamma).scale(sign)
    d_P0 = twisted_differential(P0, a)
    lowest = a.filtration_degree()
    report = CheckReport("quotient_differential", True, len(enumerate_tuples(a.group, a.degree + 1)))
    report.details = {"level": lowest}
    if lowest > a.order:
        return report
    left, right = d_gamma.level(lowest), d_P0.level(lowest)
    for t in left.values:
        if left.values[t] != right.values[t]:
            report.add_witness(_symbol_witness(t, right.values[t], left.values[t], f"level {lowest}"))
    return report


def mc_check(a: Cochain) -> CheckReport:
    """
    da + a ⋆ a = 0, with one witness per pair where the residual is nonzero.
    """
    _require_degree_one(a, "Maurer-Cartan check")
    residual = mc_residual(a)
    report = CheckReport("mc", True, len(residual.values))
    zero = FormalSymbol.zero(a.dimension, a.order)
    for t in residual.nonzero_tuples():
        report.add_witness(_symbol_witness(t, zero, residual.values[t], "nonzero Maurer-Cartan residual"))
    report.details = {"normalized": a.is_normalized()}
    if not report.passed:
        logger.info("Maurer-Cartan check failed at %d pairs", len(report.witnesses))
    return report


def dga_axioms_check(cochains: dict) -> CheckReport:
    """
    d∘d = 0 on every named cochain, the graded Leibniz rule on every ordered
    pair and associativity of ⋆ on every ordered triple. Witness arguments
    start with the cochain names involved.
    """
    named = sorted(cochains.items())
    report = CheckReport("dga", True, 0)

    def compare(names, identity, left, right):
        report.checked += 1
        for t in left.values:
            if left.values[t] != right.values[t]:
                report.add_witness(_symbol_witness(list(names) + list(t), right.values[t], left.values[t], identity))
                return

    for name, a in named:
        dda = differential_d(differential_d(a))
        compare((name,), "d(d(a)) = 0", dda, zero_cochain(a.action, dda.degree, dda.order))
    for (na, a), (nb, b) in product(named, repeat=2):
        sign = -1 if a.degree % 2 else 1
        lhs = differential_d(cup_star(a, b))
        rhs = cup_star(differential_d(a), b) + cup_star(a, differential_d(b)).scale(sign)
        compare((na, nb), "d(a*b) = da*b + (-1)^|a| a*db", lhs, rhs)
    for (na, a), (nb, b), (nc, c) in product(named, repeat=3):
        lhs = cup_star(cup_star(a, b), c)
        rhs = cup_star(a, cup_star(b, c))
        compare((na, nb, nc), "(a*b)*c = a*(b*c)", lhs, rhs)
    if not report.passed:
        logger.info("DGA axioms failed on %d instances", len(report.witnesses))
    return report
