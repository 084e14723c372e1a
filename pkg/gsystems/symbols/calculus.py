"""
Symbol calculus for formal operators Op(P, φ)ψ(x) = Σ_n ħⁿ (Pⁿ(x, D)ψ)(φ⁻¹x)
with D = -i∂. Coefficients f_α(x) of Pⁿ are evaluated at x; only the
differentiated argument is pulled back.
"""
import logging

from gsystems.algebra import (ONE,
                              AffineDiffeo,
                              DimensionError,
                              PolyFunction,
                              affine_compose,
                              inverse_factorial,
                              minus_i_power,
                              multi_indices,
                              poly_compose_affine,
                              )
from gsystems.symbols.formal import (Amplitude,
                                     FormalFunction,
                                     FormalSymbol,
                                     NonInvertibleError,
                                     TruncationError,
                                     )
from gsystems.symbols.xipolynomial import XiPolynomial

__all__ = (
    "diff_op_apply",
    "op_apply",
    "asymptotic_symbol",
    "amplitude_from_symbol",
    "conjugate_by_diffeo",
    "diffop_symbol_compose",
    "star_compose",
    "invert_unit",
)

logger = logging.getLogger(__name__)


def _derivative(f: PolyFunction, alpha) -> PolyFunction:
    for j, a in enumerate(alpha, start=1):
        for _ in range(a):
            f = f.partial(j)
    return f


def diff_op_apply(P: XiPolynomial, f: PolyFunction) -> PolyFunction:
    """
    P(x, D)f = Σ_α f_α(x) (-i)^{|α|} ∂^α f.
    """
    if P.dimension != f.dimension:
        raise DimensionError(P.dimension, f.dimension)
    out = PolyFunction.zero(f.dimension)
    for alpha, coeff in P.coefficients().items():
        df = _derivative(f, alpha)
        if df:
            out = out + coeff * df.scale(minus_i_power(sum(alpha)))
    return out


def op_apply(P: FormalSymbol, phi: AffineDiffeo, psi: FormalFunction) -> FormalFunction:
    """
    Apply Op(P, φ) to a formal function. The result is truncated at
    min(order of P, order of ψ).
    """
    if not P.dimension == phi.dimension == psi.dimension:
        raise DimensionError(P.dimension, (phi.dimension, psi.dimension))
    order = min(P.order, psi.order)
    phi_inv = phi.inverse()
    levels = []
    for m in range(order + 1):
        acc = PolyFunction.zero(P.dimension)
        for n in range(m + 1):
            Pn, psik = P.level(n), psi.level(m - n)
            if not Pn or not psik:
                continue
            for alpha, coeff in Pn.coefficients().items():
                df = _derivative(psik, alpha)
                if df:
                    pulled = poly_compose_affine(df.scale(minus_i_power(sum(alpha))), phi_inv)
                    acc = acc + coeff * pulled
        levels.append(acc)
    return FormalFunction(P.dimension, levels)


def asymptotic_symbol(a: Amplitude, order: int) -> FormalSymbol:
    """
    Pⁿ = Σ_{|α|≤n} (1/α!)(∂_ξ^α a^{n-|α|})(x, 0) ξ^α. The Taylor term of
    order α at ξ = 0 is the ξ^α part of the amplitude, so Pⁿ collects the
    ξ-homogeneous degree-j part of a^{n-j}.
    """
    if a.order < order:
        raise TruncationError(order, a.order)
    levels = []
    for n in range(order + 1):
        acc = XiPolynomial.zero(a.dimension)
        for j in range(n + 1):
            acc = acc + a.level(n - j).xi_homogeneous_part(j)
        levels.append(acc)
    return FormalSymbol(a.dimension, levels)


def amplitude_from_symbol(P: FormalSymbol) -> Amplitude:
    """
    Place the ξ-degree-j part of Pⁿ at amplitude level n - j. Right inverse
    of ``asymptotic_symbol`` at the same order.
    """
    levels = [XiPolynomial.zero(P.dimension) for _ in range(P.order + 1)]
    for n, lv in enumerate(P.levels):
        for j in range(n + 1):
            part = lv.xi_homogeneous_part(j)
            if part:
                levels[n - j] = levels[n - j] + part
    return Amplitude(P.dimension, levels)


def conjugate_by_diffeo(P: XiPolynomial, phi: AffineDiffeo) -> XiPolynomial:
    """
    P̃(y, ξ) = P(φ(y), Cᵀξ) with C the Jacobian of φ⁻¹, so that
    P(x, D)(ψ∘φ⁻¹) = (P̃(y, D)ψ)∘φ⁻¹.
    """
    if phi.is_identity():
        return P
    return P.precompose(phi).transform_xi(phi.inverse_matrix)


def diffop_symbol_compose(P: XiPolynomial, K: XiPolynomial) -> XiPolynomial:
    """
    Symbol of P(x, D)∘K(x, D): Σ_α (1/α!) ∂_ξ^α P · (-i)^{|α|} ∂_x^α K.
    """
    if P.dimension != K.dimension:
        raise DimensionError(P.dimension, K.dimension)
    if not P or not K:
        return XiPolynomial.zero(P.dimension)
    top = min(P.xi_degree(), K.x_degree())
    out = XiPolynomial.zero(P.dimension)
    for alpha in multi_indices(P.dimension, top):
        dP = P.diff_xi_multi(alpha)
        if not dP:
            continue
        dK = K.diff_x_multi(alpha)
        if not dK:
            continue
        weight = inverse_factorial(alpha) * minus_i_power(sum(alpha))
        out = out + (dP * dK).scale(weight)
    return out


def star_compose(P: FormalSymbol, phi1: AffineDiffeo, K: FormalSymbol, phi2: AffineDiffeo) -> FormalSymbol:
    """
    The symbol P ⋆ K with Op(P, φ₁)∘Op(K, φ₂) = Op(P ⋆ K, φ₁∘φ₂).

    (P ⋆ K)^m(z, ξ) = Σ_{n+k=m} [P̃ⁿ # K̃ᵏ]((φ₁φ₂)⁻¹z, ξ) where
    P̃ⁿ(y, ξ) = Pⁿ(φ₁φ₂y, C₂ᵀξ), K̃ᵏ(y, ξ) = Kᵏ(φ₂y, ξ) and # is
    ``diffop_symbol_compose``.
    """
    if not P.dimension == K.dimension == phi1.dimension == phi2.dimension:
        raise DimensionError(P.dimension, (K.dimension, phi1.dimension, phi2.dimension))
    if P.order != K.order:
        raise TruncationError(P.order, K.order)
    d, N = P.dimension, P.order
    if P.is_zero() or K.is_zero():
        return FormalSymbol.zero(d, N)

    phi12 = affine_compose(phi1, phi2)
    rho = phi12.inverse()
    P_tilde = [conjugate_by_diffeo(lv.precompose(phi1), phi2) for lv in P.levels]
    K_tilde = [lv.precompose(phi2) for lv in K.levels]

    levels = []
    for m in range(N + 1):
        acc = XiPolynomial.zero(d)
        for n in range(m + 1):
            acc = acc + diffop_symbol_compose(P_tilde[n], K_tilde[m - n])
        levels.append(acc.precompose(rho))
    return FormalSymbol(d, levels)


def invert_unit(u: FormalSymbol) -> FormalSymbol:
    """
    The two-sided inverse of ``u`` for ⋆ at trivial diffeomorphisms.
    Requires u⁰ to be a nonzero constant.
    """
    lead = u.levels[0]
    if not lead:
        raise NonInvertibleError("leading term is zero")
    if lead.x_degree() > 0 or lead.xi_degree() > 0:
        raise NonInvertibleError(f"leading term {lead} is not a constant")
    d, N = u.dimension, u.order
    c = lead.to_function().constant_term()
    inv_c = ONE / c

    v = [XiPolynomial.constant(d, inv_c)]
    for m in range(1, N + 1):
        acc = XiPolynomial.zero(d)
        for n in range(1, m + 1):
            acc = acc + diffop_symbol_compose(u.level(n), v[m - n])
        v.append(acc.scale(-inv_c))
    inverse = FormalSymbol(d, v)

    identity = AffineDiffeo.identity(d)
    one = FormalSymbol.one(d, N)
    if star_compose(u, identity, inverse, identity) != one or star_compose(inverse, identity, u, identity) != one:
        raise NonInvertibleError("order-by-order inverse failed verification")
    logger.debug("inverted unit of order %d", N)
    return inverse
