from .xipolynomial import XiPolynomial, xi_ring
from .formal import (Amplitude,
                     FormalFunction,
                     FormalSymbol,
                     GradingError,
                     NonInvertibleError,
                     TruncationError,
                     )
from .calculus import (amplitude_from_symbol,
                       asymptotic_symbol,
                       conjugate_by_diffeo,
                       diff_op_apply,
                       diffop_symbol_compose,
                       invert_unit,
                       op_apply,
                       star_compose,
                       )

__all__ = (
    "XiPolynomial",
    "xi_ring",
    "Amplitude",
    "FormalFunction",
    "FormalSymbol",
    "GradingError",
    "NonInvertibleError",
    "TruncationError",
    "amplitude_from_symbol",
    "asymptotic_symbol",
    "conjugate_by_diffeo",
    "diff_op_apply",
    "diffop_symbol_compose",
    "invert_unit",
    "op_apply",
    "star_compose",
)
