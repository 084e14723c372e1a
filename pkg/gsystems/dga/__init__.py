from .cochain import (Cochain,
                      CochainError,
                      NormalizationError,
                      constant_cochain,
                      unit_cochain,
                      zero_cochain,
                      )
from .complex import (MCElement,
                      NotMaurerCartanError,
                      as_mc_element,
                      coboundary,
                      cup_star,
                      degree_zero_cochain,
                      differential_d,
                      mc_residual,
                      twisted_differential,
                      )
from .checks import (CocycleInputError,
                     ConsistencyError,
                     NotXiIndependentError,
                     additive_cocycle_check,
                     dga_axioms_check,
                     mc_check,
                     coboundary_intertwiner_check,
                     conjugate_by_unit,
                     gauge_relation_check,
                     monomial_probes,
                     operator_representation_check,
                     quotient_differential_check,
                     representation_check,
                     xi_multiplicative_cocycle_check,
                     )

__all__ = (
    "Cochain",
    "CochainError",
    "NormalizationError",
    "constant_cochain",
    "unit_cochain",
    "zero_cochain",
    "MCElement",
    "NotMaurerCartanError",
    "as_mc_element",
    "coboundary",
    "cup_star",
    "degree_zero_cochain",
    "differential_d",
    "mc_residual",
    "twisted_differential",
    "CocycleInputError",
    "ConsistencyError",
    "NotXiIndependentError",
    "additive_cocycle_check",
    "dga_axioms_check",
    "mc_check",
    "coboundary_intertwiner_check",
    "conjugate_by_unit",
    "gauge_relation_check",
    "monomial_probes",
    "operator_representation_check",
    "quotient_differential_check",
    "representation_check",
    "xi_multiplicative_cocycle_check",
)
