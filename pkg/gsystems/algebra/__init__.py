from .base import (AxisError,
                   DimensionError,
                   SingularMapError,
                   graded_key,
                   multi_indices,
                   )
from .scalars import (GaussianRational,
                      I,
                      ONE,
                      ZERO,
                      format_rational,
                      gaussian,
                      inverse_factorial,
                      minus_i_power,
                      parse_rational,
                      scalar_from_json,
                      scalar_to_json,
                      to_scalar,
                      )
from .polyfunction import (PolyFunction,
                           poly_compose_affine,
                           poly_mul,
                           poly_partial,
                           x_ring,
                           )
from .affine import AffineDiffeo, affine_compose, affine_invert

__all__ = (
    "AxisError",
    "DimensionError",
    "SingularMapError",
    "graded_key",
    "multi_indices",
    "GaussianRational",
    "I",
    "ONE",
    "ZERO",
    "format_rational",
    "gaussian",
    "inverse_factorial",
    "minus_i_power",
    "parse_rational",
    "scalar_from_json",
    "scalar_to_json",
    "to_scalar",
    "PolyFunction",
    "poly_compose_affine",
    "poly_mul",
    "poly_partial",
    "x_ring",
    "AffineDiffeo",
    "affine_compose",
    "affine_invert",
)
