from .basis import (CochainSpace,
                    CochainVector,
                    GradedBasis,
                    WindowError,
                    )
from .linear import EchelonForm, LinearMap, echelon
from .cohomology import (NotCocycleError,
                         TrivialActionRequiredError,
                         averaging_homotopy_oracle,
                         cocycle_basis,
                         cohomology_report,
                         graded_p0,
                         matrix_of_twisted_d,
                         trivial_action_split_check,
                         x_degree_shift,
                         )
from .extension import (ObstructionError,
                        mc_extend,
                        rigidity_gauge,
                        solve_in_window,
                        solve_order,
                        )

__all__ = (
    "CochainSpace",
    "CochainVector",
    "GradedBasis",
    "WindowError",
    "EchelonForm",
    "LinearMap",
    "echelon",
    "NotCocycleError",
    "TrivialActionRequiredError",
    "averaging_homotopy_oracle",
    "cocycle_basis",
    "cohomology_report",
    "graded_p0",
    "matrix_of_twisted_d",
    "trivial_action_split_check",
    "x_degree_shift",
    "ObstructionError",
    "mc_extend",
    "rigidity_gauge",
    "solve_in_window",
    "solve_order",
)
