from .group import (FiniteGroup,
                    GroupAxiomError,
                    build_group,
                    cyclic_group,
                    enumerate_tuples,
                    symmetric_group,
                    )
from .action import (ActionError,
                     AffineAction,
                     action_validate,
                     cyclic_action,
                     permutation_action,
                     trivial_action,
                     validated_action,
                     )

__all__ = (
    "FiniteGroup",
    "GroupAxiomError",
    "build_group",
    "cyclic_group",
    "enumerate_tuples",
    "symmetric_group",
    "ActionError",
    "AffineAction",
    "action_validate",
    "cyclic_action",
    "permutation_action",
    "trivial_action",
    "validated_action",
)
