"""
Left actions of finite groups on R^d by affine maps, g ↦ φ_g with
φ_{gh} = φ_g∘φ_h.
"""
import logging

from sympy import QQ_I

from gsystems.algebra import AffineDiffeo, DimensionError, affine_compose
from gsystems.errors import GSystemsError
from gsystems.groups.group import FiniteGroup
from gsystems.objects import ActionReport, Witness

__all__ = (
    "ActionError",
    "AffineAction",
    "action_validate",
    "validated_action",
    "cyclic_action",
    "permutation_action",
    "trivial_action",
)

logger = logging.getLogger(__name__)


class ActionError(GSystemsError):
    """
    raised when an action is incomplete or fails validation where a valid one is required
    """
    def __init__(self, reason, witnesses=None):
        self.reason = reason
        self.witnesses = witnesses or []
        super().__init__(f"invalid action: {reason}")


class AffineAction:
    """
    Args:
        group: the acting FiniteGroup
        maps: dict element -> AffineDiffeo, one entry per element
    """
    __slots__ = ("group", "maps", "dimension", "_inverse_maps")

    def __init__(self, group: FiniteGroup, maps: dict):
        missing = [g for g in group.elements if g not in maps]
        if missing:
            raise ActionError(f"no map for elements {missing}", missing)
        extra = [g for g in maps if g not in group]
        if extra:
            raise ActionError(f"maps given for unknown elements {extra}", extra)
        dims = {maps[g].dimension for g in group.elements}
        if len(dims) != 1:
            raise DimensionError("a single dimension", sorted(dims), "action maps")
        self.group = group
        self.maps = {g: maps[g] for g in group.elements}
        self.dimension = dims.pop()
        self._inverse_maps = {}

    def phi(self, g) -> AffineDiffeo:
        return self.maps[g]

    def phi_inverse(self, g) -> AffineDiffeo:
        if g not in self._inverse_maps:
            self._inverse_maps[g] = self.maps[g].inverse()
        return self._inverse_maps[g]

    def phi_of_tuple(self, elements) -> AffineDiffeo:
        """
        φ_{g₁⋯g_k}; the identity map for the empty tuple.
        """
        return self.maps[self.group.product(elements)]

    def is_trivial(self) -> bool:
        return all(phi.is_identity() for phi in self.maps.values())

    def is_linear(self) -> bool:
        return not any(any(phi.offset) for phi in self.maps.values())

    def __eq__(self, other):
        if not isinstance(other, AffineAction):
            return NotImplemented
        return self.group == other.group and self.maps == other.maps

    def __hash__(self):
        return hash((self.group, tuple(self.maps.items())))

    def __repr__(self):
        return f"AffineAction(d={self.dimension}, group={list(self.group.elements)})"


def action_validate(action: AffineAction) -> ActionReport:
    """
    Check φ_e = id and φ_{gh} = φ_g∘φ_h for every pair. Failures are
    reported with the offending element or pair; nothing is raised.
    """
    G = action.group
    report = ActionReport("action", True, 1 + G.order ** 2)
    if not action.phi(G.identity).is_identity():
        w = Witness([G.identity], "identity map", repr(action.phi(G.identity)))
        w.note = "identity element does not act as the identity"
        report.add_witness(w)
    for g in G.elements:
        for h in G.elements:
            composed = affine_compose(action.phi(g), action.phi(h))
            target = action.phi(G.mul(g, h))
            if composed != target:
                w = Witness([g, h], repr(target), repr(composed))
                w.note = f"phi_{g} o phi_{h} differs from phi_{G.mul(g, h)}"
                report.add_witness(w)
    if not report.passed:
        logger.info("action validation failed with %d witnesses", len(report.witnesses))
    return report


def validated_action(action: AffineAction) -> AffineAction:
    report = action_validate(action)
    if not report.passed:
        first = report.witnesses[0]
        raise ActionError(f"not a left action, first failure at {first.arguments}: {first.note}", report.witnesses)
    return action


def trivial_action(group: FiniteGroup, dimension: int) -> AffineAction:
    identity = AffineDiffeo.identity(dimension)
    return AffineAction(group, {g: identity for g in group.elements})


def cyclic_action(group: FiniteGroup, generator, phi: AffineDiffeo) -> AffineAction:
    """
    The action of a cyclic group generated by ``generator`` sending it to φ.
    Raises ActionError when ``generator`` does not generate the group or φ
    does not have the right order.
    """
    maps = {group.identity: AffineDiffeo.identity(phi.dimension)}
    g, current = generator, phi
    while g != group.identity:
        if g in maps:
            raise ActionError(f"{generator} does not generate a cyclic subgroup cleanly")
        maps[g] = current
        g = group.mul(g, generator)
        current = affine_compose(current, phi)
    if len(maps) != group.order:
        raise ActionError(f"{generator} generates a proper subgroup of order {len(maps)}")
    return validated_action(AffineAction(group, maps))


def permutation_action(group: FiniteGroup) -> AffineAction:
    """
    S_n acting on R^n by permutation matrices, P_σ e_j = e_{σ(j)}. Labels
    must be the one-line notation used by ``symmetric_group``.
    """
    n = len(group.identity)
    maps = {}
    for label in group.elements:
        sigma = [int(c) for c in label]
        rows = [[QQ_I.zero] * n for _ in range(n)]
        for j in range(n):
            rows[sigma[j]][j] = QQ_I.one
        maps[label] = AffineDiffeo(rows)
    return validated_action(AffineAction(group, maps))
