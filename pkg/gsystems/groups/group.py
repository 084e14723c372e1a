"""
Finite groups given by multiplication tables.
"""
import logging
from itertools import permutations, product

from gsystems.errors import GSystemsError

__all__ = (
    "GroupAxiomError",
    "FiniteGroup",
    "build_group",
    "enumerate_tuples",
    "cyclic_group",
    "symmetric_group",
)

logger = logging.getLogger(__name__)


class GroupAxiomError(GSystemsError):
    """
    raised when a multiplication table is not a group law
    """
    def __init__(self, axiom, witness):
        self.axiom = axiom
        self.witness = witness
        super().__init__(f"group axiom <{axiom}> violated at {witness}")


class FiniteGroup:
    """
    A validated finite group. Elements are string labels; products, inverses
    and the identity are looked up in precomputed tables.

    Args:
        elements: ordered labels
        table: dict (g, h) -> gh
        identity: label of the identity
        inverses: dict g -> g⁻¹
    """
    __slots__ = ("elements", "table", "identity", "inverses", "_index")

    def __init__(self, elements, table, identity, inverses):
        self.elements = tuple(elements)
        self.table = dict(table)
        self.identity = identity
        self.inverses = dict(inverses)
        self._index = {g: i for i, g in enumerate(self.elements)}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self._index

    def index(self, g) -> int:
        return self._index[g]

    def mul(self, g, h):
        return self.table[g, h]

    def inv(self, g):
        return self.inverses[g]

    def product(self, elements):
        """
        g₁g₂⋯g_k; the identity for the empty tuple.
        """
        out = self.identity
        for g in elements:
            out = self.table[out, g]
        return out

    def table_json(self) -> dict:
        return {f"{g},{h}": self.table[g, h] for g in self.elements for h in self.elements}

    def __eq__(self, other):
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self.elements == other.elements and self.table == other.table

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"FiniteGroup(order={self.order}, elements={list(self.elements)})"


def build_group(elements, table) -> FiniteGroup:
    """
    Validate ``table`` (mapping (g, h) -> gh over ``elements``) as a group
    law. Raises GroupAxiomError naming the violated axiom and a witness.
    """
    elements = [str(g) for g in elements]
    if not elements:
        raise GroupAxiomError("nonempty", [])
    if len(set(elements)) != len(elements):
        raise GroupAxiomError("distinct elements", sorted(g for g in elements if elements.count(g) > 1))
    members = set(elements)
    law = {}
    for g, h in product(elements, repeat=2):
        if (g, h) not in table:
            raise GroupAxiomError("totality", [g, h])
        gh = str(table[g, h])
        if gh not in members:
            raise GroupAxiomError("closure", [g, h, gh])
        law[g, h] = gh

    for g, h, k in product(elements, repeat=3):
        if law[law[g, h], k] != law[g, law[h, k]]:
            raise GroupAxiomError("associativity", [g, h, k])

    identity = next(
        (e for e in elements if all(law[e, g] == g and law[g, e] == g for g in elements)),
        None,
    )
    if identity is None:
        raise GroupAxiomError("identity", elements)

    inverses = {}
    for g in elements:
        inverse = next((h for h in elements if law[g, h] == identity and law[h, g] == identity), None)
        if inverse is None:
            raise GroupAxiomError("inverse", [g])
        inverses[g] = inverse

    logger.debug("validated group of order %d", len(elements))
    return FiniteGroup(elements, law, identity, inverses)


def enumerate_tuples(group: FiniteGroup, k: int) -> list:
    """
    G^k in lexicographic order of the element list; [()] when k = 0.
    """
    if k < 0:
        raise ValueError(f"tuple length must be nonnegative, got {k}")
    return list(product(group.elements, repeat=k))


def cyclic_group(n: int, generator: str = "g") -> FiniteGroup:
    """
    Z/n with labels e, g, g^2, ..., g^(n-1).
    """
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    labels = ["e", generator] + [f"{generator}^{j}" for j in range(2, n)]
    labels = labels[:n]
    table = {(labels[a], labels[b]): labels[(a + b) % n] for a in range(n) for b in range(n)}
    return build_group(labels, table)


def symmetric_group(n: int) -> FiniteGroup:
    """
    S_n as permutations of 0..n-1 in one-line notation ("012" is the
    identity); the product στ is the composition σ∘τ.
    """
    if not 1 <= n <= 9:
        raise ValueError(f"symmetric group degree must be in 1..9, got {n}")
    perms = list(permutations(range(n)))
    def label(p):
        return "".join(str(i) for i in p)

    table = {
        (label(s), label(t)): label(tuple(s[t[i]] for i in range(n)))
        for s in perms for t in perms
    }
    return build_group([label(p) for p in perms], table)
