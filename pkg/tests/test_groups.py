import pytest

from gsystems.algebra import AffineDiffeo, affine_compose, affine_invert
from gsystems.groups import (ActionError,
                             AffineAction,
                             GroupAxiomError,
                             action_validate,
                             build_group,
                             cyclic_action,
                             cyclic_group,
                             enumerate_tuples,
                             symmetric_group,
                             trivial_action,
                             validated_action,
                             )
from strategies import ACTIONS

Z2_TABLE = {("e", "e"): "e", ("e", "s"): "s", ("s", "e"): "s", ("s", "s"): "e"}


class TestBuildGroup:

    def test_z2(self):
        G = build_group(["e", "s"], Z2_TABLE)
        assert G.order == 2
        assert G.identity == "e"
        assert G.inv("s") == "s"

    def test_non_associative(self):
        table = {
            ("e", "e"): "e", ("e", "a"): "a", ("e", "b"): "b",
            ("a", "e"): "a", ("a", "a"): "a", ("a", "b"): "e",
            ("b", "e"): "b", ("b", "a"): "e", ("b", "b"): "b",
        }
        with pytest.raises(GroupAxiomError) as err:
            build_group(["e", "a", "b"], table)
        assert err.value.axiom == "associativity"
        assert err.value.witness == ["a", "a", "b"]

    def test_missing_product(self):
        table = dict(Z2_TABLE)
        del table["s", "e"]
        with pytest.raises(GroupAxiomError) as err:
            build_group(["e", "s"], table)
        assert err.value.axiom == "totality"

    def test_not_closed(self):
        with pytest.raises(GroupAxiomError) as err:
            build_group(["e", "s"], {**Z2_TABLE, ("s", "s"): "t"})
        assert err.value.axiom == "closure"

    def test_symmetric_group(self):
        S3 = symmetric_group(3)
        assert S3.order == 6
        assert S3.identity == "012"
        for g in S3:
            assert S3.mul(g, S3.inv(g)) == S3.identity

    def test_cyclic_labels(self):
        assert cyclic_group(4).elements == ("e", "g", "g^2", "g^3")
        assert cyclic_group(3).mul("g^2", "g") == "e"

    def test_product_of_tuple(self):
        Z3 = cyclic_group(3)
        assert Z3.product(()) == "e"
        assert Z3.product(("g", "g", "g^2")) == "g"


class TestEnumerateTuples:

    def test_examples(self):
        Z2 = cyclic_group(2, "s")
        assert enumerate_tuples(Z2, 1) == [("e",), ("s",)]
        assert enumerate_tuples(Z2, 2) == [("e", "e"), ("e", "s"), ("s", "e"), ("s", "s")]
        assert enumerate_tuples(Z2, 0) == [()]

    def test_counts(self):
        assert len(enumerate_tuples(symmetric_group(3), 3)) == 216

    def test_negative(self):
        with pytest.raises(ValueError):
            enumerate_tuples(cyclic_group(2), -1)


class TestActionValidate:

    def test_reflection(self):
        report = action_validate(ACTIONS["z2_reflection"])
        assert report.passed
        assert report.checked == 5

    def test_translation_is_not_an_involution(self):
        Z2 = cyclic_group(2, "s")
        action = AffineAction(Z2, {"e": AffineDiffeo.identity(1), "s": AffineDiffeo.translation([1])})
        report = action_validate(action)
        assert not report.passed
        assert [w.arguments for w in report.witnesses] == [["s", "s"]]
        with pytest.raises(ActionError):
            validated_action(action)

    def test_identity_must_act_trivially(self):
        Z2 = cyclic_group(2, "s")
        flip = AffineDiffeo([[-1]])
        report = action_validate(AffineAction(Z2, {"e": flip, "s": flip}))
        assert not report.passed
        assert report.witnesses[0].arguments == ["e"]

    @pytest.mark.parametrize("group", [cyclic_group(2), cyclic_group(5), symmetric_group(3)])
    def test_trivial_action(self, group):
        assert action_validate(trivial_action(group, 2)).passed

    def test_missing_map(self):
        with pytest.raises(ActionError):
            AffineAction(cyclic_group(2, "s"), {"e": AffineDiffeo.identity(1)})

    def test_cyclic_action_wrong_order(self):
        with pytest.raises(ActionError):
            cyclic_action(cyclic_group(3), "g", AffineDiffeo([[-1]]))

    @pytest.mark.parametrize("name", sorted(ACTIONS))
    def test_inverse_maps(self, name):
        action = ACTIONS[name]
        G = action.group
        for g in G:
            assert action.phi(G.inv(g)) == affine_invert(action.phi(g))
            assert affine_compose(action.phi(g), action.phi_inverse(g)).is_identity()
