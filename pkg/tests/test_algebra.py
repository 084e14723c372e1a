from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gsystems.algebra import (I,
                              AffineDiffeo,
                              AxisError,
                              DimensionError,
                              PolyFunction,
                              SingularMapError,
                              affine_compose,
                              affine_invert,
                              format_rational,
                              gaussian,
                              multi_indices,
                              parse_rational,
                              poly_compose_affine,
                              poly_mul,
                              poly_partial,
                              scalar_from_json,
                              scalar_to_json,
                              )
from strategies import affine_maps, make_poly, polys


def x(d=1, j=1):
    return PolyFunction.variable(d, j)


class TestScalars:

    def test_parse_and_format(self):
        assert format_rational(parse_rational("6/4")) == "3/2"
        assert format_rational(parse_rational("-5")) == "-5"
        assert format_rational(parse_rational(" 0/7 ")) == "0"

    def test_zero_denominator(self):
        with pytest.raises(ValueError):
            parse_rational("1/0")

    def test_gaussian_inputs(self):
        assert gaussian("1/2", 3) == gaussian(Fraction(1, 2), "3")
        assert gaussian(0, 1) == I
        with pytest.raises(TypeError):
            gaussian(True)
        with pytest.raises(TypeError):
            gaussian(0.5)

    def test_json_form(self):
        c = gaussian("-2/3", "1/5")
        assert scalar_to_json(c) == {"re": "-2/3", "im": "1/5"}
        assert scalar_from_json({"re": "-2/3", "im": "1/5"}) == c
        assert scalar_from_json("7") == gaussian(7)


class TestMultiIndices:

    def test_graded_order(self):
        assert multi_indices(2, 1) == [(0, 0), (1, 0), (0, 1)]
        assert len(multi_indices(3, 2)) == 10

    def test_negative_degree(self):
        assert multi_indices(2, -1) == []


class TestPolyFunction:

    def test_products(self):
        one = PolyFunction.one(1)
        assert poly_mul(x(), x()) == make_poly(1, {(2,): 1})
        assert poly_mul(x() + one, one) == x() + one
        assert poly_mul(one + x(), one - x()) == make_poly(1, {(0,): 1, (2,): -1})

    def test_partials(self):
        assert poly_partial(make_poly(1, {(2,): 1}), 1) == make_poly(1, {(1,): 2})
        assert poly_partial(PolyFunction.constant(1, 5), 1).is_zero()
        assert poly_partial(x(2, 1) * x(2, 2), 2) == x(2, 1)

    def test_axis_out_of_range(self):
        with pytest.raises(AxisError):
            poly_partial(x(), 2)
        with pytest.raises(AxisError):
            PolyFunction.variable(2, 0)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            x(1) + x(2)

    def test_degree_and_terms(self):
        f = make_poly(2, {(0, 0): 3, (1, 1): "1/2", (2, 0): -1})
        assert f.degree() == 2
        assert PolyFunction.zero(2).degree() == -1
        assert [beta for beta, _ in f.terms()] == [(0, 0), (2, 0), (1, 1)]
        assert f.constant_term() == gaussian(3)

    def test_zero_terms_dropped(self):
        f = make_poly(1, {(1,): 0, (0,): 0})
        assert f.is_zero() and not f

    @given(polys(2), polys(2), polys(2))
    @settings(max_examples=40, deadline=None)
    def test_ring_laws(self, f, g, h):
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)
        assert f - f == PolyFunction.zero(2)


class TestComposeAffine:

    def test_examples(self):
        reflect = AffineDiffeo([[-1]])
        shift = AffineDiffeo.translation([1])
        swap = AffineDiffeo([[0, 1], [1, 0]])
        assert poly_compose_affine(make_poly(1, {(2,): 1}), reflect) == make_poly(1, {(2,): 1})
        assert poly_compose_affine(x(), shift) == x() + PolyFunction.one(1)
        assert poly_compose_affine(x(2, 1) * x(2, 2), swap) == x(2, 1) * x(2, 2)

    @given(polys(2), affine_maps(2), affine_maps(2))
    @settings(max_examples=40, deadline=None)
    def test_pullback_is_contravariant(self, f, phi1, phi2):
        # (f∘φ₁)∘φ₂ = f∘(φ₁∘φ₂)
        lhs = poly_compose_affine(poly_compose_affine(f, phi1), phi2)
        assert lhs == poly_compose_affine(f, affine_compose(phi1, phi2))

    @given(polys(1), affine_maps(1))
    @settings(max_examples=40, deadline=None)
    def test_inverse_undoes(self, f, phi):
        assert poly_compose_affine(poly_compose_affine(f, phi), phi.inverse()) == f


class TestAffineDiffeo:

    def test_compose_examples(self):
        phi = AffineDiffeo([[2]], [1])
        identity = AffineDiffeo.identity(1)
        reflect = AffineDiffeo([[-1]])
        assert affine_compose(phi, identity) == phi
        assert affine_compose(reflect, reflect).is_identity()
        doubled = affine_compose(AffineDiffeo([[2]]), AffineDiffeo.translation([1]))
        assert doubled == AffineDiffeo([[2]], [2])

    def test_invert_examples(self):
        assert affine_invert(AffineDiffeo.identity(2)).is_identity()
        inverse = affine_invert(AffineDiffeo([[2]], [1]))
        assert inverse == AffineDiffeo([["1/2"]], ["-1/2"])

    def test_singular(self):
        with pytest.raises(SingularMapError):
            AffineDiffeo([[0]])
        with pytest.raises(SingularMapError):
            AffineDiffeo([[1, 2], [2, 4]])

    def test_shape_errors(self):
        with pytest.raises(DimensionError):
            AffineDiffeo([[1, 0]])
        with pytest.raises(DimensionError):
            AffineDiffeo([[1]], [0, 0])

    def test_call_and_components(self):
        phi = AffineDiffeo([[1, 1], [0, 1]], [2, 0])
        assert phi([1, 1]) == [gaussian(4), gaussian(1)]
        first, second = phi.components()
        assert first == x(2, 1) + x(2, 2) + PolyFunction.constant(2, 2)
        assert second == x(2, 2)

    @given(affine_maps(2), st.lists(st.integers(-3, 3), min_size=2, max_size=2))
    @settings(max_examples=40, deadline=None)
    def test_inverse_point(self, phi, point):
        assert phi.inverse()(phi(point)) == [gaussian(p) for p in point]

    def test_gaussian_entries(self):
        phi = AffineDiffeo([[I]])
        assert affine_compose(phi, phi) == AffineDiffeo([[-1]])
