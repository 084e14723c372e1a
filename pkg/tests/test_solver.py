import pytest
from hypothesis import given, settings, strategies as st

import gsystems.solver.cohomology as cohomology_module
from gsystems.algebra import PolyFunction, gaussian
from gsystems.dga import (Cochain,
                          MCElement,
                          NotMaurerCartanError,
                          conjugate_by_unit,
                          degree_zero_cochain,
                          gauge_relation_check,
                          mc_residual,
                          representation_check,
                          twisted_differential,
                          unit_cochain,
                          zero_cochain,
                          )
from gsystems.groups import cyclic_group, trivial_action
from gsystems.objects import ExtensionTrace, ObstructionCertificate
from gsystems.solver import (CochainSpace,
                             GradedBasis,
                             NotCocycleError,
                             ObstructionError,
                             TrivialActionRequiredError,
                             WindowError,
                             averaging_homotopy_oracle,
                             cocycle_basis,
                             cohomology_report,
                             matrix_of_twisted_d,
                             mc_extend,
                             rigidity_gauge,
                             solve_in_window,
                             solve_order,
                             trivial_action_split_check,
                             x_degree_shift,
                             )
from gsystems.symbols import FormalSymbol, XiPolynomial
from strategies import ACTIONS, character, cochains, make_xi, rationals, scalars

X = PolyFunction.variable(1, 1)
XI = XiPolynomial.xi(1, 1)


def pullback_p0(name="z2_reflection", order=0):
    return MCElement(unit_cochain(ACTIONS[name], 1, order))


def window_cochain(space, data):
    coordinates = data.draw(st.dictionaries(st.integers(0, len(space) - 1), scalars, max_size=4))
    return space.cochain(coordinates)


class TestGradedBasis:

    def test_layout(self):
        basis = GradedBasis(1, 1, 1)
        assert len(basis) == 4
        assert basis.monomials == [(0, 0), (1, 0), (0, 1), (1, 1)]
        assert basis.coordinates(make_xi(1, {(1,): {(1,): 3}})) == {3: gaussian(3)}

    def test_outside_window(self):
        with pytest.raises(WindowError):
            GradedBasis(1, 1, 1).coordinates(make_xi(1, {(0,): {(2,): 1}}))

    def test_empty_window(self):
        assert len(GradedBasis(2, 1, -1)) == 0

    def test_space_coordinates(self, reflection):
        space = CochainSpace(reflection, 1, 1, 1)
        assert len(space) == 8
        a = space.cochain({0: 1, 7: 2})
        assert a["e"].levels[1] == XiPolynomial.one(1)
        assert a["s"].levels[1] == make_xi(1, {(1,): {(1,): 2}})
        assert space.vector(a).coordinates == {0: gaussian(1), 7: gaussian(2)}


class TestTwistedMatrix:

    def test_trivial_action_boundary(self, trivial_z2):
        lmap = matrix_of_twisted_d(unit_cochain(trivial_z2, 1, 0), 0, 1, 1)
        assert lmap.shape == (8, 4)
        assert lmap.rank() == 4
        # (δa)(g1, g2) = a(g2) - a(g1g2) + a(g1) with a(e) = 0, a(s) = 1
        space = lmap.domain
        image = lmap.apply(space.vector(space.cochain({2: 1}))).to_cochain()
        assert image["e", "s"].is_zero() and image["s", "e"].is_zero()
        assert image["s", "s"] == FormalSymbol.constant(1, 0, 2)
        assert image["e", "e"].is_zero()

    def test_scalar_complex(self, reflection):
        lmap = matrix_of_twisted_d(pullback_p0(), 0, 1, 0)
        assert lmap.shape == (4, 2)

    @pytest.mark.parametrize("name", ["z2_reflection", "z2_affine_reflection", "z3_rotation"])
    @pytest.mark.parametrize("k", [0, 1])
    def test_consecutive_matrices_compose_to_zero(self, name, k):
        P0 = pullback_p0(name)
        n = 0 if name == "z3_rotation" else 1
        first = matrix_of_twisted_d(P0, n, k, 1)
        second = matrix_of_twisted_d(P0, n, k + 1, 1 + x_degree_shift(P0))
        assert second.compose(first).is_zero()

    def test_sign_twist_composes_to_zero(self, sign):
        first = matrix_of_twisted_d(sign, 2, 1, 1)
        second = matrix_of_twisted_d(sign, 2, 2, 1)
        assert second.compose(first).is_zero()

    @given(st.integers(0, 2), st.data())
    @settings(max_examples=20, deadline=None)
    def test_matches_table_computation(self, k, data):
        P0 = data.draw(st.sampled_from([pullback_p0(), MCElement(character(ACTIONS["z2_reflection"], -1))]))
        lmap = matrix_of_twisted_d(P0, 1, k, 1)
        a = window_cochain(lmap.domain, data)
        image = twisted_differential(P0.with_order(1), a)
        assert lmap.codomain.vector(image) == lmap.apply(lmap.domain.vector(a))

    def test_kernel_is_annihilated(self):
        lmap = matrix_of_twisted_d(pullback_p0(), 2, 1, 2)
        kernel = lmap.kernel()
        assert len(kernel) == len(lmap.domain) - lmap.rank()
        assert all(lmap.apply(v).is_zero() for v in kernel)


class TestCohomologyReport:

    @pytest.mark.parametrize("n", [1, 2])
    @pytest.mark.parametrize("D", [0, 1, 2])
    def test_second_cohomology_vanishes(self, n, D):
        report = cohomology_report(pullback_p0(), n, 2, D, cross_check=True)
        assert report.h_dim == 0
        assert report.window_closed
        assert report.label == "cohomology"
        assert report.oracle == "exact"

    @pytest.mark.parametrize("D", [0, 1, 2])
    def test_first_cohomology_vanishes(self, D):
        report = cohomology_report(pullback_p0(), 1, 1, D, cross_check=True)
        assert report.h_dim == 0
        assert report.dim_kernel == report.dim_image

    def test_trivial_action(self, trivial_z2):
        P0 = unit_cochain(trivial_z2, 1, 0)
        for k in (1, 2):
            assert cohomology_report(P0, 0, k, 1).h_dim == 0

    def test_sign_twist(self, sign):
        assert cohomology_report(sign, 1, 1, 1, cross_check=True).h_dim == 0

    def test_invariants_in_degree_zero(self):
        P0 = pullback_p0()
        report = cohomology_report(P0, 1, 0, 1)
        space = CochainSpace(P0.action, 0, 1, 1)
        fixed = [i for i in range(len(space))
                 if twisted_differential(P0.with_order(1), space.basis_cochain(i)).is_zero()]
        # 1 and xξ are invariant under (x, ξ) -> (-x, -ξ)
        assert report.h_dim == report.dim_kernel == len(fixed) == 2

    def test_trivial_action_invariants(self, trivial_z2):
        report = cohomology_report(unit_cochain(trivial_z2, 1, 0), 1, 0, 1)
        assert report.h_dim == report.dim_cochains == 4

    def test_empty_window(self):
        report = cohomology_report(pullback_p0(), 1, 1, -1)
        assert (report.dim_cochains, report.dim_kernel, report.dim_image, report.h_dim) == (0, 0, 0, 0)


class TestAveragingOracle:

    def test_zero(self, reflection):
        result = averaging_homotopy_oracle(pullback_p0(), zero_cochain(reflection, 1, 1))
        assert result.applicable
        assert result.primitive.is_zero()

    @given(st.integers(0, 1), st.data())
    @settings(max_examples=20, deadline=None)
    def test_recovers_a_primitive(self, k, data):
        action = data.draw(st.sampled_from([ACTIONS["z2_trivial"], ACTIONS["z2_reflection"], ACTIONS["z3_rotation"]]))
        P0 = MCElement(unit_cochain(action, 1, 1))
        z = twisted_differential(P0, data.draw(cochains(action, k, 1)))
        result = averaging_homotopy_oracle(P0, z)
        assert result.applicable
        assert twisted_differential(P0, result.primitive) == z

    def test_rejects_non_cocycles(self, reflection):
        z = Cochain(reflection, 1, {("e",): FormalSymbol.zero(1, 0), ("s",): FormalSymbol.one(1, 0)})
        with pytest.raises(NotCocycleError):
            averaging_homotopy_oracle(pullback_p0(), z)

    def test_declines_non_constant_twist(self, reflection, monkeypatch):
        monkeypatch.setattr(cohomology_module, "_constant_values", lambda P0: None)
        result = averaging_homotopy_oracle(pullback_p0(), zero_cochain(reflection, 1, 0))
        assert not result.applicable
        assert "non-constant" in result.reason
        assert result.primitive is None


class TestSolveOrder:

    def test_zero_right_hand_side(self, reflection):
        trace = ExtensionTrace("mc_extend", 2)
        result = solve_order(pullback_p0(), unit_cochain(reflection, 1, 1), 2, trace=trace)
        assert result.is_zero()
        assert result.degree == 1 and result.order == 2
        assert trace.records[-1].rhs_zero

    def test_partial_must_be_mc(self, reflection):
        with pytest.raises(NotMaurerCartanError):
            solve_order(pullback_p0(), character(reflection, X, 1), 2)

    def test_second_order_for_momentum_cocycle(self, reflection):
        P1 = Cochain(reflection, 1, {
            ("e",): FormalSymbol.zero(1, 1),
            ("s",): FormalSymbol(1, [XiPolynomial.zero(1), XiPolynomial.from_function(X) + XI]),
        })
        omega = unit_cochain(reflection, 1, 1) + P1
        P2 = solve_order(pullback_p0(), omega, 2)
        assert isinstance(P2, Cochain)
        assert mc_residual(omega.with_order(2) + P2).is_zero()


class TestObstruction:

    def test_certificate(self, trivial_z2):
        lmap = matrix_of_twisted_d(unit_cochain(trivial_z2, 1, 0), 1, 0, 1)
        assert lmap.is_zero()
        rhs = Cochain(trivial_z2, 1, {
            ("e",): FormalSymbol.zero(1, 1),
            ("s",): FormalSymbol(1, [XiPolynomial.zero(1), XiPolynomial.from_function(X)]),
        })
        certificate = solve_in_window(lmap, rhs, problem="rigidity_gauge", order=1)
        assert isinstance(certificate, ObstructionCertificate)
        assert (certificate.rank, certificate.rank_augmented) == (0, 1)
        assert certificate.rhs_coordinates == [[5, gaussian(1)]]
        err = ObstructionError(certificate)
        assert "obstructed at order 1" in str(err)


class TestMcExtend:

    def test_zero_correction(self, reflection):
        P0 = pullback_p0()
        omega = mc_extend(P0, zero_cochain(reflection, 1, 1), 3)
        assert omega == P0.with_order(3)

    def test_correction_must_be_closed(self, reflection):
        P1 = Cochain(reflection, 1, {
            ("e",): FormalSymbol.zero(1, 1),
            ("s",): FormalSymbol(1, [XiPolynomial.zero(1), XiPolynomial.one(1)]),
        })
        with pytest.raises(NotCocycleError):
            mc_extend(pullback_p0(), P1, 2)

    @pytest.mark.parametrize("D", [0, 1, 2])
    def test_every_closed_first_order_term_extends(self, D):
        P0 = pullback_p0()
        basis = cocycle_basis(P0, 1, 1, D)
        assert basis
        for P1 in basis:
            trace = ExtensionTrace("mc_extend", 4)
            omega = mc_extend(P0, P1, 4, trace=trace)
            assert mc_residual(omega).is_zero()
            assert omega.level(1) == P1.with_order(4).level(1)
            assert [r.order for r in trace.records] == [1, 2, 3, 4]
            assert trace.records[0].source == "input"

    @given(st.lists(rationals, min_size=4, max_size=4))
    @settings(max_examples=5, deadline=None)
    def test_combinations_extend(self, weights):
        P0 = pullback_p0()
        basis = cocycle_basis(P0, 1, 1, 1)
        P1 = zero_cochain(P0.action, 1, 1)
        for w, b in zip(weights, basis):
            P1 = P1 + b.scale(w)
        assert representation_check(mc_extend(P0, P1, 4)).passed

    def test_trivial_action_has_no_first_order_freedom(self, trivial_z2):
        P0 = unit_cochain(trivial_z2, 1, 0)
        assert cocycle_basis(P0, 1, 1, 1) == []
        omega = mc_extend(P0, zero_cochain(trivial_z2, 1, 1), 2)
        assert representation_check(omega).passed


class TestRigidityGauge:

    def test_leading_term_needs_no_gauge(self):
        assert rigidity_gauge(pullback_p0(order=2), 2) == FormalSymbol.one(1, 2)

    def test_classical_deformation(self, reflection):
        gauged = Cochain(reflection, 1, {
            ("e",): FormalSymbol.one(1, 2),
            ("s",): FormalSymbol(1, [XiPolynomial.from_function(f) for f in
                                     (PolyFunction.one(1), 2 * X, X * X * 2)]),
        })
        trace = ExtensionTrace("rigidity_gauge", 2)
        u = rigidity_gauge(gauged, 2, trace=trace)
        assert u.levels[0] == XiPolynomial.one(1)
        assert gauge_relation_check(gauged, unit_cochain(reflection, 1, 2), u).passed
        assert [r.order for r in trace.records] == [1, 2]

    def test_momentum_conjugate(self, reflection):
        u = FormalSymbol(1, [XiPolynomial.one(1), XI, XiPolynomial.zero(1)])
        b = conjugate_by_unit(unit_cochain(reflection, 1, 2), u)
        v = rigidity_gauge(b, 2)
        assert gauge_relation_check(b, unit_cochain(reflection, 1, 2), v).passed

    def test_extension_gauges_back(self):
        P0 = pullback_p0()
        P1 = cocycle_basis(P0, 1, 1, 1)[0]
        omega = mc_extend(P0, P1, 3)
        u = rigidity_gauge(omega, 3)
        assert gauge_relation_check(omega, P0.with_order(3), u).passed

    def test_sign_character(self, sign):
        assert rigidity_gauge(sign, 1) == FormalSymbol.one(1, 1)


class TestTrivialActionSplit:

    @given(st.integers(0, 2), st.data())
    @settings(max_examples=50, deadline=None)
    def test_coefficientwise(self, k, data):
        action = data.draw(st.sampled_from([ACTIONS["z2_trivial"], trivial_action(cyclic_group(3), 1)]))
        P = data.draw(cochains(action, k, 2))
        assert trivial_action_split_check(P).passed

    def test_zero(self, trivial_z2):
        report = trivial_action_split_check(zero_cochain(trivial_z2, 1, 1))
        assert report.passed and report.checked == 4

    def test_constant_in_group_variables(self, trivial_z2):
        P = degree_zero_cochain(trivial_z2, FormalSymbol.from_function(X, 0))
        assert trivial_action_split_check(P).passed
        assert trivial_action_split_check(unit_cochain(trivial_z2, 1, 0)).passed

    def test_requires_trivial_action(self, reflection):
        with pytest.raises(TrivialActionRequiredError):
            trivial_action_split_check(zero_cochain(reflection, 1, 0))
