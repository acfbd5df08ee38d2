import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate

from cauchy_angles import (
    CauchyParams,
    MobiusCoeffs,
    STANDARD,
    RngSeed,
    TransformKind,
    arctan_sum_params,
    cdf,
    centered_params,
    density,
    discard_poles,
    eval_general,
    eval_transform,
    ks_test,
    noncentered_params,
    sample,
    scaled_centered_params,
)


class TestCoeffValidation:
    def test_alpha_plus_beta_zero(self):
        with pytest.raises(ValueError):
            MobiusCoeffs(1.0, -1.0, 1.0, 1.0)

    def test_negative_weights(self):
        with pytest.raises(ValueError):
            MobiusCoeffs(1.0, -0.5, 1.0, 1.0)
        with pytest.raises(ValueError):
            MobiusCoeffs(1.0, 1.0, -1.0, 1.0)
        with pytest.raises(ValueError):
            MobiusCoeffs(1.0, 1.0, 1.0, -1.0)

    def test_numerator_must_not_vanish(self):
        with pytest.raises(ValueError):
            MobiusCoeffs(1.0, 1.0, 0.0, 0.0)

    def test_nonfinite(self):
        with pytest.raises(ValueError):
            MobiusCoeffs(math.inf, 1.0, 1.0, 1.0)


class TestCenteredParams:
    @pytest.mark.parametrize(
        "coeffs,want",
        [
            (MobiusCoeffs(1, 1, 1, 1), 1.0),
            (MobiusCoeffs(2, 0, 3, 1), 2.0),
            (MobiusCoeffs(1, 2, 2, 5), 7 / 3),
        ],
    )
    def test_scale(self, coeffs, want):
        p = centered_params(coeffs)
        assert p.scale == pytest.approx(want, rel=1e-15)
        assert p.location == 0.0

    def test_negative_alpha_gives_positive_scale(self):
        p = centered_params(MobiusCoeffs(-3, 1, 1, 1))
        assert p.scale == 1.0

    @pytest.mark.parametrize(
        "coeffs,a1,a2,want",
        [
            (MobiusCoeffs(1, 1, 1, 1), 2.0, 3.0, 5 / 7),
            (MobiusCoeffs(1, 1, 1, 1), 0.5, 0.5, 0.8),
            (MobiusCoeffs(1, 1, 1, 1), 1.0, 4.0, 1.0),
            (MobiusCoeffs(2, 0, 3, 1), 2.0, 3.0, 4.5),
        ],
    )
    def test_scaled(self, coeffs, a1, a2, want):
        p = scaled_centered_params(coeffs, a1, a2)
        assert p.scale == pytest.approx(want, rel=1e-15)
        assert p.location == 0.0

    def test_scaled_denominator_zero(self):
        with pytest.raises(ValueError):
            scaled_centered_params(MobiusCoeffs(-6, 1, 1, 1), 2.0, 3.0)

    def test_scaled_bad_inputs(self):
        with pytest.raises(ValueError):
            scaled_centered_params(MobiusCoeffs(1, 1, 1, 1), 0.0, 1.0)
        with pytest.raises(ValueError):
            scaled_centered_params(MobiusCoeffs(1, 1, 1, 1), 1.0, math.inf)


def _image_density_by_quadrature(p1: CauchyParams, p2: CauchyParams, w: float) -> float:
    """Density of (C1 + C2)/(1 - C1*C2) at w, by conditioning on C1.

    Solving w = (x + c2)/(1 - x*c2) for c2 gives c2 = (w - x)/(1 + w*x)
    with Jacobian (1 + x^2)/(1 + w*x)^2, so

        f(w) = int f1(x) * f2((w - x)/(1 + w*x)) * (1 + x^2)/(1 + w*x)^2 dx

    with a removable singularity at x = -1/w.
    """
    a1, b1 = p1.scale, p1.location
    a2, b2 = p2.scale, p2.location

    def f1(x):
        return a1 / (math.pi * ((x - b1) ** 2 + a1 * a1))

    def integrand(x):
        den = 1.0 + w * x
        if den == 0.0:
            # limit value: f2 decays like a2/(pi*y^2) as its argument blows up
            return f1(x) * (1.0 + x * x) * a2 / (math.pi * (w - x) ** 2)
        y = (w - x) / den
        f2 = a2 / (math.pi * ((y - b2) ** 2 + a2 * a2))
        return f1(x) * f2 * (1.0 + x * x) / (den * den)

    if w == 0.0:
        val, _ = integrate.quad(integrand, -np.inf, np.inf, limit=400)
        return val
    c = -1.0 / w
    left, _ = integrate.quad(integrand, -np.inf, c, limit=400)
    right, _ = integrate.quad(integrand, c, np.inf, limit=400)
    return left + right


class TestNoncenteredParams:
    def test_unit_pair(self):
        p = noncentered_params(CauchyParams(1, 1), CauchyParams(1, 1))
        assert p.scale == float(Fraction(6, 5))
        assert p.location == float(Fraction(-2, 5))

    @pytest.mark.parametrize("b", [0.5, 1.0, 2.0, 3.0])
    def test_equal_unit_scale_family(self, b):
        # (1, b) twice: scale (2b^2 + 4)/(b^4 + 4), location -2b^3/(b^4 + 4)
        bf = Fraction(b)
        p = noncentered_params(CauchyParams(1, b), CauchyParams(1, b))
        assert p.scale == float((2 * bf**2 + 4) / (bf**4 + 4))
        assert p.location == float(-2 * bf**3 / (bf**4 + 4))

    def test_zero_locations_reduce_to_scaled_form(self):
        for a1, a2 in ((2.0, 3.0), (0.5, 0.5), (1.0, 4.0), (0.25, 8.0)):
            got = noncentered_params(CauchyParams(a1), CauchyParams(a2))
            want = scaled_centered_params(MobiusCoeffs(1, 1, 1, 1), a1, a2)
            assert got.scale == pytest.approx(want.scale, rel=1e-15)
            assert got.location == 0.0

    def test_symmetric_in_arguments(self):
        p1 = CauchyParams(0.7, -1.3)
        p2 = CauchyParams(2.1, 0.4)
        assert noncentered_params(p1, p2) == noncentered_params(p2, p1)

    @pytest.mark.parametrize(
        "p1,p2",
        [
            (CauchyParams(1, 1), CauchyParams(1, 1)),
            (CauchyParams(0.7, -1.3), CauchyParams(2.1, 0.4)),
        ],
    )
    def test_density_matches_quadrature(self, p1, p2):
        # the quadrature oracle fixes the sign of the image location:
        # the correct law matches pointwise, the sign-flipped one does not
        law = noncentered_params(p1, p2)
        flipped = CauchyParams(law.scale, -law.location)
        err_true = 0.0
        err_flip = 0.0
        for w in (-3.0, -1.0, -0.3, 0.5, 2.0):
            ref = _image_density_by_quadrature(p1, p2, w)
            err_true = max(err_true, abs(density(law, w) - ref))
            err_flip = max(err_flip, abs(density(flipped, w) - ref))
        assert err_true < 1e-8
        assert err_flip > 1e-3

    @given(
        st.floats(min_value=0.1, max_value=10),
        st.floats(min_value=-5, max_value=5),
        st.floats(min_value=0.1, max_value=10),
        st.floats(min_value=-5, max_value=5),
    )
    def test_scale_numerator_is_positive(self, a1, b1, a2, b2):
        # (a1+a2)*s + (b1+b2)*t == (a1+a2)*(1 + a1*a2) + a1*b2^2 + a2*b1^2,
        # a sum of positive terms, so the image scale never collapses
        fa1, fb1, fa2, fb2 = map(Fraction, (a1, b1, a2, b2))
        s = 1 + fa1 * fa2 - fb1 * fb2
        t = fa1 * fb2 + fa2 * fb1
        raw = (fa1 + fa2) * s + (fb1 + fb2) * t
        assert raw == (fa1 + fa2) * (1 + fa1 * fa2) + fa1 * fb2**2 + fa2 * fb1**2
        assert raw > 0
        p = noncentered_params(CauchyParams(a1, b1), CauchyParams(a2, b2))
        assert p.scale > 0

    def test_sampled_law_agrees(self):
        p1 = CauchyParams(0.7, -1.3)
        p2 = CauchyParams(2.1, 0.4)
        seed = RngSeed(313)
        c1 = sample(p1, seed.child(0), 100_000)
        c2 = sample(p2, seed.child(1), 100_000)
        u, dropped = discard_poles(eval_transform(TransformKind.U, c1, c2))
        law = noncentered_params(p1, p2)
        rep = ks_test(u, lambda t: cdf(law, t), pole_discards=dropped)
        assert rep.passed


class TestArctanSumParams:
    def test_three_term_centered_fold(self):
        # (1/2, 2, 3): (sum + product)/(1 + pair sums) = 17/19
        laws = [CauchyParams(0.5), CauchyParams(2.0), CauchyParams(3.0)]
        p = arctan_sum_params(laws)
        assert p.scale == float(Fraction(17, 19))
        assert p.location == 0.0

    def test_closed_form_three_terms(self):
        a = (2.0, 3.0, 5.0)
        p = arctan_sum_params([CauchyParams(x) for x in a])
        num = a[0] + a[1] + a[2] + a[0] * a[1] * a[2]
        den = 1 + a[0] * a[1] + a[0] * a[2] + a[1] * a[2]
        assert p.scale == pytest.approx(num / den, rel=1e-15)

    def test_permutation_invariance(self):
        laws = [CauchyParams(1.0, 0.5), CauchyParams(2.0, -1.0), CauchyParams(0.5, 2.0)]
        base = arctan_sum_params(laws)
        for perm in itertools.permutations(laws):
            p = arctan_sum_params(list(perm))
            assert p.scale == pytest.approx(base.scale, rel=1e-12)
            assert p.location == pytest.approx(base.location, abs=1e-12)

    def test_single_input_passthrough(self):
        p = CauchyParams(1.5, -2.0)
        assert arctan_sum_params([p]) == p

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            arctan_sum_params([])


class TestEvaluation:
    def test_pole_maps_to_nan(self):
        assert math.isnan(eval_transform(TransformKind.U, 1.0, 1.0))
        assert math.isnan(eval_transform(TransformKind.Z1, 2.0, 2.0))
        assert math.isnan(eval_transform(TransformKind.Z2, 1.0, -1.0))
        assert math.isnan(eval_transform(TransformKind.Z3, 1.0, 1.0))

    def test_scalar_values(self):
        assert eval_transform(TransformKind.U, 2.0, 3.0) == pytest.approx(-1.0)
        assert eval_transform(TransformKind.Z1, 3.0, 1.0) == pytest.approx(2.0)
        assert eval_transform(TransformKind.Z2, 2.0, 3.0) == pytest.approx(-1.0)
        assert eval_transform(TransformKind.Z3, 2.0, 3.0) == pytest.approx(1.0)

    def test_z2_is_reciprocal_of_u(self):
        c1 = np.array([0.3, -2.0, 5.0])
        c2 = np.array([1.7, 0.2, -0.8])
        u = eval_transform(TransformKind.U, c1, c2)
        z2 = eval_transform(TransformKind.Z2, c1, c2)
        assert np.allclose(u * z2, 1.0, rtol=1e-14)

    def test_general_matches_unit_transform(self):
        m = MobiusCoeffs(1.0, 1.0, 1.0, 1.0)
        c1 = np.linspace(-4, 4, 17)
        c2 = np.linspace(3, -3, 17)
        assert np.array_equal(
            eval_general(m, c1, c2), eval_transform(TransformKind.U, c1, c2)
        )

    def test_general_weighted(self):
        m = MobiusCoeffs(2.0, 0.0, 3.0, 1.0)
        assert eval_general(m, 1.0, 1.0) == pytest.approx(2.0)

    def test_discard_poles(self):
        vals = np.array([1.0, np.nan, 2.0, np.nan, -3.0])
        clean, n = discard_poles(vals)
        assert n == 2
        assert np.array_equal(clean, [1.0, 2.0, -3.0])


class TestDistributionalClosure:
    @pytest.mark.parametrize("kind", list(TransformKind))
    def test_unit_transforms_are_standard(self, kind):
        seed = RngSeed(424)
        c1 = sample(STANDARD, seed.child(0), 50_000)
        c2 = sample(STANDARD, seed.child(1), 50_000)
        vals, dropped = discard_poles(eval_transform(kind, c1, c2))
        rep = ks_test(vals, lambda t: cdf(STANDARD, t), pole_discards=dropped)
        assert rep.passed, f"{kind}: D={rep.statistic:.5f} thr={rep.threshold:.5f}"

    def test_weighted_centered_transform(self):
        m = MobiusCoeffs(1.0, 2.0, 2.0, 5.0)
        seed = RngSeed(525)
        c1 = sample(STANDARD, seed.child(0), 50_000)
        c2 = sample(STANDARD, seed.child(1), 50_000)
        vals, dropped = discard_poles(eval_general(m, c1, c2))
        law = centered_params(m)
        rep = ks_test(vals, lambda t: cdf(law, t), pole_discards=dropped)
        assert rep.passed
