import json
import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import P_MINUS, P_PLUS
from momentbounds import BoundReport, Direction, Sample, compute_moments, run_suite
from momentbounds import inequalities as ineq
from momentbounds.oracles import generators

EQ = 1e-12


def mom_iv(points, weights=None, interval=None):
    s = Sample.from_points(points, weights, interval)
    return compute_moments(s, 4), s.interval


def by_name(reports):
    return {r.name: r for r in reports}


def saturating_two_point():
    return mom_iv([0, 1], [P_PLUS, P_MINUS])


class TestPopoviciu:
    def test_two_point_equality(self):
        r = ineq.popoviciu_upper(*mom_iv([0, 1]))
        assert (r.lhs, r.rhs, r.slack) == (0.25, 0.25, 0.0)
        assert r.direction is Direction.UPPER

    def test_three_point(self):
        r = ineq.popoviciu_upper(*mom_iv([0, 0.5, 1]))
        assert r.lhs == pytest.approx(1 / 6, rel=1e-15)
        assert r.rhs == 0.25

    def test_single_point(self):
        r = ineq.popoviciu_upper(*mom_iv([3.0]))
        assert r.lhs == 0.0 and r.rhs >= 0


class TestNagy:
    def test_two_point_equality(self):
        r = ineq.nagy_lower(Sample.from_points([0, 1]))
        assert (r.lhs, r.rhs) == (0.25, 0.25)
        assert r.direction is Direction.LOWER

    def test_three_point_equality(self):
        r = ineq.nagy_lower(Sample.from_points([0, 0.5, 1]))
        assert r.lhs == pytest.approx(1 / 6, rel=1e-15)
        assert r.rhs == pytest.approx(1 / 6, rel=1e-15)

    def test_four_point(self):
        r = ineq.nagy_lower(Sample.from_points([0, 0, 1, 1]))
        assert (r.lhs, r.rhs) == (0.25, 0.125)

    def test_weighted_not_applicable(self):
        r = ineq.nagy_lower(Sample.from_points([0, 1], [0.3, 0.7]))
        assert not r.applicable
        assert r.holds()
        assert math.isnan(r.slack)

    def test_wider_interval_uses_data_range(self):
        r = ineq.nagy_lower(Sample.from_points([0, 1], interval=(-5, 5)))
        assert r.rhs == 0.25
        assert r.note == "uses data range"


class TestMu3TwoSided:
    def test_three_point(self):
        lo, hi = ineq.mu3_two_sided(*mom_iv([0, 0.5, 1]))
        assert lo.rhs == pytest.approx(-1 / 36, rel=1e-14)
        assert hi.rhs == pytest.approx(1 / 36, rel=1e-14)
        assert lo.lhs == hi.lhs == pytest.approx(0.0, abs=EQ)

    def test_two_point_double_equality(self):
        lo, hi = ineq.mu3_two_sided(*mom_iv([0, 1]))
        assert lo.rhs == hi.rhs == lo.lhs == 0.0

    def test_boundary_mean(self):
        reports = ineq.mu3_two_sided(*mom_iv([2.0, 2.0], interval=(2.0, 5.0)))
        assert [r.applicable for r in reports] == [False, False]
        assert {r.name for r in reports} == {"mu3_two_sided_lower", "mu3_two_sided_upper"}


class TestPopoviciuRefined:
    def test_two_point_equal(self):
        r = ineq.popoviciu_refined(*mom_iv([0, 1]))
        assert (r.lhs, r.rhs) == (0.25, 0.25)

    def test_saturating_two_point(self):
        r = ineq.popoviciu_refined(*saturating_two_point())
        assert r.lhs == pytest.approx(0.25, abs=EQ)

    def test_three_point_strict(self):
        r = ineq.popoviciu_refined(*mom_iv([0, 0.5, 1]))
        assert r.lhs == pytest.approx(1 / 6, rel=1e-14)
        assert r.slack > 0.08

    def test_zero_variance(self):
        assert not ineq.popoviciu_refined(*mom_iv([1.0, 1.0])).applicable


class TestMu4Range:
    def test_saturating_two_point(self):
        main, aux = ineq.mu4_range_upper(*saturating_two_point())
        assert main.lhs == pytest.approx(1 / 12, abs=EQ)
        assert main.rhs == pytest.approx(1 / 12, rel=1e-15)
        assert abs(main.slack) <= 1e-10

    def test_two_point_equal(self):
        main, _ = ineq.mu4_range_upper(*mom_iv([0, 1]))
        assert main.lhs == 0.0625 and main.slack > 0

    def test_three_point_aux(self):
        main, aux = ineq.mu4_range_upper(*mom_iv([0, 0.5, 1]))
        assert main.lhs == pytest.approx(1 / 24, rel=1e-14)
        assert aux.name == "mu4_range_upper_aux"
        assert aux.rhs == pytest.approx(1 / 16, rel=1e-15)
        assert aux.rhs <= main.rhs


class TestPearson:
    def test_two_point_equality(self):
        r = ineq.pearson_lower(*mom_iv([0, 1]))
        assert (r.lhs, r.rhs) == (0.0625, 0.0625)

    def test_three_point(self):
        r = ineq.pearson_lower(*mom_iv([0, 0.5, 1]))
        assert r.lhs == pytest.approx(1 / 24, rel=1e-14)
        assert r.rhs == pytest.approx(1 / 36, rel=1e-14)

    def test_unequal_two_point(self):
        r = ineq.pearson_lower(*mom_iv([0, 1], [0.7887, 0.2113]))
        assert abs(r.slack) <= 1e-6

    def test_zero_variance(self):
        assert not ineq.pearson_lower(*mom_iv([4.0])).applicable


def exact_refined_rhs(points, weights, m, M):
    pts = [Fraction(x) for x in points]
    ws = [Fraction(w) for w in weights]
    mean = sum(w * x for w, x in zip(ws, pts))
    mu = {r: sum(w * (x - mean) ** r for w, x in zip(ws, pts)) for r in (2, 3, 4)}
    d = (mean - m) * (M - mean)
    c = m + M - 2 * mean
    return mu[4], d * mu[2] + c * mu[3] - (mu[3] - c * mu[2]) ** 2 / (d - mu[2])


class TestMu4UpperRefined:
    def test_three_point_equality(self):
        r = ineq.mu4_upper_refined(*mom_iv([0, 0.5, 1]))
        assert r.rhs == pytest.approx(1 / 24, rel=1e-13)
        assert abs(r.slack) <= EQ

    def test_two_point_not_applicable(self):
        r = ineq.mu4_upper_refined(*mom_iv([0, 1]))
        assert not r.applicable
        assert r.note == "two-point distribution"

    def test_quarter_point_is_an_equality(self):
        # Every distribution on {m, x, M} saturates the bound, so the slack
        # here is zero rather than strictly positive.
        lhs, rhs = exact_refined_rhs([0, 0.25, 1], [Fraction(1, 3)] * 3, 0, 1)
        assert lhs == rhs == Fraction(169, 3456)
        r = ineq.mu4_upper_refined(*mom_iv([0, 0.25, 1]))
        assert r.rhs == pytest.approx(169 / 3456, rel=1e-12)
        assert r.slack >= -1e-9 * r.scale
        assert abs(r.slack) <= EQ

    def test_four_point_strict(self):
        lhs, rhs = exact_refined_rhs([0, 0.25, 0.5, 1], [Fraction(1, 4)] * 4, 0, 1)
        assert (lhs, rhs) == (Fraction(2261, 65536), Fraction(16595, 458752))
        r = ineq.mu4_upper_refined(*mom_iv([0, 0.25, 0.5, 1]))
        assert r.lhs == pytest.approx(float(lhs), rel=1e-13)
        assert r.rhs == pytest.approx(float(rhs), rel=1e-13)
        assert r.slack > 0

    @settings(max_examples=200, deadline=None)
    @given(st.floats(0.05, 0.95), st.lists(st.floats(0.1, 1.0), min_size=3, max_size=3))
    def test_three_atom_family_saturates(self, x, w):
        s = Sample.from_points([0.0, x, 1.0], w, renormalize=True)
        r = ineq.mu4_upper_refined(compute_moments(s, 4), s.interval)
        assert r.applicable
        assert abs(r.slack) <= 1e-9


class TestHankelGap:
    def test_three_point_double_equality(self):
        r = ineq.hankel_gap_upper(*mom_iv([0, 0.5, 1]))
        for v in (r.lhs, r.rhs, r.rhs_alt):
            assert v == pytest.approx(1 / 432, rel=1e-12)

    def test_two_point_degenerate(self):
        r = ineq.hankel_gap_upper(*mom_iv([0, 1]))
        assert r.lhs == 0.0 and r.slack >= 0

    def test_four_point_strict(self):
        r = ineq.hankel_gap_upper(*mom_iv([0, 0.25, 0.5, 1]))
        assert r.lhs == pytest.approx(55 / 32768, rel=1e-12)
        assert r.rhs == pytest.approx(147 / 65536, rel=1e-12)
        assert r.lhs < r.rhs < r.rhs_alt


class TestPearsonGap:
    def test_maximizer(self):
        r = ineq.pearson_gap_upper(*mom_iv([0, 0.5, 1], [0.25, 0.5, 0.25]))
        for v in (r.lhs, r.rhs, r.rhs_alt):
            assert v == pytest.approx(1 / 64, rel=1e-14)

    def test_two_point(self):
        r = ineq.pearson_gap_upper(*mom_iv([0, 1]))
        assert r.lhs == 0.0 and r.rhs_alt == 1 / 64

    def test_three_point_strict(self):
        r = ineq.pearson_gap_upper(*mom_iv([0, 0.5, 1]))
        assert r.lhs == pytest.approx(1 / 72, rel=1e-13)
        assert r.lhs < r.rhs_alt


class TestKurtosisSkewness:
    def test_two_point_equality(self):
        main, aux = ineq.kurtosis_skewness_range(*mom_iv([0, 1]))
        assert (main.lhs, main.rhs) == (1.0, 1.0)
        assert aux.lhs == pytest.approx(aux.rhs, rel=1e-15)

    def test_three_point_equality(self):
        main, _ = ineq.kurtosis_skewness_range(*mom_iv([0, 0.5, 1]))
        assert main.lhs == pytest.approx(1.5, rel=1e-14)
        assert main.rhs == pytest.approx(1.5, rel=1e-14)
        assert main.note

    def test_four_point_strict(self):
        main, aux = ineq.kurtosis_skewness_range(*mom_iv([0, 0.1, 0.9, 1]))
        assert main.lhs == pytest.approx(1762 / 1681, rel=1e-12)
        assert main.rhs == pytest.approx(50 / 41, rel=1e-12)
        assert aux.lhs == pytest.approx(main.lhs, rel=1e-12)

    def test_zero_variance(self):
        assert not any(r.applicable for r in ineq.kurtosis_skewness_range(*mom_iv([1, 1])))


class TestMu3Range:
    def test_saturating_two_point(self):
        r = ineq.mu3_range_upper(*saturating_two_point())
        assert r.lhs == pytest.approx(1 / (6 * math.sqrt(3)), abs=EQ)
        assert r.rhs == pytest.approx(0.096225, abs=1e-6)
        assert abs(r.slack) <= 1e-10

    def test_symmetric(self):
        r = ineq.mu3_range_upper(*mom_iv([0, 1]))
        assert r.lhs == 0.0

    def test_three_point(self):
        r = ineq.mu3_range_upper(*mom_iv([0, 0.2, 1]))
        assert r.lhs == pytest.approx(0.048, rel=1e-13)
        assert r.lhs < r.rhs


class TestNagyGeneralized:
    def test_three_point_equality(self):
        gen, power = ineq.nagy_generalized_lower(Sample.from_points([0, 0.5, 1]), 2)
        assert gen.name == "nagy_generalized_lower_r2"
        assert power.name == "nagy_power_lower_r2"
        assert gen.lhs == pytest.approx(1 / 24, rel=1e-14)
        assert abs(gen.slack) <= 1e-10

    def test_two_point_power_only(self):
        (only,) = ineq.nagy_generalized_lower(Sample.from_points([0, 1]), 2)
        assert only.name == "nagy_power_lower_r2"
        assert (only.lhs, only.rhs) == (0.0625, 0.0625)
        assert only.note == "n=2 equality"

    def test_symmetric_four_point(self):
        # m_4 = 641/20000 and the two-term bound coincide exactly here
        gen, power = ineq.nagy_generalized_lower(Sample.from_points([0, 0.3, 0.7, 1]), 2)
        assert gen.lhs == pytest.approx(641 / 20000, rel=1e-13)
        assert gen.rhs <= gen.lhs * (1 + 1e-9)
        assert power.rhs <= gen.rhs

    def test_weighted(self):
        reports = ineq.nagy_generalized_lower(Sample.from_points([0, 1, 2], [0.2, 0.3, 0.5]), 3)
        assert not any(r.applicable for r in reports)

    def test_bad_order(self):
        with pytest.raises(ValueError):
            ineq.nagy_generalized_lower(Sample.from_points([0, 1, 2]), 0)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(1, 4))
    def test_midpoint_witness_all_orders(self, r):
        gen, _ = ineq.nagy_generalized_lower(Sample.from_points([-2.0, 1.0, 4.0]), r)
        assert abs(gen.slack) <= 1e-10 * gen.scale


class TestSuite:
    def test_two_point_counts(self):
        reports = run_suite(Sample.from_points([0, 1]))
        assert len(reports) >= 14
        assert all(r.holds() for r in reports)
        assert all(r.slack >= -1e-12 for r in reports if r.applicable)

    def test_three_point_equalities(self):
        reports = by_name(run_suite(Sample.from_points([0, 0.5, 1])))
        assert len(reports) == 18
        for name in ("nagy_lower", "mu4_upper_refined", "hankel_gap_upper",
                     "kurtosis_skewness_range"):
            assert abs(reports[name].slack) <= 1e-12 * reports[name].scale, name

    def test_every_name_registered(self):
        for r in run_suite(Sample.from_points([0, 0.3, 1, 2])):
            assert ineq.is_registered(r.name)

    def test_ten_point_fuzz_instance(self):
        import numpy as np

        rng = np.random.default_rng(7)
        s = Sample.from_points(rng.uniform(-3, 7, 10).tolist())
        assert all(r.holds(1e-9) for r in run_suite(s))

    def test_never_raises_on_degenerate(self):
        reports = run_suite(Sample.from_points([5.0]))
        assert any(not r.applicable for r in reports)
        assert all(r.holds() for r in reports)

    def test_empty_sample_propagates(self):
        with pytest.raises(ValueError):
            run_suite(Sample.from_points([]))


class TestReport:
    def test_unknown_name(self):
        with pytest.raises(ValueError):
            BoundReport("made_up", 0.0, 1.0, Direction.UPPER)

    def test_parametric_names(self):
        assert ineq.is_registered("nagy_generalized_lower_r7")
        assert not ineq.is_registered("nagy_generalized_lower_r0")

    def test_holds_uses_scaled_tolerance(self):
        r = BoundReport("popoviciu_upper", 1e6 + 1e-4, 1e6, Direction.UPPER)
        assert r.holds(1e-9) and not r.holds(1e-12)

    def test_json_shape(self):
        r = ineq.hankel_gap_upper(*mom_iv([0, 0.5, 1]))
        d = r.to_dict()
        assert set(d) == {"name", "direction", "lhs", "rhs", "slack", "applicable", "note", "rhs_alt"}
        assert d["direction"] == "upper"
        json.dumps(d, allow_nan=False)

    def test_json_not_applicable(self):
        d = ineq.pearson_lower(*mom_iv([1.0])).to_dict()
        assert d["applicable"] is False
        assert d["slack"] is None and d["lhs"] is None
        assert "rhs_alt" not in d
        json.dumps(d, allow_nan=False)


# Homogeneity degree of each report under x -> s x.
DEGREE = {
    "popoviciu_upper": 2, "nagy_lower": 2, "mu3_two_sided_lower": 3,
    "mu3_two_sided_upper": 3, "popoviciu_refined": 2, "mu4_range_upper": 4,
    "mu4_range_upper_aux": 4, "pearson_lower": 4, "mu4_upper_refined": 4,
    "hankel_gap_upper": 6, "pearson_gap_upper": 4, "kurtosis_skewness_range": 0,
    "kurtosis_skewness_range_aux": 0, "mu3_range_upper": 3,
    "nagy_generalized_lower_r2": 4, "nagy_power_lower_r2": 4,
    "nagy_generalized_lower_r3": 6, "nagy_power_lower_r3": 6,
}


@st.composite
def spread_samples(draw):
    n = draw(st.integers(2, 8))
    ks = draw(st.lists(st.integers(0, 40), min_size=n, max_size=n))
    assume(max(ks) - min(ks) >= 4)
    pts = [k / 8 for k in ks]
    if draw(st.booleans()):
        return Sample.from_points(pts)
    w = draw(st.lists(st.floats(0.05, 1.0), min_size=n, max_size=n))
    return Sample.from_points(pts, w, renormalize=True)


def _paired(a, b):
    for ra, rb in zip(a, b):
        assert ra.name == rb.name
        if ra.applicable and rb.applicable:
            yield ra, rb


@settings(max_examples=150, deadline=None)
@given(spread_samples(), st.floats(-10, 10))
def test_translation_invariance(s, c):
    base = run_suite(s)
    moved = run_suite(s.shifted(c))
    width = s.interval[1] - s.interval[0]
    for ra, rb in _paired(base, moved):
        tol = 1e-9 * max(ra.scale, width ** DEGREE[ra.name])
        assert rb.lhs == pytest.approx(ra.lhs, abs=tol), ra.name
        assert rb.rhs == pytest.approx(ra.rhs, abs=tol), ra.name


@settings(max_examples=150, deadline=None)
@given(spread_samples(), st.floats(0.2, 5))
def test_scale_covariance(s, k):
    base = run_suite(s)
    scaled = run_suite(s.scaled(k))
    width = s.interval[1] - s.interval[0]
    for ra, rb in _paired(base, scaled):
        f = k ** DEGREE[ra.name]
        tol = 1e-9 * f * max(ra.scale, width ** DEGREE[ra.name])
        assert rb.lhs == pytest.approx(ra.lhs * f, abs=tol), ra.name
        assert rb.rhs == pytest.approx(ra.rhs * f, abs=tol), ra.name
        if abs(ra.slack) > 1e-6 * ra.scale:
            assert (rb.slack > 0) == (ra.slack > 0), ra.name


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 50_000))
def test_soundness_on_generated_samples(i):
    s = generators.sample_instance(11, i)
    for r in run_suite(s):
        assert r.holds(1e-9), (r.name, r.lhs, r.rhs)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 50_000))
def test_sandwich_and_chains(i):
    s = generators.sample_instance(12, i)
    reports = by_name(run_suite(s))
    pearson, refined = reports["pearson_lower"], reports["mu4_upper_refined"]
    if pearson.applicable and refined.applicable:
        tol = 1e-9 * max(pearson.scale, refined.scale)
        assert pearson.rhs <= pearson.lhs + tol
        assert pearson.lhs <= refined.rhs + tol
    for name in ("hankel_gap_upper", "pearson_gap_upper"):
        r = reports[name]
        if r.applicable:
            tol = 1e-9 * max(r.scale, r.rhs_alt)
            assert r.lhs <= r.rhs + tol
            assert r.rhs <= r.rhs_alt + tol
