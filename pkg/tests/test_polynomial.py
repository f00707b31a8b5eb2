"""Tests for polynomial arithmetic, the certified root finder, and reports."""

import cmath
import json
import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import reference_values as ref
from sendov_lab import polynomial as poly
from sendov_lab.polynomial import (
    CLUSTER_TOL,
    InvalidInputError,
    Polynomial,
    SendovInstance,
    critical_report,
    derivative,
    evaluate,
    find_roots,
    from_roots,
    hull_distance,
    match_roots,
)


def _disk_roots(rng, degree, separation=1e-3):
    roots = []
    while len(roots) < degree:
        z = complex(np.sqrt(rng.uniform()) * np.exp(1j * rng.uniform(0.0, 2.0 * np.pi)))
        if all(abs(z - w) >= separation for w in roots):
            roots.append(z)
    return tuple(roots)


complex_in_disk = st.builds(
    complex,
    st.floats(min_value=-0.7, max_value=0.7),
    st.floats(min_value=-0.7, max_value=0.7),
)

def _well_separated(zeros):
    return all(
        abs(zeros[i] - zeros[j]) >= 0.05
        for i in range(len(zeros))
        for j in range(i + 1, len(zeros))
    )

# Zero multiplicity m makes the derivative's root at that zero an
# (m-1)-fold critical point, which any coefficient-form finder resolves
# only to ~eps^(1/(m-1)); separated zeros keep critical points simple so
# the sharp tolerances below are meaningful.  Multiplicities get their own
# deterministic tests with multiplicity-aware tolerances.
separated_zero_lists = st.lists(complex_in_disk, min_size=1, max_size=7).filter(_well_separated)


class TestPolynomialType:
    def test_degree_bookkeeping(self):
        p = Polynomial((1.0, 2.0, 3.0))
        assert p.degree == 2
        assert Polynomial((5.0,)).degree == 0

    def test_rejects_empty_and_zero_leading(self):
        with pytest.raises(InvalidInputError):
            Polynomial(())
        with pytest.raises(InvalidInputError):
            Polynomial((1.0, 0.0))

    def test_rejects_non_finite(self):
        with pytest.raises(InvalidInputError):
            Polynomial((float("nan"), 1.0))
        with pytest.raises(InvalidInputError):
            Polynomial((complex(0, float("inf")), 1.0))

    def test_rejects_inconsistent_stored_roots(self):
        # z^2 + 1 does not vanish anywhere near 0.5.
        with pytest.raises(InvalidInputError):
            Polynomial((1.0, 0.0, 1.0), roots=(0.5, -0.5))
        with pytest.raises(InvalidInputError):
            Polynomial((1.0, 0.0, 1.0), roots=(1j,))  # count mismatch

    def test_accepts_consistent_stored_roots(self):
        p = Polynomial((-1.0, 0.0, 1.0), roots=(1.0, -1.0))
        assert p.roots == (1.0 + 0j, -1.0 + 0j)

    def test_dict_round_trip(self):
        p = Polynomial((1 + 2j, 0.0, 3.5))
        again = Polynomial.from_dict(p.to_dict())
        assert again.coefficients == p.coefficients
        assert json.dumps(p.to_dict()) == json.dumps(again.to_dict())

    def test_from_dict_rejects_garbage(self):
        with pytest.raises(InvalidInputError):
            Polynomial.from_dict({"coeffs": "nope"})
        with pytest.raises(InvalidInputError):
            Polynomial.from_dict({})


class TestFromRootsAndEvaluate:
    def test_difference_of_squares(self):
        p = from_roots((1.0, -1.0))
        assert np.allclose(p.coefficients, (-1.0, 0.0, 1.0), rtol=0, atol=1e-15)
        assert p.roots == (1.0 + 0j, -1.0 + 0j)

    def test_evaluate_matches_numpy_polyval(self):
        rng = np.random.default_rng(7)
        coeffs = tuple(rng.normal(size=6) + 1j * rng.normal(size=6))
        p = Polynomial(coeffs)
        for z in (0.3 + 0.1j, -1.5j, 2.0):
            expected = np.polyval(np.array(coeffs[::-1]), z)
            assert np.allclose(evaluate(p, z), expected, rtol=1e-12, atol=1e-12)

    def test_evaluate_rejects_non_finite_point(self):
        p = Polynomial((1.0, 1.0))
        with pytest.raises(InvalidInputError):
            evaluate(p, complex(float("inf"), 0))

    def test_derivative_coefficients(self):
        # d/dz (1 + 2z + 3z^2 + 4z^3) = 2 + 6z + 12z^2
        p = Polynomial((1.0, 2.0, 3.0, 4.0))
        assert derivative(p).coefficients == (2 + 0j, 6 + 0j, 12 + 0j)
        assert derivative(Polynomial((3.0, 2.0))).coefficients == (2 + 0j,)

    def test_derivative_requires_positive_degree(self):
        with pytest.raises(InvalidInputError):
            derivative(Polynomial((1.0,)))

    @given(st.lists(complex_in_disk, min_size=1, max_size=8))
    @settings(max_examples=100)
    def test_from_roots_vanishes_at_its_roots(self, roots):
        p = from_roots(roots)
        scale = max(abs(c) for c in p.coefficients)
        for r in roots:
            assert abs(evaluate(p, r)) <= 1e-10 * scale * (1.0 + abs(r)) ** p.degree


class TestFindRoots:
    def test_linear(self):
        res = find_roots(Polynomial((-1.5 + 0.5j, 3.0)))
        assert np.allclose(res.roots, [(1.5 - 0.5j) / 3.0], rtol=1e-15, atol=0)
        assert res.converged

    def test_quadratic_closed_form(self):
        res = find_roots(from_roots((0.25 + 0.25j, -0.5)))
        _, worst = match_roots(res.roots, (0.25 + 0.25j, -0.5))
        assert worst <= 1e-15
        assert res.converged
        assert res.iterations == 0

    def test_quintuple_root_clusters(self):
        res = find_roots(Polynomial((0.0, 0.0, 0.0, 0.0, 0.0, 1.0)))
        assert res.converged
        assert max(abs(z) for z in res.roots) <= 1e-3
        assert res.clusters == ((0, 1, 2, 3, 4),)

    def test_triple_root_at_half(self):
        res = find_roots(from_roots((0.5, 0.5, 0.5)))
        assert res.converged
        assert max(abs(z - 0.5) for z in res.roots) <= 1e-4
        assert res.clusters == ((0, 1, 2),)

    def test_roots_of_unity_recovered(self):
        expected = tuple(cmath.exp(2j * cmath.pi * k / 12) for k in range(12))
        res = find_roots(from_roots(expected))
        _, worst = match_roots(res.roots, expected)
        assert worst <= 1e-13
        assert res.converged
        assert res.clusters == ()

    def test_round_trip_low_degree(self):
        # At degree <= 20 with separation >= 1e-3 the full pipeline -- expand
        # to coefficients, round to binary64, refind -- stays below 1e-8.
        rng = np.random.default_rng(20800)
        worst = 0.0
        for _ in range(200):
            roots = _disk_roots(rng, int(rng.integers(2, 21)))
            res = find_roots(from_roots(roots))
            assert res.converged
            _, w = match_roots(res.roots, roots)
            worst = max(worst, w)
        assert worst <= 1e-8

    def test_high_degree_error_is_coefficient_rounding_not_finder(self):
        # Take the worst draw of a degree <= 50 ensemble and split its
        # round-trip error at the exact (50-digit) roots of the stored
        # binary64 coefficients: the finder lands within 1e-8 of those exact
        # roots, while rounding the expanded coefficients to binary64 is what
        # moves them away from the sampled roots.
        rng = np.random.default_rng(20800)
        worst = (0.0, None, None)
        for _ in range(60):
            roots = _disk_roots(rng, int(rng.integers(30, 51)))
            p = from_roots(roots)
            res = find_roots(p)
            assert res.converged
            _, w = match_roots(res.roots, roots)
            if w > worst[0]:
                worst = (w, p, res)
        _, p, res = worst
        mpmath.mp.dps = 60
        exact = tuple(
            complex(r)
            for r in mpmath.polyroots(
                [mpmath.mpc(c) for c in reversed(p.coefficients)],
                maxsteps=200,
                extraprec=200,
            )
        )
        _, finder_err = match_roots(res.roots, exact)
        assert finder_err <= 1e-8

    def test_sorted_deterministically(self):
        roots = (0.5, -0.5, 0.3j, -0.3j)
        a = find_roots(from_roots(roots)).roots
        b = find_roots(from_roots(roots)).roots
        assert a == b
        keys = [(z.real, z.imag) for z in a]
        assert keys == sorted(keys)

    def test_requires_degree_at_least_one(self):
        with pytest.raises(InvalidInputError):
            find_roots(Polynomial((2.0,)))


class TestMatchRoots:
    def test_permutation_has_zero_cost(self):
        pts = (0.1, 0.5 + 0.5j, -0.9j)
        assignment, worst = match_roots(pts, (pts[2], pts[0], pts[1]))
        assert worst == 0.0
        assert assignment == (2, 0, 1)

    def test_uniform_shift_is_measured(self):
        pts = (0.0, 1.0, 1j)
        shifted = tuple(z + 1e-4 for z in pts)
        _, worst = match_roots(shifted, pts)
        assert np.allclose(worst, 1e-4, rtol=1e-12, atol=0)

    def test_crossed_pairs_use_optimal_assignment(self):
        # Greedy pairing from the closest pair on these crossed points would
        # strand the last point a distance ~2 away; the optimal matching
        # keeps the worst pair distance at ~1.
        found = (0.0 + 0j, 1.0 + 0j)
        expected = (0.45 + 0j, -1.0 + 0j)
        _, worst = match_roots(found, expected)
        assert worst <= 1.1

    def test_length_mismatch_rejected(self):
        with pytest.raises(InvalidInputError):
            match_roots((0.0,), (0.0, 1.0))


class TestSendovInstance:
    def test_validation(self):
        with pytest.raises(InvalidInputError):
            SendovInstance(a=0.0, other_zeros=(0.5,))
        with pytest.raises(InvalidInputError):
            SendovInstance(a=1.0, other_zeros=(0.5,))
        with pytest.raises(InvalidInputError):
            SendovInstance(a=0.5, other_zeros=())
        with pytest.raises(InvalidInputError):
            SendovInstance(a=0.5, other_zeros=(1.5,))
        with pytest.raises(InvalidInputError):
            SendovInstance(a=0.5, other_zeros=(complex(float("nan"), 0),))

    def test_json_round_trip_idempotent(self):
        inst = SendovInstance(a=0.5, other_zeros=(0.25 + 0.25j, -1.0, 0.9j))
        text = inst.to_json()
        again = SendovInstance.from_json(text)
        assert again == inst
        assert again.to_json() == text

    def test_degree_and_all_zeros(self):
        inst = SendovInstance(a=0.3, other_zeros=(0.1, -0.2j))
        assert inst.degree == 3
        assert inst.all_zeros() == (0.3 + 0j, 0.1 + 0j, -0.2j)

    def test_boundary_modulus_allowed(self):
        inst = SendovInstance(a=0.5, other_zeros=(cmath.exp(0.7j),))
        assert inst.degree == 2


class TestCriticalReport:
    def test_star_polynomial_closed_form(self):
        # P = (z - 0.5) z^4: critical points are 0 (triple) and 0.4.
        rep = critical_report(SendovInstance(a=0.5, other_zeros=(0j, 0j, 0j, 0j)))
        assert rep.converged
        assert np.allclose(rep.sendov_distance, 0.1, rtol=0, atol=1e-12)
        assert np.allclose(rep.mean_real_part, 0.1, rtol=0, atol=1e-15)
        assert np.allclose(sorted(abs(w - 0.4) for w in rep.critical_points)[0], 0.0, atol=1e-12)

    def test_two_point_midpoint(self):
        rep = critical_report(SendovInstance(a=0.9, other_zeros=(-1.0,)))
        assert np.allclose(rep.critical_points, [-0.05], rtol=0, atol=1e-15)
        assert np.allclose(rep.sendov_distance, 0.95, rtol=1e-15, atol=0)
        assert np.allclose(rep.mean_real_part, -0.05, rtol=1e-15, atol=0)

    def test_roots_of_unity_distances(self):
        fourth = tuple(1j ** k for k in range(4))
        rep = critical_report(SendovInstance(a=0.5, other_zeros=fourth))
        assert np.allclose(
            rep.sendov_distance, ref.SENDOV_DIST_05_ROOTS_OF_UNITY, rtol=1e-12, atol=0
        )
        negged = tuple(cmath.exp(1j * (math.pi + 2 * math.pi * k) / 4) for k in range(4))
        rep = critical_report(SendovInstance(a=0.5, other_zeros=negged))
        assert np.allclose(
            rep.sendov_distance, ref.SENDOV_DIST_05_NEG_ROOTS, rtol=1e-12, atol=0
        )

    @given(separated_zero_lists, st.floats(min_value=0.1, max_value=0.9))
    @settings(max_examples=60, deadline=None)
    def test_conjugation_symmetry(self, zeros, a):
        inst = SendovInstance(a=a, other_zeros=tuple(zeros))
        conj = SendovInstance(a=a, other_zeros=tuple(z.conjugate() for z in zeros))
        rep, rep_c = critical_report(inst), critical_report(conj)
        assert np.allclose(rep.sendov_distance, rep_c.sendov_distance, rtol=1e-9, atol=1e-12)
        assert np.allclose(rep.mean_real_part, rep_c.mean_real_part, rtol=1e-9, atol=1e-12)

    @given(separated_zero_lists, st.floats(min_value=0.1, max_value=0.9))
    @settings(max_examples=60, deadline=None)
    def test_gauss_lucas_containment(self, zeros, a):
        inst = SendovInstance(a=a, other_zeros=tuple(zeros))
        rep = critical_report(inst)
        if not rep.converged:
            return
        for w in rep.critical_points:
            assert hull_distance(w, inst.all_zeros()) <= 1e-7

    def test_gauss_lucas_with_multiple_zeros(self):
        # A triple zero gives the derivative a double root, resolvable only
        # to ~sqrt(eps); found by hypothesis before the separated-zeros
        # strategy existed, frozen here with the honest tolerance.
        inst = SendovInstance(
            a=0.45609108669393494,
            other_zeros=(0.5 + 0j, 0.625 + 0j, 0.625 + 0j, 0.625 + 0j),
        )
        rep = critical_report(inst)
        assert rep.converged
        for w in rep.critical_points:
            assert hull_distance(w, inst.all_zeros()) <= 1e-5

    def test_gauss_lucas_with_six_fold_zero(self):
        # Multiplicity 6 in the zero makes a 5-fold critical point: the
        # computed cluster spreads like eps^(1/5) ~ 1e-3 around it.
        inst = SendovInstance(a=0.5, other_zeros=((0.3 + 0.4j),) * 6)
        rep = critical_report(inst)
        assert rep.converged
        for w in rep.critical_points:
            assert hull_distance(w, inst.all_zeros()) <= 1e-2

    @given(st.lists(complex_in_disk, min_size=1, max_size=7), st.floats(min_value=0.1, max_value=0.9))
    @settings(max_examples=60, deadline=None)
    def test_mean_matches_coefficient_trace(self, zeros, a):
        # No separation needed: the mean is linear in the zeros and immune
        # to critical-point splitting.
        # Sum of zeros = -c_{n-1}/c_n, so the mean needs no root finding.
        inst = SendovInstance(a=a, other_zeros=tuple(zeros))
        rep = critical_report(inst)
        expected = (a + sum(z.real for z in zeros)) / inst.degree
        assert np.allclose(rep.mean_real_part, expected, rtol=1e-12, atol=1e-12)


class TestHullDistance:
    def test_interior_and_vertex(self):
        square = (1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j)
        assert hull_distance(0j, square) == 0.0
        assert hull_distance(1 + 1j, square) == 0.0

    def test_outside_square(self):
        square = (1 + 1j, -1 + 1j, -1 - 1j, 1 - 1j)
        assert np.allclose(hull_distance(2 + 0j, square), 1.0, rtol=1e-15, atol=0)
        assert np.allclose(hull_distance(2 + 2j, square), math.sqrt(2), rtol=1e-15, atol=0)

    def test_degenerate_hulls(self):
        assert np.allclose(hull_distance(3 + 4j, (0j,)), 5.0, rtol=1e-15, atol=0)
        assert np.allclose(hull_distance(1j, (-1 + 0j, 1 + 0j)), 1.0, rtol=1e-15, atol=0)
        assert hull_distance(0.5 + 0j, (-1 + 0j, 1 + 0j)) == 0.0

    @given(complex_in_disk, st.lists(complex_in_disk, min_size=1, max_size=6))
    @settings(max_examples=100)
    def test_never_exceeds_nearest_vertex(self, w, vertices):
        d = hull_distance(w, tuple(vertices))
        assert d <= min(abs(w - v) for v in vertices) + 1e-12
