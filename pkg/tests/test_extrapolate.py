import dataclasses
import math

import pytest

from conftest import WORKED, fisher_rao
from renyix.bounds import shannon_bounds_from_H2, shannon_bounds_from_H3
from renyix.entropy import entropy_triple, renyi_rows, shannon
from renyix.errors import DisorderedError, OutOfRangeError
from renyix.extrapolate import (Estimate, all_estimates, estimate_023, estimate_star,
                                estimate_star_prime, estimates_for_vector, lower_extrap_H2_H3,
                                lower_extrap_Hd, structural_from_H0_H2, upper_extrap_Hup,
                                upper_interp_H0_H2)

H0_W, H2_W, H3_W = math.log(3), math.log(8 / 3), 0.5 * math.log(32 / 5)
H1_W = 1.5 * math.log(2)
# one heavy outcome over a flat floor of nineteen light ones
SPIKED = [0.43] + [0.03] * 19


class TestWorkedVector:
    def test_h0_h2_midpoint_saturates(self):
        assert upper_interp_H0_H2(H0_W, H2_W).value == pytest.approx(H1_W, abs=1e-15)
        assert structural_from_H0_H2(H0_W, H2_W).value == pytest.approx(H1_W - H2_W, abs=1e-15)

    def test_h2_h3_line(self):
        v = lower_extrap_H2_H3(H2_W, H3_W).value
        assert v == pytest.approx(1.0335095108406391, abs=1e-13)
        assert v == pytest.approx(1.033508, abs=1e-5)
        assert v < H1_W

    def test_mean_estimate(self):
        assert estimate_023(H0_W, H2_W, H3_W).value == pytest.approx(1.036615, abs=1e-6)

    def test_upper_line(self):
        assert upper_extrap_Hup(H2_W, H3_W, 3).value == pytest.approx(H1_W, abs=1e-13)

    def test_lower_line_exceeds_shannon(self):
        # both lower bounds come from the same arc k = 3 and still overshoot
        v = lower_extrap_Hd(H2_W, H3_W, 3).value
        assert v == pytest.approx(1.043045712059348, abs=1e-12)
        assert v > H1_W

    def test_star_prime(self):
        assert estimate_star_prime(H2_W, H3_W, 3).value == pytest.approx(1.036615, abs=1e-6)

    def test_star(self):
        v = estimate_star(H2_W, H3_W, 3).value
        assert v == pytest.approx(0.5 * H1_W + 0.5 * (2 * H2_W - H3_W), abs=1e-13)
        assert v == pytest.approx(1.036615, abs=1e-6)
        assert estimate_star(H2_W, H3_W, 3, H0=H0_W).value == pytest.approx(v, abs=1e-13)

    def test_wrapper(self):
        est = estimates_for_vector(WORKED)
        assert est["H_star"].value == pytest.approx(1.036615, abs=1e-6)
        assert set(est) == {"H_d23", "H_up", "H_d", "H_star_prime", "H_star", "H_u0", "S_str_u0", "H_023"}


class TestFlatDistributions:
    @pytest.mark.parametrize("k", range(1, 9))
    def test_order_free_estimators(self, k):
        h = math.log(k)
        assert upper_interp_H0_H2(h, h).value == pytest.approx(h, abs=1e-12)
        assert lower_extrap_H2_H3(h, h).value == pytest.approx(h, abs=1e-12)
        assert estimate_023(h, h, h).value == pytest.approx(h, abs=1e-12)

    @pytest.mark.parametrize("N", [2, 3, 8, 20])
    def test_uniform_and_point_mass(self, N):
        for h in (0.0, math.log(N)):
            for est in all_estimates(h, h, N, H0=h).values():
                if est.source != "H0-H2-structural":
                    assert est.value == pytest.approx(h, abs=1e-12)

    @pytest.mark.parametrize("k", range(2, 8))
    def test_lower_line_exact_at_lattice(self, k):
        h = math.log(k)
        assert lower_extrap_Hd(h, h, 8).value == pytest.approx(h, abs=1e-12)

    def test_upper_line_not_exact_inside(self):
        # the upper bound at H2 = ln 2 for N = 5 sits strictly above ln 2
        assert upper_extrap_Hup(math.log(2), math.log(2), 5).value > math.log(2) + 0.2


class TestIdentities:
    def test_star_prime_is_mean_of_lines(self, rng):
        X = fisher_rao(rng, 6, 1000)
        for h2, h3 in zip(renyi_rows(X, 2).tolist(), renyi_rows(X, 3).tolist()):
            mean = 0.5 * (upper_extrap_Hup(h2, h3, 6).value + lower_extrap_H2_H3(h2, h3).value)
            assert estimate_star_prime(h2, h3, 6).value == pytest.approx(mean, abs=1e-12)

    def test_023_is_mean_of_lines(self, rng):
        for p in fisher_rao(rng, 5, 200):
            h0, h2, h3 = entropy_triple(p)
            mean = 0.5 * (upper_interp_H0_H2(h0, h2).value + lower_extrap_H2_H3(h2, h3).value)
            assert estimate_023(h0, h2, h3).value == pytest.approx(mean, abs=1e-12)

    def test_equal_orders_collapse(self):
        assert lower_extrap_H2_H3(0.7, 0.7).value == pytest.approx(0.7, abs=1e-15)

    def test_tie_goes_to_line(self):
        # on the cascade at a lattice point the line and the lower bound coincide
        h = math.log(3)
        assert estimate_star(h, h, 3).value == pytest.approx(h, abs=1e-12)


class TestRigorFlags:
    def test_every_estimate_is_heuristic(self, rng):
        for p in fisher_rao(rng, 4, 20):
            for est in estimates_for_vector(p).values():
                assert isinstance(est, Estimate)
                assert est.rigor == "heuristic"

    def test_cannot_construct_rigorous(self):
        with pytest.raises(TypeError):
            Estimate(1.0, "x", frozenset(), rigor="rigorous")
        with pytest.raises(dataclasses.FrozenInstanceError):
            e = lower_extrap_H2_H3(1.0, 0.9)
            e.rigor = "rigorous"

    def test_ingredients(self):
        assert lower_extrap_H2_H3(1.0, 0.9).ingredients == {"H2", "H3"}
        assert estimate_star(1.0, 0.9, 5).ingredients == {"H2", "H3", "N"}
        assert estimate_star(1.0, 0.9, 5, H0=math.log(5)).ingredients == {"H0", "H2", "H3", "N"}


class TestSpikedVector:
    def test_values_are_recorded_without_inequalities(self):
        est = estimates_for_vector(SPIKED)
        h1 = shannon(SPIKED)
        assert all(math.isfinite(e.value) for e in est.values())
        # the H0/H2 midpoint falls below the true entropy here
        assert est["H_u0"].value < h1
        # the vector lies on the top arc, so the upper-bound line is exact
        assert est["H_up"].value == pytest.approx(h1, abs=1e-12)

    def test_star_within_rigorous_window(self):
        h0, h2, h3 = entropy_triple(SPIKED)
        star = estimate_star(h2, h3, 20).value
        assert shannon_bounds_from_H3(h3, 20)[0].value <= star <= shannon_bounds_from_H2(h2, 20)[1].value


class TestErrors:
    def test_disordered(self):
        with pytest.raises(DisorderedError):
            lower_extrap_H2_H3(0.5, 0.6)
        with pytest.raises(DisorderedError):
            upper_interp_H0_H2(0.5, 0.6)
        with pytest.raises(DisorderedError):
            estimate_023(1.0, 0.5, 0.6)
        with pytest.raises(DisorderedError):
            estimate_star(0.5, 0.6, 4)

    def test_tolerance(self):
        assert lower_extrap_H2_H3(0.5, 0.5 + 1e-13).value == pytest.approx(0.5, abs=1e-12)

    def test_out_of_range_propagates(self):
        with pytest.raises(OutOfRangeError):
            upper_extrap_Hup(2.0, 1.5, 3)
