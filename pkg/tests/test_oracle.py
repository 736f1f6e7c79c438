import math
from fractions import Fraction

import numpy as np
import pytest

from xorsat import gf2, oracle
from xorsat.gf2 import BitMatrix
from xorsat.oracle import (
    BudgetExceededError,
    ExactProbability,
    exact_expected_y,
    exact_sat_probability,
    expected_inverse_y,
    omega_bruteforce,
    rank_bruteforce,
    rank_distribution,
    sat_probability_via_rank,
)


class TestExactProbability:
    def test_value_reduces(self):
        p = ExactProbability(2, 8)
        assert p.value == Fraction(1, 4)
        assert (p.numerator, p.denominator) == (2, 8)

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            ExactProbability(5, 4)
        with pytest.raises(ValueError):
            ExactProbability(1, 0)


class TestExactSatProbability:
    def test_L_zero(self):
        assert exact_sat_probability(4, 0, 3).value == 1

    def test_single_clause_always_satisfiable(self):
        assert exact_sat_probability(3, 1, 3).value == 1

    def test_denominator_is_sample_space(self):
        p = exact_sat_probability(4, 2, 3)
        assert p.denominator == (2 * math.comb(4, 3)) ** 2

    def test_budget_enforced(self):
        with pytest.raises(BudgetExceededError):
            exact_sat_probability(12, 6, 3)

    def test_matches_rank_identity_small(self):
        for n in (3, 4):
            for L in (0, 1, 2):
                assert exact_sat_probability(n, L, 3).value == sat_probability_via_rank(n, L, 3)


class TestRankBruteforce:
    def test_zero_matrix(self):
        assert rank_bruteforce(BitMatrix.zeros(4, 5)) == 0

    def test_identity(self):
        assert rank_bruteforce(BitMatrix.identity(5)) == 5

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            rank_bruteforce(BitMatrix.zeros(21, 4))

    def test_agrees_with_gf2(self):
        for seed in range(25):
            r = np.random.Generator(np.random.PCG64(seed))
            m = BitMatrix.from_dense(r.integers(0, 2, size=(6, 8), dtype=np.uint8))
            assert rank_bruteforce(m) == gf2.rank(m)


class TestExactExpectedY:
    def test_L_zero(self):
        assert exact_expected_y(5, 0, 3) == 1

    def test_single_forced_row(self):
        assert exact_expected_y(3, 1, 3) == 1

    def test_hand_value_n5_L2(self):
        # 100 support pairs: equal supports (10) give rank 1 and Y = 2,
        # the rest rank 2 and Y = 1
        assert exact_expected_y(5, 2, 3) == Fraction(10 * 2 + 90 * 1, 100)

    def test_at_least_one(self):
        for n, L in [(4, 1), (4, 2), (5, 3)]:
            assert exact_expected_y(n, L, 3) >= 1

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            exact_expected_y(20, 6, 3)


class TestTheoremIdentity:
    def test_all_three_routes_agree_exactly(self):
        # truth-table route == rank-distribution route == 1/Y route
        for n in (3, 4):
            for L in (0, 1, 2, 3):
                a = exact_sat_probability(n, L, 3).value
                b = sat_probability_via_rank(n, L, 3)
                c = expected_inverse_y(n, L, 3)
                assert a == b == c

    def test_rank_distribution_sums_to_one(self):
        dist = rank_distribution(4, 3, 3)
        assert sum(dist.values()) == 1
        assert all(0 <= r <= 3 for r in dist)


class TestOmegaBruteforce:
    def test_m_zero(self):
        assert omega_bruteforce(7, 0, 3) == math.comb(7, 3)

    def test_known_case(self):
        # 4 subsets of {1..4}, overlaps with {1,2}: 2,2,1,1
        assert omega_bruteforce(4, 2, 3) == 0

    def test_k_larger_than_n(self):
        assert omega_bruteforce(3, 1, 5) == 0

    def test_memoless_purity(self):
        assert omega_bruteforce(9, 4, 4) == omega_bruteforce(9, 4, 4)
