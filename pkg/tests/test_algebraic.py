import math

import pytest
from scipy.optimize import brentq

from bernconv import (DomainError, IntegerPolynomial, classify,
                      classify_from_t_polynomial, feng_wang_test, growth_rate,
                      local_dim_bound, singularity_test)

# Landmark table: (t-value, Pisot polynomial, Garsia polynomial), all ascending.
TABLE = [
    (0.618, (-1, -1, 1), None),
    (0.570, (-1, 1, -2, 1), None),
    (0.682, (-1, 0, -1, 1), None),
    (0.755, (-1, -1, 0, 1), None),
    (0.707, None, (-2, 0, 1)),
    (0.648, None, (-2, 2, -2, 1)),
    (0.739, None, (-2, 1, -1, 1)),
    (0.794, None, (-2, 0, 0, 1)),
]


def P(*coeffs):
    return IntegerPolynomial(coeffs)


class TestClassify:
    @pytest.mark.parametrize("coeffs", [(-1, -1, 1), (-1, 1, -2, 1),
                                        (-1, 0, -1, 1), (-1, -1, 0, 1)])
    def test_pisot_column(self, coeffs):
        assert classify(P(*coeffs)).tag == "Pisot"

    @pytest.mark.parametrize("coeffs", [(-2, 0, 1), (-2, 2, -2, 1),
                                        (-2, 1, -1, 1), (-2, 0, 0, 1),
                                        (-2, -2, 0, 1)])
    def test_garsia_column(self, coeffs):
        assert classify(P(*coeffs)).tag == "Garsia"

    def test_tribonacci_root(self):
        nc = classify(P(-1, -1, -1, 1))
        assert nc.tag == "Pisot"
        assert abs(nc.beta - 1.8392867552141612) < 1e-10

    def test_degree9_perron_not_pisot(self):
        t_poly = P(-1, 1, 0, 1, 1, 2, 1, 2, 1, 1)
        nc = classify_from_t_polynomial(t_poly)
        assert nc.tag == "Perron"
        assert abs(1.0 / nc.beta - 0.5546) < 1e-3
        assert max(nc.conjugate_moduli) > 1  # hence not Pisot
        assert nc.beta > max(nc.conjugate_moduli)

    def test_salem_like_reciprocal(self):
        # Lehmer's degree-10 polynomial: conjugates on the unit circle
        nc = classify(P(1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1))
        assert nc.tag == "Salem"
        assert any(abs(m - 1) <= 1e-9 for m in nc.conjugate_moduli)

    def test_sign_invariance(self):
        p = P(-1, -1, 1)
        assert classify(p).tag == classify(-1 * p).tag == "Pisot"

    def test_reciprocal_round_trip_on_table(self):
        for _, pis, gar in TABLE:
            coeffs = pis or gar
            beta_poly = P(*coeffs)
            t_poly = IntegerPolynomial(coeffs[::-1]).normalized()
            direct = classify(beta_poly)
            via_t = classify_from_t_polynomial(t_poly)
            assert direct.tag == via_t.tag
            assert abs(direct.beta - via_t.beta) < 1e-9

    def test_garsia_is_pisot_plus_beta_minus_one(self):
        pisots = [row[1] for row in TABLE if row[1]]
        garsias = [row[2] for row in TABLE if row[2]]
        for pis, gar in zip(pisots, garsias):
            assert P(*pis) + P(-1, 1) == P(*gar)

    def test_garsia_from_t_side(self):
        nc = classify_from_t_polynomial(P(-1, 0, 2, 2))
        assert nc.tag == "Garsia"
        assert abs(nc.beta - 1.7692923542386314) < 1e-9  # root of b^3-2b-2

    def test_minimality_flags(self):
        assert classify(P(-1, -1, 1)).minimality_verified
        assert classify(P(-2, 0, 0, 1)).minimality_verified
        # degree 4: not checked, flagged rather than failed
        assert not classify(P(-1, 0, 0, -1, 1)).minimality_verified
        # cubic with the rational root 2: (x - 2)(x^2 + x + 1) = x^3 - x^2 - x - 2
        cubic = P(-2, -1, -1, 1)
        assert cubic(2) == 0
        assert not classify(cubic).minimality_verified

    def test_moduli_sorted_descending(self):
        for nc in (classify(P(-2, 0, 0, 1)),
                   classify_from_t_polynomial(P(-1, 1, 0, 1, 1, 2, 1, 2, 1, 1))):
            assert list(nc.conjugate_moduli) == sorted(nc.conjugate_moduli,
                                                       reverse=True)

    def test_errors(self):
        with pytest.raises(DomainError):
            classify(P(1, 0, 1))  # no real root beyond 1
        with pytest.raises(DomainError):
            classify(P(-1, 0, 2))  # not monic
        with pytest.raises(DomainError):
            classify_from_t_polynomial(P(1, 0, 1))  # no root in (1/2, 1)

    def test_as_dict(self):
        d = classify(P(-1, -1, 1)).as_dict()
        assert set(d) == {"tag", "beta", "moduli", "minimality_verified"}


class TestGrowthRate:
    def test_trivial(self):
        assert growth_rate(1, 1) == pytest.approx(2.0, abs=1e-12)

    @pytest.mark.parametrize("m,n", [(3, 4), (7, 5), (2, 9), (6, 6)])
    def test_against_brentq_oracle(self, m, n):
        oracle = brentq(lambda r: r ** -m + r ** -n - 1, 1.0 + 1e-12, 2.0,
                        xtol=1e-14)
        assert growth_rate(m, n) == pytest.approx(oracle, abs=1e-11)

    def test_symmetry_and_equal_cycles(self):
        assert growth_rate(3, 4) == pytest.approx(growth_rate(4, 3), abs=1e-12)
        for m in range(1, 8):
            assert growth_rate(m, m) == pytest.approx(2 ** (1 / m), abs=1e-11)

    def test_reference_digits(self):
        assert growth_rate(3, 4) == pytest.approx(1.2207440846, abs=1e-9)
        assert growth_rate(7, 5) == pytest.approx(1.1237, abs=1e-4)

    def test_domain(self):
        with pytest.raises(DomainError):
            growth_rate(0, 3)


class TestLocalDimBound:
    def test_unique_address_consistency(self):
        # growth 1 reduces to log 2 / log beta
        beta = 1.7
        assert local_dim_bound(1.0, beta) == pytest.approx(math.log(2) / math.log(beta))

    def test_pisot_example(self):
        assert local_dim_bound(growth_rate(3, 4), 1 / 0.570) <= 0.895

    def test_perron_example(self):
        assert local_dim_bound(growth_rate(7, 5), 1 / 0.5546) <= 0.98


class TestFengWang:
    def test_degree_nine_fails(self):
        assert not feng_wang_test(9, 0.5546)
        assert 2 ** (-9 / 10) == pytest.approx(0.536, abs=5e-4)

    def test_degree_one_passes(self):
        assert feng_wang_test(1, 0.6)
        assert 2 ** (-1 / 2) == pytest.approx(0.7071, abs=1e-4)

    def test_boundary_strict(self):
        n = 4
        assert not feng_wang_test(n, 2 ** (-n / (n + 1)))

    def test_domain(self):
        with pytest.raises(DomainError):
            feng_wang_test(0, 0.6)
        with pytest.raises(DomainError):
            feng_wang_test(3, 0.4)


class TestSingularity:
    def test_pisot_example(self):
        res = singularity_test(3, 4, 0.570)
        assert res.singular and res.dim_bound <= 0.895

    def test_perron_example(self):
        res = singularity_test(7, 5, 0.5546)
        assert res.singular and res.dim_bound <= 0.98
        assert growth_rate(7, 5) > 2 * 0.5546  # 1.1237... > 1.1092

    def test_m_n_one_always_singular(self):
        for s in (0.51, 0.7, 0.99):
            assert singularity_test(1, 1, s).singular

    def test_equivalent_formulations(self):
        # (2s)^-m + (2s)^-n > 1 iff growth_rate(m, n) > 2s
        for m, n in [(2, 3), (3, 4), (7, 5), (4, 9)]:
            rho = growth_rate(m, n)
            for s in (0.52, 0.56, 0.61, 0.66, 0.74, 0.9):
                lhs = (2 * s) ** -m + (2 * s) ** -n > 1
                assert lhs == (rho > 2 * s) == singularity_test(m, n, s).singular
