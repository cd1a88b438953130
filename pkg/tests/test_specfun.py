import cmath
import math
from itertools import combinations
from random import Random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trihyp.errors import DivergenceError, DomainError
from trihyp.specfun import (
    HypergeometricSpec,
    SeriesControl,
    _sum_series,
    bell_polynomial,
    gamma,
    gauss_sum_2f1,
    hyp1f1,
    hyp2f1,
    hyp3f2,
    hyp_pfq,
    hyp_pfq_regularized,
    incomplete_beta,
    legendre_p,
    legendre_polynomial,
    lower_incomplete_gamma,
    parabolic_cylinder_d,
    pochhammer,
    rgamma,
    whipple_sum_3f2,
)

SQRT_PI = math.sqrt(math.pi)


def rel(a, b):
    return abs(a - b) / max(1.0, abs(b))


class TestPochhammer:
    def test_empty_product(self):
        assert pochhammer(0.7 + 0.3j, 0) == 1

    def test_half_squared(self):
        # direct product oracle: (1/2)(3/2)
        assert pochhammer(0.5, 2) == 0.75

    def test_recurrence_oracle(self):
        # (x)_{k+1} = x (x+1)_k, exactly, for dyadic x
        x = -0.5
        for k in range(1, 9):
            assert pochhammer(x, k + 1) == x * pochhammer(x + 1, k)

    @given(
        st.integers(min_value=-8, max_value=8).map(lambda v: v / 2.0),
        st.integers(min_value=0, max_value=10),
    )
    @settings(deadline=None)
    def test_recurrence_exact_dyadic(self, x, k):
        assert pochhammer(x, k + 1) == x * pochhammer(x + 1, k)


class TestGamma:
    def test_sqrt_pi(self):
        assert rel(gamma(0.5), SQRT_PI) < 1e-14

    def test_half_integers_vs_pochhammer(self):
        for n in range(1, 7):
            expected = pochhammer(0.5, n) * SQRT_PI
            assert rel(gamma(n + 0.5), expected) < 1e-12

    def test_reflection_value(self):
        # Gamma(1/3) Gamma(2/3) = pi / sin(pi/3) = 2 pi / sqrt(3)
        assert rel(gamma(1 / 3) * gamma(2 / 3), 2 * math.pi / math.sqrt(3)) < 1e-13

    def test_recurrence_complex(self):
        for z in (1.7 - 2.2j, -3.4 + 0.9j, 0.05 + 0.0j, 12.0 + 30.0j):
            assert abs(gamma(z + 1) - z * gamma(z)) / abs(gamma(z + 1)) < 1e-12

    def test_poles(self):
        for z in (0, -1, -2, -7):
            with pytest.raises(DomainError):
                gamma(z)
            assert rgamma(z) == 0


class TestHypPfq:
    def test_unity_at_zero(self):
        spec = HypergeometricSpec.of((0.3 + 1j, 2.5), (1.25,), 0.0)
        res = hyp_pfq(spec)
        assert res.value == 1.0 and res.converged and res.est_error == 0.0

    @given(
        st.lists(st.floats(min_value=0.1, max_value=4.0), min_size=1, max_size=2),
        st.lists(st.floats(min_value=0.3, max_value=4.0), min_size=2, max_size=3),
    )
    @settings(deadline=None, max_examples=30)
    def test_unity_at_zero_property(self, upper, lower):
        assert hyp_pfq(HypergeometricSpec.of(upper, lower, 0.0)).value == 1.0

    def test_gauss_point(self):
        assert rel(hyp2f1(0.5, 1, 2, 1), 2.0) < 1e-12

    def test_elementary_point(self):
        # closed form 4 (1 - sqrt(0.5)) of the base reduction
        assert rel(hyp2f1(0.5, 1, 2, 0.5), 4 * (1 - math.sqrt(0.5))) < 1e-12

    def test_whipple_point(self):
        assert rel(hyp3f2(0.25, 0.5, 0.75, 2 / 3, 4 / 3, 1), 4 / 3) < 1e-12

    def test_divergent_at_one(self):
        with pytest.raises(DivergenceError):
            hyp2f1(2.5, 3.0, 4.0, 1.0)

    def test_outside_disc(self):
        with pytest.raises(DomainError):
            hyp2f1(0.5, 1, 2, 1.2)

    def test_invalid_lower_parameter(self):
        with pytest.raises(DomainError):
            hyp2f1(0.5, 1, -2, 0.3)

    def test_terminating_series_any_argument(self):
        # upper parameter -3 makes the series a cubic polynomial
        v = hyp2f1(-3, 1.5, 2.5, 4.0)
        brute = sum(
            pochhammer(-3, k) * pochhammer(1.5, k) / pochhammer(2.5, k) * 4.0**k
            / math.factorial(k)
            for k in range(4)
        )
        assert rel(v, brute) < 1e-14

    def test_nonconvergence_flagged(self):
        res = hyp_pfq(
            HypergeometricSpec.of((0.5, 1.0), (2.0,), 0.999),
            SeriesControl(rel_tol=1e-13, max_terms=50),
        )
        assert not res.converged

    def test_gauss_summation_check(self):
        # routing at z = 1 against the gamma-ratio formula written out here
        rng = Random(101)
        for _ in range(50):
            a = complex(rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 1.0))
            b = complex(rng.uniform(-1.0, 2.0), rng.uniform(-1.0, 1.0))
            c = a + b + complex(rng.uniform(0.31, 2.5), rng.uniform(-0.5, 0.5))
            v = hyp2f1(a, b, c, 1.0)
            ref = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b))
            assert rel(v, ref) < 1e-9

    def test_gauss_vs_raw_series(self):
        # genuine differential check: raw summation converges when the
        # margin is comfortably above 3
        rng = Random(55)
        ctrl = SeriesControl(rel_tol=1e-15, max_terms=6000, consecutive_small=3)
        for _ in range(5):
            a = rng.uniform(0.2, 1.2)
            b = rng.uniform(0.2, 1.2)
            c = a + b + rng.uniform(3.2, 4.5)
            raw = _sum_series((a, b), (c,), 1.0 + 0.0j, ctrl).value
            assert rel(raw, gauss_sum_2f1(a, b, c)) < 1e-9

    def test_whipple_vs_raw_series(self):
        rng = Random(56)
        ctrl = SeriesControl(rel_tol=1e-15, max_terms=6000, consecutive_small=3)
        for _ in range(20):
            a = rng.uniform(0.2, 1.5)
            d = rng.uniform(a - 0.5, 2.2)
            c = rng.uniform(3.2, 5.0)
            upper = (a, 1.0 - a, c)
            lower = (d, 2.0 * c - d + 1.0)
            raw = _sum_series(upper, lower, 1.0 + 0.0j, ctrl).value
            assert rel(raw, whipple_sum_3f2(a, c, d)) < 1e-8

    def test_derivative_contract(self):
        # d/dz 2F1(a,b;c;z) = (ab/c) 2F1(a+1,b+1;c+1;z)
        a, b, c = 0.4, 1.3, 2.2
        h = 1e-6
        for z in (-0.5, -0.2, 0.1, 0.35, 0.5):
            fd = (hyp2f1(a, b, c, z + h) - hyp2f1(a, b, c, z - h)) / (2 * h)
            closed = a * b / c * hyp2f1(a + 1, b + 1, c + 1, z)
            assert rel(fd, closed) < 1e-6


class TestRegularized:
    def test_trivial_at_zero(self):
        res = hyp_pfq_regularized(HypergeometricSpec.of((0.5, 1.0), (2.0,), 0.0))
        assert rel(res.value, 1.0) < 1e-14  # 1/Gamma(2)

    def test_negative_integer_lower(self):
        # (1/2)_2 * (0.5/0.5)^2 / sqrt(0.5) = (3/4) sqrt(2)
        res = hyp_pfq_regularized(HypergeometricSpec.of((0.5, 1.0), (-1.0,), 0.5))
        assert rel(res.value, 0.75 * math.sqrt(2)) < 1e-12

    def test_differentiation_row(self):
        # 2 (1/2)_2 t at n = 2, t = 0.3
        res = hyp_pfq_regularized(HypergeometricSpec.of((-1.5, -1.0), (0.0,), 0.3))
        assert rel(res.value, 0.45) < 1e-13

    def test_matches_scaled_plain_series(self):
        rng = Random(77)
        for _ in range(25):
            a = rng.uniform(0.2, 2.0)
            b = rng.uniform(0.2, 2.0)
            c = rng.uniform(0.4, 3.0)
            z = complex(rng.uniform(-0.8, 0.8), rng.uniform(-0.5, 0.5))
            if abs(z) >= 0.9:
                continue
            plain = hyp2f1(a, b, c, z)
            reg = hyp_pfq_regularized(HypergeometricSpec.of((a, b), (c,), z)).value
            assert rel(reg, plain * rgamma(c)) < 1e-12


class TestIncompleteGamma:
    def test_order_one(self):
        for z in (0.3, 2.0, 5.0 - 1.5j):
            assert rel(lower_incomplete_gamma(1, z), 1 - cmath.exp(-z)) < 1e-13

    def test_zero_argument(self):
        assert lower_incomplete_gamma(2.3, 0) == 0

    def test_exponential_polynomial_oracle(self):
        # gamma(3, 2) = 2! (1 - e^-2 (1 + 2 + 2)) = 2 - 10 e^-2
        assert rel(lower_incomplete_gamma(3, 2), 2 - 10 * math.exp(-2)) < 1e-13

    def test_saturated_regime(self):
        assert rel(lower_incomplete_gamma(2, 80.0), 1.0) < 1e-13

    def test_non_integer_vs_quadrature_free_identity(self):
        # gamma(nu, z) + upper tail = Gamma(nu): check against the
        # complement computed from the saturated series at large z
        nu = 1.6
        total = lower_incomplete_gamma(nu, 500.0)
        assert rel(total, gamma(nu)) < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            lower_incomplete_gamma(-0.5, 1.0)
        with pytest.raises(DomainError):
            lower_incomplete_gamma(0, 1.0)


class TestIncompleteBeta:
    def test_zero(self):
        assert incomplete_beta(1.5, 0.5, 0) == 0

    def test_elementary_oracle(self):
        # B(1, 1/2, t) = 2 (1 - sqrt(1-t))
        for t in (0.2, 0.55, 0.9):
            assert rel(incomplete_beta(1, 0.5, t), 2 * (1 - math.sqrt(1 - t))) < 1e-12

    def test_complete_value(self):
        # B(2, 3, 1) = Gamma(2) Gamma(3) / Gamma(5) = 1/12
        assert rel(incomplete_beta(2, 3, 1), 1 / 12) < 1e-13

    def test_domain(self):
        with pytest.raises(DomainError):
            incomplete_beta(-1.0, 0.5, 0.3)


class TestLegendre:
    def test_degree_one(self):
        for x in (0.37, 1.8, 0.4 + 0.2j):
            assert rel(legendre_p(1, 0, x), x) < 1e-13

    def test_vanishing_at_one(self):
        for n in range(1, 5):
            assert legendre_p(-n, -n, 1.0) == 0

    def test_elementary_order_degree_relation(self):
        # P_n^(n-1)(t) = -(-2)^n (1/2)_n t (1-t^2)^((n-1)/2)
        t = 0.3
        for n in range(1, 5):
            expected = -((-2.0) ** n) * pochhammer(0.5, n) * t * (1 - t * t) ** ((n - 1) / 2)
            assert rel(legendre_p(n, n - 1, t), expected) < 1e-12

    def test_branch_point(self):
        with pytest.raises(DomainError):
            legendre_p(0.3, 0.5, 1.0)

    @given(
        st.floats(min_value=-1.5, max_value=1.5),
        st.floats(min_value=-0.9, max_value=0.9),
    )
    @settings(deadline=None, max_examples=40)
    def test_degree_reflection_symmetry(self, nu, x):
        # P_(-nu-1)^mu = P_nu^mu
        a = legendre_p(nu, 0.25, x)
        b = legendre_p(-nu - 1.0, 0.25, x)
        assert abs(a - b) <= 1e-11 * max(1.0, abs(a))

    def test_degree_reflection_grid(self):
        for k in range(10):
            x = -0.9 + 0.2 * k
            a = legendre_p(0.7, -0.4, x)
            b = legendre_p(-1.7, -0.4, x)
            assert abs(a - b) <= 1e-12 * max(1.0, abs(a))

    def test_polynomial_recurrence(self):
        assert legendre_polynomial(0, 0.3) == 1
        assert legendre_polynomial(1, 0.3) == 0.3
        assert rel(legendre_polynomial(3, 0.5), -0.4375) < 1e-14


class TestParabolicCylinder:
    def test_order_zero(self):
        for z in (0.4, -3.0, 11.0, 1.0 + 2.0j):
            assert rel(parabolic_cylinder_d(0, z), cmath.exp(-z * z / 4)) < 1e-12

    def test_value_at_origin(self):
        for nu in (1 / 3, -0.7, 2.4):
            expected = 2 ** (nu / 2) * SQRT_PI * rgamma((1 - nu) / 2)
            assert rel(parabolic_cylinder_d(nu, 0), expected) < 1e-12

    def test_kummer_bridge(self):
        # 1F1(a; 3/2; z) against the cylinder-function pair with a = 1/3
        a = 1 / 3
        for z in (0.2, 0.7, 1.5):
            w = math.sqrt(2 * z)
            combo = (
                2 ** (a - 2.5)
                / math.sqrt(math.pi * z)
                * gamma(a - 0.5)
                * math.exp(z / 2)
                * (parabolic_cylinder_d(1 - 2 * a, -w) - parabolic_cylinder_d(1 - 2 * a, w))
            )
            assert rel(combo, hyp1f1(a, 1.5, z)) < 1e-8

    def test_asymptotic_crossover_consistency(self):
        # recurrence D_(nu+1)(z) = z D_nu(z) - nu D_(nu-1)(z) holds across
        # the Kummer/asymptotic switch on the positive axis
        for z in (5.0, 5.7, 6.2, 7.5, 12.0):
            for nu in (-0.4, 1 / 3, 1.1):
                lhs = parabolic_cylinder_d(nu + 1, z)
                rhs = z * parabolic_cylinder_d(nu, z) - nu * parabolic_cylinder_d(nu - 1, z)
                assert abs(lhs - rhs) <= 2e-8 * max(abs(lhs), 1e-300)

    def test_overflow_guard(self):
        with pytest.raises(DomainError):
            parabolic_cylinder_d(0.5, -40.0)


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


class TestBellPolynomial:
    def test_single_block(self):
        xs = [2.0, 3.0, 5.0, 7.0]
        for n in range(1, 5):
            assert bell_polynomial(n, 1, xs) == xs[n - 1]

    def test_all_singletons(self):
        for n in range(1, 6):
            assert bell_polynomial(n, n, [1.5]) == 1.5**n

    def test_three_two(self):
        assert bell_polynomial(3, 2, [2.0, 5.0]) == 3 * 2.0 * 5.0

    def test_bell_numbers_vs_partition_enumeration(self):
        ones = [1.0] * 8
        for n in range(1, 9):
            total = sum(bell_polynomial(n, k, ones) for k in range(1, n + 1))
            count = sum(1 for _ in _set_partitions(list(range(n))))
            assert total.real == pytest.approx(count, rel=1e-12)

    def test_partition_block_counts(self):
        # B_{n,k}(1,...) counts partitions into exactly k blocks
        for n in range(1, 8):
            for k in range(1, n + 1):
                count = sum(
                    1 for p in _set_partitions(list(range(n))) if len(p) == k
                )
                assert bell_polynomial(n, k, [1.0] * (n - k + 1)).real == pytest.approx(count)

    def test_domain(self):
        with pytest.raises(DomainError):
            bell_polynomial(2, 3, [1.0])
        with pytest.raises(DomainError):
            bell_polynomial(3, 0, [1.0, 1.0, 1.0])
        with pytest.raises(DomainError):
            bell_polynomial(4, 2, [1.0, 1.0])  # needs n-k+1 = 3 entries
