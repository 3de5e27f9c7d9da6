from fractions import Fraction

import mpmath
import pytest
from mpmath import mp, mpf

from hyperzeta import DEFAULT_POLICY, PrecisionPolicy
from hyperzeta.constants import (
    bernoulli_number,
    bernoulli_poly_coeffs,
    euler_gamma,
    gamma_scalar,
    hurwitz_zeta,
    loggamma,
    zeta_int,
)
from hyperzeta.errors import DomainError

P = DEFAULT_POLICY


def test_bernoulli_numbers_exact():
    expected = {
        0: Fraction(1),
        1: Fraction(-1, 2),
        2: Fraction(1, 6),
        4: Fraction(-1, 30),
        6: Fraction(1, 42),
        8: Fraction(-1, 30),
        12: Fraction(-691, 2730),
    }
    for n, v in expected.items():
        assert bernoulli_number(n) == v
    for n in range(3, 20, 2):
        assert bernoulli_number(n) == 0


def test_bernoulli_poly_coeffs():
    # B_2(x) = x^2 - x + 1/6
    assert bernoulli_poly_coeffs(2) == (Fraction(1, 6), Fraction(-1), Fraction(1))


def test_gamma_constant_against_second_method():
    with P.context():
        ours = euler_gamma(P)
        assert abs(ours - mp.euler) < mpf("1e-50")


def test_zeta_int_closed_forms():
    with P.context():
        assert abs(zeta_int(2, P) - mp.pi ** 2 / 6) < mpf("1e-50")
        assert abs(zeta_int(4, P) - mp.pi ** 4 / 90) < mpf("1e-50")


def test_zeta_int_against_second_method():
    with P.context():
        for j in (3, 5, 11):
            assert abs(zeta_int(j, P) - mp.zeta(j)) < mpf("1e-50")


def test_zeta_int_domain():
    with pytest.raises(DomainError):
        zeta_int(1, P)


def test_precision_doubling_stability():
    lo = PrecisionPolicy(128, 1e-30, 1e-30)
    hi = PrecisionPolicy(256, 1e-30, 1e-30)
    with hi.context():
        assert abs(euler_gamma(lo) - euler_gamma(hi)) < mpf(2) ** -120
        assert abs(zeta_int(3, lo) - zeta_int(3, hi)) < mpf(2) ** -120


def test_hurwitz_against_mpmath():
    with P.context():
        for s, a in [
            (mpf("2.5"), mpf("1.3")),
            (mpf("-1.25"), mpf("0.7")),
            (mp.mpc("0.5", "1.5"), mpf(2)),
            (mp.mpc("-3.5", "-0.25"), mp.mpc("1.0", "0.4")),
        ]:
            ours = hurwitz_zeta(s, a, P)
            ref = mpmath.zeta(s, a)
            assert abs(ours - ref) < mpf("1e-45")


def test_hurwitz_pole_and_domain():
    with pytest.raises(DomainError):
        hurwitz_zeta(1, 1, P)
    with pytest.raises(DomainError):
        hurwitz_zeta(2, -1, P)


def test_loggamma_against_mpmath():
    with P.context():
        for w in (mpf("0.3"), mpf(1), mpf("7.5"), mp.mpc(2, 3), mp.mpc("0.5", "-1")):
            assert abs(loggamma(w, P) - mp.loggamma(w)) < mpf("1e-45")


def test_loggamma_pole():
    with pytest.raises(DomainError):
        loggamma(0, P)
    with pytest.raises(DomainError):
        loggamma(-3, P)


def test_gamma_scalar_functional_equation():
    with P.context():
        z = mp.mpc("1.7", "0.3")
        assert abs(gamma_scalar(z + 1, P) - z * gamma_scalar(z, P)) < mpf("1e-45")
