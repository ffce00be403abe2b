from fractions import Fraction

import pytest

from wingerverify.cyclo import (Cyclo, ConductorMismatch, cyclotomic_polynomial,
                                euler_phi, golden, make, rational, sqrt5, zeta)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(5) == (1, 1, 1, 1, 1)
    assert cyclotomic_polynomial(10) == (1, -1, 1, -1, 1)
    assert euler_phi(5) == 4


def test_basic_arithmetic():
    z = zeta(5)
    assert z ** 5 == rational(1)
    assert z + z ** 2 + z ** 3 + z ** 4 == rational(-1)
    assert (z - z) .is_zero()
    assert z * z.inv() == rational(1)
    assert z.inv() == z ** 4


def test_sqrt5_and_golden():
    s = sqrt5()
    assert s * s == rational(5)
    g = golden()
    assert g * g == g + 1
    assert g.conjugate() == g          # real number: complex conjugation fixes it
    assert g.galois(2) * g == rational(-1)  # golden ratio times its field conjugate


def test_rational_detection():
    q = rational(Fraction(3, 7))
    assert q.is_rational()
    assert q.to_fraction() == Fraction(3, 7)
    assert not zeta().is_rational()
    with pytest.raises(ValueError):
        zeta().to_fraction()


def test_canonical_form_and_hash():
    a = make(5, [Fraction(1, 2), 0, 0, 0, 0])
    b = rational(Fraction(1, 2))
    assert a == b and hash(a) == hash(b)
    # folding of high powers: zeta^5 = 1 and zeta^6 = zeta
    assert make(5, [0, 0, 0, 0, 0, 1]) == rational(1)
    assert make(5, [0, 0, 0, 0, 0, 0, 1]) == zeta()


def test_galois_orbit_sums():
    z = zeta()
    trace = sum((z.galois(k) for k in (2, 3, 4)), z)
    assert trace == rational(-1)
    assert sqrt5().galois(2) == -sqrt5()


def test_division_and_powers():
    z = zeta()
    x = (rational(3) + z) / (rational(1) - z)
    assert x * (rational(1) - z) == rational(3) + z
    assert z ** -3 == z ** 2


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        zeta(5) + zeta(7)


def test_embed():
    import mpmath
    v = golden().embed(30)
    with mpmath.workdps(40):
        assert abs(v - (1 + mpmath.sqrt(5)) / 2) < mpmath.mpf(10) ** -25
    assert abs(zeta().embed(20) ** 5 - 1) < 1e-15


def test_str_roundtrip_style():
    x = rational(Fraction(1, 2)) * zeta() ** 3 - 1
    assert str(x) == "1/2*z^3-1"
