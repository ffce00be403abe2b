from fractions import Fraction

import pytest

from wingerverify.cyclo import rational, zeta
from wingerverify.linalg import Matrix, UniPoly


def gram():
    h = rational(Fraction(1, 2))
    z, o = rational(0), rational(1)
    return Matrix.from_rows([[z, h, z], [h, z, z], [z, z, o]])


def test_det_gram():
    assert gram().det() == rational(Fraction(-1, 4))


def test_det_singular_and_permutation_sign():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    assert m.det().is_zero()
    p = Matrix.from_rows([[0, 1], [1, 0]])
    assert p.det() == rational(-1)


def test_inverse():
    m = Matrix.from_rows([[1, 2, 0], [0, 1, 1], [1, 0, 1]])
    assert m * m.inverse() == Matrix.identity(3)
    with pytest.raises(ValueError):
        Matrix.from_rows([[1, 1], [1, 1]]).inverse()


def test_charpoly_and_cayley_hamilton():
    d = Matrix.diagonal([zeta(), zeta() ** 4, rational(1)])
    cp = d.charpoly()
    assert cp.degree() == 3
    assert cp(d).is_zero()
    assert cp(zeta()) .is_zero()
    # constant term is (-1)^3 det
    assert cp.coeffs[0] == -d.det()


def test_kernel():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    ker = m.kernel()
    assert len(ker) == 1
    assert all(c.is_zero() for c in m.apply(ker[0]))


def test_order():
    d = Matrix.diagonal([zeta(), zeta() ** 4, rational(1)])
    assert d.order() == 5
    with pytest.raises(ValueError):
        Matrix.diagonal([rational(2)]).order(limit=10)


def test_unipoly_mul_and_eval():
    p = UniPoly([1, 1])          # 1 + T
    q = UniPoly([-1, 1])         # -1 + T
    assert (p * q).coeffs == UniPoly([-1, 0, 1]).coeffs
    assert p(rational(4)) == rational(5)
