from fractions import Fraction

from wingerverify.cyclo import rational, zeta
from wingerverify.linalg import Matrix
from wingerverify.polys import Poly3, monomials_of_degree


def test_ring_ops():
    x, y, z = (Poly3.variable(i) for i in range(3))
    assert (x + y) * (x - y) == x * x - y * y
    assert ((x + y) ** 2).coefficient((1, 1, 0)) == rational(2)
    assert (x * 0).is_zero()


def test_homogeneous_and_degree():
    x, y, z = (Poly3.variable(i) for i in range(3))
    q = x * y + z ** 2
    assert q.is_homogeneous(2)
    assert not (q + x).is_homogeneous()
    assert q.total_degree() == 2
    assert Poly3.zero().total_degree() == -1


def test_partials_and_gradient():
    x, y, z = (Poly3.variable(i) for i in range(3))
    f = x ** 3 * y + z ** 2
    assert f.partial(0) == 3 * (x ** 2) * y
    assert f.partial(2) == 2 * z
    assert f.partial(1) == x ** 3


def test_evaluate_exact():
    x, y, z = (Poly3.variable(i) for i in range(3))
    f = x * y + z ** 2
    val = f.evaluate((zeta(), zeta() ** 4, rational(0)))
    assert val == rational(1)


def test_act_is_precomposition():
    x, y, z = (Poly3.variable(i) for i in range(3))
    swap = Matrix.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    assert (x ** 2 + y).act(swap) == y ** 2 + x
    m = Matrix.from_rows([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    assert x.act(m) == x + y
    # (f o m1) o m2 = f o (m1*m2)
    f = x * y + z ** 2
    m2 = Matrix.from_rows([[1, 0, 0], [0, 1, 2], [0, 0, 1]])
    assert f.act(m).act(m2) == f.act(m * m2)


def test_monomials_of_degree():
    assert len(monomials_of_degree(6)) == 28
    assert len(monomials_of_degree(13)) == 105
    ms = monomials_of_degree(3)
    assert ms == sorted(ms, reverse=True)
    assert all(sum(m) == 3 for m in ms)


def test_printer_deterministic():
    f = Poly3({(1, 1, 0): 1, (0, 0, 2): Fraction(-1, 2)})
    assert str(f) == "z0*z1-1/2*z2^2"
