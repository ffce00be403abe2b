from fractions import Fraction

import pytest

from wingerverify.cyclo import rational, zeta
from wingerverify.linalg import Matrix
from wingerverify.perms import parse_cycles
from wingerverify.polys import Poly3
from wingerverify.winger import (INFINITY, f_poly, gram_matrix,
                                 irregular_orbits, node_check, normalize_point,
                                 no_three_concurrent, pencil_member, q_poly,
                                 reconstruct_group, singular_lambda, six_lines)


def test_six_lines_product_is_f():
    lines = six_lines()
    assert len(lines) == 6
    prod = Poly3.monomial((0, 0, 0), 1)
    for ln in lines:
        prod = prod * ln
    assert prod == f_poly()


def test_f_has_integer_coefficients():
    f = f_poly()
    assert f.is_homogeneous(6)
    for c in f.terms.values():
        q = c.to_fraction()
        assert q.denominator == 1
    # the two pure monomials the conic power cannot see
    assert f.coefficient((0, 0, 6)) == rational(1)
    assert (q_poly() ** 3).coefficient((3, 3, 0)) == rational(1)
    assert f.coefficient((3, 3, 0)).is_zero()


def test_no_three_concurrent():
    assert no_three_concurrent()


def test_group_reconstruction():
    g = reconstruct_group()
    assert g.order == 60
    assert g.class_sizes() == [1, 12, 12, 15, 20]
    # closure sample and a distinguished element
    eta = zeta()
    diag = Matrix.diagonal([eta, eta ** 4, rational(1)])
    assert diag in set(g.matrices)


def test_group_preserves_everything():
    g = reconstruct_group()
    q, f, a = q_poly(), f_poly(), gram_matrix()
    for m in g.matrices:
        assert m.transpose() * a * m == a
        assert m.det() == rational(1)
    # polynomial invariance spot-checked on non-diagonal elements here;
    # the full 60-element sweep runs in the acceptance gate
    for m in list(g.matrices)[::7]:
        assert q.act(m) == q and f.act(m) == f


def test_isomorphism_respects_products():
    g = reconstruct_group()
    a = parse_cycles("(12345)", 5)
    b = parse_cycles("(12)(34)", 5)
    assert g.iso[a * b] == g.iso[a] * g.iso[b]
    assert g.iso[a].order() == 5 and g.iso[b].order() == 2
    assert g.label in ("I", "I'")


def test_orbit_sizes_and_positions():
    orbs = irregular_orbits()
    assert sorted(orbs) == [6, 10, 12, 15]
    assert all(len(orbs[k]) == k for k in orbs)
    p = normalize_point((rational(0), rational(0), rational(1)))
    assert p in orbs[6]
    assert q_poly().evaluate(p) == rational(1)
    k_pt = normalize_point((rational(1), rational(0), rational(0)))
    assert k_pt in orbs[12]
    assert all(q_poly().evaluate(x) == rational(0) for x in orbs[12])


def test_pencil_members():
    assert pencil_member(rational(0)) == q_poly() ** 3
    assert pencil_member(INFINITY) == f_poly()
    lam = rational(Fraction(7, 3))
    member = pencil_member(lam)
    m = list(reconstruct_group().matrices)[11]
    assert member.act(m) == member


def test_singular_lambda_values():
    orbs = irregular_orbits()
    assert {str(singular_lambda(p)) for p in orbs[6]} == {"-1"}
    assert {str(singular_lambda(p)) for p in orbs[10]} == {"27/5"}
    assert all(singular_lambda(p) is INFINITY for p in orbs[15])
    assert {str(singular_lambda(p)) for p in orbs[12]} == {"0"}


def test_hand_oracle_gradients_at_vertex():
    p = (rational(0), rational(0), rational(1))
    gq = tuple(d.evaluate(p) for d in (q_poly() ** 3).gradient())
    gf = tuple(d.evaluate(p) for d in f_poly().gradient())
    assert [str(c) for c in gq] == ["0", "0", "6"]
    assert [str(c) for c in gf] == ["0", "0", "6"]


def test_node_checks():
    orbs = irregular_orbits()
    assert all(node_check(rational(-1), p) for p in orbs[6])
    assert all(node_check(rational(Fraction(27, 5)), p) for p in orbs[10])
    assert all(node_check(INFINITY, p) for p in orbs[15])
    # triple conic: singular but not nodal at base points
    assert not node_check(rational(0), next(iter(orbs[12])))


def test_node_check_rejects_smooth_points():
    with pytest.raises(ValueError):
        node_check(rational(-1), (rational(1), rational(1), rational(1)))


def test_normalize_point():
    p = normalize_point((rational(2), rational(4), rational(0)))
    assert p == (rational(Fraction(1, 2)), rational(1), rational(0))
    with pytest.raises(ValueError):
        normalize_point((rational(0), rational(0), rational(0)))
