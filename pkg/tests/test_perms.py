import pytest

from wingerverify.perms import (GroupTable, Perm, alternating_group_5, closure,
                                parse_cycles, symmetric_group_5)


def test_parse_and_cycle_string():
    g = parse_cycles("(12345)", 5)
    assert g(1) == 2 and g(5) == 1
    assert g.cycle_string() == "(12345)"
    assert parse_cycles("(12)(34)", 5).cycle_string() == "(12)(34)"
    assert parse_cycles("()", 5).is_identity()
    assert parse_cycles("(1 2 3)", 5) == parse_cycles("(123)", 5)


def test_composition_convention_right_first():
    # (g*h)(x) = g(h(x))
    g = parse_cycles("(12)", 5)
    h = parse_cycles("(23)", 5)
    assert (g * h)(3) == g(h(3)) == 1
    assert (g * h).cycle_string() == "(123)"
    assert (h * g).cycle_string() == "(132)"


def test_inverse_and_order():
    g = parse_cycles("(12345)", 5)
    assert (g * g.inverse()).is_identity()
    assert g.order() == 5
    assert parse_cycles("(12)(34)", 5).order() == 2


def test_group_sizes():
    assert alternating_group_5().order == 60
    assert symmetric_group_5().order == 120


def test_a5_class_sizes():
    sizes = sorted(len(c) for c in alternating_group_5().conjugacy_classes())
    assert sizes == [1, 12, 12, 15, 20]


def test_five_cycle_classes_split_in_a5_not_s5():
    a5, s5 = alternating_group_5(), symmetric_group_5()
    g = parse_cycles("(12345)", 5)
    h = parse_cycles("(12354)", 5)
    assert not a5.are_conjugate(g, h)
    assert s5.are_conjugate(g, h)
    # inverses stay in the same A5 class
    assert a5.are_conjugate(g, g.inverse())


def test_closure_subgroups():
    d10 = closure([parse_cycles("(12345)", 5), parse_cycles("(25)(34)", 5)])
    assert d10.order == 10
    s3 = closure([parse_cycles("(123)", 5), parse_cycles("(12)(45)", 5)])
    assert s3.order == 6
    assert d10.is_subgroup_of(alternating_group_5())


def test_coset_action_degrees():
    a5 = alternating_group_5()
    d10 = closure([parse_cycles("(12345)", 5), parse_cycles("(25)(34)", 5)])
    cosets, action = a5.coset_action(d10)
    assert len(cosets) == 6
    assert all(p.degree == 6 for p in action.values())
    # the action is a homomorphism on a sample
    g = parse_cycles("(12345)", 5)
    h = parse_cycles("(12)(34)", 5)
    assert action[g * h] == action[g] * action[h]


def test_group_table_validation():
    with pytest.raises(ValueError):
        GroupTable([parse_cycles("(12)", 5)])  # identity missing


def test_centralizer_orders():
    a5 = alternating_group_5()
    assert a5.centralizer_order(parse_cycles("(12345)", 5)) == 5
    assert a5.centralizer_order(parse_cycles("(12)(34)", 5)) == 4
    assert a5.centralizer_order(parse_cycles("(123)", 5)) == 3
