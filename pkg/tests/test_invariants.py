from fractions import Fraction

import pytest

from wingerverify.invariants import (ReynoldsAverager, contains_up_to_scalar,
                                     molien_closed_form, molien_series,
                                     reynolds_basis)
from wingerverify.linalg import Matrix
from wingerverify.winger import f_poly, q_poly, reconstruct_group


def mats():
    return reconstruct_group().matrices


def test_molien_matches_closed_form():
    series = molien_series(mats(), 31)
    assert series == molien_closed_form(31)


def test_molien_low_coefficients():
    series = molien_series(mats(), 16)
    assert series[0] == 1
    assert series[1] == 0
    assert series[2] == 1
    assert series[6] == 2
    assert series[15] == 1
    assert all(series[k] == 0 for k in range(1, 15, 2))


def test_molien_rejects_non_groups():
    bad = [Matrix.identity(3), Matrix.diagonal([1, 1, 2])]
    with pytest.raises(ValueError):
        molien_series(bad, 10)


def test_reynolds_dims_match_molien():
    series = molien_series(mats(), 13)
    for d in range(13):
        assert len(reynolds_basis(mats(), d)) == series[d], d


def test_reynolds_idempotent_and_invariant():
    avg = ReynoldsAverager(mats())
    p = avg.average((2, 2, 2))
    # invariant under every element, and averaging a second time fixes it
    for m in list(mats())[::9]:
        assert p.act(m) == p
    total = None
    for e, c in p.terms.items():
        img = avg.average(e) * c.to_fraction()
        total = img if total is None else total + img
    if total is None:
        total = p  # zero projection trivially fixed
    assert total == p


def test_degree_2_and_6_spaces():
    b2 = reynolds_basis(mats(), 2)
    assert len(b2) == 1
    assert contains_up_to_scalar(b2, q_poly())
    assert reynolds_basis(mats(), 3) == []
    b6 = reynolds_basis(mats(), 6)
    assert len(b6) == 2
    assert contains_up_to_scalar(b6, q_poly() ** 3)
    assert contains_up_to_scalar(b6, f_poly())
    assert not contains_up_to_scalar(b6, q_poly() * q_poly())


def test_fast_path_agrees_with_full_average():
    avg = ReynoldsAverager(mats())
    assert avg.diag is not None
    slow = ReynoldsAverager(mats())
    slow.diag = None  # force the generic 60-element path
    for expo in ((2, 0, 0), (1, 1, 0), (2, 2, 2), (3, 1, 2)):
        assert avg.average(expo) == slow.average(expo)
