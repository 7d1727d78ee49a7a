import json

import pytest

from srimat.errors import BoundExceededError, OddCorollaryError
from srimat.polynomial import IntPolynomial
from srimat.verify import (
    oracle_T_from_involutions,
    shape_checks,
    verify_alternating_sum,
    verify_corollary,
    verify_main_theorem,
)


def test_main_theorem_first_form_small():
    r = verify_main_theorem(1)
    assert r.passed and r.lhs == r.rhs == IntPolynomial([1])
    r = verify_main_theorem(2)
    assert r.passed and r.rhs == IntPolynomial([1, 1])
    # (1-t)^2 + 4t(1-t) + 4t^2 = 1 + 2t + t^2
    r = verify_main_theorem(3)
    assert r.passed and r.lhs == IntPolynomial([1, 2, 1])


def test_main_theorem_second_form_small():
    r = verify_main_theorem(2, "second")
    # t(1+t) + t^2 = t + 2t^2
    assert r.passed and r.lhs == IntPolynomial([0, 1, 2])
    r = verify_main_theorem(3, "second")
    assert r.passed and r.rhs == IntPolynomial([0, 1, 4, 4])


@pytest.mark.parametrize("n", range(1, 8))
@pytest.mark.parametrize("form", ["first", "second"])
def test_main_theorem_holds(n, form):
    assert verify_main_theorem(n, form).passed


def test_main_theorem_detects_wrong_counts():
    r = verify_main_theorem(3, t_counts=[1, 4, 5])
    assert not r.passed
    assert "!=" in r.detail
    with pytest.raises(ValueError):
        verify_main_theorem(3, "third")


@pytest.mark.parametrize("n, expected", [(1, -1), (2, 1), (3, -1)])
def test_alternating_sum_examples(n, expected):
    a = verify_alternating_sum(n, "by_counts")
    b = verify_alternating_sum(n, "by_pairing")
    assert a.lhs == b.lhs == a.rhs == expected
    assert a.passed and b.passed


def test_alternating_sum_wrong_counts_fail():
    assert not verify_alternating_sum(3, t_counts=[1, 4, 3]).passed
    with pytest.raises(ValueError):
        verify_alternating_sum(3, "sideways")


def test_corollary_examples():
    r = verify_corollary(2)
    assert r.passed and r.lhs == 1
    assert verify_corollary(4).passed
    with pytest.raises(OddCorollaryError):
        verify_corollary(3)


def test_corollary_detects_wrong_counts():
    assert not verify_corollary(4, w_counts=[0, 1, 3, 4]).passed


def test_oracle_examples():
    assert oracle_T_from_involutions(1) == [1]
    assert oracle_T_from_involutions(2) == [1, 2]
    assert oracle_T_from_involutions(3) == [1, 4, 4]


def test_shape_checks_small():
    report = shape_checks(3)
    assert [r.row for r in report.rows] == [(1,), (1, 1), (1, 2, 1)]
    assert all(r.symmetric and r.unimodal and r.log_concave for r in report.rows)
    assert report.first_log_concave_failure is None
    assert json.loads(json.dumps(report.to_dict()))["rows"][2]["row"] == [1, 2, 1]


def test_report_serialisation():
    d = verify_main_theorem(2).to_dict()
    assert set(d) == {"identity", "n", "passed", "lhs", "rhs", "detail"}
    assert d["lhs"] == [1, 1] and d["identity"] == "main1"
    assert verify_alternating_sum(2).to_dict()["lhs"] == 1


def test_bound_enforced():
    with pytest.raises(BoundExceededError):
        verify_main_theorem(5, bound=4)
    with pytest.raises(BoundExceededError):
        oracle_T_from_involutions(13)
