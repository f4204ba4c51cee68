"""Acceptance gate: one test per criterion, each printing its verdict line.

Criterion text lives next to the criterion functions in
germkit.acceptance; every test runs one criterion at the default seed,
prints the "criterion N (...): PASS/FAIL in Ns" line plus detail rows,
and asserts the verdict. Criterion 1 carries the heavy Milnor-number
reproduction and dominates the runtime of the whole suite.
"""

import pytest

from germkit.acceptance import CRITERIA, run_criterion


def _check(number):
    res = run_criterion(number)
    print(res.line())
    for d in res.details:
        print("    " + d)
    assert res.passed, res.line()


def test_criterion_1_zariski_reproduction():
    _check(1)


def test_criterion_2_ft_grid():
    _check(2)


def test_criterion_3_saito_consistency():
    _check(3)


def test_criterion_4_reiffen_exactness():
    _check(4)


def test_criterion_5_engine_properties():
    _check(5)


def test_criterion_6_calculus_properties():
    _check(6)


def test_criterion_7_front_end():
    _check(7)


def test_registry_is_complete():
    assert [num for num, _, _, _ in CRITERIA] == [1, 2, 3, 4, 5, 6, 7]
    with pytest.raises(ValueError):
        run_criterion(8)
