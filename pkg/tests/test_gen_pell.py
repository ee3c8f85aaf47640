import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracles import gen_seeded
from genpell.gen_pell import (
    PellParams,
    binet_weights,
    e_p,
    even_partial_sum,
    gen_pell,
    gen_pell_addition,
    gen_pell_binet,
    odd_partial_sum,
    ratio_convergence,
    silver_ratio_identity,
)
from genpell.pell_core import pell, pell_lucas
from genpell.silver_ring import binet_pell

params = st.builds(PellParams, st.integers(-50, 50), st.integers(-50, 50))
index = st.integers(-60, 60)


@given(st.integers(-100, 100))
def test_special_cases(n):
    assert gen_pell(PellParams(1, 0), n) == pell(n)
    assert gen_pell(PellParams(2, 2), n) == pell_lucas(n)


def test_examples():
    assert gen_pell(PellParams(2, 2), 3) == 14
    assert gen_pell(PellParams(2, 1), 5) == 70


@given(params, index)
def test_linear_form_matches_seeded_recurrence(pq, n):
    assert gen_pell(pq, n) == gen_seeded(pq.p, pq.q, n)


@pytest.mark.parametrize("pq, expected", [((1, 0), 1), ((0, 0), 0), ((2, 1), -1)])
def test_e_p_examples(pq, expected):
    assert e_p(PellParams(*pq)) == expected


@given(params, index)
def test_e_p_is_cassini_constant(pq, n):
    g = lambda k: gen_pell(pq, k)  # noqa: E731
    assert g(n - 1) * g(n + 1) - g(n) ** 2 == (-1) ** (n % 2) * e_p(pq)


def test_addition_examples():
    assert gen_pell_addition(PellParams(1, 0), 2, 3) == 29
    # G(1+2) for (2, 1) is 2*5 + 1*2 = 12
    assert gen_pell_addition(PellParams(2, 1), 1, 2) == 12 == gen_seeded(2, 1, 3)


@given(params, index, st.integers(-30, 30))
def test_addition_formula(pq, n, r):
    assert gen_pell_addition(pq, n, 0) == gen_pell(pq, n)
    assert gen_pell_addition(pq, n, r) == gen_pell(pq, n + r)


def test_partial_sum_examples():
    assert odd_partial_sum(PellParams(1, 0), 2) == 12
    assert odd_partial_sum(PellParams(7, -3), 0) == 0
    assert odd_partial_sum(PellParams(2, 1), 2) == gen_pell(PellParams(2, 1), 4) - 1
    assert even_partial_sum(PellParams(1, 0), 2) == 28
    assert even_partial_sum(PellParams(7, -3), 0) == 0
    assert even_partial_sum(PellParams(1, 1), 1) == gen_pell(PellParams(1, 1), 3) - 1


@given(params, st.integers(0, 40))
def test_partial_sums_closed_forms(pq, n):
    assert odd_partial_sum(pq, n) == gen_pell(pq, 2 * n) - pq.q
    assert even_partial_sum(pq, n) == gen_pell(pq, 2 * n + 1) - pq.p


def test_partial_sums_reject_negative():
    with pytest.raises(ValueError):
        odd_partial_sum(PellParams(1, 0), -1)
    with pytest.raises(ValueError):
        even_partial_sum(PellParams(1, 0), -1)


@given(st.integers(-50, 50))
def test_binet_reduces_to_pell(n):
    assert gen_pell_binet(PellParams(1, 0), n) == binet_pell(n)


def test_binet_examples():
    assert gen_pell_binet(PellParams(2, 1), 5) == 70
    assert gen_pell_binet(PellParams(-1, 3), 7) == gen_seeded(-1, 3, 7)


@given(params, st.integers(-80, 80))
def test_binet_matches_recurrence(pq, n):
    assert gen_pell_binet(pq, n) == gen_seeded(pq.p, pq.q, n)


@given(params)
def test_binet_weights_are_conjugate(pq):
    a_bar, b_bar = binet_weights(pq)
    assert a_bar.conj() == b_bar


@pytest.mark.parametrize("pq", [(1, 0), (0, 0), (3, -2)])
def test_silver_ratio_examples(pq):
    assert silver_ratio_identity(PellParams(*pq))


@given(params)
def test_silver_ratio_identity_everywhere(pq):
    assert silver_ratio_identity(pq)


def test_ratio_convergence_examples():
    assert ratio_convergence(PellParams(1, 0), 40) < 1e-12
    assert ratio_convergence(PellParams(1, 0), 1) == pytest.approx(abs(2 - (1 + math.sqrt(2))))
    assert ratio_convergence(PellParams(2, 2), 40) < 1e-12


def test_ratio_convergence_zero_term():
    with pytest.raises(ZeroDivisionError):
        ratio_convergence(PellParams(1, 0), 0)


def test_params_value_semantics():
    assert PellParams(2, 1) == PellParams(2, 1)
    assert len({PellParams(2, 1), PellParams(2, 1)}) == 1
    assert str(PellParams(2, 1)) == "(p=2, q=1)"
