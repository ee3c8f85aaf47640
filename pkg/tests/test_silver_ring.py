import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from _oracles import pell_binomial, pell_lucas_binomial
from genpell.errors import IntegrityError
from genpell.pell_core import pell, pell_lucas
from genpell.silver_ring import (
    ALPHA,
    BETA,
    QuadInt,
    alpha_pow,
    beta_pow,
    binet_pell,
    binet_pell_lucas,
    quad_conj,
    quad_mul,
    to_real,
)

small = st.integers(-10**6, 10**6)
quads = st.builds(QuadInt, small, small)


def test_mul_examples():
    assert quad_mul(QuadInt(1, 1), QuadInt(1, -1)) == QuadInt(-1, 0)
    assert quad_mul(QuadInt(1, 1), QuadInt(1, 0)) == QuadInt(1, 1)
    assert quad_mul(QuadInt(1, 1), QuadInt(1, 1)) == QuadInt(3, 2)


def test_conj_examples():
    assert quad_conj(QuadInt(1, 1)) == QuadInt(1, -1)
    assert quad_conj(QuadInt(5, 0)) == QuadInt(5, 0)


@given(quads, quads)
def test_conj_is_ring_automorphism(x, y):
    assert quad_conj(x * y) == quad_conj(x) * quad_conj(y)
    assert quad_conj(x + y) == quad_conj(x) + quad_conj(y)


@given(quads, quads, quads)
def test_ring_axioms(x, y, z):
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * y == y * x
    assert x - x == QuadInt(0, 0)


@given(quads, quads)
def test_norm_is_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()


@given(quads, st.integers(-5, 5), st.integers(-5, 5))
def test_mul_against_float(x, a, b):
    y = QuadInt(a, b)
    r2 = math.sqrt(2)
    assert math.isclose((x * y).to_real(), x.to_real() * y.to_real(), rel_tol=1e-9, abs_tol=1e-3)
    assert math.isclose(y.to_real(), a + b * r2)


def test_alpha_pow_examples():
    assert alpha_pow(2) == QuadInt(3, 2)
    assert alpha_pow(0) == QuadInt(1, 0)
    assert alpha_pow(-1) == QuadInt(-1, 1)
    assert ALPHA * alpha_pow(-1) == 1
    assert ALPHA * BETA == -1


@given(st.integers(-200, 200))
def test_alpha_pow_components_are_pell(n):
    # alpha^n = (Q(n)/2) + P(n) sqrt 2
    assert alpha_pow(n) == QuadInt(pell_lucas(n) // 2, pell(n))
    assert beta_pow(n) == QuadInt(pell_lucas(n) // 2, -pell(n))


@pytest.mark.parametrize("n, expected", [(5, 29), (0, 0), (64, pell_binomial(64))])
def test_binet_pell_examples(n, expected):
    assert binet_pell(n) == expected


@pytest.mark.parametrize("n, expected", [(3, 14), (0, 2), (40, pell_lucas_binomial(40))])
def test_binet_pell_lucas_examples(n, expected):
    assert binet_pell_lucas(n) == expected


@given(st.integers(-400, 400))
def test_binet_matches_oracle(n):
    assert binet_pell(n) == pell_binomial(n)
    assert binet_pell_lucas(n) == pell_lucas_binomial(n)


def test_to_real_examples():
    assert to_real(QuadInt(1, 1)) == pytest.approx(2.41421356, abs=1e-8)
    assert to_real(QuadInt(0, 0)) == 0.0
    assert to_real(QuadInt(3, 2)) == pytest.approx(5.8284271, abs=1e-7)


def test_to_real_overflow():
    with pytest.raises(OverflowError):
        to_real(alpha_pow(1000))


def test_exact_div_integrity():
    assert QuadInt(4, 6).exact_div(2) == QuadInt(2, 3)
    with pytest.raises(IntegrityError):
        QuadInt(1, 0).exact_div(QuadInt(0, 2))
    with pytest.raises(IntegrityError):
        QuadInt(2, 3).as_int()


def test_inverse_only_for_units():
    assert ALPHA.inverse() == -BETA
    with pytest.raises(ZeroDivisionError):
        QuadInt(2, 0).inverse()


def test_str():
    assert str(QuadInt(3, -2)) == "3-2√2"
    assert str(QuadInt(0, 1)) == "0+1√2"
