import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbert_hecke.series import (
    BiSeries,
    OrderMismatch,
    binomial_factor,
    coefficient,
    geometric_inverse,
    specialize_t,
)

ORDER = 5


@st.composite
def series(draw, order=ORDER):
    terms = draw(
        st.dictionaries(
            st.tuples(st.integers(0, order), st.integers(0, 6)), st.integers(-9, 9), max_size=8
        )
    )
    return BiSeries(order, terms)


@st.composite
def units(draw, order=ORDER):
    s = draw(series(order))
    return BiSeries.one(order) + BiSeries(order, {k: c for k, c in s.coeffs.items() if k[0] > 0})


@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + BiSeries.zero(ORDER) == a
    assert a * BiSeries.one(ORDER) == a
    assert a - a == BiSeries.zero(ORDER)


@given(units())
def test_inverse_round_trip(u):
    assert geometric_inverse(u) * u == BiSeries.one(ORDER)


@given(series())
def test_json_round_trip(a):
    assert BiSeries.from_json(a.to_json()) == a
    assert BiSeries.from_dict(json.loads(json.dumps(a.to_dict()))) == a


@given(series(), series(), st.integers(-3, 3))
def test_specialize_is_a_ring_map(a, b, t):
    assert specialize_t(a * b, t) == specialize_t(a, t) * specialize_t(b, t)
    assert specialize_t(a + b, t) == specialize_t(a, t) + specialize_t(b, t)


@given(st.sampled_from([1, -1]), st.integers(0, 4), st.integers(1, 3), st.integers(-4, 4))
def test_binomial_factor_exponent_law(sign, td, qd, e):
    f = binomial_factor(sign, td, qd, e, ORDER)
    g = binomial_factor(sign, td, qd, -e, ORDER)
    assert f * g == BiSeries.one(ORDER)


def test_geometric_series():
    inv = binomial_factor(1, 0, 1, -1, 4)
    assert inv == BiSeries(4, {(n, 0): 1 for n in range(5)})


def test_truncation_drops_high_terms():
    a = BiSeries(2, {(3, 0): 5, (1, 1): 2, (0, 0): 0})
    assert a.coeffs == {(1, 1): 2}
    assert (BiSeries.monomial(2, 1) * BiSeries.monomial(2, 2)).is_zero()


def test_order_mismatch():
    with pytest.raises(OrderMismatch):
        BiSeries.one(3) + BiSeries.one(4)
    with pytest.raises(OrderMismatch):
        BiSeries.one(3) * BiSeries.one(4)


def test_inverse_needs_unit_constant():
    with pytest.raises(ValueError):
        geometric_inverse(BiSeries(3, {(0, 0): 2}))
    with pytest.raises(ValueError):
        geometric_inverse(BiSeries(3, {(0, 0): 1, (0, 1): 1}))


def test_coefficient_and_rows():
    a = BiSeries(3, {(0, 0): 1, (2, 1): -3, (2, 4): 7})
    assert coefficient(a, 2) == {1: -3, 4: 7}
    assert coefficient(a, 1) == {}
    assert a.rows()[2] == {1: -3, 4: 7}
    with pytest.raises(IndexError):
        coefficient(a, 4)


def test_str():
    a = BiSeries(2, {(0, 0): 1, (1, 2): 2, (2, 0): -1, (2, 1): 1})
    assert str(a) == "1 + 2*t^2*q + (-1 + t)*q^2"
    assert str(BiSeries.zero(2)) == "0"


def test_negative_degrees_rejected():
    with pytest.raises(ValueError):
        BiSeries(2, {(0, -1): 1})
    with pytest.raises(ValueError):
        BiSeries(-1)
