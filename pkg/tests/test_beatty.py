import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from beattyq.beatty import (
    BeattyParams, closed_form_matches, dft_direct, ft_closed_form, ft_magnitude, indicator,
    indicator_vector, interval_count, membership_by_duality, transform_numeric,
    variation_identity_check,
)
from beattyq.cyclotomic import CycloElt, embed_complex
from oracles import beatty_counts, dft_numeric

params = st.builds(
    lambda q, p, r: BeattyParams(p, q, r),
    st.integers(2, 80), st.integers(1, 200), st.integers(-200, 200),
)


def test_params_normalize():
    b = BeattyParams(-3, 7, 9)
    assert (b.p, b.q, b.r) == (3, 7, 2)
    for bad in [(0, 7, 0), (3, 1, 0)]:
        with pytest.raises(ValueError):
            BeattyParams(*bad)


def test_small_set_frozen():
    # B(3, 7, 0) = {0, 2, 4}; B(2, 6, 1) = {1, 4}
    assert indicator_vector(BeattyParams(3, 7)).tolist() == [1, 0, 1, 0, 1, 0, 0]
    assert indicator_vector(BeattyParams(2, 6, 1)).tolist() == [0, 1, 0, 0, 1, 0]
    # p > q gives a genuine multiset
    assert indicator_vector(BeattyParams(5, 3)).tolist() == [2, 2, 1]


@given(params)
def test_indicator_matches_oracle(b):
    want = beatty_counts(b.p, b.q, b.r)
    assert indicator_vector(b).tolist() == want
    assert [indicator(b, x) for x in range(b.q)] == want
    assert sum(want) == b.p


@settings(max_examples=200)
@given(params, st.integers(0, 200))
def test_dft_direct_matches_numeric_oracle(b, j):
    z = embed_complex(dft_direct(b, j))
    assert abs(z - dft_numeric(b.p, b.q, b.r, j)) < 1e-8 * b.p
    assert abs(z - transform_numeric(b, j)) < 1e-8 * b.p


@settings(max_examples=300)
@given(params, st.integers(1, 200))
def test_closed_form_and_magnitude(b, j):
    if j % b.q == 0:
        with pytest.raises(ValueError):
            ft_closed_form(b, j)
        return
    assert closed_form_matches(b, j)
    assert abs(ft_magnitude(b, j) - abs(dft_numeric(b.p, b.q, b.r, j))) < 1e-8 * b.p


def test_transform_frozen_values():
    assert dft_direct(BeattyParams(1, 9), 5) == CycloElt.one(9)
    assert abs(transform_numeric(BeattyParams(3, 7), 1) - complex(-0.123489801859, -0.541044173064)) < 1e-11
    assert abs(ft_magnitude(BeattyParams(3, 7), 1) - 0.554958132087) < 1e-11
    assert ft_magnitude(BeattyParams(6, 9), 1) == 0.0
    assert dft_direct(BeattyParams(6, 9), 1).is_zero()


def test_closed_form_any_inverse_representative():
    b = BeattyParams(6, 9, 2)           # g = 3, pbar unique mod 3
    for pbar in (2, 5, 8):
        num, den = ft_closed_form(b, 3, pbar=pbar)
        assert (dft_direct(b, 3) * den - num).is_zero()
    with pytest.raises(ValueError):
        ft_closed_form(b, 3, pbar=1)


def test_r_shift_multiplies_by_root():
    b0, b1 = BeattyParams(4, 11, 0), BeattyParams(4, 11, 3)
    for j in range(11):
        z0, z1 = embed_complex(dft_direct(b0, j)), embed_complex(dft_direct(b1, j))
        assert abs(z1 - z0 * np.exp(-2j * np.pi * 3 * j / 11)) < 1e-9


@pytest.mark.parametrize("q", range(2, 40))
def test_duality_membership(q):
    for p in range(1, q):
        if math.gcd(p, q) != 1:
            continue
        members = beatty_counts(p, q, 0)
        assert [membership_by_duality(p, q, x) for x in range(q)] == [bool(c) for c in members]


def test_duality_domain():
    with pytest.raises(ValueError):
        membership_by_duality(3, 9, 1)


@given(st.integers(2, 40), st.data())
def test_interval_count_and_balance(q, data):
    p = data.draw(st.integers(1, q - 1).filter(lambda p: math.gcd(p, q) == 1))
    x = Fraction(data.draw(st.integers(-300, 300)), data.draw(st.integers(1, 7)))
    length = Fraction(data.draw(st.integers(1, 400)), data.draw(st.integers(1, 7)))
    y = x + length
    n_lo, n_hi = math.floor(x * p / q) - 2, math.ceil(y * p / q) + 2
    brute = sum(1 for n in range(n_lo, n_hi + 1) if x <= n * q // p < y)
    assert interval_count(p, q, x, y) == brute
    # balance: integer lengths give floor or ceil of L p / q
    ell = math.ceil(length)
    n = interval_count(p, q, x, x + ell)
    assert math.floor(Fraction(ell * p, q)) <= n <= math.ceil(Fraction(ell * p, q))


def test_balance_domain():
    with pytest.raises(ValueError):
        interval_count(2, 4, 0, 1)
    with pytest.raises(ValueError):
        interval_count(1, 4, 3, 1)


@pytest.mark.parametrize("q", range(3, 60))
def test_variation_identity(q):
    for p in range(1, q):
        if math.gcd(p, q) == 1:
            assert variation_identity_check(p, q)
