import cmath
import math

import pytest

from beattyq.cyclotomic import CycloElt
from beattyq.identities import (
    binary_range_sum, coset, coset_cover_multiplicity, cosine_ratio_sum, csc_cleared_sum,
    csc_identity_check, csc_numeric, csc_terms, distinct_cosets, identity_report,
    minus_one_in_orbit, s_sum,
    sine_ratio_sum,
)
from oracles import ord2


def test_cosets():
    assert coset(7, 3).elements == (3, 6, 5)
    assert distinct_cosets(9) == [(0,), (1, 2, 4, 5, 7, 8), (3, 6)]
    for q in range(3, 80, 2):
        flat = sorted(x for c in distinct_cosets(q) for x in c)
        assert flat == list(range(q))


def test_csc_terms_frozen():
    assert csc_terms(7) == [(1, 1), (-1, 2), (-1, 3)]
    assert csc_terms(21) == [(1, 1), (-1, 2), (-1, 4), (-1, 5), (-1, 8), (1, 10)]


@pytest.mark.parametrize("q", range(3, 120, 2))
def test_csc_identity_exact_and_numeric(q):
    exact, resid = csc_identity_check(q)
    assert exact
    scale = sum(1 / math.sin(math.pi * a / q) for _, a in csc_terms(q))
    assert abs(resid) < 1e-9 * scale
    # the signed terms restate the same sum
    assert abs(sum(s / math.sin(math.pi * a / q) for s, a in csc_terms(q))) < 1e-9 * scale


def test_cleared_sum_expands_to_binary_range():
    for q in (7, 9, 21, 23):
        assert csc_cleared_sum(q) == binary_range_sum(q)


def test_s_sum_frozen():
    assert s_sum(7, 2) == CycloElt.one(7).scale(-1)
    assert coset_cover_multiplicity(7, 2) == 1
    assert coset_cover_multiplicity(89, 8) is None


def s_numeric(q, t):
    m = ord2(q)
    w = cmath.exp(2j * math.pi / q)
    return sum(w ** ((2 * u - 1) * pow(2, j, q) % q) for u in range(1, t + 1) for j in range(m))


@pytest.mark.parametrize("q,t", [(7, 1), (7, 2), (9, 3), (21, 4), (89, 8), (73, 5)])
def test_ratio_sums_are_twice_s_parts(q, t):
    z = s_numeric(q, t)
    assert sine_ratio_sum(q, t) == pytest.approx(2 * z.real, abs=1e-9)
    assert cosine_ratio_sum(q, t) == pytest.approx(-2 * z.imag, abs=1e-9)


def test_ratio_sum_frozen_values():
    assert sine_ratio_sum(7, 2) == pytest.approx(-2, abs=1e-12)
    assert sine_ratio_sum(89, 8) == pytest.approx(-2, abs=1e-9)


def test_report_records():
    recs = identity_report(7, 2)
    assert [r["kind"] for r in recs] == ["csc", "S", "sine_ratio", "cosine_ratio"]
    assert recs[0]["exact"] and recs[0]["lhs_terms"] == [[1, 1], [-1, 2], [-1, 3]]
    assert recs[1]["exact"] and recs[1]["cover_multiplicity"] == 1
    assert recs[2]["rhs"] == pytest.approx(-2)
    assert "\\sin(1\\pi/7)" in recs[0]["latex"]


def test_even_q_rejected():
    with pytest.raises(ValueError):
        identity_report(8)
    with pytest.raises(ValueError):
        csc_numeric(10)


@pytest.mark.parametrize("q", range(3, 302, 2))
def test_cosine_sums_vanish_exactly_when_minus_one_in_orbit(q):
    m = ord2(q)
    vanish = all(abs(cosine_ratio_sum(q, t)) < 1e-9 for t in range(1, m))
    assert vanish == minus_one_in_orbit(q)


def test_even_order_is_not_enough():
    assert ord2(15) == 4 and not minus_one_in_orbit(15)
    assert abs(cosine_ratio_sum(15, 1)) > 0.1
    assert minus_one_in_orbit(13) and ord2(13) == 12
