import math
from itertools import product

import pytest

from beattyq.conjectures import (
    BUHLER, RationalFunctionSpec, has_zero_sum_subset, martin_inequalities,
    rational_function_from_cover, scan_rational_function, strengthened_scan, strong_martin_scan,
    vanishes_at_root, vanishing_offsets,
)
from beattyq.covering import construct_cfc


def test_spec_validation():
    for bad in [(1, (1,), (0,)), (7, (2, 1), (0, 0)), (9, (3,), (0,)), (7, (1,), ())]:
        with pytest.raises(ValueError):
            RationalFunctionSpec(*bad)


def test_buhler_vanishing_pattern():
    for e in range(1, 15):
        numeric = abs(BUHLER.evaluate(e)) < 1e-9
        assert vanishes_at_root(BUHLER, e) == numeric
    assert [e for e in range(1, 15) if not vanishes_at_root(BUHLER, e)] == [3, 6, 9, 12]


def test_pole_raises():
    spec = RationalFunctionSpec(15, (1, 2), (0, 0))
    with pytest.raises(ZeroDivisionError):
        vanishes_at_root(spec, 0)


@pytest.mark.parametrize("q,us", [(7, (1, 2, 4)), (9, (1, 2, 4)), (10, (1, 3, 7)), (11, (2, 3))])
def test_vanishing_offsets_against_numeric_brute_force(q, us):
    brute = []
    for vs in product(range(q), repeat=len(us) - 1):
        spec = RationalFunctionSpec(q, us, (0,) + vs)
        if abs(spec.evaluate(1)) < 1e-9:
            brute.append((0,) + vs)
    assert vanishing_offsets(q, us) == brute


def test_cover_gives_vanishing_function():
    for q, delta in [(7, 1), (15, 2), (31, 3)]:
        spec = rational_function_from_cover(construct_cfc(q, delta, 0))
        assert vanishes_at_root(spec, 1)
        assert sum(spec.u) >= q


def test_small_scans_clean():
    for q in range(2, 20):
        assert scan_rational_function(q, 3)["violations"] == []
    assert strengthened_scan(15, 4)["violations"] == []


def test_zero_sum_subset():
    assert has_zero_sum_subset(7, [1, 2, 4])
    assert not has_zero_sum_subset(7, [1, 2])


def test_martin_inequalities_sign_invariance():
    a = martin_inequalities(7, (1, 2, 4))
    b = martin_inequalities(7, (1, 2, 3))      # 3 = -4 mod 7
    assert a == pytest.approx([0, 0, 0], abs=1e-12)
    assert sorted(a) == pytest.approx(sorted(b), abs=1e-12)


def test_strong_martin_scan_shape():
    rep = strong_martin_scan(3, 2, 20)
    assert [7, [1, 2, 4]] in rep["hits"]
    assert rep["violations"] == [[7, [1, 2, 3]]]
    assert rep["violations_up_to_sign"] == []
