import random
from fractions import Fraction

import pytest

from helpers import bisection_root_count
from orbitrank.poly import UPoly
from orbitrank.sturm import count_real_roots, sturm_root_count


def test_sqrt2_in_unit_window():
    p = UPoly((-2, 0, 1))
    assert sturm_root_count(p, 0, 2) == 1
    assert sturm_root_count(p, -2, 2) == 2


def test_two_roots_in_unit_interval():
    p = UPoly((Fraction(-1, 2), 1)) * UPoly((Fraction(-3, 4), 1))
    assert sturm_root_count(p, 0, 1) == 2


def test_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        sturm_root_count(UPoly.zero(), 0, 1)


def test_endpoints_excluded():
    p = UPoly((-4, 0, 1))  # roots at -2, 2
    assert sturm_root_count(p, -2, 2) == 0
    assert sturm_root_count(p, -3, 3) == 2


def test_multiple_roots_counted_once():
    p = UPoly((-1, 1)) * UPoly((-1, 1)) * UPoly((1, 1))
    assert sturm_root_count(p, 0, 2) == 1
    assert count_real_roots(p) == 2


def test_root_at_endpoint_of_stripped_polynomial():
    # root exactly at an endpoint with multiplicity
    p = UPoly((0, 0, 1))  # x^2
    assert sturm_root_count(p, 0, 1) == 0
    assert sturm_root_count(p, -1, 1) == 1


def test_interval_additivity():
    rng = random.Random(17)
    for _ in range(40):
        deg = rng.randint(1, 6)
        cs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.choice([1, 2, -3])]
        p = UPoly(cs)
        a, b, c = Fraction(-7), Fraction(rng.randint(-3, 3)), Fraction(8)
        if p.evaluate(a) == 0 or p.evaluate(c) == 0:
            continue
        mid_root = 1 if p.evaluate(b) == 0 else 0
        assert sturm_root_count(p, a, b) + sturm_root_count(p, b, c) + mid_root == sturm_root_count(p, a, c)


def test_against_bisection_oracle_sample():
    rng = random.Random(2024)
    for _ in range(60):
        deg = rng.randint(1, 6)
        cs = [rng.randint(-15, 15) for _ in range(deg)]
        cs.append(rng.choice([i for i in range(-15, 16) if i]))
        p = UPoly(cs)
        assert sturm_root_count(p, -10, 10) == bisection_root_count(cs, -10, 10)


def test_count_all_real_roots():
    p = UPoly((0, -1, 0, 1))  # x(x-1)(x+1)
    assert count_real_roots(p) == 3
    assert count_real_roots(UPoly((1, 0, 1))) == 0
