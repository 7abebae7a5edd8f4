from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cupcap import (BoundsConfig, bound_table, convex_forcing_lower,
                    convex_forcing_upper, cup_cap_threshold,
                    cup_cap_upper_bound, free_set_size_bound)


def test_threshold_values():
    assert cup_cap_threshold(4, 4) == 7
    assert cup_cap_threshold(3, 9) == 9  # C(n-1, n-2) + 1 == n
    assert cup_cap_threshold(5, 5) == 21


def test_free_set_size_values():
    assert free_set_size_bound(3, 5, 5) == 20
    assert free_set_size_bound(4, 4, 4) == 8
    assert free_set_size_bound(3, 3, 3) == 2
    assert free_set_size_bound(4, 7, 3) == Fraction(17, 2)
    assert free_set_size_bound(5, 3, 3) == 3


@given(st.integers(3, 9), st.integers(3, 9))
def test_free_set_reduces_to_classic_for_l3(m, n):
    # for l == 3 the second term vanishes and the bound is the binomial
    assert free_set_size_bound(3, m, n) == cup_cap_threshold(m, n) - 1


def test_convex_forcing_lower_matches_classic_for_l3():
    for n in range(3, 12):
        assert convex_forcing_lower(3, n) == Fraction(2) ** (n - 2) + 1


def test_convex_forcing_lower_values():
    assert convex_forcing_lower(4, 6) == 23
    assert convex_forcing_lower(3, 6) == 17


def test_convex_forcing_upper_monotone_and_integer():
    cfg = BoundsConfig()
    prev = 0
    for n in range(3, 10):
        v = convex_forcing_upper(3, n, cfg)
        assert isinstance(v, int) and v > prev
        prev = v
    assert convex_forcing_upper(4, 6, cfg) > convex_forcing_upper(3, 6, cfg)


def test_upper_bound_formula():
    cfg = BoundsConfig(c=Fraction(7))
    assert cup_cap_upper_bound(3, 4, 4, cfg) == 7 * (3 + 3) * 6


def test_config_validation():
    with pytest.raises(ValueError):
        BoundsConfig(c=Fraction(0))
    with pytest.raises(ValueError):
        BoundsConfig(epsilon=Fraction(2))


def test_bound_table_shape_and_exactness():
    t = bound_table(4, 6)
    assert len(t["cup_cap"]) == 16
    assert len(t["convex"]) == 4
    row = next(r for r in t["cup_cap"] if r["m"] == 4 and r["n"] == 4)
    assert row["general_position_threshold"] == 7
    assert row["free_set_lower"] == 8
    conv = next(r for r in t["convex"] if r["n"] == 6)
    assert conv["lower"] == 23


def test_bound_table_validates_args():
    with pytest.raises(ValueError):
        bound_table(2, 5)
