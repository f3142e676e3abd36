import pytest
from hypothesis import given, strategies as st

from quiverrep.cardinal import (ALEPH0, ALEPH1, Cardinal, cardinal_size,
                                finite, sup_cardinals)


def test_ordering_chain():
    assert finite(0) < finite(1) < finite(100) < ALEPH0 < ALEPH1


def test_successor():
    assert finite(3).successor() == finite(4)
    assert ALEPH0.successor() == ALEPH1


def test_size_of_empty_family_is_zero():
    assert cardinal_size([]) == finite(0)


def test_size_is_strict_upper_bound_when_sup_attained():
    # sup {1, 2} = 2 is attained, so the least strictly-bigger value is 3
    assert cardinal_size([finite(1), finite(2)]) == finite(3)
    assert cardinal_size([finite(2), finite(2)]) == finite(3)


def test_size_bumps_attained_aleph0():
    assert cardinal_size([finite(1), ALEPH0]) == ALEPH1


def test_infinite_family_of_finite_values():
    # an infinite family of finite values has supremum aleph_0, never
    # attained, so no bump happens
    assert cardinal_size([finite(1), finite(2)], infinite_family=True) == ALEPH0
    assert cardinal_size([], infinite_family=True) == ALEPH0
    # ... unless some member is itself infinite
    assert cardinal_size([ALEPH0], infinite_family=True) == ALEPH1


def test_sup():
    assert sup_cardinals([finite(2), finite(5)]) == finite(5)
    assert sup_cardinals([finite(2), ALEPH0]) == ALEPH0
    assert sup_cardinals([]) == finite(0)


def test_json_roundtrip():
    for c in (finite(0), finite(7), ALEPH0, ALEPH1):
        assert Cardinal.from_json(c.to_json()) == c


@given(st.lists(st.integers(min_value=0, max_value=50), min_size=1))
def test_size_exceeds_every_member(xs):
    fam = [finite(x) for x in xs]
    s = cardinal_size(fam)
    assert all(x < s for x in fam)
    # and it is the least such value: its predecessor is in the family
    assert s == finite(max(xs) + 1)
