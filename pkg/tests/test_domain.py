import pytest
from hypothesis import given, strategies as st

from evoc.domain import (N_ACTIONS, Action, BodyPart, PartState, all_actions, decode, encode)


def test_part_indices():
    assert [int(p) for p in BodyPart] == [0, 1, 2, 3, 4, 5]
    assert len(PartState) == 3


def test_encode_examples():
    assert encode(Action.immobile()) == 0
    assert encode(Action.of(1, 0, 0, 0, 0, 0)) == 1
    assert encode(Action.of(0, 0, 0, 0, 0, 2)) == 486


def test_decode_examples():
    assert decode(0) == Action.immobile()
    assert decode(1) == Action.of(1, 0, 0, 0, 0, 0)
    assert decode(728) == Action.of(2, 2, 2, 2, 2, 2)


@pytest.mark.parametrize("bad", [-1, 729, 10_000])
def test_decode_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        decode(bad)


def test_exhaustive_round_trip():
    assert N_ACTIONS == 729
    for i in range(N_ACTIONS):
        assert encode(decode(i)) == i
    assert len({a for a in all_actions()}) == 729


@given(st.lists(st.sampled_from([0, 1, 2]), min_size=6, max_size=6))
def test_decode_encode(states):
    a = Action.of(*states)
    assert decode(a.encode()) == a


def test_action_rejects_wrong_length():
    with pytest.raises(ValueError):
        Action.of(0, 0, 0)


def test_mirrored():
    a = Action.of(1, 2, 0, 1, 2, 0)
    assert a.mirrored() == Action.of(2, 1, 0, 2, 1, 0)
    assert a.mirrored().mirrored() == a
