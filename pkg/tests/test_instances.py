import json

import pytest
from hypothesis import given

import smq
from conftest import P_A, P_C, instances


def test_validate_accepts_the_two_couple_market():
    inst = smq.validate(2, [[9, 1], [3, 2]], [[1, 2], [3, 1]])
    assert inst == P_A


def test_validate_smallest_instance():
    inst = smq.validate(1, [[5]], [[7]])
    assert inst.n == 1


def test_duplicate_score_in_one_row_rejected():
    with pytest.raises(smq.DuplicateScoreError) as err:
        smq.validate(2, [[4, 4], [1, 2]], [[1, 2], [3, 1]])
    assert err.value.side == "men"
    assert err.value.person == 0
    assert (err.value.first, err.value.second) == (0, 1)
    assert "m1" in str(err.value)


def test_same_score_across_people_is_fine():
    # two men may both score a woman 2; distinctness is per row only
    inst = smq.validate(2, [[2, 1], [2, 1]], [[1, 2], [3, 1]])
    assert inst.men_scores == ((2, 1), (2, 1))


def test_zero_size_rejected():
    with pytest.raises(smq.ZeroSizeError):
        smq.validate(0, [], [])


def test_negative_score_rejected():
    with pytest.raises(smq.NegativeScoreError):
        smq.validate(2, [[9, -1], [3, 2]], [[1, 2], [3, 1]])


def test_non_square_rejected():
    with pytest.raises(smq.NonSquareError):
        smq.validate(2, [[9, 1]], [[1, 2], [3, 1]])
    with pytest.raises(smq.NonSquareError):
        smq.validate(2, [[9, 1, 5], [3, 2, 4]], [[1, 2], [3, 1]])


def test_non_integer_score_rejected():
    with pytest.raises(smq.InvalidInstanceError):
        smq.validate(1, [[1.5]], [[2]])
    with pytest.raises(smq.InvalidInstanceError):
        smq.validate(1, [[True]], [[2]])


def test_derive_classical_two_couple_market():
    profile = smq.derive_classical(P_A)
    assert profile.men_prefs == ((0, 1), (0, 1))
    assert profile.women_prefs == ((1, 0), (0, 1))


def test_derive_classical_single():
    profile = smq.derive_classical(smq.validate(1, [[5]], [[7]]))
    assert profile.men_prefs == ((0,),)
    assert profile.women_prefs == ((0,),)


def test_derive_classical_link_fixture():
    # row-by-row sort of P_C's scores gives the same orders as P_A's
    assert smq.derive_classical(P_C) == smq.derive_classical(P_A)


@given(instances())
def test_classical_lists_start_with_max_score(inst):
    profile = smq.derive_classical(inst)
    for scores, prefs in (
        (inst.men_scores, profile.men_prefs),
        (inst.women_scores, profile.women_prefs),
    ):
        for row, order in zip(scores, prefs):
            assert sorted(order) == list(range(inst.n))
            assert row[order[0]] == max(row)
            assert all(row[a] > row[b] for a, b in zip(order, order[1:]))


def test_parse_instance_example():
    text = '{"n":2,"men":[[9,1],[3,2]],"women":[[1,2],[3,1]]}'
    assert smq.parse_instance(text) == P_A


@given(instances())
def test_parse_serialize_round_trip(inst):
    assert smq.parse_instance(smq.serialize_instance(inst)) == inst


def test_serialize_is_canonical():
    noisy = ' {"women": [[1,2], [3,1]], "n": 2,\n "men": [[9, 1], [3, 2]]} '
    assert smq.serialize_instance(smq.parse_instance(noisy)) == (
        '{"n":2,"men":[[9,1],[3,2]],"women":[[1,2],[3,1]]}'
    )


def test_parse_rejects_bad_json():
    with pytest.raises(json.JSONDecodeError):
        smq.parse_instance("{nope")


def test_parse_rejects_non_square():
    with pytest.raises(smq.NonSquareError):
        smq.parse_instance('{"n":2,"men":[[9,1]],"women":[[1,2],[3,1]]}')


def test_parse_rejects_missing_key():
    with pytest.raises(smq.InvalidInstanceError):
        smq.parse_instance('{"n":1,"men":[[1]]}')
    with pytest.raises(smq.InvalidInstanceError):
        smq.parse_instance("[1,2]")


def test_marriage_helpers():
    marriage = smq.make_marriage([1, 0, 2])
    assert marriage.inverse() == (1, 0, 2)
    assert marriage.pairs() == [(0, 1), (1, 0), (2, 2)]
    assert smq.serialize_marriage(marriage) == '{"match":[1,0,2]}'
    with pytest.raises(ValueError):
        smq.make_marriage([0, 0])
    with pytest.raises(ValueError):
        smq.make_marriage([1, 2])


def test_random_instance_is_valid_and_deterministic():
    a = smq.random_instance(4, seed=11)
    b = smq.random_instance(4, seed=11)
    assert a == b
    assert a != smq.random_instance(4, seed=12)
    # reconstructing through validate must not raise
    smq.validate(a.n, a.men_scores, a.women_scores)
    flat = [v for row in a.men_scores + a.women_scores for v in row]
    assert all(1 <= v <= 100 for v in flat)


def test_random_instance_needs_enough_scores():
    with pytest.raises(ValueError):
        smq.random_instance(5, seed=0, max_score=4)
    tight = smq.random_instance(5, seed=0, max_score=5)
    assert all(sorted(row) == [1, 2, 3, 4, 5] for row in tight.men_scores)
