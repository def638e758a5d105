import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import smq
from smq.gale_shapley import _deferred_acceptance
from conftest import P_A, P_B, instances


def final_engagements(trace):
    fiance = {}
    for event in trace:
        if event.outcome in ("engaged", "displaced"):
            fiance[event.proposee] = event.proposer
    return {(m, w) for w, m in fiance.items()}


def test_men_proposing_on_two_couple_market():
    assert smq.gs(smq.derive_classical(P_A), "men") == smq.Marriage((1, 0))


def test_women_proposing_coincides_here():
    assert smq.gs(smq.derive_classical(P_A), "women") == smq.Marriage((1, 0))


def test_single_couple():
    profile = smq.StrictProfile(((0,),), ((0,),))
    assert smq.gs(profile, "men") == smq.Marriage((0,))
    trace = smq.step_trace(profile, "men")
    assert trace == [smq.Proposal(0, 0, "engaged")]


def test_bad_side_rejected():
    profile = smq.derive_classical(P_A)
    with pytest.raises(ValueError):
        smq.gs(profile, "either")
    with pytest.raises(ValueError):
        smq.step_trace(profile, "either")


def test_trace_replays_to_gs_result():
    profile = smq.derive_classical(P_A)
    trace = smq.step_trace(profile, "men")
    assert final_engagements(trace) == {(0, 1), (1, 0)}
    assert len(trace) <= 4


def test_trace_on_second_fixture_matches_enumerated_stable_set():
    trace = smq.step_trace(smq.derive_classical(P_B), "men")
    assert final_engagements(trace) == {(0, 0), (1, 1)}
    # the classical stable set of this market is a singleton, so the
    # male-optimal marriage is forced
    stable = smq.enumerate_stable(P_B, "classical").marriages()
    assert stable == [smq.Marriage((0, 1))]


@given(instances())
def test_gs_output_has_no_classical_blocking_pair(inst):
    profile = smq.derive_classical(inst)
    for side in ("men", "women"):
        marriage = smq.gs(profile, side)
        assert smq.blocking_pairs(inst, marriage, "classical").stable


@given(instances())
def test_proposal_count_is_at_most_n_squared(inst):
    profile = smq.derive_classical(inst)
    for side in ("men", "women"):
        assert len(smq.step_trace(profile, side)) <= inst.n * inst.n


@given(instances(max_n=4))
@settings(max_examples=60)
def test_proposer_optimality_against_enumeration(inst):
    profile = smq.derive_classical(inst)
    stable = smq.enumerate_stable(inst, "classical").marriages()
    male_opt = smq.gs(profile, "men")
    female_opt = smq.gs(profile, "women")
    assert male_opt in stable and female_opt in stable
    inv_opt = female_opt.inverse()
    for other in stable:
        inv_other = other.inverse()
        for m in range(inst.n):
            assert (
                inst.men_scores[m][male_opt.partner_of_man[m]]
                >= inst.men_scores[m][other.partner_of_man[m]]
            )
        for w in range(inst.n):
            assert inst.women_scores[w][inv_opt[w]] >= inst.women_scores[w][inv_other[w]]


@given(instances(), st.integers(0, 2**32 - 1))
def test_result_does_not_depend_on_free_proposer_order(inst, seed):
    profile = smq.derive_classical(inst)
    ascending = _deferred_acceptance(profile.men_prefs, profile.women_prefs)
    shuffled = _deferred_acceptance(
        profile.men_prefs, profile.women_prefs, rng=random.Random(seed)
    )
    assert ascending == shuffled
