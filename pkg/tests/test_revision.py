import itertools

import pytest
from hypothesis import given, settings, strategies as st

from biorev import BeliefState, RankedInterpretation, mod, random_interpretation
from biorev.errors import InvariantError
from biorev.logic import parse_worldset, submasks
from biorev.orders import dissonant_set, relation_of, satisfies_positive_vacuity_condition
from biorev.postulates import OperatorUnderTest, Postulate, violations
from biorev.revision import (
    classify_operator_class, is_destabilising, is_irreconcilable, is_irreconcilable_bruteforce, is_precarious,
    precarious_vee, precarious_wedge, revise, revise_by_opt, revise_models, sentence_ranks,
)

from corpus import P2, dissonant_state, interval_state, nonzt_state, states


def ws(*bits):
    return parse_worldset(list(bits), 2)


def m(text):
    return mod(text, P2)


def test_sentence_ranks():
    assert sentence_ranks(dissonant_state(), m("p")) == (2, 1)
    assert sentence_ranks(dissonant_state(), 0) == (None, None)
    assert sentence_ranks(interval_state(), m("!q")) == (0, 3)


def test_revise_examples():
    assert revise(interval_state(), m("!q")).models == ws("10", "00")
    out = revise(dissonant_state(), m("p"))
    assert out.models == 0 and not out.consistent
    assert revise_models(dissonant_state(), m("p & q")) == ws("11")
    assert revise_models(nonzt_state(), m("p | q")) == ws("11")
    assert revise_models(nonzt_state(), m("p")) == ws("11", "10")


def test_destabilising():
    assert is_destabilising(dissonant_state(), m("p"))
    assert not is_destabilising(dissonant_state(), m("p & q"))
    assert not is_destabilising(dissonant_state(), P2.full)


def test_irreconcilable():
    assert is_irreconcilable(dissonant_state(), m("!p & q"))
    assert not is_irreconcilable(dissonant_state(), m("p"))
    assert is_irreconcilable(dissonant_state(), 0)


def test_precarious_readings_on_nonzt():
    s = nonzt_state()
    assert is_precarious(s, m("p | q"))
    # the witness from the reference example
    a, b = m("p | q"), m("p")
    assert revise_models(s, a) & ~b == 0 and revise_models(s, a & b) & ~revise_models(s, a) != 0
    assert precarious_wedge(s, m("p")) is False
    assert precarious_vee(s, m("p")) is True
    assert precarious_vee(s, m("p | q"))


def test_precarious_vee_witness_on_p():
    s = nonzt_state()
    a, b = m("p"), m("p | !q")
    base = revise_models(s, a)
    assert base & ~b == 0
    assert revise_models(s, a | b) & ~base != 0


def test_total_preorder_states_never_precarious():
    for st_ in states("TBOB", 2, 60):
        if st_.interp.is_interval:
            assert not any(is_precarious(st_, a) for a in range(16))
    flat = BeliefState.from_interpretation(RankedInterpretation((0, 1, 1, 2), (0, 1, 1, 2)))
    assert not any(is_precarious(flat, a) for a in range(16))


def test_classify_operator_class_examples():
    assert classify_operator_class(interval_state()) == {"IOB", "BOB", "ZTBOB"}
    assert classify_operator_class(dissonant_state()) == {"BOB"}
    zero = BeliefState.from_interpretation(RankedInterpretation((0,) * 4, (0,) * 4))
    assert classify_operator_class(zero) == {"IOB", "BOB", "ZTBOB", "TBOB"}


def test_state_validation():
    bm = dissonant_state().interp
    with pytest.raises(InvariantError):
        BeliefState(0, bm)
    with pytest.raises(InvariantError):
        BeliefState(ws("11"), bm)  # not anchored
    with pytest.raises(InvariantError):
        BeliefState(ws("00"), bm, "ZTBOB")
    with pytest.raises(InvariantError):
        BeliefState(ws("00"), bm, "IOB")
    with pytest.raises(InvariantError):
        BeliefState(ws("00"), bm, "XYZ")
    with pytest.raises(InvariantError):
        BeliefState(ws("00"), RankedInterpretation((1, 1, 1, 1), (1, 1, 1, 1)))


def test_vacuity_condition_hook():
    # in the interval state, pq- (lower 2) still reaches -p-q (upper 3), so -p-q is not strictly better
    with pytest.raises(InvariantError):
        BeliefState(interval_state().k_models, interval_state().interp, "IOB", check_vacuity=True)
    flat = RankedInterpretation((0, 1, 1, 1), (0, 1, 1, 1))
    BeliefState(ws("00"), flat, "IOB", check_vacuity=True)


def test_positive_vacuity_hook():
    with pytest.raises(InvariantError):
        BeliefState(dissonant_state().k_models, dissonant_state().interp, check_positive_vacuity=True)
    BeliefState(nonzt_state().k_models, nonzt_state().interp, check_positive_vacuity=True)


def test_positive_vacuity_failure_witness():
    op = OperatorUnderTest.of_state(dissonant_state())
    assert (m("p <-> q"),) in violations(op, Postulate.POSITIVE_VACUITY)


def test_positive_vacuity_condition_sufficient_empirically():
    # enumerate small rank functions: whenever some world has L = U = 0, Positive Vacuity holds
    seen = 0
    for lo in itertools.product(range(3), repeat=4):
        for up in itertools.product(range(3), repeat=4):
            bm = RankedInterpretation(lo, up)
            if not satisfies_positive_vacuity_condition(bm):
                continue
            s = BeliefState.from_interpretation(bm)
            k = s.k_models
            for a in range(16):
                if k & ~a == 0:
                    assert revise_models(s, a) & ~k == 0, (bm, a)
            seen += 1
    assert seen > 100


ALL_STATES = [s for tag in ("IOB", "BOB", "ZTBOB", "TBOB") for s in states(tag, 2, 200)]


def test_revise_matches_opt_oracle():
    for s in ALL_STATES:
        for a in range(16):
            assert revise_models(s, a) == revise_by_opt(s, a)


def test_revise_matches_opt_oracle_three_atoms():
    for tag in ("BOB", "TBOB"):
        for s in states(tag, 3, 20):
            for a in range(256):
                assert revise_models(s, a) == revise_by_opt(s, a)


def test_model_level_laws():
    for s in ALL_STATES:
        k = s.k_models
        assert revise_models(s, s.full) == k
        for a in range(16):
            out = revise_models(s, a)
            assert out & ~a == 0
            if k & ~a == 0:
                assert k & ~out == 0  # endogenous inclusion
                assert out != 0  # relative consistency
            if s.clazz == "IOB" and a:
                assert out


def test_ccm_on_ztbob_and_subexpansion_on_tbob():
    for s in states("ZTBOB", 2, 200):
        for a, b in itertools.product(range(16), repeat=2):
            ra = revise_models(s, a)
            if ra and ra & ~b == 0:
                assert revise_models(s, a & b) & ~ra == 0
    for s in states("TBOB", 2, 200):
        for a, b in itertools.product(range(16), repeat=2):
            rb = revise_models(s, b)
            if rb & a:
                assert revise_models(s, a & b) & ~(rb & a) == 0


def test_irreconcilable_fast_path_matches_bruteforce():
    for s in ALL_STATES:
        for a in range(16):
            assert is_irreconcilable(s, a) == is_irreconcilable_bruteforce(s, a)


def test_destabilising_implies_irreconcilable_or_precarious():
    for s in ALL_STATES:
        for a in range(16):
            if is_destabilising(s, a):
                assert is_irreconcilable(s, a) or is_precarious(s, a)


@settings(max_examples=100)
@given(st.integers(1, 15), st.sampled_from(["biorder", "z-transitive", "transitive"]), st.integers(0, 10**6))
def test_irreconcilable_means_inside_dissonant(anchor, clazz, seed):
    bm = random_interpretation(2, anchor, clazz, seed=seed)
    s = BeliefState(anchor, bm)
    diss = dissonant_set(relation_of(bm))
    for a in submasks(15):
        assert is_irreconcilable_bruteforce(s, a) == (a & ~diss == 0)
