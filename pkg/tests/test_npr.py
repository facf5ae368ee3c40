import pytest

from biorev import BeliefState, RankedInterpretation, mod
from biorev.errors import InvariantError, SizeGuardError
from biorev.logic import parse_worldset
from biorev.npr import (
    CLStructure, CredibleSet, NprState, check_credset, check_joint_condition, cl_revise, cl_structure_of,
    credible_set, is_credible, npr_revise,
)
from biorev.orders import is_interval_order, is_total_preorder
from biorev.postulates import OperatorUnderTest, Postulate, check, violations
from biorev.revision import is_destabilising, revise_models

from corpus import P2, dissonant_state, interval_state, nonzt_state, states


def ws(*bits):
    return parse_worldset(list(bits), 2)


def m(text):
    return mod(text, P2)


ALL = frozenset(range(1, 16))


def test_npr_examples():
    s = NprState(dissonant_state())
    assert npr_revise(s, m("p")) == ws("00")
    assert npr_revise(s, m("p & q")) == ws("11")
    assert npr_revise(NprState(nonzt_state()), m("!p & q")) == m("p <-> q")


def test_is_credible_examples():
    s = NprState(dissonant_state())
    assert not is_credible(s, m("p"))
    assert is_credible(s, m("p & q"))
    assert is_credible(s, P2.full)
    assert not is_credible(s, 0)


def test_credible_iff_not_destabilising():
    for tag in ("BOB", "ZTBOB", "TBOB"):
        for st_ in states(tag, 2, 100):
            s = NprState(st_)
            for a in range(16):
                assert is_credible(s, a) == (not is_destabilising(st_, a))


def test_credible_set_dissonant():
    s = NprState(dissonant_state())
    c = credible_set(s)
    lo, up = dissonant_state().interp.lower, dissonant_state().interp.upper
    consonant = ws("11", "00")

    def expected(a):
        if not a:
            return False
        bound = min(up[v] for v in range(4) if a >> v & 1)
        return any(lo[v] <= bound for v in range(4) if (a & consonant) >> v & 1)

    assert c.members == {a for a in range(16) if expected(a)}
    assert m("p & q") in c and m("p") not in c


def test_credible_set_of_total_preorder_is_everything():
    bm = RankedInterpretation((0, 1, 1, 2), (0, 1, 1, 2))
    s = NprState(BeliefState.from_interpretation(bm, "AGM"))
    assert credible_set(s).members == ALL


def test_check_credset_dissonant():
    rep = check_credset(credible_set(NprState(dissonant_state())), ws("00"))
    assert rep["C1"].holds and rep["C3"].holds and rep["C4'"].holds
    assert not rep["C4"].holds
    a, b = rep["C4"].witness
    assert a & ~b == 0 and a in credible_set(NprState(dissonant_state())).members


def test_check_credset_c4_fails_on_p_and_q_versus_p():
    c = credible_set(NprState(dissonant_state()))
    assert m("p & q") in c and m("p") not in c and m("p & q") & ~m("p") == 0


def test_check_credset_trivial_sets():
    assert check_credset(CredibleSet(4, ALL), ws("00")).ok
    rep = check_credset(CredibleSet(4, frozenset({15})), ws("00"))
    assert not rep["C1"].holds


def test_cl_structure_refuses_plain_bob():
    # the dissonant state is not z-transitive, so factoring is refused
    with pytest.raises(InvariantError):
        cl_structure_of(NprState(dissonant_state()))


def test_cl_structure_roundtrip_ztbob_and_tbob():
    for tag in ("ZTBOB", "TBOB"):
        for st_ in states(tag, 2, 200):
            s = NprState(st_)
            cl = cl_structure_of(s)
            assert is_interval_order(cl.star.relation)
            if tag == "TBOB":
                assert is_total_preorder(cl.star.relation)
            for a in range(16):
                assert cl_revise(cl, a) == npr_revise(s, a)
            rep = check_credset(cl.cred, cl.k_models)
            assert rep["C1"].holds and rep["C3"].holds and rep["C4'"].holds
            assert check_joint_condition(cl).holds


def test_cl_revise_examples():
    st_ = BeliefState(m("!q"), RankedInterpretation((0, 0, 1, 2), (0, 1, 1, 1)), "ZTBOB")
    s = NprState(st_)
    cl = cl_structure_of(s)
    assert cl_revise(cl, P2.full) == st_.k_models
    for a in range(16):
        if a not in cl.cred:
            assert cl_revise(cl, a) == st_.k_models


def test_iob_base_keeps_relation():
    cl = cl_structure_of(NprState(interval_state()))
    assert cl.star.relation == interval_state().relation


def test_joint_condition_violation_detected():
    star = BeliefState.from_interpretation(RankedInterpretation((0, 1, 1, 2), (0, 1, 1, 2)), "AGM")
    # full set credible, but {-p-q} (full & b) is not while revise(full) meets b
    cred = CredibleSet(4, frozenset({15, 14, 13, 12, 11, 10, 9, 8, 7, 6, 5, 4, 3, 2}))
    cl = CLStructure(star, cred)
    res = check_joint_condition(cl)
    assert not res.holds
    a, b = res.witness
    assert a in cred and (a & b) not in cred and revise_models(star, a) & b
    with pytest.raises(InvariantError):
        cl.validate()


def test_joint_condition_vacuous_for_full_credibility():
    star = BeliefState.from_interpretation(RankedInterpretation((0, 1, 1, 2), (0, 1, 1, 2)), "AGM")
    assert check_joint_condition(CLStructure(star, CredibleSet(4, ALL))).holds


def test_npr_model_level_laws():
    for tag in ("BOB", "ZTBOB", "TBOB"):
        for st_ in states(tag, 2, 100):
            s = NprState(st_)
            for a in range(16):
                out = npr_revise(s, a)
                assert out
                assert out & ~a == 0 or out == s.k_models
                if is_credible(s, a):
                    assert out == revise_models(st_, a)


def test_p12plus_counterexample():
    s = NprState(nonzt_state())
    op = OperatorUnderTest.of_npr(s)
    a, b = m("p"), m("!p & q")
    assert npr_revise(s, a | b) == ws("11")
    assert npr_revise(s, a) == ws("11", "10")
    assert (a, b) in violations(op, Postulate.P12_PLUS)


def test_subexpansion_fails_somewhere_on_tbob_npr():
    found = [st_ for st_ in states("TBOB", 2, 200)
             if check(OperatorUnderTest.of_npr(NprState(st_)), Postulate.P8).verdict == "fails"]
    assert found
    for st_ in states("TBOB", 2, 200):
        assert check(OperatorUnderTest.of_npr(NprState(st_)), Postulate.DM).holds


def test_credible_set_size_guard():
    from biorev import random_interpretation
    bm = random_interpretation(4, 1, "biorder", seed=0)
    with pytest.raises(SizeGuardError):
        credible_set(NprState(BeliefState(1, bm)))
