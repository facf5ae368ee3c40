import pytest
from hypothesis import given, strategies as st

from biorev.errors import FormulaSyntaxError, UnknownAtomError
from biorev.logic import (
    And, Atom, AtomTable, Iff, Implies, Not, Or, canonical_formula, format_formula, format_valuation,
    format_worldset, holds_in_theory, mod, models, parse_formula, parse_valuation, parse_worldset,
    pretty_valuation, show_worldset, submasks, TOP,
)

P2 = AtomTable(("p", "q"))
P3 = AtomTable(("p", "q", "r"))
p, q = Atom("p"), Atom("q")


def ws(*bits, n=2):
    return parse_worldset(list(bits), n)


def test_parse_implication():
    assert parse_formula("p -> q", P2) == Implies(p, q)


def test_parse_negated_conjunction():
    assert parse_formula("!p & !q", P2) == And(Not(p), Not(q))


def test_syntax_error_offset():
    with pytest.raises(FormulaSyntaxError) as e:
        parse_formula("p & (q |", P2)
    assert e.value.position == 8


@pytest.mark.parametrize("text", ["", "p &", "(p", "p q", "p <- q", "p $ q"])
def test_syntax_errors(text):
    with pytest.raises(FormulaSyntaxError):
        parse_formula(text, P2)


def test_precedence():
    assert parse_formula("!p & q | p", P2) == Or(And(Not(p), q), p)
    assert parse_formula("p -> q -> p", P2) == Implies(p, Implies(q, p))
    assert parse_formula("p <-> q -> p", P2) == Iff(p, Implies(q, p))
    assert parse_formula("p | q <-> q", P2) == Iff(Or(p, q), q)


def test_unknown_atom_closed_table():
    with pytest.raises(UnknownAtomError):
        parse_formula("p & r", P2)


def test_open_table_registers():
    open_table = AtomTable(("p",), closed=False)
    f = parse_formula("p & r", open_table)
    assert open_table.register(f).atoms == ("p", "r")


def test_atom_table_validation():
    with pytest.raises(ValueError):
        AtomTable(())
    with pytest.raises(ValueError):
        AtomTable(("p", "p"))
    with pytest.raises(ValueError):
        AtomTable(("P",))
    with pytest.raises(ValueError):
        AtomTable(tuple(f"a{i}" for i in range(17)))


def test_models_examples():
    assert mod("T", P2) == 0b1111
    assert mod("p -> q", P2) == ws("11", "01", "00")
    assert mod("p & !p", P2) == 0


def test_holds_in_theory_examples():
    assert holds_in_theory(0, mod("p", P2))
    assert holds_in_theory(mod("!p & !q", P2), mod("p <-> q", P2))
    assert not holds_in_theory(mod("p -> q", P2), mod("q", P2))


def test_canonical_formula_examples():
    assert format_formula(canonical_formula(0, P2)) == "F"
    assert format_formula(canonical_formula(ws("11"), P2)) == "p & q"
    assert format_formula(canonical_formula(ws("11", "00"), P2)) == "(p & q) | (!p & !q)"
    assert canonical_formula(P2.full, P2) == TOP


@pytest.mark.parametrize("table", [P2, P3])
def test_canonical_formula_roundtrip_exhaustive(table):
    for w in range(1 << table.n_worlds):
        f = canonical_formula(w, table)
        assert models(f, table) == w
        assert models(parse_formula(format_formula(f), table), table) == w


def test_valuation_formats():
    assert format_valuation(1, 2) == "10"
    assert parse_valuation("01", 2) == 2
    assert pretty_valuation(1, P2) == "p-q"
    assert format_worldset(mod("p -> q", P2), 2) == ["11", "01", "00"]
    assert show_worldset(mod("!p", P2), P2, pretty=True) == "{-pq, -p-q}"
    assert parse_worldset("0x9", 2) == ws("11", "00")


def test_submasks_counts():
    assert sorted(submasks(0b101)) == [0, 1, 4, 5]


# random formulas over p, q, r
atoms = st.sampled_from([Atom("p"), Atom("q"), Atom("r")])
formulas = st.recursive(
    atoms,
    lambda sub: st.one_of(
        sub.map(Not),
        st.tuples(sub, sub).map(lambda t: And(*t)),
        st.tuples(sub, sub).map(lambda t: Or(*t)),
        st.tuples(sub, sub).map(lambda t: Implies(*t)),
        st.tuples(sub, sub).map(lambda t: Iff(*t)),
    ),
    max_leaves=12,
)


@given(formulas)
def test_print_parse_roundtrip(f):
    g = parse_formula(format_formula(f), P3)
    assert g == f
    assert models(g, P3) == models(f, P3)


@given(st.integers(0, 255), st.integers(0, 255), st.integers(0, 255))
def test_entailment_is_preorder(a, b, c):
    assert holds_in_theory(a, a)
    if holds_in_theory(a, b) and holds_in_theory(b, c):
        assert holds_in_theory(a, c)
