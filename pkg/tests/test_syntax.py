from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from thdist.errors import FormulaSyntaxError, LanguageError, VariableBudgetError
from thdist.semantics import FiniteModel, is_true
from thdist.syntax import (
    Exists,
    Language,
    and_,
    atom,
    big_and,
    big_or,
    eq,
    exists,
    false_formula,
    first_basic_formula,
    forall,
    iff,
    implies,
    make_psi_n,
    not_,
    or_,
    parse_formula,
    print_formula,
    subformulas,
    true_formula,
    validate_formula,
)


BIN = Language.make("Bin", {"R": 2}, 3)
PQ = Language.make("PQ", {"P": 0, "Q": 0}, 0)


def test_language_invariants():
    with pytest.raises(LanguageError):
        Language.make("bad", {"R": 2}, 1)  # rank 2 needs varBound >= 2
    with pytest.raises(LanguageError):
        Language.make("bad", {"R": 1}, 0)  # sentential admits only rank 0
    with pytest.raises(LanguageError):
        Language.make("bad", {"not": 0}, 0)  # keyword as symbol name
    with pytest.raises(LanguageError):
        Language.make("bad", {"v7": 0}, 0)  # variable-shaped symbol name
    lang = Language.make("ok", {"P": 0, "R": 2}, 2)
    assert lang.rank_bound == 3 and lang.constants == ("P",)


def test_parse_basic_atoms():
    f = parse_formula("(exists v0 (R v0 v1))", BIN)
    assert isinstance(f, Exists) and f.var == 0
    assert f.sub is atom("R", (0, 1))


def test_forall_desugars_per_abbreviation_table():
    f = parse_formula("(forall v0 (not (= v0 v1)))", BIN)
    assert f is not_(exists(0, not_(not_(eq(0, 1)))))


def test_arity_mismatch_and_unknown_symbol():
    with pytest.raises(FormulaSyntaxError):
        parse_formula("(R v0)", BIN)
    with pytest.raises(FormulaSyntaxError):
        parse_formula("(S v0 v1)", BIN)
    with pytest.raises(FormulaSyntaxError):
        parse_formula("(R v0 v5)", BIN)  # variable bound
    with pytest.raises(FormulaSyntaxError) as err:
        parse_formula("(and P", PQ)
    assert err.value.line == 1


def test_bare_rank0_atoms():
    assert parse_formula("P", PQ) is atom("P")
    with pytest.raises(FormulaSyntaxError):
        parse_formula("(P)", PQ)


def test_sugar_definitions_match_the_abbreviations():
    a, b = atom("P"), atom("Q")
    assert or_(a, b) is not_(and_(not_(a), not_(b)))
    assert implies(a, b) is not_(and_(a, not_(b)))
    assert iff(a, b) is and_(implies(a, b), implies(b, a))
    assert parse_formula("(implies P Q)", PQ) is implies(a, b)
    assert parse_formula("(iff P Q)", PQ) is iff(a, b)


def test_empty_conjunction_and_disjunction_convention():
    # the written convention: empty disjunction = phi and not phi,
    # empty conjunction = phi or not phi, phi the first basic formula
    phi = first_basic_formula(PQ)
    assert phi is atom("P")  # alphabetically first constant
    assert false_formula(PQ) is and_(phi, not_(phi))
    assert true_formula(PQ) is or_(phi, not_(phi))
    assert parse_formula("true", PQ) is true_formula(PQ)
    assert parse_formula("false", PQ) is false_formula(PQ)
    assert parse_formula("(and)", PQ) is true_formula(PQ)
    assert parse_formula("(or)", PQ) is false_formula(PQ)
    assert first_basic_formula(BIN) is eq(0, 0)
    with pytest.raises(LanguageError):
        first_basic_formula(Language.make("empty", {}, 0))


def test_grouped_connectives_left_associate():
    f = parse_formula("(and P Q P)", PQ)
    assert f is and_(and_(atom("P"), atom("Q")), atom("P"))


def test_print_examples():
    assert print_formula(eq(0, 1)) == "(= v0 v1)"
    assert print_formula(atom("R", (0, 1))) == "(R v0 v1)"
    assert print_formula(atom("P")) == "P"


def _formulas(lang: Language):
    if lang.is_sentential:
        base = st.sampled_from([atom(c) for c in lang.constants])
    else:
        variables = st.integers(0, lang.var_bound - 1)
        eqs = st.builds(eq, variables, variables)
        atoms = st.builds(
            lambda *args: atom("R", args),
            *([variables] * lang.rank("R")),
        )
        base = st.one_of(eqs, atoms)

    def extend(children):
        grown = [
            st.builds(and_, children, children),
            st.builds(not_, children),
            st.builds(or_, children, children),
            st.builds(implies, children, children),
        ]
        if not lang.is_sentential:
            variables = st.integers(0, lang.var_bound - 1)
            grown.append(st.builds(exists, variables, children))
            grown.append(st.builds(forall, variables, children))
        return st.one_of(*grown)

    return st.recursive(base, extend, max_leaves=12)


@given(_formulas(BIN))
def test_parse_print_round_trip_first_order(f):
    validate_formula(f, BIN)
    assert parse_formula(print_formula(f), BIN) is f


@given(_formulas(PQ))
def test_parse_print_round_trip_sentential(f):
    assert parse_formula(print_formula(f), PQ) is f


def test_subformulas_children_before_parents():
    f = and_(atom("P"), not_(atom("Q")))
    subs = subformulas(f)
    assert subs.index(atom("P")) < subs.index(f)
    assert subs.index(atom("Q")) < subs.index(not_(atom("Q")))


PURE6 = Language.make("Pure6", {}, 6)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_psi_true_exactly_at_size(n, k):
    psi = make_psi_n(n, PURE6)
    model = FiniteModel(PURE6, k, {})
    assert is_true(model, psi) == (k == n)


def test_psi_preconditions():
    with pytest.raises(VariableBudgetError):
        make_psi_n(0, PURE6)
    with pytest.raises(VariableBudgetError):
        make_psi_n(6, PURE6)  # needs v6


def test_big_and_or_empty_need_language_with_formulas():
    assert big_and(BIN, []) is true_formula(BIN)
    assert big_or(BIN, []) is false_formula(BIN)
