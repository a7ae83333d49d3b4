import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bool_expr import (
    And,
    Const,
    ExprSyntaxError,
    Iff,
    Implies,
    Not,
    Or,
    TruthTable,
    UnboundVariableError,
    Var,
    Xor,
    evaluate,
    parse,
    table_to_dnf,
    to_text,
    to_truth_table,
    truth_values,
)

VARS = ('a', 'b', 'c', 'd')
FLIP_FLOPS_OUTPUT = "(x1 <-> x3) -> (x2 ^ x3)"

exprs = st.recursive(
    st.one_of(st.sampled_from(VARS).map(Var), st.booleans().map(Const)),
    lambda children: st.one_of(
        children.map(Not),
        st.tuples(st.sampled_from([And, Or, Xor, Implies, Iff]), children, children)
        .map(lambda t: t[0](t[1], t[2])),
    ),
    max_leaves=24,
)


class TestParse:
    @pytest.mark.parametrize("text, expected", [
        ("x3 | u", Or(Var('x3'), Var('u'))),
        ("a -> b -> c", Implies(Var('a'), Implies(Var('b'), Var('c')))),
        (FLIP_FLOPS_OUTPUT, Implies(Iff(Var('x1'), Var('x3')), Xor(Var('x2'), Var('x3')))),
        ("!a & b", And(Not(Var('a')), Var('b'))),
        ("a | b & c", Or(Var('a'), And(Var('b'), Var('c')))),
        ("a ^ b | c", Or(Xor(Var('a'), Var('b')), Var('c'))),
        ("a <-> b <-> c", Iff(Iff(Var('a'), Var('b')), Var('c'))),
        ("true & 0", And(Const(True), Const(False))),
        ("¬a ∧ b → c", Implies(And(Not(Var('a')), Var('b')), Var('c'))),
        ("a ⊕ b", Xor(Var('a'), Var('b'))),
    ])
    def test_grammar(self, text, expected):
        assert parse(text) == expected

    @pytest.mark.parametrize("text, position", [
        ("x & ", 4),
        ("(x | y", 6),
        ("x y", 2),
        ("x $ y", 2),
        (")", 0),
        ("x2 = 2", 3),
    ])
    def test_errors_carry_position(self, text, position):
        with pytest.raises(ExprSyntaxError) as info:
            parse(text)
        assert info.value.position == position

    def test_rejects_other_number_literals(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse("a & 2")
        assert "'0' or '1'" in info.value.expected

    def test_error_can_be_anchored_to_a_line(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse("a &")
        moved = info.value.at_line(7, 5)
        assert moved.line == 7
        assert moved.position == 8
        assert str(moved).startswith("7:9:")


class TestEvaluate:
    def test_implication(self):
        assert evaluate(Implies(Const(True), Const(False)), {}) is False

    @pytest.mark.parametrize("bits, expected", [
        ((True, True, True), False),
        ((True, True, False), True),
        ((False, False, False), False),
    ])
    def test_flip_flops_output(self, bits, expected):
        assignment = dict(zip(('x1', 'x2', 'x3'), bits))
        assert evaluate(parse(FLIP_FLOPS_OUTPUT), assignment) is expected

    def test_unbound_variable(self):
        with pytest.raises(UnboundVariableError) as info:
            evaluate(Var('q'), {'p': True})
        assert info.value.name == 'q'
        assert str(info.value) == "unbound variable 'q'"

    @given(exprs, st.fixed_dictionaries({name: st.booleans() for name in VARS}))
    def test_vectorised_agrees_with_scalar(self, expr, assignment):
        values = truth_values(expr, VARS)
        k = sum((0 if assignment[name] else 1) << (len(VARS) - 1 - i) for i, name in enumerate(VARS))
        assert bool(values[k]) == evaluate(expr, assignment)


class TestTruthTables:
    def test_single_variable(self):
        assert to_truth_table(Var('x'), ['x']).values == (True, False)

    def test_xor(self):
        assert to_truth_table(Xor(Var('a'), Var('b')), ['a', 'b']).values == (False, True, True, False)

    def test_flip_flops_output_matches_H(self):
        values = truth_values(parse(FLIP_FLOPS_OUTPUT), ['x1', 'x2', 'x3'])
        assert np.where(values, 1, 2).tolist() == [2, 1, 1, 1, 1, 1, 1, 2]

    def test_missing_variable(self):
        with pytest.raises(UnboundVariableError):
            to_truth_table(And(Var('a'), Var('z')), ['a'])

    def test_wrong_length(self):
        with pytest.raises(ValueError):
            TruthTable(('a',), (True,))

    def test_dnf_simplifications(self):
        assert table_to_dnf(TruthTable(('x',), (True, False))) == Var('x')
        assert table_to_dnf(TruthTable(('x',), (False, True))) == Not(Var('x'))
        assert table_to_dnf(TruthTable(('a', 'b'), (False,) * 4)) == Const(False)
        assert table_to_dnf(TruthTable(('a', 'b'), (True,) * 4)) == Const(True)

    def test_dnf_of_xor(self):
        a, b = Var('a'), Var('b')
        assert table_to_dnf(to_truth_table(Xor(a, b), ['a', 'b'])) == \
            Or(And(a, Not(b)), And(Not(a), b))

    @pytest.mark.parametrize("k", [0, 1, 2])
    def test_dnf_round_trip_on_every_table(self, k):
        names = VARS[:k]
        for values in itertools.product((True, False), repeat=2 ** k):
            table = TruthTable(names, values)
            assert to_truth_table(table_to_dnf(table), names) == table

    @given(st.lists(st.booleans(), min_size=8, max_size=8))
    def test_dnf_round_trip_three_variables(self, values):
        table = TruthTable(VARS[:3], values)
        assert to_truth_table(table_to_dnf(table), VARS[:3]) == table


@settings(max_examples=200)
@given(exprs)
def test_printed_text_parses_to_an_equivalent_expression(expr):
    reparsed = parse(to_text(expr))
    assert np.array_equal(truth_values(reparsed, VARS), truth_values(expr, VARS))


def test_printer_parenthesises_by_precedence():
    a, b, c = Var('a'), Var('b'), Var('c')
    assert to_text(And(Or(a, b), c)) == '(a | b) & c'
    assert to_text(Or(And(a, b), c)) == 'a & b | c'
    assert to_text(Not(Xor(a, b))) == '!(a ^ b)'
    assert to_text(Implies(Implies(a, b), c)) == '(a -> b) -> c'
