import numpy as np
import pytest

from bcn_model import (
    BCN,
    CATALOG,
    DecomposedBCN,
    ModelError,
    assemble,
    bit_tables,
    blocks,
    flip_flops,
    format_model_text,
    matrix_to_exprs,
    parse_model_text,
    odd_block_network,
    shift_register,
    shift_register_matrix,
    simulate,
    step,
    to_equations,
    transform,
)
from bool_expr import ExprSyntaxError, Var, parse
from conftest import make_random_bcn
from stp_core import LogicalMatrix, identity, ones_row

REFERENCE_T = LogicalMatrix(8, [3, 6, 1, 8, 7, 2, 5, 4])
IDENTITY_SYSTEM = "x' = x\ny = x\n"


def z_system(updates, output):
    """Assemble the expected system in z coordinates from ASCII equations."""
    names = ('z1', 'z2', 'z3')
    return assemble([(name, parse(text)) for name, text in zip(names, updates)],
                    [('y', parse(output))], names, ('u',))


class TestAssemble:
    def test_flip_flops(self):
        bcn = flip_flops()
        L1, L2 = blocks(bcn)
        assert (bcn.n, bcn.m, bcn.p) == (3, 1, 1)
        assert L1.indices == (3, 1, 3, 1, 1, 3, 1, 3)
        assert L2.indices == (4, 5, 4, 5, 4, 5, 4, 5)
        assert bcn.H.indices == (2, 1, 1, 1, 1, 1, 1, 2)

    def test_shift_register(self):
        bcn = shift_register(3)
        assert [b.indices for b in blocks(bcn)] == [(1, 3, 5, 7, 1, 3, 5, 7), (2, 4, 6, 8, 2, 4, 6, 8)]
        assert bcn.H.indices == (1, 1, 1, 1, 2, 2, 2, 2)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_shift_register_closed_form(self, n):
        assert shift_register_matrix(n).same_dynamics(shift_register(n))

    def test_autonomous_identity(self):
        bcn = parse_model_text(IDENTITY_SYSTEM)
        assert bcn.m == 0
        assert bcn.L.indices == (1, 2)
        assert bcn.H.indices == (1, 2)
        assert len(blocks(bcn)) == 1

    def test_unknown_variable(self):
        with pytest.raises(ModelError, match="unknown variable 'w'"):
            assemble({'x': parse('w')}, {'y': Var('x')}, ['x'])

    def test_output_may_not_read_inputs(self):
        with pytest.raises(ModelError, match="outputs may reference state variables only"):
            assemble({'x': Var('u')}, {'y': Var('u')}, ['x'], ['u'])

    def test_missing_update(self):
        with pytest.raises(ModelError, match="missing update equation for state variable 'x2'"):
            assemble({'x1': Var('x1')}, {'y': Var('x1')}, ['x1', 'x2'])

    def test_duplicate_equation(self):
        with pytest.raises(ModelError, match="duplicate update equation"):
            assemble([('x', Var('x')), ('x', Var('x'))], {'y': Var('x')}, ['x'])

    def test_duplicate_names(self):
        with pytest.raises(ModelError, match="declared more than once"):
            assemble({'x': Var('x')}, {'y': Var('x')}, ['x'], ['x'])

    def test_bcn_checks_dimensions(self):
        with pytest.raises(ModelError):
            BCN(n=2, m=0, p=1, L=LogicalMatrix(4, [1, 2]), H=LogicalMatrix(2, [1, 1, 1, 1]))


class TestModelText:
    def test_inferred_headers(self):
        bcn = parse_model_text("x1' = x2 & u\nx2' = v | x1\ny = x1\n")
        assert bcn.state_names == ('x1', 'x2')
        assert bcn.input_names == ('u', 'v')
        assert bcn.output_names == ('y',)

    def test_comments_and_output_order(self):
        text = ("# two outputs, declared in reverse\n"
                "states: x\noutputs: b, a\n"
                "x' = !x  # toggles\n"
                "a = x\nb = !x\n")
        bcn = parse_model_text(text)
        assert bcn.output_names == ('b', 'a')
        assert bcn.H.indices == (3, 2)

    def test_duplicate_equation_reports_both_lines(self):
        with pytest.raises(ModelError) as info:
            parse_model_text("x' = x\nx' = !x\ny = x\n")
        assert info.value.line == 2
        assert "first on line 1" in info.value.message

    def test_syntax_error_is_anchored_in_the_document(self):
        with pytest.raises(ExprSyntaxError) as info:
            parse_model_text("states: x\nx' = x &\ny = x\n")
        assert info.value.line == 2
        assert info.value.position == 8

    def test_unrecognised_line(self):
        with pytest.raises(ModelError) as info:
            parse_model_text("x' = x\nthis is not an equation\n")
        assert info.value.line == 2

    def test_state_limit(self):
        with pytest.raises(ModelError, match="exceed the limit of 2"):
            parse_model_text("x1' = x2\nx2' = x3\nx3' = x1\ny = x1\n", max_states=2)

    def test_undeclared_output(self):
        with pytest.raises(ModelError, match="undeclared output 'z'"):
            parse_model_text("outputs: y\nx' = x\ny = x\nz = x\n")

    def test_format_model_text(self):
        text = format_model_text(['x'], ['u'], ['y'], [parse('x & u')], [Var('x')])
        assert text == "states: x\ninputs: u\noutputs: y\nx' = x & u\ny = x\n"


class TestDynamics:
    @pytest.mark.parametrize("x, u, expected", [(1, 1, (3, 2)), (8, 2, (5, 2))])
    def test_step_flip_flops(self, x, u, expected):
        assert step(flip_flops(), x, u) == expected

    def test_step_identity_system(self):
        bcn = parse_model_text(IDENTITY_SYSTEM)
        assert [step(bcn, x) for x in (1, 2)] == [(1, 1), (2, 2)]

    @pytest.mark.parametrize("x, u", [(0, 1), (9, 1), (1, 3)])
    def test_step_out_of_range(self, x, u):
        with pytest.raises(ModelError):
            step(flip_flops(), x, u)

    def test_simulate_flip_flops(self):
        trajectory = simulate(flip_flops(), 1, [1, 1])
        assert trajectory.states == (1, 3, 3)
        assert trajectory.outputs == (2, 1, 1)

    def test_simulate_shift_register(self):
        trajectory = simulate(shift_register(3), 8, [1, 1, 1])
        assert trajectory.states == (8, 7, 5, 1)
        assert trajectory.outputs == (2, 2, 2, 1)

    def test_simulate_without_inputs(self):
        trajectory = simulate(flip_flops(), 4, [])
        assert trajectory.states == (4,)
        assert trajectory.outputs == (1,)

    def test_simulate_autonomous_counts_steps(self):
        trajectory = simulate(odd_block_network(), 4, [7, 7, 7])
        assert trajectory.states == (4, 1, 1, 1)


class TestTransform:
    def test_identity_leaves_dynamics(self):
        bcn = flip_flops()
        assert transform(bcn, identity(8)).same_dynamics(bcn)

    def test_flip_flops_reference_coordinates(self):
        moved = transform(flip_flops(), REFERENCE_T)
        expected = z_system(['u', 'z1 & u', 'z3 -> u'], 'z1 -> z2')
        assert moved.same_dynamics(expected)
        assert parse_model_text(to_equations(moved)).same_dynamics(expected)

    def test_inverse(self, random_bcn, rng):
        bcn = random_bcn(3, 1, 2)
        T = LogicalMatrix(8, rng.permutation(8) + 1)
        assert transform(transform(bcn, T), T.T).same_dynamics(bcn)

    def test_rejects_non_permutation(self):
        with pytest.raises(ModelError):
            transform(flip_flops(), LogicalMatrix(8, [1] * 8))

    @pytest.mark.parametrize("seed", range(5))
    def test_outputs_survive_coordinate_change(self, seed):
        rng = np.random.default_rng(seed)
        bcn = make_random_bcn(rng, 3, 2, 1)
        T = LogicalMatrix(8, rng.permutation(8) + 1)
        moved = transform(bcn, T)
        for x0 in range(1, 9):
            inputs = rng.integers(1, 5, size=10).tolist()
            original = simulate(bcn, x0, inputs)
            image = simulate(moved, T.column(x0), inputs)
            assert image.outputs == original.outputs
            assert image.states == tuple(T.column(x) for x in original.states)


class TestDecompile:
    def test_bit_tables(self):
        tables = bit_tables(LogicalMatrix(4, [1, 2, 3, 4]), 2)
        assert [t.tolist() for t in tables] == [[True, True, False, False], [True, False, True, False]]

    def test_bit_tables_row_check(self):
        with pytest.raises(ValueError):
            bit_tables(LogicalMatrix(3, [1, 2, 3, 1]), 2)

    def test_matrix_to_exprs_identity(self):
        assert matrix_to_exprs(identity(2), 1, ['x']) == [Var('x')]

    def test_identity_system_equations(self):
        text = to_equations(parse_model_text(IDENTITY_SYSTEM))
        assert "x' = x" in text
        assert "y = x" in text

    def test_shift_register_equations(self):
        bcn = shift_register(3)
        assert parse_model_text(to_equations(bcn)).same_dynamics(bcn)

    @pytest.mark.parametrize("n, m, p", [(1, 0, 1), (2, 1, 2), (3, 2, 1), (4, 1, 2), (4, 2, 2)])
    def test_round_trip_random(self, random_bcn, n, m, p):
        for _ in range(4):
            bcn = random_bcn(n, m, p)
            rebuilt = parse_model_text(to_equations(bcn))
            assert rebuilt.same_dynamics(bcn)
            assert rebuilt.state_names == bcn.state_names
            assert rebuilt.input_names == bcn.input_names


class TestDecomposedBCN:
    def test_trivial_split_reassembles(self):
        bcn = flip_flops()
        decomposed = DecomposedBCN(s=3, n=3, m=1, p=1, G1_blocks=blocks(bcn),
                                   G2=ones_row(16), M=bcn.H)
        assert decomposed.order == 0
        assert decomposed.to_bcn().same_dynamics(bcn)

    def test_dimension_checks(self):
        with pytest.raises(ModelError, match="G1 blocks"):
            DecomposedBCN(s=1, n=2, m=1, p=1, G1_blocks=[identity(2)],
                          G2=LogicalMatrix(2, [1] * 8), M=LogicalMatrix(2, [1, 2]))
        with pytest.raises(ModelError, match="M must be"):
            DecomposedBCN(s=1, n=2, m=0, p=1, G1_blocks=[identity(2)],
                          G2=LogicalMatrix(2, [1] * 4), M=LogicalMatrix(2, [1, 2, 1]))
        with pytest.raises(ModelError, match="outside"):
            DecomposedBCN(s=3, n=2, m=0, p=1, G1_blocks=[identity(2)],
                          G2=LogicalMatrix(2, [1] * 4), M=LogicalMatrix(2, [1, 2]))


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_catalog_networks_are_well_formed(name):
    bcn = CATALOG[name]()
    assert bcn.L.rows == 2 ** bcn.n
    assert np.all(bcn.L.delta >= 1)
