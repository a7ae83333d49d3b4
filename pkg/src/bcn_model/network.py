"""Boolean control networks in algebraic form ``x(t+1) = L u(t) x(t)``, ``y(t) = H x(t)``."""

import logging
from dataclasses import dataclass
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from bool_expr import Expr, truth_values
from stp_core import LogicalMatrix, identity, kron

from .errors import ModelError

logger = logging.getLogger(__name__)

Equations = Union[Mapping[str, Expr], Sequence[Tuple[str, Expr]]]


def default_names(prefix: str, count: int) -> Tuple[str, ...]:
    return tuple(f"{prefix}{i}" for i in range(1, count + 1))


@dataclass(frozen=True)
class BCN:
    """Dimensions plus transition matrix ``L`` (2^n x 2^(m+n)) and output matrix ``H`` (2^p x 2^n).

    Column ``(j-1)*2^n + q`` of ``L`` is the successor of state ``q`` under input ``j``.
    """

    n: int
    m: int
    p: int
    L: LogicalMatrix
    H: LogicalMatrix
    state_names: Tuple[str, ...] = ()
    input_names: Tuple[str, ...] = ()
    output_names: Tuple[str, ...] = ()

    def __post_init__(self):
        if self.n < 1 or self.m < 0 or self.p < 1:
            raise ModelError(f"invalid dimensions n={self.n}, m={self.m}, p={self.p}")
        if self.L.shape != (2 ** self.n, 2 ** (self.m + self.n)):
            raise ModelError(
                f"L must be {2 ** self.n}x{2 ** (self.m + self.n)}, got {self.L.rows}x{self.L.cols}"
            )
        if self.H.shape != (2 ** self.p, 2 ** self.n):
            raise ModelError(f"H must be {2 ** self.p}x{2 ** self.n}, got {self.H.rows}x{self.H.cols}")
        for attr, prefix, count in (('state_names', 'x', self.n),
                                    ('input_names', 'u', self.m),
                                    ('output_names', 'y', self.p)):
            names = tuple(getattr(self, attr)) or default_names(prefix, count)
            if len(names) != count:
                raise ModelError(f"{attr} has {len(names)} entries, expected {count}")
            object.__setattr__(self, attr, names)
        _check_distinct(self.state_names + self.input_names)

    @property
    def state_count(self) -> int:
        return 2 ** self.n

    @property
    def input_count(self) -> int:
        return 2 ** self.m

    def same_dynamics(self, other: 'BCN') -> bool:
        """Equal matrices, ignoring variable names."""
        return (self.n, self.m, self.p) == (other.n, other.m, other.p) \
            and self.L == other.L and self.H == other.H


@dataclass(frozen=True)
class Trajectory:
    states: Tuple[int, ...]
    outputs: Tuple[int, ...]


def _check_distinct(names: Sequence[str]) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise ModelError(f"variable '{name}' declared more than once")
        seen.add(name)


def _equation_items(equations: Equations, kind: str) -> List[Tuple[str, Expr]]:
    items = list(equations.items()) if isinstance(equations, Mapping) else list(equations)
    seen = set()
    for name, _ in items:
        if name in seen:
            raise ModelError(f"duplicate {kind} equation for '{name}'")
        seen.add(name)
    return items


def pack_bits(bits: Sequence[np.ndarray]) -> np.ndarray:
    """1-based delta indices of the packed product of per-variable boolean columns."""
    index = np.zeros(len(bits[0]), dtype=np.int64)
    for column in bits:
        index = 2 * index + (~column).astype(np.int64)
    return index + 1


def assemble(update_eqs: Equations, output_eqs: Equations,
             state_names: Sequence[str], input_names: Sequence[str] = (),
             output_names: Optional[Sequence[str]] = None) -> BCN:
    """Build the algebraic form by evaluating every equation over all 2^(m+n) arguments."""
    state_names, input_names = tuple(state_names), tuple(input_names)
    if not state_names:
        raise ModelError("a network needs at least one state variable")
    _check_distinct(state_names + input_names)

    updates = _equation_items(update_eqs, 'update')
    outputs = _equation_items(output_eqs, 'output')
    if not outputs:
        raise ModelError("a network needs at least one output equation")
    update_map: Dict[str, Expr] = {}
    for name, expr in updates:
        if name not in state_names:
            raise ModelError(f"update equation for unknown state variable '{name}'")
        update_map[name] = expr
    for name in state_names:
        if name not in update_map:
            raise ModelError(f"missing update equation for state variable '{name}'")

    arguments = input_names + state_names
    for name, expr in updates:
        unknown = expr.free_vars() - set(arguments)
        if unknown:
            raise ModelError(f"unknown variable '{sorted(unknown)[0]}' in update of '{name}'")
    for name, expr in outputs:
        unknown = expr.free_vars() - set(state_names)
        if unknown:
            raise ModelError(f"unknown variable '{sorted(unknown)[0]}' in output '{name}' "
                             "(outputs may reference state variables only)")

    next_bits = [truth_values(update_map[name], arguments) for name in state_names]
    output_bits = [truth_values(expr, state_names) for _, expr in outputs]
    n, m, p = len(state_names), len(input_names), len(outputs)
    bcn = BCN(
        n=n, m=m, p=p,
        L=LogicalMatrix(2 ** n, pack_bits(next_bits)),
        H=LogicalMatrix(2 ** p, pack_bits(output_bits)),
        state_names=state_names,
        input_names=input_names,
        output_names=tuple(output_names) if output_names else tuple(name for name, _ in outputs),
    )
    logger.info("Assembled BCN with n=%d, m=%d, p=%d", n, m, p)
    return bcn


def blocks(bcn: BCN) -> List[LogicalMatrix]:
    """``[L_1, ..., L_{2^m}]``, one square block per input value."""
    return bcn.L.column_blocks(bcn.input_count)


def _check_state(bcn: BCN, x: int) -> None:
    if not 1 <= x <= bcn.state_count:
        raise ModelError(f"state index {x} out of range 1..{bcn.state_count}")


def _check_input(bcn: BCN, u: int) -> None:
    if not 1 <= u <= bcn.input_count:
        raise ModelError(f"input index {u} out of range 1..{bcn.input_count}")


def step(bcn: BCN, x: int, u: int = 1) -> Tuple[int, int]:
    """Return ``(x(t+1), y(t))`` for state ``x`` and input ``u``."""
    _check_state(bcn, x)
    _check_input(bcn, u)
    return (int(bcn.L.delta[(u - 1) * bcn.state_count + x - 1]),
            int(bcn.H.delta[x - 1]))


def simulate(bcn: BCN, x0: int, inputs: Sequence[int]) -> Trajectory:
    """Iterate the network; with ``m = 0`` only the length of ``inputs`` matters."""
    _check_state(bcn, x0)
    states = [x0]
    outputs = []
    for u in inputs:
        nxt, out = step(bcn, states[-1], u if bcn.m else 1)
        outputs.append(out)
        states.append(nxt)
    outputs.append(int(bcn.H.delta[states[-1] - 1]))
    return Trajectory(tuple(states), tuple(outputs))


def transform(bcn: BCN, T: LogicalMatrix, state_prefix: str = 'z') -> BCN:
    """Change coordinates ``z = T x``: ``L' = T L (I ⊗ T^T)``, ``H' = H T^T``."""
    if T.shape != (bcn.state_count, bcn.state_count) or not T.is_permutation():
        raise ModelError(f"T must be a {bcn.state_count}x{bcn.state_count} permutation matrix")
    t_inv = T.transpose()
    new_l = T @ bcn.L @ kron(identity(bcn.input_count), t_inv)
    return BCN(
        n=bcn.n, m=bcn.m, p=bcn.p,
        L=new_l,
        H=bcn.H @ t_inv,
        state_names=default_names(state_prefix, bcn.n),
        input_names=bcn.input_names,
        output_names=bcn.output_names,
    )
