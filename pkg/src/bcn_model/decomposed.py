"""The decomposed algebraic form.

With ``z = T x`` split as ``z[1] = (z_1..z_s)`` and ``z[2] = (z_{s+1}..z_n)``::

    z[1](t+1) = G_1 u(t) z[1](t)
    z[2](t+1) = G_2 u(t) z(t)
    y(t)      = M z[1](t)
"""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from stp_core import LogicalMatrix

from .decompile import matrix_to_exprs
from .dsl import format_model_text
from .errors import ModelError
from .network import BCN, default_names


@dataclass(frozen=True)
class DecomposedBCN:
    s: int
    n: int
    m: int
    p: int
    G1_blocks: Tuple[LogicalMatrix, ...]
    G2: LogicalMatrix
    M: LogicalMatrix
    input_names: Tuple[str, ...] = ()
    output_names: Tuple[str, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'G1_blocks', tuple(self.G1_blocks))
        if not 0 <= self.s <= self.n:
            raise ModelError(f"retained coordinate count s={self.s} outside 0..{self.n}")
        retained, dropped = 2 ** self.s, 2 ** (self.n - self.s)
        if len(self.G1_blocks) != 2 ** self.m:
            raise ModelError(f"expected {2 ** self.m} G1 blocks, got {len(self.G1_blocks)}")
        for k, block in enumerate(self.G1_blocks, start=1):
            if block.shape != (retained, retained):
                raise ModelError(f"G1 block {k} must be {retained}x{retained}, got {block.rows}x{block.cols}")
        if self.G2.shape != (dropped, 2 ** (self.m + self.n)):
            raise ModelError(f"G2 must be {dropped}x{2 ** (self.m + self.n)}, got {self.G2.rows}x{self.G2.cols}")
        if self.M.shape != (2 ** self.p, retained):
            raise ModelError(f"M must be {2 ** self.p}x{retained}, got {self.M.rows}x{self.M.cols}")
        object.__setattr__(self, 'input_names', tuple(self.input_names) or default_names('u', self.m))
        object.__setattr__(self, 'output_names', tuple(self.output_names) or default_names('y', self.p))

    @property
    def order(self) -> int:
        return self.n - self.s

    @property
    def state_names(self) -> Tuple[str, ...]:
        return default_names('z', self.n)

    @property
    def G1(self) -> LogicalMatrix:
        """``[G_11, ..., G_1(2^m)]`` as one ``2^s x 2^(m+s)`` matrix."""
        return LogicalMatrix.hstack(self.G1_blocks)

    def to_bcn(self) -> BCN:
        """Reassemble the full network in ``z`` coordinates."""
        state_count, dropped = 2 ** self.n, 2 ** (self.n - self.s)
        columns = np.arange(2 ** (self.m + self.n), dtype=np.int64)
        j0, z0 = np.divmod(columns, state_count)
        z1 = z0 // dropped
        g1 = self.G1.delta[j0 * 2 ** self.s + z1]
        g2 = self.G2.delta
        L = LogicalMatrix(state_count, (g1 - 1) * dropped + g2)
        H = LogicalMatrix(2 ** self.p, self.M.delta[np.arange(state_count) // dropped])
        return BCN(n=self.n, m=self.m, p=self.p, L=L, H=H,
                   state_names=self.state_names,
                   input_names=self.input_names,
                   output_names=self.output_names)

    def to_equations(self) -> str:
        """Equations of each part over the variables it actually depends on."""
        names = self.state_names
        retained = names[:self.s]
        updates = matrix_to_exprs(self.G1, self.s, self.input_names + retained) if self.s else []
        updates += matrix_to_exprs(self.G2, self.n - self.s, self.input_names + names)
        outputs = matrix_to_exprs(self.M, self.p, retained)
        return format_model_text(names, self.input_names, self.output_names, updates, outputs)
