"""Controller canonical form and state sequences of reduced encoders.

The state vector concatenates one block per encoder row, in row order.  The
block of row i (degree nu_i) holds the last nu_i inputs of that row,
``(u_{i,t-1}, ..., u_{i,t-nu_i})``; rows of degree 0 contribute no block and
give a zero row in B.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from . import linalg
from .code import ConvCode
from .errors import NotInCodeError, NotReducedError, PreconditionError
from .gf import Field
from .polyalg import Poly, PolyMatrix, degree, is_reduced, vec_is_zero, vector_from_coefficients

Matrix = list[list[int]]


@dataclass(frozen=True)
class Realization:
    field: Field
    A: Matrix  # delta x delta
    B: Matrix  # k x delta
    C: Matrix  # delta x n
    D: Matrix  # k x n
    nu: tuple[int, ...]

    @property
    def delta(self) -> int:
        return len(self.A)

    @property
    def k(self) -> int:
        return len(self.D)

    @property
    def n(self) -> int:
        return len(self.D[0]) if self.D else 0

    def step(self, x: Sequence[int], u: Sequence[int]) -> tuple[list[int], list[int]]:
        """One transition: (next state, output) = (xA + uB, xC + uD)."""
        F, d, n = self.field, self.delta, self.n
        y = linalg.vec_add(F, linalg.vecmat(F, x, self.A, d), linalg.vecmat(F, u, self.B, d))
        v = linalg.vec_add(F, linalg.vecmat(F, x, self.C, n), linalg.vecmat(F, u, self.D, n))
        return y, v

    def block_offsets(self) -> list[int]:
        out, off = [], 0
        for nu in self.nu:
            out.append(off)
            off += nu
        return out


def ccf(G: PolyMatrix) -> Realization:
    """Controller canonical form (A, B, C, D) of a reduced encoder."""
    if not is_reduced(G):
        raise NotReducedError("controller canonical form needs a reduced encoder")
    F = G.field
    nu = tuple(int(d) for d in G.row_degrees())
    delta = sum(nu)
    A = linalg.zeros(delta, delta)
    B = linalg.zeros(G.k, delta)
    C = linalg.zeros(delta, G.n)
    off = 0
    for i, ni in enumerate(nu):
        if ni:
            B[i][off] = 1
        for r in range(ni):
            if r + 1 < ni:
                A[off + r][off + r + 1] = 1
            C[off + r] = [p[r + 1] for p in G.rows[i]]
        off += ni
    return Realization(F, A, B, C, G.coefficient(0), nu)


def state_trajectory(R: Realization, u: Sequence[Poly]) -> tuple[list[list[int]], list[list[int]]]:
    """States x_0 .. x_T and outputs v_0 .. v_{T-1} driven by u, with T = deg u + memory + 1.

    The run lasts until the state returns to zero for good, so every nonzero
    output coefficient is included.
    """
    if len(u) != R.k:
        raise ValueError(f"message length {len(u)} != {R.k}")
    du = degree(u)
    T = 0 if du == -float("inf") else int(du) + max(R.nu, default=0) + 1
    x = [0] * R.delta
    states, outputs = [x], []
    for t in range(T):
        x, v = R.step(x, [p[t] for p in u])
        states.append(x)
        outputs.append(v)
    return states, outputs


def run(R: Realization, u: Sequence[Poly]) -> tuple[tuple[Poly, ...], tuple[Poly, ...]]:
    """Drive the realization with u; returns (v, x) as polynomial vectors."""
    states, outputs = state_trajectory(R, u)
    v = vector_from_coefficients(R.field, outputs, R.n)
    x = vector_from_coefficients(R.field, states, R.delta)
    return v, x


def closed_form_states(R: Realization, u: Sequence[Poly]) -> tuple[Poly, ...]:
    """x = u B sum_{t>=1} A^{t-1} z^t; the sum is finite because A is nilpotent."""
    F, d = R.field, R.delta
    ub = [Poly(F)] * d
    for ui, brow in zip(u, R.B):
        for c, b in enumerate(brow):
            if b and ui:
                ub[c] = ub[c] + ui * b
    out = [Poly(F)] * d
    P = linalg.identity(d)
    for t in range(1, d + 1):
        # contribution u B A^{t-1} z^t
        for r in range(d):
            for c in range(d):
                if P[r][c] and ub[r]:
                    out[c] = out[c] + (ub[r] * P[r][c]).shift(t)
        P = linalg.matmul(F, P, R.A, d)
    return tuple(out)


def _states_of_codeword(C: ConvCode, v: Sequence[Poly]) -> list[list[int]]:
    u = C.contains(v)
    if u is None:
        raise NotInCodeError("word is not a codeword")
    return state_trajectory(C.realization, u)[0]


def is_atomic(C: ConvCode, v: Sequence[Poly]) -> bool:
    """x_t != 0 for t = 1 .. deg v along the state path of the codeword v."""
    if vec_is_zero(v):
        raise PreconditionError("the zero word is not atomic by definition")
    states = _states_of_codeword(C, v)
    if all(not c for c in (p[0] for p in v)):
        return False
    N = int(degree(v))
    return all(any(x) for x in states[1:N + 1])


def in_S(C: ConvCode, v: Sequence[Poly], j: int) -> bool:
    """(x_i, x_{i+1}) != (0, 0) for all i = 0 .. j."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    states = _states_of_codeword(C, v)
    padded = states + [[0] * len(states[0])] * max(0, j + 2 - len(states))
    return all(any(padded[i]) or any(padded[i + 1]) for i in range(j + 1))


in_S_j = in_S
