"""Linear algebra over GF(q) for constant matrices.

Matrices are lists of rows of integer element codes.  The ``np_*`` helpers
operate on numpy arrays of codes and are used by the exhaustive enumerations.
"""

from __future__ import annotations

import itertools
from collections.abc import Sequence

import numpy as np

from .gf import Field

Matrix = list[list[int]]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence[int]], cols: int | None = None) -> Matrix:
    if not M:
        return [[] for _ in range(cols or 0)]
    return [list(c) for c in zip(*M)]


def vec_add(F: Field, a: Sequence[int], b: Sequence[int]) -> list[int]:
    add = F._add
    return [add[x][y] for x, y in zip(a, b)]


def vec_scale(F: Field, c: int, a: Sequence[int]) -> list[int]:
    row = F._mul[c]
    return [row[x] for x in a]


def vecmat(F: Field, x: Sequence[int], M: Sequence[Sequence[int]], cols: int) -> list[int]:
    """Row vector times matrix; ``cols`` is needed when M has no rows."""
    out = [0] * cols
    add, mul = F._add, F._mul
    for xi, row in zip(x, M):
        if xi:
            mr = mul[xi]
            out = [add[o][mr[r]] for o, r in zip(out, row)]
    return out


def matmul(F: Field, A: Sequence[Sequence[int]], B: Sequence[Sequence[int]], cols: int) -> Matrix:
    return [vecmat(F, row, B, cols) for row in A]


def rref(F: Field, M: Sequence[Sequence[int]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    R = [list(r) for r in M]
    pivots: list[int] = []
    if not R:
        return R, pivots
    ncols = len(R[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(R)) if R[i][c]), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        R[r] = vec_scale(F, F.inv(R[r][c]), R[r])
        for i in range(len(R)):
            if i != r and R[i][c]:
                R[i] = vec_add(F, R[i], vec_scale(F, F.neg(R[i][c]), R[r]))
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def rank(F: Field, M: Sequence[Sequence[int]]) -> int:
    return len(rref(F, M)[1])


def right_kernel(F: Field, M: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis (as rows) of {x : M x^T = 0}."""
    R, pivots = rref(F, M)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for i, pc in enumerate(pivots):
            x[pc] = F.neg(R[i][f])
        basis.append(x)
    return basis


def left_kernel(F: Field, M: Sequence[Sequence[int]]) -> Matrix:
    """Basis (as rows) of {y : y M = 0}."""
    return right_kernel(F, transpose(M, 0), len(M))


def inverse(F: Field, M: Sequence[Sequence[int]]) -> Matrix | None:
    n = len(M)
    aug = [list(M[i]) + identity(n)[i] for i in range(n)]
    R, pivots = rref(F, aug)
    if pivots[:n] != list(range(n)):
        return None
    return [row[n:] for row in R]


def solve_left(F: Field, M: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """Some x with x M = b, or None."""
    k = len(M)
    A = [[M[i][j] for i in range(k)] + [b[j]] for j in range(len(b))]
    R, pivots = rref(F, A)
    if k in pivots:
        return None
    x = [0] * k
    for i, pc in enumerate(pivots):
        x[pc] = R[i][k]
    return x


def gl_order(q: int, d: int) -> int:
    out = 1
    for i in range(d):
        out *= q**d - q**i
    return out


def all_matrices(F: Field, rows: int, cols: int):
    """Every rows x cols matrix in canonical (row-major lexicographic) order."""
    for flat in itertools.product(range(F.q), repeat=rows * cols):
        yield [list(flat[i * cols:(i + 1) * cols]) for i in range(rows)]


# vectorized helpers


def all_vectors(F: Field, d: int) -> np.ndarray:
    """All of F^d as a (q^d, d) array; leftmost coordinate most significant."""
    if d == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((F.q,) * d).reshape(d, -1).T
    return np.ascontiguousarray(grids, dtype=np.int64)


def vector_index(F: Field, x: Sequence[int]) -> int:
    idx = 0
    for c in x:
        idx = idx * F.q + c
    return idx


def np_matmul(F: Field, X: np.ndarray, M: Sequence[Sequence[int]] | np.ndarray, cols: int) -> np.ndarray:
    """Row-wise products X @ M over GF(q) for a batch X of shape (N, a)."""
    M = np.asarray(M, dtype=np.int64).reshape(-1, cols)
    out = np.zeros((X.shape[0], cols), dtype=np.int64)
    if F.q == 2:
        if M.shape[0]:
            out = (X @ M) & 1
        return out
    add, mul = F.add_table, F.mul_table
    for i in range(M.shape[0]):
        out = add[out, mul[X[:, i][:, None], M[i][None, :]]]
    return out


def np_add(F: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if F.q == 2:
        return a ^ b
    return F.add_table[a, b]


def span(F: Field, rows: Sequence[Sequence[int]], cols: int) -> np.ndarray:
    """All linear combinations u @ rows, u in canonical order of F^len(rows)."""
    U = all_vectors(F, len(rows))
    return np_matmul(F, U, rows, cols)
