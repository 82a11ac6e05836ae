"""Monomial and z-monomial equivalence, isometry and strong isometry.

Conventions: a monomial matrix is stored as ``perm`` and ``scalars`` with
``(G M)[:, j] = scalars[j] * G[:, perm[j]]``, i.e. M = P D with
``P[perm[j], j] = 1`` and ``D = diag(scalars)``.  A z-monomial matrix adds
integer ``exponents`` and multiplies column j additionally by
``z^exponents[j]``.

The code-level searches run over the finite set of reduced encoders of a code
that share a given row-degree sequence: all U G with deg u_ij <= nu_i - nu_j
(zero when nu_i < nu_j) and invertible constant blocks on groups of equal
row degree.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

import numpy as np

from . import linalg
from .code import ConvCode
from .config import check_budget, default_budgets
from .errors import NotPolynomialError, NotReducedError, PreconditionError
from .gf import Field
from .polyalg import (
    INF,
    Poly,
    PolyMatrix,
    delay,
    is_reduced,
    row_reduce,
    solve_left,
    vec_is_zero,
)

# monomial groups


@dataclass(frozen=True)
class MonomialMatrix:
    field: Field
    perm: tuple[int, ...]
    scalars: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a permutation")
        if len(self.scalars) != len(self.perm) or any(s == 0 for s in self.scalars):
            raise ValueError("scalars must be nonzero, one per column")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, F: Field, n: int) -> MonomialMatrix:
        return cls(F, tuple(range(n)), (1,) * n)

    def matrix(self) -> list[list[int]]:
        M = linalg.zeros(self.n, self.n)
        for j, (p, s) in enumerate(zip(self.perm, self.scalars)):
            M[p][j] = s
        return M

    def apply(self, G: PolyMatrix) -> PolyMatrix:
        cols = [tuple(e * s for e in G.column(p)) for p, s in zip(self.perm, self.scalars)]
        return PolyMatrix(G.field, list(zip(*cols)) if cols else [[] for _ in range(G.k)], n=G.n)

    def apply_vector(self, v: Sequence[Poly]) -> tuple[Poly, ...]:
        return tuple(v[p] * s for p, s in zip(self.perm, self.scalars))

    def __matmul__(self, other: MonomialMatrix) -> MonomialMatrix:
        """Product self * other: apply self first, then other."""
        F = self.field
        perm = tuple(self.perm[other.perm[j]] for j in range(self.n))
        scal = tuple(F.mul(self.scalars[other.perm[j]], other.scalars[j]) for j in range(self.n))
        return MonomialMatrix(F, perm, scal)

    def inverse(self) -> MonomialMatrix:
        F = self.field
        inv = [0] * self.n
        for j, p in enumerate(self.perm):
            inv[p] = j
        return MonomialMatrix(F, tuple(inv), tuple(F.inv(self.scalars[inv[j]]) for j in range(self.n)))

    def to_json(self) -> dict:
        return {"perm": list(self.perm), "scalars": [self.field.name(s) for s in self.scalars]}


@dataclass(frozen=True)
class ZMonomialMatrix:
    field: Field
    perm: tuple[int, ...]
    scalars: tuple[int, ...]
    exponents: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("perm is not a permutation")
        if len(self.scalars) != len(self.perm) or any(s == 0 for s in self.scalars):
            raise ValueError("scalars must be nonzero, one per column")
        if len(self.exponents) != len(self.perm):
            raise ValueError("one exponent per column")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, F: Field, n: int) -> ZMonomialMatrix:
        return cls(F, tuple(range(n)), (1,) * n, (0,) * n)

    @classmethod
    def from_monomial(cls, M: MonomialMatrix) -> ZMonomialMatrix:
        return cls(M.field, M.perm, M.scalars, (0,) * M.n)

    @classmethod
    def diagonal(cls, F: Field, exponents: Sequence[int]) -> ZMonomialMatrix:
        n = len(exponents)
        return cls(F, tuple(range(n)), (1,) * n, tuple(exponents))

    def _column(self, col: Sequence[Poly], s: int, e: int) -> tuple[Poly, ...]:
        try:
            return tuple((p * s).shift(e) for p in col)
        except PreconditionError as exc:
            raise NotPolynomialError(f"z-monomial image leaves F[z]: {exc}") from None

    def apply(self, G: PolyMatrix) -> PolyMatrix:
        """G M; raises NotPolynomialError when some entry is not a polynomial."""
        cols = [self._column(G.column(p), s, e) for p, s, e in zip(self.perm, self.scalars, self.exponents)]
        return PolyMatrix(G.field, list(zip(*cols)) if cols else [[] for _ in range(G.k)], n=G.n)

    def apply_vector(self, v: Sequence[Poly]) -> tuple[Poly, ...]:
        return tuple(self._column((v[p],), s, e)[0] for p, s, e in zip(self.perm, self.scalars, self.exponents))

    def __matmul__(self, other: ZMonomialMatrix) -> ZMonomialMatrix:
        F = self.field
        idx = other.perm
        return ZMonomialMatrix(
            F,
            tuple(self.perm[idx[j]] for j in range(self.n)),
            tuple(F.mul(self.scalars[idx[j]], other.scalars[j]) for j in range(self.n)),
            tuple(self.exponents[idx[j]] + other.exponents[j] for j in range(self.n)),
        )

    def inverse(self) -> ZMonomialMatrix:
        F = self.field
        inv = [0] * self.n
        for j, p in enumerate(self.perm):
            inv[p] = j
        return ZMonomialMatrix(
            F,
            tuple(inv),
            tuple(F.inv(self.scalars[inv[j]]) for j in range(self.n)),
            tuple(-self.exponents[inv[j]] for j in range(self.n)),
        )

    def is_monomial(self) -> bool:
        return not any(self.exponents)

    def to_json(self) -> dict:
        return {
            "perm": list(self.perm),
            "scalars": [self.field.name(s) for s in self.scalars],
            "exponents": list(self.exponents),
        }


# column matching


def _leading_scalar(col: Sequence[Poly]) -> int:
    """First nonzero coefficient in (entry index, degree) order; 0 for a zero column."""
    for p in col:
        if p:
            return p[p.delay]
    return 0


def _normalized(col: Sequence[Poly], strip_delay: bool) -> tuple[tuple, int, int]:
    """(key, scalar, delay) with col = scalar * z^delay * (column described by key)."""
    if vec_is_zero(col):
        return (), 1, 0
    d = int(delay(col)) if strip_delay else 0
    s = _leading_scalar(col)
    inv = col[0].field.inv(s)
    key = tuple((p * inv).shift(-d).coeffs for p in col)
    return key, s, d


def _match_columns(G: PolyMatrix, Gb: PolyMatrix, strip_delay: bool):
    if G.shape != Gb.shape or G.field != Gb.field:
        return None
    F = G.field
    src = [_normalized(G.column(i), strip_delay) for i in range(G.n)]
    used = [False] * G.n
    perm, scal, expo = [], [], []
    for j in range(Gb.n):
        key, s, d = _normalized(Gb.column(j), strip_delay)
        for i in range(G.n):
            if not used[i] and src[i][0] == key:
                used[i] = True
                perm.append(i)
                scal.append(F.mul(s, F.inv(src[i][1])))
                expo.append(d - src[i][2])
                break
        else:
            return None
    return tuple(perm), tuple(scal), tuple(expo)


def me_key(G: PolyMatrix) -> tuple:
    """Invariant that two matrices share iff they are monomially equivalent."""
    return tuple(sorted(_normalized(G.column(i), False)[0] for i in range(G.n)))


def zme_key(G: PolyMatrix) -> tuple:
    """Invariant that two matrices share iff they are z-monomially equivalent."""
    return tuple(sorted(_normalized(G.column(i), True)[0] for i in range(G.n)))


def matrix_me(G: PolyMatrix, Gb: PolyMatrix) -> MonomialMatrix | None:
    """Monomial M with Gb = G M, first-fit in column order, or None."""
    m = _match_columns(G, Gb, False)
    return None if m is None else MonomialMatrix(G.field, m[0], m[1])


def matrix_zme(G: PolyMatrix, Gb: PolyMatrix) -> ZMonomialMatrix | None:
    """z-monomial M with Gb = G M, or None."""
    m = _match_columns(G, Gb, True)
    return None if m is None else ZMonomialMatrix(G.field, *m)


# sliding generator matrices and the weight test


def sliding_matrix(G: PolyMatrix, nu: int) -> list[list[int]]:
    """Block-Toeplitz S_nu(G) of size k(nu+1) x n(2nu+1)."""
    d = G.max_degree()
    if d != -INF and d > nu:
        raise PreconditionError(f"nu={nu} is below the degree {d} of the matrix")
    k, n = G.k, G.n
    S = linalg.zeros(k * (nu + 1), n * (2 * nu + 1))
    blocks = [G.coefficient(s) for s in range(nu + 1)]
    for r in range(nu + 1):
        for s in range(nu + 1):
            for i in range(k):
                S[r * k + i][(r + s) * n:(r + s + 1) * n] = blocks[s][i]
    return S


def _batched_weights(F: Field, S: np.ndarray, rows: int, batch: int = 1 << 16) -> Iterator[np.ndarray]:
    total = F.q**rows
    for start in range(0, total, batch):
        idx = np.arange(start, min(total, start + batch), dtype=np.int64)
        digits = np.zeros((len(idx), rows), dtype=np.int64)
        rem = idx.copy()
        for c in range(rows - 1, -1, -1):
            digits[:, c] = rem % F.q
            rem //= F.q
        yield np.count_nonzero(linalg.np_matmul(F, digits, S, S.shape[1]), axis=1)


def paired_isometry(G: PolyMatrix, Gb: PolyMatrix, budget: int | None = None) -> bool:
    """wt(uG) == wt(u Gb) for every u of degree <= nu, nu the largest degree in G and Gb."""
    if G.k != Gb.k or G.field != Gb.field:
        raise PreconditionError("matrices differ in row count or field")
    nu = int(max(G.max_degree(), Gb.max_degree(), 0))
    rows = G.k * (nu + 1)
    budget = default_budgets().enumeration if budget is None else budget
    check_budget(G.field.q**rows, budget, "paired isometry message space")
    S = np.array(sliding_matrix(G, nu), dtype=np.int64).reshape(rows, -1)
    Sb = np.array(sliding_matrix(Gb, nu), dtype=np.int64).reshape(rows, -1)
    for w, wb in zip(_batched_weights(G.field, S, rows), _batched_weights(G.field, Sb, rows)):
        if not np.array_equal(w, wb):
            return False
    return True


def weight_profile_constant(G: Sequence[Sequence[int]], F: Field) -> np.ndarray:
    """wt(uG) for all u in F^k (canonical order) for a constant matrix."""
    k = len(G)
    n = len(G[0]) if k else 0
    return np.count_nonzero(linalg.span(F, G, n), axis=1)


# reduced-encoder orbits


def _degree_groups(nu: Sequence[int]) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for i, d in enumerate(nu):
        groups.setdefault(d, []).append(i)
    return [groups[d] for d in sorted(groups, reverse=True)]


def orbit_size(q: int, nu: Sequence[int]) -> int:
    size = 1
    for g in _degree_groups(nu):
        size *= linalg.gl_order(q, len(g))
    for a in nu:
        for b in nu:
            if a > b:
                size *= q ** (a - b + 1)
    return size


def _invertible_matrices(F: Field, d: int) -> list[list[list[int]]]:
    return [M for M in linalg.all_matrices(F, d, d) if linalg.rank(F, M) == d]


def _polys_up_to(F: Field, d: int) -> list[Poly]:
    return [Poly(F, c) for c in itertools.product(range(F.q), repeat=d + 1)]


def reduced_encoder_transforms(F: Field, nu: Sequence[int], budget: int | None = None) -> Iterator[PolyMatrix]:
    """Every U with deg u_ij <= nu_i - nu_j whose equal-degree diagonal blocks are invertible."""
    budget = default_budgets().orbit if budget is None else budget
    check_budget(orbit_size(F.q, nu), budget, "reduced encoder orbit")
    k = len(nu)
    groups = _degree_groups(nu)
    block_choices = [_invertible_matrices(F, len(g)) for g in groups]
    off = [(i, j) for i in range(k) for j in range(k) if nu[i] > nu[j]]
    off_choices = [_polys_up_to(F, nu[i] - nu[j]) for i, j in off]
    zero = Poly(F)
    for blocks in itertools.product(*block_choices):
        base = [[zero] * k for _ in range(k)]
        for g, B in zip(groups, blocks):
            for a, i in enumerate(g):
                for b, j in enumerate(g):
                    base[i][j] = Poly(F, (B[a][b],))
        for entries in itertools.product(*off_choices):
            U = [row[:] for row in base]
            for (i, j), p in zip(off, entries):
                U[i][j] = p
            yield PolyMatrix(F, U, n=k)


def reduced_encoder_orbit(G: PolyMatrix, budget: int | None = None) -> Iterator[PolyMatrix]:
    """All reduced U G with the same row-degree sequence as the reduced matrix G."""
    if not is_reduced(G):
        raise NotReducedError("orbit enumeration needs a reduced matrix")
    nu = [int(d) for d in G.row_degrees()]
    for U in reduced_encoder_transforms(G.field, nu, budget):
        yield U * G


def _align_rows(G: PolyMatrix, H: PolyMatrix) -> PolyMatrix | None:
    """Permutation matrix P with P H having the row-degree sequence of G (stable), or None."""
    dg = [int(d) for d in G.row_degrees()]
    dh = [int(d) for d in H.row_degrees()]
    if sorted(dg) != sorted(dh):
        return None
    pool = list(range(H.k))
    order = []
    for d in dg:
        i = next(i for i in pool if dh[i] == d)
        pool.remove(i)
        order.append(i)
    F = G.field
    return PolyMatrix(F, [[int(c == order[r]) for c in range(H.k)] for r in range(H.k)], n=H.k)


def _orbit_search(G: PolyMatrix, target: PolyMatrix, match, budget):
    """First (V, M) with match(V G, target) = M, V ranging over the reduced orbit transforms of G."""
    nu = [int(d) for d in G.row_degrees()]
    for V in reduced_encoder_transforms(G.field, nu, budget):
        M = match(V * G, target)
        if M is not None:
            return V, M
    return None


@dataclass(frozen=True)
class CodeWitness:
    """Gb = U G M for the reduced encoders G, Gb of the two codes."""

    U: PolyMatrix
    M: MonomialMatrix | ZMonomialMatrix
    G: PolyMatrix
    Gb: PolyMatrix

    def verify(self) -> bool:
        return self.U * self.M.apply(self.G) == self.Gb


def _same_shape(C: ConvCode, Cb: ConvCode) -> None:
    if C.field != Cb.field or C.n != Cb.n or C.k != Cb.k:
        raise PreconditionError("codes differ in field, length or dimension")


def _transform_for(P: PolyMatrix, V: PolyMatrix) -> PolyMatrix:
    """U with U (G M) = Gb given P Gb = V G M, i.e. U = P^{-1} V (P is a permutation)."""
    return P.transpose() * V


def code_me(C: ConvCode, Cb: ConvCode, budget: int | None = None) -> CodeWitness | None:
    """Decide monomial equivalence of two codes: Gb = U G M with M monomial."""
    _same_shape(C, Cb)
    G, Gb = C.reduced_encoder, Cb.reduced_encoder
    P = _align_rows(G, Gb)
    if P is None:
        return None
    found = _orbit_search(G, P * Gb, matrix_me, budget)
    if found is None:
        return None
    V, M = found
    return CodeWitness(_transform_for(P, V), M, G, Gb)


def column_delays(G: PolyMatrix) -> tuple[int, ...]:
    """del of each column (0 for zero columns); invariants of im G for basic G."""
    out = []
    for j in range(G.n):
        d = delay(G.column(j))
        out.append(0 if d == INF else int(d))
    return tuple(out)


def _delay_free_reduced(G: PolyMatrix) -> tuple[PolyMatrix, tuple[int, ...]]:
    d = column_delays(G)
    G0 = ZMonomialMatrix.diagonal(G.field, [-x for x in d]).apply(G)
    return row_reduce(G0)[1], d


def code_isometric(C: ConvCode, Cb: ConvCode, budget: int | None = None) -> CodeWitness | None:
    """Decide isometry (= z-monomial equivalence of the codes).

    Dividing each column by z^(its delay) gives modules im G0, im Gb0 whose
    nonzero columns all have delay 0.  A z-monomial map between such modules
    cannot shift a nonzero column, so the codes are zME iff im G0 and im Gb0
    are ME.  Those modules have row-reduced bases (not necessarily basic),
    and ME of modules is decided by the same orbit search as for codes.
    """
    _same_shape(C, Cb)
    G, Gb = C.reduced_encoder, Cb.reduced_encoder
    R, d = _delay_free_reduced(G)
    Rb, db = _delay_free_reduced(Gb)
    P = _align_rows(R, Rb)
    if P is None:
        return None
    found = _orbit_search(R, P * Rb, matrix_me, budget)
    if found is None:
        return None
    _, M0 = found
    F = G.field
    M = (
        ZMonomialMatrix.diagonal(F, [-x for x in d])
        @ ZMonomialMatrix.from_monomial(M0)
        @ ZMonomialMatrix.diagonal(F, db)
    )
    GM = M.apply(G)
    rows = []
    for row in Gb.rows:
        u = solve_left(GM, row)
        if u is None:  # pragma: no cover - excluded by the module argument above
            raise AssertionError("z-monomial image does not generate the target code")
        rows.append(u)
    U = PolyMatrix(F, rows, n=G.k)
    return CodeWitness(U, M, G, Gb)


@dataclass(frozen=True)
class StrongWitness:
    """Reduced encoders G of C and Gb of Cb with equal row degrees and Gb = G M."""

    G: PolyMatrix
    Gb: PolyMatrix
    M: ZMonomialMatrix

    def verify(self) -> bool:
        return self.M.apply(self.G) == self.Gb and self.G.row_degrees() == self.Gb.row_degrees()


def code_strongly_isometric(C: ConvCode, Cb: ConvCode, budget: int | None = None) -> StrongWitness | None:
    """Decide strong isometry: some reduced encoders with equal row degrees are matrix-zME."""
    _same_shape(C, Cb)
    G, Gb = C.reduced_encoder, Cb.reduced_encoder
    P = _align_rows(G, Gb)
    if P is None:
        return None
    Gb_aligned = P * Gb
    for V in reduced_encoder_transforms(G.field, [int(x) for x in Gb_aligned.row_degrees()], budget):
        cand = V * Gb_aligned
        M = matrix_zme(G, cand)
        if M is not None:
            return StrongWitness(G, cand, M)
    return None


def encoders_strongly_isometric(G: PolyMatrix, Gb: PolyMatrix) -> bool:
    """The encoder pair uG -> uGb is weight- and degree-preserving (reduced inputs)."""
    if G.row_degrees() != Gb.row_degrees():
        return False
    return paired_isometry(G, Gb)


def is_delay_free(G: PolyMatrix) -> bool:
    """Every nonzero column has a nonzero constant term."""
    return all(vec_is_zero(c) or any(p[0] for p in c) for c in G.columns())
