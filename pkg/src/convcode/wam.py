"""Weight adjacency matrices of reduced encoders.

States X in F^delta are indexed in canonical order: lexicographic with the
leftmost coordinate most significant, so for delta = 2 over GF(2) the order
is (0,0), (0,1), (1,0), (1,1).  Rows are stored sparsely as {Y: WPoly}; a row
has q^rank(B) nonzero entries.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from . import linalg
from .config import check_budget, default_budgets
from .errors import PreconditionError
from .gf import Field
from .polyalg import PolyMatrix
from .realization import Realization, ccf
from .wenum import ONE, WPoly

INF = float("inf")


class WAM:
    """q^delta x q^delta matrix of WPoly indexed by state pairs."""

    __slots__ = ("field", "delta", "rows")

    def __init__(self, field: Field, delta: int, rows: Sequence[dict[int, WPoly]]):
        self.field = field
        self.delta = delta
        self.rows = tuple({y: w for y, w in r.items() if w} for r in rows)
        if len(self.rows) != field.q**delta:
            raise ValueError("row count must be q^delta")

    @classmethod
    def from_dense(cls, field: Field, delta: int, dense: Sequence[Sequence[WPoly | str | int]]) -> WAM:
        def conv(e):
            if isinstance(e, WPoly):
                return e
            if isinstance(e, int):
                return WPoly((e,))
            return WPoly.parse(e)

        return cls(field, delta, [{y: conv(e) for y, e in enumerate(r)} for r in dense])

    @property
    def size(self) -> int:
        return len(self.rows)

    def __getitem__(self, xy: tuple[int, int]) -> WPoly:
        x, y = xy
        return self.rows[x].get(y, WPoly())

    def state(self, i: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.delta):
            out.append(i % self.field.q)
            i //= self.field.q
        return tuple(reversed(out))

    def state_label(self, i: int) -> str:
        return "(" + ",".join(self.field.name(c) for c in self.state(i)) + ")"

    def dense(self) -> list[list[WPoly]]:
        return [[self[x, y] for y in range(self.size)] for x in range(self.size)]

    def __eq__(self, other) -> bool:
        return isinstance(other, WAM) and self.field == other.field and self.delta == other.delta and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(tuple(tuple(sorted(r.items())) for r in self.rows))

    def row_mass(self, x: int) -> int:
        return sum(w.mass() for w in self.rows[x].values())

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self.dense()]

    def __str__(self) -> str:
        cells = self.to_strings()
        labels = [self.state_label(i) for i in range(self.size)]
        lw = max(len(s) for s in labels)
        widths = [max(len(labels[j]), *(len(cells[i][j]) for i in range(self.size))) for j in range(self.size)]
        head = " " * lw + "  " + "  ".join(l.ljust(w) for l, w in zip(labels, widths))
        body = [labels[i].ljust(lw) + "  " + "  ".join(c.ljust(w) for c, w in zip(cells[i], widths)) for i in range(self.size)]
        return "\n".join(s.rstrip() for s in [head, *body])

    def __repr__(self) -> str:
        return f"WAM(delta={self.delta}, {self.to_strings()!r})"

    # algebra

    def __matmul__(self, other: WAM) -> WAM:
        rows = []
        for r in self.rows:
            acc: dict[int, WPoly] = {}
            for mid, a in r.items():
                for y, b in other.rows[mid].items():
                    acc[y] = acc[y] + a * b if y in acc else a * b
            rows.append(acc)
        return WAM(self.field, self.delta, rows)

    def power(self, j: int) -> WAM:
        out = identity_wam(self.field, self.delta)
        for _ in range(j):
            out = out @ self
        return out

    def row_times(self, vec: dict[int, WPoly]) -> dict[int, WPoly]:
        """Row vector (sparse) times this matrix."""
        acc: dict[int, WPoly] = {}
        for mid, a in vec.items():
            for y, b in self.rows[mid].items():
                acc[y] = acc[y] + a * b if y in acc else a * b
        return {y: w for y, w in acc.items() if w}

    def delay_matrix(self) -> np.ndarray:
        """Dense matrix of entry delays (inf for zero entries)."""
        D = np.full((self.size, self.size), INF)
        for x, r in enumerate(self.rows):
            for y, w in r.items():
                D[x, y] = w.delay
        return D

    def sparse_delays(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        xs, ys, ds = [], [], []
        for x, r in enumerate(self.rows):
            for y, w in r.items():
                xs.append(x)
                ys.append(y)
                ds.append(w.delay)
        return np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64), np.array(ds, dtype=float)


def identity_wam(F: Field, delta: int) -> WAM:
    return WAM(F, delta, [{i: ONE} for i in range(F.q**delta)])


def wam_from_realization(R: Realization, budget: int | None = None) -> WAM:
    F = R.field
    q, d, k, n = F.q, R.delta, R.k, R.n
    budget = default_budgets().wam_states if budget is None else budget
    check_budget(q**d, budget, "number of WAM states")
    X = linalg.all_vectors(F, d)
    U = linalg.all_vectors(F, k)
    XA = linalg.np_matmul(F, X, R.A, d) if d else np.zeros((1, 0), dtype=np.int64)
    XC = linalg.np_matmul(F, X, R.C, n) if d else np.zeros((1, n), dtype=np.int64)
    UB = linalg.np_matmul(F, U, R.B, d) if d else np.zeros((len(U), 0), dtype=np.int64)
    UD = linalg.np_matmul(F, U, R.D, n)
    Y = linalg.np_add(F, XA[:, None, :], UB[None, :, :]).reshape(len(X) * len(U), d)
    V = linalg.np_add(F, XC[:, None, :], UD[None, :, :]).reshape(-1, n)
    powers = q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    yidx = Y @ powers if d else np.zeros(len(Y), dtype=np.int64)
    xidx = np.repeat(np.arange(q**d, dtype=np.int64), len(U))
    w = np.count_nonzero(V, axis=1)
    key = (xidx * q**d + yidx) * (n + 1) + w
    uniq, counts = np.unique(key, return_counts=True)
    rows: list[dict[int, list[int]]] = [{} for _ in range(q**d)]
    for kk, c in zip(uniq.tolist(), counts.tolist()):
        xy, wt = divmod(kk, n + 1)
        x, y = divmod(xy, q**d)
        coeffs = rows[x].setdefault(y, [0] * (n + 1))
        coeffs[wt] += c
    return WAM(F, d, [{y: WPoly(c) for y, c in r.items()} for r in rows])


def wam(G: PolyMatrix, budget: int | None = None) -> WAM:
    """Weight adjacency matrix of a reduced encoder (via its CCF)."""
    return wam_from_realization(ccf(G), budget)


def wam_tilde(L: WAM) -> WAM:
    """Copy with the (0,0) entry set to zero."""
    rows = [dict(r) for r in L.rows]
    rows[0].pop(0, None)
    return WAM(L.field, L.delta, rows)


def wam_hat(L: WAM) -> WAM:
    """Copy with 1 subtracted from the (0,0) entry."""
    e = L[0, 0]
    if e[0] < 1:
        raise PreconditionError("(0,0) entry lacks the constant term 1")
    rows = [dict(r) for r in L.rows]
    rows[0][0] = e - 1
    return WAM(L.field, L.delta, rows)


def reduced_wams(L: WAM) -> tuple[WAM, WAM]:
    return wam_tilde(L), wam_hat(L)


# state-space isomorphism search


def _fingerprints(L: WAM) -> list[tuple]:
    cols: list[list[tuple]] = [[] for _ in range(L.size)]
    for x, r in enumerate(L.rows):
        for y, w in r.items():
            cols[y].append(w.coeffs)
    return [
        (L[x, x].coeffs, tuple(sorted(w.coeffs for w in L.rows[x].values())), tuple(sorted(cols[x])))
        for x in range(L.size)
    ]


def check_state_map(L: WAM, L2: WAM, T: Sequence[Sequence[int]]) -> bool:
    """Lambda_{X,Y} == Lambda2_{XT,YT} for all state pairs."""
    F, d = L.field, L.delta
    X = linalg.all_vectors(F, d)
    XT = linalg.np_matmul(F, X, T, d) if d else X
    powers = F.q ** np.arange(d - 1, -1, -1, dtype=np.int64)
    img = (XT @ powers).tolist() if d else [0]
    if len(set(img)) != L.size:
        return False
    for x, r in enumerate(L.rows):
        mapped = {img[y]: w for y, w in r.items()}
        if mapped != L2.rows[img[x]]:
            return False
    return True


def wam_equivalent(L: WAM, L2: WAM, budget: int | None = None) -> list[list[int]] | None:
    """Some T in GL_delta(F) with L_{X,Y} = L2_{XT,YT}, or None.

    The identity is tried first; otherwise the search returns the first
    witness in row-major lexicographic order of T.  Rows of T are chosen one
    at a time; after fixing rows 0..r the map is determined on the span of
    e_0..e_r, and all pairs inside that span are checked before going deeper.
    """
    if L.field != L2.field or L.delta != L2.delta:
        raise PreconditionError("WAMs differ in field or state dimension")
    F, d, q = L.field, L.delta, L.field.q
    budget = default_budgets().gl_search if budget is None else budget
    check_budget(linalg.gl_order(q, d), budget, "GL_delta search")
    if d == 0:
        return [] if L == L2 else None
    ident = linalg.identity(d)
    if L == L2:
        return ident
    fp, fp2 = _fingerprints(L), _fingerprints(L2)
    if sorted(fp) != sorted(fp2):
        return None
    n_states = q**d
    stride = [q ** (d - 1 - i) for i in range(d)]  # index weight of coordinate i

    def idx(v):
        return sum(c * s for c, s in zip(v, stride))

    vectors = [tuple(int(c) for c in v) for v in linalg.all_vectors(F, d)]
    # image[x] for states x supported on the first r coordinates
    rows_T: list[tuple[int, ...]] = []
    image: dict[int, int] = {0: 0}

    def extend(t: tuple[int, ...]) -> dict[int, int] | None:
        r = len(rows_T)
        new: dict[int, int] = {}
        used = set(image.values())
        for x, ix in image.items():
            for c in range(1, q):
                sv = tuple(F._add[a][F._mul[c][b]] for a, b in zip(vectors[ix], t))
                nx = x + c * stride[r]
                ni = idx(sv)
                if ni in used or fp[nx] != fp2[ni]:
                    return None
                used.add(ni)
                new[nx] = ni
        full = dict(image)
        full.update(new)
        for x, ix in new.items():
            for y, iy in full.items():
                if L[x, y] != L2[ix, iy] or L[y, x] != L2[iy, ix]:
                    return None
        return new

    def search() -> bool:
        if len(rows_T) == d:
            return True
        for t in vectors:
            if not any(t):
                continue
            new = extend(t)
            if new is None:
                continue
            rows_T.append(t)
            image.update(new)
            if search():
                return True
            rows_T.pop()
            for x in new:
                del image[x]
        return False

    if not search():
        return None
    assert len(image) == n_states
    return [list(t) for t in rows_T]
