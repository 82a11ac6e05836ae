"""Polynomials and polynomial matrices over GF(q)[z].

A :class:`Poly` stores its coefficients (integer element codes) in ascending
powers of z without trailing zeros.  Polynomial vectors are plain tuples of
``Poly``; :class:`PolyMatrix` is an immutable k x n grid.

Degrees and delays of zero objects follow the usual conventions
``deg(0) = -inf`` and ``del(0) = +inf`` (``math.inf``).
"""

from __future__ import annotations

import itertools
import math
import re
from collections.abc import Iterable, Sequence

from . import linalg
from .errors import NotBasicError, ParseError, PreconditionError, RankDeficientError
from .gf import Field

INF = math.inf


class Poly:
    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, field: Field, c: int) -> Poly:
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: Field, c: int, e: int) -> Poly:
        return cls(field, [0] * e + [c])

    @classmethod
    def parse(cls, field: Field, text: str) -> Poly:
        return parse_poly(field, text)

    @property
    def deg(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else -INF

    @property
    def delay(self) -> float | int:
        for t, c in enumerate(self.coeffs):
            if c:
                return t
        return INF

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, t: int) -> int:
        return self.coeffs[t] if 0 <= t < len(self.coeffs) else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def is_const(self) -> bool:
        return len(self.coeffs) <= 1

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.field._add
        return Poly(self.field, [add[x][b[i]] if i < len(b) else x for i, x in enumerate(a)])

    def __neg__(self) -> Poly:
        neg = self.field._neg
        return Poly(self.field, [neg[x] for x in self.coeffs])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly | int) -> Poly:
        F = self.field
        if isinstance(other, int):
            row = F._mul[other]
            return Poly(F, [row[x] for x in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F)
        out = [0] * (len(a) + len(b) - 1)
        add, mul = F._add, F._mul
        for i, x in enumerate(a):
            if x:
                mx = mul[x]
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = add[out[i + j]][mx[y]]
        return Poly(F, out)

    __rmul__ = __mul__

    def shift(self, s: int) -> Poly:
        """Multiply by z^s; negative s requires divisibility."""
        if s >= 0:
            return Poly(self.field, (0,) * s + self.coeffs) if self.coeffs else self
        if any(self.coeffs[:-s]):
            raise PreconditionError(f"{self} is not divisible by z^{-s}")
        return Poly(self.field, self.coeffs[-s:])

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv_lead = F.inv(other.coeffs[-1])
        quot = [0] * max(len(r) - db, 0)
        sub, mul = F._sub, F._mul
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i]
            if c:
                f = mul[c][inv_lead]
                quot[i - db] = f
                mf = mul[f]
                for j, b in enumerate(other.coeffs):
                    r[i - db + j] = sub[r[i - db + j]][mf[b]]
        return Poly(F, quot), Poly(F, r[:db])

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        return self * self.field.inv(self.lead) if self.coeffs else self

    def evaluate(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F._add[F._mul[acc][x]][c]
        return acc

    def truncate(self, t: int) -> Poly:
        """Keep coefficients of z^0 .. z^t."""
        return Poly(self.field, self.coeffs[: t + 1])

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self})"


def zero_poly(F: Field) -> Poly:
    return Poly(F)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, a % b
    return a.monic()


# text syntax


def format_poly(f: Poly, var: str = "z") -> str:
    if not f.coeffs:
        return "0"
    F = f.field
    terms = []
    for e, c in enumerate(f.coeffs):
        if not c:
            continue
        name = F.name(c)
        if e == 0:
            terms.append(name)
            continue
        mono = var if e == 1 else f"{var}^{e}"
        terms.append(mono if c == 1 else f"{name}*{mono}")
    return "+".join(terms)


_TERM = re.compile(r"^(?:(?P<coef>[^*z]+?)\*?)?(?P<z>z(?:\^(?P<exp>\d+))?)?$")


def parse_poly(F: Field, text: str) -> Poly:
    """Parse ``"1+z+z^2"``, ``"a*z+a2*z^3"``, ``"2*z-1"`` into a Poly."""
    s = text.replace(" ", "")
    if not s:
        raise ParseError("empty polynomial")
    parts = re.findall(r"[+-]?[^+-]+", s)
    if "".join(parts) != s:
        raise ParseError(f"cannot parse polynomial {text!r}")
    acc: dict[int, int] = {}
    for part in parts:
        sign = part[0] == "-"
        body = part[1:] if part[0] in "+-" else part
        m = _TERM.match(body)
        if not m or not body or (m.group("coef") is None and m.group("z") is None):
            raise ParseError(f"cannot parse term {part!r} in {text!r}")
        try:
            coef = F.parse_element(m.group("coef")) if m.group("coef") else 1
        except Exception as exc:
            raise ParseError(str(exc)) from None
        if m.group("z") is None:
            e = 0
        else:
            e = int(m.group("exp")) if m.group("exp") else 1
        if sign:
            coef = F.neg(coef)
        acc[e] = F.add(acc.get(e, 0), coef)
    top = max(acc)
    return Poly(F, [acc.get(e, 0) for e in range(top + 1)])


# vectors (tuples of Poly)

PolyVector = tuple


def vector(F: Field, entries: Iterable[Poly | Sequence[int] | int | str]) -> tuple[Poly, ...]:
    return tuple(_as_poly(F, e) for e in entries)


def _as_poly(F: Field, e) -> Poly:
    if isinstance(e, Poly):
        return e
    if isinstance(e, int):
        return Poly(F, (e,))
    if isinstance(e, str):
        return parse_poly(F, e)
    return Poly(F, e)


def weight(v: Sequence[Poly]) -> int:
    """Sum of the Hamming weights of all coefficient vectors."""
    return sum(p.weight() for p in v)


def delay(v: Sequence[Poly]) -> float | int:
    return min((p.delay for p in v), default=INF)


def degree(v: Sequence[Poly]) -> float | int:
    return max((p.deg for p in v), default=-INF)


def coefficient(v: Sequence[Poly], t: int) -> list[int]:
    return [p[t] for p in v]


def vec_add(u: Sequence[Poly], v: Sequence[Poly]) -> tuple[Poly, ...]:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Poly], v: Sequence[Poly]) -> tuple[Poly, ...]:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Poly | int, v: Sequence[Poly]) -> tuple[Poly, ...]:
    return tuple(p * c for p in v)


def vec_truncate(v: Sequence[Poly], t: int) -> tuple[Poly, ...]:
    return tuple(p.truncate(t) for p in v)


def vec_is_zero(v: Sequence[Poly]) -> bool:
    return all(not p for p in v)


def vector_from_coefficients(F: Field, coeffs: Sequence[Sequence[int]], n: int) -> tuple[Poly, ...]:
    """Build sum_t coeffs[t] z^t from a list of constant vectors."""
    return tuple(Poly(F, [c[i] for c in coeffs]) for i in range(n))


def coefficient_vectors(v: Sequence[Poly]) -> list[list[int]]:
    d = degree(v)
    if d == -INF:
        return []
    return [coefficient(v, t) for t in range(int(d) + 1)]


class PolyMatrix:
    """Immutable k x n matrix over GF(q)[z]."""

    __slots__ = ("field", "rows", "k", "n")

    def __init__(self, field: Field, rows: Iterable[Iterable], n: int | None = None):
        self.field = field
        self.rows = tuple(vector(field, r) for r in rows)
        self.k = len(self.rows)
        if n is None:
            if not self.rows:
                raise ValueError("column count needed for an empty matrix")
            n = len(self.rows[0])
        if any(len(r) != n for r in self.rows):
            raise ValueError("ragged matrix")
        self.n = n

    @classmethod
    def parse(cls, field: Field, rows: Sequence[Sequence[str]]) -> PolyMatrix:
        return cls(field, [[parse_poly(field, e) for e in r] for r in rows])

    @classmethod
    def identity(cls, field: Field, k: int) -> PolyMatrix:
        return cls(field, [[int(i == j) for j in range(k)] for i in range(k)], n=k)

    @classmethod
    def from_constant(cls, field: Field, M: Sequence[Sequence[int]], n: int | None = None) -> PolyMatrix:
        return cls(field, [[Poly(field, (c,)) for c in r] for r in M], n=n)

    @property
    def shape(self) -> tuple[int, int]:
        return self.k, self.n

    def __getitem__(self, ij):
        if isinstance(ij, tuple):
            return self.rows[ij[0]][ij[1]]
        return self.rows[ij]

    def column(self, j: int) -> tuple[Poly, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple[Poly, ...]]:
        return [self.column(j) for j in range(self.n)]

    def transpose(self) -> PolyMatrix:
        return PolyMatrix(self.field, self.columns(), n=self.k)

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __mul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.n != other.k:
            raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
        cols = other.columns()
        zero = Poly(self.field)
        rows = []
        for r in self.rows:
            row = []
            for c in cols:
                acc = zero
                for a, b in zip(r, c):
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            rows.append(row)
        return PolyMatrix(self.field, rows, n=other.n)

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        return PolyMatrix(self.field, [vec_add(a, b) for a, b in zip(self.rows, other.rows)], n=self.n)

    def left_mul_vector(self, u: Sequence[Poly]) -> tuple[Poly, ...]:
        """u * self for a row vector u of length k."""
        if len(u) != self.k:
            raise ValueError(f"message length {len(u)} != {self.k}")
        out = [Poly(self.field)] * self.n
        for ui, row in zip(u, self.rows):
            if ui:
                out = [o + ui * g for o, g in zip(out, row)]
        return tuple(out)

    def row_degrees(self) -> list[float | int]:
        return [degree(r) for r in self.rows]

    def max_degree(self) -> float | int:
        return max((degree(r) for r in self.rows), default=-INF)

    def coefficient(self, t: int) -> list[list[int]]:
        """Constant matrix of z^t coefficients."""
        return [[p[t] for p in r] for r in self.rows]

    def leading_row_matrix(self) -> list[list[int]]:
        out = []
        for r in self.rows:
            d = degree(r)
            if d == -INF:
                raise PreconditionError("zero row has no leading coefficient")
            out.append([p[int(d)] for p in r])
        return out

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> PolyMatrix:
        rows = range(self.k) if rows is None else rows
        cols = range(self.n) if cols is None else cols
        return PolyMatrix(self.field, [[self.rows[i][j] for j in cols] for i in rows], n=len(cols))

    def with_rows(self, rows: Sequence[Sequence[Poly]]) -> PolyMatrix:
        return PolyMatrix(self.field, rows, n=self.n)

    def to_ints(self) -> list[list[list[int]]]:
        return [[list(p.coeffs) for p in r] for r in self.rows]

    def to_strings(self) -> list[list[str]]:
        return [[str(p) for p in r] for r in self.rows]

    def __str__(self) -> str:
        cells = self.to_strings()
        if not cells:
            return "()"
        widths = [max(len(cells[i][j]) for i in range(self.k)) for j in range(self.n)]
        return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in cells)

    def __repr__(self) -> str:
        return f"PolyMatrix({self.to_strings()!r})"


# determinants and minors


def det(M: Sequence[Sequence[Poly]], F: Field) -> Poly:
    """Determinant by Laplace expansion along the first row (small k only)."""
    k = len(M)
    if k == 0:
        return Poly(F, (1,))
    if k == 1:
        return M[0][0]
    if k == 2:
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]
    acc = Poly(F)
    for j in range(k):
        if not M[0][j]:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det(minor, F)
        acc = acc - term if j % 2 else acc + term
    return acc


def maximal_minors(G: PolyMatrix) -> list[Poly]:
    out = []
    for cols in itertools.combinations(range(G.n), G.k):
        out.append(det([[r[j] for j in cols] for r in G.rows], G.field))
    return out


def matrix_degree(G: PolyMatrix) -> int:
    """Maximal degree of the k x k minors."""
    if G.k > G.n:
        raise RankDeficientError("more rows than columns")
    d = max((m.deg for m in maximal_minors(G)), default=-INF)
    if d == -INF:
        raise RankDeficientError("matrix does not have full row rank")
    return int(d)


def is_basic(G: PolyMatrix) -> bool:
    """True iff the gcd of all maximal minors is a nonzero constant."""
    if G.k > G.n:
        return False
    g = Poly(G.field)
    for m in maximal_minors(G):
        g = poly_gcd(g, m)
        if g.deg == 0:
            return True
    return g.deg == 0


def is_reduced(G: PolyMatrix) -> bool:
    """Leading row coefficient matrix has full row rank."""
    if any(vec_is_zero(r) for r in G.rows):
        raise PreconditionError("matrix has a zero row")
    return linalg.rank(G.field, G.leading_row_matrix()) == G.k


def _row_combination(F: Field, rows: Sequence[Sequence[Poly]], coeffs: Sequence[Poly], n: int) -> tuple[Poly, ...]:
    out = [Poly(F)] * n
    for c, r in zip(coeffs, rows):
        if c:
            out = [o + c * x for o, x in zip(out, r)]
    return tuple(out)


def row_reduce(G: PolyMatrix) -> tuple[PolyMatrix, PolyMatrix]:
    """Row-reduce any full-row-rank matrix: (U, U G) with U unimodular and U G reduced.

    Repeatedly cancels the leading coefficient of a maximal-degree row taking
    part in a left-kernel relation of the leading row coefficient matrix; the
    sum of row degrees drops each step.  Ties go to the largest row index.
    """
    F = G.field
    rows = [list(r) for r in G.rows]
    U = [[Poly(F, (int(i == j),)) for j in range(G.k)] for i in range(G.k)]
    while True:
        degs = [degree(r) for r in rows]
        if any(d == -INF for d in degs):
            raise RankDeficientError("matrix does not have full row rank")
        lead = [[p[int(d)] for p in r] for r, d in zip(rows, degs)]
        kernel = linalg.left_kernel(F, lead)
        if not kernel:
            break
        a = kernel[0]
        i = max((j for j in range(G.k) if a[j]), key=lambda j: (degs[j], j))
        inv_ai = F.inv(a[i])
        coeffs = [
            Poly.monomial(F, F.mul(a[j], inv_ai), int(degs[i] - degs[j])) if a[j] else Poly(F)
            for j in range(G.k)
        ]
        rows[i] = list(_row_combination(F, rows, coeffs, G.n))
        U[i] = list(_row_combination(F, U, coeffs, G.k))
    return PolyMatrix(F, U, n=G.k), PolyMatrix(F, rows, n=G.n)


def reduce(G: PolyMatrix) -> tuple[PolyMatrix, PolyMatrix]:
    """Reduced encoder of im G: returns (U, U G) for a basic G."""
    if not is_basic(G):
        raise NotBasicError("reduce requires a basic matrix")
    return row_reduce(G)


def forney_indices(G: PolyMatrix) -> tuple[int, ...]:
    return tuple(sorted((int(d) for d in G.row_degrees()), reverse=True))


def hermite_with_transform(G: PolyMatrix) -> tuple[PolyMatrix, PolyMatrix, list[int]]:
    """Row Hermite form over GF(q)[z]: (U, H, pivot columns) with U G = H.

    Pivots are monic; entries above a pivot have smaller degree than it.
    Rows beyond the rank are zero.
    """
    F = G.field
    H = [list(r) for r in G.rows]
    U = [[Poly(F, (int(i == j),)) for j in range(G.k)] for i in range(G.k)]

    def sub_multiple(i: int, p: int, f: Poly):
        H[i] = [a - f * b for a, b in zip(H[i], H[p])]
        U[i] = [a - f * b for a, b in zip(U[i], U[p])]

    pivots: list[int] = []
    r = 0
    for c in range(G.n):
        if r == G.k:
            break
        while True:
            live = [i for i in range(r, G.k) if H[i][c]]
            if len(live) <= 1:
                break
            p = min(live, key=lambda i: (H[i][c].deg, i))
            for i in live:
                if i != p:
                    sub_multiple(i, p, H[i][c] // H[p][c])
        if not live:
            continue
        p = live[0]
        H[r], H[p] = H[p], H[r]
        U[r], U[p] = U[p], U[r]
        s = F.inv(H[r][c].lead)
        H[r] = [a * s for a in H[r]]
        U[r] = [a * s for a in U[r]]
        for i in range(r):
            if H[i][c]:
                sub_multiple(i, r, H[i][c] // H[r][c])
        pivots.append(c)
        r += 1
    return PolyMatrix(F, U, n=G.k), PolyMatrix(F, H, n=G.n), pivots


def hermite_form(G: PolyMatrix) -> PolyMatrix:
    if not is_basic(G):
        raise NotBasicError("hermite_form requires a basic matrix")
    return hermite_with_transform(G)[1]


def right_kernel_basis(G: PolyMatrix) -> PolyMatrix:
    """Basic (n-k) x n matrix H with H G^T = 0.

    Column operations bring G to (L | 0); the last n-k columns of the
    accumulated unimodular transform span the right kernel.
    """
    if not is_basic(G):
        raise NotBasicError("right_kernel_basis requires a basic matrix")
    V, _, _ = hermite_with_transform(G.transpose())
    H = PolyMatrix(G.field, V.rows[G.k:], n=G.n)
    return H


def solve_left(G: PolyMatrix, v: Sequence[Poly]) -> tuple[Poly, ...] | None:
    """Message u with u G = v for a full-row-rank G, or None if v is not in im G."""
    U, H, pivots = hermite_with_transform(G)
    if len(pivots) < G.k:
        raise RankDeficientError("matrix does not have full row rank")
    F = G.field
    rest = list(v)
    w = []
    for i, c in enumerate(pivots):
        f, rem = divmod(rest[c], H[i, c])
        if rem:
            return None
        w.append(f)
        if f:
            rest = [a - f * b for a, b in zip(rest, H.rows[i])]
    if not vec_is_zero(rest):
        return None
    return _row_combination(F, U.rows, w, G.k)


def inverse_unimodular(U: PolyMatrix) -> PolyMatrix:
    """Inverse of a square polynomial matrix with constant nonzero determinant."""
    F = U.field
    d = det([list(r) for r in U.rows], F)
    if d.deg != 0:
        raise PreconditionError("matrix is not unimodular")
    s = F.inv(d.lead)
    k = U.k
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            minor = [r[:i] + r[i + 1:] for idx, r in enumerate(U.rows) if idx != j]
            c = det(minor, F) * s
            row.append(-c if (i + j) % 2 else c)
        rows.append(row)
    return PolyMatrix(F, rows, n=k)


def is_unimodular(U: PolyMatrix) -> bool:
    return U.k == U.n and det([list(r) for r in U.rows], U.field).deg == 0


def same_row_space(G: PolyMatrix, H: PolyMatrix) -> bool:
    if G.shape != H.shape:
        return False
    return hermite_with_transform(G)[1] == hermite_with_transform(H)[1]
