"""Weight-enumerator polynomials in W and truncated power series in L.

Coefficients are Python integers (unbounded).  Weight enumerators themselves
are nonnegative, but series inversion passes through signed intermediates,
so :class:`WPoly` allows any sign.
"""

from __future__ import annotations

import math
from collections.abc import Iterable, Sequence

import numpy as np

from .errors import PreconditionError

INF = math.inf


class WPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> WPoly:
        return cls([0] * e + [c])

    @classmethod
    def parse(cls, text: str) -> WPoly:
        """Inverse of ``str``: ``"1+2W+W^2"``."""
        s = text.replace(" ", "")
        if s == "0":
            return cls()
        acc: dict[int, int] = {}
        for part in s.replace("-", "+-").split("+"):
            if not part:
                continue
            coef, _, mono = part.partition("W")
            if not _ and not mono:
                acc[0] = acc.get(0, 0) + int(coef)
                continue
            coef = coef.rstrip("*")
            c = -1 if coef == "-" else int(coef) if coef else 1
            e = int(mono[1:]) if mono.startswith("^") else 1
            acc[e] = acc.get(e, 0) + c
        return cls([acc.get(e, 0) for e in range(max(acc) + 1)])

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, WPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == ((other,) if other else ())
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __lt__(self, other: WPoly) -> bool:
        return self.coeffs < other.coeffs

    @property
    def deg(self) -> float | int:
        return len(self.coeffs) - 1 if self.coeffs else -INF

    @property
    def delay(self) -> float | int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return INF

    def mass(self) -> int:
        """Value at W = 1."""
        return sum(self.coeffs)

    def __add__(self, other: WPoly | int) -> WPoly:
        if isinstance(other, int):
            other = WPoly((other,))
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return WPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> WPoly:
        return WPoly(-x for x in self.coeffs)

    def __sub__(self, other: WPoly | int) -> WPoly:
        if isinstance(other, int):
            other = WPoly((other,))
        return self + (-other)

    def __rsub__(self, other: int) -> WPoly:
        return WPoly((other,)) - self

    def __mul__(self, other: WPoly | int) -> WPoly:
        if isinstance(other, int):
            return WPoly(x * other for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return WPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return WPoly(out)

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for e, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if e == 0 else "W" if e == 1 else f"W^{e}"
            if e == 0:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"WPoly({self})"


ZERO = WPoly()
ONE = WPoly((1,))


def we_of_set(vectors: Iterable[Sequence[int]] | np.ndarray) -> WPoly:
    """Weight enumerator of a finite set of constant vectors (duplicates count once)."""
    if isinstance(vectors, np.ndarray):
        arr = np.unique(vectors.reshape(len(vectors), -1), axis=0) if len(vectors) else vectors
        weights = np.count_nonzero(arr, axis=1) if len(arr) else np.zeros(0, dtype=np.int64)
    else:
        uniq = {tuple(int(c) for c in v) for v in vectors}
        weights = np.array([sum(1 for c in v if c) for v in uniq], dtype=np.int64)
    if weights.size == 0:
        return WPoly()
    return WPoly(np.bincount(weights).tolist())


def we_of_weights(weights: Iterable[int]) -> WPoly:
    """Enumerator of a multiset given by its weights."""
    w = np.asarray(list(weights), dtype=np.int64)
    return WPoly(np.bincount(w).tolist()) if w.size else WPoly()


class WSeries:
    """Power series sum_l c_l L^l with WPoly coefficients, truncated after L^order."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[WPoly | int], order: int):
        c = [x if isinstance(x, WPoly) else WPoly((x,)) for x in coeffs][: order + 1]
        c += [WPoly()] * (order + 1 - len(c))
        self.coeffs = tuple(c)
        self.order = order

    def __getitem__(self, l: int) -> WPoly:
        return self.coeffs[l] if 0 <= l <= self.order else WPoly()

    def __eq__(self, other) -> bool:
        return isinstance(other, WSeries) and self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.coeffs, self.order))

    def _check(self, other: WSeries) -> int:
        return min(self.order, other.order)

    def __add__(self, other: WSeries) -> WSeries:
        N = self._check(other)
        return WSeries([self[l] + other[l] for l in range(N + 1)], N)

    def __sub__(self, other: WSeries) -> WSeries:
        N = self._check(other)
        return WSeries([self[l] - other[l] for l in range(N + 1)], N)

    def __neg__(self) -> WSeries:
        return WSeries([-c for c in self.coeffs], self.order)

    def __mul__(self, other: WSeries) -> WSeries:
        N = self._check(other)
        out = [WPoly()] * (N + 1)
        for i in range(N + 1):
            if self[i]:
                for j in range(N + 1 - i):
                    if other[j]:
                        out[i + j] = out[i + j] + self[i] * other[j]
        return WSeries(out, N)

    def invert(self) -> WSeries:
        return series_invert(self)

    def pairs(self) -> list[tuple[int, WPoly]]:
        return [(l, c) for l, c in enumerate(self.coeffs) if c]

    def __str__(self) -> str:
        terms = [f"({c})*L^{l}" if l else f"({c})" for l, c in self.pairs()]
        return " + ".join(terms) + f" + O(L^{self.order + 1})" if terms else f"O(L^{self.order + 1})"

    def __repr__(self) -> str:
        return f"WSeries({self})"


def series_one(order: int) -> WSeries:
    return WSeries([ONE], order)


def series_invert(phi: WSeries) -> WSeries:
    """Inverse of a series whose L^0 coefficient is 1, by recursive convolution."""
    if phi[0] != ONE:
        raise PreconditionError("series inversion needs constant term 1")
    N = phi.order
    inv = [ONE]
    for l in range(1, N + 1):
        acc = WPoly()
        for i in range(1, l + 1):
            if phi[i]:
                acc = acc + phi[i] * inv[l - i]
        inv.append(-acc)
    return WSeries(inv, N)
