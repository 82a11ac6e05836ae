"""Exact arithmetic in small finite fields GF(p^m).

Elements are encoded canonically as integers: the residue
``c_0 + c_1 x + ... + c_{m-1} x^{m-1}`` modulo the field's defining polynomial
is stored as ``sum(c_i * p**i)``.  The integer order is the canonical element
order used by every other module (state indexing, column normalization).

Internally all algorithms work on these integer codes through the lookup
tables of :class:`Field`; :class:`FieldElement` is a thin value wrapper for
callers who want operator syntax.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

import numpy as np

from .config import default_budgets
from .errors import FieldError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _poly_mod_p(a: tuple[int, ...], b: tuple[int, ...], p: int) -> tuple[int, ...]:
    """Remainder of a modulo monic b, coefficients ascending, over GF(p)."""
    r = list(a)
    db = len(b) - 1
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] % p
        if c:
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    r = [c % p for c in r[:db]]
    return tuple(r)


def _lex_monic(p: int, d: int):
    # tuples (c_0, ..., c_{d-1}, 1) ordered lexicographically from c_0 upward
    for low in itertools.product(range(p), repeat=d):
        yield low + (1,)


def is_irreducible(poly: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    d = len(poly) - 1
    if d < 1:
        return False
    for e in range(1, d // 2 + 1):
        for f in _lex_monic(p, e):
            if not any(_poly_mod_p(poly, f, p)):
                return False
    return True


def smallest_irreducible(p: int, m: int) -> tuple[int, ...]:
    if m == 1:
        return (0, 1)
    for cand in _lex_monic(p, m):
        if is_irreducible(cand, p):
            return cand
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")  # pragma: no cover


class Field:
    """GF(p^m) with integer-coded elements and full operation tables."""

    def __init__(self, p: int, m: int, modulus: tuple[int, ...]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus
        q = self.q
        digits = [self._digits(a) for a in range(q)]
        add = np.zeros((q, q), dtype=np.int64)
        mul = np.zeros((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                add[a, b] = self._encode([(x + y) % p for x, y in zip(digits[a], digits[b])])
        for a in range(q):
            for b in range(a, q):
                prod = [0] * (2 * m - 1)
                for i, x in enumerate(digits[a]):
                    if x:
                        for j, y in enumerate(digits[b]):
                            prod[i + j] = (prod[i + j] + x * y) % p
                c = self._encode(_poly_mod_p(tuple(prod), modulus, p)) if m > 1 else prod[0]
                mul[a, b] = mul[b, a] = c
        neg = np.array([self._encode([(-x) % p for x in digits[a]]) for a in range(q)], dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        for a in range(1, q):
            inv[a] = int(np.nonzero(mul[a] == 1)[0][0])
        sub = add[:, neg]
        for t in (add, mul, neg, inv, sub):
            t.setflags(write=False)
        self.add_table, self.mul_table, self.neg_table, self.inv_table, self.sub_table = add, mul, neg, inv, sub
        # plain-list copies are much faster than numpy scalars in scalar code
        self._add = add.tolist()
        self._mul = mul.tolist()
        self._sub = sub.tolist()
        self._neg = neg.tolist()
        self._inv = inv.tolist()
        self._names = self._element_names()

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.m):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits) -> int:
        return sum(int(c) * self.p**i for i, c in enumerate(digits))

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.m == 1 else f"GF({self.p}^{self.m})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __reduce__(self):
        return (field_create, (self.p, self.m))

    # scalar arithmetic on integer codes
    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def sub(self, a: int, b: int) -> int:
        return self._sub[a][b]

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def neg(self, a: int) -> int:
        return self._neg[a]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._inv[a]

    def div(self, a: int, b: int) -> int:
        return self._mul[a][self.inv(b)]

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        r = 1
        while e:
            if e & 1:
                r = self._mul[r][a]
            a = self._mul[a][a]
            e >>= 1
        return r

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def __iter__(self):
        return (FieldElement(self, a) for a in range(self.q))

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def alpha(self) -> FieldElement:
        """Class of x modulo the defining polynomial (equals p for m > 1)."""
        return FieldElement(self, self.p if self.m > 1 else 1)

    # text form: prime fields use integers; extension fields use powers of alpha
    def _element_names(self) -> dict[int, str]:
        names = {0: "0", 1: "1"}
        if self.m == 1:
            return {a: str(a) for a in range(self.q)}
        a, e = self.p, 1
        while a not in names:
            names[a] = "a" if e == 1 else f"a{e}"
            a = self._mul[a][self.p]
            e += 1
        for a in range(self.q):
            names.setdefault(a, f"#{a}")
        return names

    def name(self, a: int) -> str:
        return self._names[a]

    def parse_element(self, token: str) -> int:
        token = token.strip()
        try:
            if token.startswith("#"):
                value = int(token[1:])
            elif token.startswith("a") and self.m > 1:
                value = self.pow(self.p, int(token[1:]) if len(token) > 1 else 1)
            else:
                value = int(token)
                if self.m == 1:
                    value %= self.p
        except ValueError:
            raise FieldError(f"cannot parse field element {token!r} in {self!r}") from None
        if not 0 <= value < self.q:
            raise FieldError(f"element code {value} out of range for {self!r}")
        return value


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, m: int) -> Field:
    return Field(p, m, smallest_irreducible(p, m))


def field_create(p: int, m: int = 1, bound: int | None = None) -> Field:
    """Return GF(p^m) defined by the lexicographically smallest monic irreducible.

    Candidates are compared by their coefficient tuples starting from the
    constant term; for m = 1 the modulus is x.
    """
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if m < 1:
        raise FieldError("extension degree must be positive")
    bound = default_budgets().field_order if bound is None else bound
    if p**m > bound:
        raise FieldError(f"field order {p**m} exceeds bound {bound}")
    return _field_cached(p, m)


def GF(q: int) -> Field:
    """Convenience constructor from the field order."""
    for p in range(2, q + 1):
        if is_prime(p) and q % p == 0:
            m, r = 0, q
            while r % p == 0:
                r //= p
                m += 1
            if r != 1:
                break
            return field_create(p, m)
    raise FieldError(f"{q} is not a prime power")


@dataclass(frozen=True)
class FieldElement:
    field: Field
    value: int

    def __post_init__(self):
        if not 0 <= self.value < self.field.q:
            raise FieldError(f"element code {self.value} out of range for {self.field!r}")

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(f"mixed fields {self.field!r} and {other.field!r}")
            return other.value
        if isinstance(other, int) and other in (0, 1):
            return other
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        return NotImplemented if b is NotImplemented else FieldElement(self.field, self.field.div(self.value, b))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __lt__(self, other: FieldElement) -> bool:
        return self.value < self._coerce(other)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return self.field.name(self.value)
