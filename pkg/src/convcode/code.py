"""Convolutional codes as images of basic encoders."""

from __future__ import annotations

import functools
from collections.abc import Sequence

from .errors import NotBasicError, RankDeficientError
from .gf import Field
from .polyalg import (
    Poly,
    PolyMatrix,
    hermite_with_transform,
    is_basic,
    is_reduced,
    matrix_degree,
    reduce,
    right_kernel_basis,
    solve_left,
)


class ConvCode:
    """im G for a basic encoder G, stored through a reduced encoder.

    The reduced encoder keeps the row order produced by :func:`reduce`;
    Forney indices are reported sorted in descending order.
    """

    def __init__(self, G: PolyMatrix):
        if G.k > G.n:
            raise RankDeficientError("more rows than columns")
        if not is_basic(G):
            raise NotBasicError("generator matrix is not basic")
        self.generator = G
        self.field: Field = G.field
        self.n = G.n
        self.k = G.k
        if is_reduced(G):
            self.transform, self.reduced_encoder = PolyMatrix.identity(G.field, G.k), G
        else:
            self.transform, self.reduced_encoder = reduce(G)
        self.row_degrees = tuple(int(d) for d in self.reduced_encoder.row_degrees())
        self.forney_indices = tuple(sorted(self.row_degrees, reverse=True))
        self.degree = sum(self.row_degrees)
        self.memory = max(self.row_degrees, default=0)

    @classmethod
    def from_rows(cls, field: Field, rows: Sequence[Sequence]) -> ConvCode:
        return cls(PolyMatrix(field, rows))

    @functools.cached_property
    def canonical(self) -> PolyMatrix:
        """Hermite form of the code: equal codes have equal canonical forms."""
        return hermite_with_transform(self.reduced_encoder)[1]

    @functools.cached_property
    def realization(self):
        """Controller canonical form of the reduced encoder."""
        from .realization import ccf

        return ccf(self.reduced_encoder)

    def encode(self, u: Sequence[Poly]) -> tuple[Poly, ...]:
        return self.reduced_encoder.left_mul_vector(u)

    def contains(self, v: Sequence[Poly]) -> tuple[Poly, ...] | None:
        """Message u with u G_red = v, or None when v is not a codeword."""
        if len(v) != self.n:
            raise ValueError(f"word length {len(v)} != {self.n}")
        return solve_left(self.reduced_encoder, v)

    def dual(self) -> ConvCode:
        if self.k == self.n:
            raise RankDeficientError("the dual of the full space is the zero code")
        return ConvCode(right_kernel_basis(self.reduced_encoder))

    def check(self) -> None:
        assert self.degree == matrix_degree(self.reduced_encoder)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConvCode):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.canonical == other.canonical

    def __hash__(self) -> int:
        return hash(self.canonical)

    def __repr__(self) -> str:
        return f"ConvCode(n={self.n}, k={self.k}, delta={self.degree}, forney={self.forney_indices})"


def code_from_encoder(G: PolyMatrix) -> ConvCode:
    return ConvCode(G)


def encode(C: ConvCode, u: Sequence[Poly]) -> tuple[Poly, ...]:
    return C.encode(u)


def contains(C: ConvCode, v: Sequence[Poly]) -> tuple[Poly, ...] | None:
    return C.contains(v)


def dual(C: ConvCode) -> ConvCode:
    return C.dual()
