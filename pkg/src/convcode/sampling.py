"""Random encoders, unimodular matrices and monomial maps for experiments and tests.

All samplers take a ``numpy.random.Generator`` so runs are reproducible.
"""

from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .equivalence import MonomialMatrix, ZMonomialMatrix
from .gf import Field
from .polyalg import Poly, PolyMatrix, is_basic, is_reduced


def random_poly(F: Field, maxdeg: int, rng: np.random.Generator, exact: bool = False) -> Poly:
    """Uniform polynomial of degree <= maxdeg (exactly maxdeg if ``exact``)."""
    if maxdeg < 0:
        return Poly(F)
    c = rng.integers(0, F.q, size=maxdeg + 1).tolist()
    if exact:
        c[-1] = int(rng.integers(1, F.q))
    return Poly(F, c)


def random_matrix(F: Field, k: int, n: int, maxdeg: int, rng: np.random.Generator) -> PolyMatrix:
    return PolyMatrix(F, [[random_poly(F, maxdeg, rng) for _ in range(n)] for _ in range(k)], n=n)


def random_reduced_encoder(
    F: Field, nu: Sequence[int], n: int, rng: np.random.Generator, tries: int = 2000
) -> PolyMatrix:
    """Basic reduced k x n encoder with row degrees exactly nu."""
    for _ in range(tries):
        rows = []
        for d in nu:
            row = [random_poly(F, d, rng) for _ in range(n)]
            j = int(rng.integers(0, n))
            row[j] = random_poly(F, d, rng, exact=True)
            rows.append(row)
        G = PolyMatrix(F, rows, n=n)
        if is_reduced(G) and is_basic(G):
            return G
    raise RuntimeError(f"no basic reduced encoder with row degrees {tuple(nu)} found")


def random_basic_encoder(F: Field, k: int, n: int, maxdeg: int, rng: np.random.Generator, tries: int = 2000) -> PolyMatrix:
    """Basic (not necessarily reduced) encoder with entries of degree <= maxdeg."""
    for _ in range(tries):
        G = random_matrix(F, k, n, maxdeg, rng)
        if is_basic(G):
            return G
    raise RuntimeError("no basic encoder found")


def random_unimodular(F: Field, k: int, rng: np.random.Generator, steps: int = 4, maxdeg: int = 2) -> PolyMatrix:
    """Product of random elementary row operations (add a polynomial multiple, scale, swap)."""
    rows = [[Poly(F, (int(i == j),)) for j in range(k)] for i in range(k)]
    for _ in range(steps):
        kind = int(rng.integers(0, 3)) if k > 1 else 1
        if kind == 0:
            i, j = rng.choice(k, size=2, replace=False).tolist()
            f = random_poly(F, maxdeg, rng)
            rows[i] = [a + f * b for a, b in zip(rows[i], rows[j])]
        elif kind == 1:
            i = int(rng.integers(0, k))
            c = int(rng.integers(1, F.q))
            rows[i] = [a * c for a in rows[i]]
        else:
            i, j = rng.choice(k, size=2, replace=False).tolist()
            rows[i], rows[j] = rows[j], rows[i]
    return PolyMatrix(F, rows, n=k)


def random_monomial(F: Field, n: int, rng: np.random.Generator) -> MonomialMatrix:
    perm = tuple(int(x) for x in rng.permutation(n))
    scalars = tuple(int(x) for x in rng.integers(1, F.q, size=n))
    return MonomialMatrix(F, perm, scalars)


def random_zmonomial(F: Field, n: int, rng: np.random.Generator, lo: int = -2, hi: int = 2) -> ZMonomialMatrix:
    M = random_monomial(F, n, rng)
    exps = tuple(int(x) for x in rng.integers(lo, hi + 1, size=n))
    return ZMonomialMatrix(F, M.perm, M.scalars, exps)


def polynomial_zmonomial(G: PolyMatrix, rng: np.random.Generator, lo: int = -2, hi: int = 2) -> ZMonomialMatrix:
    """Random z-monomial M with G M polynomial: negative exponents are clipped at the column delays."""
    from .equivalence import column_delays

    F = G.field
    M = random_monomial(F, G.n, rng)
    d = column_delays(G)
    exps = tuple(max(int(rng.integers(lo, hi + 1)), -d[p]) for p in M.perm)
    return ZMonomialMatrix(F, M.perm, M.scalars, exps)


def random_message(F: Field, k: int, maxdeg: int, rng: np.random.Generator) -> tuple[Poly, ...]:
    return tuple(random_poly(F, maxdeg, rng) for _ in range(k))
