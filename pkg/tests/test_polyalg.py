from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rng_for, seeds
from convcode import linalg
from convcode.errors import ParseError, PreconditionError
from convcode.gf import GF
from convcode.polyalg import (
    INF,
    Poly,
    PolyMatrix,
    delay,
    degree,
    det,
    forney_indices,
    format_poly,
    hermite_form,
    hermite_with_transform,
    inverse_unimodular,
    is_basic,
    is_reduced,
    is_unimodular,
    matrix_degree,
    maximal_minors,
    parse_poly,
    reduce,
    right_kernel_basis,
    row_reduce,
    same_row_space,
    solve_left,
    weight,
)
from convcode.sampling import random_basic_encoder, random_message, random_poly, random_reduced_encoder, random_unimodular

F2, F4 = GF(2), GF(4)


def P(text, F=F2):
    return parse_poly(F, text)


def M(rows, F=F2):
    return PolyMatrix.parse(F, rows)


# Poly


def test_deg_and_delay_conventions():
    z = Poly(F2)
    assert z.deg == -INF and z.delay == INF
    assert P("z^2+z^3").delay == 2 and P("z^2+z^3").deg == 3


@given(seeds)
def test_ring_axioms(seed):
    rng = rng_for(seed)
    F = [F2, F4, GF(3)][seed % 3]
    a, b, c = (random_poly(F, 4, rng) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a
    if a and b:
        assert (a * b).deg == a.deg + b.deg


@given(seeds)
def test_divmod(seed):
    rng = rng_for(seed)
    F = [F2, F4, GF(5)][seed % 3]
    a, b = random_poly(F, 6, rng), random_poly(F, 3, rng, exact=True)
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.deg < b.deg


def test_shift():
    assert P("1+z").shift(2) == P("z^2+z^3")
    assert P("z^2+z^3").shift(-2) == P("1+z")
    with pytest.raises(PreconditionError):
        P("1+z").shift(-1)


@pytest.mark.parametrize("text", ["0", "1", "z", "1+z+z^2", "z^3+z^7"])
def test_text_round_trip_gf2(text):
    assert format_poly(P(text)) == text


def test_text_gf4():
    f = P("1+a*z+a2*z^2", F4)
    assert f.coeffs == (1, 2, 3)
    assert parse_poly(F4, str(f)) == f


def test_parse_error():
    with pytest.raises(ParseError):
        parse_poly(F2, "1+y")


# vectors


def test_weight_examples():
    assert weight((Poly(F2),) * 3) == 0
    assert weight(M([["1", "z", "z", "1+z"]]).rows[0]) == 5
    G = M([["z^2+z+1", "1", "0"], ["z^2", "z+1", "z^2"]])
    assert weight(G.left_mul_vector((P("1+z"), P("0")))) == 4


def test_delay_examples():
    assert delay((Poly(F2),)) == INF
    assert delay((P("z"), P("z"), P("1+z"))) == 0
    assert delay((P("z^2"), P("z^3"))) == 2


@given(seeds)
def test_weight_properties(seed):
    rng = rng_for(seed)
    u, v = random_message(F4, 3, 4, rng), random_message(F4, 3, 4, rng)
    s = tuple(a + b for a, b in zip(u, v))
    assert weight(s) <= weight(u) + weight(v)
    assert weight(tuple(a * 2 for a in u)) == weight(u)
    assert weight(tuple(a.shift(3) for a in u)) == weight(u)


# degree, minors, basic, reduced


def test_matrix_degree_examples():
    assert matrix_degree(M([["1", "0"], ["1", "1"]])) == 0
    assert matrix_degree(M([["1", "z", "0"], ["1", "1", "1"]])) == 1
    assert matrix_degree(M([["z^2+z+1", "1", "0"], ["z^2", "z+1", "z^2"]])) == 4


def test_det_brute_force_permutation_expansion():
    G = M([["1+z", "z", "1"], ["z^2", "1", "0"], ["1", "z", "1+z^2"]])
    total = Poly(F2)
    for perm in itertools.permutations(range(3)):
        term = Poly(F2, (1,))
        for i, j in enumerate(perm):
            term = term * G[i, j]
        total = total + term  # characteristic 2: signs do not matter
    assert det(G.rows, F2) == total


def _basic_by_evaluation(G: PolyMatrix, max_ext: int) -> bool:
    """Full rank of G(lambda) for every lambda in GF(2^m), m <= max_ext (binary G only)."""
    for m in range(1, max_ext + 1):
        E = GF(2**m)
        for lam in range(E.q):
            V = [[_eval_in(E, p, lam) for p in r] for r in G.rows]
            if linalg.rank(E, V) < G.k:
                return False
    return True


def _eval_in(E, p: Poly, lam: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = E.add(E.mul(acc, lam), c)
    return acc


def test_is_basic_examples():
    assert is_basic(M([["1", "0", "z"], ["0", "1", "1+z^2"]]))
    assert not is_basic(M([["z", "z"]]))
    assert is_basic(M([["1", "z", "z", "1+z"]]))


@given(seeds)
def test_is_basic_matches_evaluation_oracle(seed):
    rng = rng_for(seed)
    k = 1 + seed % 2
    G = PolyMatrix(F2, [[random_poly(F2, 2, rng) for _ in range(3)] for _ in range(k)])
    if all(not p for p in maximal_minors(G)):
        assert not is_basic(G)
        return
    # minors have degree <= 4, so every irreducible factor has a root in GF(2^m), m <= 4
    assert is_basic(G) == _basic_by_evaluation(G, 4)


def test_is_reduced_examples():
    assert is_reduced(M([["1", "1"], ["0", "1"]]))
    assert is_reduced(M([["z^2+z+1", "1", "0"], ["z^2", "z+1", "z^2"]]))
    assert not is_reduced(M([["z^3+z^2+z", "1", "0"], ["z^3", "z+1", "1"]]))
    assert is_reduced(M([["1+z", "0", "z"], ["1", "1", "1"]]))
    with pytest.raises(PreconditionError):
        is_reduced(M([["0", "0"], ["1", "z"]]))


def test_reduce_nonreduced_example():
    Gb = M([["z^3+z^2+z", "1", "0"], ["z^3", "z+1", "1"]])
    U, R = reduce(Gb)
    assert is_reduced(R) and forney_indices(R) == (2, 2)
    assert U * Gb == R and is_unimodular(U)
    assert R == M([["z", "1+z^2", "z"], ["z+z^2", "z", "1"]])


def test_reduce_fixed_point():
    G = M([["1", "z", "0"], ["1", "1", "1"]])
    U, R = reduce(G)
    assert R == G and U == PolyMatrix.identity(F2, 2)


@given(seeds)
def test_reduce_recovers_row_degrees(seed):
    rng = rng_for(seed)
    F = [F2, F4][seed % 2]
    k = 1 + seed % 3
    nu = sorted(rng.integers(0, 3, size=k).tolist(), reverse=True)
    G = random_reduced_encoder(F, nu, k + 1, rng)
    U = random_unimodular(F, k, rng, steps=4, maxdeg=3)
    V, R = reduce(U * G)
    assert is_reduced(R)
    assert sorted(R.row_degrees(), reverse=True) == nu
    assert same_row_space(R, G)
    assert matrix_degree(U * G) == matrix_degree(G) == sum(nu)


@given(seeds)
def test_predictable_degree_property(seed):
    rng = rng_for(seed)
    nu = [2, 1, 0][: 1 + seed % 3]
    G = random_reduced_encoder(F2, nu, 4, rng)
    u = random_message(F2, len(nu), 3, rng)
    if all(not p for p in u):
        return
    want = max(p.deg + d for p, d in zip(u, nu) if p)
    assert degree(G.left_mul_vector(u)) == want


@given(seeds)
def test_row_reduce_works_on_nonbasic_full_rank(seed):
    rng = rng_for(seed)
    G = PolyMatrix(F2, [[random_poly(F2, 3, rng) for _ in range(3)] for _ in range(2)])
    if all(not p for p in maximal_minors(G)):
        return
    U, R = row_reduce(G)
    assert U * G == R and is_reduced(R) and is_unimodular(U)


# Hermite form and kernels


def test_hermite_example():
    H = hermite_form(M([["1", "1", "1"], ["z", "1", "0"]]))
    assert H == M([["1", "1", "1"], ["0", "1+z", "z"]])
    assert hermite_form(PolyMatrix.identity(F2, 3)) == PolyMatrix.identity(F2, 3)


@given(seeds)
def test_hermite_is_orbit_invariant(seed):
    rng = rng_for(seed)
    F = [F2, F4][seed % 2]
    G = random_basic_encoder(F, 2, 4, 2, rng)
    U = random_unimodular(F, 2, rng, steps=5)
    assert hermite_form(U * G) == hermite_form(G)
    T, H, piv = hermite_with_transform(G)
    assert T * G == H


def test_kernel_examples():
    H = right_kernel_basis(M([["1", "z", "1+z"]]))
    assert same_row_space(H, M([["1", "1", "1"], ["z", "1", "0"]]))
    Hb = right_kernel_basis(M([["z", "z", "1+z"]]))
    assert same_row_space(Hb, M([["1", "1", "0"], ["z", "1", "z"]]))
    K = right_kernel_basis(M([["1", "0", "0"], ["0", "1", "0"]]))
    assert same_row_space(K, M([["0", "0", "1"]]))


@given(seeds)
def test_kernel_properties(seed):
    rng = rng_for(seed)
    F = [F2, F4][seed % 2]
    k, n = 1 + seed % 2, 4
    G = random_basic_encoder(F, k, n, 2, rng)
    H = right_kernel_basis(G)
    assert H.k == n - k
    assert all(not p for r in (G * H.transpose()).rows for p in r)
    assert is_basic(H)
    assert matrix_degree(H) == matrix_degree(G)
    assert same_row_space(right_kernel_basis(H), G)


@given(seeds)
def test_solve_left(seed):
    rng = rng_for(seed)
    G = random_basic_encoder(F2, 2, 4, 2, rng)
    u = random_message(F2, 2, 3, rng)
    assert solve_left(G, G.left_mul_vector(u)) == u


def test_solve_left_rejects_non_member():
    G = M([["1", "z", "z", "1+z"]])
    assert solve_left(G, (P("1"), P("0"), P("0"), P("0"))) is None


@given(seeds)
def test_inverse_unimodular(seed):
    rng = rng_for(seed)
    U = random_unimodular(F4, 3, rng, steps=6)
    assert inverse_unimodular(U) * U == PolyMatrix.identity(F4, 3)
