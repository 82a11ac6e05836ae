from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings

from conftest import rng_for, seeds
from convcode import linalg
from convcode.code import ConvCode
from convcode.equivalence import (
    MonomialMatrix,
    ZMonomialMatrix,
    code_isometric,
    code_me,
    code_strongly_isometric,
    column_delays,
    is_delay_free,
    matrix_me,
    matrix_zme,
    me_key,
    orbit_size,
    paired_isometry,
    reduced_encoder_orbit,
    reduced_encoder_transforms,
    sliding_matrix,
    weight_profile_constant,
    zme_key,
)
from convcode.errors import BudgetExceededError, NotPolynomialError, NotReducedError, PreconditionError
from convcode.gf import GF
from convcode.io import example_encoder
from convcode.polyalg import Poly, PolyMatrix, is_reduced, weight
from convcode.sampling import (
    polynomial_zmonomial,
    random_basic_encoder,
    random_matrix,
    random_message,
    random_monomial,
    random_reduced_encoder,
    random_unimodular,
)

F2, F3, F4 = GF(2), GF(3), GF(4)


def M(rows, F=F2):
    return PolyMatrix.parse(F, rows)


def test_monomial_convention():
    G = M([["1", "z", "1+z"]])
    Mo = MonomialMatrix(F2, (2, 0, 1), (1, 1, 1))
    assert Mo.apply(G) == M([["1+z", "1", "z"]])
    prod = linalg.matmul(F2, [[1, 0, 1]], Mo.matrix(), 3)
    assert prod == [[1, 1, 0]]
    Mz = ZMonomialMatrix(F3, (1, 0), (2, 1), (1, -1))
    assert Mz.apply(M([["z", "z^2"]], F3)) == M([["2z^3", "1"]], F3)
    with pytest.raises(ValueError):
        MonomialMatrix(F2, (0, 0), (1, 1))
    with pytest.raises(ValueError):
        MonomialMatrix(F3, (0, 1), (1, 0))


def test_zmonomial_leaving_polynomials():
    G = M([["1", "z", "1+z"]])
    with pytest.raises(NotPolynomialError):
        ZMonomialMatrix.diagonal(F2, (-1, 0, 0)).apply(G)
    assert ZMonomialMatrix.diagonal(F2, (0, -1, 0)).apply(G) == M([["1", "1", "1+z"]])


@given(seeds)
def test_group_laws(seed):
    rng = rng_for(seed)
    F = [F2, F3, F4][seed % 3]
    G = random_matrix(F, 2, 4, 2, rng)
    A, B = random_monomial(F, 4, rng), random_monomial(F, 4, rng)
    assert (A @ B).apply(G) == B.apply(A.apply(G))
    assert A.inverse().apply(A.apply(G)) == G
    Za = ZMonomialMatrix.from_monomial(A)
    Zb = ZMonomialMatrix(F, B.perm, B.scalars, tuple(int(x) for x in rng.integers(0, 3, size=4)))
    assert (Za @ Zb).apply(G) == Zb.apply(Za.apply(G))
    assert Zb.inverse().apply(Zb.apply(G)) == G


@given(seeds)
@settings(max_examples=100)
def test_matrix_me_finds_witness(seed):
    rng = rng_for(seed)
    F = [F2, F3, F4][seed % 3]
    G = random_matrix(F, 1 + seed % 3, 4, 2, rng)
    Mo = random_monomial(F, 4, rng)
    W = matrix_me(G, Mo.apply(G))
    assert W is not None and W.apply(G) == Mo.apply(G)
    assert me_key(G) == me_key(Mo.apply(G))


@given(seeds)
@settings(max_examples=100)
def test_matrix_zme_finds_witness(seed):
    rng = rng_for(seed)
    F = [F2, F3, F4][seed % 3]
    G = random_matrix(F, 1 + seed % 3, 4, 2, rng)
    Mz = polynomial_zmonomial(G, rng)
    Gb = Mz.apply(G)
    W = matrix_zme(G, Gb)
    assert W is not None and W.apply(G) == Gb
    assert zme_key(G) == zme_key(Gb)
    back = matrix_zme(Gb, G)
    assert back is not None and back.apply(Gb) == G


def test_matrix_me_negative():
    assert matrix_me(M([["1", "z"]]), M([["1", "1+z"]])) is None
    assert matrix_me(M([["z", "1"]]), M([["1", "z"]])) is not None
    assert matrix_zme(M([["1", "z"]]), M([["1", "1"]])) is not None
    assert matrix_me(M([["1", "z"]]), M([["1", "1"]])) is None
    assert matrix_me(M([["1", "z"]]), M([["1", "z", "0"]])) is None


def test_sliding_matrix():
    assert sliding_matrix(M([["1", "z"]]), 1) == [[1, 0, 0, 1, 0, 0], [0, 0, 1, 0, 0, 1]]
    with pytest.raises(PreconditionError):
        sliding_matrix(M([["1", "z^2"]]), 1)


@given(seeds)
def test_sliding_matrix_encodes(seed):
    rng = rng_for(seed)
    F = [F2, F3][seed % 2]
    G = random_matrix(F, 2, 3, 2, rng)
    S = sliding_matrix(G, 2)
    u = random_message(F, 2, 2, rng)
    flat = [u[i][t] for t in range(3) for i in range(2)]
    v = linalg.vecmat(F, flat, S, 15)
    full = G.left_mul_vector(u)
    assert v == [full[c][t] for t in range(5) for c in range(3)]


def test_paired_isometry_examples():
    G, Gb = example_encoder("exa4.3-G"), example_encoder("exa4.3-Gb")
    assert paired_isometry(G, Gb)
    assert not paired_isometry(G, example_encoder("exa4.3-Gt1"))
    assert paired_isometry(M([["1", "z", "1+z"]]), M([["z", "z", "1+z"]]))
    assert not paired_isometry(M([["1", "z"]]), M([["1", "1+z"]]))
    with pytest.raises(BudgetExceededError):
        paired_isometry(G, Gb, budget=10)


def test_weight_profile_constant():
    assert weight_profile_constant([[1, 1, 0], [0, 1, 1]], F2).tolist() == [0, 2, 2, 2]


def _orbit_by_filter(F, nu):
    """All U with deg u_ij <= max nu such that U G stays reduced with row degrees nu for a generic G."""
    k = len(nu)
    top = max(nu)
    polys = [Poly(F, c) for c in itertools.product(range(F.q), repeat=top + 1)]
    # a reduced test matrix with row degrees nu and identity leading coefficients
    G = PolyMatrix(F, [[Poly(F, (0,) * d + (1,)) if j == i else Poly(F) for j in range(k)] for i, d in enumerate(nu)], n=k)
    count = 0
    for entries in itertools.product(polys, repeat=k * k):
        U = PolyMatrix(F, [list(entries[i * k:(i + 1) * k]) for i in range(k)], n=k)
        H = U * G
        if list(H.row_degrees()) == list(nu) and is_reduced(H):
            count += 1
    return count


@pytest.mark.parametrize("nu", [(1, 0), (1, 1), (2, 0), (0, 0)])
def test_orbit_size_matches_filter(nu):
    assert orbit_size(2, nu) == _orbit_by_filter(F2, nu)
    assert orbit_size(2, nu) == sum(1 for _ in reduced_encoder_transforms(F2, nu))


def test_orbit_examples():
    assert orbit_size(3, (2,)) == 2
    assert orbit_size(2, (1, 1, 0)) == 96
    assert orbit_size(2, (2, 2)) == 6
    G = M([["1", "z", "z", "1+z"]])
    assert list(reduced_encoder_orbit(G)) == [G]
    with pytest.raises(NotReducedError):
        list(reduced_encoder_orbit(example_encoder("exa4.3-Gb")))
    with pytest.raises(BudgetExceededError):
        list(reduced_encoder_transforms(F2, (3, 0, 0), budget=100))


@given(seeds)
@settings(max_examples=50)
def test_code_me_on_monomial_images(seed):
    rng = rng_for(seed)
    F = [F2, F3][seed % 2]
    nu = [(1,), (1, 0), (1, 1), (2, 0)][seed % 4]
    C = ConvCode(random_reduced_encoder(F, nu, 4, rng))
    U = random_unimodular(F, C.k, rng, steps=3, maxdeg=1)
    Cb = ConvCode(random_monomial(F, 4, rng).apply(U * C.generator))
    w = code_me(C, Cb)
    assert w is not None and w.verify()
    assert ConvCode(w.M.apply(C.generator)) == Cb


def test_code_verdicts_on_examples():
    C, Cb = ConvCode(example_encoder("exa3.3-G")), ConvCode(example_encoder("exa3.3-Gb"))
    assert code_me(C, Cb) is None
    assert code_strongly_isometric(C, Cb) is not None
    C, Cb = ConvCode(example_encoder("exa4.2-G")), ConvCode(example_encoder("exa4.2-Gb"))
    assert code_me(C, Cb) is None and code_isometric(C, Cb) is None
    C, Cb = ConvCode(M([["1", "z", "1+z"]])), ConvCode(M([["z", "z", "1+z"]]))
    w = code_strongly_isometric(C, Cb)
    assert w is not None and w.verify() and code_me(C, Cb) is None
    C, Cb = ConvCode(example_encoder("exa4.3-G")), ConvCode(example_encoder("exa4.3-Gb"))
    w = code_isometric(C, Cb)
    assert w is not None and w.verify()
    assert code_strongly_isometric(C, Cb) is None


@given(seeds)
@settings(max_examples=40)
def test_code_isometric_on_zmonomial_images(seed):
    rng = rng_for(seed)
    F = [F2, F3][seed % 2]
    nu = [(1,), (1, 0), (1, 1), (2,)][seed % 4]
    G = random_reduced_encoder(F, nu, 3, rng)
    Gb = polynomial_zmonomial(G, rng, -1, 2).apply(G)
    try:
        Cb = ConvCode(Gb)
    except PreconditionError:
        return
    w = code_isometric(ConvCode(G), Cb)
    assert w is not None and w.verify()
    for _ in range(5):
        u = random_message(F, G.k, 3, rng)
        v = w.G.left_mul_vector(u)
        assert weight(w.M.apply_vector(v)) == weight(v)


def test_shape_mismatch():
    with pytest.raises(PreconditionError):
        code_me(ConvCode(M([["1", "z"]])), ConvCode(M([["1", "z", "1"]])))
    assert code_me(ConvCode(M([["1", "z", "0"]])), ConvCode(M([["1", "1", "1"]]))) is None


def test_delay_helpers():
    assert column_delays(M([["z", "0", "z^2+z"], ["z^2", "0", "1"]])) == (1, 0, 0)
    assert is_delay_free(M([["1", "z"], ["z", "1"]]))
    assert not is_delay_free(M([["1", "z"], ["0", "z"]]))


@given(seeds)
@settings(max_examples=30)
def test_basic_encoders_have_unit_orbit(seed):
    rng = rng_for(seed)
    G = random_basic_encoder(F2, 2, 3, 2, rng)
    assert code_me(ConvCode(G), ConvCode(G)) is not None
