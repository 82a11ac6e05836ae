from __future__ import annotations

import pytest
from hypothesis import given

from conftest import rng_for, seeds
from convcode.code import ConvCode, contains, dual, encode
from convcode.errors import NotBasicError
from convcode.gf import GF
from convcode.io import example_encoder
from convcode.polyalg import Poly, PolyMatrix, is_reduced, matrix_degree, parse_poly, weight
from convcode.sampling import random_basic_encoder, random_message, random_reduced_encoder, random_unimodular

F2, F4 = GF(2), GF(4)


def M(rows, F=F2):
    return PolyMatrix.parse(F, rows)


def test_parameters_of_examples():
    C = ConvCode(M([["1", "z", "z", "1+z"]]))
    assert (C.degree, C.forney_indices, C.memory) == (1, (1,), 1)
    C = ConvCode(example_encoder("exa3.2-G"))
    assert (C.degree, C.forney_indices) == (2, (1, 1, 0))
    C = ConvCode(example_encoder("exa4.3-Gb"))
    assert (C.degree, C.forney_indices) == (4, (2, 2))
    assert is_reduced(C.reduced_encoder)
    assert C.transform * C.generator == C.reduced_encoder


def test_constant_encoder_iff_degree_zero():
    C = ConvCode(M([["1", "1", "0"], ["0", "1", "1"]]))
    assert C.degree == 0 and C.memory == 0
    assert ConvCode(M([["1", "z"]])).degree == 1


def test_rejects_non_basic():
    with pytest.raises(NotBasicError):
        ConvCode(M([["z", "z"]]))
    with pytest.raises(NotBasicError):
        ConvCode(M([["1+z", "1+z^2"]]))


def test_encode_examples():
    C = ConvCode(example_encoder("exa3.2-G"))
    u = (Poly(F2), Poly(F2), Poly(F2, (1,)))
    assert encode(C, u) == tuple(Poly(F2, (c,)) for c in (1, 0, 0, 0, 0, 0, 0))
    assert encode(C, (Poly(F2),) * 3) == (Poly(F2),) * 7
    C = ConvCode(example_encoder("exa4.3-G"))
    v = encode(C, (parse_poly(F2, "1+z"), Poly(F2)))
    assert weight(v) == 4


def test_contains():
    C = ConvCode(M([["1", "z", "z", "1+z"]]))
    assert contains(C, (Poly(F2),) * 4) == (Poly(F2),)
    one = Poly(F2, (1,))
    assert contains(C, (one, Poly(F2), Poly(F2), Poly(F2))) is None


@given(seeds)
def test_contains_round_trip(seed):
    rng = rng_for(seed)
    F = [F2, F4][seed % 2]
    C = ConvCode(random_basic_encoder(F, 2, 4, 2, rng))
    u = random_message(F, 2, 4, rng)
    assert contains(C, encode(C, u)) == u


def test_dual_examples():
    assert dual(ConvCode(M([["1", "z", "1+z"]]))) == ConvCode(M([["1", "1", "1"], ["z", "1", "0"]]))
    assert dual(ConvCode(M([["z", "z", "1+z"]]))) == ConvCode(M([["1", "1", "0"], ["z", "1", "z"]]))
    assert dual(ConvCode(M([["1", "0", "0"], ["0", "1", "0"]]))) == ConvCode(M([["0", "0", "1"]]))


@given(seeds)
def test_double_dual(seed):
    rng = rng_for(seed)
    F = [F2, F4][seed % 2]
    n = 2 + seed % 4
    k = 1 + (seed // 4) % (n - 1)
    nu = [int(x) for x in rng.integers(0, 2, size=k)]
    C = ConvCode(random_reduced_encoder(F, nu, n, rng))
    D = C.dual()
    assert (D.k, D.degree) == (n - k, C.degree)
    assert D.dual() == C


@given(seeds)
def test_orbit_invariance(seed):
    rng = rng_for(seed)
    F = [F2, F4][seed % 2]
    nu = [2, 1, 0][: 1 + seed % 3]
    G = random_reduced_encoder(F, nu, 4, rng)
    U = random_unimodular(F, len(nu), rng, steps=5, maxdeg=2)
    C, D = ConvCode(G), ConvCode(U * G)
    assert C == D
    assert C.forney_indices == D.forney_indices == tuple(sorted(nu, reverse=True))
    assert matrix_degree(D.reduced_encoder) == C.degree


def test_inequality():
    assert ConvCode(M([["1", "z", "1+z"]])) != ConvCode(M([["z", "z", "1+z"]]))
