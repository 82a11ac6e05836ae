from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from convcode.errors import FieldError
from convcode.gf import GF, FieldElement, field_create, smallest_irreducible

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def _polymul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def _reducible_monics(p, m):
    """All products of two monic polynomials of positive degree, degree m."""
    out = set()
    for d in range(1, m):
        for lo in itertools.product(range(p), repeat=d):
            for hi in itertools.product(range(p), repeat=m - d):
                out.add(_polymul(lo + (1,), hi + (1,), p))
    return out


@pytest.mark.parametrize("p,m", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_modulus_is_smallest_irreducible_by_product_scan(p, m):
    bad = _reducible_monics(p, m)
    candidates = sorted(c + (1,) for c in itertools.product(range(p), repeat=m))
    want = next(c for c in candidates if c not in bad)
    assert smallest_irreducible(p, m) == want


def test_known_moduli():
    assert GF(2).modulus == (0, 1)
    assert GF(4).modulus == (1, 1, 1)
    assert GF(9).modulus == (1, 0, 1)


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms_exhaustive(q):
    F = GF(q)
    E = range(q)
    for a, b in itertools.product(E, E):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.sub(F.add(a, b), b) == a
    for a, b, c in itertools.product(E, E, E):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    for a in E:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.pow(a, q - 1) == 1


@pytest.mark.parametrize("q", SMALL_Q)
def test_frobenius_is_additive(q):
    F = GF(q)
    for a, b in itertools.product(range(q), repeat=2):
        assert F.pow(F.add(a, b), F.p) == F.add(F.pow(a, F.p), F.pow(b, F.p))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_prime_field_matches_integers_mod_p(p):
    F = GF(p)
    for a, b in itertools.product(range(p), repeat=2):
        assert F.add(a, b) == (a + b) % p
        assert F.mul(a, b) == (a * b) % p


def test_gf4_presentation():
    F = GF(4)
    a = F.parse_element("a")
    assert a == 2
    assert F.mul(a, a) == 3  # alpha^2 = alpha + 1
    assert F.inv(a) == 3
    assert [F.name(x) for x in range(4)] == ["0", "1", "a", "a2"]


def test_enumeration_order():
    F = GF(4)
    els = list(F)
    assert [e.value for e in els] == [0, 1, 2, 3]
    assert els[0] == F.zero and els[1] == F.one


def test_element_wrapper():
    F = GF(4)
    a = F(2)
    assert a * a == F(3)
    assert a * a.inverse() == F.one
    assert a / a == F.one
    assert -a == a
    assert a + a == F.zero
    assert a ** 3 == F.one
    with pytest.raises(FieldError):
        a + GF(2)(1)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()


def test_errors():
    with pytest.raises(FieldError):
        field_create(4, 1)
    with pytest.raises(FieldError):
        field_create(2, 9)  # 512 > default bound 256
    with pytest.raises(FieldError):
        GF(6)
    with pytest.raises(FieldError):
        FieldElement(GF(2), 2)


@given(st.sampled_from(SMALL_Q), st.data())
def test_division_inverts_multiplication(q, data):
    F = GF(q)
    a = data.draw(st.integers(0, q - 1))
    b = data.draw(st.integers(1, q - 1))
    assert F.div(F.mul(a, b), b) == a


@pytest.mark.parametrize("q", [4, 8, 9, 16])
def test_element_names_round_trip(q):
    F = GF(q)
    for x in range(q):
        assert F.parse_element(F.name(x)) == x
