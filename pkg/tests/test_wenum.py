from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from convcode.errors import PreconditionError
from convcode.wenum import ONE, WPoly, WSeries, series_invert, series_one, we_of_set, we_of_weights

wpolys = st.lists(st.integers(-5, 5), max_size=6).map(WPoly)
pos_wpolys = st.lists(st.integers(0, 5), max_size=6).map(WPoly)


def test_we_of_set():
    assert we_of_set([(0, 0), (1, 0), (1, 1)]) == WPoly.parse("1+W+W^2")
    assert we_of_set([(1, 0), (1, 0)]) == WPoly.parse("W")
    assert we_of_set([]) == WPoly()
    arr = np.array(list(itertools.product(range(2), repeat=3)))
    assert we_of_set(arr) == WPoly.parse("1+3W+3W^2+W^3")
    assert we_of_weights([2, 2, 0]) == WPoly.parse("1+2W^2")


def test_parse_and_str():
    for text in ["0", "1", "W", "2W^3", "1+2W+W^2", "-1-W^5", "3-2W^2"]:
        assert str(WPoly.parse(text)) == text
    assert WPoly.parse("W^5") == WPoly.monomial(5)


@given(wpolys)
def test_parse_round_trip(p):
    assert WPoly.parse(str(p)) == p


@given(pos_wpolys, pos_wpolys)
def test_delay_additive(a, b):
    assert (a * b).delay == a.delay + b.delay
    assert (a * b).deg == a.deg + b.deg
    assert (a * b).mass() == a.mass() * b.mass()


@given(wpolys, wpolys, wpolys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert a - a == WPoly()


def test_invert_one_plus():
    phi = WSeries([ONE, WPoly(), WPoly.monomial(5)], 6)
    inv = series_invert(phi)
    assert inv[2] == WPoly.parse("-W^5")
    assert inv[4] == WPoly.parse("W^10")
    assert inv[6] == WPoly.parse("-W^15")
    assert inv[1] == inv[3] == inv[5] == WPoly()


@given(st.lists(wpolys, min_size=1, max_size=6), st.integers(1, 8))
def test_invert_is_inverse(tail, order):
    phi = WSeries([ONE, *tail], order)
    assert phi * series_invert(phi) == series_one(order)
    assert series_invert(phi) * phi == series_one(order)


def test_invert_needs_unit_constant():
    with pytest.raises(PreconditionError):
        series_invert(WSeries([WPoly.parse("2")], 3))
