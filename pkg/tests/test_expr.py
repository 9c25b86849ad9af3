import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from cqroots.expr import ParseError, format_cq, format_element, format_mv, format_number, parse
from cqroots.mv import CL12, CL30, Multivector3
from cqroots.quaternion import COQUATERNION, HAMILTON, ComplexQuaternion

from conftest import families, signatures

finite = st.floats(allow_nan=False, allow_infinity=False, width=64)
sparse = st.one_of(st.just(0.0), st.just(1.0), st.just(-1.0), finite)


def test_examples_parse():
    Q = parse("(-1+I/2)+(1+I)k", HAMILTON)
    assert Q == ComplexQuaternion(HAMILTON, -1 + 0.5j, 0, 0, 1 + 1j)
    assert parse("2k", HAMILTON) == parse("2*k", HAMILTON)
    assert parse(" 1 + I i ", HAMILTON) == ComplexQuaternion(HAMILTON, 1, 1j)
    assert parse("2e1", CL30) == Multivector3.blade("e1", CL30, 2)
    assert parse("2e-1", CL30) == Multivector3.scalar(0.2)
    assert parse("1E3e12", CL30) == Multivector3.blade("e12", CL30, 1000)
    assert parse("sqrt(4)e3/2", CL30) == Multivector3.blade("e3")


def test_products_follow_algebra():
    assert parse("ij", HAMILTON) == parse("k", HAMILTON)
    assert parse("jk", COQUATERNION) == parse("-i", COQUATERNION)
    assert parse("e1 e2", CL30) == parse("e12", CL30)
    assert parse("e2 e2", CL12) == parse("-1", CL12)


@pytest.mark.parametrize("text,algebra", [
    ("i + e1", HAMILTON),
    ("e1 + i", CL30),
    ("I e1", CL30),
    ("1 +", HAMILTON),
    ("(1", HAMILTON),
    ("", HAMILTON),
    ("i / j", HAMILTON),
    ("1/0", HAMILTON),
    ("sqrt(-1)", HAMILTON),
    ("sqrt(i)", HAMILTON),
    ("1 $ 2", CL30),
])
def test_parse_errors(text, algebra):
    with pytest.raises(ParseError):
        parse(text, algebra)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse("1 + e1", HAMILTON)
    assert info.value.pos == 4
    assert "position 4" in str(info.value)


def test_formatting():
    assert format_cq(parse("(5+I)+3i+(3-7I)j-Ik", HAMILTON)) == "(5+I)+3i+(3-7I)j-Ik"
    assert format_cq(ComplexQuaternion(HAMILTON)) == "0"
    assert format_cq(ComplexQuaternion(HAMILTON, -1j)) == "-I"
    assert format_cq(ComplexQuaternion(HAMILTON, 0, 1 + 1j)) == "(1+I)i"
    assert format_mv(parse("e12", CL30)) == "e12"
    assert format_mv(parse("0.5e12 - e123", CL30)) == "0.5*e12-e123"
    assert format_number(1 / 3, 4) == "0.3333"
    assert format_number(2.0) == "2"


@given(families.flatmap(lambda f: st.lists(sparse, min_size=8, max_size=8).map(
    lambda c: ComplexQuaternion.from_basis8(f, c))))
def test_round_trip_quaternion(Q):
    assert parse(format_element(Q), Q.family) == Q


@given(signatures.flatmap(lambda s: st.lists(sparse, min_size=8, max_size=8).map(
    lambda c: Multivector3(c, s))))
def test_round_trip_multivector(A):
    assert parse(format_element(A), A.sig) == A


def test_round_trip_fixed_digits():
    rng = np.random.default_rng(3)
    for _ in range(100):
        c = np.round(rng.normal(size=8), 10)
        A = Multivector3(c)
        assert parse(format_mv(A, 15), CL30) == A


def test_sqrt_literal():
    assert parse("sqrt(2)", HAMILTON).coeffs[0] == math.sqrt(2)
