import numpy as np
import pytest
from hypothesis import given

from cqroots.expr import parse
from cqroots.quaternion import (
    CONECTORINE,
    COQUATERNION,
    FAMILIES,
    HAMILTON,
    NECTORINE,
    ComplexQuaternion,
    QuaternionFamily,
    conj_complex,
    conj_quat,
    cq_mul,
    inverse,
    is_zero_divisor,
    matrix_rep,
    norm_squared,
    norm_squared_via_products,
    pseudo_norm,
    pseudo_norm_closed_form,
)

from conftest import families, quaternions


def H(text):
    return parse(text, HAMILTON)


# (family, product table rows as "ab=c") straight from the defining relations
RELATIONS = {
    HAMILTON: {("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j")},
    COQUATERNION: {("i", "i"): (-1, "1"), ("j", "j"): (1, "1"), ("i", "j"): (1, "k"),
                   ("j", "k"): (-1, "i"), ("k", "i"): (1, "j")},
    CONECTORINE: {("k", "k"): (-1, "1"), ("i", "i"): (1, "1"), ("i", "j"): (1, "k"),
                  ("j", "k"): (-1, "i"), ("k", "i"): (-1, "j")},
    NECTORINE: {("j", "j"): (-1, "1"), ("k", "k"): (1, "1"), ("i", "j"): (1, "k"),
                ("j", "k"): (1, "i"), ("i", "k"): (1, "j")},
}


@pytest.mark.parametrize("family", list(RELATIONS), ids=lambda f: f.name)
def test_tables_match_relations(family):
    for (a, b), want in RELATIONS[family].items():
        assert family.product(a, b) == want


@pytest.mark.parametrize("family", list(RELATIONS), ids=lambda f: f.name)
def test_triple_product(family):
    i, j, k = (ComplexQuaternion.unit(family, u) for u in "ijk")
    assert i * j * k == ComplexQuaternion(family, family.triple)


def test_inconsistent_family_rejected():
    with pytest.raises(ValueError):
        QuaternionFamily("bogus", (1, 1, 1), 1).table


def test_product_examples():
    assert H("1+i+(1-2I)j") * H("3-Ij") == H("(5+I)+3i+(3-7I)j-Ik")
    assert H("1+Ii") * H("1-Ii") == H("0")
    X = H("(i+j+k)+I(j-k)")
    assert X * X == H("-1")
    N = H("i+Ij")
    assert N * N == H("0")


def test_family_mismatch():
    with pytest.raises(ValueError):
        cq_mul(ComplexQuaternion(HAMILTON, 1), ComplexQuaternion(NECTORINE, 1))


def test_from_parts_and_basis8():
    Q = ComplexQuaternion.from_parts(HAMILTON, 1, 2, 3, 4, 5, 6, 7, 8)
    assert Q.coeffs.tolist() == [1 + 2j, 3 + 4j, 5 + 6j, 7 + 8j]
    assert Q.basis8().tolist() == [1, 3, 5, 7, 2, 4, 6, 8]
    assert ComplexQuaternion.from_basis8(HAMILTON, Q.basis8()) == Q
    assert ComplexQuaternion.unit(HAMILTON, "Ik") == ComplexQuaternion(HAMILTON, 0, 0, 0, 1j)


def test_conjugations():
    Q = H("(1+2I)+(3-I)i+4Ij-k")
    assert conj_complex(Q) == H("(1-2I)+(3+I)i-4Ij-k")
    assert conj_quat(Q) == H("(1+2I)-(3-I)i-4Ij+k")


@given(families.flatmap(quaternions))
def test_pseudo_norm_is_scalar_part_of_q_qstar(Q):
    P = Q * conj_quat(Q)
    assert abs(P.coeffs[0] - pseudo_norm(Q)) == 0
    assert np.max(np.abs(P.coeffs[1:])) <= 1e-12 * (1 + norm_squared(Q))


@given(quaternions(HAMILTON))
def test_pseudo_norm_closed_form(Q):
    assert abs(pseudo_norm(Q) - pseudo_norm_closed_form(Q)) <= 1e-12 * (1 + norm_squared(Q))


def test_pseudo_norm_real_hamilton_is_sum_of_squares():
    assert pseudo_norm(H("1+2i+3j+4k")) == 30


def test_zero_divisors_and_inverse():
    Z = H("1+Ii")
    assert pseudo_norm(Z) == 0
    assert is_zero_divisor(Z)
    assert inverse(Z) is None
    Q = H("(1+2I)+3i-Ik")
    Qi = inverse(Q)
    one = H("1")
    assert np.max(np.abs((Q * Qi - one).coeffs)) < 1e-14
    assert np.max(np.abs((Qi * Q - one).coeffs)) < 1e-14


@given(quaternions(HAMILTON), quaternions(HAMILTON))
def test_matrix_rep_is_homomorphism(P, Q):
    err = np.max(np.abs(matrix_rep(P * Q) - matrix_rep(P) @ matrix_rep(Q)))
    assert err <= 1e-13 * (1 + norm_squared(P)) * (1 + norm_squared(Q))


def test_matrix_rep_hamilton_only():
    with pytest.raises(ValueError):
        matrix_rep(ComplexQuaternion(COQUATERNION, 1))


@given(quaternions(HAMILTON))
def test_norm_squared_product_path(Q):
    P = norm_squared_via_products(Q)
    assert abs(P.coeffs[0] - norm_squared(Q)) <= 1e-12 * (1 + norm_squared(Q))
    assert np.max(np.abs(P.coeffs[1:])) <= 1e-12 * (1 + norm_squared(Q))


def test_norm_squared_value():
    assert norm_squared(H("(1+2I)+3Ii-k")) == 1 + 4 + 9 + 1


def test_families_dict():
    assert set(FAMILIES) == {"hamilton", "coquaternion", "conectorine", "nectorine"}
