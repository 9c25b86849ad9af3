import numpy as np
import pytest
from hypothesis import given

from cqroots.mv import (
    BLADES,
    CL12,
    CL30,
    Multivector3,
    Signature,
    add,
    approx_eq,
    blade_table,
    geometric_product,
    grade,
    inf_norm,
    neg,
    scale,
)

from conftest import multivectors, signatures


def e(name, sig=CL30, c=1.0):
    return Multivector3.blade(name, sig, c)


def test_signature_rejects_other_pairs():
    for p, q in [(2, 1), (0, 3), (3, 1), (2, 0)]:
        with pytest.raises(ValueError):
            Signature(p, q)


def test_coefficients_must_be_finite():
    with pytest.raises(ValueError):
        Multivector3([np.nan, 0, 0, 0, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        Multivector3([0] * 7)


def test_basis_squares():
    assert geometric_product(e("e1"), e("e1")) == e("1")
    assert geometric_product(e("e12"), e("e12")) == -e("1")
    assert e("e123") * e("e123") == -e("1")


def test_e1_root():
    A = 0.5 * (e("1") + e("e1") + e("e23") - e("e123"))
    assert A * A == e("e1")


def test_orientation_convention():
    # e13 = e1 e3, not e3 e1
    assert e("e1") * e("e3") == e("e13")
    assert e("e3") * e("e1") == -e("e13")
    assert e("e1") * e("e2") * e("e3") == e("e123")


@pytest.mark.parametrize("sig,metric", [(CL30, (1, 1, 1)), (CL12, (1, -1, -1))])
def test_anticommutation(sig, metric):
    vecs = [e(n, sig) for n in ("e1", "e2", "e3")]
    for a in range(3):
        for b in range(3):
            s = vecs[a] * vecs[b] + vecs[b] * vecs[a]
            expected = 2 * metric[a] if a == b else 0
            assert s == Multivector3.scalar(expected, sig)


@pytest.mark.parametrize("sig", [CL30, CL12])
def test_table_is_signed_latin_square(sig):
    table = blade_table(sig)
    for row in table:
        assert sorted(k for k, _ in row) == list(range(8))
    for j in range(8):
        assert sorted(table[i][j][0] for i in range(8)) == list(range(8))


def test_add_scale_neg():
    assert add(e("e1"), e("e2")) == Multivector3.from_dict({"e1": 1, "e2": 1})
    assert scale(e("e123"), -1) == -e("e123")
    A = Multivector3(np.arange(8.0))
    assert add(A, neg(A)) == Multivector3()


def test_signature_mismatch():
    with pytest.raises(ValueError):
        geometric_product(e("e1", CL30), e("e1", CL12))
    with pytest.raises(ValueError):
        add(e("e1", CL30), e("e1", CL12))


def test_grade():
    B = Multivector3.from_dict({"1": 1, "e1": 1, "e12": 1, "e123": 1})
    assert grade(B, 2) == e("e12")
    assert grade(e("e23"), 1) == Multivector3()
    with pytest.raises(ValueError):
        grade(B, 4)


@given(multivectors())
def test_grade_decomposition(B):
    assert grade(B, 0) + grade(B, 1) + grade(B, 2) + grade(B, 3) == B


def test_norms():
    A = Multivector3(np.linspace(-1, 1, 8))
    assert approx_eq(A, A, 0)
    assert inf_norm(Multivector3()) == 0
    assert inf_norm(2 * e("e1") - 3 * e("e123")) == 3
    with pytest.raises(ValueError):
        approx_eq(A, A, -1)


@given(signatures.flatmap(lambda s: multivectors(s).flatmap(
    lambda a: multivectors(s).flatmap(lambda b: multivectors(s).map(lambda c: (a, b, c))))))
def test_associative_and_distributive(abc):
    a, b, c = abc
    scale_ = (1 + inf_norm(a)) * (1 + inf_norm(b)) * (1 + inf_norm(c))
    assert inf_norm((a * b) * c - a * (b * c)) <= 1e-12 * scale_
    assert inf_norm(a * (b + c) - (a * b + a * c)) <= 1e-13 * scale_


@given(signatures.flatmap(lambda s: multivectors(s)))
def test_pseudoscalar_is_central(A):
    I3 = e("e123", A.sig)
    assert inf_norm(I3 * A - A * I3) == 0


def test_blade_lookup_names():
    A = Multivector3(np.arange(8.0))
    assert [A[n] for n in BLADES] == list(range(8))
    assert (A.b0, A.b1, A.b2, A.b3, A.b12, A.b13, A.b23, A.b123) == tuple(range(8))
