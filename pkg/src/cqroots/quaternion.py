"""Complexified quaternions of the four non-commutative families.

Each family is fixed by the signs of i², j², k² and of the triple product
ijk; the full 4x4 basis table is derived from those four signs.  A complex
quaternion holds four complex coefficients ``q0 + q1 i + q2 j + q3 k`` with
the imaginary unit ``I`` commuting with i, j, k.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from numbers import Complex

import numpy as np

UNITS = ("1", "i", "j", "k")
# real basis order used for the 8-component view and the basis maps
BASIS8 = ("1", "i", "j", "k", "I", "Ii", "Ij", "Ik")


@dataclass(frozen=True)
class QuaternionFamily:
    name: str
    squares: tuple[int, int, int]
    triple: int

    @cached_property
    def table(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """``table[a][b] == (c, sign)`` with ``unit_a unit_b == sign * unit_c``."""
        a, b, c = self.squares
        t = self.triple
        if a != -b * c:
            raise ValueError(f"{self.name}: squares {self.squares} admit no anticommuting basis")
        # solve ijk = t for the mixed products, using x⁻¹ = x² x for a unit x
        ij, jk, ik = t * c, a * t, a * t * c
        table = [[None] * 4 for _ in range(4)]
        for u in range(4):
            table[0][u] = table[u][0] = (u, 1)
        table[1][1], table[2][2], table[3][3] = (0, a), (0, b), (0, c)
        table[1][2], table[2][1] = (3, ij), (3, -ij)
        table[2][3], table[3][2] = (1, jk), (1, -jk)
        table[1][3], table[3][1] = (2, ik), (2, -ik)
        return tuple(tuple(row) for row in table)

    @cached_property
    def tensor(self) -> np.ndarray:
        T = np.zeros((4, 4, 4))
        for u, row in enumerate(self.table):
            for v, (w, s) in enumerate(row):
                T[w, u, v] = s
        T.setflags(write=False)
        return T

    def product(self, a: str, b: str) -> tuple[int, str]:
        """Sign and unit of the product of two unit names, e.g. ``('k','i') -> (1,'j')``."""
        w, s = self.table[UNITS.index(a)][UNITS.index(b)]
        return s, UNITS[w]

    def __str__(self):
        return self.name


HAMILTON = QuaternionFamily("hamilton", (-1, -1, -1), -1)
COQUATERNION = QuaternionFamily("coquaternion", (-1, 1, 1), 1)
CONECTORINE = QuaternionFamily("conectorine", (1, 1, -1), -1)
NECTORINE = QuaternionFamily("nectorine", (1, -1, 1), 1)
FAMILIES = {f.name: f for f in (HAMILTON, COQUATERNION, CONECTORINE, NECTORINE)}


class ComplexQuaternion:
    """Immutable ``Q = q0 + q1 i + q2 j + q3 k`` with complex ``q_l``."""

    __slots__ = ("family", "_q")

    def __init__(self, family: QuaternionFamily, q0=0, q1=0, q2=0, q3=0):
        q = np.array([q0, q1, q2, q3], dtype=complex)
        if not np.all(np.isfinite(q)):
            raise ValueError("quaternion coefficients must be finite")
        q.setflags(write=False)
        self.family = family
        self._q = q

    @classmethod
    def from_parts(cls, family, q0r=0.0, q0i=0.0, q1r=0.0, q1i=0.0, q2r=0.0, q2i=0.0, q3r=0.0, q3i=0.0):
        return cls(family, complex(q0r, q0i), complex(q1r, q1i), complex(q2r, q2i), complex(q3r, q3i))

    @classmethod
    def from_basis8(cls, family: QuaternionFamily, x) -> ComplexQuaternion:
        """Inverse of :meth:`basis8`."""
        x = np.asarray(x, dtype=float)
        return cls(family, *(x[:4] + 1j * x[4:]))

    @classmethod
    def unit(cls, family: QuaternionFamily, name: str, coeff: complex = 1) -> ComplexQuaternion:
        q = [0j] * 4
        if name.startswith("I"):
            coeff = coeff * 1j
            name = name[1:] or "1"
        q[UNITS.index(name)] = coeff
        return cls(family, *q)

    @property
    def coeffs(self) -> np.ndarray:
        return self._q

    def basis8(self) -> np.ndarray:
        """Real coefficients in the order ``1, i, j, k, I, Ii, Ij, Ik``."""
        return np.concatenate([self._q.real, self._q.imag])

    def _same(self, other):
        if other.family != self.family:
            raise ValueError(f"family mismatch: {self.family} vs {other.family}")

    def __add__(self, other):
        if isinstance(other, Complex):
            return ComplexQuaternion(self.family, *(self._q + np.array([other, 0, 0, 0])))
        if not isinstance(other, ComplexQuaternion):
            return NotImplemented
        self._same(other)
        return ComplexQuaternion(self.family, *(self._q + other._q))

    __radd__ = __add__

    def __neg__(self):
        return ComplexQuaternion(self.family, *(-self._q))

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Complex):
            return ComplexQuaternion(self.family, *(self._q * complex(other)))
        if not isinstance(other, ComplexQuaternion):
            return NotImplemented
        self._same(other)
        return ComplexQuaternion(self.family, *(self.family.tensor @ other._q @ self._q))

    def __rmul__(self, other):
        if isinstance(other, Complex):
            return ComplexQuaternion(self.family, *(self._q * complex(other)))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Complex):
            return ComplexQuaternion(self.family, *(self._q / complex(other)))
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, ComplexQuaternion):
            return NotImplemented
        return self.family == other.family and bool(np.array_equal(self._q, other._q))

    def __hash__(self):
        return hash((self.family.name, tuple(self._q)))

    def __repr__(self):
        return f"ComplexQuaternion({self.family.name}, {', '.join(map(str, self._q))})"


def cq_mul(P: ComplexQuaternion, Q: ComplexQuaternion) -> ComplexQuaternion:
    if P.family != Q.family:
        raise ValueError(f"family mismatch: {P.family} vs {Q.family}")
    return P * Q


def conj_complex(Q: ComplexQuaternion) -> ComplexQuaternion:
    return ComplexQuaternion(Q.family, *np.conj(Q.coeffs))


def conj_quat(Q: ComplexQuaternion) -> ComplexQuaternion:
    q = Q.coeffs
    return ComplexQuaternion(Q.family, q[0], -q[1], -q[2], -q[3])


def pseudo_norm(Q: ComplexQuaternion) -> complex:
    """The complex scalar ``Q Q★``."""
    return complex((Q * conj_quat(Q)).coeffs[0])


def pseudo_norm_closed_form(Q: ComplexQuaternion) -> complex:
    """``-sum_p (q_pi - I q_pr)^2``; valid for the Hamilton family only."""
    if Q.family != HAMILTON:
        raise ValueError("closed-form pseudo-norm applies to the Hamilton family")
    q = Q.coeffs
    return complex(-np.sum((q.imag - 1j * q.real) ** 2))


def norm_squared(Q: ComplexQuaternion) -> float:
    return float(np.sum(np.abs(Q.coeffs) ** 2))


def norm_squared_via_products(Q: ComplexQuaternion) -> ComplexQuaternion:
    """``(Q (Q★)* + Q* Q★) / 2``.  A positive real scalar for Hamilton only."""
    return (Q * conj_complex(conj_quat(Q)) + conj_complex(Q) * conj_quat(Q)) * 0.5


def is_zero_divisor(Q: ComplexQuaternion) -> bool:
    return abs(pseudo_norm(Q)) <= 1e-12 * (1.0 + norm_squared(Q))


def inverse(Q: ComplexQuaternion) -> ComplexQuaternion | None:
    """Two-sided inverse ``Q★ / (Q Q★)``, or None for zero divisors and nilpotents."""
    if is_zero_divisor(Q):
        return None
    return conj_quat(Q) / pseudo_norm(Q)


_ONE = np.eye(2, dtype=complex)
_IH = np.array([[1j, 0], [0, -1j]])
_JH = np.array([[0, 1], [-1, 0]], dtype=complex)
_KH = np.array([[0, 1j], [1j, 0]])


def matrix_rep(Q: ComplexQuaternion) -> np.ndarray:
    """2x2 complex matrix of a Hamilton biquaternion."""
    if Q.family != HAMILTON:
        raise ValueError("matrix representation is defined for the Hamilton family only")
    q0, q1, q2, q3 = Q.coeffs
    return q0 * _ONE + q1 * _IH + q2 * _JH + q3 * _KH
