"""Multivectors of the 3-dimensional Clifford algebras Cl(3,0) and Cl(1,2).

A multivector is stored as 8 real coefficients in the fixed blade order
``(1, e1, e2, e3, e12, e13, e23, e123)``.  Products go through a signed
blade-product table that is generated once per signature from bitmask
arithmetic and checked against the anticommutation axioms on import.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from numbers import Real

import numpy as np

BLADES = ("1", "e1", "e2", "e3", "e12", "e13", "e23", "e123")
GRADES = (0, 1, 1, 1, 2, 2, 2, 3)

# bitmask of basis vectors for each blade, bit 0 = e1
_MASKS = (0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111)
_INDEX_OF_MASK = {m: i for i, m in enumerate(_MASKS)}


@dataclass(frozen=True)
class Signature:
    p: int
    q: int

    def __post_init__(self):
        if (self.p, self.q) not in ((3, 0), (1, 2)):
            raise ValueError(f"unsupported signature ({self.p},{self.q}); only (3,0) and (1,2)")

    @property
    def metric(self) -> tuple[int, int, int]:
        return (1,) * self.p + (-1,) * self.q

    @property
    def name(self) -> str:
        return f"cl{self.p}{self.q}"

    def __str__(self):
        return f"Cl({self.p},{self.q})"


CL30 = Signature(3, 0)
CL12 = Signature(1, 2)


def _reorder_sign(a: int, b: int) -> int:
    swaps = 0
    a >>= 1
    while a:
        swaps += bin(a & b).count("1")
        a >>= 1
    return -1 if swaps & 1 else 1


@lru_cache(maxsize=None)
def blade_table(sig: Signature) -> tuple[tuple[tuple[int, int], ...], ...]:
    """``table[i][j] == (k, sign)`` such that ``blade_i * blade_j == sign * blade_k``."""
    metric = sig.metric
    rows = []
    for ma in _MASKS:
        row = []
        for mb in _MASKS:
            sign = _reorder_sign(ma, mb)
            common = ma & mb
            for bit in range(3):
                if common >> bit & 1:
                    sign *= metric[bit]
            row.append((_INDEX_OF_MASK[ma ^ mb], sign))
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def product_tensor(sig: Signature) -> np.ndarray:
    """Structure constants ``M[k, i, j]`` with ``(a b)_k = sum_ij M[k,i,j] a_i b_j``."""
    M = np.zeros((8, 8, 8))
    for i, row in enumerate(blade_table(sig)):
        for j, (k, s) in enumerate(row):
            M[k, i, j] = s
    M.setflags(write=False)
    return M


def check_axioms(sig: Signature) -> None:
    """Raise if the generated table violates e_i e_j + e_j e_i = 2 g_ij."""
    table = blade_table(sig)
    for a in range(1, 4):
        for b in range(1, 4):
            kab, sab = table[a][b]
            kba, sba = table[b][a]
            if a == b:
                ok = kab == 0 and sab == sig.metric[a - 1]
            else:
                ok = kab == kba and sab == -sba
            if not ok:
                raise RuntimeError(f"blade table for {sig} breaks the axioms at e{a} e{b}")
    # the pseudoscalar is central in odd dimension
    for j in range(8):
        if table[7][j] != table[j][7]:
            raise RuntimeError(f"e123 does not commute with {BLADES[j]} in {sig}")


for _sig in (CL30, CL12):
    check_axioms(_sig)


class Multivector3:
    """Immutable multivector with 8 real coefficients and a signature."""

    __slots__ = ("_c", "sig")

    def __init__(self, coeffs=None, sig: Signature = CL30):
        if coeffs is None:
            c = np.zeros(8)
        else:
            c = np.array(coeffs, dtype=float).reshape(-1)
            if c.shape != (8,):
                raise ValueError(f"expected 8 coefficients, got {c.size}")
        if not np.all(np.isfinite(c)):
            raise ValueError("multivector coefficients must be finite")
        c.setflags(write=False)
        self._c = c
        self.sig = sig

    @classmethod
    def blade(cls, name: str, sig: Signature = CL30, coeff: float = 1.0) -> Multivector3:
        c = np.zeros(8)
        c[BLADES.index(name)] = coeff
        return cls(c, sig)

    @classmethod
    def scalar(cls, value: float, sig: Signature = CL30) -> Multivector3:
        return cls.blade("1", sig, value)

    @classmethod
    def from_dict(cls, terms: dict[str, float], sig: Signature = CL30) -> Multivector3:
        c = np.zeros(8)
        for name, value in terms.items():
            c[BLADES.index(name)] += value
        return cls(c, sig)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    def __getitem__(self, blade: str) -> float:
        return float(self._c[BLADES.index(blade)])

    b0 = property(lambda self: float(self._c[0]))
    b1 = property(lambda self: float(self._c[1]))
    b2 = property(lambda self: float(self._c[2]))
    b3 = property(lambda self: float(self._c[3]))
    b12 = property(lambda self: float(self._c[4]))
    b13 = property(lambda self: float(self._c[5]))
    b23 = property(lambda self: float(self._c[6]))
    b123 = property(lambda self: float(self._c[7]))

    def _check(self, other: Multivector3):
        if not isinstance(other, Multivector3):
            return NotImplemented
        if other.sig != self.sig:
            raise ValueError(f"signature mismatch: {self.sig} vs {other.sig}")
        return None

    def __add__(self, other):
        if isinstance(other, Real):
            return self + Multivector3.scalar(float(other), self.sig)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Multivector3(self._c + other._c, self.sig)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Multivector3(-self._c, self.sig)

    def __mul__(self, other):
        if isinstance(other, Real):
            return Multivector3(self._c * float(other), self.sig)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return Multivector3(product_tensor(self.sig) @ other._c @ self._c, self.sig)

    def __rmul__(self, other):
        if isinstance(other, Real):
            return Multivector3(self._c * float(other), self.sig)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, Real):
            return Multivector3(self._c / float(other), self.sig)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector3):
            return NotImplemented
        return self.sig == other.sig and bool(np.array_equal(self._c, other._c))

    def __hash__(self):
        return hash((self.sig, tuple(self._c)))

    def __repr__(self):
        terms = ", ".join(f"{n}={v:g}" for n, v in zip(BLADES, self._c) if v != 0)
        return f"Multivector3({terms or '0'}; {self.sig})"


def geometric_product(a: Multivector3, b: Multivector3) -> Multivector3:
    if a.sig != b.sig:
        raise ValueError(f"signature mismatch: {a.sig} vs {b.sig}")
    return a * b


def add(a: Multivector3, b: Multivector3) -> Multivector3:
    if a.sig != b.sig:
        raise ValueError(f"signature mismatch: {a.sig} vs {b.sig}")
    return a + b


def scale(a: Multivector3, c: float) -> Multivector3:
    return a * c


def neg(a: Multivector3) -> Multivector3:
    return -a


def grade(a: Multivector3, k: int) -> Multivector3:
    if k not in (0, 1, 2, 3):
        raise ValueError(f"grade must be 0..3, got {k}")
    mask = np.array([g == k for g in GRADES])
    return Multivector3(np.where(mask, a.coeffs, 0.0), a.sig)


def inf_norm(a: Multivector3) -> float:
    return float(np.max(np.abs(a.coeffs)))


def approx_eq(a: Multivector3, b: Multivector3, tol: float) -> bool:
    if tol < 0:
        raise ValueError("tolerance must be non-negative")
    return inf_norm(a - b) <= tol
