"""Signed basis bijections between complex quaternions and Cl(3,0) / Cl(1,2).

A map is a signed permutation of 8 basis elements, stored as data so that the
homomorphism property can be checked exhaustively on all 64 basis products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .mv import BLADES, CL12, CL30, Multivector3, Signature, blade_table
from .quaternion import (
    BASIS8,
    COQUATERNION,
    CONECTORINE,
    FAMILIES,
    HAMILTON,
    NECTORINE,
    ComplexQuaternion,
    QuaternionFamily,
)


def _basis_product(source, x: int, y: int) -> tuple[int, int]:
    """Product of two source basis elements as ``(index, sign)``, in integers."""
    if isinstance(source, Signature):
        return blade_table(source)[x][y]
    ux, ix = x % 4, x // 4
    uy, iy = y % 4, y // 4
    w, sign = source.table[ux][uy]
    n_i = ix + iy
    if n_i == 2:
        sign, n_i = -sign, 0
    return w + 4 * n_i, sign


def _labels(source) -> tuple[str, ...]:
    return BLADES if isinstance(source, Signature) else BASIS8


@dataclass(frozen=True)
class BasisMap:
    name: str
    source: QuaternionFamily | Signature
    target: Signature
    entries: tuple[tuple[int, int], ...]  # source index -> (target blade index, sign)

    def __post_init__(self):
        if len(self.entries) != 8:
            raise ValueError("a basis map needs 8 entries")
        if sorted(k for k, _ in self.entries) != list(range(8)):
            raise ValueError(f"{self.name}: entries are not a bijection onto the blades")
        if any(s not in (1, -1) for _, s in self.entries):
            raise ValueError(f"{self.name}: signs must be +1 or -1")
        if self.entries[0] != (0, 1):
            raise ValueError(f"{self.name}: unit must map to +1")

    @classmethod
    def from_labels(cls, name, source, target, images: dict[str, str]) -> BasisMap:
        labels = _labels(source)
        entries = []
        for label in labels:
            img = images.get(label, label if label == "1" else None)
            if img is None:
                raise ValueError(f"{name}: no image for {label}")
            sign = -1 if img.startswith("-") else 1
            entries.append((BLADES.index(img.lstrip("-")), sign))
        return cls(name, source, target, tuple(entries))

    @cached_property
    def matrix(self) -> np.ndarray:
        """Signed permutation ``P`` with ``target_coeffs = P @ source_coeffs``."""
        P = np.zeros((8, 8))
        for x, (k, s) in enumerate(self.entries):
            P[k, x] = s
        P.setflags(write=False)
        return P

    def image(self, label: str) -> str:
        k, s = self.entries[_labels(self.source).index(label)]
        return ("-" if s < 0 else "") + BLADES[k]

    def squared_signs(self) -> tuple[int, ...]:
        """Sign of x² for each source basis element (the header row of a table)."""
        out = []
        for x in range(8):
            w, s = _basis_product(self.source, x, x)
            assert w == 0
            out.append(s)
        return tuple(out)

    def _check_source(self, obj):
        if isinstance(self.source, Signature):
            if not isinstance(obj, Multivector3) or obj.sig != self.source:
                raise ValueError(f"{self.name} expects a {self.source} multivector")
        elif not isinstance(obj, ComplexQuaternion) or obj.family != self.source:
            raise ValueError(f"{self.name} expects a {self.source} quaternion")

    def forward(self, obj) -> Multivector3:
        self._check_source(obj)
        src = obj.coeffs if isinstance(obj, Multivector3) else obj.basis8()
        return Multivector3(self.matrix @ src, self.target)

    def backward(self, A: Multivector3):
        if A.sig != self.target:
            raise ValueError(f"{self.name} expects a {self.target} multivector, got {A.sig}")
        src = self.matrix.T @ A.coeffs
        if isinstance(self.source, Signature):
            return Multivector3(src, self.source)
        return ComplexQuaternion.from_basis8(self.source, src)


def to_mv(Q, m: BasisMap) -> Multivector3:
    return m.forward(Q)


def from_mv(A: Multivector3, m: BasisMap):
    return m.backward(A)


@dataclass(frozen=True)
class HomomorphismReport:
    ok: bool
    failure: str | None = None

    def __bool__(self):
        return self.ok


def verify_homomorphism(m: BasisMap) -> HomomorphismReport:
    """Check ``m(x y) == m(x) m(y)`` on all 64 ordered basis pairs in integer arithmetic."""
    labels = _labels(m.source)
    target = blade_table(m.target)
    for x in range(8):
        for y in range(8):
            w, s = _basis_product(m.source, x, y)
            kw, sw = m.entries[w]
            lhs = (kw, s * sw)
            kx, sx = m.entries[x]
            ky, sy = m.entries[y]
            kt, st = target[kx][ky]
            rhs = (kt, sx * sy * st)
            if lhs != rhs:
                got = ("-" if rhs[1] < 0 else "") + BLADES[rhs[0]]
                want = ("-" if lhs[1] < 0 else "") + BLADES[lhs[0]]
                return HomomorphismReport(
                    False, f"{m.name}: {labels[x]}*{labels[y]} maps to {want} but images multiply to {got}"
                )
    return HomomorphismReport(True)


HAMILTON_CL30 = BasisMap.from_labels(
    "hamilton->cl30", HAMILTON, CL30,
    {"i": "e12", "j": "-e13", "k": "e23", "I": "e123", "Ii": "-e3", "Ij": "-e2", "Ik": "-e1"},
)
# The naive table sends k -> e3 and Ik -> e12, which breaks ij = k
# (e23 e2 = -e3).  Flipping k and Ik repairs it and leaves the other six
# entries untouched.
NAIVE_COQUATERNION_CL30 = BasisMap.from_labels(
    "coquaternion->cl30 (naive)", COQUATERNION, CL30,
    {"i": "e23", "j": "e2", "k": "e3", "I": "e123", "Ii": "-e1", "Ij": "-e13", "Ik": "e12"},
)
COQUATERNION_CL30 = BasisMap.from_labels(
    "coquaternion->cl30", COQUATERNION, CL30,
    {"i": "e23", "j": "e2", "k": "-e3", "I": "e123", "Ii": "-e1", "Ij": "-e13", "Ik": "-e12"},
)
CONECTORINE_CL30 = BasisMap.from_labels(
    "conectorine->cl30", CONECTORINE, CL30,
    {"i": "e1", "j": "e2", "k": "e12", "I": "e123", "Ii": "e23", "Ij": "-e13", "Ik": "-e3"},
)
NECTORINE_CL30 = BasisMap.from_labels(
    "nectorine->cl30", NECTORINE, CL30,
    {"i": "e1", "j": "e12", "k": "e2", "I": "e123", "Ii": "e23", "Ij": "-e3", "Ik": "-e13"},
)
CL30_CL12 = BasisMap.from_labels(
    "cl30->cl12", CL30, CL12,
    {"e1": "e1", "e2": "e13", "e3": "e12", "e12": "e3", "e13": "e2", "e23": "e23", "e123": "e123"},
)
COQUATERNION_CL12 = BasisMap.from_labels(
    "coquaternion->cl12", COQUATERNION, CL12,
    {"i": "e2", "j": "e1", "k": "-e12", "I": "e123", "Ii": "e13", "Ij": "e23", "Ik": "-e3"},
)

# root extraction always goes through Cl(3,0)
DEFAULT_MAPS = {
    HAMILTON.name: HAMILTON_CL30,
    COQUATERNION.name: COQUATERNION_CL30,
    CONECTORINE.name: CONECTORINE_CL30,
    NECTORINE.name: NECTORINE_CL30,
}


def builtin_maps() -> list[BasisMap]:
    return [HAMILTON_CL30, COQUATERNION_CL30, CONECTORINE_CL30, NECTORINE_CL30, CL30_CL12, COQUATERNION_CL12]


def default_map(family: QuaternionFamily | str) -> BasisMap:
    name = family if isinstance(family, str) else family.name
    if name not in FAMILIES:
        raise KeyError(f"unknown quaternion family {name!r}")
    return DEFAULT_MAPS[name]
