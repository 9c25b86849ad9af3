"""All square roots of a Cl(3,0) multivector, and of complex quaternions via Cl(3,0).

A root is written ``A = s + v + (S + V) e123`` with scalars ``s, S`` and
vectors ``v, V``.  Because e123 is central and squares to -1, ``s + S e123``
behaves like a complex number ``z`` and the problem reduces to a quadratic in
``z²``.  The chain is

    discriminants -> tT_pairs -> sS_from_tT -> vV_solve

where ``t = sS`` and ``T = (S² - s²)/2``.  Every isolated candidate is squared
and checked before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .isomaps import BasisMap, default_map, from_mv, to_mv
from .mv import CL30, Multivector3, inf_norm
from .quaternion import ComplexQuaternion

VERIFY_RTOL = 1e-10
BRANCH_RTOL = 1e-12


@dataclass(frozen=True)
class TtPair:
    t: float
    T: float


@dataclass(frozen=True)
class ScalarPair:
    s: float
    S: float


@dataclass(frozen=True)
class Isolated:
    root: Multivector3
    residual: float = 0.0


@dataclass(frozen=True)
class ContinuumFamily:
    """Roots ``v + V e123`` with ``v² - V² = b0`` and ``2 v.V = b123``."""

    b0: float
    b123: float

    def sample(self, V, phase: float) -> Multivector3 | None:
        return continuum_sample(self, V, phase)

    def target(self) -> Multivector3:
        return Multivector3.from_dict({"1": self.b0, "e123": self.b123})

    def contains(self, A: Multivector3, tol: float = 1e-8) -> bool:
        """True when A has no scalar/pseudoscalar part and meets both constraints."""
        v, V = split_vectors(A)
        if abs(A.b0) > tol or abs(A.b123) > tol:
            return False
        return abs(v @ v - V @ V - self.b0) <= tol and abs(2 * v @ V - self.b123) <= tol


@dataclass(frozen=True)
class SqrtSolution:
    branches: tuple = field(default_factory=tuple)

    @property
    def roots(self) -> list[Multivector3]:
        return [b.root for b in self.branches if isinstance(b, Isolated)]

    @property
    def continua(self) -> list[ContinuumFamily]:
        return [b for b in self.branches if isinstance(b, ContinuumFamily)]

    def __bool__(self):
        return bool(self.branches)

    def __len__(self):
        return len(self.branches)

    def __iter__(self):
        return iter(self.branches)


def _require_cl30(B: Multivector3):
    if B.sig != CL30:
        raise ValueError(f"square roots are computed in Cl(3,0), got {B.sig}")


def compose(s: float, S: float, v, V) -> Multivector3:
    """Build ``s + v + (S + V) e123``; note e1 e123 = e23, e2 e123 = -e13, e3 e123 = e12."""
    return Multivector3([s, v[0], v[1], v[2], V[2], -V[1], V[0], S])


def split_vectors(A: Multivector3) -> tuple[np.ndarray, np.ndarray]:
    """Inverse of :func:`compose` for the vector parts: returns ``(v, V)``."""
    c = A.coeffs
    return np.array([c[1], c[2], c[3]]), np.array([c[6], -c[5], c[4]])


def discriminants(B: Multivector3) -> tuple[float, float, float]:
    _require_cl30(B)
    b0, b1, b2, b3, b12, b13, b23, b123 = B.coeffs
    bS = b0**2 - b1**2 - b2**2 - b3**2 + b12**2 + b13**2 + b23**2 - b123**2
    bI = 2 * b3 * b12 - 2 * b2 * b13 + 2 * b1 * b23 - 2 * b0 * b123
    return float(bS), float(bI), float(bS**2 + bI**2)


def vector_invariant(B: Multivector3) -> complex:
    """``c = w·w`` for the complex vector ``w = b + i (b23, -b13, b12)``."""
    _require_cl30(B)
    b0, b1, b2, b3, b12, b13, b23, b123 = B.coeffs
    w = np.array([b1 + 1j * b23, b2 - 1j * b13, b3 + 1j * b12])
    return complex(w @ w)


def tT_pairs(bS: float, bI: float, D: float, b0: float, b123: float,
             c: complex | None = None) -> list[TtPair]:
    """The (t, T) pairs.  There always is at least one; rootless inputs are
    rejected later, in :func:`vV_solve`.

    With ``P = -4T + 4it``, the pairs are ``P = beta0 -+ w`` where
    ``beta0 = b0 + i b123`` and ``w² = bS - i bI``.  The smaller one is taken
    from ``P1 P2 = c`` to avoid cancellation; pass ``c`` (see
    :func:`vector_invariant`) for full accuracy.  When ``D == 0`` the two
    pairs coincide and only one is returned.  ``D`` is accepted for symmetry
    with :func:`discriminants`; the square root is recomputed with hypot,
    which cannot underflow.
    """
    rootD = math.hypot(bS, bI)
    beta0 = complex(b0, b123)
    if c is None:
        c = beta0 * beta0 - complex(bS, -bI)
    if rootD == 0:
        return [TtPair(b123 / 4, -b0 / 4)]
    # w = y - i r with r >= 0; x = -bS + sqrt(D) has no cancellation either way
    x = bI * bI / (rootD + bS) if bS > 0 else rootD - bS
    r = math.sqrt(x / 2)
    y = math.sqrt(max(rootD + bS, 0.0) / 2)
    y = math.copysign(y, bI) if r > 0 else y
    w = complex(y, -r)
    minus, plus = beta0 - w, beta0 + w
    if abs(minus) >= abs(plus):
        plus = c / minus if minus != 0 else plus
    else:
        minus = c / plus
    return [TtPair(P.imag / 4, -P.real / 4) for P in (minus, plus)]


def sS_from_tT(p: TtPair) -> list[ScalarPair]:
    t, T = p.t, p.T
    if t == 0:
        if T > 0:
            S = math.sqrt(2 * T)
            return [ScalarPair(0.0, S), ScalarPair(0.0, -S)]
        if T < 0:
            s = math.sqrt(-2 * T)
            return [ScalarPair(s, 0.0), ScalarPair(-s, 0.0)]
        return [ScalarPair(0.0, 0.0)]
    r = math.hypot(t, T)
    # take the larger of s² = r - T and S² = r + T first, then divide
    if T > 0:
        S = math.copysign(math.sqrt(r + T), t)
        s = t / S
    else:
        s = math.sqrt(r - T)
        S = t / s
    return [ScalarPair(s, S), ScalarPair(-s, -S)]


def vV_solve(B: Multivector3, sp: ScalarPair):
    """An :class:`Isolated` root, a :class:`ContinuumFamily`, or None."""
    _require_cl30(B)
    b0, b1, b2, b3, b12, b13, b23, b123 = B.coeffs
    s, S = sp.s, sp.S
    n = s * s + S * S
    tol = BRANCH_RTOL * inf_norm(B)
    flat = max(abs(b1), abs(b2), abs(b3), abs(b12), abs(b13), abs(b23)) <= tol
    if flat and n <= tol:
        return ContinuumFamily(float(b0), float(b123))
    if n > 0:
        # tiny n is legitimate when the matching vector part is tiny too;
        # the caller's residual check rejects anything spurious
        d = 2 * n
        v = ((b1 * s + b23 * S) / d, (b2 * s - b13 * S) / d, (b3 * s + b12 * S) / d)
        V = ((b23 * s - b1 * S) / d, -(b13 * s + b2 * S) / d, (b12 * s - b3 * S) / d)
        return Isolated(compose(s, S, v, V))
    return None


def _canonical(R: Multivector3, tol: float) -> Multivector3:
    for c in R.coeffs:
        if abs(c) > tol:
            return R if c > 0 else -R
    return R


def sqrt_mv(B: Multivector3, rtol: float = VERIFY_RTOL) -> SqrtSolution:
    _require_cl30(B)
    bS, bI, D = discriminants(B)
    pairs = tT_pairs(bS, bI, D, B.b0, B.b123, vector_invariant(B))

    scale = 1 + inf_norm(B)
    reps: list[Multivector3] = []
    continua: list[ContinuumFamily] = []
    for p in pairs:
        for sp in sS_from_tT(p):
            branch = vV_solve(B, sp)
            if isinstance(branch, ContinuumFamily):
                if branch not in continua:
                    continua.append(branch)
            elif isinstance(branch, Isolated):
                R = branch.root
                if inf_norm(R * R - B) > rtol * scale:
                    continue
                R = _canonical(R, 1e-12 * inf_norm(R))
                if not any(inf_norm(R - Q) <= 1e-9 * inf_norm(R) for Q in reps):
                    reps.append(R)

    reps.sort(key=lambda R: tuple(-R.coeffs))
    branches: list = []
    for R in reps:
        for X in (R, -R):
            branches.append(Isolated(X, inf_norm(X * X - B)))
    branches.extend(continua)
    return SqrtSolution(tuple(branches))


def _orthonormal_pair(n: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    axis = np.eye(3)[int(np.argmin(np.abs(n)))]
    u1 = np.cross(n, axis)
    u1 /= np.linalg.norm(u1)
    return u1, np.cross(n, u1)


def continuum_sample(f: ContinuumFamily, V, phase: float) -> Multivector3 | None:
    """One member ``v + V e123`` of a continuum, or None if V is infeasible.

    v is split into a part along V fixed by ``v.V = b123/2`` and a part in the
    plane orthogonal to V whose length is fixed by ``v² - V² = b0``; ``phase``
    picks its direction in that plane.
    """
    V = np.asarray(V, dtype=float)
    if V.shape != (3,) or not np.all(np.isfinite(V)):
        raise ValueError("V must be a finite 3-vector")
    c = f.b123 / 2
    VV = float(V @ V)
    tol = 1e-12 * (1 + abs(f.b0) + abs(f.b123) + VV)
    if VV == 0:
        if abs(c) > tol or f.b0 < -tol:
            return None
        r = math.sqrt(max(f.b0, 0.0))
        v = r * np.array([math.cos(phase), math.sin(phase), 0.0])
        return compose(0.0, 0.0, v, V)
    w2 = f.b0 + VV - c * c / VV
    if w2 < -tol:
        return None
    u1, u2 = _orthonormal_pair(V / math.sqrt(VV))
    v = (c / VV) * V + math.sqrt(max(w2, 0.0)) * (math.cos(phase) * u1 + math.sin(phase) * u2)
    return compose(0.0, 0.0, v, V)


@dataclass(frozen=True)
class QuaternionSqrtSolution:
    """Roots of a complex quaternion; continua stay in Cl(3,0) form with their map."""

    input: ComplexQuaternion
    basis_map: BasisMap
    roots: tuple[ComplexQuaternion, ...]
    residuals: tuple[float, ...]
    continua: tuple[ContinuumFamily, ...]

    def __bool__(self):
        return bool(self.roots or self.continua)

    def sample(self, V, phase: float, which: int = 0) -> ComplexQuaternion | None:
        A = continuum_sample(self.continua[which], V, phase)
        return None if A is None else from_mv(A, self.basis_map)


def cq_residual(R: ComplexQuaternion, Q: ComplexQuaternion) -> float:
    return float(np.max(np.abs((R * R - Q).basis8())))


def sqrt_cq(Q: ComplexQuaternion, basis_map: BasisMap | None = None, rtol: float = VERIFY_RTOL):
    m = basis_map or default_map(Q.family)
    sol = sqrt_mv(to_mv(Q, m), rtol)
    roots = tuple(from_mv(R, m) for R in sol.roots)
    return QuaternionSqrtSolution(
        Q, m, roots, tuple(cq_residual(R, Q) for R in roots), tuple(sol.continua)
    )
