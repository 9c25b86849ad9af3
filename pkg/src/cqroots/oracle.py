"""Brute-force multi-start Newton solver for A² = B in Cl(3,0).

Independent of the closed-form engine: it only uses the blade product table.
All starts are iterated together as one batch.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .mv import CL30, Multivector3, inf_norm, product_tensor
from .sqrt import sqrt_mv


@dataclass(frozen=True)
class OracleConfig:
    starts: int = 512
    max_iter: int = 100
    residual_tol: float = 1e-10
    cluster_tol: float = 1e-6
    seed: int = 0
    box: float = 3.0
    max_halvings: int = 30
    # search domain is |A|inf <= max_norm * sqrt(1 + |B|inf); iterates leaving
    # it are diverged.  A rootless B can still be a limit of squares at
    # infinity, so an unbounded search would report spurious near-roots.
    max_norm: float = 20.0

    def bound(self, B: Multivector3) -> float:
        return self.max_norm * float(np.sqrt(1 + inf_norm(B)))

    def __post_init__(self):
        if self.starts < 1:
            raise ValueError("starts must be >= 1")
        if min(self.residual_tol, self.cluster_tol, self.box, self.max_norm) <= 0:
            raise ValueError("tolerances and box sizes must be positive")


def square_batch(A: np.ndarray) -> np.ndarray:
    """Row-wise A² for an (n, 8) array."""
    M = product_tensor(CL30)
    return np.einsum("kij,ni,nj->nk", M, A, A)


def jacobian_batch(A: np.ndarray) -> np.ndarray:
    """d(A²)/dA for each row; ``J[n, k, m]`` is d(A²)_k / dA_m."""
    M = product_tensor(CL30)
    return np.einsum("kmj,nj->nkm", M, A) + np.einsum("kim,ni->nkm", M, A)


def square_jacobian(A: Multivector3) -> np.ndarray:
    return jacobian_batch(A.coeffs[None, :])[0]


def newton_solve(b: np.ndarray, A0: np.ndarray, cfg: OracleConfig, bound: float) -> np.ndarray:
    """Damped Newton from each row of A0; returns the final iterates (NaN if diverged)."""
    A = A0.copy()
    F = square_batch(A) - b
    r = np.linalg.norm(F, axis=1)
    active = np.ones(len(A), dtype=bool)
    stop = 1e-3 * cfg.residual_tol
    for _ in range(cfg.max_iter):
        active &= np.max(np.abs(F), axis=1) > stop
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        # pinv copes with the rank-deficient Jacobian on continuum roots
        step = -np.einsum("nij,nj->ni", np.linalg.pinv(jacobian_batch(A[idx]), rcond=1e-12), F[idx])
        lam = np.ones(idx.size)
        improved = np.zeros(idx.size, dtype=bool)
        A_new, F_new = A[idx].copy(), F[idx].copy()
        for _ in range(cfg.max_halvings + 1):
            todo = ~improved
            if not todo.any():
                break
            trial = A[idx[todo]] + lam[todo, None] * step[todo]
            Ft = square_batch(trial) - b
            ok = np.linalg.norm(Ft, axis=1) < r[idx[todo]]
            sel = np.flatnonzero(todo)[ok]
            A_new[sel], F_new[sel] = trial[ok], Ft[ok]
            improved[sel] = True
            lam[todo] *= 0.5
        A[idx], F[idx] = A_new, F_new
        r[idx] = np.linalg.norm(F_new, axis=1)
        # no descent along the damped Newton direction: stalled
        active[idx[~improved]] = False
        diverged = np.max(np.abs(A), axis=1) > bound
        A[diverged] = np.nan
        active &= ~diverged
    return A


def oracle_roots(B: Multivector3, cfg: OracleConfig = OracleConfig()) -> list[Multivector3]:
    if B.sig != CL30:
        raise ValueError(f"oracle works in Cl(3,0), got {B.sig}")
    rng = np.random.default_rng(cfg.seed)
    A0 = rng.uniform(-cfg.box, cfg.box, size=(cfg.starts, 8))
    A = newton_solve(B.coeffs, A0, cfg, cfg.bound(B))
    A = A[np.all(np.isfinite(A), axis=1)]
    res = np.max(np.abs(square_batch(A) - B.coeffs), axis=1)
    A = A[res <= cfg.residual_tol]

    clusters: list[np.ndarray] = []
    for a in A:
        if not any(np.max(np.abs(a - c)) <= cfg.cluster_tol for c in clusters):
            clusters.append(a)
    out = [Multivector3(c) for c in clusters]
    assert all(inf_norm(X * X - B) <= cfg.residual_tol for X in out)
    return out


@dataclass
class CrossCheckReport:
    B: Multivector3
    oracle_count: int
    engine_count: int
    matched_isolated: int
    on_continuum: int
    oracle_unexplained: list[Multivector3] = field(default_factory=list)
    engine_unreached: list[Multivector3] = field(default_factory=list)
    # engine roots outside the oracle's search domain are not held against it
    engine_out_of_domain: list[Multivector3] = field(default_factory=list)

    @property
    def mismatches(self) -> int:
        return len(self.oracle_unexplained) + len(self.engine_unreached)

    @property
    def ok(self) -> bool:
        return self.mismatches == 0

    def summary(self) -> str:
        return (
            f"engine isolated {self.engine_count}, reached "
            f"{self.engine_count - len(self.engine_unreached) - len(self.engine_out_of_domain)}, "
            f"outside search domain {len(self.engine_out_of_domain)}; "
            f"oracle solutions {self.oracle_count}: {self.matched_isolated} isolated, "
            f"{self.on_continuum} on a continuum; {self.mismatches} mismatches"
        )


def cross_check(B: Multivector3, cfg: OracleConfig = OracleConfig(), match_tol: float = 1e-6,
                continuum_tol: float = 1e-8) -> CrossCheckReport:
    """Compare the oracle's solutions with the engine's root set for the same B."""
    found = oracle_roots(B, cfg)
    sol = sqrt_mv(B)
    roots = sol.roots
    matched = on_cont = 0
    unexplained = []
    for A in found:
        if any(inf_norm(A - R) <= match_tol for R in roots):
            matched += 1
        elif any(f.contains(A, continuum_tol) for f in sol.continua):
            on_cont += 1
        else:
            unexplained.append(A)
    bound = cfg.bound(B)
    outside = [R for R in roots if inf_norm(R) > bound]
    unreached = [
        R for R in roots
        if inf_norm(R) <= bound and not any(inf_norm(A - R) <= match_tol for A in found)
    ]
    return CrossCheckReport(B, len(found), len(roots), matched, on_cont, unexplained, unreached, outside)
