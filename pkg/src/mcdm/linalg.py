"""Dense kernels: dominant eigenpair by power iteration and supermatrix limits."""

from __future__ import annotations

import logging

import numpy as np

from .errors import NoConvergence, ValidationError

log = logging.getLogger(__name__)

EIG_TOL = 1e-12
EIG_MAX_ITER = 10_000
LIMIT_TOL = 1e-10
LIMIT_MAX_ITER = 1_000
# W^(2^64): any power sequence that converges in double precision has done so by then
MAX_SQUARINGS = 64


def _square(M) -> np.ndarray:
    M = np.asarray(M, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] == 0:
        raise ValidationError(f"expected a non-empty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValidationError("matrix entries must be finite")
    return M


def principal_eigenpair(M, tol: float = EIG_TOL, max_iter: int = EIG_MAX_ITER):
    """Dominant eigenvalue and its eigenvector (non-negative, summing to 1).

    Power iteration from the uniform vector, re-normalizing to unit sum at each
    step. For a non-negative ``v`` with unit sum the eigenvalue estimate is
    simply ``sum(M @ v)``. Stops once both the estimate and the vector move by
    less than ``tol``.
    """
    M = _square(M)
    if np.any(M < 0):
        raise ValidationError("power iteration requires non-negative entries")
    if np.any(M.sum(axis=1) <= 0):
        raise ValidationError("every row needs at least one positive entry")
    n = M.shape[0]
    v = np.full(n, 1.0 / n)
    lam = float((M @ v).sum())
    for it in range(1, max_iter + 1):
        w = M @ v
        lam_new = float(w.sum())
        w /= lam_new
        done = abs(lam_new - lam) < tol and np.max(np.abs(w - v)) < tol
        v, lam = w, lam_new
        if done:
            log.debug("power iteration converged after %d steps", it)
            return lam, v
    raise NoConvergence(f"power iteration did not converge in {max_iter} iterations")


def _check_stochastic(W: np.ndarray) -> None:
    if np.any(W < 0):
        raise ValidationError("supermatrix entries must be non-negative")
    sums = W.sum(axis=0)
    bad = [j for j, s in enumerate(sums) if s != 0 and abs(s - 1.0) > 1e-9]
    if bad:
        raise ValidationError(
            f"supermatrix columns {bad} neither sum to 1 nor are all zero")


def _power_limit(W: np.ndarray, tol: float, budget: int):
    """Square repeatedly until successive powers agree; returns (P, multiplications used)."""
    P = W
    used = 0
    while used < min(budget, MAX_SQUARINGS):
        Q = P @ P
        used += 1
        if np.max(np.abs(Q - P)) < tol:
            return Q, used
        P = Q
    return None, used


def limit_supermatrix(W, tol: float = LIMIT_TOL, max_iter: int = LIMIT_MAX_ITER) -> np.ndarray:
    """Limit of the powers of a column-stochastic supermatrix.

    Powers are taken by iterated squaring. A stable power that is not a fixed
    point of ``W`` (``W @ P != P``) means the powers cycle; the Cesaro average
    is then obtained as the plain limit of the lazy matrix ``(I + W) / 2``,
    which is aperiodic and shares that average. All-zero columns stay zero.
    ``max_iter`` bounds the total number of matrix multiplications.
    """
    W = _square(W)
    _check_stochastic(W)
    P, used = _power_limit(W, tol, max_iter)
    if P is not None and np.max(np.abs(W @ P - P)) < tol:
        return np.clip(P, 0.0, 1.0)
    log.debug("supermatrix powers cycle; falling back to Cesaro averaging")
    lazy = 0.5 * (np.eye(W.shape[0]) + W)
    P, _ = _power_limit(lazy, tol, max_iter - used)
    if P is None or np.max(np.abs(W @ P - P)) >= 10 * tol:
        raise NoConvergence(f"supermatrix limit not reached within {max_iter} multiplications")
    return np.clip(P, 0.0, 1.0)
