"""Independent central finite-difference oracles for gradients and Hessians.

The step per coordinate is max(h_rel * |coordinate|, h_abs).  Stencils must
stay inside the open positive octant; points with a coordinate below
BOUNDARY_GUARD are rejected before any field evaluation.
"""

from __future__ import annotations

import numpy as np

from .field import DomainError

GRAD_STEP_REL = 1e-6
HESS_STEP_REL = 1e-4
STEP_ABS = 1e-8
BOUNDARY_GUARD = 1e-8

__all__ = [
    "GRAD_STEP_REL",
    "HESS_STEP_REL",
    "STEP_ABS",
    "BOUNDARY_GUARD",
    "fd_gradient",
    "fd_hessian",
]


def _prepare(p, h_rel, h_abs):
    p = np.asarray(p, dtype=float)
    if p.ndim != 1:
        raise DomainError(f"expected a flat coordinate vector, got shape {p.shape}")
    if not np.all(np.isfinite(p)) or np.any(p <= 0.0):
        raise DomainError(f"stencil base point must be positive and finite, got {p!r}")
    if float(p.min()) < BOUNDARY_GUARD:
        raise DomainError(
            f"point {p!r} is within {BOUNDARY_GUARD} of the boundary; stencil rejected"
        )
    h = np.maximum(h_rel * np.abs(p), h_abs)
    if np.any(p - h <= 0.0):
        raise DomainError(f"stencil of steps {h!r} leaves the positive octant at {p!r}")
    return p, h


def fd_gradient(f, p, h_rel=GRAD_STEP_REL, h_abs=STEP_ABS) -> np.ndarray:
    """Second-order central-difference gradient of the scalar field f at p."""
    p, h = _prepare(p, h_rel, h_abs)
    n = p.size
    g = np.empty(n)
    for i in range(n):
        e = np.zeros(n)
        e[i] = h[i]
        g[i] = (f(p + e) - f(p - e)) / (2.0 * h[i])
    return g


def fd_hessian(f, p, h_rel=HESS_STEP_REL, h_abs=STEP_ABS) -> np.ndarray:
    """Second-order central-difference Hessian of f at p, symmetrized.

    Diagonal entries use the three-point second difference, off-diagonal
    entries the four-point cross stencil.
    """
    p, h = _prepare(p, h_rel, h_abs)
    n = p.size
    H = np.empty((n, n))
    f0 = f(p)
    for i in range(n):
        ei = np.zeros(n)
        ei[i] = h[i]
        H[i, i] = (f(p + ei) - 2.0 * f0 + f(p - ei)) / (h[i] * h[i])
        for j in range(i + 1, n):
            ej = np.zeros(n)
            ej[j] = h[j]
            H[i, j] = (
                f(p + ei + ej) - f(p + ei - ej) - f(p - ei + ej) + f(p - ei - ej)
            ) / (4.0 * h[i] * h[j])
            H[j, i] = H[i, j]
    return 0.5 * (H + H.T)
