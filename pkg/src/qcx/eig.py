"""Dependency-light eigenvalue routines for small symmetric matrices.

The 3x3 path evaluates the trigonometric closed form of the characteristic
cubic (cf. Kopp, "Efficient numerical diagonalization of hermitian 3x3
matrices", 2008) and falls back to cyclic Jacobi sweeps when the cubic
discriminant is nearly degenerate.  Inputs are pre-scaled by the largest
entry so that matrices with entries far above sqrt(DBL_MAX) stay safe.
numpy.linalg serves as the reference oracle in the tests only, never in
the library paths that produce certificates.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = ["eig2_sym", "eigvals3_sym", "jacobi_eigvals3", "min_eig3"]

# switch to Jacobi when |r| of the trigonometric form is this close to 1
_DEGENERATE_R = 1e-10


def eig2_sym(a11, a22, a12):
    """Eigenvalues (ascending) and unit eigenvector columns of [[a11,a12],[a12,a22]]."""
    a11, a22, a12 = float(a11), float(a22), float(a12)
    mid = 0.5 * (a11 + a22)
    d = math.hypot(0.5 * (a11 - a22), a12)
    w = np.array([mid - d, mid + d])
    if a12 == 0.0:
        V = np.eye(2) if a11 <= a22 else np.eye(2)[:, ::-1].copy()
    else:
        v = np.array([a12, w[0] - a11])
        alt = np.array([w[0] - a22, a12])
        if alt @ alt > v @ v:
            v = alt
        v = v / math.hypot(v[0], v[1])
        V = np.column_stack([v, [-v[1], v[0]]])
    return w, V


def _det3(B):
    return (
        B[0, 0] * (B[1, 1] * B[2, 2] - B[1, 2] * B[2, 1])
        - B[0, 1] * (B[1, 0] * B[2, 2] - B[1, 2] * B[2, 0])
        + B[0, 2] * (B[1, 0] * B[2, 1] - B[1, 1] * B[2, 0])
    )


def jacobi_eigvals3(M, max_sweeps=64, tol=1e-15) -> np.ndarray:
    """Eigenvalues (ascending) by cyclic Jacobi rotations; robust fallback."""
    A = np.array(M, dtype=float, copy=True)
    s = float(np.max(np.abs(A)))
    if s == 0.0:
        return np.zeros(3)
    A /= s
    for _ in range(max_sweeps):
        off = math.sqrt(A[0, 1] ** 2 + A[0, 2] ** 2 + A[1, 2] ** 2)
        if off <= tol:
            break
        for i, j in ((0, 1), (0, 2), (1, 2)):
            if A[i, j] == 0.0:
                continue
            phi = 0.5 * math.atan2(2.0 * A[i, j], A[j, j] - A[i, i])
            c, sn = math.cos(phi), math.sin(phi)
            J = np.eye(3)
            J[i, i] = c
            J[j, j] = c
            J[i, j] = sn
            J[j, i] = -sn
            A = J.T @ A @ J
            A = 0.5 * (A + A.T)
    return np.sort(np.diagonal(A)) * s


def eigvals3_sym(M) -> np.ndarray:
    """All eigenvalues of a symmetric 3x3 matrix, ascending."""
    A = np.asarray(M, dtype=float)
    if A.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {A.shape}")
    s = float(np.max(np.abs(A)))
    if not math.isfinite(s):
        raise ValueError("matrix has nonfinite entries")
    if s == 0.0:
        return np.zeros(3)
    B = A / s
    p1 = B[0, 1] ** 2 + B[0, 2] ** 2 + B[1, 2] ** 2
    if p1 == 0.0:
        return np.sort(np.diagonal(B)) * s
    q = (B[0, 0] + B[1, 1] + B[2, 2]) / 3.0
    p2 = (B[0, 0] - q) ** 2 + (B[1, 1] - q) ** 2 + (B[2, 2] - q) ** 2 + 2.0 * p1
    p = math.sqrt(p2 / 6.0)
    C = (B - q * np.eye(3)) / p
    r = 0.5 * _det3(C)
    r = min(1.0, max(-1.0, r))
    if abs(r) > 1.0 - _DEGENERATE_R:
        return jacobi_eigvals3(B) * s
    phi = math.acos(r) / 3.0
    hi = q + 2.0 * p * math.cos(phi)
    lo = q + 2.0 * p * math.cos(phi + 2.0 * math.pi / 3.0)
    mid = 3.0 * q - hi - lo
    return np.sort(np.array([lo, mid, hi])) * s


def min_eig3(M) -> float:
    return float(eigvals3_sym(M)[0])
