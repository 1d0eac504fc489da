"""Segment tests and the structural route to quasi-convexity.

Two independent routes are implemented: (a) direct sampling of
u(lam*p1 + (1-lam)*p2) <= max(u(p1), u(p2)) on random segments, and (b) the
structural argument that under the z-proportional reweighting the blend
becomes a convex combination on the z = 1 slice, where the profile
s**(-a) + t**(-a) is convex.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import field
from .field import DomainError

#: pass threshold: margin <= DEFAULT_SEGMENT_TOL * (1 + |max endpoint value|)
DEFAULT_SEGMENT_TOL = 1e-10

__all__ = [
    "DEFAULT_SEGMENT_TOL",
    "SegmentResult",
    "blend",
    "segment_margin",
    "segment_test",
    "segment_margins",
    "combination_weights",
    "combination_weights_batch",
    "combination_identity_residual",
    "combination_identity_residuals",
    "chain_margins",
    "ProfileConvexityResult",
    "profile_convexity_check",
]


def _check_lambda(lam) -> float:
    lam = float(lam)
    if not 0.0 <= lam <= 1.0:
        raise DomainError(f"blend weight must lie in [0, 1], got {lam}")
    return lam


def blend(p1, p2, lam) -> np.ndarray:
    lam = _check_lambda(lam)
    return lam * field.as_point(p1) + (1.0 - lam) * field.as_point(p2)


def segment_margin(p1, p2, lam, a):
    """(margin, scale) with margin = u(blend) - max(u(p1), u(p2)).

    Negative or zero margin means the defining inequality holds; scale is
    1 + |max| so that tolerances stay meaningful for large values.
    """
    u1 = field.value(p1, a)
    u2 = field.value(p2, a)
    ub = field.value(blend(p1, p2, lam), a)
    m = max(u1, u2)
    return ub - m, 1.0 + abs(m)


@dataclass(frozen=True)
class SegmentResult:
    p1: tuple
    p2: tuple
    lam: float
    alpha: float
    margin: float
    scale: float
    tol: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "p1": list(self.p1),
            "p2": list(self.p2),
            "lam": self.lam,
            "alpha": self.alpha,
            "margin": self.margin,
            "scale": self.scale,
            "tol": self.tol,
            "passed": self.passed,
        }


def segment_test(p1, p2, lam, a, tol=DEFAULT_SEGMENT_TOL) -> SegmentResult:
    margin, scale = segment_margin(p1, p2, lam, a)
    return SegmentResult(
        p1=tuple(map(float, field.as_point(p1))),
        p2=tuple(map(float, field.as_point(p2))),
        lam=float(lam),
        alpha=float(a),
        margin=float(margin),
        scale=float(scale),
        tol=float(tol),
        passed=bool(margin <= tol * scale),
    )


def _check_batch(P, name):
    P = np.asarray(P, dtype=float)
    if P.ndim != 2 or P.shape[1] != 3:
        raise DomainError(f"{name} must have shape (n, 3), got {P.shape}")
    if not np.all(np.isfinite(P)) or np.any(P <= 0.0):
        raise DomainError(f"{name} must lie in the open positive octant")
    return P


def segment_margins(P1, P2, lams, a):
    """Vectorized (margins, scales) over stacked endpoint rows."""
    P1 = _check_batch(P1, "P1")
    P2 = _check_batch(P2, "P2")
    lams = np.asarray(lams, dtype=float)
    if np.any(lams < 0.0) or np.any(lams > 1.0):
        raise DomainError("blend weights must lie in [0, 1]")
    a = field.check_alpha(a)
    B = lams[:, None] * P1 + (1.0 - lams)[:, None] * P2
    ub = field.value_xyz(B[:, 0], B[:, 1], B[:, 2], a)
    u1 = field.value_xyz(P1[:, 0], P1[:, 1], P1[:, 2], a)
    u2 = field.value_xyz(P2[:, 0], P2[:, 1], P2[:, 2], a)
    m = np.maximum(u1, u2)
    return ub - m, 1.0 + np.abs(m)


def combination_weights(p1, p2, lam):
    """z-proportional weights (w1, w2) of the blend on the z = 1 slice.

    w_i = lam_i z_i / (lam_1 z_1 + lam_2 z_2) with lam_1 = lam and
    lam_2 = 1 - lam; nonnegative and summing to one.
    """
    lam = _check_lambda(lam)
    z1 = float(field.as_point(p1)[2])
    z2 = float(field.as_point(p2)[2])
    den = lam * z1 + (1.0 - lam) * z2
    return lam * z1 / den, (1.0 - lam) * z2 / den


def combination_weights_batch(P1, P2, lams):
    P1 = _check_batch(P1, "P1")
    P2 = _check_batch(P2, "P2")
    lams = np.asarray(lams, dtype=float)
    den = lams * P1[:, 2] + (1.0 - lams) * P2[:, 2]
    return lams * P1[:, 2] / den, (1.0 - lams) * P2[:, 2] / den


def combination_identity_residual(p1, p2, lam, a) -> float:
    """Relative gap between u at the blend and the reweighted profile value.

    The blend (lam p1 + (1-lam) p2) has slice coordinates equal to the
    w-weighted averages of the endpoint slice coordinates, so the two
    evaluations must agree up to rounding.
    """
    x1, y1, z1 = field.as_point(p1)
    x2, y2, z2 = field.as_point(p2)
    lhs = field.value(blend(p1, p2, lam), a)
    w1, w2 = combination_weights(p1, p2, lam)
    s = w1 * x1 / z1 + w2 * x2 / z2
    t = w1 * y1 / z1 + w2 * y2 / z2
    rhs = field.profile(s, t, a)
    return abs(lhs - rhs) / abs(lhs)


def combination_identity_residuals(P1, P2, lams, a):
    """Vectorized relative residuals of the slice-reweighting identity."""
    P1 = _check_batch(P1, "P1")
    P2 = _check_batch(P2, "P2")
    lams = np.asarray(lams, dtype=float)
    a = field.check_alpha(a)
    B = lams[:, None] * P1 + (1.0 - lams)[:, None] * P2
    lhs = field.value_xyz(B[:, 0], B[:, 1], B[:, 2], a)
    w1, w2 = combination_weights_batch(P1, P2, lams)
    s = w1 * P1[:, 0] / P1[:, 2] + w2 * P2[:, 0] / P2[:, 2]
    t = w1 * P1[:, 1] / P1[:, 2] + w2 * P2[:, 1] / P2[:, 2]
    rhs = field.profile(s, t, a)
    return np.abs(lhs - rhs) / np.abs(lhs)


def chain_margins(P1, P2, lams, a):
    """Margins of the two-step chain bound, vectorized.

    Returns (m1, m2, scales): m1 = u(blend) - weighted endpoint average and
    m2 = weighted average - max endpoint value.  Both nonpositive up to
    rounding; their sum is the segment margin.
    """
    P1 = _check_batch(P1, "P1")
    P2 = _check_batch(P2, "P2")
    lams = np.asarray(lams, dtype=float)
    a = field.check_alpha(a)
    B = lams[:, None] * P1 + (1.0 - lams)[:, None] * P2
    ub = field.value_xyz(B[:, 0], B[:, 1], B[:, 2], a)
    u1 = field.value_xyz(P1[:, 0], P1[:, 1], P1[:, 2], a)
    u2 = field.value_xyz(P2[:, 0], P2[:, 1], P2[:, 2], a)
    w1, w2 = combination_weights_batch(P1, P2, lams)
    wavg = w1 * u1 + w2 * u2
    m = np.maximum(u1, u2)
    return ub - wavg, wavg - m, 1.0 + np.abs(m)


@dataclass(frozen=True)
class ProfileConvexityResult:
    passed: bool
    min_hessian_entry: float
    worst_midpoint_margin: float
    n_grid: int
    n_pairs: int

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "min_hessian_entry": self.min_hessian_entry,
            "worst_midpoint_margin": self.worst_midpoint_margin,
            "n_grid": self.n_grid,
            "n_pairs": self.n_pairs,
        }


def profile_convexity_check(grid, pairs, a, tol=1e-12) -> ProfileConvexityResult:
    """Convexity of the profile: Hessian sign on a grid plus midpoint tests.

    The profile Hessian is diagonal with positive entries, so eigenvalue
    nonnegativity reduces to the entries themselves; the midpoint test
    checks v((P+Q)/2) <= (v(P)+v(Q))/2 with a relative tolerance.
    """
    a = field.check_alpha(a)
    min_entry = np.inf
    n_grid = 0
    for s, t in grid:
        d1, d2 = field.profile_hessian_diag(float(s), float(t), a)
        min_entry = min(min_entry, float(d1), float(d2))
        n_grid += 1
    worst = -np.inf
    n_pairs = 0
    for (s1, t1), (s2, t2) in pairs:
        v1 = field.profile(s1, t1, a)
        v2 = field.profile(s2, t2, a)
        avg = 0.5 * (v1 + v2)
        vm = field.profile(0.5 * (s1 + s2), 0.5 * (t1 + t2), a)
        worst = max(worst, (vm - avg) / (1.0 + abs(avg)))
        n_pairs += 1
    passed = (n_grid == 0 or min_entry >= 0.0) and (n_pairs == 0 or worst <= tol)
    return ProfileConvexityResult(
        passed=bool(passed),
        min_hessian_entry=float(min_entry) if n_grid else float("nan"),
        worst_midpoint_margin=float(worst) if n_pairs else float("nan"),
        n_grid=n_grid,
        n_pairs=n_pairs,
    )
