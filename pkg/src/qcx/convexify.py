"""Exponential convexification threshold search.

The Hessian of exp(lam*u) factors as lam*exp(lam*u) * (H + lam g g^T) with
g, H the field gradient and Hessian, so positive semidefiniteness of
M(lam) = H + lam g g^T decides local convexity.  The search brackets the
smallest lam whose matrix passes the tolerance-based PSD test, then
verifies strict positivity just above the candidate.

For this field the verification necessarily fails: degree-zero homogeneity
gives <p, M(lam) p> = 0 with M(lam) p = -g != 0 for every lam, so M(lam)
is never positive semidefinite at any exponent.  Its smallest eigenvalue
rises to zero like -const/lam, which eventually drops below any relative
tolerance; the bracket therefore produces a tolerance artifact rather than
a threshold, the strictness check rejects it, and the search reports
not-convexifiable with diagnostics.  The monotonicity of the smallest
eigenvalue in lam, which makes the bracketing sound, does hold and is
covered by the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from . import field
from .eig import min_eig3
from .field import DomainError

__all__ = [
    "RADII",
    "PSD_TOL",
    "LAMBDA_CAP",
    "NotConvexifiableError",
    "convexification_matrix",
    "is_psd",
    "LambdaResult",
    "min_convexifying_lambda",
    "neighborhood_check",
    "passing_radius",
]

#: candidate relative neighborhood radii, smallest to largest
RADII = (0.005, 0.01, 0.02, 0.05)

#: PSD acceptance: min eigenvalue >= -PSD_TOL * frobenius norm
PSD_TOL = 1e-12

LAMBDA_CAP = 1e12


class NotConvexifiableError(RuntimeError):
    """No lam made the convexification matrix verifiably PSD.

    ``reason`` is "cap-exceeded" when the doubling bracket ran out, or
    "strict-verification-failed" when a tolerance-level candidate was
    found but the matrix just above it is not strictly positive (the
    outcome for this field at every exponent).
    """

    def __init__(self, point, alpha, reason, cap, candidate, margin):
        self.point = tuple(map(float, point))
        self.alpha = float(alpha)
        self.reason = str(reason)
        self.cap = float(cap)
        self.candidate = None if candidate is None else float(candidate)
        self.margin = float(margin)
        at = (
            f"lam cap {self.cap:.1e}"
            if candidate is None
            else f"candidate lam {self.candidate:.6e}"
        )
        super().__init__(
            f"not convexifiable at {self.point} with exponent {self.alpha} "
            f"({self.reason}): min-eigenvalue margin {self.margin:.3e} at {at}"
        )


def convexification_matrix(p, a, lam) -> np.ndarray:
    """H + lam * g g^T; the positive factor lam*exp(lam*u) is left out.

    Callers that need the full composed-Hessian scale can recover its log
    as log(lam) + lam*u, which stays finite where the direct exponential
    would overflow.
    """
    lam = float(lam)
    if not np.isfinite(lam) or lam < 0.0:
        raise DomainError(f"lam must be a finite nonnegative real, got {lam!r}")
    g = field.gradient(p, a)
    return field.hessian(p, a) + lam * np.outer(g, g)


def _psd_margin(M):
    fro = float(np.linalg.norm(M))
    return min_eig3(M), fro


def is_psd(M) -> bool:
    w0, fro = _psd_margin(M)
    return w0 >= -PSD_TOL * fro


@dataclass(frozen=True)
class LambdaResult:
    """Verified threshold record (see min_convexifying_lambda).

    ``margin`` is the smallest eigenvalue of M at 1.01 * lambda_min,
    ``rel_width`` the achieved bisection width, and ``log_prefactor``
    log(lambda_min) + lambda_min * u(point), the log of the factored-out
    positive scalar.
    """

    point: tuple
    alpha: float
    lambda_min: float
    margin: float
    rel_width: float
    log_prefactor: float
    neighborhood_radius: float | None = None

    def to_dict(self) -> dict:
        return {
            "point": list(self.point),
            "alpha": self.alpha,
            "lambda_min": self.lambda_min,
            "margin": self.margin,
            "rel_width": self.rel_width,
            "log_prefactor": self.log_prefactor,
            "radius": self.neighborhood_radius,
        }


def min_convexifying_lambda(
    p, a, rel_tol=1e-6, cap=LAMBDA_CAP, enforce_alpha=True
) -> LambdaResult:
    """Bisection (with a doubling bracket) for the PSD threshold in lam.

    The smallest eigenvalue of M(lam) is nondecreasing in lam (the added
    term is PSD and grows with lam), so the PSD predicate is monotone and
    the bracketing is sound.  A candidate threshold only counts if M stays
    PSD at (1 + 1e-6) times it and is strictly positive definite at 1.01
    times it; otherwise NotConvexifiableError reports the diagnosis.  For
    this field the strictness verification fails at every exponent (see
    the module docstring), so the error is the expected outcome.
    """
    pt = field.as_point(p)
    a = field.check_alpha(a)
    if enforce_alpha and a <= 1.0:
        raise DomainError(
            f"a convexification threshold is only sought for exponents > 1, got {a}"
        )
    g = field.gradient(pt, a)
    H = field.hessian(pt, a)
    outer = np.outer(g, g)

    def margin(lam):
        return _psd_margin(H + lam * outer)

    def ok(lam):
        w0, fro = margin(lam)
        return w0 >= -PSD_TOL * fro

    hi = 1.0
    while not ok(hi):
        hi *= 2.0
        if hi > cap:
            w0, fro = margin(cap)
            raise NotConvexifiableError(pt, a, "cap-exceeded", cap, None, w0 / fro)
    lo = 0.0 if hi == 1.0 else 0.5 * hi
    iters = 0
    while hi - lo > rel_tol * hi:
        iters += 1
        if iters > 200:
            raise RuntimeError(
                f"bisection failed to close the bracket at {tuple(pt)}, a={a}"
            )
        mid = 0.5 * (lo + hi)
        if ok(mid):
            hi = mid
        else:
            lo = mid
    lam = hi
    if not ok(lam * (1.0 + 1e-6)):
        w0, fro = margin(lam * (1.0 + 1e-6))
        raise NotConvexifiableError(
            pt, a, "strict-verification-failed", cap, lam, w0 / fro
        )
    strict, fro = margin(lam * 1.01)
    if strict <= 0.0:
        raise NotConvexifiableError(
            pt, a, "strict-verification-failed", cap, lam, strict / fro
        )
    u0 = field.value(pt, a)
    return LambdaResult(
        point=tuple(map(float, pt)),
        alpha=a,
        lambda_min=float(lam),
        margin=float(strict),
        rel_width=float((hi - lo) / hi),
        log_prefactor=float(math.log(lam) + lam * u0),
    )


def neighborhood_check(result: LambdaResult, radius, samples, rng):
    """PSD of M(1.01 * lambda_min) at relative perturbations of the point.

    Each sample multiplies the coordinates by (1 + delta) with delta drawn
    uniformly from [-radius, radius]^3.  Returns (ok, worst_ratio) where
    worst_ratio is the smallest min-eigenvalue over frobenius-norm ratio;
    ok means worst_ratio >= -1e-10.
    """
    radius = float(radius)
    if radius < 0.0 or radius >= 1.0:
        raise DomainError(f"relative radius must lie in [0, 1), got {radius}")
    pt = np.asarray(result.point, dtype=float)
    lam = 1.01 * result.lambda_min
    worst = np.inf
    for _ in range(int(samples)):
        q = pt * (1.0 + rng.uniform(-radius, radius, 3))
        w0, fro = _psd_margin(convexification_matrix(q, result.alpha, lam))
        worst = min(worst, w0 / fro)
    return bool(worst >= -1e-10), float(worst)


def passing_radius(result: LambdaResult, rng, samples=64, radii=RADII) -> LambdaResult:
    """Largest candidate radius whose neighborhood check passes.

    All candidates are evaluated (deterministic rng consumption); the
    result is recorded on a copy of the input record, 0.0 when none pass.
    """
    best = 0.0
    for r in radii:
        ok, _ = neighborhood_check(result, r, samples, rng)
        if ok:
            best = max(best, r)
    return replace(result, neighborhood_radius=float(best))
