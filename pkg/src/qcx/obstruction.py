"""Curvature obstructions to smooth convexification of the field.

For a C^2 map F with F'(u) != 0 at the base value, the composed Hessian
D2F(u) = F''(u) g g^T + F'(u) H (g, H the field gradient and Hessian)
couples to directions through two channels:

* On the gradient-orthogonal plane the F'' term dies, and the restricted
  form is F'(u) <xi, H xi>.  Eliminating xi3 through the tangency
  constraint, the restriction is the rank-one square

      <xi, H xi> = z**a * [a(a+1)/(x**a + y**a)] * (xi1/x - xi2/y)**2,

  positive semidefinite with kernel along (xi1, xi2) = (x, y), whose lift
  is the base point itself (``tangent_form``).

* Along the base ray, degree-zero homogeneity gives H p = -g and
  <g, p> = 0, hence <p, D2F(u) p> = 0 while D2F(u) p = -F'(u) g != 0.  A
  symmetric matrix with a vanishing quadratic value and a nonvanishing
  image on the same vector is never semidefinite, so no admissible F makes
  the composition convex or concave near any point of the octant.

Witness pairs come from sweeping eta = t*p + kappa*g: the quadratic form
there is linear in t with slope -2*kappa*|g|^2 != 0, so both signs occur.

``reduced_form`` carries the classical displayed coefficient matrix in
(xi1, xi2); its determinant times x**(a+2) y**(a+2) is exactly
a(a+1)(a-1) (``det_factor``).  It agrees with ``tangent_form`` at a = 1
only; the acceptance checks exercise both and the correction identity
connecting them.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import field
from .eig import eigvals3_sym
from .field import DomainError, MonotoneMap, powpos

__all__ = [
    "DegenerateFormError",
    "TangentDirection",
    "lift_tangent",
    "tangency_residual",
    "tangent_curvature",
    "ReducedForm",
    "reduced_form",
    "tangent_form",
    "det_factor",
    "IndefinitenessCertificate",
    "find_certificate",
    "SignFlipWitness",
    "SignFlipResult",
    "alpha_one_sign_flip",
    "IndefiniteCheck",
    "composed_hessian_indefinite",
]

_SWEEP_MAX_POW = 40


class DegenerateFormError(RuntimeError):
    """A witness search hit a (numerically) degenerate quadratic form."""


def tangency_residual(xi, p, a) -> float:
    """|<gradient(p), xi>|, the defect of xi from the tangent plane."""
    g = field.gradient(p, a)
    return float(abs(g @ np.asarray(xi, dtype=float)))


@dataclass(frozen=True)
class TangentDirection:
    """A direction in the gradient-orthogonal plane at a base point."""

    xi: tuple
    point: tuple
    alpha: float

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.xi, dtype=float)

    def residual(self) -> float:
        return tangency_residual(self.xi, self.point, self.alpha)

    def to_dict(self) -> dict:
        return {"xi": list(self.xi), "point": list(self.point), "alpha": self.alpha}


def lift_tangent(xi1, xi2, p, a) -> TangentDirection:
    """Complete (xi1, xi2) to a gradient-orthogonal direction.

    The third component is
    xi3 = z * (xi1 x**(-a-1) + xi2 y**(-a-1)) / (x**(-a) + y**(-a)),
    the unique choice with <gradient, xi> = 0.  The lift of (x, y) itself
    is the base point (xi3 = z).
    """
    x, y, z = field.as_point(p)
    a = field.check_alpha(a)
    xi1, xi2 = float(xi1), float(xi2)
    xi3 = (
        z
        * (xi1 * powpos(x, -(a + 1.0)) + xi2 * powpos(y, -(a + 1.0)))
        / (powpos(x, -a) + powpos(y, -a))
    )
    return TangentDirection(
        xi=(xi1, xi2, float(xi3)), point=(float(x), float(y), float(z)), alpha=a
    )


def tangent_curvature(d: TangentDirection) -> float:
    """<xi, H xi> with H the raw field Hessian at the base point.

    On the tangent plane this equals the composed-Hessian form divided by
    F'(u) for every admissible map F, so the value needs no map argument.
    """
    xi = d.vector
    H = field.hessian(d.point, d.alpha)
    return float(xi @ H @ xi)


@dataclass(frozen=True)
class ReducedForm:
    """A 2x2 symmetric coefficient matrix of a form in (xi1, xi2)."""

    q11: float
    q22: float
    q12: float
    point: tuple
    alpha: float

    def matrix(self) -> np.ndarray:
        return np.array([[self.q11, self.q12], [self.q12, self.q22]])

    def value(self, xi1, xi2) -> float:
        return float(
            self.q11 * xi1 * xi1 + self.q22 * xi2 * xi2 + 2.0 * self.q12 * xi1 * xi2
        )

    def det(self) -> float:
        return float(self.q11 * self.q22 - self.q12 * self.q12)

    def to_dict(self) -> dict:
        return {
            "q11": self.q11,
            "q22": self.q22,
            "q12": self.q12,
            "point": list(self.point),
            "alpha": self.alpha,
        }


def reduced_form(p, a) -> ReducedForm:
    """The classical displayed coefficient matrix in (xi1, xi2).

    With sx = x**(-a), sy = y**(-a), S = sx + sy:

        q11 = x**(-a-2) * (a(a+1) - (a^2+1) sx / S)
        q22 = y**(-a-2) * (a(a+1) - (a^2+1) sy / S)
        q12 = -(a^2+1) x**(-a-1) y**(-a-1) / S

    det(matrix) * x**(a+2) * y**(a+2) = a(a+1)(a-1) exactly (the sx/S and
    sy/S weights sum to one).  Caution: this matrix represents the
    tangent-restricted curvature form only at a = 1; for other exponents
    it differs from ``tangent_form`` by the rank-one correction

        value_here = value_tangent - (1-a)/(x**a + y**a) *
                     (xi1 y**(a/2)/x**(a/2+1) + xi2 x**(a/2)/y**(a/2+1))**2.
    """
    x, y, z = field.as_point(p)
    a = field.check_alpha(a)
    sx = powpos(x, -a)
    sy = powpos(y, -a)
    S = sx + sy
    c0 = a * (a + 1.0)
    c1 = a * a + 1.0
    q11 = powpos(x, -(a + 2.0)) * (c0 - c1 * sx / S)
    q22 = powpos(y, -(a + 2.0)) * (c0 - c1 * sy / S)
    q12 = -c1 * powpos(x, -(a + 1.0)) * powpos(y, -(a + 1.0)) / S
    return ReducedForm(
        q11=float(q11),
        q22=float(q22),
        q12=float(q12),
        point=(float(x), float(y), float(z)),
        alpha=a,
    )


def tangent_form(p, a) -> ReducedForm:
    """The true tangent-restricted curvature form in (xi1, xi2).

    For any lift, <xi, H xi> = z**a * value(xi1, xi2) with

        value(xi1, xi2) = [a(a+1)/(x**a + y**a)] * (xi1/x - xi2/y)**2,

    a positive semidefinite rank-one square whose kernel direction
    (xi1, xi2) = (x, y) lifts to the base point.  The identity is a direct
    consequence of H p = -g and <g, p> = 0.
    """
    x, y, z = field.as_point(p)
    a = field.check_alpha(a)
    c = a * (a + 1.0) / (powpos(x, a) + powpos(y, a))
    return ReducedForm(
        q11=float(c / (x * x)),
        q22=float(c / (y * y)),
        q12=float(-c / (x * y)),
        point=(float(x), float(y), float(z)),
        alpha=a,
    )


def det_factor(a) -> float:
    """a(a+1)(a-1): det(reduced_form) times x**(a+2) y**(a+2).

    Negative for a < 1, zero at a = 1, positive for a > 1.
    """
    a = field.check_alpha(a)
    return a * (a + 1.0) * (a - 1.0)


@dataclass(frozen=True)
class IndefinitenessCertificate:
    """Two directions with raw-Hessian curvature values of opposite signs.

    Directions are eta = t*p + kappa*g (not tangent: <g, eta> = kappa|g|^2).
    ``residual_*`` are the relative gaps between each value and its
    independent recomputation through the expanded formula
    t^2 <p,Hp> + 2 t kappa <Hp,g> + kappa^2 <Hg,g>.
    """

    point: tuple
    alpha: float
    xi_plus: tuple
    xi_minus: tuple
    value_plus: float
    value_minus: float
    tolerance: float
    residual_plus: float
    residual_minus: float
    method: str

    def to_dict(self) -> dict:
        return {
            "point": list(self.point),
            "alpha": self.alpha,
            "xi_plus": list(self.xi_plus),
            "xi_minus": list(self.xi_minus),
            "value_plus": self.value_plus,
            "value_minus": self.value_minus,
            "tolerance": self.tolerance,
            "residual_plus": self.residual_plus,
            "residual_minus": self.residual_minus,
            "method": self.method,
        }


def _rel_gap(a, b) -> float:
    return abs(a - b) / max(abs(a), abs(b))


def _sweep_quadratic(pt, H, g, K, c, php):
    """Scan G(t, kappa) = php t^2 + 2 kappa c t + K kappa^2 on a dyadic grid.

    kappa ranges over {-1, +1}, t over 0 and +-2^k for k = 0.._SWEEP_MAX_POW;
    the t-linear term guarantees both signs occur.  Returns the best
    positive and best negative hits as (t, kappa, G, eta, scale) with
    eta = t*pt + kappa*g and scale = fro(H) * |eta|^2, ranked by G/scale.
    """
    fro = float(np.linalg.norm(H))
    powers = 2.0 ** np.arange(_SWEEP_MAX_POW + 1)
    ts = np.concatenate([-powers[::-1], [0.0], powers])
    pp = float(pt @ pt)
    gg = float(g @ g)
    pg = float(pt @ g)
    best_pos = None
    best_neg = None
    for kappa in (1.0, -1.0):
        G = php * ts * ts + 2.0 * kappa * c * ts + K * kappa * kappa
        eta_sq = ts * ts * pp + 2.0 * ts * kappa * pg + kappa * kappa * gg
        ratio = G / (fro * eta_sq)
        i_hi = int(np.argmax(ratio))
        i_lo = int(np.argmin(ratio))
        if best_pos is None or ratio[i_hi] > best_pos[0]:
            best_pos = (float(ratio[i_hi]), float(ts[i_hi]), kappa, float(G[i_hi]))
        if best_neg is None or ratio[i_lo] < best_neg[0]:
            best_neg = (float(ratio[i_lo]), float(ts[i_lo]), kappa, float(G[i_lo]))
    out = []
    for _, t, kappa, G in (best_pos, best_neg):
        eta = t * pt + kappa * g
        out.append((t, kappa, G, eta, fro * float(eta @ eta)))
    return out[0], out[1]


def find_certificate(p, a, tol_scale=1e-10) -> IndefinitenessCertificate:
    """Two-sided raw-Hessian curvature witnesses at p, exponent in (0, 1].

    Tangent witnesses cannot exist (the restricted form is PSD), so the
    construction perturbs the base ray by the gradient: eta = t*p +
    kappa*g gives <eta, H eta> = -2 kappa t |g|^2 + kappa^2 <Hg, g>, both
    signs for suitable t.  Each value is recomputed independently through
    the direct 3x3 quadratic form and must clear
    tolerance = tol_scale * fro(H) * |eta|^2.
    """
    pt = field.as_point(p)
    a = field.check_alpha(a)
    if a > 1.0:
        raise DomainError(f"witness search applies to exponents in (0, 1], got {a}")
    g = field.gradient(pt, a)
    H = field.hessian(pt, a)
    hp = H @ pt
    c = float(hp @ g)
    K = float(g @ (H @ g))
    php = float(pt @ hp)
    pos, neg = _sweep_quadratic(pt, H, g, K, c, php)
    (tp, kp, gp, eta_p, scale_p) = pos
    (tn, kn, gn, eta_n, scale_n) = neg
    val_p = float(eta_p @ H @ eta_p)
    val_n = float(eta_n @ H @ eta_n)
    tol = tol_scale * max(scale_p, scale_n)
    if not (val_p >= tol and val_n <= -tol):
        raise DegenerateFormError(
            f"perturbation witnesses failed at {tuple(pt)}, a={a}: "
            f"values ({val_p}, {val_n}), tolerance {tol}"
        )
    return IndefinitenessCertificate(
        point=tuple(map(float, pt)),
        alpha=a,
        xi_plus=tuple(map(float, eta_p)),
        xi_minus=tuple(map(float, eta_n)),
        value_plus=val_p,
        value_minus=val_n,
        tolerance=float(tol),
        residual_plus=_rel_gap(val_p, gp),
        residual_minus=_rel_gap(val_n, gn),
        method="gradient-perturbation",
    )


@dataclass(frozen=True)
class SignFlipWitness:
    t: float
    kappa: float
    value: float
    scale: float
    direction: tuple

    def to_dict(self) -> dict:
        return {
            "t": self.t,
            "kappa": self.kappa,
            "value": self.value,
            "scale": self.scale,
            "direction": list(self.direction),
        }


@dataclass(frozen=True)
class SignFlipResult:
    """Both-signs witnesses of the perturbed form at exponent one.

    ``coeff`` is <H (x,y,z), g>, the per-t coefficient of the linear term;
    ``coeff_closed`` is its closed form -z^2/x^4 - z^2/y^4 - (1/x + 1/y)^2
    (equal to -|g|^2 at exponent one by H p = -g).
    """

    point: tuple
    map_family: str
    map_label: str
    positive: SignFlipWitness
    negative: SignFlipWitness
    coeff: float
    coeff_closed: float
    coeff_residual: float
    curvature_term: float
    tolerance_scale: float

    def to_dict(self) -> dict:
        return {
            "point": list(self.point),
            "map_family": self.map_family,
            "map_label": self.map_label,
            "positive": self.positive.to_dict(),
            "negative": self.negative.to_dict(),
            "coeff": self.coeff,
            "coeff_closed": self.coeff_closed,
            "coeff_residual": self.coeff_residual,
            "curvature_term": self.curvature_term,
            "tolerance_scale": self.tolerance_scale,
        }


def alpha_one_sign_flip(p, fmap: MonotoneMap, tol_scale=1e-6) -> SignFlipResult:
    """Sign flip of the map-aware perturbed curvature form at exponent one.

    Directions eta = xi + kappa*g with xi = t*(x, y, z) (whose lift has
    third component t*z).  The form

        G(t, kappa) = <xi, H xi> + 2 kappa <H xi, g>
                      + (F''(u)/F'(u) |g|^4 + <H g, g>) kappa^2

    equals <eta, D2F(u) eta> / F'(u); <xi, H xi> = 0 on this ray and the
    t-linear coefficient is nonzero, so sweeping t at kappa = +-1 yields
    both signs for every admissible map.
    """
    pt = field.as_point(p)
    a = 1.0
    u0 = field.value(pt, a)
    f1 = float(fmap.d1(u0))
    if f1 == 0.0:
        raise DomainError(f"map {fmap.label!r} has vanishing slope at t={u0}")
    ratio2 = float(fmap.d2(u0)) / f1
    g = field.gradient(pt, a)
    H = field.hessian(pt, a)
    gg = float(g @ g)
    K = ratio2 * gg * gg + float(g @ (H @ g))
    hp = H @ pt
    c = float(hp @ g)
    x, y, z = pt
    c_closed = -(z * z) / x**4 - (z * z) / y**4 - (1.0 / x + 1.0 / y) ** 2
    fro = float(np.linalg.norm(H))
    if abs(c) < 1e-12 * fro * float(np.sqrt((pt @ pt) * gg)):
        raise DegenerateFormError(
            f"t-linear coupling vanished at {tuple(pt)}: coeff={c}, "
            f"closed form {c_closed}, hessian norm {fro}"
        )
    php = float(pt @ hp)
    pos, neg = _sweep_quadratic(pt, H, g, K, c, php)
    (tp, kp, gp, eta_p, scale_p) = pos
    (tn, kn, gn, eta_n, scale_n) = neg
    if not (gp >= tol_scale * scale_p and gn <= -tol_scale * scale_n):
        raise DegenerateFormError(
            f"sweep failed to clear the tolerance at {tuple(pt)} with map "
            f"{fmap.label!r}: best values ({gp}, {gn})"
        )
    return SignFlipResult(
        point=tuple(map(float, pt)),
        map_family=fmap.family,
        map_label=fmap.label,
        positive=SignFlipWitness(tp, kp, gp, scale_p, tuple(map(float, eta_p))),
        negative=SignFlipWitness(tn, kn, gn, scale_n, tuple(map(float, eta_n))),
        coeff=c,
        coeff_closed=float(c_closed),
        coeff_residual=_rel_gap(c, c_closed),
        curvature_term=K,
        tolerance_scale=float(tol_scale),
    )


@dataclass(frozen=True)
class IndefiniteCheck:
    point: tuple
    alpha: float
    map_label: str
    eigenvalues: tuple
    scale: float
    tolerance: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "point": list(self.point),
            "alpha": self.alpha,
            "map_label": self.map_label,
            "eigenvalues": list(self.eigenvalues),
            "scale": self.scale,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


def composed_hessian_indefinite(p, a, fmap: MonotoneMap, tol_scale=1e-10) -> IndefiniteCheck:
    """Eigenvalue check that the composed Hessian has both signs.

    Guarded to exponents in (0, 1], the range the obstruction suite
    quantifies over.
    """
    pt = field.as_point(p)
    a = field.check_alpha(a)
    if a > 1.0:
        raise DomainError(f"the obstruction check covers exponents in (0, 1], got {a}")
    u0 = field.value(pt, a)
    if float(fmap.d1(u0)) == 0.0:
        raise DomainError(f"map {fmap.label!r} has vanishing slope at t={u0}")
    M = field.compose_hessian(fmap, pt, a)
    w = eigvals3_sym(M)
    scale = float(np.linalg.norm(M))
    tol = tol_scale * scale
    passed = bool(w[0] <= -tol and w[2] >= tol)
    return IndefiniteCheck(
        point=tuple(map(float, pt)),
        alpha=a,
        map_label=fmap.label,
        eigenvalues=tuple(float(v) for v in w),
        scale=scale,
        tolerance=float(tol),
        passed=passed,
    )
