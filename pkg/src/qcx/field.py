"""Closed forms for a homogeneous quasi-convex field and smooth monotone maps.

The scalar field under study is

    u(x, y, z) = z**a * (x**(-a) + y**(-a)),      x, y, z > 0,  a > 0,

homogeneous of degree zero, with planar profile v(s, t) = s**(-a) + t**(-a)
so that u(x, y, z) = v(x/z, y/z).  Gradient and Hessian are
hand-differentiated closed forms; ``qcx.fdiff`` holds the independent
finite-difference oracle the tests check them against.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DomainError",
    "PowerOverflowError",
    "check_alpha",
    "as_point",
    "powpos",
    "value",
    "value_xyz",
    "gradient",
    "hessian",
    "profile",
    "profile_hessian_diag",
    "MonotoneMap",
    "identity",
    "affine",
    "exponential",
    "shifted_power",
    "polynomial",
    "DEFAULT_TEST_MAPS",
    "compose_hessian",
]


class DomainError(ValueError):
    """Input off the open positive octant, or an exponent that is not > 0."""


class PowerOverflowError(OverflowError):
    """An intermediate power left the representable double range."""


def check_alpha(a) -> float:
    a = float(a)
    if not np.isfinite(a) or a <= 0.0:
        raise DomainError(f"exponent must be finite and > 0, got {a!r}")
    return a


def as_point(p) -> np.ndarray:
    q = np.asarray(p, dtype=float)
    if q.shape != (3,):
        raise DomainError(f"expected three coordinates, got shape {q.shape}")
    if not np.all(np.isfinite(q)) or np.any(q <= 0.0):
        raise DomainError(f"point must lie in the open positive octant, got {q!r}")
    return q


def powpos(t, a):
    """t**a for t > 0, computed as exp(a*log(t)) for uniform accuracy in a."""
    return np.exp(a * np.log(t))


def _finite(r, what):
    if not np.all(np.isfinite(r)):
        raise PowerOverflowError(f"{what} left the representable range")
    return r


def value_xyz(x, y, z, a):
    """Field value on broadcastable positive coordinates.  No validation."""
    return powpos(z, a) * (powpos(x, -a) + powpos(y, -a))


def value(p, a) -> float:
    """u(p) = z**a * (x**(-a) + y**(-a)); positive and finite on the octant."""
    x, y, z = as_point(p)
    a = check_alpha(a)
    r = float(value_xyz(x, y, z, a))
    if not np.isfinite(r) or r <= 0.0:
        raise PowerOverflowError(
            f"field value left the representable range at {tuple(map(float, (x, y, z)))!r}, a={a}"
        )
    return r


def profile(s, t, a):
    """Planar profile v(s, t) = s**(-a) + t**(-a) on broadcastable s, t > 0."""
    a = check_alpha(a)
    s = np.asarray(s, dtype=float)
    t = np.asarray(t, dtype=float)
    if np.any(s <= 0.0) or np.any(t <= 0.0):
        raise DomainError("profile arguments must be positive")
    r = _finite(powpos(s, -a) + powpos(t, -a), "profile value")
    return float(r) if r.ndim == 0 else r


def profile_hessian_diag(s, t, a):
    """Diagonal of the profile Hessian: (a(a+1)s**(-a-2), a(a+1)t**(-a-2)).

    The mixed second derivative is identically zero, so these two entries
    are the eigenvalues; both are positive, which is the closed-form route
    to convexity of the profile.
    """
    a = check_alpha(a)
    c = a * (a + 1.0)
    return c * powpos(s, -(a + 2.0)), c * powpos(t, -(a + 2.0))


def gradient(p, a) -> np.ndarray:
    """Closed-form gradient.

    Components: (-a z**a / x**(a+1), -a z**a / y**(a+1),
    a z**(a-1) (x**(-a) + y**(-a))).  The first two are negative, the third
    positive, and <gradient, p> = 0 by degree-zero homogeneity.
    """
    x, y, z = as_point(p)
    a = check_alpha(a)
    za = powpos(z, a)
    g = np.array(
        [
            -a * za * powpos(x, -(a + 1.0)),
            -a * za * powpos(y, -(a + 1.0)),
            a * powpos(z, a - 1.0) * (powpos(x, -a) + powpos(y, -a)),
        ]
    )
    return _finite(g, "gradient")


def hessian(p, a) -> np.ndarray:
    """Closed-form symmetric Hessian matrix.

    The xy entry is structurally zero; the xx and yy entries are positive,
    the xz and yz entries negative, and the zz entry carries the sign of
    (a - 1).
    """
    x, y, z = as_point(p)
    a = check_alpha(a)
    za = powpos(z, a)
    zb = powpos(z, a - 1.0)
    hxx = a * (a + 1.0) * za * powpos(x, -(a + 2.0))
    hyy = a * (a + 1.0) * za * powpos(y, -(a + 2.0))
    hzz = a * (a - 1.0) * powpos(z, a - 2.0) * (powpos(x, -a) + powpos(y, -a))
    hxz = -a * a * zb * powpos(x, -(a + 1.0))
    hyz = -a * a * zb * powpos(y, -(a + 1.0))
    H = np.array(
        [
            [hxx, 0.0, hxz],
            [0.0, hyy, hyz],
            [hxz, hyz, hzz],
        ]
    )
    return _finite(H, "hessian")


@dataclass(frozen=True)
class MonotoneMap:
    """A twice continuously differentiable reparametrization of the line.

    Instances come from the factory functions below (a fixed, closed set of
    families).  ``value``, ``d1`` and ``d2`` evaluate F, F' and F''.
    Families that are strictly monotone by construction reject parameters
    that would make F' vanish identically; pointwise nonvanishing of F' is
    checked at the call sites that rely on it.
    """

    family: str
    params: tuple
    label: str

    def __call__(self, t):
        return self.value(t)

    def value(self, t):
        f, q = self.family, self.params
        if f == "identity":
            return 1.0 * t
        if f == "affine":
            return q[0] * t + q[1]
        if f == "exp":
            return np.exp(q[0] * t)
        if f == "shifted_power":
            return powpos(self._shifted(t), q[1])
        if f == "polynomial":
            return np.polynomial.polynomial.polyval(t, q)
        raise ValueError(f"unknown family {f!r}")

    def d1(self, t):
        f, q = self.family, self.params
        if f == "identity":
            return np.ones_like(np.asarray(t, dtype=float)) if np.ndim(t) else 1.0
        if f == "affine":
            return np.full_like(np.asarray(t, dtype=float), q[0]) if np.ndim(t) else q[0]
        if f == "exp":
            return q[0] * np.exp(q[0] * t)
        if f == "shifted_power":
            return q[1] * powpos(self._shifted(t), q[1] - 1.0)
        if f == "polynomial":
            return np.polynomial.polynomial.polyval(
                t, np.polynomial.polynomial.polyder(q)
            )
        raise ValueError(f"unknown family {f!r}")

    def d2(self, t):
        f, q = self.family, self.params
        if f in ("identity", "affine"):
            return np.zeros_like(np.asarray(t, dtype=float)) if np.ndim(t) else 0.0
        if f == "exp":
            return q[0] * q[0] * np.exp(q[0] * t)
        if f == "shifted_power":
            return q[1] * (q[1] - 1.0) * powpos(self._shifted(t), q[1] - 2.0)
        if f == "polynomial":
            return np.polynomial.polynomial.polyval(
                t, np.polynomial.polynomial.polyder(q, 2)
            )
        raise ValueError(f"unknown family {f!r}")

    def _shifted(self, t):
        s = np.asarray(t, dtype=float) + self.params[0]
        if np.any(s <= 0.0):
            raise DomainError(
                f"map {self.label!r} evaluated where t + shift is not positive"
            )
        return s

    def to_dict(self) -> dict:
        return {"family": self.family, "params": list(self.params), "label": self.label}


def identity() -> MonotoneMap:
    return MonotoneMap("identity", (), "t")


def affine(slope, intercept) -> MonotoneMap:
    slope, intercept = float(slope), float(intercept)
    if slope == 0.0:
        raise DomainError("affine map needs a nonzero slope")
    return MonotoneMap("affine", (slope, intercept), f"{slope:g}*t + {intercept:g}")


def exponential(rate) -> MonotoneMap:
    rate = float(rate)
    if rate == 0.0:
        raise DomainError("exponential map needs a nonzero rate")
    return MonotoneMap("exp", (rate,), f"exp({rate:g}*t)")


def shifted_power(shift, power) -> MonotoneMap:
    shift, power = float(shift), float(power)
    if power == 0.0:
        raise DomainError("shifted power map needs a nonzero power")
    return MonotoneMap("shifted_power", (shift, power), f"(t + {shift:g})**{power:g}")


def polynomial(coeffs) -> MonotoneMap:
    coeffs = tuple(float(c) for c in coeffs)
    if len(coeffs) < 2 or all(c == 0.0 for c in coeffs[1:]):
        raise DomainError("polynomial map needs a nonconstant coefficient")
    body = ", ".join(f"{c:g}" for c in coeffs)
    return MonotoneMap("polynomial", coeffs, f"poly[{body}]")


#: Fixed representatives used wherever a check quantifies over smooth
#: monotone maps.  Includes a decreasing map; the sign obstructions are
#: insensitive to the direction of monotonicity.
DEFAULT_TEST_MAPS = (
    identity(),
    affine(3.0, 7.0),
    exponential(5.0),
    exponential(-2.0),
    shifted_power(1.0, 3.0),
    polynomial((0.0, 1.0, 0.0, 2.0)),
)


def compose_hessian(fmap: MonotoneMap, p, a) -> np.ndarray:
    """Hessian of F(u) at p: F''(u) g g^T + F'(u) H with g, H of the field."""
    u0 = value(p, a)
    g = gradient(p, a)
    H = hessian(p, a)
    f1 = float(fmap.d1(u0))
    f2 = float(fmap.d2(u0))
    if not (np.isfinite(f1) and np.isfinite(f2)):
        raise PowerOverflowError(
            f"map {fmap.label!r} derivative left the representable range at t={u0}"
        )
    return _finite(f2 * np.outer(g, g) + f1 * H, "composed hessian")
