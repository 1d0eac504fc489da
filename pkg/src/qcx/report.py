"""Experiment orchestration, configuration, and machine-readable reporting.

JSON is the canonical output; CSV is a flat one-row-per-check projection;
text is a human summary.  Reports are deterministic for a fixed config and
seed: suites consume independent generators spawned from (seed, suite
index), output ordering is fixed, and wall time is kept out of the JSON
and CSV payloads unless explicitly requested.
"""

from __future__ import annotations

import csv
import io
import json
import time
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import convexify, field, fdiff, obstruction, quasiconvex, sampling

MODES = (
    "verify-derivatives",
    "quasiconvexity",
    "convexifiability",
    "alpha-one",
    "lambda-search",
    "full-suite",
)
FORMATS = ("json", "csv", "text")

#: per-mode default exponent ladders
QUASI_ALPHAS = (0.25, 0.5, 1.0, 1.5, 2.0)
OBSTRUCTION_ALPHAS = (0.25, 0.5, 0.75, 0.9)
LAMBDA_ALPHAS = (1.05, 1.1, 1.25, 1.5, 2.0, 3.0)
DERIV_ALPHA_RANGE = (0.1, 3.0)

SEGMENT_TOL = quasiconvex.DEFAULT_SEGMENT_TOL
IDENTITY_TOL = 1e-10
DET_TOL = 1e-8
COEFF_TOL = 1e-8
CROSS_TERM_TOL = 1e-6

__all__ = [
    "MODES",
    "FORMATS",
    "QUASI_ALPHAS",
    "OBSTRUCTION_ALPHAS",
    "LAMBDA_ALPHAS",
    "ConfigError",
    "RunConfig",
    "CheckRecord",
    "SuiteResult",
    "Report",
    "run",
]


class ConfigError(ValueError):
    """Invalid run configuration."""


@dataclass
class RunConfig:
    mode: str = "full-suite"
    alphas: tuple | None = None
    point: tuple | None = None
    samples: int = 100
    seed: int = sampling.DEFAULT_SEED
    tol_grad: float = 1e-6
    tol_hess: float = 1e-4
    tol_cert: float = 1e-10
    box: tuple = (0.1, 10.0)
    out: str | None = None
    fmt: str = "json"
    figures: str | None = None
    timing: bool = False

    def validate(self) -> "RunConfig":
        if self.mode not in MODES:
            raise ConfigError(f"unknown mode {self.mode!r}; choose from {MODES}")
        if self.fmt not in FORMATS:
            raise ConfigError(f"unknown format {self.fmt!r}; choose from {FORMATS}")
        if int(self.samples) < 1:
            raise ConfigError(f"samples must be >= 1, got {self.samples}")
        self.samples = int(self.samples)
        self.seed = int(self.seed)
        lo, hi = (float(self.box[0]), float(self.box[1]))
        if not (np.isfinite(lo) and np.isfinite(hi) and 0.0 < lo < hi):
            raise ConfigError(f"box must satisfy 0 < lo < hi, got {self.box}")
        self.box = (lo, hi)
        for name in ("tol_grad", "tol_hess", "tol_cert"):
            v = float(getattr(self, name))
            if not (np.isfinite(v) and v > 0.0):
                raise ConfigError(f"{name} must be a positive real, got {v}")
            setattr(self, name, v)
        if self.point is not None:
            pt = tuple(float(c) for c in self.point)
            if len(pt) != 3 or any(not np.isfinite(c) or c <= 0.0 for c in pt):
                raise ConfigError(f"point must be a positive triple, got {self.point}")
            self.point = pt
        if self.alphas is not None:
            al = tuple(float(a) for a in self.alphas)
            if not al or any(not np.isfinite(a) or a <= 0.0 for a in al):
                raise ConfigError(f"exponents must be positive reals, got {self.alphas}")
            self.alphas = al
            if self.mode == "convexifiability" and any(a > 1.0 for a in al):
                raise ConfigError(
                    "convexifiability mode covers exponents in (0, 1] only"
                )
            if self.mode == "lambda-search" and any(a <= 1.0 for a in al):
                raise ConfigError("lambda-search mode needs exponents > 1")
            if self.mode == "alpha-one" and any(a != 1.0 for a in al):
                raise ConfigError("alpha-one mode runs at exponent 1 only")
            if self.mode == "full-suite":
                raise ConfigError(
                    "full-suite uses the built-in per-suite ladders; drop --alpha"
                )
        return self

    def echo(self) -> dict:
        return {
            "mode": self.mode,
            "alphas": None if self.alphas is None else list(self.alphas),
            "point": None if self.point is None else list(self.point),
            "samples": self.samples,
            "seed": self.seed,
            "tol_grad": self.tol_grad,
            "tol_hess": self.tol_hess,
            "tol_cert": self.tol_cert,
            "box": list(self.box),
            "format": self.fmt,
        }


@dataclass
class CheckRecord:
    name: str
    status: str
    value: float
    tolerance: float
    detail: str = ""
    inputs: dict | None = None

    @classmethod
    def from_worst(cls, name, worst, tol, detail="", inputs=None):
        status = "pass" if worst <= tol else "fail"
        return cls(name, status, float(worst), float(tol), detail, inputs)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "status": self.status,
            "value": self.value,
            "tolerance": self.tolerance,
            "detail": self.detail,
            "inputs": self.inputs,
        }


@dataclass
class SuiteResult:
    mode: str
    alphas: tuple
    checks: list
    certificates: list = dc_field(default_factory=list)
    sign_flips: list = dc_field(default_factory=list)
    lambda_results: list = dc_field(default_factory=list)
    counts: dict = dc_field(default_factory=dict)
    plot_data: dict = dc_field(default_factory=dict)  # figures only, not serialized

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "alphas": list(self.alphas),
            "checks": [c.to_dict() for c in self.checks],
            "certificates": self.certificates,
            "sign_flips": self.sign_flips,
            "lambda_results": self.lambda_results,
            "counts": self.counts,
        }


@dataclass
class Report:
    config: dict
    suites: list
    wall_time_s: float

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def summary(self) -> dict:
        checks = [c for s in self.suites for c in s.checks]
        failed = sum(1 for c in checks if c.status != "pass")
        return {
            "checks": len(checks),
            "passed": len(checks) - failed,
            "failed": failed,
            "status": "pass" if failed == 0 else "fail",
        }

    def failures(self) -> list:
        return [
            (s.mode, c) for s in self.suites for c in s.checks if c.status != "pass"
        ]

    def to_dict(self, timing=False) -> dict:
        d = {
            "config": self.config,
            "suites": [s.to_dict() for s in self.suites],
            "summary": self.summary(),
        }
        if timing:
            d["wall_time_s"] = self.wall_time_s
        return d

    def to_json(self, timing=False) -> str:
        return json.dumps(self.to_dict(timing=timing), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["mode", "check", "status", "value", "tolerance", "detail"])
        for s in self.suites:
            for c in s.checks:
                w.writerow([s.mode, c.name, c.status, repr(c.value), repr(c.tolerance), c.detail])
        return buf.getvalue()

    def to_text(self) -> str:
        lines = []
        summ = self.summary()
        for s in self.suites:
            lines.append(f"== {s.mode} (alphas: {', '.join(f'{a:g}' for a in s.alphas)})")
            for c in s.checks:
                mark = "PASS" if c.status == "pass" else "FAIL"
                lines.append(
                    f"  [{mark}] {c.name}: value {c.value:.3e} vs tolerance {c.tolerance:.3e}"
                    + (f"  ({c.detail})" if c.detail else "")
                )
            if s.counts:
                body = ", ".join(f"{k}={v}" for k, v in s.counts.items())
                lines.append(f"  counts: {body}")
        lines.append(
            f"summary: {summ['passed']}/{summ['checks']} checks passed -> {summ['status']}"
        )
        lines.append(f"wall time: {self.wall_time_s:.3f} s")
        return "\n".join(lines) + "\n"


def _scalar_field(a):
    return lambda q: float(field.value_xyz(q[0], q[1], q[2], a))


def _point_inputs(p, a, **extra):
    d = {"point": [float(c) for c in p], "alpha": float(a)}
    d.update(extra)
    return d


def _run_derivatives(cfg: RunConfig, rng) -> SuiteResult:
    n = cfg.samples
    pts = sampling.sample_points(rng, n, *cfg.box)
    if cfg.alphas:
        alphas = rng.choice(np.asarray(cfg.alphas, dtype=float), size=n)
    else:
        alphas = sampling.log_uniform(rng, *DERIV_ALPHA_RANGE, n)
    worst_g, worst_h, worst_x = -np.inf, -np.inf, -np.inf
    in_g = in_h = in_x = None
    grad_rel = np.empty(n)
    hess_rel = np.empty(n)
    for i in range(n):
        p, a = pts[i], float(alphas[i])
        f = _scalar_field(a)
        g = field.gradient(p, a)
        rel_g = float(np.linalg.norm(g - fdiff.fd_gradient(f, p)) / np.linalg.norm(g))
        H = field.hessian(p, a)
        fH = fdiff.fd_hessian(f, p)
        scale = 1.0 + float(np.linalg.norm(H))
        rel_h = float(np.linalg.norm(H - fH) / scale)
        rel_x = float(abs(fH[0, 1]) / scale)
        grad_rel[i], hess_rel[i] = rel_g, rel_h
        if rel_g > worst_g:
            worst_g, in_g = rel_g, _point_inputs(p, a)
        if rel_h > worst_h:
            worst_h, in_h = rel_h, _point_inputs(p, a)
        if rel_x > worst_x:
            worst_x, in_x = rel_x, _point_inputs(p, a)
    checks = [
        CheckRecord.from_worst(
            "gradient-matches-central-differences", worst_g, cfg.tol_grad,
            f"worst relative gap over {n} samples", in_g,
        ),
        CheckRecord.from_worst(
            "hessian-matches-central-differences", worst_h, cfg.tol_hess,
            f"worst frobenius gap over {n} samples, scaled by 1 + |H|", in_h,
        ),
        CheckRecord.from_worst(
            "cross-term-structural-zero", worst_x, CROSS_TERM_TOL,
            "worst |finite-difference xy entry|, scaled by 1 + |H|", in_x,
        ),
    ]
    alphas_used = cfg.alphas if cfg.alphas else tuple(DERIV_ALPHA_RANGE)
    return SuiteResult(
        mode="verify-derivatives",
        alphas=alphas_used,
        checks=checks,
        counts={"samples": n},
        plot_data={"grad_rel": grad_rel, "hess_rel": hess_rel},
    )


def _run_quasiconvexity(cfg: RunConfig, rng) -> SuiteResult:
    alphas = cfg.alphas or QUASI_ALPHAS
    n = cfg.samples
    lo, hi = cfg.box
    worst_seg, worst_mu, worst_chain, worst_w = -np.inf, -np.inf, -np.inf, -np.inf
    in_seg = in_mu = in_chain = None
    margins_by_alpha = {}
    for a in alphas:
        P1 = sampling.sample_points(rng, n, lo, hi)
        P2 = sampling.sample_points(rng, n, lo, hi)
        lams = rng.uniform(0.0, 1.0, n)
        margins, scales = quasiconvex.segment_margins(P1, P2, lams, a)
        ratios = margins / scales
        i = int(np.argmax(ratios))
        if ratios[i] > worst_seg:
            worst_seg = float(ratios[i])
            in_seg = {
                "p1": [float(c) for c in P1[i]],
                "p2": [float(c) for c in P2[i]],
                "lam": float(lams[i]),
                "alpha": float(a),
            }
        resid = quasiconvex.combination_identity_residuals(P1, P2, lams, a)
        j = int(np.argmax(resid))
        if resid[j] > worst_mu:
            worst_mu = float(resid[j])
            in_mu = {
                "p1": [float(c) for c in P1[j]],
                "p2": [float(c) for c in P2[j]],
                "lam": float(lams[j]),
                "alpha": float(a),
            }
        m1, m2, cscales = quasiconvex.chain_margins(P1, P2, lams, a)
        cr = np.maximum(m1, m2) / cscales
        k = int(np.argmax(cr))
        if cr[k] > worst_chain:
            worst_chain = float(cr[k])
            in_chain = {
                "p1": [float(c) for c in P1[k]],
                "p2": [float(c) for c in P2[k]],
                "lam": float(lams[k]),
                "alpha": float(a),
            }
        w1, w2 = quasiconvex.combination_weights_batch(P1, P2, lams)
        worst_w = max(
            worst_w,
            float(np.max(np.abs(w1 + w2 - 1.0))),
            float(max(0.0, -np.min(w1), -np.min(w2))),
        )
        margins_by_alpha[float(a)] = ratios
    grid_axis = np.geomspace(lo, hi, 5)
    grid = [(s, t) for s in grid_axis for t in grid_axis]
    pairs = [
        (
            (sampling.log_uniform(rng, lo, hi), sampling.log_uniform(rng, lo, hi)),
            (sampling.log_uniform(rng, lo, hi), sampling.log_uniform(rng, lo, hi)),
        )
        for _ in range(24)
    ]
    prof_worst = -np.inf
    prof_ok = True
    for a in alphas:
        r = quasiconvex.profile_convexity_check(grid, pairs, a)
        prof_ok = prof_ok and r.passed
        prof_worst = max(prof_worst, r.worst_midpoint_margin)
    checks = [
        CheckRecord.from_worst(
            "segment-inequality", worst_seg, SEGMENT_TOL,
            f"worst margin/(1 + |max|) over {n} segments per exponent", in_seg,
        ),
        CheckRecord.from_worst(
            "slice-reweighting-identity", worst_mu, IDENTITY_TOL,
            "worst relative residual of the reweighted-profile identity", in_mu,
        ),
        CheckRecord.from_worst(
            "chain-inequality", worst_chain, SEGMENT_TOL,
            "worst margin of the two-step average bound", in_chain,
        ),
        CheckRecord.from_worst(
            "weights-valid", worst_w, 1e-12,
            "worst defect of nonnegativity and sum-to-one",
        ),
        CheckRecord(
            "profile-convexity",
            "pass" if prof_ok else "fail",
            float(prof_worst),
            1e-12,
            "profile Hessian sign on the grid and midpoint tests on pairs",
        ),
    ]
    return SuiteResult(
        mode="quasiconvexity",
        alphas=tuple(float(a) for a in alphas),
        checks=checks,
        counts={"segments_per_alpha": n, "grid_points": len(grid), "pairs": len(pairs)},
        plot_data={"margins_by_alpha": margins_by_alpha},
    )


def _run_convexifiability(cfg: RunConfig, rng) -> SuiteResult:
    alphas = cfg.alphas or OBSTRUCTION_ALPHAS
    if cfg.point is not None:
        points = np.asarray([cfg.point], dtype=float)
    else:
        points = sampling.sample_points(rng, cfg.samples, *cfg.box)
    certs = []
    worst_cert_resid = -np.inf
    worst_cert_margin = np.inf
    composed_failures = 0
    worst_find = -np.inf
    in_find = None
    worst_tr, worst_fi = -np.inf, -np.inf
    in_tr = in_fi = None
    for a in alphas:
        for p in points:
            cert = obstruction.find_certificate(p, a, tol_scale=cfg.tol_cert)
            certs.append(cert.to_dict())
            worst_cert_resid = max(
                worst_cert_resid, cert.residual_plus, cert.residual_minus
            )
            worst_cert_margin = min(
                worst_cert_margin,
                cert.value_plus / cert.tolerance,
                -cert.value_minus / cert.tolerance,
            )
            u0 = field.value(p, a)
            H = field.hessian(p, a)
            froH = float(np.linalg.norm(H))
            za = float(field.powpos(p[2], a))
            tf = obstruction.tangent_form(p, a)
            for xi12 in ((1.0, 0.0), (0.0, 1.0), (1.0, -1.0)):
                d = obstruction.lift_tangent(*xi12, p, a)
                xin = float(d.vector @ d.vector)
                lhs = obstruction.tangent_curvature(d)
                rhs = za * tf.value(*xi12)
                r = abs(lhs - rhs) / (froH * xin)
                if r > worst_tr:
                    worst_tr, in_tr = r, _point_inputs(p, a, xi12=list(xi12))
                for fmap in field.DEFAULT_TEST_MAPS:
                    M = field.compose_hessian(fmap, p, a)
                    f1 = float(fmap.d1(u0))
                    ri = abs(float(d.vector @ M @ d.vector) - f1 * lhs) / (
                        abs(f1) * froH * xin
                    )
                    if ri > worst_fi:
                        worst_fi, in_fi = ri, _point_inputs(
                            p, a, xi12=list(xi12), map=fmap.label
                        )
            for fmap in field.DEFAULT_TEST_MAPS:
                chk = obstruction.composed_hessian_indefinite(
                    p, a, fmap, tol_scale=cfg.tol_cert
                )
                if not chk.passed:
                    composed_failures += 1
                margin = min(-chk.eigenvalues[0], chk.eigenvalues[2]) / chk.scale
                if -margin > worst_find:
                    worst_find = -margin
                    in_find = _point_inputs(p, a, map=fmap.label)
    m = max(cfg.samples, 16)
    sweep_pts = sampling.sample_points(rng, m, *cfg.box)
    sweep_alphas = sampling.log_uniform(rng, *DERIV_ALPHA_RANGE, m)
    worst_det = -np.inf
    in_det = None
    sign_violations = 0
    det_scaled = np.empty(m)
    for i in range(m):
        p, a = sweep_pts[i], float(sweep_alphas[i])
        rf = obstruction.reduced_form(p, a)
        R = obstruction.det_factor(a)
        lhs = rf.det() * float(
            field.powpos(p[0], a + 2.0) * field.powpos(p[1], a + 2.0)
        )
        det_scaled[i] = lhs
        r = abs(lhs - R) / abs(R)
        if r > worst_det:
            worst_det, in_det = r, _point_inputs(p, a)
        if abs(R) > 1e-10 and np.sign(lhs) != np.sign(R):
            sign_violations += 1
    checks = [
        CheckRecord.from_worst(
            "determinant-identity", worst_det, DET_TOL,
            f"worst relative gap of det * x^(a+2) y^(a+2) vs a(a+1)(a-1) over {m} samples",
            in_det,
        ),
        CheckRecord(
            "determinant-sign-pattern",
            "pass" if sign_violations == 0 else "fail",
            float(sign_violations),
            0.0,
            "sign of the scaled determinant matches sign(a - 1)",
        ),
        CheckRecord(
            "certificate-two-sided",
            "pass" if worst_cert_margin >= 1.0 else "fail",
            float(worst_cert_margin),
            1.0,
            "smallest |value|/tolerance over both witnesses of every certificate",
        ),
        CheckRecord.from_worst(
            "certificate-recompute", worst_cert_resid, COEFF_TOL,
            "worst relative gap between witness value and independent recomputation",
        ),
        CheckRecord.from_worst(
            "tangent-reduction-identity", worst_tr, COEFF_TOL,
            "curvature of lifts vs z^a times the restricted form, scaled by |H||xi|^2",
            in_tr,
        ),
        CheckRecord.from_worst(
            "reparametrization-independence", worst_fi, COEFF_TOL,
            "composed form on lifts vs F'(u) times raw form, scaled",
            in_fi,
        ),
        CheckRecord(
            "composed-hessian-indefinite",
            "pass" if composed_failures == 0 else "fail",
            float(worst_find),
            -cfg.tol_cert,
            "negated smallest two-sided eigenvalue margin over maps and points",
            in_find,
        ),
    ]
    return SuiteResult(
        mode="convexifiability",
        alphas=tuple(float(a) for a in alphas),
        checks=checks,
        certificates=certs,
        counts={
            "points": int(points.shape[0]),
            "maps": len(field.DEFAULT_TEST_MAPS),
            "det_samples": m,
        },
        plot_data={
            "sweep_alphas": sweep_alphas,
            "det_scaled": det_scaled,
            "cert_alphas": np.array([c["alpha"] for c in certs]),
            "cert_plus": np.array([c["value_plus"] for c in certs]),
            "cert_minus": np.array([c["value_minus"] for c in certs]),
        },
    )


def _run_alpha_one(cfg: RunConfig, rng) -> SuiteResult:
    if cfg.point is not None:
        points = np.asarray([cfg.point], dtype=float)
    else:
        points = sampling.sample_points(rng, cfg.samples, *cfg.box)
    flips = []
    worst_coeff = -np.inf
    in_coeff = None
    worst_ratio = np.inf
    in_ratio = None
    for p in points:
        for fmap in field.DEFAULT_TEST_MAPS:
            r = obstruction.alpha_one_sign_flip(p, fmap)
            flips.append(r.to_dict())
            if r.coeff_residual > worst_coeff:
                worst_coeff = r.coeff_residual
                in_coeff = _point_inputs(p, 1.0, map=fmap.label)
            ratio = min(
                r.positive.value / r.positive.scale,
                -r.negative.value / r.negative.scale,
            )
            if ratio < worst_ratio:
                worst_ratio = ratio
                in_ratio = _point_inputs(p, 1.0, map=fmap.label)
    checks = [
        CheckRecord(
            "sign-flip-both-signs",
            "pass" if worst_ratio >= 1e-6 else "fail",
            float(worst_ratio),
            1e-6,
            "smallest |G|/(|H||eta|^2) over both-signs witnesses, all maps",
            in_ratio,
        ),
        CheckRecord.from_worst(
            "linear-coefficient-closed-form", worst_coeff, COEFF_TOL,
            "worst relative gap of <H p, g> vs its closed form",
            in_coeff,
        ),
    ]
    first = flips[0]
    return SuiteResult(
        mode="alpha-one",
        alphas=(1.0,),
        checks=checks,
        sign_flips=flips,
        counts={"points": int(points.shape[0]), "maps": len(field.DEFAULT_TEST_MAPS)},
        plot_data={
            "coeff": first["coeff"],
            "curvature_term": first["curvature_term"],
            "point": first["point"],
        },
    )


def _run_lambda_search(cfg: RunConfig, rng) -> SuiteResult:
    alphas = tuple(sorted(cfg.alphas or LAMBDA_ALPHAS))
    pt = np.asarray(cfg.point if cfg.point is not None else (1.0, 1.0, 1.0))
    checks = []
    results = []
    lam_grid = np.geomspace(1e-2, 1e8, 41)
    ratios_by_alpha = {}
    for a in alphas:
        g = field.gradient(pt, a)
        H = field.hessian(pt, a)
        outer = np.outer(g, g)
        ratios = np.empty(lam_grid.size)
        eig_track = np.empty(lam_grid.size)
        for i, lam in enumerate(lam_grid):
            M = H + lam * outer
            eig_track[i] = convexify.min_eig3(M)
            ratios[i] = eig_track[i] / float(np.linalg.norm(M))
        ratios_by_alpha[float(a)] = ratios
        # the smallest eigenvalue must be nondecreasing in lam
        mono_defect = float(max(0.0, np.max(-np.diff(eig_track))))
        checks.append(
            CheckRecord.from_worst(
                f"eigenvalue-monotone-in-lam-a={a:g}",
                mono_defect,
                1e-9 * float(np.linalg.norm(H)),
                "largest decrease of the smallest eigenvalue along the lam ladder",
                _point_inputs(pt, a),
            )
        )
        try:
            res = convexify.min_convexifying_lambda(pt, a, rel_tol=1e-6)
            res = convexify.passing_radius(res, rng)
            results.append(res.to_dict())
            checks.append(
                CheckRecord(
                    f"threshold-found-a={a:g}",
                    "pass",
                    res.lambda_min,
                    float("inf"),
                    f"strict margin {res.margin:.3e}, radius {res.neighborhood_radius}",
                    _point_inputs(pt, a),
                )
            )
        except convexify.NotConvexifiableError as e:
            results.append(
                {
                    "point": list(e.point),
                    "alpha": e.alpha,
                    "lambda_min": None,
                    "reason": e.reason,
                    "candidate": e.candidate,
                    "margin": e.margin,
                }
            )
            checks.append(
                CheckRecord(
                    f"threshold-found-a={a:g}",
                    "fail",
                    float(e.margin),
                    0.0,
                    str(e),
                    _point_inputs(pt, a),
                )
            )
    found = [r for r in results if r.get("lambda_min") is not None]
    if len(found) >= 2:
        lams = [r["lambda_min"] for r in found]
        dec = all(b < a for a, b in zip(lams, lams[1:]))
        checks.append(
            CheckRecord(
                "threshold-decreasing-in-exponent",
                "pass" if dec else "fail",
                float(min(a - b for a, b in zip(lams, lams[1:]))),
                0.0,
                "smallest consecutive decrease along the exponent ladder",
            )
        )
    return SuiteResult(
        mode="lambda-search",
        alphas=alphas,
        checks=checks,
        lambda_results=results,
        counts={"exponents": len(alphas)},
        plot_data={"lam_grid": lam_grid, "ratios_by_alpha": ratios_by_alpha},
    )


_RUNNERS = {
    "verify-derivatives": _run_derivatives,
    "quasiconvexity": _run_quasiconvexity,
    "convexifiability": _run_convexifiability,
    "alpha-one": _run_alpha_one,
    "lambda-search": _run_lambda_search,
}


def run(cfg: RunConfig) -> Report:
    """Execute the configured suite(s) and assemble the report."""
    cfg.validate()
    t0 = time.perf_counter()
    suites = []
    if cfg.mode == "full-suite":
        for i, mode in enumerate(m for m in MODES if m != "full-suite"):
            rng = sampling.spawn(cfg.seed, i)
            suites.append(_RUNNERS[mode](cfg, rng))
    else:
        rng = sampling.spawn(cfg.seed, MODES.index(cfg.mode))
        suites.append(_RUNNERS[cfg.mode](cfg, rng))
    return Report(
        config=cfg.echo(),
        suites=suites,
        wall_time_s=time.perf_counter() - t0,
    )
