"""PNG figure rendering for reports (written alongside the delimited output).

Each suite with recorded plot data gets one figure; rendering is opt-in
through the CLI --figures flag and never touches the JSON/CSV payloads.
"""

from __future__ import annotations

import os

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

__all__ = ["render"]

_DPI = 150
_FIGSIZE = (6.4, 4.2)


def _save(fig, outdir, name):
    path = os.path.join(outdir, name)
    fig.savefig(path, dpi=_DPI, bbox_inches="tight")
    plt.close(fig)
    return path


def _fig_derivatives(suite, outdir):
    d = suite.plot_data
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    for key, label in (("grad_rel", "gradient"), ("hess_rel", "hessian")):
        vals = np.asarray(d[key])
        ax.hist(np.log10(np.maximum(vals, 1e-18)), bins=40, alpha=0.6, label=label)
    ax.set_xlabel("log10 relative gap, closed form vs central differences")
    ax.set_ylabel("samples")
    ax.legend()
    ax.set_title("derivative oracle agreement")
    return _save(fig, outdir, "derivative_errors.png")


def _fig_quasiconvexity(suite, outdir):
    d = suite.plot_data
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    for a, ratios in d["margins_by_alpha"].items():
        ax.hist(
            np.asarray(ratios),
            bins=50,
            histtype="step",
            label=f"a = {a:g}",
        )
    ax.set_xlabel("segment margin / (1 + |max endpoint value|)")
    ax.set_ylabel("samples")
    ax.set_yscale("log")
    ax.legend()
    ax.set_title("segment inequality margins (nonpositive = holds)")
    return _save(fig, outdir, "segment_margins.png")


def _fig_convexifiability(suite, outdir):
    d = suite.plot_data
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10.5, 4.2))
    a_grid = np.linspace(0.1, 3.0, 200)
    ax1.plot(a_grid, a_grid * (a_grid + 1) * (a_grid - 1), "k-", lw=1, label="a(a+1)(a-1)")
    ax1.plot(d["sweep_alphas"], d["det_scaled"], ".", ms=4, alpha=0.6, label="samples")
    ax1.axhline(0.0, color="gray", lw=0.5)
    ax1.set_xlabel("exponent a")
    ax1.set_ylabel("det(reduced form) * x^(a+2) y^(a+2)")
    ax1.legend()
    ax1.set_title("determinant factor")
    ax2.plot(d["cert_alphas"], d["cert_plus"], "^", ms=4, alpha=0.6, label="positive witness")
    ax2.plot(d["cert_alphas"], d["cert_minus"], "v", ms=4, alpha=0.6, label="negative witness")
    ax2.axhline(0.0, color="gray", lw=0.5)
    ax2.set_yscale("symlog", linthresh=1e-6)
    ax2.set_xlabel("exponent a")
    ax2.set_ylabel("witness curvature value")
    ax2.legend()
    ax2.set_title("two-sided certificates")
    return _save(fig, outdir, "determinant_and_certificates.png")


def _fig_alpha_one(suite, outdir):
    d = suite.plot_data
    c, K = d["coeff"], d["curvature_term"]
    ts = np.linspace(-6.0, 6.0, 400)
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    for kappa in (1.0, -1.0):
        ax.plot(ts, 2.0 * kappa * c * ts + K, label=f"kappa = {kappa:+g}")
    ax.axhline(0.0, color="gray", lw=0.5)
    ax.set_xlabel("t  (direction t*(x, y, z) + kappa*gradient)")
    ax.set_ylabel("perturbed curvature form (identity map)")
    ax.legend()
    pt = ", ".join(f"{v:g}" for v in d["point"])
    ax.set_title(f"sign flip of the perturbed form at ({pt})")
    return _save(fig, outdir, "signflip_form.png")


def _fig_lambda(suite, outdir):
    d = suite.plot_data
    fig, ax = plt.subplots(figsize=_FIGSIZE)
    for a, ratios in d["ratios_by_alpha"].items():
        ax.plot(d["lam_grid"], -np.asarray(ratios), label=f"a = {a:g}")
    ax.set_xscale("log")
    ax.set_yscale("log")
    ax.set_xlabel("lam")
    ax.set_ylabel("-(min eigenvalue) / frobenius norm of H + lam g g^T")
    ax.legend()
    ax.set_title("PSD defect vs lam (never reaches zero)")
    return _save(fig, outdir, "lambda_margins.png")


_RENDERERS = {
    "verify-derivatives": _fig_derivatives,
    "quasiconvexity": _fig_quasiconvexity,
    "convexifiability": _fig_convexifiability,
    "alpha-one": _fig_alpha_one,
    "lambda-search": _fig_lambda,
}


def render(report, outdir) -> list:
    """Render one PNG per suite with plot data; returns the written paths."""
    os.makedirs(outdir, exist_ok=True)
    paths = []
    for suite in report.suites:
        renderer = _RENDERERS.get(suite.mode)
        if renderer is not None and suite.plot_data:
            paths.append(renderer(suite, outdir))
    return paths
