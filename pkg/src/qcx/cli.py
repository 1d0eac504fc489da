"""Command-line front end.

Exit status: 0 when every check passes, 1 on numeric failures (the report
carries the failing records), 2 on configuration errors.  The seed falls
back to the QCX_SEED environment variable, then to the built-in default.
"""

from __future__ import annotations

import argparse
import os
import sys

from .report import FORMATS, MODES, ConfigError, RunConfig, run
from .sampling import DEFAULT_SEED

_EPILOG = """\
defaults: --samples 100, --seed QCX_SEED or %d, --box 0.1,10, --format json,
--tol-grad 1e-6, --tol-hess 1e-4, --tol-cert 1e-10; every report echoes the
resolved configuration.  modes and their default exponent ladders:
verify-derivatives (log-uniform in [0.1, 3]), quasiconvexity
(0.25, 0.5, 1, 1.5, 2), convexifiability (0.25, 0.5, 0.75, 0.9), alpha-one
(1), lambda-search (1.05, 1.1, 1.25, 1.5, 2, 3), full-suite (all of the
above).""" % DEFAULT_SEED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="qcx",
        description=(
            "Numerical verification suites for the quasi-convex field "
            "u(x, y, z) = z^a (x^-a + y^-a) on the open positive octant: "
            "derivative oracles, segment tests, convexification obstruction "
            "certificates, and the exponential-threshold search."
        ),
        epilog=_EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--mode", choices=MODES, default="full-suite")
    p.add_argument(
        "--alpha",
        action="append",
        metavar="A[,A...]",
        help="exponent or comma-separated ladder; repeatable",
    )
    p.add_argument("--point", metavar="X,Y,Z", help="fixed base point")
    p.add_argument("--samples", type=int, default=100, metavar="N")
    p.add_argument("--seed", type=int, default=None, metavar="N")
    p.add_argument("--tol-grad", type=float, default=1e-6, metavar="T")
    p.add_argument("--tol-hess", type=float, default=1e-4, metavar="T")
    p.add_argument("--tol-cert", type=float, default=1e-10, metavar="T")
    p.add_argument("--box", default="0.1,10", metavar="LO,HI")
    p.add_argument("--out", metavar="PATH", help="write the report here instead of stdout")
    p.add_argument("--format", dest="fmt", choices=FORMATS, default="json")
    p.add_argument(
        "--figures",
        metavar="DIR",
        help="render PNG figures of the report into DIR (next to any --out file)",
    )
    p.add_argument(
        "--timing",
        action="store_true",
        help="embed wall time in the json payload (breaks byte-for-byte determinism)",
    )
    return p


def _parse_floats(text, expect=None, what="value"):
    try:
        vals = tuple(float(tok) for tok in str(text).split(",") if tok.strip() != "")
    except ValueError as e:
        raise ConfigError(f"could not parse {what} from {text!r}: {e}") from None
    if expect is not None and len(vals) != expect:
        raise ConfigError(f"expected {expect} comma-separated {what}s, got {text!r}")
    return vals


def config_from_args(args) -> RunConfig:
    alphas = None
    if args.alpha:
        alphas = tuple(
            v for chunk in args.alpha for v in _parse_floats(chunk, what="exponent")
        )
        if not alphas:
            raise ConfigError("--alpha given but no exponents parsed")
    point = _parse_floats(args.point, expect=3, what="coordinate") if args.point else None
    box = _parse_floats(args.box, expect=2, what="box bound")
    seed = args.seed
    if seed is None:
        env = os.environ.get("QCX_SEED", "").strip()
        if env:
            try:
                seed = int(env)
            except ValueError:
                raise ConfigError(f"QCX_SEED must be an integer, got {env!r}") from None
        else:
            seed = DEFAULT_SEED
    return RunConfig(
        mode=args.mode,
        alphas=alphas,
        point=point,
        samples=args.samples,
        seed=seed,
        tol_grad=args.tol_grad,
        tol_hess=args.tol_hess,
        tol_cert=args.tol_cert,
        box=box,
        out=args.out,
        fmt=args.fmt,
        figures=args.figures,
        timing=bool(args.timing),
    ).validate()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ConfigError as e:
        print(parser.format_usage(), end="", file=sys.stderr)
        print(f"qcx: error: {e}", file=sys.stderr)
        return 2
    report = run(cfg)
    if cfg.fmt == "json":
        payload = report.to_json(timing=cfg.timing)
    elif cfg.fmt == "csv":
        payload = report.to_csv()
    else:
        payload = report.to_text()
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    if cfg.figures:
        from . import figures

        paths = figures.render(report, cfg.figures)
        for path in paths:
            print(f"qcx: wrote {path}", file=sys.stderr)
    for mode, c in report.failures():
        print(
            f"qcx: FAIL {mode}/{c.name}: value {c.value:.6e} vs tolerance "
            f"{c.tolerance:.6e}; inputs {c.inputs}",
            file=sys.stderr,
        )
    return 0 if report.passed else 1


if __name__ == "__main__":
    raise SystemExit(main())
