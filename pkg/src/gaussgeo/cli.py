"""Command-line surface: evaluation, sweeps, figure-data tables, verification.

Commands: metric, curvature, geodesic, jacobi, complexity, scatter,
prolongation, verify. Every emitted number is produced by exactly one core
operation; the CLI only formats. Output is deterministic: CSV uses 17
significant digits, '.' decimal separator, LF endings; JSON uses a stable
key order. Validity warnings go to stderr (and the JSON ``warnings``
field) without changing the exit code. Exit codes: 0 success, 1
verification failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import warnings

import numpy as np

from . import chaos, complexity, curvature, geodesics, models, oracle, scattering
from .errors import DomainError, GaussGeoError, ProlongationBoundError
from .geodesics import InitialConditions
from .models import ModelParams
from .scattering import ScatteringConfig


def _fmt(x) -> str:
    if isinstance(x, float):
        if x == 0.0:
            x = 0.0  # normalize -0.0 so reruns and branches agree bytewise
        return format(x, ".17g")
    return str(x)


def _no_negzero(obj):
    if isinstance(obj, float):
        return 0.0 if obj == 0.0 else obj
    if isinstance(obj, list):
        return [_no_negzero(v) for v in obj]
    if isinstance(obj, dict):
        return {k: _no_negzero(v) for k, v in obj.items()}
    return obj


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def _emit_rows(rows, columns, fmt, out, extra=None, warn_list=None):
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_fmt(row[c]) for c in columns) for row in rows]
        _write("\n".join(lines) + "\n", out)
    else:
        payload = {"columns": list(columns), "rows": [
            {c: row[c] for c in columns} for row in rows
        ]}
        if extra:
            payload.update(extra)
        payload["warnings"] = warn_list or []
        _write(json.dumps(_no_negzero(payload), indent=2) + "\n", out)


def _emit_record(record: dict, fmt, out, warn_list=None):
    if fmt == "csv":
        lines = ["name,value"]
        for key, value in record.items():
            if isinstance(value, (list, tuple)):
                for i, v in enumerate(value):
                    lines.append(f"{key}_{i},{_fmt(v)}")
            else:
                lines.append(f"{key},{_fmt(value)}")
        _write("\n".join(lines) + "\n", out)
    else:
        payload = dict(record)
        payload["warnings"] = warn_list or []
        _write(json.dumps(_no_negzero(payload), indent=2) + "\n", out)


def _report_warnings(caught) -> list[str]:
    messages = [str(w.message) for w in caught]
    for msg in messages:
        print(f"warning: {msg}", file=sys.stderr)
    return messages


# ---------------------------------------------------------------------------
# command implementations
# ---------------------------------------------------------------------------

def _cmd_metric(args) -> int:
    params = ModelParams(args.r)
    if args.dim == 3:
        g = models.metric_corr3(args.sigma, params)
    else:
        g = models.metric_corr4(args.sigma_x, args.sigma_y, params)
    record = {}
    n = g.shape[0]
    for i in range(n):
        for j in range(i, n):
            record[f"g_{i + 1}{j + 1}"] = float(g[i, j])
    record["determinant"] = float(np.linalg.det(g))
    record["eigenvalues"] = [float(v) for v in np.linalg.eigvalsh(g)]
    if args.format == "json":
        record = {"matrix": [[float(v) for v in row] for row in g],
                  "determinant": record["determinant"],
                  "eigenvalues": record["eigenvalues"]}
    _emit_record(record, args.format, args.out)
    return 0


def _cmd_curvature(args) -> int:
    params = ModelParams(args.r)
    bundle = curvature.bundle(args.sigma, params)
    report = curvature.maximal_symmetry_check(args.sigma, params)
    record = {
        "scalar": bundle.scalar,
        "sectional_12": float(bundle.sectional[0, 1]),
        "sectional_13": float(bundle.sectional[0, 2]),
        "sectional_23": float(bundle.sectional[1, 2]),
        "weyl_max_abs": float(np.abs(bundle.weyl).max()),
        "ricci_identity_residual": report.ricci_residual,
        "riemann_identity_residual": report.riemann_residual,
        "trace_identity_residual": report.trace_residual,
    }
    _emit_record(record, args.format, args.out)
    return 0


def _tau_grid(tau_min, tau_max, n) -> np.ndarray:
    if not tau_max > tau_min:
        raise DomainError("tau grid must be increasing (tau-max > tau-min)")
    grid = np.linspace(tau_min, tau_max, n)
    if tau_min < 0.0 < tau_max and not np.any(grid == 0.0):
        grid = np.sort(np.append(grid, 0.0))
    return grid


def _cmd_geodesic(args) -> int:
    ic = InitialConditions(args.p0, args.sigma0, args.tau0, args.R0)
    params = ModelParams(args.r)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rows = []
        for tau in _tau_grid(args.tau_min, args.tau_max, args.n):
            state = geodesics.joined_path(float(tau), params, ic)
            rows.append({"tau": float(tau), "mu1": state.mu1,
                         "mu2": state.mu2, "sigma": state.sigma})
    _emit_rows(rows, ("tau", "mu1", "mu2", "sigma"), args.format, args.out,
               warn_list=_report_warnings(caught))
    return 0


def _cmd_jacobi(args) -> int:
    ic = InitialConditions(args.p0, args.sigma0, args.tau0, args.R0)
    A0 = geodesics.amplitude_A0(ic)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rows = []
        for tau in np.linspace(0.0, args.tau_max, args.n):
            rows.append({
                "tau": float(tau),
                "intensity": chaos.jacobi_intensity(float(tau), args.omega0, A0),
            })
        estimate = chaos.lyapunov_estimate(args.omega0, A0, args.tau_max)
    extra = {
        "lambda": chaos.lyapunov_exponent(A0),
        "lyapunov_estimate": estimate.value,
        "lyapunov_raw": estimate.raw,
        "jlc_coefficient": chaos.jlc_coefficient(A0),
    }
    warn_list = _report_warnings(caught)
    if args.format == "csv":
        _emit_rows(rows, ("tau", "intensity"), args.format, args.out)
    else:
        _emit_rows(rows, ("tau", "intensity"), args.format, args.out,
                   extra=extra, warn_list=warn_list)
    return 0


def _cmd_complexity(args) -> int:
    ic = InitialConditions(args.p0, args.sigma0, args.tau0, args.R0)
    lam = 2.0 * geodesics.amplitude_A0(ic)
    r_values = args.r if args.r else [0.0]
    rows = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        for tau in _tau_grid(args.tau_min, args.tau_max, args.n):
            tau = float(tau)
            if lam * tau > complexity.LAMBDA_TAU_MAX:
                warnings.warn(
                    f"lambda*tau = {lam * tau:.3g} beyond overflow guard; "
                    "remaining rows truncated"
                )
                break
            base_igc = complexity.igc_closed(tau, ModelParams(0.0), ic)
            base_ige = complexity.ige_closed(tau, ModelParams(0.0), ic)
            for r in r_values:
                params = ModelParams(r)
                igc = complexity.igc_closed(tau, params, ic)
                ige = complexity.ige_closed(tau, params, ic)
                rows.append({
                    "tau": tau, "r": r, "igc": igc, "ige": ige,
                    "ratio": igc / base_igc, "ige_gap": ige - base_ige,
                })
    _emit_rows(rows, ("tau", "r", "igc", "ige", "ratio", "ige_gap"),
               args.format, args.out, warn_list=_report_warnings(caught))
    return 0


def _cmd_scatter(args) -> int:
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        cfg = ScatteringConfig(
            k0=args.k0, sigma_k0=args.sigma_k0, R0=args.R0, L=args.L,
            a_s=args.a_s, reduced_mass=args.mu, hbar=args.hbar,
        )
        ic = cfg.initial_conditions(args.tau0)
        r = scattering.r_qm(cfg)
        record = {
            "r_qm": r,
            "theta0": scattering.phase_shift_exact(cfg, r),
            "cross_section": scattering.cross_section(cfg, r),
            "potential": scattering.potential_from_r(r, cfg),
            "potential_density": scattering.potential_density(cfg),
            "purity": scattering.purity_from_r(cfg, r),
            "purity_series_a_s": scattering.purity_series(cfg),
            "a_s_effective": scattering.scattering_length_from_r(cfg, r),
            "eta_c": scattering.eta_c(cfg),
        }
        try:
            rep = scattering.prolongation(ic, r)
            record["prolongation"] = rep.delta
            record["prolongation_approx"] = rep.delta_approx
            record["r_bound"] = rep.r_bound
        except ProlongationBoundError as exc:
            warnings.warn(str(exc))
            record["prolongation"] = math.nan
            record["prolongation_approx"] = math.nan
            record["r_bound"] = exc.r_bound
        # inline round-trip consistency of the algebraic inversions
        checks = {
            "roundtrip_potential": abs(
                scattering.r_from_potential(cfg, record["potential"]) - r),
            "roundtrip_cross_section": abs(
                scattering.r_from_cross_section(cfg, record["cross_section"]) - r),
            "roundtrip_purity": abs(
                scattering.r_from_purity(cfg, record["purity"]) - r),
        }
        failures = {k: v for k, v in checks.items() if not v <= 1e-10}
        if failures:
            warnings.warn(f"consistency round-trips failed: {failures}")
        record["consistency_max_residual"] = max(checks.values())
    _emit_record(record, args.format, args.out, warn_list=_report_warnings(caught))
    return 0


def _cmd_prolongation(args) -> int:
    ic = InitialConditions(args.p0, args.sigma0, args.tau0, args.R0)
    rows = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        for r in np.linspace(args.r_min, args.r_max, args.n):
            r = float(r)
            try:
                rep = scattering.prolongation(ic, r)
                rows.append({"r": r, "delta_approx": rep.delta_approx,
                             "delta_exact": rep.delta, "flagged": 0})
            except ProlongationBoundError:
                rows.append({"r": r, "delta_approx": math.nan,
                             "delta_exact": math.nan, "flagged": 1})
    extra = {"r_bound": scattering.prolongation(ic, 0.0).r_bound}
    _emit_rows(rows, ("r", "delta_approx", "delta_exact", "flagged"),
               args.format, args.out, extra=extra,
               warn_list=_report_warnings(caught))
    return 0


def _cmd_verify(args) -> int:
    results = oracle.run_verification(
        only=args.only, tol_scale=args.tol_scale, fault=args.inject_fault
    )
    all_passed = all(res.passed for res in results)
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(
            f"[{status}] {res.group}/{res.name}: residual {res.residual:.3e} "
            f"(tolerance {res.tolerance:.3e}, {res.seconds:.2f}s)",
            file=sys.stderr,
        )
    payload = {
        "passed": all_passed,
        "checks": [res.as_dict() for res in results],
    }
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0 if all_passed else 1


# ---------------------------------------------------------------------------
# argument plumbing
# ---------------------------------------------------------------------------

def _add_output_flags(sub):
    sub.add_argument("--format", choices=("csv", "json"), default="json")
    sub.add_argument("--out", default=None, help="output path (default stdout)")
    sub.add_argument("--config", default=None,
                     help="JSON file with defaults; explicit flags override")


def _add_ic_flags(sub):
    sub.add_argument("--p0", type=float, default=1.0)
    sub.add_argument("--sigma0", type=float, default=0.1)
    sub.add_argument("--tau0", type=float, default=1.0)
    sub.add_argument("--R0", type=float, default=10.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussgeo",
        description="Information geometry of correlated Gaussian manifolds",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("metric", help="Fisher-Rao metric, determinant, eigenvalues")
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--r", type=float, default=0.0)
    p.add_argument("--dim", type=int, choices=(3, 4), default=3)
    p.add_argument("--sigma-x", dest="sigma_x", type=float, default=1.0)
    p.add_argument("--sigma-y", dest="sigma_y", type=float, default=1.0)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_metric)

    p = subs.add_parser("curvature", help="curvature constants and isotropy residuals")
    p.add_argument("--sigma", type=float, default=1.0)
    p.add_argument("--r", type=float, default=0.0)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_curvature)

    p = subs.add_parser("geodesic", help="joined collision path table")
    _add_ic_flags(p)
    p.add_argument("--r", type=float, default=0.0)
    p.add_argument("--tau-min", dest="tau_min", type=float, default=-2.0)
    p.add_argument("--tau-max", dest="tau_max", type=float, default=2.0)
    p.add_argument("--n", type=int, default=81)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_geodesic)

    p = subs.add_parser("jacobi", help="Jacobi intensity table and Lyapunov estimates")
    _add_ic_flags(p)
    p.add_argument("--omega0", type=float, default=1.0)
    p.add_argument("--tau-max", dest="tau_max", type=float, default=5.0)
    p.add_argument("--n", type=int, default=101)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_jacobi)

    p = subs.add_parser("complexity", help="IGC/IGE table over a tau grid")
    _add_ic_flags(p)
    p.add_argument("--r", type=float, action="append", default=None,
                   help="repeatable correlation values")
    p.add_argument("--tau-min", dest="tau_min", type=float, default=0.1)
    p.add_argument("--tau-max", dest="tau_max", type=float, default=2.0)
    p.add_argument("--n", type=int, default=20)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_complexity)

    p = subs.add_parser("scatter", help="scattering/entanglement report")
    p.add_argument("--k0", type=float, default=1.0)
    p.add_argument("--sigma-k0", dest="sigma_k0", type=float, default=0.1)
    p.add_argument("--R0", type=float, default=10.0)
    p.add_argument("--L", type=float, default=0.1)
    p.add_argument("--a-s", dest="a_s", type=float, default=0.0)
    p.add_argument("--mu", type=float, default=0.5, help="reduced mass")
    p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--tau0", type=float, default=1.0)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_scatter)

    p = subs.add_parser("prolongation", help="entanglement-duration sweep over r")
    _add_ic_flags(p)
    p.add_argument("--r-min", dest="r_min", type=float, default=0.0)
    p.add_argument("--r-max", dest="r_max", type=float, default=0.01)
    p.add_argument("--n", type=int, default=11)
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_prolongation)

    p = subs.add_parser("verify", help="oracle-vs-closed-form verification suite")
    p.add_argument("--only", choices=oracle.GROUPS, default=None)
    p.add_argument("--tol-scale", dest="tol_scale", type=float, default=1.0)
    p.add_argument("--inject-fault", dest="inject_fault", default=None,
                   help=argparse.SUPPRESS)  # negative-control test hook
    _add_output_flags(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def _apply_config(args: argparse.Namespace, argv: list[str]) -> None:
    """Fill args from a JSON config file; explicit flags keep priority."""
    if not getattr(args, "config", None):
        return
    with open(args.config, encoding="utf-8") as fh:
        config = json.load(fh)
    explicit = {a.lstrip("-").split("=")[0].replace("-", "_")
                for a in argv if a.startswith("--")}
    for key, value in config.items():
        attr = key.replace("-", "_")
        if attr in explicit or not hasattr(args, attr):
            continue
        setattr(args, attr, value)


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args, argv)
        return args.fn(args)
    except GaussGeoError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
