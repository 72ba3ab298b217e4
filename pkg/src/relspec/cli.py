"""Command-line front end.

Subcommands: spectral-measure, heat-trace, zeta, eta, partition, casimir,
verify.  Each emits a CSV table (default) or a JSON mirror of the same
fields, to stdout or --out.  Floats are printed with 17 significant digits
and '\\n' line endings, so identical configurations produce byte-identical
output.

Exit codes: 0 success, 2 invalid parameters or configuration, 3 numerical
non-convergence.

Flag values override config-file values (--config, a flat JSON object keyed
by flag names with underscores), which override built-in defaults.
"""

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .models import (BoundStateRegimeError, OnePointModel, TwoPointModel,
                     spectral_measure)
from .quad import NonConvergenceError, QuadratureSpec
from .thermo import (StepTooLargeError, ThermalState, casimir_force, log_eta,
                     one_point_log_eta_closed, one_point_log_z_closed,
                     one_point_partition, two_point_partition)
from .verify import run_all
from .zetareg import (ContinuationRequiredError, ZetaPoleError,
                      one_point_heat_trace_closed, one_point_laurent,
                      relative_heat_trace, relative_zeta_in_strip,
                      two_point_laurent)


class CliValidationError(ValueError):
    """Bad parameters or configuration; maps to exit code 2."""


_DEFAULTS = {
    "model": "one-point",
    "beta": 1.0,
    "ell": 1.0,
    "format": "csv",
    "jobs": 1,
    "v_min": 0.0, "v_max": 10.0,
    "t_min": 1e-3, "t_max": 10.0,
    "s_min": -0.45, "s_max": 0.45,
    "tau_min": 0.5, "tau_max": 5.0,
    "samples": 25,
    "a_min": 1.0, "a_max": 10.0, "steps": 10,
    "step": 1e-4,
    "log_spacing": False,
    "laurent": False,
    "inject_failure": False,
}


@dataclass
class RunConfig:
    """Resolved options for one CLI invocation."""

    command: str
    model: str = "one-point"
    alpha: Optional[float] = None
    alpha0: Optional[float] = None
    alpha1: Optional[float] = None
    a: Optional[float] = None
    beta: float = 1.0
    ell: float = 1.0
    format: str = "csv"
    out: Optional[str] = None
    abs_tol: Optional[float] = None
    rel_tol: Optional[float] = None
    jobs: int = 1
    extra: dict = field(default_factory=dict)

    def quadrature_spec(self):
        if self.abs_tol is None and self.rel_tol is None:
            return None
        return QuadratureSpec(
            abs_tol=self.abs_tol if self.abs_tol is not None else 1e-12,
            rel_tol=self.rel_tol if self.rel_tol is not None else 1e-11)

    def build_model(self):
        if self.model == "one-point":
            if self.alpha is None:
                raise CliValidationError(
                    "one-point model requires --alpha")
            try:
                return OnePointModel(self.alpha)
            except ValueError as exc:
                raise CliValidationError(str(exc)) from exc
        if self.model == "two-point":
            missing = [n for n, v in (("--alpha0", self.alpha0),
                                      ("--alpha1", self.alpha1),
                                      ("--a", self.a)) if v is None]
            if missing:
                raise CliValidationError(
                    f"two-point model requires {' '.join(missing)}")
            try:
                return TwoPointModel(self.alpha0, self.alpha1, self.a)
            except ValueError as exc:
                raise CliValidationError(str(exc)) from exc
        raise CliValidationError(f"unknown model kind {self.model!r}")

    def thermal_state(self):
        try:
            return ThermalState(self.beta, self.ell)
        except ValueError as exc:
            raise CliValidationError(str(exc)) from exc


def _add_common(sub):
    sub.add_argument("--model", choices=("one-point", "two-point"))
    sub.add_argument("--alpha", type=float)
    sub.add_argument("--alpha0", type=float)
    sub.add_argument("--alpha1", type=float)
    sub.add_argument("--a", type=float)
    sub.add_argument("--beta", type=float)
    sub.add_argument("--ell", type=float)
    sub.add_argument("--format", choices=("csv", "json"))
    sub.add_argument("--out")
    sub.add_argument("--abs-tol", type=float)
    sub.add_argument("--rel-tol", type=float)
    sub.add_argument("--jobs", type=int)
    sub.add_argument("--config")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="relspec",
        description="Relative spectral functions and zeta-regularized "
                    "thermodynamics for point interactions.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("spectral-measure",
                        help="tabulate the relative spectral measure e(v)")
    _add_common(p)
    p.add_argument("--v-min", type=float)
    p.add_argument("--v-max", type=float)
    p.add_argument("--samples", type=int)

    p = subs.add_parser("heat-trace",
                        help="tabulate the relative heat trace")
    _add_common(p)
    p.add_argument("--t-min", type=float)
    p.add_argument("--t-max", type=float)
    p.add_argument("--samples", type=int)
    p.add_argument("--log-spacing", action="store_const", const=True)

    p = subs.add_parser("zeta", help="tabulate the relative zeta function "
                                     "or emit its Laurent data at s = -1/2")
    _add_common(p)
    p.add_argument("--s-min", type=float)
    p.add_argument("--s-max", type=float)
    p.add_argument("--samples", type=int)
    p.add_argument("--laurent", action="store_const", const=True)

    p = subs.add_parser("eta", help="tabulate the relative eta logarithm")
    _add_common(p)
    p.add_argument("--tau-min", type=float)
    p.add_argument("--tau-max", type=float)
    p.add_argument("--samples", type=int)

    p = subs.add_parser("partition",
                        help="partition function and vacuum energy")
    _add_common(p)

    p = subs.add_parser("casimir", help="sweep the Casimir force over the "
                                        "separation of a two-point model")
    _add_common(p)
    p.add_argument("--a-min", type=float)
    p.add_argument("--a-max", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--step", type=float,
                   help="relative finite-difference step (default 1e-4)")

    p = subs.add_parser("verify", help="run the internal consistency suite")
    _add_common(p)
    p.add_argument("--inject-failure", action="store_const", const=True,
                   help=argparse.SUPPRESS)
    return parser


def resolve_config(args) -> RunConfig:
    """Merge flags over config-file values over defaults."""
    values = vars(args).copy()
    command = values.pop("command")
    values.pop("config", None)
    file_values = {}
    if getattr(args, "config", None):
        try:
            with open(args.config, "r", encoding="utf-8") as fh:
                file_values = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise CliValidationError(f"cannot read config file: {exc}")
        if not isinstance(file_values, dict):
            raise CliValidationError("config file must hold a JSON object")

    def pick(key):
        if values.get(key) is not None:
            return values[key]
        if key in file_values:
            return file_values[key]
        return _DEFAULTS.get(key)

    core = {k: pick(k) for k in ("model", "alpha", "alpha0", "alpha1", "a",
                                 "beta", "ell", "format", "out",
                                 "abs_tol", "rel_tol", "jobs")}
    extra_keys = set(values) - set(core) | {
        k for k in _DEFAULTS if k not in core}
    extra = {k: pick(k) for k in sorted(extra_keys) if pick(k) is not None}
    return RunConfig(command=command, extra=extra, **core)


def _fmt(x):
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _csv_cell(x):
    text = _fmt(x)
    if "," in text or '"' in text:
        return '"' + text.replace('"', '""') + '"'
    return text


def emit(cfg: RunConfig, columns, rows, meta=None):
    if cfg.format == "json":
        payload = {"columns": list(columns),
                   "rows": [list(r) for r in rows],
                   "meta": meta or {}}
        text = json.dumps(payload, sort_keys=True) + "\n"
    else:
        lines = [",".join(columns)]
        lines += [",".join(_csv_cell(x) for x in row) for row in rows]
        text = "\n".join(lines) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _grid(lo, hi, n, logspace=False):
    if n < 2:
        raise CliValidationError("samples must be >= 2")
    if logspace:
        if lo <= 0:
            raise CliValidationError("log spacing requires positive bounds")
        la, lb = math.log(lo), math.log(hi)
        return [math.exp(la + i * (lb - la) / (n - 1)) for i in range(n)]
    return [lo + i * (hi - lo) / (n - 1) for i in range(n)]


def _map_ordered(fn, items, jobs):
    if jobs is None or jobs <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


def cmd_spectral_measure(cfg: RunConfig):
    model = cfg.build_model()
    v_min = cfg.extra["v_min"]
    v_max = cfg.extra["v_max"]
    samples = int(cfg.extra["samples"])
    if not (0 <= v_min < v_max):
        raise CliValidationError("need 0 <= v-min < v-max")
    e = spectral_measure(model)
    grid = _grid(v_min, v_max, samples)
    rows = _map_ordered(lambda v: (v, e.eval(v)), grid, cfg.jobs)
    emit(cfg, ("v", "e"), rows, meta={"model": model.describe()})
    return 0


def cmd_heat_trace(cfg: RunConfig):
    model = cfg.build_model()
    spec = cfg.quadrature_spec()
    grid = _grid(cfg.extra["t_min"], cfg.extra["t_max"],
                 int(cfg.extra["samples"]),
                 logspace=bool(cfg.extra.get("log_spacing")))
    e = spectral_measure(model)
    if isinstance(model, OnePointModel):
        def row(t):
            q = relative_heat_trace(e, t, spec)
            c = one_point_heat_trace_closed(model, t)
            return (t, q, c, abs(q - c))
        columns = ("t", "heat_trace", "closed_form", "abs_diff")
    else:
        def row(t):
            return (t, relative_heat_trace(e, t, spec))
        columns = ("t", "heat_trace")
    rows = _map_ordered(row, grid, cfg.jobs)
    emit(cfg, columns, rows, meta={"model": model.describe()})
    return 0


def cmd_zeta(cfg: RunConfig):
    model = cfg.build_model()
    spec = cfg.quadrature_spec()
    if cfg.extra.get("laurent"):
        if isinstance(model, OnePointModel):
            lau = one_point_laurent(model)
        else:
            lau = two_point_laurent(model, spec)
        emit(cfg, ("residue", "finite_part"),
             [(lau.residue, lau.finite_part)],
             meta={"model": model.describe(), "expansion_point": -0.5})
        return 0
    e = spectral_measure(model)
    grid = _grid(cfg.extra["s_min"], cfg.extra["s_max"],
                 int(cfg.extra["samples"]))
    rows = _map_ordered(
        lambda s: (s, relative_zeta_in_strip(e, s, spec)), grid, cfg.jobs)
    emit(cfg, ("s", "zeta"), rows, meta={"model": model.describe()})
    return 0


def cmd_eta(cfg: RunConfig):
    model = cfg.build_model()
    spec = cfg.quadrature_spec()
    e = spectral_measure(model)
    grid = _grid(cfg.extra["tau_min"], cfg.extra["tau_max"],
                 int(cfg.extra["samples"]))
    if isinstance(model, OnePointModel) and model.alpha > 0:
        def row(tau):
            q = log_eta(e, tau, spec)
            c = one_point_log_eta_closed(model, tau)
            return (tau, q, c, abs(q - c))
        columns = ("tau", "log_eta", "closed_form", "abs_diff")
    else:
        def row(tau):
            return (tau, log_eta(e, tau, spec))
        columns = ("tau", "log_eta")
    rows = _map_ordered(row, grid, cfg.jobs)
    emit(cfg, columns, rows, meta={"model": model.describe()})
    return 0


def cmd_partition(cfg: RunConfig):
    model = cfg.build_model()
    th = cfg.thermal_state()
    spec = cfg.quadrature_spec()
    if isinstance(model, OnePointModel):
        report = one_point_partition(model, th, spec)
        closed = one_point_log_z_closed(model, th)
        explicit = "pass" if abs(report.log_z - closed) < 1e-8 else "fail"
        def log_z_at(beta):
            return one_point_partition(
                model, ThermalState(beta, th.ell), spec).log_z
    else:
        report = two_point_partition(model, th, spec)
        explicit = "n/a"
        def log_z_at(beta):
            return two_point_partition(
                model, ThermalState(beta, th.ell), spec).log_z
    # low-temperature slope annotation: -d(log Z)/dbeta at beta = 30
    slope = -(log_z_at(30.5) - log_z_at(29.5))
    columns = ("model", "beta", "ell", "log_z", "vacuum_energy", "eta_log",
               "residue", "finite_part", "explicit_check",
               "slope_beta30", "slope_vs_evac")
    rows = [(report.model, th.beta, th.ell, report.log_z,
             report.vacuum_energy, report.eta_log, report.laurent.residue,
             report.laurent.finite_part, explicit, slope,
             abs(slope - report.vacuum_energy))]
    emit(cfg, columns, rows,
         meta={"model": report.model,
               "slope_note": "slope_beta30 approximates the vacuum energy "
                             "at low temperature"})
    return 0


def cmd_casimir(cfg: RunConfig):
    if cfg.model != "two-point":
        raise CliValidationError("casimir requires --model two-point")
    for name in ("alpha0", "alpha1"):
        if getattr(cfg, name) is None:
            raise CliValidationError(f"casimir requires --{name}")
    th = cfg.thermal_state()
    spec = cfg.quadrature_spec()
    a_min = cfg.extra["a_min"]
    a_max = cfg.extra["a_max"]
    steps = int(cfg.extra["steps"])
    h = cfg.extra["step"]
    if not (0 < a_min < a_max):
        raise CliValidationError("need 0 < a-min < a-max")
    grid = _grid(a_min, a_max, max(steps, 2))

    def row(a):
        try:
            model = TwoPointModel(cfg.alpha0, cfg.alpha1, a)
            force = casimir_force(model, th, h=h, spec=spec)
        except (BoundStateRegimeError, StepTooLargeError) as exc:
            sys.stderr.write(f"warning: skipping a = {a:g}: {exc}\n")
            return None
        return (a, force.value, force.error_estimate)

    rows = [r for r in _map_ordered(row, grid, cfg.jobs) if r is not None]
    emit(cfg, ("a", "force", "error_estimate"), rows,
         meta={"sign_convention": "force = -dE_vacuum/da "
                                  "(negative = attractive)",
               "alpha0": cfg.alpha0, "alpha1": cfg.alpha1})
    return 0


def cmd_verify(cfg: RunConfig):
    results, ok = run_all(inject_failure=bool(
        cfg.extra.get("inject_failure")))
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        sys.stdout.write(f"{status} {r.name}: {r.detail} "
                         f"(tolerance {r.tolerance:g})\n")
    summary = {
        "all_passed": ok,
        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail,
                    "value": r.value, "tolerance": r.tolerance}
                   for r in results],
    }
    text = json.dumps(summary, sort_keys=True) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0 if ok else 1


_COMMANDS = {
    "spectral-measure": cmd_spectral_measure,
    "heat-trace": cmd_heat_trace,
    "zeta": cmd_zeta,
    "eta": cmd_eta,
    "partition": cmd_partition,
    "casimir": cmd_casimir,
    "verify": cmd_verify,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = resolve_config(args)
        return _COMMANDS[cfg.command](cfg)
    except (CliValidationError, BoundStateRegimeError,
            ContinuationRequiredError, ZetaPoleError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except NonConvergenceError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
