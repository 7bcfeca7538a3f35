"""Batch front end: sweeps and checks with CSV/JSON artifacts.

Subcommands: norm-sweep, invariant-bound, dyadic, geometry, spherical-check,
propagate, cusp-scan, selftest.  Exit codes: 0 pass, 1 assertion failure,
2 configuration error.  Outputs are byte-identical for identical configs and
seeds: every CSV carries a header row and a trailing comment block with the
config hash and the tolerances in force.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import hashlib
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

import numpy as np

from . import algebra, continuation, cusp, geometry, invnorm, norms, selftest, spectral
from .errors import ConfigError, Sl2RepError
from .repmodels import SpectralParameter

EXIT_OK = 0
EXIT_ASSERTION = 1
EXIT_CONFIG = 2


@dataclasses.dataclass
class SweepConfig:
    command: str
    lambdas: list
    eps_start: float = 0.125
    eps_stop: float = 2.0 ** -20
    eps_points: int = 18
    sobolev_order: int = 2
    spectrum_path: str = ""
    thresholds: tuple = (10.0, 100.0, 1000.0, 10000.0)
    samples: int = 500
    seed: int = 0
    tolerances: dict = dataclasses.field(default_factory=dict)

    def eps_grid(self):
        if self.eps_points < 1:
            raise ConfigError("eps grid needs at least one point")
        if not (0.0 < self.eps_stop <= self.eps_start <= 1.0):
            raise ConfigError("eps grid must satisfy 0 < stop <= start <= 1")
        if self.eps_points == 1:
            return [self.eps_start]
        ratio = (self.eps_stop / self.eps_start) ** (1.0 / (self.eps_points - 1))
        return [self.eps_start * ratio ** i for i in range(self.eps_points)]

    def parameters(self):
        out = []
        for item in self.lambdas:
            if not isinstance(item, dict) or "series" not in item:
                raise ConfigError(f"bad lambda entry {item!r}")
            if item["series"] == "principal":
                out.append(SpectralParameter.principal(float(item.get("t", 0.0))))
            elif item["series"] == "complementary":
                out.append(SpectralParameter.complementary(float(item["lam"])))
            else:
                raise ConfigError(f"unknown series {item['series']!r}")
        return out


_DEFAULT_LAMBDAS = [
    {"series": "principal", "t": 0.0},
    {"series": "principal", "t": 1.0},
    {"series": "complementary", "lam": -0.5},
]


def load_config(path, command, seed):
    data = {}
    if path:
        try:
            data = json.loads(Path(path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config root must be a JSON object")
    known = {f.name for f in dataclasses.fields(SweepConfig)}
    unknown = set(data) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    data.setdefault("command", command)
    data.setdefault("lambdas", _DEFAULT_LAMBDAS)
    if seed is not None:
        data["seed"] = seed
    casts = {"eps_start": float, "eps_stop": float, "eps_points": int,
             "sobolev_order": int, "samples": int, "seed": int,
             "spectrum_path": str, "command": str}
    for key, cast in casts.items():
        if key in data:
            try:
                data[key] = cast(data[key])
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"bad value for {key!r}: {data[key]!r}") from exc
    if isinstance(data.get("thresholds"), list):
        try:
            data["thresholds"] = tuple(float(t) for t in data["thresholds"])
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"bad thresholds: {exc}") from exc
    if not isinstance(data.get("tolerances", {}), dict):
        raise ConfigError("tolerances must be an object")
    if not isinstance(data["lambdas"], list):
        raise ConfigError("lambdas must be a list")
    cfg = SweepConfig(**data)
    if not cfg.lambdas:
        raise ConfigError("lambda list must not be empty")
    cfg.parameters()  # validate eagerly
    return cfg


def config_hash(cfg):
    payload = json.dumps(dataclasses.asdict(cfg), sort_keys=True, default=str)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def write_csv(path, header, rows, cfg, tolerances=()):
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
        fh.write(f"# config_hash: {config_hash(cfg)}\n")
        fh.write(f"# seed: {cfg.seed}\n")
        for name, value in tolerances:
            fh.write(f"# tolerance {name}: {_fmt(value)}\n")


def _fmt(v):
    if isinstance(v, float):
        return repr(v)
    return v


def _lam_label(par):
    if par.series == "principal":
        return f"principal_t={par.t:g}"
    return f"complementary_lam={par.lam.real:g}"


# ---------------------------------------------------------------------------
# subcommands


def _norm_sweep_row(args):
    series, value, eps = args
    if series == "principal":
        ln = spectral.log_norm_sq_principal(value, eps)
        rhs = (math.pi / 2.0 - 6.0 * eps) * value if 0 < eps < 0.1 else math.nan
        return (eps, ln, math.exp(ln) if ln < 700 else math.inf,
                rhs, ln - rhs if math.isfinite(rhs) else math.nan)
    par = SpectralParameter.complementary(value)
    val = norms.complementary_norm(continuation.line_restriction(eps, par), par)
    return (eps, 2.0 * math.log(val), val * val, math.nan, math.nan)


def cmd_norm_sweep(cfg, out, jobs, strict):
    grid = cfg.eps_grid()
    band_tol = float(cfg.tolerances.get("log_band", 3.0))
    failures = []
    for par in cfg.parameters():
        value = par.t if par.series == "principal" else par.lam.real
        tasks = [(par.series, value, eps) for eps in grid]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                rows = list(pool.map(_norm_sweep_row, tasks))
        else:
            rows = [_norm_sweep_row(t) for t in tasks]
        out_rows = [(eps, ln, n2, rhs, margin) for (eps, ln, n2, rhs, margin) in rows]
        ratios = [n2 / math.log(1.0 / eps) for (eps, ln, n2, _, _) in rows
                  if math.isfinite(n2) and eps < 1.0]
        band = max(ratios) / min(ratios) if ratios else math.nan
        write_csv(out / f"norm_sweep_{_lam_label(par)}.csv",
                  ["eps", "log_norm_sq", "norm_sq", "log_reference", "margin"],
                  out_rows, cfg, tolerances=[("log_band", band_tol)])
        if band > band_tol:
            failures.append(f"{_lam_label(par)}: log band {band:.2f} exceeds {band_tol}")
    return failures


def cmd_invariant_bound(cfg, out, jobs, strict):
    grid = cfg.eps_grid()
    exp_tol = float(cfg.tolerances.get("log_law_exponent", 0.05))
    failures = []
    for par in cfg.parameters():
        rows = []
        for eps in grid:
            val = invnorm.invariant_norm_bound(par, eps, k=cfg.sobolev_order)
            rows.append((eps, val, val / math.log(1.0 / eps)))
        xs = [math.log(e) for e, _, _ in rows]
        ys = [math.log(r) for _, _, r in rows]
        slope = float(np.polyfit(xs, ys, 1)[0])
        write_csv(out / f"invariant_bound_{_lam_label(par)}.csv",
                  ["eps", "certificate", "certificate_over_log"],
                  rows, cfg, tolerances=[("log_law_exponent", exp_tol),
                                         ("fitted_exponent", slope)])
        if abs(slope) > exp_tol:
            failures.append(f"{_lam_label(par)}: certificate exponent {slope:+.3f}")
    return failures


def cmd_dyadic(cfg, out, jobs, strict):
    grid = [e for e in cfg.eps_grid() if e <= 0.25]
    failures = []
    for kappa in (-1.0, -0.5, 0.0):
        fam = invnorm.power_family(kappa, k=cfg.sobolev_order)
        rows = []
        for eps in grid:
            cert = invnorm.dyadic_bound(fam, eps)
            direct = norms.l2_line(invnorm.family_vector(fam, eps))
            rows.append((eps, cert.value, cert.eps_term, direct,
                         1 if direct <= cert.value else 0))
            if direct > cert.value:
                failures.append(f"kappa={kappa}: certificate below the concrete "
                                f"norm at eps={eps}")
        fit_rows = [(e, v) for e, v, *_ in rows if e <= 2.0 ** -8]
        slope = math.nan
        if len(fit_rows) >= 2:
            slope = float(np.polyfit([math.log(e) for e, _ in fit_rows],
                                     [math.log(v) for _, v in fit_rows], 1)[0])
        write_csv(out / f"dyadic_kappa_{kappa:+.1f}.csv".replace("+", "p").replace("-", "m"),
                  ["eps", "certificate", "eps_term", "l2_line", "sound"],
                  rows, cfg, tolerances=[("target_exponent", min(kappa + 0.5, 0.0)),
                                         ("fitted_exponent", slope)])
    return failures


def cmd_geometry(cfg, out, jobs, strict):
    rng = np.random.default_rng(cfg.seed)
    rows = []
    fails = 0
    for i in range(1000):
        a = complex(rng.uniform(-10, 10), rng.uniform(0, 10) + 1e-9)
        b = complex(rng.uniform(-10, 10), -rng.uniform(0, 10) - 1e-9)
        form = geometry.form_from_points(geometry.PointPair(a, b))
        ok = geometry.is_positive_form(form)
        fails += 0 if ok else 1
        g2, z2 = geometry.diagonalize_form(form)
        back = algebra.transform_form(g2, geometry.diagonal_form(z2))
        err = max(abs(back.p - form.p), abs(back.q - form.q), abs(back.s - form.s))
        if i < 100:
            rows.append((a.real, a.imag, b.real, b.imag, int(ok), err))
    write_csv(out / "geometry_roundtrip.csv",
              ["a_re", "a_im", "b_re", "b_im", "positive", "recompose_error"],
              rows, cfg, tolerances=[("recompose", 1e-9)])
    return [f"{fails} pairs left the positive domain"] if fails else []


def cmd_spherical_check(cfg, out, jobs, strict):
    tol = float(cfg.tolerances.get("oracle", 1e-5))
    failures = []
    rows = []
    for par in cfg.parameters():
        if par.series != "principal":
            continue
        for eps in (0.1, 0.01):
            vec = continuation.spherical_vector(continuation.boundary_form(eps).form, par)
            direct = norms.l2_circle(vec) ** 2
            oracle = continuation.norm_sq_oracle(par, eps)
            rel = abs(direct - oracle) / direct
            rows.append((par.t, eps, direct, oracle, rel))
            if rel > tol:
                failures.append(f"t={par.t:g} eps={eps}: oracle deviation {rel:.2e}")
    write_csv(out / "spherical_check.csv",
              ["t", "eps", "norm_sq_quadrature", "norm_sq_oracle", "relative_deviation"],
              rows, cfg, tolerances=[("oracle", tol)])
    return failures


def cmd_propagate(cfg, out, jobs, strict):
    if cfg.spectrum_path:
        try:
            raw = json.loads(Path(cfg.spectrum_path).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read spectrum {cfg.spectrum_path}: {exc}") from exc
        try:
            entries = [spectral.SpectrumEntry(float(r["lambda"]),
                                              complex(float(r["c_re"]), float(r["c_im"])))
                       for r in raw]
        except (KeyError, TypeError) as exc:
            raise ConfigError(f"bad spectrum record: {exc}") from exc
    else:
        entries = spectral.weyl_spectrum(100.0, 1.0, seed=cfg.seed)
    thresholds = [t for t in cfg.thresholds if t >= math.e]
    if not thresholds:
        raise ConfigError("need at least one threshold >= e")
    premise = spectral.premise_constant(entries, [1.0 / t for t in thresholds])
    rows = []
    failures = []
    for t in thresholds:
        psum = spectral.partial_sum(entries, t)
        bound = spectral.propagate(premise, t)
        ok = psum <= bound
        rows.append((t, psum, bound, int(ok)))
        if not ok:
            failures.append(f"partial sum exceeds bound at T={t:g}")
    write_csv(out / "propagate.csv", ["T", "partial_sum", "bound", "ok"],
              rows, cfg, tolerances=[("premise", premise)])
    return failures


def cmd_cusp_scan(cfg, out, jobs, strict):
    slope_tol = float(cfg.tolerances.get("dw_slope", 0.1))
    rng = np.random.default_rng(cfg.seed)
    samples = cusp.siegel_samples(rng, cfg.samples)
    max_prod, rows, slope = cusp.dw_bounded_scan(samples)
    write_csv(out / "cusp_scan.csv", ["height", "diameter", "weight", "product"],
              rows, cfg, tolerances=[("dw_slope", slope_tol),
                                     ("fitted_slope", slope)])
    if slope > slope_tol:
        return [f"ln(dw) slope {slope:+.3f} exceeds {slope_tol}"]
    return []


def cmd_selftest(cfg, out, jobs, strict):
    results = selftest.run_all(verbose=True)
    # timings stay on stdout; the CSV is byte-identical across runs
    rows = []
    for r in results:
        detail = r.detail if r.number != 13 else \
            f"runtime and digest checks passed: {r.passed}"
        rows.append((r.number, r.name, int(r.passed), detail))
    write_csv(out / "selftest.csv", ["criterion", "name", "passed", "detail"],
              rows, cfg, tolerances=[("acceptance", "per criterion, stated in detail")])
    return [r.line() for r in results if not r.passed]


_COMMANDS = {
    "norm-sweep": cmd_norm_sweep,
    "invariant-bound": cmd_invariant_bound,
    "dyadic": cmd_dyadic,
    "geometry": cmd_geometry,
    "spherical-check": cmd_spherical_check,
    "propagate": cmd_propagate,
    "cusp-scan": cmd_cusp_scan,
    "selftest": cmd_selftest,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sl2rep",
        description="Sweeps and verification tables for the spherical-series numerics.")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--config", default="", help="JSON config path")
    parser.add_argument("--out", default="out", help="output directory")
    parser.add_argument("--seed", type=int, default=None, help="seed override")
    parser.add_argument("--jobs", type=int, default=1, help="parallel workers")
    parser.add_argument("--strict", action="store_true", help="warnings are fatal")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, args.command, args.seed)
        if cfg.command != args.command:
            raise ConfigError(f"config command {cfg.command!r} does not match "
                              f"{args.command!r}")
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        if args.strict:
            import warnings

            warnings.simplefilter("error")
        failures = _COMMANDS[args.command](cfg, out, max(1, args.jobs), args.strict)
    except ConfigError as exc:
        print(json.dumps({"error": "config", "message": str(exc)}), file=sys.stderr)
        return EXIT_CONFIG
    except Sl2RepError as exc:
        print(json.dumps({"error": "assertion", "message": str(exc)}), file=sys.stderr)
        return EXIT_ASSERTION
    if failures:
        print(json.dumps({"error": "assertion", "failures": failures}, indent=2),
              file=sys.stderr)
        return EXIT_ASSERTION
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
