"""Command-line driver: scenario configs in, CSV tables and run manifests out.

Usage::

    airy-born pattern --config scenario.yaml --out results/
    airy-born verify --seed 3 --out results/

Every subcommand writes ``<name>.csv`` and ``<name>.manifest.json`` into the
output directory. Exit codes: 0 success, 1 invalid configuration, 2
computation failure, 3 verification failure.
"""

from __future__ import annotations

import argparse
import copy
import hashlib
import json
import math
import sys
import time
import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np
import yaml

from . import __version__
from .amplitude import DEFAULT_RTOL, polar_from_flat
from .observables import (
    AngularGrid,
    TargetDistribution,
    azimuthal_ratio,
    classify_pattern,
    ClassificationAmbiguousError,
    critical_size,
    macroscopic_cross_section,
    pattern_grid,
    size_inequality_check,
)
from .packet import AiryPacketParams, BeamKinematics, special_point, validate_regime
from .potentials import hydrogen_spec, yukawa_spec
from .quadrature import QuadratureError
from .special_functions import MAX_ZERO_INDEX, AiryError
from .verification import VERIFY_RTOL, run_suite

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_COMPUTE = 2
EXIT_VERIFY = 3

PRESETS = ("fig2a", "fig2b", "fig2c", "fig2d", "fig2e", "fig3a", "fig3b", "fig3c", "fig4", "fig5", "fig6")


class ConfigError(ValueError):
    """Invalid scenario configuration; ``path`` names the offending field."""

    def __init__(self, path, message):
        self.path = path
        super().__init__(f"{path}: {message}")


# ----------------------------------------------------------------- schema

_DEFAULTS = {
    "potential": {"kind": "hydrogen", "a": 1.0, "V0": None, "mu": None},
    "packet": {"sigma_perp": 1.0, "sigma_z": 50.0, "xi_x": 2.0, "xi_y": 2.0,
               "b_x": 0.0, "b_y": 0.0, "special_point": None},
    "kinematics": {"p_i_a": 10.0, "kappa0_a": 0.0},
    "grid": {"theta_x": [-0.3, 0.3], "theta_y": [-0.3, 0.3], "nx": 201, "ny": 201},
    "target": None,
    "analysis": {"theta_fixed": 0.1, "phi_reference": math.pi / 4, "n_phi": 72,
                 "special_indices": [[1, 1], [2, 2], [3, 3]], "verify_draws": 100},
}
_TARGET_KEYS = {"b0_x": 0.0, "b0_y": 0.0, "sigma_b": 1.0, "special_point": None}


def _number(path, v, positive=False, nonneg=False):
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(path, f"expected a number, got {v!r}")
    v = float(v)
    if not math.isfinite(v):
        raise ConfigError(path, "must be finite")
    if positive and not v > 0:
        raise ConfigError(path, "must be positive")
    if nonneg and v < 0:
        raise ConfigError(path, "must be non-negative")
    return v


def _int(path, v, minimum):
    if isinstance(v, bool) or not isinstance(v, int) or v < minimum:
        raise ConfigError(path, f"expected an integer >= {minimum}, got {v!r}")
    return v


def _index_pair(path, v):
    if not (isinstance(v, (list, tuple)) and len(v) == 2):
        raise ConfigError(path, "expected a pair [m, n]")
    m, n = (_int(f"{path}[{i}]", x, 0) for i, x in enumerate(v))
    if m == 0 and n == 0:
        raise ConfigError(path, "at least one index must be non-zero")
    if max(m, n) > MAX_ZERO_INDEX:
        raise ConfigError(path, f"zero indices are tabulated up to {MAX_ZERO_INDEX}")
    return [m, n]


def _merge(path, defaults, given):
    if given is None:
        given = {}
    if not isinstance(given, dict):
        raise ConfigError(path, "expected a mapping")
    unknown = sorted(set(given) - set(defaults))
    if unknown:
        raise ConfigError(f"{path}.{unknown[0]}" if path else unknown[0], "unknown key")
    out = copy.deepcopy(defaults)
    out.update(given)
    return out


def normalize_config(raw) -> dict:
    """Validate a raw mapping and fill defaults; returns the canonical dict."""
    cfg = _merge("", {k: v for k, v in _DEFAULTS.items()}, raw)
    pot = _merge("potential", _DEFAULTS["potential"], cfg["potential"])
    if pot["kind"] not in ("hydrogen", "yukawa"):
        raise ConfigError("potential.kind", "must be 'hydrogen' or 'yukawa'")
    if pot["kind"] == "hydrogen":
        pot["a"] = _number("potential.a", pot["a"], positive=True)
        if pot["V0"] is not None or pot["mu"] is not None:
            raise ConfigError("potential.V0", "only used for the Yukawa potential")
    else:
        pot["V0"] = _number("potential.V0", pot["V0"])
        pot["mu"] = _number("potential.mu", pot["mu"], positive=True)
        pot["a"] = 2.0 / pot["mu"]
    cfg["potential"] = pot

    pk = _merge("packet", _DEFAULTS["packet"], cfg["packet"])
    pk["sigma_perp"] = _number("packet.sigma_perp", pk["sigma_perp"], positive=True)
    pk["sigma_z"] = _number("packet.sigma_z", pk["sigma_z"], positive=True)
    for k in ("xi_x", "xi_y"):
        pk[k] = _number(f"packet.{k}", pk[k], nonneg=True)
    for k in ("b_x", "b_y"):
        pk[k] = _number(f"packet.{k}", pk[k])
    if pk["special_point"] is not None:
        pk["special_point"] = _index_pair("packet.special_point", pk["special_point"])
    cfg["packet"] = pk

    kin = _merge("kinematics", _DEFAULTS["kinematics"], cfg["kinematics"])
    kin["p_i_a"] = _number("kinematics.p_i_a", kin["p_i_a"], positive=True)
    kin["kappa0_a"] = _number("kinematics.kappa0_a", kin["kappa0_a"], nonneg=True)
    cfg["kinematics"] = kin

    gr = _merge("grid", _DEFAULTS["grid"], cfg["grid"])
    for k in ("theta_x", "theta_y"):
        v = gr[k]
        if not (isinstance(v, (list, tuple)) and len(v) == 2):
            raise ConfigError(f"grid.{k}", "expected [min, max]")
        gr[k] = [_number(f"grid.{k}[0]", v[0]), _number(f"grid.{k}[1]", v[1])]
        if not (gr[k][0] < gr[k][1] and max(abs(gr[k][0]), abs(gr[k][1])) < math.pi / 2):
            raise ConfigError(f"grid.{k}", "bounds must increase and lie in (-pi/2, pi/2)")
    gr["nx"] = _int("grid.nx", gr["nx"], 2)
    gr["ny"] = _int("grid.ny", gr["ny"], 2)
    cfg["grid"] = gr

    if cfg["target"] is not None:
        tg = _merge("target", _TARGET_KEYS, cfg["target"])
        tg["b0_x"] = _number("target.b0_x", tg["b0_x"])
        tg["b0_y"] = _number("target.b0_y", tg["b0_y"])
        tg["sigma_b"] = _number("target.sigma_b", tg["sigma_b"], nonneg=True)
        if tg["special_point"] is not None:
            tg["special_point"] = _index_pair("target.special_point", tg["special_point"])
        cfg["target"] = tg

    an = _merge("analysis", _DEFAULTS["analysis"], cfg["analysis"])
    an["theta_fixed"] = _number("analysis.theta_fixed", an["theta_fixed"], nonneg=True)
    an["phi_reference"] = _number("analysis.phi_reference", an["phi_reference"])
    an["n_phi"] = _int("analysis.n_phi", an["n_phi"], 4)
    an["verify_draws"] = _int("analysis.verify_draws", an["verify_draws"], 1)
    if not isinstance(an["special_indices"], list) or not an["special_indices"]:
        raise ConfigError("analysis.special_indices", "expected a non-empty list of [m, n] pairs")
    an["special_indices"] = [_index_pair(f"analysis.special_indices[{i}]", p)
                             for i, p in enumerate(an["special_indices"])]
    cfg["analysis"] = an

    try:
        build_scenario(cfg)
    except ConfigError:
        raise
    except (ValueError, IndexError, ArithmeticError) as exc:
        raise ConfigError("packet", str(exc)) from exc
    return cfg


def parse_config(text: str) -> dict:
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigError("<document>", f"not valid YAML: {exc}") from exc
    return normalize_config(raw or {})


def serialize_config(cfg: dict) -> str:
    return yaml.safe_dump(cfg, sort_keys=True, default_flow_style=None)


def load_config(path) -> dict:
    return parse_config(Path(path).read_text())


def preset_text(name: str) -> str:
    if name not in PRESETS:
        raise ConfigError("<preset>", f"unknown preset {name!r}")
    return resources.files("airy_born").joinpath("presets", f"{name}.yaml").read_text()


def config_hash(cfg: dict) -> str:
    return hashlib.sha256(serialize_config(cfg).encode()).hexdigest()


# ---------------------------------------------------------------- scenario

@dataclass(frozen=True)
class Scenario:
    packet: AiryPacketParams
    kinematics: BeamKinematics
    potential: object
    grid: AngularGrid
    target: TargetDistribution | None


def build_scenario(cfg: dict) -> Scenario:
    p = cfg["potential"]
    pot = hydrogen_spec(p["a"]) if p["kind"] == "hydrogen" else yukawa_spec(p["V0"], p["mu"])
    k = cfg["packet"]
    packet = AiryPacketParams(k["sigma_perp"], k["xi_x"], k["xi_y"], k["b_x"], k["b_y"], k["sigma_z"])
    if k["special_point"]:
        sp = special_point(packet, *k["special_point"])
        packet = packet.with_impact(sp.b_x, sp.b_y)
    kn = cfg["kinematics"]
    kin = BeamKinematics.from_kappa0(kn["p_i_a"], kn["kappa0_a"])
    g = cfg["grid"]
    grid = AngularGrid(g["theta_x"][0], g["theta_x"][1], g["theta_y"][0], g["theta_y"][1], g["nx"], g["ny"])
    target = None
    if cfg["target"] is not None:
        t = cfg["target"]
        b0x, b0y = t["b0_x"], t["b0_y"]
        if t["special_point"]:
            sp = special_point(packet, *t["special_point"])
            b0x, b0y = sp.b_x, sp.b_y
        target = TargetDistribution(b0x, b0y, t["sigma_b"])
    return Scenario(packet, kin, pot, grid, target)


# ------------------------------------------------------------------ output

def _fmt(v) -> str:
    return "%.17g" % v


def write_csv(path: Path, header, rows):
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(v if isinstance(v, str) else _fmt(v) for v in row) + "\n")


def write_manifest(path: Path, cfg, output, wall_time, warn, tolerance, extra=None):
    manifest = {
        "config_hash": config_hash(cfg),
        "tool_version": __version__,
        "quadrature_tolerance": tolerance,
        "wall_time_s": round(wall_time, 3),
        "warnings": list(warn),
        "output": output.name,
    }
    if extra:
        manifest.update(extra)
    path.write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")


# -------------------------------------------------------------- subcommands

def _regime_warnings(sc: Scenario):
    return validate_regime(sc.packet, sc.kinematics, sc.potential.a)


def run_pattern(cfg, out: Path, tolerance=DEFAULT_RTOL, threads=1, name="pattern", target=None):
    sc = build_scenario(cfg)
    pg = pattern_grid(sc.grid, sc.packet, sc.kinematics, sc.potential, target=target,
                      rtol=tolerance, threads=threads)
    csv = out / f"{name}.csv"
    write_csv(csv, ["theta_x", "theta_y", "density"], pg.rows())
    extra = {}
    try:
        pc = classify_pattern(pg)
        extra["classification"] = {"kind": pc.kind.value, "peak_azimuths": pc.peak_azimuths,
                                   "ring_theta": pc.ring_theta}
    except (ClassificationAmbiguousError, ValueError) as exc:
        extra["classification"] = {"kind": None, "error": str(exc)}
    return csv, extra


def run_mesoscopic(cfg, out: Path, tolerance=DEFAULT_RTOL, threads=1):
    sc = build_scenario(cfg)
    if sc.target is None:
        raise ConfigError("target", "the mesoscopic run needs a target section")
    return run_pattern(cfg, out, tolerance, threads, name="mesoscopic", target=sc.target)


def run_azimuth(cfg, out: Path, tolerance=DEFAULT_RTOL, threads=1):
    sc = build_scenario(cfg)
    an = cfg["analysis"]
    phi = np.arange(an["n_phi"]) * (2 * math.pi / an["n_phi"])
    r = azimuthal_ratio(an["theta_fixed"], phi, sc.packet, sc.kinematics, sc.potential,
                        phi_reference=an["phi_reference"], rtol=tolerance, target=sc.target)
    csv = out / "azimuth.csv"
    write_csv(csv, ["phi", "ratio"], zip(phi, r))
    return csv, {"variation": float(r.max() - r.min())}


def run_special_points(cfg, out: Path, tolerance=DEFAULT_RTOL, threads=1):
    sc = build_scenario(cfg)
    base = AiryPacketParams(sc.packet.sigma_perp, sc.packet.xi_x, sc.packet.xi_y,
                            cfg["packet"]["b_x"], cfg["packet"]["b_y"], sc.packet.sigma_z)
    sig = base.sigma_perp
    rows = []
    for m, n in cfg["analysis"]["special_indices"]:
        sp = special_point(base, m, n)
        rows.append((str(m), str(n), sp.kind.value, sp.b_x, sp.b_y, sp.b_x / sig, sp.b_y / sig))
    csv = out / "special_points.csv"
    write_csv(csv, ["m", "n", "kind", "b_x", "b_y", "b_x_over_sigma", "b_y_over_sigma"], rows)
    return csv, {}


def run_macroscopic(cfg, out: Path, tolerance=DEFAULT_RTOL, threads=1):
    sc = build_scenario(cfg)
    tx, ty = sc.grid.axes()
    rows = []
    for x in tx:
        for y in ty:
            th, ph = polar_from_flat(x, y)
            rows.append((x, y, macroscopic_cross_section(th, ph, sc.packet, sc.kinematics, sc.potential)))
    csv = out / "macroscopic.csv"
    write_csv(csv, ["theta_x", "theta_y", "cross_section"], rows)
    return csv, {}


def run_critical_size(cfg, out: Path, tolerance=DEFAULT_RTOL, threads=1):
    sc = build_scenario(cfg)
    if sc.target is not None:
        b0 = (sc.target.b0_x, sc.target.b0_y)
    else:
        b0 = (sc.packet.b_x, sc.packet.b_y)
    sig = sc.packet.sigma_perp
    rows = []
    report = {}
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        for axis, b, xi in (("x", b0[0], sc.packet.xi_x), ("y", b0[1], sc.packet.xi_y)):
            if xi <= 0:
                continue
            sc_val = critical_size(b, xi, sig)
            ok = size_inequality_check(b, xi, sig)
            rows.append((axis, b, xi, sig, sc_val, sc_val / sig, "true" if ok else "false"))
            report[axis] = sc_val
    csv = out / "critical_size.csv"
    write_csv(csv, ["axis", "b0", "xi", "sigma_perp", "sigma_c", "sigma_c_over_sigma_perp",
                    "beyond_main_maximum"], rows)
    for axis, v in report.items():
        print(f"sigma_c ({axis}) = {v:.6g} = {v / sig:.4f} sigma_perp")
    return csv, {"sigma_c": report, "clamp_warnings": [str(w.message) for w in caught]}


def run_verify(cfg, out: Path, tolerance=DEFAULT_RTOL, threads=1, seed=0):
    results = run_suite(seed=seed, count=cfg["analysis"]["verify_draws"],
                        rtol=min(tolerance, 1e-8), threads=threads)
    rows = []
    for i, r in enumerate(results):
        d = r.draw
        p = d.packet
        rows.append((str(i), d.potential.kind.value, p.sigma_perp, p.xi_x, p.xi_y, p.b_x, p.b_y,
                     d.kinematics.p_i, d.theta, d.phi, r.amplitude_1d.real, r.amplitude_1d.imag,
                     r.amplitude_2d.real, r.amplitude_2d.imag, r.relative_difference))
    csv = out / "verify.csv"
    write_csv(csv, ["draw", "potential", "sigma_perp", "xi_x", "xi_y", "b_x", "b_y", "p_i", "theta", "phi",
                    "F1_re", "F1_im", "F2_re", "F2_im", "rel_diff"], rows)
    worst = max(r.relative_difference for r in results)
    failed = sum(not r.passed for r in results)
    print(f"verify: {len(results) - failed}/{len(results)} draws within {VERIFY_RTOL:g} (worst {worst:.3g})")
    return csv, {"seed": seed, "worst_relative_difference": worst, "failed_draws": failed}


COMMANDS = {
    "pattern": run_pattern,
    "azimuth": run_azimuth,
    "special-points": run_special_points,
    "mesoscopic": run_mesoscopic,
    "macroscopic": run_macroscopic,
    "critical-size": run_critical_size,
    "verify": run_verify,
}


def build_parser():
    ap = argparse.ArgumentParser(prog="airy-born", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        src = sp.add_mutually_exclusive_group()
        src.add_argument("--config", type=Path, help="scenario YAML file")
        src.add_argument("--preset", choices=PRESETS, help="bundled scenario")
        sp.add_argument("--out", type=Path, default=Path("."), help="output directory")
        sp.add_argument("--threads", type=int, default=1, help="worker threads (0 = auto)")
        sp.add_argument("--tolerance", type=float, default=DEFAULT_RTOL, help="quadrature relative tolerance")
        sp.add_argument("--seed", type=int, default=0, help="seed of the verification draws")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.config is not None:
            cfg = load_config(args.config)
        elif args.preset is not None:
            cfg = parse_config(preset_text(args.preset))
        else:
            cfg = normalize_config({})
        if not (args.tolerance > 0 and math.isfinite(args.tolerance)):
            raise ConfigError("--tolerance", "must be positive")
        if args.threads < 0:
            raise ConfigError("--threads", "must be >= 0")
    except (ConfigError, OSError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    args.out.mkdir(parents=True, exist_ok=True)
    run = COMMANDS[args.command]
    kwargs = {"tolerance": args.tolerance, "threads": args.threads}
    if args.command == "verify":
        kwargs["seed"] = args.seed
    start = time.perf_counter()
    try:
        warn = _regime_warnings(build_scenario(cfg))
        csv, extra = run(cfg, args.out, **kwargs)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (QuadratureError, AiryError, ArithmeticError) as exc:
        print(f"computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    for w in warn:
        print(f"warning: {w}", file=sys.stderr)
    manifest = args.out / f"{csv.stem}.manifest.json"
    write_manifest(manifest, cfg, csv, time.perf_counter() - start, warn + extra.pop("clamp_warnings", []),
                   args.tolerance, extra)
    if args.command == "verify" and extra["failed_draws"]:
        return EXIT_VERIFY
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
