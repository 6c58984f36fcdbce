"""Command-line front end.

Subcommands: poincare | quantum | classical | compare | bifurcation |
fixed-points | floquet | ion-params.  Every numeric run writes a CSV with
a commented metadata header; identical config + seed reproduces the file
byte for byte (timestamp line aside).

Exit codes: 0 success, 2 config error, 3 numeric failure, 4 I/O error.
KIS_THREADS caps kernel parallelism, KIS_NUMBA=0 forces the numpy kernels.
"""

import argparse
import sys

import numpy as np

from . import __version__
from ._kernels import BACKEND
from .classical import (ClassicalPoint, ensemble_energy_trace, gaussian_ensemble,
                        grid_points, poincare_section)
from .config import build_config, parse_scalar
from .errors import ConfigError, NumericError, TruncationOverflow
from .fock import FockBasis, coherent_state
from .ions import IonParams, report
from .output import CsvWriter
from .params import MapParams
from .quantum import (build_kick, evolve, floquet_analysis, ground_state_probability,
                      mean_number, number_distribution)
from .stability import bifurcation_curves, default_r_sq_max, find_period1_orbits

ENERGY_NOTE = "e_classical = <R^2> - 1/2 (half-quantum removed; comparable to mean_n)"

_MAP_KEYS = {"theta": "angle", "mu": "angle", "g": "float"}
_MAP_DEFAULTS = {"theta": 2.0 * np.pi, "mu": 0.01 * np.pi, "g": 1.2}

_STATE_KEYS = {"dim": "int", "eps_tail": "float", "alpha_re": "float",
               "alpha_im": "float", "phi_tau": "float"}
_STATE_DEFAULTS = {"dim": 128, "eps_tail": 1e-8, "alpha_re": 0.0,
                   "alpha_im": 0.0, "phi_tau": 0.01}

SCHEMAS = {
    "poincare": {**_MAP_KEYS, "kicks": "int", "seed": "int", "out": "str",
                 "grid_n": "int", "grid_min": "float", "grid_max": "float",
                 "escape_r_sq": "float"},
    "quantum": {**_MAP_KEYS, **_STATE_KEYS, "kicks": "int", "seed": "int",
                "out": "str"},
    "classical": {**_MAP_KEYS, "alpha_re": "float", "alpha_im": "float",
                  "phi_tau": "float", "ensemble_n": "int", "kicks": "int",
                  "seed": "int", "out": "str"},
    "compare": {**_MAP_KEYS, **_STATE_KEYS, "ensemble_n": "int", "kicks": "int",
                "seed": "int", "out": "str"},
    "bifurcation": {"r_min": "float", "r_max": "float", "samples": "int",
                    "n_values": "int_tuple", "seed": "int", "out": "str"},
    "fixed-points": {**_MAP_KEYS, "r_sq_max": "float", "seed": "int", "out": "str"},
    "floquet": {**_MAP_KEYS, **_STATE_KEYS, "seed": "int", "out": "str"},
    "ion-params": {"omega": "frequency", "eta": "float", "t_carrier": "duration",
                   "omega1": "frequency", "omega2": "frequency", "eta_r": "float",
                   "delta1": "frequency", "delta2": "frequency",
                   "t_raman": "duration", "out": "str"},
}

DEFAULTS = {
    "poincare": {**_MAP_DEFAULTS, "kicks": 500, "seed": 0, "grid_n": 20,
                 "grid_min": -3.0, "grid_max": 3.0, "escape_r_sq": 1e4},
    "quantum": {**_MAP_DEFAULTS, **_STATE_DEFAULTS, "kicks": 100, "seed": 0},
    "classical": {**_MAP_DEFAULTS, "alpha_re": 0.0, "alpha_im": 0.0,
                  "phi_tau": 0.01, "ensemble_n": 100000, "kicks": 100, "seed": 0},
    "compare": {**_MAP_DEFAULTS, **_STATE_DEFAULTS, "ensemble_n": 100000,
                "kicks": 100, "seed": 0},
    "bifurcation": {"r_min": 0.01, "r_max": 2.0, "samples": 400,
                    "n_values": (-1, 0, 1), "seed": 0},
    "fixed-points": {**_MAP_DEFAULTS, "r_sq_max": 0.0, "seed": 0},
    "floquet": {**_MAP_DEFAULTS, **_STATE_DEFAULTS, "seed": 0},
    "ion-params": {"omega": 0.0, "eta": 0.0, "t_carrier": 0.0, "omega1": 0.0,
                   "omega2": 0.0, "eta_r": 0.0, "delta1": 0.0, "delta2": 0.0,
                   "t_raman": 0.0},
}


def _map_params(cfg: dict, kicks: int = 0) -> MapParams:
    if cfg["g"] <= 0:
        raise ConfigError(f"g must be positive, got {cfg['g']}")
    return MapParams.from_g(cfg["theta"], cfg["mu"], cfg["g"], kicks=kicks)


def _basis(cfg: dict) -> FockBasis:
    if cfg["dim"] < 2:
        raise ConfigError(f"dim must be >= 2, got {cfg['dim']}")
    if cfg["eps_tail"] <= 0:
        raise ConfigError(f"eps_tail must be positive, got {cfg['eps_tail']}")
    return FockBasis(dim=cfg["dim"], eps_tail=cfg["eps_tail"])


def _writer(cfg: dict, command: str, columns: list, notes: tuple = ()) -> CsvWriter:
    out = cfg.get("out") or f"{command.replace('-', '_')}.csv"
    # the output path is not part of the computation; keeping it out of the
    # metadata lets runs to different files stay byte-comparable
    meta = {k: v for k, v in cfg.items() if k != "out"}
    return CsvWriter(out, command, __version__, BACKEND, meta, columns, notes)


def cmd_poincare(cfg: dict) -> int:
    if cfg["grid_n"] < 1:
        raise ConfigError(f"grid_n must be >= 1, got {cfg['grid_n']}")
    params = _map_params(cfg, cfg["kicks"])
    seeds = grid_points(cfg["grid_n"], cfg["grid_min"], cfg["grid_max"])
    section = poincare_section(seeds, params, cfg["kicks"], cfg["escape_r_sq"])
    with _writer(cfg, "poincare", ["seed_id", "kick", "x1", "x2", "escaped"]) as w:
        for i in range(section.n_seeds):
            length = section.orbit_length(i)
            esc = int(section.escape_kick[i])
            for k in range(length):
                escaped = 1 if (esc >= 0 and k == esc) else 0
                w.write_row([i, k, section.orbits[i, k, 0],
                             section.orbits[i, k, 1], escaped])
    return 0


def _quantum_trace(cfg: dict):
    """Evolve the configured coherent state; on overflow return the partial
    trajectory plus the failing kick index."""
    params = _map_params(cfg, cfg["kicks"])
    basis = _basis(cfg)
    alpha = complex(cfg["alpha_re"], cfg["alpha_im"])
    state = coherent_state(basis, alpha)
    prop = build_kick(params, basis)
    try:
        return evolve(state, prop, cfg["kicks"]), None
    except TruncationOverflow as exc:
        if exc.partial is None:
            raise
        return exc.partial, exc.kick


def _quantum_rows(traj, phi_tau: float):
    for k, state in enumerate(traj.states):
        p = number_distribution(state)
        yield k, mean_number(state), ground_state_probability(p, phi_tau), \
            traj.tail_mass[k]


def cmd_quantum(cfg: dict) -> int:
    traj, failed_kick = _quantum_trace(cfg)
    with _writer(cfg, "quantum", ["kick", "mean_n", "p_g", "tail_mass"]) as w:
        for k, mean_n, p_g, tail in _quantum_rows(traj, cfg["phi_tau"]):
            w.write_row([k, mean_n, p_g, tail])
        if failed_kick is not None:
            w.write_marker(f"truncation_overflow kick={failed_kick}")
    if failed_kick is not None:
        print(f"truncation overflow at kick {failed_kick}; partial output written",
              file=sys.stderr)
        return 3
    return 0


def _classical_trace(cfg: dict):
    params = _map_params(cfg, cfg["kicks"])
    center = ClassicalPoint(cfg["alpha_re"], cfg["alpha_im"])
    ens = gaussian_ensemble(center, cfg["ensemble_n"], cfg["seed"])
    return ensemble_energy_trace(ens, params, cfg["kicks"], cfg["phi_tau"])


def cmd_classical(cfg: dict) -> int:
    if cfg["ensemble_n"] < 1:
        raise ConfigError(f"ensemble_n must be >= 1, got {cfg['ensemble_n']}")
    trace = _classical_trace(cfg)
    with _writer(cfg, "classical", ["kick", "e_classical", "cos_sq_phi_tau_e"],
                 notes=(ENERGY_NOTE,)) as w:
        for k in range(trace.energies.size):
            w.write_row([k, trace.energies[k], trace.cos_sq[k]])
    return 0


def cmd_compare(cfg: dict) -> int:
    if cfg["ensemble_n"] < 1:
        raise ConfigError(f"ensemble_n must be >= 1, got {cfg['ensemble_n']}")
    trace = _classical_trace(cfg)
    traj, failed_kick = _quantum_trace(cfg)
    columns = ["kick", "mean_n", "p_g", "e_classical", "cos_sq_phi_tau_e",
               "tail_mass"]
    with _writer(cfg, "compare", columns, notes=(ENERGY_NOTE,)) as w:
        for k, mean_n, p_g, tail in _quantum_rows(traj, cfg["phi_tau"]):
            w.write_row([k, mean_n, p_g, trace.energies[k], trace.cos_sq[k], tail])
        if failed_kick is not None:
            w.write_marker(f"truncation_overflow kick={failed_kick}")
    if failed_kick is not None:
        print(f"truncation overflow at kick {failed_kick}; partial output written",
              file=sys.stderr)
        return 3
    return 0


def cmd_bifurcation(cfg: dict) -> int:
    curves = bifurcation_curves(cfg["r_min"], cfg["r_max"],
                                n_values=tuple(cfg["n_values"]),
                                samples=cfg["samples"])
    with _writer(cfg, "bifurcation", ["family", "n", "sign", "r", "theta"]) as w:
        for c in curves:
            for r, theta in zip(c.r, c.theta):
                w.write_row([c.family, c.n, c.sign, r, theta])
    return 0


def cmd_fixed_points(cfg: dict) -> int:
    params = _map_params(cfg)
    if params.mu == 0.0:
        raise ConfigError("fixed-points requires mu != 0")
    r_sq_max = cfg["r_sq_max"] if cfg["r_sq_max"] > 0 else default_r_sq_max(params)
    records = find_period1_orbits(params, r_sq_max)
    columns = ["x1", "x2", "radius_sq", "quadrant", "trace", "eig1_re", "eig1_im",
               "eig2_re", "eig2_im", "stability", "radial_criterion", "boundary",
               "residual"]
    cfg = dict(cfg, r_sq_max=r_sq_max)
    with _writer(cfg, "fixed-points", columns) as w:
        for rec in records:
            e1, e2 = rec.eigenvalues
            w.write_row([rec.point.x1, rec.point.x2, rec.radius_sq, rec.quadrant,
                         rec.trace, e1.real, e1.imag, e2.real, e2.imag,
                         rec.stability.value, rec.radial_criterion,
                         rec.boundary, rec.residual])
    return 0


def cmd_floquet(cfg: dict) -> int:
    params = _map_params(cfg)
    basis = _basis(cfg)
    state = coherent_state(basis, complex(cfg["alpha_re"], cfg["alpha_im"]))
    prop = build_kick(params, basis)
    spectrum, participation = floquet_analysis(prop, state)
    overlaps = spectrum.overlaps(state)
    order = np.argsort(spectrum.eigenphases, kind="stable")
    note = f"participation = {participation!r}"
    with _writer(cfg, "floquet", ["k", "eigenphase", "overlap"], notes=(note,)) as w:
        for rank, idx in enumerate(order):
            w.write_row([rank, spectrum.eigenphases[idx], overlaps[idx]])
    return 0


def cmd_ion_params(cfg: dict) -> int:
    ion = IonParams(omega=cfg["omega"], eta=cfg["eta"], t_carrier=cfg["t_carrier"],
                    omega1=cfg["omega1"], omega2=cfg["omega2"], eta_r=cfg["eta_r"],
                    delta1=cfg["delta1"], delta2=cfg["delta2"],
                    t_raman=cfg["t_raman"])
    text = report(ion)
    out = cfg.get("out")
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


COMMANDS = {
    "poincare": cmd_poincare,
    "quantum": cmd_quantum,
    "classical": cmd_classical,
    "compare": cmd_compare,
    "bifurcation": cmd_bifurcation,
    "fixed-points": cmd_fixed_points,
    "floquet": cmd_floquet,
    "ion-params": cmd_ion_params,
}


def _add_override(parser: argparse.ArgumentParser, key: str, help_text: str = ""):
    parser.add_argument(f"--{key.replace('_', '-')}", dest=key, default=None,
                        help=help_text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kis",
        description="Kicked nonlinear oscillator: quantum and classical dynamics")
    parser.add_argument("--version", action="version", version=f"kis {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)
    helps = {
        "theta": "rotation angle per kick (accepts e.g. 2pi)",
        "mu": "nonlinear coefficient (accepts e.g. 0.01pi)",
        "g": "parametric gain per kick (> 0)",
        "phi_tau": "readout phase per quantum",
        "dim": "number of retained basis levels",
        "eps_tail": "guard-band population bound",
        "kicks": "number of kicks",
        "seed": "RNG seed recorded in metadata",
        "omega": "carrier Rabi frequency (rad/s, or MHz suffix)",
        "t_carrier": "carrier pulse duration (s, or us/ms suffix)",
        "t_raman": "Raman pulse duration (s, or us/ms suffix)",
    }
    for name in COMMANDS:
        sp = subs.add_parser(name)
        sp.add_argument("--config", default=None, help="key=value config file")
        sp.add_argument("--out", dest="out", default=None, help="output path")
        for key in SCHEMAS[name]:
            if key == "out":
                continue
            _add_override(sp, key, helps.get(key, ""))
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = args.command
    schema = SCHEMAS[command]
    overrides = {key: getattr(args, key, None) for key in schema}
    try:
        cfg = build_config(schema, DEFAULTS[command], args.config, overrides)
        return COMMANDS[command](cfg)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    except (NumericError, ZeroDivisionError) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
