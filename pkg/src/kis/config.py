"""Flat key=value config files and scalar parsing for the CLI.

Values understand a few unit spellings so configs can carry parameters the
way they are usually written: angles accept a "pi" suffix ("2pi",
"0.01pi", "-0.5pi"), durations accept us/ms/s, frequencies accept an MHz
suffix (converted to rad/s with the 2*pi) or bare rad/s.
"""

import math
import re

from .errors import ConfigError

_PI_RE = re.compile(r"^([+-]?\d*\.?\d*(?:[eE][+-]?\d+)?)\s*pi$")


def parse_angle(text: str) -> float:
    t = text.strip()
    m = _PI_RE.match(t)
    if m:
        prefix = m.group(1)
        if prefix in ("", "+"):
            factor = 1.0
        elif prefix == "-":
            factor = -1.0
        else:
            factor = float(prefix)
        return factor * math.pi
    return float(t)


def parse_duration(text: str) -> float:
    t = text.strip()
    for suffix, scale in (("us", 1e-6), ("ms", 1e-3), ("s", 1.0)):
        if t.endswith(suffix):
            return float(t[: -len(suffix)]) * scale
    return float(t)


def parse_frequency(text: str) -> float:
    t = text.strip()
    if t.endswith("MHz"):
        return float(t[:-3]) * 2.0 * math.pi * 1e6
    if t.endswith("rad/s"):
        return float(t[: -len("rad/s")])
    return float(t)


def parse_int_tuple(text: str) -> tuple:
    parts = [p for p in text.replace(",", " ").split() if p]
    return tuple(int(p) for p in parts)


_PARSERS = {
    "angle": parse_angle,
    "float": lambda t: float(t),
    "int": lambda t: int(t),
    "duration": parse_duration,
    "frequency": parse_frequency,
    "int_tuple": parse_int_tuple,
    "str": lambda t: t.strip(),
}


def parse_scalar(text: str, kind: str, where: str = "") -> object:
    try:
        return _PARSERS[kind](text)
    except (ValueError, KeyError) as exc:
        raise ConfigError(f"{where}cannot parse {text!r} as {kind}: {exc}") from None


def read_config_file(path: str) -> dict:
    """Parse a key=value file into {key: (raw_value, line_number)}."""
    entries: dict = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"{path}:{lineno}: expected key = value, got {stripped!r}")
        key, _, value = stripped.partition("=")
        key = key.strip()
        value = value.split("#", 1)[0].strip()
        if not key or not value:
            raise ConfigError(f"{path}:{lineno}: empty key or value")
        if key in entries:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        entries[key] = (value, lineno)
    return entries


def build_config(schema: dict, defaults: dict, file_path: str | None,
                 overrides: dict) -> dict:
    """Merge defaults < config file < command-line overrides.

    schema maps key -> parser kind; unknown keys in the file or overrides
    are ConfigErrors (with line diagnostics for the file).
    """
    cfg = dict(defaults)
    if file_path is not None:
        for key, (raw, lineno) in read_config_file(file_path).items():
            if key not in schema:
                raise ConfigError(f"{file_path}:{lineno}: unknown key {key!r} "
                                  f"(expected one of {sorted(schema)})")
            cfg[key] = parse_scalar(raw, schema[key], f"{file_path}:{lineno}: ")
    for key, raw in overrides.items():
        if raw is None:
            continue
        if key not in schema:
            raise ConfigError(f"unknown option {key!r}")
        if isinstance(raw, str):
            cfg[key] = parse_scalar(raw, schema[key], f"--{key.replace('_', '-')}: ")
        else:
            cfg[key] = raw
    return cfg
