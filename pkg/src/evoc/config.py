"""Flat ``key=value`` configuration files and their resolution into run/sweep configs."""

from __future__ import annotations

from dataclasses import replace
from fractions import Fraction
from pathlib import Path
from typing import Callable, Iterable, Mapping

from . import __version__
from .engine import RunConfig, UpdateOrder
from .experiments import SweepSpec
from .fitness import FitnessWeights
from .world import Neighborhood, Topology


HEADER_PREFIX = "# evoc "


class ConfigError(ValueError):
    def __init__(self, key: str, message: str) -> None:
        super().__init__(message if message.startswith(key) else f"{key}: {message}")
        self.key = key


def _int(s: str) -> int:
    return int(s, 0)


def _float(s: str) -> float:
    # Fraction accepts "0.25" as well as "1/6".
    return float(Fraction(s.strip()))


def _floats(s: str) -> tuple[float, ...]:
    return tuple(_float(x) for x in s.split(",") if x.strip())


def _choice(enum):
    def parse(s: str):
        return enum(s.strip().lower().replace("-", "_"))
    return parse


RUN_KEYS: dict[str, Callable[[str], object]] = {
    "width": _int,
    "height": _int,
    "topology": _choice(Topology),
    "neighborhood": _choice(Neighborhood),
    "creator_fraction": _float,
    "creator_invent_rate": _float,
    "iterations": _int,
    "change_prob": _float,
    "w_move": _float,
    "w_sym": _float,
    "seed": _int,
    "update_order": _choice(UpdateOrder),
}

SWEEP_KEYS: dict[str, Callable[[str], object]] = {
    "creator_fractions": _floats,
    "invent_rates": _floats,
    "runs_per_cell": _int,
    "measure_at_iteration": _int,
    "master_seed": _int,
    "threads": _int,
}

_WORLD_FIELDS = ("width", "height", "topology", "neighborhood", "creator_fraction",
                 "creator_invent_rate")


def read_config_file(path: str | Path) -> dict[str, str]:
    """Raw ``key -> value`` pairs; blank lines and ``#`` comments are skipped.

    An output file written by this package is also accepted: its provenance
    header is read as the configuration.
    """
    lines = Path(path).read_text().splitlines()
    if lines and lines[0].startswith(HEADER_PREFIX):
        header = []
        for line in lines[1:]:
            if not line.startswith("# "):
                break
            header.append(line[2:])
        lines = header
    pairs: dict[str, str] = {}
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}", f"expected key=value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        pairs[key] = value
    return pairs


def _parse(raw: Mapping[str, str], allowed: Mapping[str, Callable[[str], object]]) -> dict:
    out = {}
    for key, value in raw.items():
        if key not in allowed:
            raise ConfigError(key, "unknown key")
        try:
            out[key] = allowed[key](value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(key, f"cannot parse {value!r} ({exc})") from None
    return out


def _build(key_order: Iterable[str], make: Callable[[], object]):
    try:
        return make()
    except ValueError as exc:
        # Validators start their message with the offending field name.
        msg = str(exc)
        key = msg.split(" ", 1)[0]
        raise ConfigError(key if key in key_order else "config", msg) from None


def _run_config(values: Mapping[str, object]) -> RunConfig:
    base = RunConfig()

    def make() -> RunConfig:
        world = replace(base.world, **{k: values[k] for k in _WORLD_FIELDS if k in values})
        weights = FitnessWeights(values.get("w_move", base.weights.w_move),
                                 values.get("w_sym", base.weights.w_sym))
        rest = {k: values[k] for k in ("iterations", "change_prob", "seed", "update_order")
                if k in values}
        return replace(base, world=world, weights=weights, **rest)

    return _build(RUN_KEYS, make)


def parse_config(file_values: Mapping[str, str] | None = None,
                 flag_values: Mapping[str, str] | None = None,
                 kind: str = "run") -> RunConfig | tuple[SweepSpec, int]:
    """Resolve file values, then flag overrides, over the documented defaults.

    ``kind="run"`` returns a :class:`RunConfig`; ``kind="sweep"`` returns
    ``(SweepSpec, threads)``.
    """
    raw = dict(file_values or {})
    raw.update({k: v for k, v in (flag_values or {}).items() if v is not None})
    if kind == "run":
        return _run_config(_parse(raw, RUN_KEYS))
    values = _parse(raw, {**RUN_KEYS, **SWEEP_KEYS})
    base = _run_config({k: v for k, v in values.items() if k in RUN_KEYS})
    threads = values.pop("threads", 1)
    if threads < 1:
        raise ConfigError("threads", "must be positive")
    kw = {k: values[k] for k in SWEEP_KEYS if k in values}
    return _build(SWEEP_KEYS, lambda: SweepSpec(base=base, **kw)), threads


def _fmt(v: object) -> str:
    if isinstance(v, tuple):
        return ",".join(_fmt(x) for x in v)
    if hasattr(v, "value"):
        return str(v.value)
    return repr(v) if isinstance(v, float) else str(v)


def run_config_items(cfg: RunConfig) -> list[tuple[str, str]]:
    w = cfg.world
    vals = {
        "width": w.width, "height": w.height, "topology": w.topology,
        "neighborhood": w.neighborhood, "creator_fraction": w.creator_fraction,
        "creator_invent_rate": w.creator_invent_rate, "iterations": cfg.iterations,
        "change_prob": cfg.change_prob, "w_move": cfg.weights.w_move,
        "w_sym": cfg.weights.w_sym, "seed": cfg.seed, "update_order": cfg.update_order,
    }
    return [(k, _fmt(vals[k])) for k in RUN_KEYS]


def sweep_config_items(spec: SweepSpec) -> list[tuple[str, str]]:
    # Per-cell fields and the per-run seed are set by the sweep itself.
    items = [kv for kv in run_config_items(spec.base)
             if kv[0] not in ("creator_fraction", "creator_invent_rate", "iterations", "seed")]
    items += [(k, _fmt(getattr(spec, k))) for k in SWEEP_KEYS if k != "threads"]
    return items


def provenance_header(command: str, items: Iterable[tuple[str, str]]) -> str:
    """Comment block that doubles as a config file reproducing the output."""
    lines = [f"{HEADER_PREFIX}{__version__} {command}"]
    lines += [f"# {k}={v}" for k, v in items]
    return "\n".join(lines) + "\n"
