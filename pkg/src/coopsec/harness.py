"""Experiment configuration, sweeps, validation runs, and mobility runs.

Everything here is a deterministic function of a configuration and a seed.
Sweeps produce flat tables (one row per evaluated point and scenario) that
serialize to CSV with full double precision; validation runs bundle
:func:`coopsec.oracle.validate_scenario` reports for the configured point
plus a batch of seeded-random parameter points; mobility runs replay the
negotiation along an eavesdropper trajectory.

Named presets cover the six standard experiment shapes: secrecy with and
without relaying against main and relay powers (``fig3``, ``fig4``),
distance sensitivity (``fig5``), cooperative power sweeps with constraints
satisfied (``fig6``, ``fig7``), and a geometry where the pairing constraints
fail and cooperation hurts (``fig8``).
"""

from __future__ import annotations

import csv
import dataclasses
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .model import ChannelGains, Geometry, NoiseModel, PowerBudget
from .oracle import validate_scenario
from .protocol import ConstraintMode, NegotiationPolicy, adaptive_step, distance_constraints_met, negotiate
from .rates import _LN2, RatePair, ScenarioKind, secrecy_rate

__all__ = [
    "DEFAULT_BUDGETS",
    "DEFAULT_GAINS",
    "DEFAULT_GEOMETRY",
    "PRESETS",
    "ExperimentConfig",
    "MobilityRow",
    "SweepAxis",
    "SweepRow",
    "load_config",
    "mobility_default_config",
    "preset_config",
    "read_sweep_csv",
    "run_mobility",
    "run_negotiation",
    "run_sweep",
    "run_validation",
    "write_json",
    "write_mobility_csv",
    "write_sweep_csv",
]

DEFAULT_GAINS = ChannelGains(g_ab=0.4, g_ae=0.3, g_jb=0.5, g_je=0.3, g_aj=0.2)
DEFAULT_GEOMETRY = Geometry(d_ab=1.0, d_ae=1.0, d_jb=1.0, d_je=1.0, d_aj=1.0, eta=2.0)
DEFAULT_BUDGETS = PowerBudget(p_a_max=5.0, p_j_max=5.0)

PRESETS = ("fig3", "fig4", "fig5", "fig6", "fig7", "fig8")

_POWER_AXES = ("p_a", "p_j", "p_ab", "p_jb")
_DISTANCE_AXES = ("d_ab", "d_ae", "d_jb", "d_je", "d_aj")


@dataclass(frozen=True)
class SweepAxis:
    """One swept coordinate: a power or a distance over a closed interval.

    ``lo == hi`` is allowed and collapses the sweep to a single point;
    otherwise at least two steps are required.
    """

    name: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self) -> None:
        if self.name not in _POWER_AXES + _DISTANCE_AXES:
            raise ValueError(
                f"unknown axis {self.name!r}; expected one of "
                f"{', '.join(_POWER_AXES + _DISTANCE_AXES)}"
            )
        lo = float(self.lo)
        hi = float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise ValueError("axis bounds must be finite")
        if hi < lo:
            raise ValueError("axis hi must be >= lo")
        steps = int(self.steps)
        if lo < hi and steps < 2:
            raise ValueError("a non-degenerate axis needs at least 2 steps")
        if steps < 1:
            raise ValueError("steps must be positive")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "steps", steps)

    def values(self) -> list[float]:
        """Grid points, endpoints included; a single point when lo == hi."""

        if self.lo == self.hi:
            return [self.lo]
        return [float(x) for x in np.linspace(self.lo, self.hi, self.steps)]

    def as_dict(self) -> dict[str, object]:
        return {"name": self.name, "lo": self.lo, "hi": self.hi, "steps": self.steps}


_ALL_SCENARIOS = (
    ScenarioKind.RELAY_COOP,
    ScenarioKind.MAC_COOP,
    ScenarioKind.ONE_SIDE_COOP,
    ScenarioKind.NON_COOP,
)


@dataclass(frozen=True)
class ExperimentConfig:
    """Full description of one reproducible experiment.

    Defaults reproduce the standard parameter block: gains
    (0.4, 0.3, 0.5, 0.3, 0.2), cooperation level 0.8, unit noise, unit
    distances with square-law path loss, budgets (5, 5), and unit power
    price.  ``trajectory`` is a sequence of ``(d_ae, d_je)`` pairs consumed
    only by mobility runs.
    """

    gains: ChannelGains = DEFAULT_GAINS
    geometry: Geometry = DEFAULT_GEOMETRY
    sigma2: float = 1.0
    alpha: float = 0.8
    price: float = 1.0
    budgets: PowerBudget = DEFAULT_BUDGETS
    scenarios: tuple[ScenarioKind, ...] = _ALL_SCENARIOS
    axis: SweepAxis = SweepAxis("p_a", 0.0, 10.0, 41)
    preset: str | None = None
    constraint_mode: ConstraintMode = ConstraintMode.CORRECTED
    log_base: str = "e"
    seed: int = 0
    trajectory: tuple[tuple[float, float], ...] | None = None

    def __post_init__(self) -> None:
        if not float(self.sigma2) > 0:
            raise ValueError("sigma2 must be positive")
        if not 0.0 < float(self.alpha) <= 1.0:
            raise ValueError("alpha must lie in (0, 1]")
        if float(self.price) < 0:
            raise ValueError("price must be non-negative")
        object.__setattr__(self, "sigma2", float(self.sigma2))
        object.__setattr__(self, "alpha", float(self.alpha))
        object.__setattr__(self, "price", float(self.price))
        object.__setattr__(
            self, "scenarios", tuple(ScenarioKind(kind) for kind in self.scenarios)
        )
        if self.preset is not None and self.preset not in PRESETS:
            raise ValueError(f"unknown preset {self.preset!r}; expected one of {PRESETS}")
        object.__setattr__(self, "constraint_mode", ConstraintMode(self.constraint_mode))
        if self.log_base not in ("e", "2"):
            raise ValueError("log_base must be 'e' or '2'")
        object.__setattr__(self, "seed", int(self.seed))
        if self.trajectory is not None:
            path = tuple((float(d_ae), float(d_je)) for d_ae, d_je in self.trajectory)
            if not path:
                raise ValueError("trajectory must be non-empty when given")
            object.__setattr__(self, "trajectory", path)

    def to_dict(self) -> dict[str, object]:
        """JSON-ready mapping; the power price serializes as ``lambda``."""

        return {
            "gains": {
                "g_ab": self.gains.g_ab,
                "g_ae": self.gains.g_ae,
                "g_jb": self.gains.g_jb,
                "g_je": self.gains.g_je,
                "g_aj": self.gains.g_aj,
                "g_ja": self.gains.g_ja,
            },
            "geometry": {
                "d_ab": self.geometry.d_ab,
                "d_ae": self.geometry.d_ae,
                "d_jb": self.geometry.d_jb,
                "d_je": self.geometry.d_je,
                "d_aj": self.geometry.d_aj,
                "eta": self.geometry.eta,
            },
            "sigma2": self.sigma2,
            "alpha": self.alpha,
            "lambda": self.price,
            "budgets": {"p_a_max": self.budgets.p_a_max, "p_j_max": self.budgets.p_j_max},
            "scenarios": [kind.value for kind in self.scenarios],
            "axis": self.axis.as_dict(),
            "preset": self.preset,
            "constraint_mode": self.constraint_mode.value,
            "log_base": self.log_base,
            "seed": self.seed,
            "trajectory": None
            if self.trajectory is None
            else [[d_ae, d_je] for d_ae, d_je in self.trajectory],
        }

    @classmethod
    def from_dict(cls, data: Mapping[str, object]) -> "ExperimentConfig":
        """Build a config from a mapping; absent keys keep their defaults."""

        known = {
            "gains",
            "geometry",
            "sigma2",
            "alpha",
            "lambda",
            "budgets",
            "scenarios",
            "axis",
            "preset",
            "constraint_mode",
            "log_base",
            "seed",
            "trajectory",
        }
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        kwargs: dict[str, object] = {}
        if "gains" in data:
            kwargs["gains"] = ChannelGains(**data["gains"])  # type: ignore[arg-type]
        if "geometry" in data:
            kwargs["geometry"] = Geometry(**data["geometry"])  # type: ignore[arg-type]
        if "sigma2" in data:
            kwargs["sigma2"] = data["sigma2"]
        if "alpha" in data:
            kwargs["alpha"] = data["alpha"]
        if "lambda" in data:
            kwargs["price"] = data["lambda"]
        if "budgets" in data:
            kwargs["budgets"] = PowerBudget(**data["budgets"])  # type: ignore[arg-type]
        if "scenarios" in data:
            kwargs["scenarios"] = tuple(
                ScenarioKind(kind) for kind in data["scenarios"]  # type: ignore[union-attr]
            )
        if "axis" in data:
            kwargs["axis"] = SweepAxis(**data["axis"])  # type: ignore[arg-type]
        if "preset" in data:
            kwargs["preset"] = data["preset"]
        if "constraint_mode" in data:
            kwargs["constraint_mode"] = ConstraintMode(data["constraint_mode"])
        if "log_base" in data:
            kwargs["log_base"] = data["log_base"]
        if "seed" in data:
            kwargs["seed"] = data["seed"]
        if "trajectory" in data and data["trajectory"] is not None:
            kwargs["trajectory"] = tuple(
                (pair[0], pair[1]) for pair in data["trajectory"]  # type: ignore[index]
            )
        return cls(**kwargs)  # type: ignore[arg-type]

    def replace(self, **changes: object) -> "ExperimentConfig":
        """Return a copy with the given fields replaced."""

        return dataclasses.replace(self, **changes)  # type: ignore[arg-type]


def load_config(path: str | Path) -> ExperimentConfig:
    """Read an :class:`ExperimentConfig` from a JSON file."""

    with open(path, "r", encoding="utf-8") as handle:
        return ExperimentConfig.from_dict(json.load(handle))


def preset_config(name: str) -> ExperimentConfig:
    """Return the full configuration behind a named preset."""

    if name == "fig3":
        return ExperimentConfig(preset="fig3", axis=SweepAxis("p_jb", 0.0, 10.0, 41))
    if name == "fig4":
        return ExperimentConfig(preset="fig4", axis=SweepAxis("p_ab", 0.0, 10.0, 41))
    if name == "fig5":
        return ExperimentConfig(preset="fig5", axis=SweepAxis("d_ab", 0.5, 3.0, 51))
    if name == "fig6":
        return ExperimentConfig(preset="fig6", axis=SweepAxis("p_jb", 0.0, 10.0, 41))
    if name == "fig7":
        return ExperimentConfig(preset="fig7", axis=SweepAxis("p_j", 0.0, 10.0, 41))
    if name == "fig8":
        return ExperimentConfig(
            preset="fig8",
            axis=SweepAxis("p_j", 0.0, 10.0, 41),
            geometry=Geometry(d_ab=2.0, d_ae=1.0, d_jb=1.0, d_je=1.0, d_aj=0.5, eta=2.0),
        )
    raise ValueError(f"unknown preset {name!r}; expected one of {PRESETS}")


def mobility_default_config() -> ExperimentConfig:
    """Default mobility setup: the eavesdropper recedes across the gating radius.

    The pair distance is 2, so with gains 0.3 and 0.2 the corrected a-side
    distance condition holds up to ``d_ae = sqrt(6)``; the trajectory walks
    ``d_ae`` from 2.0 to 3.0 in 21 steps with ``d_je`` fixed at 2, crossing
    that radius once.
    """

    geometry = Geometry(d_ab=1.0, d_ae=2.0, d_jb=1.0, d_je=2.0, d_aj=2.0, eta=2.0)
    path = tuple((float(d), 2.0) for d in np.linspace(2.0, 3.0, 21))
    return ExperimentConfig(geometry=geometry, trajectory=path)


@dataclass(frozen=True)
class SweepRow:
    """One evaluated sweep point for one scenario."""

    axis: float
    cs1_nat: float
    cs2_nat: float
    p_a: float
    p_j: float
    p_ab: float
    p_jb: float
    mode: str
    provenance: str = ""


@dataclass(frozen=True)
class MobilityRow:
    """One negotiation step along an eavesdropper trajectory."""

    step: int
    mode: str
    cs1_nat: float
    cs2_nat: float
    changed: bool


def _row(
    axis_value: float,
    kind: ScenarioKind,
    cs: RatePair,
    *,
    p_a: float,
    p_j: float,
    p_ab: float = 0.0,
    p_jb: float = 0.0,
    provenance: str = "",
) -> SweepRow:
    return SweepRow(
        axis=float(axis_value),
        cs1_nat=cs.cs1,
        cs2_nat=cs.cs2,
        p_a=float(p_a),
        p_j=float(p_j),
        p_ab=float(p_ab),
        p_jb=float(p_jb),
        mode=kind.value,
        provenance=provenance,
    )


def _preset_rows(config: ExperimentConfig) -> list[SweepRow]:
    noise = NoiseModel(config.sigma2)
    alpha = config.alpha
    rows: list[SweepRow] = []
    values = config.axis.values()

    if config.preset in ("fig3", "fig4"):
        # Secrecy with and without relaying: the bare curve sweeps the main
        # power, the relayed curve sweeps the relaying power with the main
        # powers pinned at 5.
        effective = config.gains.effective(config.geometry)
        for x in values:
            bare = secrecy_rate(ScenarioKind.NON_COOP, effective, noise, p_a=x, p_j=x)
            rows.append(_row(x, ScenarioKind.NON_COOP, bare, p_a=x, p_j=x))
            if config.preset == "fig3":
                p_jb, p_ab = x, alpha * x
            else:
                p_ab, p_jb = x, x / alpha
            relayed = secrecy_rate(
                ScenarioKind.RELAY_COOP,
                effective,
                noise,
                p_a=5.0,
                p_j=5.0,
                p_ab=p_ab,
                p_jb=p_jb,
            )
            rows.append(
                _row(x, ScenarioKind.RELAY_COOP, relayed, p_a=5.0, p_j=5.0, p_ab=p_ab, p_jb=p_jb)
            )
        return rows

    if config.preset == "fig5":
        # Distance sensitivity for a's secrecy: sweep d_ab with and without
        # relaying, under joint (d_ae, d_jb) variants.
        for x in values:
            for d_ae in (1.5, 3.0):
                for d_jb in (1.0, 2.0):
                    geometry = dataclasses.replace(
                        config.geometry, d_ab=x, d_ae=d_ae, d_jb=d_jb
                    )
                    effective = config.gains.effective(geometry)
                    label = f"d_ae={d_ae:g},d_jb={d_jb:g}"
                    bare = secrecy_rate(
                        ScenarioKind.NON_COOP, effective, noise, p_a=5.0, p_j=5.0
                    )
                    rows.append(
                        _row(x, ScenarioKind.NON_COOP, bare, p_a=5.0, p_j=5.0, provenance=label)
                    )
                    relayed = secrecy_rate(
                        ScenarioKind.RELAY_COOP,
                        effective,
                        noise,
                        p_a=5.0,
                        p_j=5.0,
                        p_ab=alpha * 5.0,
                        p_jb=5.0,
                    )
                    rows.append(
                        _row(
                            x,
                            ScenarioKind.RELAY_COOP,
                            relayed,
                            p_a=5.0,
                            p_j=5.0,
                            p_ab=alpha * 5.0,
                            p_jb=5.0,
                            provenance=label,
                        )
                    )
        return rows

    if config.preset == "fig6":
        effective = config.gains.effective(config.geometry)
        for x in values:
            relayed = secrecy_rate(
                ScenarioKind.RELAY_COOP,
                effective,
                noise,
                p_a=5.0,
                p_j=5.0,
                p_ab=alpha * x,
                p_jb=x,
            )
            rows.append(
                _row(x, ScenarioKind.RELAY_COOP, relayed, p_a=5.0, p_j=5.0, p_ab=alpha * x, p_jb=x)
            )
        return rows

    if config.preset in ("fig7", "fig8"):
        effective = config.gains.effective(config.geometry)
        for x in values:
            pair = secrecy_rate(
                ScenarioKind.MAC_COOP, effective, noise, p_a=x, p_j=x, alpha=alpha
            )
            rows.append(_row(x, ScenarioKind.MAC_COOP, pair, p_a=x, p_j=x))
        return rows

    raise ValueError(f"unknown preset {config.preset!r}")


def run_sweep(config: ExperimentConfig) -> list[SweepRow]:
    """Evaluate the configured sweep and return its rows in axis order.

    Preset configs follow their fixed row plans.  Otherwise each axis value
    produces one row per configured scenario: all powers start at zero, the
    swept variable takes the axis value, and the paired relaying power
    follows the exchange ratio (``p_ab = alpha * p_jb``) when one of the two
    is swept.  Distance axes reposition that node before gains are
    attenuated.
    """

    if config.preset is not None:
        return _preset_rows(config)

    noise = NoiseModel(config.sigma2)
    rows: list[SweepRow] = []
    for x in config.axis.values():
        geometry = config.geometry
        if config.axis.name in _DISTANCE_AXES:
            geometry = dataclasses.replace(geometry, **{config.axis.name: x})
        powers = {"p_a": 0.0, "p_j": 0.0, "p_ab": 0.0, "p_jb": 0.0}
        if config.axis.name in _POWER_AXES:
            powers[config.axis.name] = x
            if config.axis.name == "p_jb":
                powers["p_ab"] = config.alpha * x
            elif config.axis.name == "p_ab":
                powers["p_jb"] = x / config.alpha
        effective = config.gains.effective(geometry)
        for kind in config.scenarios:
            pair = secrecy_rate(
                kind,
                effective,
                noise,
                p_a=powers["p_a"],
                p_j=powers["p_j"],
                alpha=config.alpha,
                p_ab=powers["p_ab"],
                p_jb=powers["p_jb"],
            )
            rows.append(
                _row(
                    x,
                    kind,
                    pair,
                    p_a=powers["p_a"],
                    p_j=powers["p_j"],
                    p_ab=powers["p_ab"],
                    p_jb=powers["p_jb"],
                )
            )
    return rows


def _format_float(value: float) -> str:
    return "%.17g" % float(value)


_SWEEP_COLUMNS = ("axis", "cs1_nat", "cs2_nat", "p_a", "p_j", "p_ab", "p_jb", "mode", "provenance")


def write_sweep_csv(rows: Sequence[SweepRow], path: str | Path, log_base: str = "e") -> None:
    """Write sweep rows as CSV with 17-significant-digit floats.

    With ``log_base='2'`` two extra columns append the base-2 conversions
    ``cs1_base2`` and ``cs2_base2`` (the natural columns stay authoritative).
    """

    header = list(_SWEEP_COLUMNS)
    if log_base == "2":
        header += ["cs1_base2", "cs2_base2"]
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        for row in rows:
            record = [
                _format_float(row.axis),
                _format_float(row.cs1_nat),
                _format_float(row.cs2_nat),
                _format_float(row.p_a),
                _format_float(row.p_j),
                _format_float(row.p_ab),
                _format_float(row.p_jb),
                row.mode,
                row.provenance,
            ]
            if log_base == "2":
                record += [
                    _format_float(row.cs1_nat / _LN2),
                    _format_float(row.cs2_nat / _LN2),
                ]
            writer.writerow(record)


def read_sweep_csv(path: str | Path) -> list[SweepRow]:
    """Parse a sweep CSV back into rows (base-2 display columns are ignored)."""

    with open(path, "r", encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader)
        if header[: len(_SWEEP_COLUMNS)] != list(_SWEEP_COLUMNS):
            raise ValueError(f"unexpected sweep header: {header!r}")
        rows = []
        for record in reader:
            rows.append(
                SweepRow(
                    axis=float(record[0]),
                    cs1_nat=float(record[1]),
                    cs2_nat=float(record[2]),
                    p_a=float(record[3]),
                    p_j=float(record[4]),
                    p_ab=float(record[5]),
                    p_jb=float(record[6]),
                    mode=record[7],
                    provenance=record[8],
                )
            )
    return rows


def run_mobility(config: ExperimentConfig) -> list[MobilityRow]:
    """Replay the negotiation along the configured eavesdropper trajectory.

    Each trajectory entry repositions the eavesdropper at ``(d_ae, d_je)``
    and re-runs the negotiation with an all-accepting policy; ``changed``
    flags steps whose mode differs from the previous step (the first step is
    never flagged).  Without a configured trajectory the default receding
    path from :func:`mobility_default_config` is used.
    """

    trajectory = config.trajectory
    if trajectory is None:
        trajectory = mobility_default_config().trajectory
        assert trajectory is not None
    policy = NegotiationPolicy(alpha=config.alpha)
    rows: list[MobilityRow] = []
    previous: ScenarioKind | None = None
    for step, (d_ae, d_je) in enumerate(trajectory):
        geometry = config.geometry.with_eve_at(d_ae, d_je)
        if previous is None:
            mode, allocation = negotiate(
                policy,
                config.gains,
                geometry,
                config.sigma2,
                config.price,
                config.budgets,
                config.constraint_mode,
            )
            changed = False
        else:
            mode, allocation, changed = adaptive_step(
                previous,
                policy,
                config.gains,
                geometry,
                config.sigma2,
                config.price,
                config.budgets,
                config.constraint_mode,
            )
        rows.append(
            MobilityRow(
                step=step,
                mode=mode.value,
                cs1_nat=allocation.cs.cs1,
                cs2_nat=allocation.cs.cs2,
                changed=changed,
            )
        )
        previous = mode
    return rows


_MOBILITY_COLUMNS = ("step", "mode", "cs1_nat", "cs2_nat", "changed")


def write_mobility_csv(rows: Sequence[MobilityRow], path: str | Path, log_base: str = "e") -> None:
    """Write mobility rows as CSV, mirroring the sweep float conventions."""

    header = list(_MOBILITY_COLUMNS)
    if log_base == "2":
        header += ["cs1_base2", "cs2_base2"]
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(header)
        for row in rows:
            record = [
                str(row.step),
                row.mode,
                _format_float(row.cs1_nat),
                _format_float(row.cs2_nat),
                "true" if row.changed else "false",
            ]
            if log_base == "2":
                record += [
                    _format_float(row.cs1_nat / _LN2),
                    _format_float(row.cs2_nat / _LN2),
                ]
            writer.writerow(record)


def _params_dict(
    gains: ChannelGains,
    geometry: Geometry,
    sigma2: float,
    alpha: float,
    price: float,
    budgets: PowerBudget,
) -> dict[str, object]:
    return {
        "gains": {
            "g_ab": gains.g_ab,
            "g_ae": gains.g_ae,
            "g_jb": gains.g_jb,
            "g_je": gains.g_je,
            "g_aj": gains.g_aj,
            "g_ja": gains.g_ja,
        },
        "geometry": {
            "d_ab": geometry.d_ab,
            "d_ae": geometry.d_ae,
            "d_jb": geometry.d_jb,
            "d_je": geometry.d_je,
            "d_aj": geometry.d_aj,
            "eta": geometry.eta,
        },
        "sigma2": sigma2,
        "alpha": alpha,
        "lambda": price,
        "budgets": {"p_a_max": budgets.p_a_max, "p_j_max": budgets.p_j_max},
    }


def _reports_at(
    gains: ChannelGains,
    geometry: Geometry,
    sigma2: float,
    alpha: float,
    price: float,
    budgets: PowerBudget,
) -> dict[str, object]:
    return {
        kind.value: validate_scenario(
            kind, gains, geometry, sigma2, alpha, price, budgets
        ).as_dict()
        for kind in _ALL_SCENARIOS
    }


def run_validation(config: ExperimentConfig, samples: int = 100) -> dict[str, object]:
    """Validate every scenario at the config point and at random points.

    The random points are drawn from a generator seeded with
    ``config.seed``, so the whole report is a deterministic function of the
    configuration.  Returns a JSON-ready mapping with per-point reports and
    an aggregate verdict tally.
    """

    if samples < 0:
        raise ValueError("samples must be non-negative")
    report: dict[str, object] = {
        "seed": config.seed,
        "samples": samples,
        "config_point": {
            "params": _params_dict(
                config.gains,
                config.geometry,
                config.sigma2,
                config.alpha,
                config.price,
                config.budgets,
            ),
            "reports": _reports_at(
                config.gains,
                config.geometry,
                config.sigma2,
                config.alpha,
                config.price,
                config.budgets,
            ),
        },
    }
    rng = np.random.default_rng(config.seed)
    random_points = []
    for index in range(samples):
        g = rng.uniform(0.05, 0.6, size=6)
        gains = ChannelGains(
            g_ab=float(g[0]),
            g_ae=float(g[1]),
            g_jb=float(g[2]),
            g_je=float(g[3]),
            g_aj=float(g[4]),
            g_ja=float(g[5]),
        )
        d = rng.uniform(0.5, 3.0, size=5)
        geometry = Geometry(
            d_ab=float(d[0]),
            d_ae=float(d[1]),
            d_jb=float(d[2]),
            d_je=float(d[3]),
            d_aj=float(d[4]),
            eta=2.0,
        )
        sigma2 = float(rng.uniform(0.5, 2.0))
        alpha = float(rng.uniform(0.3, 1.0))
        price = float(10.0 ** rng.uniform(-3.0, -1.0))
        b = rng.uniform(1.0, 10.0, size=2)
        budgets = PowerBudget(p_a_max=float(b[0]), p_j_max=float(b[1]))
        random_points.append(
            {
                "sample": index,
                "params": _params_dict(gains, geometry, sigma2, alpha, price, budgets),
                "reports": _reports_at(gains, geometry, sigma2, alpha, price, budgets),
            }
        )
    report["random_points"] = random_points

    tally: dict[str, int] = {}
    def _absorb(reports: Mapping[str, object]) -> None:
        for scenario_report in reports.values():
            for verdict, count in scenario_report["summary"].items():  # type: ignore[index]
                tally[verdict] = tally.get(verdict, 0) + int(count)

    _absorb(report["config_point"]["reports"])  # type: ignore[index]
    for point in random_points:
        _absorb(point["reports"])
    report["summary"] = dict(sorted(tally.items()))
    return report


def run_negotiation(config: ExperimentConfig) -> dict[str, object]:
    """Run one negotiation at the config point and describe the outcome."""

    policy = NegotiationPolicy(alpha=config.alpha)
    verdict = distance_constraints_met(
        config.gains,
        config.geometry,
        config.sigma2,
        config.alpha,
        config.budgets.p_a_max,
        config.budgets.p_j_max,
        config.constraint_mode,
    )
    mode, allocation = negotiate(
        policy,
        config.gains,
        config.geometry,
        config.sigma2,
        config.price,
        config.budgets,
        config.constraint_mode,
    )
    result: dict[str, object] = {
        "params": _params_dict(
            config.gains,
            config.geometry,
            config.sigma2,
            config.alpha,
            config.price,
            config.budgets,
        ),
        "constraint_mode": config.constraint_mode.value,
        "constraints": verdict.as_dict(),
        "mode": mode.value,
        "allocation": {
            "p_a": allocation.p_a,
            "p_j": allocation.p_j,
            "p_ab": allocation.p_ab,
            "p_jb": allocation.p_jb,
            "cs1_nat": allocation.cs.cs1,
            "cs2_nat": allocation.cs.cs2,
            "provenance": {key: value.value for key, value in allocation.provenance.items()},
        },
    }
    if config.log_base == "2":
        result["allocation"]["cs1_base2"] = allocation.cs.cs1 / _LN2  # type: ignore[index]
        result["allocation"]["cs2_base2"] = allocation.cs.cs2 / _LN2  # type: ignore[index]
    return result


def write_json(data: Mapping[str, object], path: str | Path) -> None:
    """Serialize a report deterministically (sorted keys, no NaN)."""

    with open(path, "w", encoding="utf-8") as handle:
        json.dump(data, handle, indent=2, sort_keys=True, allow_nan=False)
        handle.write("\n")
