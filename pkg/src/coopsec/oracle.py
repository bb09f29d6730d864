"""Brute-force cross-checks for the allocator's polynomial machinery.

The allocator trusts published polynomial conditions and closed forms.  This
module trusts nothing: it maximizes the same penalized objectives by direct
grid evaluation (plus a golden-section refinement pass) and differentiates
them by central differences.  ``validate_scenario`` runs both paths side by
side and labels every formula with a verdict, so a transcription error in a
printed expression surfaces as data instead of silently steering an
allocation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

import numpy as np

from .allocator import (
    distance_mac_quadratic_pa,
    distance_mac_quadratic_pa_variant,
    distance_mac_quadratic_pj,
    distance_mac_quadratic_pj_variant,
    evaluate_closed_forms,
    mac_quadratic_pa,
    mac_quadratic_pj,
    noncoop_quadratic,
    noncoop_quadratic_pj_variant,
    one_side_quadratic_pa,
    one_side_quadratic_pj,
    penalized_objective,
    relay_cubic_for_a,
    relay_cubic_for_j,
    solve_cubic_real,
    solve_quadratic_real,
)
from .model import ChannelGains, Geometry, NoiseModel, PowerBudget
from .rates import ScenarioKind

__all__ = [
    "VERDICT_AGREE",
    "VERDICT_INFEASIBLE",
    "VERDICT_SUSPECTED_TYPO",
    "FormulaCheck",
    "ValidationReport",
    "finite_diff_derivative",
    "grid_search_optimum",
    "validate_scenario",
]

VERDICT_AGREE = "agree"
VERDICT_SUSPECTED_TYPO = "suspected-typo"
VERDICT_INFEASIBLE = "infeasible"

_DEFAULT_RESOLUTION = 10001
_RESIDUAL_TOL = 1e-6

Objective = Callable[[float], float]


def _eval_scalar(objective: Objective, x: float) -> float:
    """Evaluate ``objective`` at one point, rejecting non-finite values."""

    value = float(objective(x))
    if not math.isfinite(value):
        raise ValueError(f"objective is not finite at x={x!r}")
    return value


def grid_search_optimum(
    objective: Objective,
    lo: float,
    hi: float,
    resolution: int = _DEFAULT_RESOLUTION,
) -> tuple[float, float]:
    """Maximize a scalar objective on ``[lo, hi]`` by exhaustive sampling.

    The objective is evaluated on a uniform grid of ``resolution`` points
    including both endpoints, then one golden-section pass refines the
    bracket around the best grid point down to a width of
    ``(hi - lo) / resolution / 100``.  Ties anywhere resolve toward the
    smaller ``x``, which keeps the result deterministic.

    Parameters
    ----------
    objective:
        Scalar callable.  A vectorized implementation (accepting an ndarray)
        is used when available; otherwise points are evaluated one by one.
    lo, hi:
        Interval endpoints, ``lo <= hi``.
    resolution:
        Number of grid samples, at least 2.

    Returns
    -------
    tuple
        ``(argmax, max value)``.

    Raises
    ------
    ValueError
        If the interval or resolution is malformed, or the objective is
        non-finite at any evaluated point (the offending point is named).
    """

    lo = float(lo)
    hi = float(hi)
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("interval endpoints must be finite")
    if hi < lo:
        raise ValueError("hi must be >= lo")
    resolution = int(resolution)
    if resolution < 2:
        raise ValueError("resolution must be at least 2 samples")
    if hi == lo:
        return lo, _eval_scalar(objective, lo)

    xs = np.linspace(lo, hi, resolution)
    ys: np.ndarray | None
    try:
        raw = objective(xs)
        ys = np.asarray(raw, dtype=float)
        if ys.shape != xs.shape:
            ys = None
    except (TypeError, ValueError):
        ys = None
    if ys is None:
        ys = np.array([float(objective(float(x))) for x in xs])
    bad = np.flatnonzero(~np.isfinite(ys))
    if bad.size:
        raise ValueError(f"objective is not finite at x={float(xs[bad[0]])!r}")

    idx = int(np.argmax(ys))
    best_x = float(xs[idx])
    best_y = float(ys[idx])

    a = float(xs[max(idx - 1, 0)])
    b = float(xs[min(idx + 1, resolution - 1)])
    tol = (hi - lo) / resolution / 100.0
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc = _eval_scalar(objective, c)
    fd = _eval_scalar(objective, d)
    while (b - a) > tol:
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = _eval_scalar(objective, c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = _eval_scalar(objective, d)
    if fc >= fd:
        ref_x, ref_y = c, fc
    else:
        ref_x, ref_y = d, fd

    if ref_y > best_y or (ref_y == best_y and ref_x < best_x):
        best_x, best_y = ref_x, ref_y
    return best_x, best_y


def finite_diff_derivative(objective: Objective, x: float, h: float) -> float:
    """Central-difference derivative ``(f(x + h) - f(x - h)) / (2 h)``.

    Raises
    ------
    ValueError
        If ``h <= 0`` or either stencil evaluation is non-finite.
    """

    x = float(x)
    h = float(h)
    if not h > 0:
        raise ValueError("h must be positive")
    upper = _eval_scalar(objective, x + h)
    lower = _eval_scalar(objective, x - h)
    return (upper - lower) / (2.0 * h)


def _json_value(value: float | None) -> float | None:
    if value is None:
        return None
    value = float(value)
    return value if math.isfinite(value) else None


@dataclass(frozen=True)
class FormulaCheck:
    """Cross-check of one published formula against the numeric oracle.

    Attributes
    ----------
    formula_id:
        Scenario-scoped name, e.g. ``"non_coop.p_a"``.  A ``.variant``
        suffix marks an alternate printed spelling kept for comparison.
    closed_form_value:
        Value of the printed closed-form expression, ``None`` when no
        closed form exists for the entry, NaN when the expression has no
        real value at these parameters.
    root_value:
        Decision implied by the polynomial condition: the best of its
        positive real roots and the interval endpoints under the penalized
        objective.
    oracle_value:
        Grid-search argmax of the same objective on the same interval.
    abs_deviation, rel_deviation:
        Distance of the closed form (or, without one, of ``root_value``)
        from the oracle argmax; the relative form is normalized by
        ``max(1, |oracle|)``.
    derivative_residual:
        |central-difference derivative| at ``root_value`` when it is
        interior to the interval, ``None`` for endpoint decisions which
        carry no stationarity claim.
    verdict:
        One of ``agree``, ``suspected-typo``, ``infeasible``.
    note:
        Human-readable explanation of the verdict.
    """

    formula_id: str
    closed_form_value: float | None
    root_value: float
    oracle_value: float
    abs_deviation: float
    rel_deviation: float
    derivative_residual: float | None
    verdict: str
    note: str = ""

    def as_dict(self) -> dict[str, object]:
        """JSON-ready mapping with non-finite floats replaced by ``None``."""

        return {
            "formula_id": self.formula_id,
            "closed_form_value": _json_value(self.closed_form_value),
            "root_value": _json_value(self.root_value),
            "oracle_value": _json_value(self.oracle_value),
            "abs_deviation": _json_value(self.abs_deviation),
            "rel_deviation": _json_value(self.rel_deviation),
            "derivative_residual": _json_value(self.derivative_residual),
            "verdict": self.verdict,
            "note": self.note,
        }


_SEVERITY = {VERDICT_AGREE: 0, VERDICT_INFEASIBLE: 1, VERDICT_SUSPECTED_TYPO: 2}


@dataclass(frozen=True)
class ValidationReport:
    """All formula checks for one scenario at one parameter point."""

    kind: ScenarioKind
    entries: tuple[FormulaCheck, ...]

    def entry(self, formula_id: str) -> FormulaCheck:
        """Return the entry with the given id.

        Raises
        ------
        KeyError
            If no entry carries that id.
        """

        for item in self.entries:
            if item.formula_id == formula_id:
                return item
        raise KeyError(formula_id)

    def verdicts(self) -> dict[str, str]:
        """Map each formula id to its verdict."""

        return {item.formula_id: item.verdict for item in self.entries}

    def worst_verdict(self) -> str:
        """Most severe verdict present (typo > infeasible > agree)."""

        return max(
            (item.verdict for item in self.entries),
            key=lambda v: _SEVERITY.get(v, -1),
            default=VERDICT_AGREE,
        )

    def summary(self) -> dict[str, int]:
        """Verdict counts keyed by verdict string."""

        counts: dict[str, int] = {}
        for item in self.entries:
            counts[item.verdict] = counts.get(item.verdict, 0) + 1
        return dict(sorted(counts.items()))

    def as_dict(self) -> dict[str, object]:
        """JSON-ready mapping for serialization by the harness."""

        return {
            "kind": self.kind.value,
            "entries": [item.as_dict() for item in self.entries],
            "summary": self.summary(),
        }


def _check_formula(
    formula_id: str,
    objective: Objective,
    roots: Sequence[float],
    closed_form: float | None,
    hi_budget: float,
    resolution: int = _DEFAULT_RESOLUTION,
) -> FormulaCheck:
    """Compare one polynomial condition (and optional closed form) with the oracle.

    The search interval starts at the budget bound but is stretched to twice
    the largest positive candidate value, so a stationary point lying beyond
    the budget is still visible to the comparison instead of being clamped
    out of existence.
    """

    positives = [r for r in roots if math.isfinite(r) and r > 0.0]
    candidates = list(positives)
    if closed_form is not None and math.isfinite(closed_form) and closed_form > 0.0:
        candidates.append(closed_form)
    hi = max([float(hi_budget), 1.0] + [2.0 * c for c in candidates])
    step = hi / (resolution - 1)

    oracle_x, _ = grid_search_optimum(objective, 0.0, hi, resolution)

    pool = sorted({0.0, hi}.union(r for r in positives if r < hi))
    root_value = pool[0]
    best = _eval_scalar(objective, pool[0])
    for x in pool[1:]:
        value = _eval_scalar(objective, x)
        if value > best:
            root_value, best = x, value

    interior = step < root_value < hi - step
    residual: float | None = None
    if interior:
        h = 1e-6 * max(1.0, abs(root_value))
        residual = abs(finite_diff_derivative(objective, root_value, h))

    matches_oracle = abs(root_value - oracle_x) <= step + 1e-12
    residual_ok = residual is None or residual <= _RESIDUAL_TOL

    notes: list[str] = []
    if closed_form is None:
        cf_state = "absent"
    elif math.isnan(closed_form):
        cf_state = "nonreal"
        notes.append("closed form has no real value at these parameters")
    elif closed_form <= 0.0:
        cf_state = "mismatch" if interior else "nonpositive"
        if cf_state == "mismatch":
            notes.append("closed form is non-positive but an interior optimum exists")
        else:
            notes.append("closed form claims no positive optimum")
    elif abs(closed_form - root_value) <= max(1e-6, 1e-6 * abs(root_value)):
        cf_state = "match"
    else:
        cf_state = "mismatch"
        notes.append(
            f"closed form {closed_form:.6g} deviates from the stationary root {root_value:.6g}"
        )

    if not matches_oracle:
        notes.append(
            f"implied decision {root_value:.6g} disagrees with oracle argmax {oracle_x:.6g}"
        )
    if not residual_ok:
        notes.append(f"derivative residual {residual:.3g} exceeds {_RESIDUAL_TOL:g}")

    if not matches_oracle or not residual_ok or cf_state == "mismatch":
        verdict = VERDICT_SUSPECTED_TYPO
    elif cf_state == "nonreal":
        verdict = VERDICT_INFEASIBLE
    else:
        verdict = VERDICT_AGREE
        if not notes:
            if interior:
                notes.append("interior stationary point confirmed by the oracle")
            else:
                notes.append("endpoint decision confirmed by the oracle")

    if closed_form is not None and math.isfinite(closed_form):
        abs_dev = abs(closed_form - oracle_x)
    else:
        abs_dev = abs(root_value - oracle_x)
    rel_dev = abs_dev / max(1.0, abs(oracle_x))

    return FormulaCheck(
        formula_id=formula_id,
        closed_form_value=closed_form,
        root_value=root_value,
        oracle_value=oracle_x,
        abs_deviation=abs_dev,
        rel_deviation=rel_dev,
        derivative_residual=residual,
        verdict=verdict,
        note="; ".join(notes),
    )


def validate_scenario(
    kind: ScenarioKind | str,
    gains: ChannelGains,
    geometry: Geometry,
    sigma2: float,
    alpha: float,
    price: float,
    budgets: PowerBudget,
) -> ValidationReport:
    """Run every formula of one scenario against the numeric oracle.

    For each optimized power the entry compares (a) the decision implied by
    the published polynomial condition, (b) the printed closed form where one
    exists, and (c) a grid-search optimum of the penalized objective.  The
    cooperative-MAC scenario additionally checks the geometry-aware
    quadratics (both the substitution route and the alternate printed
    spellings) against the objective over distance-attenuated gains; the
    non-cooperative scenario checks the alternate j-side spelling with the
    cross-indexed linear term.

    Relay entries evaluate their cubic coefficients at own-message powers of
    half of each budget, and the relaying slice ranges over what those seeds
    leave free.

    Parameters
    ----------
    kind:
        Scenario selector; strings are accepted.
    gains, geometry:
        Channel gains and node geometry.  Geometry matters only for the
        distance entries.
    sigma2:
        Receiver noise power, positive.
    alpha:
        Cooperation level in ``(0, 1]``.
    price:
        Positive power price (the closed forms divide by it).
    budgets:
        Per-transmitter power budgets bounding the search intervals.

    Returns
    -------
    ValidationReport
        Deterministic for identical inputs.
    """

    kind = ScenarioKind(kind)
    noise = NoiseModel(float(sigma2))
    a = float(alpha)
    lam = float(price)
    if not lam > 0:
        raise ValueError("price must be positive for closed-form evaluation")
    s2 = noise.sigma2
    closed = evaluate_closed_forms(gains, noise, alpha=a, price=lam)
    entries: list[FormulaCheck] = []

    if kind is ScenarioKind.NON_COOP:
        entries.append(
            _check_formula(
                "non_coop.p_a",
                penalized_objective(kind, "p_a", gains, noise, price=lam),
                solve_quadratic_real(noncoop_quadratic(gains.g_ab, gains.g_ae, s2, lam)),
                closed["noncoop_pa"],
                budgets.p_a_max,
            )
        )
        objective_pj = penalized_objective(kind, "p_j", gains, noise, price=lam)
        entries.append(
            _check_formula(
                "non_coop.p_j",
                objective_pj,
                solve_quadratic_real(noncoop_quadratic(gains.g_jb, gains.g_je, s2, lam)),
                closed["noncoop_pj"],
                budgets.p_j_max,
            )
        )
        entries.append(
            _check_formula(
                "non_coop.p_j.variant",
                objective_pj,
                solve_quadratic_real(noncoop_quadratic_pj_variant(gains, noise, price=lam)),
                None,
                budgets.p_j_max,
            )
        )
    elif kind is ScenarioKind.ONE_SIDE_COOP:
        entries.append(
            _check_formula(
                "one_side_coop.p_a",
                penalized_objective(kind, "p_a", gains, noise, price=lam),
                solve_quadratic_real(one_side_quadratic_pa(gains, noise, price=lam)),
                closed["one_side_pa"],
                budgets.p_a_max,
            )
        )
        entries.append(
            _check_formula(
                "one_side_coop.p_j",
                penalized_objective(kind, "p_j", gains, noise, price=lam, alpha=a),
                solve_quadratic_real(one_side_quadratic_pj(gains, noise, alpha=a, price=lam)),
                closed["one_side_pj"],
                budgets.p_j_max,
            )
        )
    elif kind is ScenarioKind.MAC_COOP:
        objective_pj = penalized_objective(kind, "p_j", gains, noise, price=lam, alpha=a)
        objective_pa = penalized_objective(kind, "p_a", gains, noise, price=lam, alpha=a)
        entries.append(
            _check_formula(
                "mac_coop.p_j",
                objective_pj,
                solve_quadratic_real(mac_quadratic_pj(gains, noise, alpha=a, price=lam)),
                closed["mac_pj"],
                budgets.p_j_max,
            )
        )
        entries.append(
            _check_formula(
                "mac_coop.p_a",
                objective_pa,
                solve_quadratic_real(mac_quadratic_pa(gains, noise, alpha=a, price=lam)),
                closed["mac_pa"],
                budgets.p_a_max,
            )
        )
        attenuated = gains.effective(geometry)
        objective_pj_d = penalized_objective(kind, "p_j", attenuated, noise, price=lam, alpha=a)
        objective_pa_d = penalized_objective(kind, "p_a", attenuated, noise, price=lam, alpha=a)
        for formula_id, builder, objective, hi in (
            ("mac_coop.p_j.distance", distance_mac_quadratic_pj, objective_pj_d, budgets.p_j_max),
            (
                "mac_coop.p_j.distance.variant",
                distance_mac_quadratic_pj_variant,
                objective_pj_d,
                budgets.p_j_max,
            ),
            ("mac_coop.p_a.distance", distance_mac_quadratic_pa, objective_pa_d, budgets.p_a_max),
            (
                "mac_coop.p_a.distance.variant",
                distance_mac_quadratic_pa_variant,
                objective_pa_d,
                budgets.p_a_max,
            ),
        ):
            entries.append(
                _check_formula(
                    formula_id,
                    objective,
                    solve_quadratic_real(
                        builder(gains, noise, geometry, alpha=a, price=lam)
                    ),
                    None,
                    hi,
                )
            )
    elif kind is ScenarioKind.RELAY_COOP:
        seed_a = 0.5 * budgets.p_a_max
        seed_j = 0.5 * budgets.p_j_max
        hi_jb = max(min(budgets.p_j_max - seed_j, (budgets.p_a_max - seed_a) / a), 0.0)
        hi_ab = max(min(budgets.p_a_max - seed_a, a * (budgets.p_j_max - seed_j)), 0.0)
        entries.append(
            _check_formula(
                "relay_coop.p_jb",
                penalized_objective(kind, "p_jb", gains, noise, price=lam, alpha=a, p_a=seed_a),
                solve_cubic_real(relay_cubic_for_a(gains, noise, p_a=seed_a, alpha=a, price=lam)),
                None,
                hi_jb,
            )
        )
        entries.append(
            _check_formula(
                "relay_coop.p_ab",
                penalized_objective(kind, "p_ab", gains, noise, price=lam, alpha=a, p_j=seed_j),
                solve_cubic_real(relay_cubic_for_j(gains, noise, p_j=seed_j, alpha=a, price=lam)),
                None,
                hi_ab,
            )
        )
    else:  # pragma: no cover - ScenarioKind is exhaustive
        raise ValueError(f"unknown scenario kind: {kind!r}")

    return ValidationReport(kind=kind, entries=tuple(entries))
