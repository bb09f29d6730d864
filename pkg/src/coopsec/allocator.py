"""Priced power allocation from stationarity polynomials.

Each transmitter is billed for the power its request makes the pair spend:
the billed amount is ``alpha * p_jb`` or ``p_ab / alpha`` for the relaying
slices, ``alpha * p_j`` or ``p_a / alpha`` for the power-swap modes, and the
raw power otherwise.  An allocation maximises

    f(p) = secrecy-rate term(p) - price * billed(p)

over the feasible interval.  The stationary candidates come from fixed
coefficient formulas (quadratics for the direct modes, cubics for the relay
mode) rather than from a numerical derivative, so results are reproducible
bit for bit.

A few conditions admit more than one plausible derivation route.  The main
builders carry the self-consistent route; the ``*_variant`` builders keep the
alternate spelling so the validation layer can evaluate both and report which
one the independent grid search supports.  The compact square-root forms in
:func:`closed_form_allocations` are likewise kept for cross-checking only and
never drive an allocation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping, Sequence

import numpy as np

from .model import ChannelGains, Geometry, NoiseModel, PowerBudget
from .rates import RatePair, ScenarioKind, secrecy_rate

__all__ = [
    "OptimalAllocation",
    "Provenance",
    "bisect_price_for_budget",
    "distance_adjusted_mac_allocation",
    "distance_mac_quadratic_pa",
    "distance_mac_quadratic_pa_variant",
    "distance_mac_quadratic_pj",
    "distance_mac_quadratic_pj_variant",
    "evaluate_closed_forms",
    "mac_allocation",
    "mac_quadratic_pa",
    "mac_quadratic_pj",
    "noncoop_allocation",
    "noncoop_quadratic",
    "noncoop_quadratic_pj_variant",
    "one_side_allocation",
    "one_side_quadratic_pa",
    "one_side_quadratic_pj",
    "penalized_objective",
    "relay_allocation",
    "relay_cubic_for_a",
    "relay_cubic_for_j",
    "solve_cubic_real",
    "solve_quadratic_real",
]


class Provenance(str, Enum):
    """How a power value was decided."""

    INTERIOR = "interior-stationary"
    BUDGET = "budget-clamped"
    ZERO = "zero-clamped"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class OptimalAllocation:
    """Outcome of one allocation call.

    ``p_a``/``p_j`` are the powers left for each side's own message,
    ``p_ab``/``p_jb`` the relaying slices (zero outside relay mode), ``cs``
    the secrecy rates at those powers.  ``provenance`` maps each decided
    variable to how it was picked; variables pinned by the power-exchange
    ratio do not appear in it.
    """

    mode: ScenarioKind
    p_a: float
    p_j: float
    p_ab: float
    p_jb: float
    cs: RatePair
    provenance: Mapping[str, Provenance]


def _as_price(price: float) -> float:
    lam = float(price)
    if not math.isfinite(lam) or lam < 0:
        raise ValueError(f"price must be finite and non-negative, got {price!r}")
    return lam


def _as_alpha(alpha: float) -> float:
    a = float(alpha)
    if not 0.0 < a <= 1.0:
        raise ValueError(f"cooperative modes need alpha in (0, 1], got {alpha!r}")
    return a


# ---------------------------------------------------------------------------
# root finding


def _real_roots(coeffs: Sequence[float], merge_tol: float = 1e-9) -> list[float]:
    coeffs = [float(c) for c in coeffs]
    if all(c == 0.0 for c in coeffs):
        raise ValueError("polynomial is identically zero")
    while coeffs and coeffs[0] == 0.0:
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return []
    raw = np.roots(coeffs)
    deriv = np.polyder(np.asarray(coeffs))
    roots: list[float] = []
    for z in raw:
        if abs(z.imag) > 1e-8 * max(1.0, abs(z)):
            continue
        x = float(z.real)
        # guarded Newton polish: near a multiple root the derivative is
        # ~zero and a raw step can fling the iterate away, so only accept
        # steps that shrink the residual
        best = abs(float(np.polyval(coeffs, x)))
        for _ in range(3):
            slope = float(np.polyval(deriv, x))
            if slope == 0.0 or not math.isfinite(slope):
                break
            step = float(np.polyval(coeffs, x)) / slope
            if not math.isfinite(step):
                break
            candidate = x - step
            value = abs(float(np.polyval(coeffs, candidate)))
            if value >= best:
                break
            x, best = candidate, value
        roots.append(x)
    roots.sort()
    merged: list[float] = []
    for x in roots:
        if merged and abs(x - merged[-1]) <= merge_tol * max(1.0, abs(x)):
            continue
        merged.append(x)
    return merged


def solve_quadratic_real(coeffs: Sequence[float]) -> list[float]:
    """Real roots of ``c0 x^2 + c1 x + c2``, ascending.

    A vanishing leading coefficient degrades gracefully to the linear (or
    empty) case.  Near-multiple roots are merged; every returned root is
    polished with a few Newton steps so residuals stay near machine level.
    """

    if len(coeffs) != 3:
        raise ValueError(f"expected 3 coefficients, got {len(coeffs)}")
    return _real_roots(coeffs)


def solve_cubic_real(coeffs: Sequence[float]) -> list[float]:
    """Real roots of ``c0 x^3 + c1 x^2 + c2 x + c3``, ascending."""

    if len(coeffs) != 4:
        raise ValueError(f"expected 4 coefficients, got {len(coeffs)}")
    return _real_roots(coeffs)


# ---------------------------------------------------------------------------
# stationarity polynomials


def relay_cubic_for_a(
    gains: ChannelGains,
    noise: NoiseModel,
    *,
    p_a: float,
    alpha: float,
    price: float,
) -> list[float]:
    """Cubic in ``p_jb`` (partner relaying power for a's message).

    Coefficients are evaluated at a fixed own-message power ``p_a``; the
    allocation layer decides what to seed that with.
    """

    a = _as_alpha(alpha)
    lam = _as_price(price)
    if p_a < 0:
        raise ValueError("p_a must be non-negative")
    g_ab, g_ae, g_aj, g_jb = gains.g_ab, gains.g_ae, gains.g_aj, gains.g_jb
    s2 = noise.sigma2
    w1 = s2 * g_jb**2 + g_jb**2 * g_ab * p_a + g_jb**2 * g_aj * p_a
    w2 = (s2 * g_jb + 2 * g_jb * g_ab * p_a + g_aj * g_jb * p_a + s2 * g_jb) * (g_aj + s2)
    w3 = (g_ab * p_a + s2) * (g_aj * p_a + s2) ** 2
    w4 = a * s2 + a * g_ae * (1.0 + lam * p_a)
    w5 = a**2 + g_ae * lam * p_a
    kappa = g_aj * g_jb * p_a * (g_aj * p_a + s2)
    return [
        w1 * a**2 * g_ae,
        w1 * w4 + w2 * a**2 * g_ae,
        w2 * w4 + w3 * a**2 * g_ae - a * g_ae * kappa,
        w3 * w4 - w5 * kappa,
    ]


def relay_cubic_for_j(
    gains: ChannelGains,
    noise: NoiseModel,
    *,
    p_j: float,
    alpha: float,
    price: float,
) -> list[float]:
    """Cubic in ``p_ab`` (partner relaying power for j's message).

    Mirror of :func:`relay_cubic_for_a` with the roles swapped.  One bracket
    mixes the two inter-transmitter gains; the validation layer is the place
    that measures what that does to the roots.
    """

    a = _as_alpha(alpha)
    lam = _as_price(price)
    if p_j < 0:
        raise ValueError("p_j must be non-negative")
    g_ab, g_jb, g_je, g_ja, g_aj = gains.g_ab, gains.g_jb, gains.g_je, gains.g_ja, gains.g_aj
    s2 = noise.sigma2
    f1 = s2 * g_ab**2 + g_ab**2 * g_jb * p_j + g_ab**2 * g_ja * p_j
    f2 = (s2 * g_ab + 2 * g_ab * g_jb * p_j + g_ab * g_ja * p_j + s2 * g_ab) * (g_ja * p_j + s2)
    f3 = (g_jb * p_j + s2) * (g_ja * p_j + s2) ** 2
    f4 = a * s2 * g_je * lam * p_j + a * g_je
    f5 = a**2 * s2 * g_ja * g_ab * g_je * lam * p_j**2 * (g_ja * p_j + s2)
    kappa = g_ja * g_ab * g_je * p_j * (g_aj * p_j + s2)
    return [
        g_je * f1,
        g_je * f2 + f1 * f4,
        g_je * f3 + f2 * f4 - a * kappa,
        f3 * f4 - f5,
    ]


def mac_quadratic_pj(
    gains: ChannelGains, noise: NoiseModel, *, alpha: float, price: float
) -> list[float]:
    """Quadratic in ``p_j`` for the power-swap mode (a's message side)."""

    a = _as_alpha(alpha)
    lam = _as_price(price)
    g_ab, g_ae = gains.g_ab, gains.g_ae
    s2 = noise.sigma2
    return [
        lam * a**2 * g_ab * g_ae,
        lam * (a * s2 * g_ab + a * s2 * g_ae),
        -(s2 * g_ab - s2 * g_ae - lam * s2**2),
    ]


def mac_quadratic_pa(
    gains: ChannelGains, noise: NoiseModel, *, alpha: float, price: float
) -> list[float]:
    """Quadratic in ``p_a`` for the power-swap mode (j's message side)."""

    a = _as_alpha(alpha)
    lam = _as_price(price)
    g_jb, g_je = gains.g_jb, gains.g_je
    s2 = noise.sigma2
    return [
        lam * g_je * g_jb / a**2,
        lam * (s2 * g_jb / a + s2 * g_je / a),
        -(s2 * g_jb - s2 * g_je - lam * s2**2),
    ]


def one_side_quadratic_pa(gains: ChannelGains, noise: NoiseModel, *, price: float) -> list[float]:
    """Quadratic in ``p_a`` when a transmits its own message directly."""

    lam = _as_price(price)
    g_ab, g_ae = gains.g_ab, gains.g_ae
    s2 = noise.sigma2
    return [
        lam * g_ab * g_ae,
        lam * (s2 * g_ab + s2 * g_ae),
        -(s2 * g_ab - s2 * g_ae - lam * s2**2),
    ]


def one_side_quadratic_pj(
    gains: ChannelGains, noise: NoiseModel, *, alpha: float, price: float
) -> list[float]:
    """Quadratic in ``p_j`` when j's donation carries its message over a's links.

    Identical to :func:`mac_quadratic_pj`: the donated power rides the same
    link pair with the same billing, so the stationarity condition matches.
    """

    return mac_quadratic_pj(gains, noise, alpha=alpha, price=price)


def noncoop_quadratic(g_main: float, g_eve: float, sigma2: float, price: float) -> list[float]:
    """Quadratic in own power for a single directly transmitted message.

    Generic in the link pair: pass ``(g_ab, g_ae)`` for transmitter a or
    ``(g_jb, g_je)`` for transmitter j.
    """

    lam = _as_price(price)
    if g_main < 0 or g_eve < 0 or sigma2 <= 0:
        raise ValueError("gains must be non-negative and sigma2 positive")
    return [
        lam * g_main * g_eve,
        lam * sigma2 * (g_main + g_eve),
        -(sigma2 * g_main - sigma2 * g_eve - lam * sigma2**2),
    ]


def noncoop_quadratic_pj_variant(
    gains: ChannelGains, noise: NoiseModel, *, price: float
) -> list[float]:
    """Alternate spelling of the j-side quadratic with a cross-indexed term.

    Its linear coefficient mixes ``g_ab`` into a condition that otherwise
    only involves j's links.  Kept for the validation report; allocations use
    :func:`noncoop_quadratic` on ``(g_jb, g_je)``.
    """

    lam = _as_price(price)
    s2 = noise.sigma2
    return [
        lam * gains.g_jb * gains.g_je,
        lam * (s2 * gains.g_ab + s2 * gains.g_je),
        -(s2 * gains.g_jb - s2 * gains.g_je - lam * s2**2),
    ]


def distance_mac_quadratic_pj(
    gains: ChannelGains,
    noise: NoiseModel,
    geometry: Geometry,
    *,
    alpha: float,
    price: float,
) -> list[float]:
    """Geometry-aware form of :func:`mac_quadratic_pj`.

    Derived by substituting path-loss-scaled gains and clearing denominators,
    so its roots coincide with ``mac_quadratic_pj`` evaluated on
    ``gains.effective(geometry)``.
    """

    a = _as_alpha(alpha)
    lam = _as_price(price)
    g_ab, g_ae = gains.g_ab, gains.g_ae
    s2 = noise.sigma2
    dab = geometry.d_ab**geometry.eta
    dae = geometry.d_ae**geometry.eta
    return [
        lam * a**2 * g_ab * g_ae,
        lam * a * s2 * (g_ab * dae + g_ae * dab),
        -(s2 * g_ab * dae - s2 * g_ae * dab - lam * s2**2 * dab * dae),
    ]


def distance_mac_quadratic_pj_variant(
    gains: ChannelGains,
    noise: NoiseModel,
    geometry: Geometry,
    *,
    alpha: float,
    price: float,
) -> list[float]:
    """Alternate route for the geometry-aware j-side quadratic.

    Fixes the square-law exponent and pairs each gain with its own distance
    in the linear term instead of the partner's.  Kept for comparison; the
    substitution route above is what allocations use.
    """

    a = _as_alpha(alpha)
    lam = _as_price(price)
    g_ab, g_ae = gains.g_ab, gains.g_ae
    s2 = noise.sigma2
    dab = geometry.d_ab**2
    dae = geometry.d_ae**2
    return [
        lam * a**2 * g_ab * g_ae,
        lam * a * s2 * (g_ab * dab + g_ae * dae),
        -(s2 * g_ab * dae - s2 * g_ae * dab - lam * s2**2 * dab * dae),
    ]


def distance_mac_quadratic_pa(
    gains: ChannelGains,
    noise: NoiseModel,
    geometry: Geometry,
    *,
    alpha: float,
    price: float,
) -> list[float]:
    """Geometry-aware form of :func:`mac_quadratic_pa` (substitution route)."""

    a = _as_alpha(alpha)
    lam = _as_price(price)
    g_jb, g_je = gains.g_jb, gains.g_je
    s2 = noise.sigma2
    djb = geometry.d_jb**geometry.eta
    dje = geometry.d_je**geometry.eta
    return [
        lam * g_je * g_jb / a**2,
        (lam * s2 / a) * (g_jb * dje + g_je * djb),
        -(s2 * g_jb * dje - s2 * g_je * djb - lam * s2**2 * djb * dje),
    ]


def distance_mac_quadratic_pa_variant(
    gains: ChannelGains,
    noise: NoiseModel,
    geometry: Geometry,
    *,
    alpha: float,
    price: float,
) -> list[float]:
    """Alternate route for the geometry-aware a-side quadratic.

    Square-law exponent, with the constant term pairing each gain with its
    own distance.  Kept for comparison only.
    """

    a = _as_alpha(alpha)
    lam = _as_price(price)
    g_jb, g_je = gains.g_jb, gains.g_je
    s2 = noise.sigma2
    djb = geometry.d_jb**2
    dje = geometry.d_je**2
    return [
        lam * g_je * g_jb / a**2,
        (lam * s2 / a) * (g_jb * dje + g_je * djb),
        -(s2 * g_jb * djb - s2 * g_je * dje - lam * s2**2 * djb * dje),
    ]


def evaluate_closed_forms(
    gains: ChannelGains, noise: NoiseModel, *, alpha: float, price: float
) -> dict[str, float]:
    """Compact square-root expressions for the six direct-mode stationary points.

    Evaluated exactly as written, for cross-checking against the quadratic
    roots; an entry whose radicand is negative comes back as NaN.  Requires a
    strictly positive price (the expressions divide by it) and strictly
    positive gains (they divide by those too).

    Keys: ``mac_pa``, ``mac_pj``, ``one_side_pa``, ``one_side_pj``,
    ``noncoop_pa``, ``noncoop_pj``.
    """

    a = _as_alpha(alpha)
    lam = _as_price(price)
    if lam == 0.0:
        raise ValueError("closed forms require a strictly positive price")
    g_ab, g_ae, g_jb, g_je = gains.g_ab, gains.g_ae, gains.g_jb, gains.g_je
    if min(g_ab, g_ae, g_jb, g_je) <= 0:
        raise ValueError("closed forms require strictly positive link gains")
    s2 = noise.sigma2
    s4 = s2 * s2

    def root_or_nan(numerator: float, denominator: float) -> float:
        radicand = numerator / denominator
        if radicand < 0:
            return math.nan
        return math.sqrt(radicand)

    slack_a = s2 * g_ab - s2 * g_ae - lam * s4
    slack_j = s2 * g_jb - s2 * g_je - lam * s4

    mac_pa = (a / 2.0) * root_or_nan(
        lam**2 * s4 * (g_jb + g_je) ** 2 + 4 * lam * g_jb * g_je * slack_j,
        (lam * g_jb * g_je) ** 2,
    ) - s2 * (1.0 / g_je + 1.0 / g_jb)
    mac_pj = (1.0 / (2.0 * lam * a)) * root_or_nan(
        (s2 * g_ab + s2 * g_ae) ** 2 + 4 * lam * g_ab * g_ae * slack_a,
        (g_ab * g_ae) ** 2,
    ) - s2 * (1.0 / g_ae + 1.0 / g_ab)
    one_side_pa = 0.5 * root_or_nan(
        lam**2 * s4 * (g_ab + g_ae) ** 2 + 4 * lam * g_ab * g_ae * slack_a,
        (lam * g_ab * g_ae) ** 2,
    ) - s2 * (1.0 / g_ae + 1.0 / g_ab)
    noncoop_pj = 0.5 * root_or_nan(
        lam**2 * s4 * (g_jb + g_je) ** 2 + 4 * lam * g_jb * g_je * slack_j,
        (lam * g_jb * g_je) ** 2,
    ) - s2 * (1.0 / g_je + 1.0 / g_jb)

    return {
        "mac_pa": mac_pa,
        "mac_pj": mac_pj,
        "one_side_pa": one_side_pa,
        "one_side_pj": mac_pj,
        "noncoop_pa": one_side_pa,
        "noncoop_pj": noncoop_pj,
    }


# ---------------------------------------------------------------------------
# penalised objectives


def _priced_gap_objective(
    g_main: float, g_eve: float, s2: float, lam: float, scale: float
) -> Callable[[float], float]:
    def f(p):
        x = scale * p
        return np.log1p(g_main * x / s2) - np.log1p(g_eve * x / s2) - lam * x

    return f


def _priced_relay_objective(
    g_direct: float,
    g_eve: float,
    g_hop1: float,
    g_hop2: float,
    s2: float,
    lam: float,
    own_power: float,
    pay_scale: float,
) -> Callable[[float], float]:
    base_main = g_direct * own_power / s2
    eve_term = math.log1p(g_eve * own_power / s2)
    first_hop = g_hop1 * own_power

    def f(p):
        second_hop = g_hop2 * p
        relayed = first_hop * second_hop / (s2 * (first_hop + second_hop + s2))
        return np.log1p(base_main + relayed) - eve_term - lam * pay_scale * p

    return f


def penalized_objective(
    kind: ScenarioKind,
    side: str,
    gains: ChannelGains,
    noise: NoiseModel,
    *,
    price: float,
    alpha: float | None = None,
    p_a: float | None = None,
    p_j: float | None = None,
) -> Callable[[float], float]:
    """Objective that a given allocation decision maximises.

    ``side`` names the decision variable: ``"p_a"``/``"p_j"`` for the direct
    modes, ``"p_jb"``/``"p_ab"`` for the relay slices (those additionally
    need the transmitting side's own power ``p_a``/``p_j``).  The returned
    callable accepts scalars or numpy arrays.
    """

    kind = ScenarioKind(kind)
    lam = _as_price(price)
    s2 = noise.sigma2

    if kind is ScenarioKind.NON_COOP:
        if side == "p_a":
            return _priced_gap_objective(gains.g_ab, gains.g_ae, s2, lam, 1.0)
        if side == "p_j":
            return _priced_gap_objective(gains.g_jb, gains.g_je, s2, lam, 1.0)
    elif kind is ScenarioKind.ONE_SIDE_COOP:
        if side == "p_a":
            return _priced_gap_objective(gains.g_ab, gains.g_ae, s2, lam, 1.0)
        if side == "p_j":
            return _priced_gap_objective(gains.g_ab, gains.g_ae, s2, lam, _as_alpha(alpha))
    elif kind is ScenarioKind.MAC_COOP:
        if side == "p_j":
            return _priced_gap_objective(gains.g_ab, gains.g_ae, s2, lam, _as_alpha(alpha))
        if side == "p_a":
            return _priced_gap_objective(gains.g_jb, gains.g_je, s2, lam, 1.0 / _as_alpha(alpha))
    else:
        if side == "p_jb":
            if p_a is None:
                raise ValueError("relay side 'p_jb' needs the seed power p_a")
            return _priced_relay_objective(
                gains.g_ab, gains.g_ae, gains.g_aj, gains.g_jb, s2, lam, p_a, _as_alpha(alpha)
            )
        if side == "p_ab":
            if p_j is None:
                raise ValueError("relay side 'p_ab' needs the seed power p_j")
            return _priced_relay_objective(
                gains.g_jb, gains.g_je, gains.g_ja, gains.g_ab, s2, lam, p_j, 1.0 / _as_alpha(alpha)
            )
    raise ValueError(f"unknown decision variable {side!r} for {kind.value}")


# ---------------------------------------------------------------------------
# candidate selection


def _argmax_candidate(
    objective: Callable[[float], float], roots: Sequence[float], hi: float
) -> tuple[float, Provenance]:
    candidates = [0.0]
    if hi > 0:
        candidates.append(float(hi))
    candidates.extend(float(r) for r in roots if math.isfinite(r) and 0.0 < r < hi)
    best_p = 0.0
    best_v = -math.inf
    for p in sorted(candidates):
        v = float(objective(p))
        if math.isfinite(v) and v > best_v:
            best_p, best_v = p, v
    if best_p == 0.0:
        return best_p, Provenance.ZERO
    if best_p == hi:
        return best_p, Provenance.BUDGET
    return best_p, Provenance.INTERIOR


def _noncoop_pick(
    g_main: float, g_eve: float, roots: Sequence[float], hi: float
) -> tuple[float, Provenance]:
    # Direct transmission follows the simple threshold rule: take the
    # stationary point when it is interior, otherwise go all-in exactly when
    # the legitimate link is the stronger one.
    interior = [r for r in roots if math.isfinite(r) and 0.0 < r < hi]
    if interior:
        return min(interior), Provenance.INTERIOR
    if g_main > g_eve and hi > 0:
        return float(hi), Provenance.BUDGET
    return 0.0, Provenance.ZERO


# ---------------------------------------------------------------------------
# allocations


def noncoop_allocation(
    gains: ChannelGains, noise: NoiseModel, budget: PowerBudget, *, price: float
) -> OptimalAllocation:
    """Independent direct transmission on both sides."""

    lam = _as_price(price)
    s2 = noise.sigma2
    roots_a = solve_quadratic_real(noncoop_quadratic(gains.g_ab, gains.g_ae, s2, lam))
    roots_j = solve_quadratic_real(noncoop_quadratic(gains.g_jb, gains.g_je, s2, lam))
    p_a, prov_a = _noncoop_pick(gains.g_ab, gains.g_ae, roots_a, budget.p_a_max)
    p_j, prov_j = _noncoop_pick(gains.g_jb, gains.g_je, roots_j, budget.p_j_max)
    cs = secrecy_rate(ScenarioKind.NON_COOP, gains, noise, p_a=p_a, p_j=p_j)
    return OptimalAllocation(
        mode=ScenarioKind.NON_COOP,
        p_a=p_a,
        p_j=p_j,
        p_ab=0.0,
        p_jb=0.0,
        cs=cs,
        provenance={"p_a": prov_a, "p_j": prov_j},
    )


def one_side_allocation(
    gains: ChannelGains,
    noise: NoiseModel,
    budget: PowerBudget,
    *,
    alpha: float,
    price: float,
) -> OptimalAllocation:
    """j donates power, a forwards j's message over its own links."""

    a = _as_alpha(alpha)
    lam = _as_price(price)
    roots_a = solve_quadratic_real(one_side_quadratic_pa(gains, noise, price=lam))
    obj_a = penalized_objective(ScenarioKind.ONE_SIDE_COOP, "p_a", gains, noise, price=lam)
    p_a, prov_a = _argmax_candidate(obj_a, roots_a, budget.p_a_max)
    roots_j = solve_quadratic_real(one_side_quadratic_pj(gains, noise, alpha=a, price=lam))
    obj_j = penalized_objective(
        ScenarioKind.ONE_SIDE_COOP, "p_j", gains, noise, price=lam, alpha=a
    )
    p_j, prov_j = _argmax_candidate(obj_j, roots_j, budget.p_j_max)
    cs = secrecy_rate(ScenarioKind.ONE_SIDE_COOP, gains, noise, p_a=p_a, p_j=p_j, alpha=a)
    return OptimalAllocation(
        mode=ScenarioKind.ONE_SIDE_COOP,
        p_a=p_a,
        p_j=p_j,
        p_ab=0.0,
        p_jb=0.0,
        cs=cs,
        provenance={"p_a": prov_a, "p_j": prov_j},
    )


def mac_allocation(
    gains: ChannelGains,
    noise: NoiseModel,
    budget: PowerBudget,
    *,
    alpha: float,
    price: float,
) -> OptimalAllocation:
    """Mutual power swap: each message rides the partner-funded power."""

    a = _as_alpha(alpha)
    lam = _as_price(price)
    roots_j = solve_quadratic_real(mac_quadratic_pj(gains, noise, alpha=a, price=lam))
    obj_j = penalized_objective(ScenarioKind.MAC_COOP, "p_j", gains, noise, price=lam, alpha=a)
    p_j, prov_j = _argmax_candidate(obj_j, roots_j, budget.p_j_max)
    roots_a = solve_quadratic_real(mac_quadratic_pa(gains, noise, alpha=a, price=lam))
    obj_a = penalized_objective(ScenarioKind.MAC_COOP, "p_a", gains, noise, price=lam, alpha=a)
    p_a, prov_a = _argmax_candidate(obj_a, roots_a, budget.p_a_max)
    cs = secrecy_rate(ScenarioKind.MAC_COOP, gains, noise, p_a=p_a, p_j=p_j, alpha=a)
    return OptimalAllocation(
        mode=ScenarioKind.MAC_COOP,
        p_a=p_a,
        p_j=p_j,
        p_ab=0.0,
        p_jb=0.0,
        cs=cs,
        provenance={"p_a": prov_a, "p_j": prov_j},
    )


def distance_adjusted_mac_allocation(
    gains: ChannelGains,
    noise: NoiseModel,
    geometry: Geometry,
    budget: PowerBudget,
    *,
    alpha: float,
    price: float,
) -> OptimalAllocation:
    """Power-swap allocation with path loss folded into the gains.

    Equivalent to clearing denominators in the geometry-aware quadratics:
    at unit distances it reproduces :func:`mac_allocation` bit for bit.
    """

    return mac_allocation(gains.effective(geometry), noise, budget, alpha=alpha, price=price)


def relay_allocation(
    gains: ChannelGains,
    noise: NoiseModel,
    budget: PowerBudget,
    *,
    alpha: float,
    price: float,
    p_a_seed: float | None = None,
    p_j_seed: float | None = None,
    alternating: bool = False,
    max_iter: int = 50,
    tol: float = 1e-8,
) -> OptimalAllocation:
    """Mutual relaying with the exchange ratio pinning the return slice.

    The request originates with transmitter a: the cubic picks j's relaying
    power ``p_jb`` and a's return slice is pinned to ``p_ab = alpha * p_jb``.
    The seeds are the own-message powers at which the cubic's coefficients
    are evaluated (half of each budget when omitted); the relaying slice is
    chosen from what the seeds leave free,
    ``[0, min(p_j_max - p_j_seed, (p_a_max - p_a_seed) / alpha)]``.  An empty
    interval simply yields zero relaying, flagged ``zero-clamped``.

    The returned own-message powers are the budget remainders
    ``p_a_max - p_ab`` and ``p_j_max - p_jb``, which with a single pass can
    differ from the seeds the coefficients saw.  ``alternating=True``
    re-solves with the seeds replaced by those remainders until the slice
    stops moving, making the reported powers self-consistent.
    """

    a = _as_alpha(alpha)
    lam = _as_price(price)
    seed_a = 0.5 * budget.p_a_max if p_a_seed is None else float(p_a_seed)
    seed_j = 0.5 * budget.p_j_max if p_j_seed is None else float(p_j_seed)
    if seed_a < 0 or seed_j < 0:
        raise ValueError("seeds must be non-negative")
    hi = max(min(budget.p_j_max - seed_j, (budget.p_a_max - seed_a) / a), 0.0)

    def pick(seed_power: float) -> tuple[float, Provenance]:
        coeffs = relay_cubic_for_a(gains, noise, p_a=seed_power, alpha=a, price=lam)
        roots = solve_cubic_real(coeffs)
        objective = penalized_objective(
            ScenarioKind.RELAY_COOP, "p_jb", gains, noise, price=lam, alpha=a, p_a=seed_power
        )
        return _argmax_candidate(objective, roots, hi)

    p_jb, prov = pick(seed_a)
    if alternating:
        for _ in range(max_iter):
            new_seed = max(budget.p_a_max - a * p_jb, 0.0)
            if abs(new_seed - seed_a) <= tol:
                break
            seed_a = new_seed
            p_jb, prov = pick(seed_a)
    p_ab = a * p_jb
    p_a = max(budget.p_a_max - p_ab, 0.0)
    p_j = max(budget.p_j_max - p_jb, 0.0)
    cs = secrecy_rate(
        ScenarioKind.RELAY_COOP, gains, noise, p_a=p_a, p_j=p_j, p_ab=p_ab, p_jb=p_jb
    )
    return OptimalAllocation(
        mode=ScenarioKind.RELAY_COOP,
        p_a=p_a,
        p_j=p_j,
        p_ab=p_ab,
        p_jb=p_jb,
        cs=cs,
        provenance={"p_jb": prov},
    )


# ---------------------------------------------------------------------------
# dual-price search


def bisect_price_for_budget(
    consumed_power: Callable[[float], float],
    target: float,
    *,
    price_lo: float = 0.0,
    price_hi: float | None = None,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> float:
    """Smallest price at which consumption drops to the target.

    ``consumed_power`` maps a price to total allocated power and must be
    non-increasing.  The bracket's upper end is grown geometrically until it
    satisfies the target, then bisected to ``tol`` (relative on the price).
    Returns ``price_lo`` immediately when the target is already met there.
    """

    if target < 0:
        raise ValueError("target power must be non-negative")
    lo = float(price_lo)
    if consumed_power(lo) <= target:
        return lo
    hi = float(price_hi) if price_hi is not None else max(1.0, 2.0 * lo)
    expansions = 0
    while consumed_power(hi) > target:
        hi *= 2.0
        expansions += 1
        if expansions > 120:
            raise ValueError("no price within range brings consumption to the target")
    for _ in range(max_iter):
        if hi - lo <= tol * max(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        if consumed_power(mid) > target:
            lo = mid
        else:
            hi = mid
    return hi
