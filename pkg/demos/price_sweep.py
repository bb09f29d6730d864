"""Show how the power price steers one allocation between its regimes.

At a negligible price the swap allocation spends what the stationary point
asks for, beyond the budget if need be (then clamped); as the price grows
the interior optimum slides below the budget and finally collapses to
zero. The same sweep also demonstrates the price search: find the price at
which total consumption drops to a target.
"""

from __future__ import annotations

from coopsec import (
    ChannelGains,
    NoiseModel,
    PowerBudget,
    bisect_price_for_budget,
    mac_allocation,
)

GAINS = ChannelGains(g_ab=0.4, g_ae=0.3, g_jb=0.5, g_je=0.3, g_aj=0.2)
NOISE = NoiseModel(1.0)
BUDGETS = PowerBudget(p_a_max=20.0, p_j_max=20.0)


def main() -> None:
    print(f"{'price':>8} {'p_a':>8} {'p_j':>8} {'cs1':>8} {'cs2':>8} provenance")
    for price in (1e-4, 1e-3, 5e-3, 1e-2, 2e-2, 5e-2, 1e-1):
        allocation = mac_allocation(GAINS, NOISE, BUDGETS, alpha=0.8, price=price)
        tags = ",".join(
            f"{key}={value.value}" for key, value in sorted(allocation.provenance.items())
        )
        print(
            f"{price:8.4f} {allocation.p_a:8.3f} {allocation.p_j:8.3f}"
            f" {allocation.cs.cs1:8.4f} {allocation.cs.cs2:8.4f} {tags}"
        )

    def consumption(price: float) -> float:
        allocation = mac_allocation(GAINS, NOISE, BUDGETS, alpha=0.8, price=price)
        return allocation.p_a + allocation.p_j

    target = 10.0
    price = bisect_price_for_budget(consumption, target, price_lo=1e-6)
    print(f"\nprice bringing total consumption down to {target:g}: {price:.6f}")
    print(f"consumption at that price: {consumption(price):.6f}")


if __name__ == "__main__":
    main()
