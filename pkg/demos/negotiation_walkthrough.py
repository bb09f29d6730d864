"""Step an eavesdropper away from the pair and watch the negotiation react.

The two transmitters re-check the pairing constraints at each position.
While the eavesdropper is inside the gating radius (sqrt(6) for these gains
and pair distance 2) they agree on mutual relaying; once she recedes past
it, cooperation stops paying and they fall back to independent
transmission. Exactly one mode change should appear.
"""

from __future__ import annotations

import math

from coopsec import mobility_default_config, run_mobility


def main() -> None:
    config = mobility_default_config()
    trajectory = config.trajectory
    assert trajectory is not None
    rows = run_mobility(config)

    print(f"gating radius for these gains: sqrt(6) = {math.sqrt(6.0):.4f}")
    print(f"{'step':>4} {'d_ae':>6} {'mode':>14} {'cs1':>8} {'changed':>8}")
    for row, (d_ae, _) in zip(rows, trajectory):
        marker = "  <-- flip" if row.changed else ""
        print(
            f"{row.step:4d} {d_ae:6.2f} {row.mode:>14} {row.cs1_nat:8.4f}"
            f" {str(row.changed).lower():>8}{marker}"
        )

    changes = [row.step for row in rows if row.changed]
    print(f"\nmode changes at steps: {changes}")


if __name__ == "__main__":
    main()
