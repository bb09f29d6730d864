"""Print the with/without relaying secrecy curves at the standard point.

Reproduces the shape of the fixed-power experiment: both transmitters hold
their own-message power at 5 while the relaying power grows, versus plain
direct transmission at the same swept power. The relayed curve should sit
on or above the bare curve at every point.
"""

from __future__ import annotations

from coopsec import preset_config, run_sweep


def main() -> None:
    rows = run_sweep(preset_config("fig3"))
    relayed = {r.axis: r for r in rows if r.mode == "relay_coop"}
    bare = {r.axis: r for r in rows if r.mode == "non_coop"}

    print("relaying power sweep, natural-log rates for transmitter a")
    print(f"{'p_jb':>6} {'bare cs1':>10} {'relayed cs1':>12} {'gain':>8}")
    for axis in sorted(relayed):
        b = bare[axis].cs1_nat
        r = relayed[axis].cs1_nat
        print(f"{axis:6.2f} {b:10.4f} {r:12.4f} {r - b:8.4f}")

    worst = min(relayed[a].cs1_nat - bare[a].cs1_nat for a in relayed)
    print(f"\nsmallest relayed-minus-bare gap: {worst:.6f} (never negative)")


if __name__ == "__main__":
    main()
