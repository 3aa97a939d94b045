"""Time-dependent check of the holonomic picture (takes a few minutes).

Integrates the Schroedinger equation along the preparation schedule, both
in the full 15-dimensional sector and restricted to the Zeno subspace, and
compares the resulting target fidelities with the ideal holonomy and with
a loop-free ramp baseline across couplings.

The schedule runs the path in a fixed number of drive cycles, so the
total time in inverse-Rabi units is 2*pi*8000/g; segment durations use
explicit weights (ramps need a fixed share of time that an arc-length
split would starve) and a smooth-edged velocity profile that avoids
velocity-discontinuity kicks at segment boundaries.
"""

import csv
import sys

from darkholonomy import DICKE_WEIGHTS, dicke_schedule, fidelity_sweep

sched = dicke_schedule(20.0)
print(f"schedule at g = 20: total time {sched.total_time:.1f} (1/Omega), "
      f"segment weights {DICKE_WEIGHTS}, profile '{sched.profile}'")

g_list = [5.0, 10.0, 20.0, 40.0]
rows = fidelity_sweep(g_list)

print(f"\n{'g':>5}  {'full':>8}  {'zeno':>8}  {'holonomic':>9}  {'no-phi':>8}")
for row in rows:
    print(f"{row['g']:5g}  {row['fidelity_full']:8.5f}  "
          f"{row['fidelity_zeno']:8.5f}  {row['fidelity_holonomic']:9.5f}  "
          f"{row['fidelity_no_phi']:8.5f}")

out = sys.argv[1] if len(sys.argv) > 1 else "fidelity_sweep.csv"
with open(out, "w", newline="") as fh:
    writer = csv.DictWriter(fh, fieldnames=list(rows[0]))
    writer.writeheader()
    writer.writerows(rows)
print(f"\nwrote {out}")
