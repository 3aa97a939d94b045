"""Holonomies of the dark pair, two ways, and SU(2) gate synthesis.

Amplitude ramps rotate the dark pair about y; phase loops rotate it about
an axis in the xz-plane.  Discrete parallel transport and the closed forms
agree to high precision, and composing the two segment types generates an
(approximately) dense set of single-qubit gates.
"""

from math import pi

import numpy as np

from darkholonomy import (
    ModelConfig,
    SectorConfig,
    approximate_x,
    axis_angle,
    closed_form_program,
    compose_w,
    coverage_fraction,
    find_theta_star,
    parse_path,
    proj_distance,
    transport,
    universality_sample,
)

config = ModelConfig(sector=SectorConfig(4, 2), g=20.0)

# A path is a small program: ramps "theta:a->b" and loops
# "phi:ma=..,mb=..@theta=..".
path = parse_path("theta:pi/4->0.6; phi:ma=1,mb=0@theta=0.6; theta:0.6->pi/4")
closed = closed_form_program(path)
transported = transport(path, config)
print(f"transport steps used: {transported.steps_used}")
print(f"closed-form vs transport distance: "
      f"{proj_distance(closed.U, transported.U):.2e}")

aa = axis_angle(closed.U)
print(f"holonomy axis = {np.round(aa.axis, 4)}, angle = {aa.angle:.4f} rad")

# The single-winding loop at theta = pi/4 is exactly a Pauli-Z gate.
z_gate = compose_w(1, 0, pi / 4)
print(f"\nW(1, 0; pi/4) =\n{np.round(z_gate.U, 6)}")

# A second generator with an x-component makes the pair universal: random
# words of the two cover the Bloch sphere.
pts = universality_sample(max_len=30, count=10_000, seed=0)
print(f"\nBloch coverage of 10^4 random words: "
      f"{coverage_fraction(pts):.3f} of 200 equal-area cells")

# Near-X gate: pick theta* where the loop axis lies along x, then repeat
# the loop until the accumulated angle lands near pi.
theta_star = find_theta_star(0, 1)
k, dist, _ = approximate_x(theta_star, 0, 1, max_reps=200)
print(f"theta* = {theta_star:.6f}: {k} repetitions approximate X "
      f"to distance {dist:.4f}")
