"""Tour of the symmetric bosonic sector and the model's symmetries.

n atoms are split into subensemble A (p atoms) and B (n - p atoms); each
atom is a three-level Lambda system and the collective, permutation-
symmetric dynamics maps onto seven bosonic modes.  Working in the sector
with total excitation number p keeps everything small: for (n, p) = (4, 2)
the basis has 15 states.
"""

import numpy as np

from darkholonomy import (
    ControlParams,
    ModelConfig,
    SectorConfig,
    build_h,
    build_n,
    build_parity,
    enumerate_basis,
)

sector = SectorConfig(4, 2)
basis = enumerate_basis(sector)
print(f"sector (n={sector.n}, p={sector.p}) has dimension {basis.dim}")
print("basis states |n_a1 n_a2 n_b1 n_b2, n_c>:")
print("  " + "  ".join(basis.label(s) for s in basis.states))

config = ModelConfig(sector=sector, g=20.0)
params = ControlParams(omega=1.0, theta=0.7, phi_a=0.3, phi_b=1.2)
H = build_h(config, params, basis)

# The excitation number commutes with H, and the excited-level parity
# anticommutes with it -- the latter forces a symmetric spectrum and, with
# unequal parity multiplicities, protected zero modes.
N = build_n(basis)
P = build_parity(basis)
print(f"\n||[N, H]||  = {np.linalg.norm(N @ H - H @ N):.2e}")
print(f"||{{P, H}}|| = {np.linalg.norm(P @ H + H @ P):.2e}")

evals = np.linalg.eigvalsh(H)
print("\nspectrum (symmetric about zero):")
print("  " + "  ".join(f"{e:+.3f}" for e in evals))
n_even = int(np.sum(np.diag(P).real > 0))
print(f"parity multiplicities: even={n_even}, odd={basis.dim - n_even}")
print(f"guaranteed zero modes >= |even - odd| = {abs(2 * n_even - basis.dim)}")
