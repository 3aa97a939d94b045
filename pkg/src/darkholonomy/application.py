"""Collective-state machinery: the algebraic dark state, its Zeno-limit
identification with the symmetric p-excitation state, and the holonomic
preparation path."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, sqrt

import numpy as np

from .fock import BasisState, SectorBasis, dicke_vector, enumerate_basis
from .holonomy import HolonomyResult, transport
from .model import ControlParams, ModelConfig
from .paths import theta_ramp_program, w_prime_program

DICKE_PATH = (-24, 1, 0.669)


@dataclass(frozen=True)
class EStateSpec:
    config: ModelConfig
    params: ControlParams


def build_e_state(spec: EStateSpec, basis: SectorBasis | None = None) -> np.ndarray:
    """Unnormalized algebraic dark state, exact at any coupling.

    Expands the creation-operator polynomial
    (Omega_a a0+ - g c a1+)^p (Omega_b b0+ - g c b1+)^(n-p) (c+)^p
    on the vacuum by the binomial theorem; all photon annihilations commute
    with the atomic creations, so each (k, l) term lands on a single
    occupation state with p - k - l photons.
    """
    config = spec.config
    n, p = config.sector.n, config.sector.p
    if basis is None:
        basis = enumerate_basis(config.sector)
    wa, wb, g = spec.params.omega_a, spec.params.omega_b, config.g
    v = np.zeros(basis.dim, dtype=complex)
    for k in range(p + 1):
        for l in range(n - p + 1):
            if k + l > p:
                continue
            coeff = (
                comb(p, k)
                * comb(n - p, l)
                * wa ** (p - k)
                * wb ** (n - p - l)
                * (-g) ** (k + l)
            )
            # bosonic amplitudes: (x+)^m |0> = sqrt(m!) |m>, c^m |p> lowers
            coeff *= sqrt(
                factorial(p - k) * factorial(k) * factorial(n - p - l) * factorial(l)
            )
            coeff *= sqrt(factorial(p)) * sqrt(factorial(p) / factorial(p - k - l))
            s = BasisState(k, 0, l, 0, p - k - l)
            v[basis.index[s]] += coeff
    return v


def dicke_fidelity(
    psi: np.ndarray, config: ModelConfig, basis: SectorBasis | None = None
) -> float:
    """Squared overlap of a normalized sector state with the symmetric
    p-excitation target."""
    if basis is None:
        basis = enumerate_basis(config.sector)
    psi = np.asarray(psi, dtype=complex)
    norm = np.linalg.norm(psi)
    if norm < 1e-14:
        raise ValueError("zero-norm state")
    target = dicke_vector(config.sector, basis)
    return float(abs(np.vdot(target, psi / norm)) ** 2)


def initial_product_state(basis: SectorBasis) -> np.ndarray:
    """Bosonic image of the product state with the A-subensemble excited:
    all p excitations in mode a1, no photons."""
    psi = np.zeros(basis.dim, dtype=complex)
    psi[basis.index[BasisState(basis.config.p, 0, 0, 0, 0)]] = 1.0
    return psi


def apply_holonomy(result: HolonomyResult, psi: np.ndarray) -> np.ndarray:
    """Apply a transported holonomy to a sector state in the entry dark frame."""
    if result.frame_in is None or result.frame_out is None:
        raise ValueError("holonomy result carries no endpoint frames")
    coeffs_in = result.frame_in.columns.conj().T @ psi
    return result.frame_out.columns @ (result.U @ coeffs_in)


def prepare_dicke_holonomic(
    config: ModelConfig | None = None,
    m_a: int = DICKE_PATH[0],
    m_b: int = DICKE_PATH[1],
    theta_1: float = DICKE_PATH[2],
    **transport_kwargs,
) -> tuple[HolonomyResult, float]:
    """Transport the preparation path from the fully-A-excited product state
    and report the fidelity with the symmetric target."""
    from .fock import SectorConfig

    if config is None:
        config = ModelConfig(sector=SectorConfig(4, 2), g=20.0)
    basis = enumerate_basis(config.sector)
    path = w_prime_program(m_a, m_b, theta_1)
    result = transport(path, config, basis=basis, **transport_kwargs)
    psi0 = initial_product_state(basis)
    psi = apply_holonomy(result, psi0)
    return result, dicke_fidelity(psi, config, basis)


def baseline_ramp_fidelity(config: ModelConfig | None = None, **transport_kwargs) -> float:
    """Fidelity of the pure amplitude ramp (no phase loop) from the product
    state; the reference the loop is compared against."""
    from .fock import SectorConfig

    if config is None:
        config = ModelConfig(sector=SectorConfig(4, 2), g=20.0)
    basis = enumerate_basis(config.sector)
    result = transport(theta_ramp_program(0.0, np.pi / 4), config, basis=basis, **transport_kwargs)
    psi = apply_holonomy(result, initial_product_state(basis))
    return dicke_fidelity(psi, config, basis)


def search_dicke_path(
    m_range: tuple[int, int] = (-30, 5),
    theta_grid: np.ndarray | None = None,
    top: int = 20,
) -> list[tuple[int, int, float, float]]:
    """Rank preparation paths by closed-form fidelity over a parameter grid.

    Evaluates the closed-form holonomy of every (m_a, m_b, theta_1) on the
    grid applied to the product state; returns the top entries as
    (m_a, m_b, theta_1, fidelity), deterministically ordered.
    """
    from .holonomy import compose_w_prime

    if theta_grid is None:
        theta_grid = np.linspace(0.05, np.pi / 2 - 0.05, 60)
    rows = []
    for m_a in range(m_range[0], m_range[1] + 1):
        for m_b in range(m_range[0], m_range[1] + 1):
            for theta_1 in theta_grid:
                U = compose_w_prime(m_a, m_b, float(theta_1)).U
                # product state is the first gauge vector at theta=0 and the
                # target the first at theta=pi/4, so fidelity is |U_00|^2
                fid = float(abs(U[0, 0]) ** 2)
                rows.append((m_a, m_b, float(theta_1), fid))
    rows.sort(key=lambda r: (-r[3], r[0], r[1], r[2]))
    return rows[:top]
