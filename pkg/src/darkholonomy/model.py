"""Cavity-coupling and drive Hamiltonians plus the model's symmetry operators."""

from __future__ import annotations

from dataclasses import dataclass
from math import cos, sin

import numpy as np

from .fock import SectorBasis, SectorConfig, bilinear, operator_string


@dataclass(frozen=True)
class ControlParams:
    """Drive parametrization: Omega_a = Omega sin(theta) e^{i phi_a},
    Omega_b = Omega cos(theta) e^{i phi_b}."""

    omega: float = 1.0
    theta: float = 0.0
    phi_a: float = 0.0
    phi_b: float = 0.0

    def __post_init__(self):
        if self.omega < 0:
            raise ValueError(f"omega must be >= 0, got {self.omega}")

    @property
    def omega_a(self) -> complex:
        return self.omega * sin(self.theta) * np.exp(1j * self.phi_a)

    @property
    def omega_b(self) -> complex:
        return self.omega * cos(self.theta) * np.exp(1j * self.phi_b)


@dataclass(frozen=True)
class ModelConfig:
    """Sector plus cavity coupling g (in units of the Rabi scale Omega)."""

    sector: SectorConfig
    g: float = 20.0

    def __post_init__(self):
        if self.g <= 0:
            raise ValueError(f"g must be > 0, got {self.g}")


def _check_basis(config: ModelConfig, basis: SectorBasis) -> None:
    if basis.config != config.sector:
        raise ValueError(
            f"basis sector {basis.config} does not match model sector {config.sector}"
        )


def build_hg(config: ModelConfig, basis: SectorBasis) -> np.ndarray:
    """Cavity term g (a2^dag a0 + b2^dag b0) c + h.c."""
    _check_basis(config, basis)
    t = operator_string(basis, [("a2", "raise"), ("a0", "lower"), ("c", "lower")])
    t += operator_string(basis, [("b2", "raise"), ("b0", "lower"), ("c", "lower")])
    H = config.g * t
    return H + H.conj().T


def build_homega(
    config: ModelConfig, params: ControlParams, basis: SectorBasis
) -> np.ndarray:
    """Drive term Omega_a a2^dag a1 + Omega_b b2^dag b1 + h.c."""
    _check_basis(config, basis)
    H = params.omega_a * bilinear(basis, "a2", "a1")
    H += params.omega_b * bilinear(basis, "b2", "b1")
    return H + H.conj().T


def build_h(config: ModelConfig, params: ControlParams, basis: SectorBasis) -> np.ndarray:
    """Full Hamiltonian H = H_g + H_Omega."""
    return build_hg(config, basis) + build_homega(config, params, basis)


def build_n(basis: SectorBasis) -> np.ndarray:
    """Total excitation number (diagonal; constant = p on the sector)."""
    diag = [
        s.n_a1 + s.n_a2 + s.n_b1 + s.n_b2 + s.n_c for s in basis.states
    ]
    return np.diag(np.asarray(diag, dtype=complex))


def build_n2(basis: SectorBasis) -> np.ndarray:
    """Occupation of the excited atomic level, N2 = a2^dag a2 + b2^dag b2."""
    diag = [s.n_a2 + s.n_b2 for s in basis.states]
    return np.diag(np.asarray(diag, dtype=complex))


def build_parity(basis: SectorBasis) -> np.ndarray:
    """Even-odd parity exp(i pi N2); anticommutes with the Hamiltonian."""
    diag = [(-1.0) ** (s.n_a2 + s.n_b2) for s in basis.states]
    return np.diag(np.asarray(diag, dtype=complex))
