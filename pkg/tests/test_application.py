from __future__ import annotations

import numpy as np
import pytest

from darkholonomy import (
    ControlParams,
    EStateSpec,
    ModelConfig,
    SectorConfig,
    apply_holonomy,
    baseline_ramp_fidelity,
    build_e_state,
    build_h,
    dicke_fidelity,
    dicke_vector,
    enumerate_basis,
    initial_product_state,
)
from darkholonomy.fock import BasisState

from conftest import random_params


def test_e_state_is_exact_null_state(config42, basis42):
    rng = np.random.default_rng(6)
    for _ in range(10):
        params = random_params(rng)
        g = float(rng.uniform(0.5, 30.0))
        config = ModelConfig(sector=config42.sector, g=g)
        E = build_e_state(EStateSpec(config=config, params=params), basis42)
        H = build_h(config, params, basis42)
        assert np.linalg.norm(H @ E) <= 1e-10 * np.linalg.norm(E) * max(
            g, params.omega
        )


def test_e_state_generic_sector():
    config = ModelConfig(sector=SectorConfig(5, 3), g=7.0)
    basis = enumerate_basis(config.sector)
    params = ControlParams(omega=1.0, theta=0.6, phi_a=0.2, phi_b=1.0)
    E = build_e_state(EStateSpec(config=config, params=params), basis)
    H = build_h(config, params, basis)
    assert np.linalg.norm(H @ E) <= 1e-10 * np.linalg.norm(E) * config.g


def test_e_state_zero_photon_projection_pattern(config42, basis42):
    """At equal amplitudes the photonless part carries the (1, 2, 1) weights."""
    params = ControlParams(omega=1.0, theta=np.pi / 4)
    E = build_e_state(EStateSpec(config=config42, params=params), basis42)
    amps = [
        E[basis42.index[BasisState(k, 0, 2 - k, 0, 0)]] for k in range(3)
    ]
    assert amps[1] / amps[0] == pytest.approx(2.0)
    assert amps[2] / amps[0] == pytest.approx(1.0)


def test_e_state_zeno_limit_identification(basis42):
    params = ControlParams(omega=1.0, theta=np.pi / 4)
    target = dicke_vector(SectorConfig(4, 2), basis42)
    overlaps = []
    for g in (5.0, 10.0, 20.0, 40.0):
        config = ModelConfig(sector=SectorConfig(4, 2), g=g)
        E = build_e_state(EStateSpec(config=config, params=params), basis42)
        overlaps.append(abs(np.vdot(target, E / np.linalg.norm(E))) ** 2)
    assert all(b > a for a, b in zip(overlaps, overlaps[1:]))
    assert overlaps[-1] > 0.999


def test_dicke_fidelity_bounds(config42, basis42):
    target = dicke_vector(config42.sector, basis42)
    assert dicke_fidelity(target, config42, basis42) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        dicke_fidelity(np.zeros(basis42.dim), config42, basis42)


def test_initial_product_state(basis42):
    psi = initial_product_state(basis42)
    assert np.linalg.norm(psi) == pytest.approx(1.0)
    assert psi[basis42.index[BasisState(2, 0, 0, 0, 0)]] == 1.0


def test_prepare_dicke_holonomic_fidelity(dicke_prep, config42):
    result, fidelity = dicke_prep
    assert fidelity >= 0.98
    assert np.linalg.norm(result.U.conj().T @ result.U - np.eye(2)) < 1e-10
    baseline = baseline_ramp_fidelity(config42)
    assert baseline < fidelity


def test_apply_holonomy_preserves_norm(dicke_prep, basis42):
    result, _ = dicke_prep
    psi = initial_product_state(basis42)
    out = apply_holonomy(result, psi)
    assert np.linalg.norm(out) == pytest.approx(1.0, abs=1e-10)
