from __future__ import annotations

import numpy as np
import pytest

from darkholonomy import (
    ControlParams,
    Frame,
    ModelConfig,
    SectorConfig,
    build_hg,
    build_homega,
    dark_coefficients_42,
    dark_frame,
    degeneracy_scan,
    effective_block,
    enumerate_basis,
    null_space,
    zeno_frame,
    zeta_states,
)
from darkholonomy.subspace import drop_decoupled

from conftest import random_params


def test_frame_rejects_non_orthonormal():
    with pytest.raises(ValueError):
        Frame(np.array([[1.0, 1.0], [0.0, 0.0]], dtype=complex))


def test_null_space_of_constructed_matrix():
    """Oracle: build a matrix with a known kernel and recover it."""
    rng = np.random.default_rng(0)
    for _ in range(10):
        q, _ = np.linalg.qr(rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8)))
        kern, rest = q[:, :3], q[:, 3:]
        M = (rng.normal(size=(6, 5)) + 1j * rng.normal(size=(6, 5))) @ rest.conj().T
        F = null_space(M)
        assert F.dim == 3
        assert np.linalg.norm(F.projector() - kern @ kern.conj().T) < 1e-10


def test_null_space_of_zero_matrix():
    F = null_space(np.zeros((4, 4)))
    assert F.dim == 4


def test_zeta_states_are_cavity_dark(config42, basis42):
    Hg = build_hg(config42, basis42)
    Z = zeta_states(basis42)
    assert Z.shape == (15, 6)
    assert np.linalg.norm(Z.conj().T @ Z - np.eye(6)) < 1e-12
    assert np.linalg.norm(Hg @ Z) < 1e-12


def test_zeta_states_defined_only_for_42():
    with pytest.raises(ValueError):
        zeta_states(enumerate_basis(SectorConfig(5, 2)))


def test_zeno_frame_dimension_and_span(config42, basis42):
    raw = zeno_frame(config42, basis42, prune=False)
    assert raw.dim == 7
    frame = zeno_frame(config42, basis42)
    assert frame.dim == 6
    Z = zeta_states(basis42)
    assert np.linalg.norm(frame.projector() - Z @ Z.conj().T) < 1e-10
    assert frame.meta.get("gauge") == "zeta"


def test_decoupled_direction_is_drive_inert(config42, basis42):
    """The removed direction has zero drive coupling to the whole null space."""
    raw = zeno_frame(config42, basis42, prune=False)
    pruned = drop_decoupled(raw, config42, basis42)
    dec = pruned.meta["decoupled"]
    assert dec.shape[1] == 1
    rng = np.random.default_rng(8)
    for _ in range(5):
        H = build_homega(config42, random_params(rng), basis42)
        assert np.linalg.norm(raw.columns.conj().T @ H @ dec) < 1e-10


def test_effective_block_matches_reference_form(config42, basis42):
    """The 2x4 drive block over (zeta5, zeta6) x (zeta1..zeta4)."""
    rng = np.random.default_rng(21)
    s3 = np.sqrt(3)
    for _ in range(10):
        params = random_params(rng)
        wa, wb = params.omega_a, params.omega_b
        expected = np.array(
            [
                [-2 * wb / s3, wa / s3, 0, -np.conj(wb)],
                [0, wb / s3, -2 * wa / s3, -np.conj(wa)],
            ]
        )
        D = effective_block(config42, params, basis42).matrix
        assert np.abs(D - expected).max() < 1e-12


def test_dark_coefficients_orthogonal_and_dark(config42, basis42):
    rng = np.random.default_rng(33)
    for _ in range(20):
        params = random_params(rng)
        d1, d2 = dark_coefficients_42(params)
        assert abs(np.vdot(d1, d2)) < 1e-12 * np.linalg.norm(d1) * np.linalg.norm(d2)
        D = effective_block(config42, params, basis42).matrix
        # the block acts on the even coordinates (zeta1..zeta4)
        assert np.linalg.norm(D @ d1[:4]) < 1e-10 * np.linalg.norm(d1)
        assert np.linalg.norm(D @ d2[:4]) < 1e-10 * np.linalg.norm(d2)


def test_dark_frame_dimension_and_nullity(config42, basis42):
    rng = np.random.default_rng(17)
    Hg = build_hg(config42, basis42)
    frame = zeno_frame(config42, basis42)
    Z = frame.columns
    for _ in range(20):
        params = random_params(rng)
        dark = dark_frame(config42, params, basis42, zeno=frame)
        assert dark.dim == 2
        assert dark.meta["dimension"] == 2
        # dark states are annihilated by the cavity term and by the
        # Zeno-projected drive
        H = build_homega(config42, params, basis42)
        assert np.linalg.norm(Hg @ dark.columns) < 1e-10
        assert np.linalg.norm(Z.conj().T @ H @ dark.columns) < 1e-10


def test_dark_frame_generic_sector():
    config = ModelConfig(sector=SectorConfig(5, 2), g=10.0)
    basis = enumerate_basis(config.sector)
    params = ControlParams(omega=1.0, theta=0.8, phi_a=0.3, phi_b=1.1)
    dark = dark_frame(config, params, basis)
    assert dark.dim >= 2


def test_degeneracy_scan_protected_counts():
    rows = degeneracy_scan(6)
    seen = {(n, p): d for n, p, d in rows}
    assert seen[(4, 2)] == 3  # two generic dark states plus the inert direction
    for (n, p), d in seen.items():
        if p > 1:
            assert d >= 2, f"(n={n}, p={p}) -> {d}"
