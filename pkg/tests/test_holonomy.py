from __future__ import annotations

from math import atan, pi, sqrt

import numpy as np
import pytest

from darkholonomy import (
    HolonomyResult,
    PathProgram,
    PhiLoop,
    ThetaRamp,
    c_y,
    closed_form_phi,
    closed_form_program,
    closed_form_theta,
    compose_w,
    parse_path,
    phi_loop_coefficients,
    proj_distance,
    transport,
)
from darkholonomy.gates import pauli_z


def test_c_y_reference_values():
    # cos(4 theta) = -1 at theta = pi/4 gives -arctan(2)
    assert c_y(pi / 4) == pytest.approx(-atan(2.0))
    # theta = 0: -arctan(sqrt(14/6))
    assert c_y(0.0) == pytest.approx(-atan(sqrt(14.0 / 6.0)))
    # symmetric under theta -> pi/2 - theta (depends only on cos 4 theta)
    for t in (0.1, 0.4, 0.7):
        assert c_y(t) == pytest.approx(c_y(pi / 2 - t))


def test_phi_loop_coefficients_winding_structure():
    # c_x is odd under swapping the windings, c_z has a symmetric part
    cx1, _ = phi_loop_coefficients(2, -1, 0.5)
    cx2, _ = phi_loop_coefficients(-1, 2, 0.5)
    assert cx1 == pytest.approx(-cx2)
    # equal windings give a pure z rotation
    cx, cz = phi_loop_coefficients(3, 3, 0.5)
    assert cx == pytest.approx(0.0)
    assert cz != 0.0


def test_holonomy_result_requires_unitary():
    with pytest.raises(ValueError):
        HolonomyResult(U=np.array([[1.0, 0.0], [0.0, 2.0]]))


def test_proj_distance_phase_invariance():
    rng = np.random.default_rng(1)
    q, _ = np.linalg.qr(rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)))
    assert proj_distance(q, np.exp(1.3j) * q) == pytest.approx(0.0, abs=1e-12)
    assert proj_distance(np.eye(2), pauli_z) == pytest.approx(2.0)


def test_closed_form_identity_cases():
    U = closed_form_theta(0.3, 0.3).U
    assert np.allclose(U, np.eye(2))
    U = closed_form_phi(0, 0, 0.7).U
    assert np.allclose(U, np.eye(2))


def test_closed_form_pauli_z_loop():
    U = closed_form_phi(1, 0, pi / 4).U
    assert proj_distance(U, pauli_z) < 1e-12


def test_compose_w_pauli_z():
    U = compose_w(1, 0, pi / 4).U
    assert proj_distance(U, pauli_z) < 1e-8


def test_closed_form_program_composition():
    prog = parse_path("theta:pi/4->0.5; phi:ma=1,mb=-1@theta=0.5; theta:0.5->pi/4")
    U = closed_form_program(prog).U
    expected = (
        closed_form_theta(pi / 4, 0.5).U
        @ closed_form_phi(1, -1, 0.5).U
        @ closed_form_theta(0.5, pi / 4).U
    )
    assert np.allclose(U, expected)


def test_empty_path_transport_is_identity(config42):
    res = transport(PathProgram(()), config42)
    assert np.allclose(res.U, np.eye(2))


@pytest.mark.parametrize(
    "segment",
    [
        ThetaRamp(pi / 4, pi / 3),
        ThetaRamp(0.1, 1.2),
        PhiLoop(1, 0, pi / 4),
        PhiLoop(1, -1, 0.5),
        PhiLoop(-2, 1, 0.9),
    ],
)
def test_transport_matches_closed_form(segment, config42, basis42):
    prog = PathProgram((segment,))
    res = transport(prog, config42, basis=basis42)
    U_closed = closed_form_program(prog).U
    assert proj_distance(res.U, U_closed) < 1e-6
    assert res.est_error < 1e-8
    assert res.frame_in is not None and res.frame_out is not None
    # endpoint frames are orthonormal 15x2 stacks
    assert res.frame_in.columns.shape == (15, 2)


def test_transport_reports_convergence_metadata(config42, basis42):
    res = transport(PathProgram((ThetaRamp(0.2, 0.9),)), config42, basis=basis42)
    assert res.steps_used >= 512
    assert res.est_error < 1e-8
