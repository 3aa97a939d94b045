"""SU(2) utilities and gate-synthesis experiments on the dark pair.

The dark pair is treated as a qubit with the first gauge vector at the
Bloch north pole.  Universality is probed by random words in two phase-loop
holonomies; Pauli X is approached by repeating a loop sequence tuned to an
x-axis rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import pi

import numpy as np
from scipy.optimize import brentq

from .holonomy import closed_form_phi, compose_w, proj_distance
from .subspace import sigma_x, sigma_y, sigma_z

_PAULIS = (sigma_x, sigma_y, sigma_z)
pauli_x = sigma_x
pauli_z = sigma_z


@dataclass(frozen=True)
class AxisAngle:
    """Rotation axis, angle and global phase of a 2x2 unitary."""

    axis: np.ndarray  # unit 3-vector
    angle: float  # in [0, 2*pi)
    global_phase: float

    def reconstruct(self) -> np.ndarray:
        n = self.axis
        ns = n[0] * sigma_x + n[1] * sigma_y + n[2] * sigma_z
        half = self.angle / 2
        return np.exp(1j * self.global_phase) * (
            np.cos(half) * np.eye(2) - 1j * np.sin(half) * ns
        )


def axis_angle(U: np.ndarray) -> AxisAngle:
    """Canonical axis-angle decomposition; the zero rotation gets axis z."""
    U = np.asarray(U, dtype=complex)
    if U.shape != (2, 2) or np.linalg.norm(U.conj().T @ U - np.eye(2)) > 1e-10:
        raise ValueError("input must be a 2x2 unitary")
    phase = np.angle(np.linalg.det(U)) / 2
    V = np.exp(-1j * phase) * U  # now in SU(2)
    c = np.clip(np.real(np.trace(V)) / 2, -1.0, 1.0)
    angle = 2 * np.arccos(c)
    s = np.sin(angle / 2)
    if s < 1e-12:
        return AxisAngle(axis=np.array([0.0, 0.0, 1.0]), angle=0.0, global_phase=phase)
    n = np.array([np.imag(np.trace(p @ V)) / (-2 * s) for p in _PAULIS])
    n /= np.linalg.norm(n)
    return AxisAngle(axis=n, angle=float(angle), global_phase=float(phase))


def bloch_point(state: np.ndarray) -> np.ndarray:
    """Bloch coordinates of a normalized dark-pair amplitude vector."""
    v = np.asarray(state, dtype=complex)
    v = v / np.linalg.norm(v)
    return np.array([np.real(v.conj() @ p @ v) for p in _PAULIS])


def default_generators() -> tuple[np.ndarray, np.ndarray]:
    """The two phase-loop holonomies used for the dense-fill experiment."""
    return closed_form_phi(1, 0, pi / 6).U, closed_form_phi(0, -1, pi / 6).U


def universality_sample(
    U1: np.ndarray | None = None,
    U2: np.ndarray | None = None,
    max_len: int = 30,
    count: int = 10_000,
    seed: int = 0,
) -> np.ndarray:
    """Bloch points of random generator words applied to the north pole.

    Word lengths are uniform in [1, max_len]; each letter is an i.i.d.
    uniform choice of the two generators.  Returns an array of shape
    (count, 4): columns x, y, z, word length.
    """
    if count < 1:
        raise ValueError("count must be >= 1")
    if U1 is None or U2 is None:
        G1, G2 = default_generators()
        U1 = G1 if U1 is None else U1
        U2 = G2 if U2 is None else U2
    rng = np.random.default_rng(seed)
    north = np.array([1.0, 0.0], dtype=complex)
    out = np.empty((count, 4))
    gens = (np.asarray(U1, dtype=complex), np.asarray(U2, dtype=complex))
    for i in range(count):
        length = int(rng.integers(1, max_len + 1))
        psi = north
        for choice in rng.integers(0, 2, size=length):
            psi = gens[choice] @ psi
        out[i, :3] = bloch_point(psi)
        out[i, 3] = length
    return out


def equal_area_cells(points: np.ndarray, n_rings: int = 10, n_sectors: int = 20) -> set:
    """Indices of occupied cells of an equal-area sphere partition.

    Rings of equal height in z (hence equal area), each split into equal
    azimuthal sectors; n_rings * n_sectors cells in total.
    """
    pts = np.asarray(points)[:, :3]
    z = np.clip(pts[:, 2], -1.0, 1.0)
    ring = np.minimum(((z + 1.0) / 2.0 * n_rings).astype(int), n_rings - 1)
    az = np.mod(np.arctan2(pts[:, 1], pts[:, 0]), 2 * pi)
    sector = np.minimum((az / (2 * pi) * n_sectors).astype(int), n_sectors - 1)
    return set(zip(ring.tolist(), sector.tolist()))


def coverage_fraction(points: np.ndarray, n_rings: int = 10, n_sectors: int = 20) -> float:
    """Fraction of equal-area cells hit by the point cloud."""
    return len(equal_area_cells(points, n_rings, n_sectors)) / (n_rings * n_sectors)


def w_axis_z(m_a: int, m_b: int, theta_1: float) -> float:
    """z-component of the rotation axis of the closed-form gate sequence."""
    return float(axis_angle(compose_w(m_a, m_b, theta_1).U).axis[2])


def find_theta_star(
    m_a: int,
    m_b: int,
    lo: float = 0.02,
    hi: float = pi / 2 - 0.02,
    scan_points: int = 400,
    xtol: float = 1e-12,
) -> float:
    """Mixing angle at which the gate sequence rotates about the x-axis.

    Scans for a sign change of the axis z-component and refines it by
    bracketing root finding; raises if no bracket exists in the interval.
    """
    thetas = np.linspace(lo, hi, scan_points)
    vals = np.array([w_axis_z(m_a, m_b, t) for t in thetas])
    sign_changes = np.where(np.diff(np.sign(vals)) != 0)[0]
    for idx in sign_changes:
        a, b = thetas[idx], thetas[idx + 1]
        root = brentq(lambda t: w_axis_z(m_a, m_b, t), a, b, xtol=xtol)
        aa = axis_angle(compose_w(m_a, m_b, root).U)
        if aa.angle > 1e-6:  # skip spurious zero-rotation roots
            return float(root)
    raise ValueError(
        f"no x-axis alignment found for (m_a={m_a}, m_b={m_b}) in "
        f"theta_1 in [{lo:.4f}, {hi:.4f}]"
    )


def approximate_x(
    theta_star: float, m_a: int, m_b: int, max_reps: int = 200
) -> tuple[int, float, np.ndarray]:
    """Best repetition count of the x-rotation sequence approximating Pauli X.

    Returns (k_best, distance, distances-per-k); the rotation angle is an
    irrational multiple of 2*pi, so the distance drops below any threshold
    for large enough max_reps.
    """
    W = compose_w(m_a, m_b, theta_star).U
    dists = np.empty(max_reps)
    Uk = np.eye(2, dtype=complex)
    for k in range(1, max_reps + 1):
        Uk = W @ Uk
        dists[k - 1] = proj_distance(Uk, pauli_x)
    k_best = int(np.argmin(dists)) + 1
    return k_best, float(dists[k_best - 1]), dists
