"""Zeno subspace extraction, the off-diagonal drive block, and dark states.

The Zeno subspace is the null space of the cavity term, pruned of the one
direction that the drive never connects to anything.  Within it the drive
Hamiltonian is block-off-diagonal in the excited-level parity, and its null
space is the degenerate dark subspace used for holonomic manipulation.
For (n, p) = (4, 2) the dark states are available in closed form and fix
the gauge used by all closed-form holonomies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import sqrt

import numpy as np

from .fock import BasisState, SectorBasis, SectorConfig, enumerate_basis
from .model import ControlParams, ModelConfig, build_hg, build_homega, build_parity

NULL_TOL = 1e-10
_DECOUPLE_DRAWS = 5
_DECOUPLE_SEED = 20240

sigma_x = np.array([[0, 1], [1, 0]], dtype=complex)
sigma_y = np.array([[0, -1j], [1j, 0]], dtype=complex)
sigma_z = np.array([[1, 0], [0, -1]], dtype=complex)


@dataclass(frozen=True)
class Frame:
    """Ordered orthonormal columns spanning a subspace of a sector."""

    columns: np.ndarray  # shape (dim, k)
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        cols = np.asarray(self.columns, dtype=complex)
        object.__setattr__(self, "columns", cols)
        k = cols.shape[1]
        if k and np.linalg.norm(cols.conj().T @ cols - np.eye(k)) > 1e-10:
            raise ValueError("frame columns are not orthonormal")

    @property
    def dim(self) -> int:
        return self.columns.shape[1]

    def projector(self) -> np.ndarray:
        return self.columns @ self.columns.conj().T


@dataclass(frozen=True)
class EffectiveBlock:
    """Off-diagonal block D of the Zeno-projected drive in the parity basis."""

    matrix: np.ndarray  # shape (n_odd, n_even)
    even_frame: Frame
    odd_frame: Frame


def null_space(M: np.ndarray, tol: float = NULL_TOL) -> Frame:
    """Orthonormal frame for the numerical null space, by SVD thresholding.

    Singular values below tol times the largest count as zero.
    """
    M = np.atleast_2d(np.asarray(M, dtype=complex))
    _, s, vh = np.linalg.svd(M)
    if s.size == 0 or s[0] == 0.0:
        k = M.shape[1]
    else:
        k = int(np.sum(s <= tol * s[0]))
        k += M.shape[1] - s.size  # columns beyond the rank bound
    if k == 0:
        return Frame(np.zeros((M.shape[1], 0), dtype=complex))
    return Frame(vh[vh.shape[0] - k :].conj().T)


def zeta_states(basis: SectorBasis) -> np.ndarray:
    """The six reference basis vectors of the (4, 2) Zeno subspace, as columns."""
    if (basis.config.n, basis.config.p) != (4, 2):
        raise ValueError("zeta states are defined for (n, p) = (4, 2) only")

    def vec(*terms):
        v = np.zeros(basis.dim, dtype=complex)
        for coeff, occ in terms:
            v[basis.index[BasisState(*occ)]] = coeff
        return v / np.linalg.norm(v)

    cols = [
        vec((1, (0, 0, 2, 0, 0))),
        vec((1, (1, 0, 1, 0, 0))),
        vec((1, (2, 0, 0, 0, 0))),
        vec((1, (0, 0, 0, 2, 0)), (-1, (0, 1, 0, 1, 0)), (1, (0, 2, 0, 0, 0))),
        vec((1, (0, 1, 1, 0, 0)), (-sqrt(2), (0, 0, 1, 1, 0))),
        vec((1, (1, 0, 0, 1, 0)), (-sqrt(2), (1, 1, 0, 0, 0))),
    ]
    return np.column_stack(cols)


def drop_decoupled(
    frame: Frame,
    config: ModelConfig,
    basis: SectorBasis,
    draws: int = _DECOUPLE_DRAWS,
    seed: int = _DECOUPLE_SEED,
) -> Frame:
    """Remove directions the projected drive never couples to anything.

    A direction is decoupled when the Zeno-projected drive has vanishing row
    and column at it for every one of several random parameter draws; the
    common null space over the draws isolates exactly those directions.
    """
    if frame.dim == 0:
        return frame
    rng = np.random.default_rng(seed)
    Z = frame.columns
    stacked = []
    for _ in range(draws):
        params = ControlParams(
            omega=1.0,
            theta=rng.uniform(0.1, np.pi / 2 - 0.1),
            phi_a=rng.uniform(0, 2 * np.pi),
            phi_b=rng.uniform(0, 2 * np.pi),
        )
        stacked.append(Z.conj().T @ build_homega(config, params, basis) @ Z)
    common = null_space(np.vstack(stacked))
    if common.dim == 0:
        return frame
    decoupled = Z @ common.columns
    # orthogonal complement of the decoupled directions within the frame
    comp = null_space(common.columns.conj().T)
    kept = Z @ comp.columns
    return Frame(kept, meta={"removed": decoupled.shape[1], "decoupled": decoupled})


def zeno_frame(
    config: ModelConfig, basis: SectorBasis | None = None, prune: bool = True
) -> Frame:
    """Null space of the cavity term, with decoupled directions removed.

    For (4, 2) the result spans the same subspace as the six reference
    zeta vectors, and is returned in that gauge.
    """
    if basis is None:
        basis = enumerate_basis(config.sector)
    raw = null_space(build_hg(config, basis))
    if not prune:
        return raw
    pruned = drop_decoupled(raw, config, basis)
    if (config.sector.n, config.sector.p) == (4, 2):
        zetas = zeta_states(basis)
        # sanity: the zeta gauge must span the pruned subspace
        overlap = pruned.columns.conj().T @ zetas
        if pruned.dim == zetas.shape[1] and np.allclose(
            overlap.conj().T @ overlap, np.eye(zetas.shape[1]), atol=1e-8
        ):
            return Frame(zetas, meta=dict(pruned.meta, gauge="zeta"))
    return pruned


def _parity_split(frame: Frame, basis: SectorBasis) -> tuple[Frame, Frame]:
    """Split a parity-invariant frame into even and odd subframes."""
    Z = frame.columns
    P = Z.conj().T @ build_parity(basis) @ Z
    evals, evecs = np.linalg.eigh(P)
    even = Z @ evecs[:, evals > 0]
    odd = Z @ evecs[:, evals < 0]
    return Frame(even), Frame(odd)


def effective_block(
    config: ModelConfig, params: ControlParams, basis: SectorBasis | None = None
) -> EffectiveBlock:
    """Off-diagonal block of the Zeno-projected drive in the parity ordering.

    For (4, 2) the even/odd frames are the reference zeta vectors, so the
    entries are directly comparable to the printed 2x4 block.
    """
    if basis is None:
        basis = enumerate_basis(config.sector)
    frame = zeno_frame(config, basis)
    if frame.meta.get("gauge") == "zeta":
        even = Frame(frame.columns[:, :4])
        odd = Frame(frame.columns[:, 4:])
    else:
        even, odd = _parity_split(frame, basis)
    H = build_homega(config, params, basis)
    D = odd.columns.conj().T @ H @ even.columns
    return EffectiveBlock(matrix=D, even_frame=even, odd_frame=odd)


def dark_coefficients_42(params: ControlParams) -> tuple[np.ndarray, np.ndarray]:
    """Unnormalized closed-form dark vectors for (4, 2), over the zeta basis."""
    wa, wb = params.omega_a, params.omega_b
    A, B = abs(wa) ** 2, abs(wb) ** 2
    d1 = np.array([wa**2, 2 * wa * wb, wb**2, 0, 0, 0], dtype=complex)
    d2 = np.array(
        [
            sqrt(3) * np.conj(wb) ** 2 * (3 * A + B),
            -2 * sqrt(3) * np.conj(wa) * np.conj(wb) * (A + B),
            sqrt(3) * np.conj(wa) ** 2 * (A + 3 * B),
            -2 * (A**2 + 4 * A * B + B**2),
            0,
            0,
        ],
        dtype=complex,
    )
    return d1, d2


def dark_frame(
    config: ModelConfig,
    params: ControlParams,
    basis: SectorBasis | None = None,
    zeno: Frame | None = None,
) -> Frame:
    """Orthonormal frame for the dark subspace at the given parameters.

    For (4, 2) the frame is gauge-fixed to the normalized closed-form pair;
    otherwise it is the SVD null space of the projected drive.  The meta
    field records the numerically detected dimension, which can exceed the
    generic value at the theta = 0 or pi/2 corners.
    """
    if basis is None:
        basis = enumerate_basis(config.sector)
    if zeno is None:
        zeno = zeno_frame(config, basis)
    Z = zeno.columns
    Hp = Z.conj().T @ build_homega(config, params, basis) @ Z
    numeric = null_space(Hp)
    meta = {"dimension": numeric.dim}
    if (config.sector.n, config.sector.p) == (4, 2) and zeno.meta.get("gauge") == "zeta":
        d1, d2 = dark_coefficients_42(params)
        cols = np.column_stack(
            [d1 / np.linalg.norm(d1), d2 / np.linalg.norm(d2)]
        )
        return Frame(Z @ cols, meta=dict(meta, gauge="closed-form"))
    return Frame(Z @ numeric.columns, meta=meta)


def degeneracy_scan(n_max: int, p_max: int | None = None, seed: int = 7) -> list[tuple[int, int, int]]:
    """Zero-energy degeneracy of the Zeno-projected drive, per (n, p).

    Reported within the full cavity-term null space, before any decoupled
    direction is excluded: that is the symmetry-protected count the parity
    anti-commutation argument bounds from below, and it is >= 2 whenever
    p > 1.
    """
    if n_max > 7:
        raise ValueError("scan limited to n <= 7")
    rng = np.random.default_rng(seed)
    rows = []
    for n in range(2, n_max + 1):
        for p in range(1, min(n, p_max or n) + 1):
            config = ModelConfig(sector=SectorConfig(n, p), g=1.0)
            basis = enumerate_basis(config.sector)
            params = ControlParams(
                omega=1.0,
                theta=rng.uniform(0.2, np.pi / 2 - 0.2),
                phi_a=rng.uniform(0, 2 * np.pi),
                phi_b=rng.uniform(0, 2 * np.pi),
            )
            raw = null_space(build_hg(config, basis))
            Z = raw.columns
            dim = null_space(Z.conj().T @ build_homega(config, params, basis) @ Z).dim
            rows.append((n, p, dim))
    return rows
