"""Symmetric bosonic sector basis and ladder-operator matrices.

The n atoms are split into subensemble A (p atoms, modes a0/a1/a2) and
subensemble B (n-p atoms, modes b0/b1/b2); c is the cavity mode.  We work
in the single sector where the total excitation number equals p, so a
basis state is labelled by the occupations (n_a1, n_a2, n_b1, n_b2, n_c)
with n_a0 and n_b0 fixed by the subensemble populations.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, sqrt
from typing import Iterator, NamedTuple, Sequence

import numpy as np

MODES = ("a0", "a1", "a2", "b0", "b1", "b2", "c")

# excitation number carried by one quantum in each mode
_EXCITATION = {"a0": 0, "a1": 1, "a2": 1, "b0": 0, "b1": 1, "b2": 1, "c": 1}
_GROUP = {"a0": "a", "a1": "a", "a2": "a", "b0": "b", "b1": "b", "b2": "b", "c": None}


class BasisState(NamedTuple):
    """Occupations of the excitation-carrying modes; a0/b0 are derived."""

    n_a1: int
    n_a2: int
    n_b1: int
    n_b2: int
    n_c: int


@dataclass(frozen=True)
class SectorConfig:
    """Atom number n and subensemble-A size p (= total excitation number)."""

    n: int
    p: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"need at least 2 atoms, got n={self.n}")
        if not (1 <= self.p <= self.n):
            raise ValueError(f"p must satisfy 1 <= p <= n, got p={self.p}, n={self.n}")


@dataclass(frozen=True)
class SectorBasis:
    """Deterministically ordered basis of one (n, p) sector."""

    config: SectorConfig
    states: tuple[BasisState, ...]
    index: dict[BasisState, int] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.states)

    def n_a0(self, s: BasisState) -> int:
        return self.config.p - s.n_a1 - s.n_a2

    def n_b0(self, s: BasisState) -> int:
        return (self.config.n - self.config.p) - s.n_b1 - s.n_b2

    def occupations(self, s: BasisState) -> dict[str, int]:
        """Full 7-mode occupation of a basis state."""
        return {
            "a0": self.n_a0(s),
            "a1": s.n_a1,
            "a2": s.n_a2,
            "b0": self.n_b0(s),
            "b1": s.n_b1,
            "b2": s.n_b2,
            "c": s.n_c,
        }

    def label(self, s: BasisState) -> str:
        return f"|{s.n_a1}{s.n_a2}{s.n_b1}{s.n_b2},{s.n_c}>"


def enumerate_basis(config: SectorConfig) -> SectorBasis:
    """All occupation states with fixed subensemble populations and
    excitation number p, ordered lexicographically."""
    p, q = config.p, config.n - config.p
    states = []
    for na1 in range(p + 1):
        for na2 in range(p + 1 - na1):
            for nb1 in range(q + 1):
                for nb2 in range(q + 1 - nb1):
                    nc = p - na1 - na2 - nb1 - nb2
                    if nc >= 0:
                        states.append(BasisState(na1, na2, nb1, nb2, nc))
    states.sort()
    index = {s: i for i, s in enumerate(states)}
    return SectorBasis(config=config, states=tuple(states), index=index)


def _net_transfer(ops: Sequence[tuple[str, str]]) -> tuple[int, int, int]:
    """Net (subensemble A, subensemble B, excitation) change of an operator
    string; all three must vanish for the string to map the sector to itself."""
    da = db = dn = 0
    for mode, kind in ops:
        sgn = +1 if kind == "raise" else -1
        grp = _GROUP[mode]
        if grp == "a":
            da += sgn
        elif grp == "b":
            db += sgn
        dn += sgn * _EXCITATION[mode]
    return da, db, dn


def apply_ladder(occ: dict[str, int], mode: str, kind: str) -> tuple[float, dict[str, int]]:
    """Single raising/lowering on a 7-mode occupation dict.

    Returns (amplitude, new occupations); amplitude 0 means annihilation of
    the state (lowering an empty mode).
    """
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    n = occ[mode]
    out = dict(occ)
    if kind == "lower":
        if n == 0:
            return 0.0, out
        out[mode] = n - 1
        return sqrt(n), out
    elif kind == "raise":
        out[mode] = n + 1
        return sqrt(n + 1), out
    raise ValueError(f"kind must be 'raise' or 'lower', got {kind!r}")


def operator_string(basis: SectorBasis, ops: Sequence[tuple[str, str]]) -> np.ndarray:
    """Dense matrix of a product of ladder operators, applied right to left.

    The string must conserve both subensemble populations and the total
    excitation number, so that it maps the sector onto itself.
    """
    da, db, dn = _net_transfer(ops)
    if (da, db, dn) != (0, 0, 0):
        raise ValueError(
            f"operator string {ops} does not conserve the sector "
            f"(dA={da}, dB={db}, dN={dn})"
        )
    dim = basis.dim
    M = np.zeros((dim, dim), dtype=complex)
    for j, s in enumerate(basis.states):
        occ = basis.occupations(s)
        amp = 1.0
        for mode, kind in reversed(ops):
            a, occ = apply_ladder(occ, mode, kind)
            amp *= a
            if amp == 0.0:
                break
        if amp == 0.0:
            continue
        target = BasisState(occ["a1"], occ["a2"], occ["b1"], occ["b2"], occ["c"])
        i = basis.index[target]
        M[i, j] += amp
    return M


def bilinear(basis: SectorBasis, raise_mode: str, lower_mode: str) -> np.ndarray:
    """Number-conserving bilinear raise_mode^dag * lower_mode."""
    return operator_string(basis, [(raise_mode, "raise"), (lower_mode, "lower")])


def dicke_vector(config: SectorConfig, basis: SectorBasis | None = None) -> np.ndarray:
    """Normalized bosonic image of the symmetric state with p atoms excited.

    Amplitude sqrt(C(p,k) C(n-p,p-k)) on the state with k excitations in
    subensemble A and p-k in B, no photons, no excited-level population.
    """
    if basis is None:
        basis = enumerate_basis(config)
    v = np.zeros(basis.dim, dtype=complex)
    n, p = config.n, config.p
    for k in range(p + 1):
        if p - k > n - p:
            continue
        s = BasisState(k, 0, p - k, 0, 0)
        v[basis.index[s]] = sqrt(comb(p, k) * comb(n - p, p - k))
    return v / np.linalg.norm(v)
