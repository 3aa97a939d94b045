from __future__ import annotations

from itertools import product
from math import comb, sqrt

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from darkholonomy import (
    BasisState,
    SectorConfig,
    apply_ladder,
    bilinear,
    dicke_vector,
    enumerate_basis,
    operator_string,
)


def brute_force_states(n: int, p: int) -> set[BasisState]:
    """Independent enumeration: scan all tuples and keep the admissible ones."""
    out = set()
    q = n - p
    for occ in product(range(p + 1), range(p + 1), range(q + 1), range(q + 1), range(p + 1)):
        s = BasisState(*occ)
        if s.n_a1 + s.n_a2 > p or s.n_b1 + s.n_b2 > q:
            continue
        if s.n_a1 + s.n_a2 + s.n_b1 + s.n_b2 + s.n_c != p:
            continue
        out.add(s)
    return out


@pytest.mark.parametrize("n,p", [(2, 1), (3, 2), (4, 2), (5, 2), (5, 3), (6, 4)])
def test_enumeration_matches_brute_force(n, p):
    basis = enumerate_basis(SectorConfig(n, p))
    assert set(basis.states) == brute_force_states(n, p)
    assert list(basis.states) == sorted(basis.states)
    assert all(basis.index[s] == i for i, s in enumerate(basis.states))


def test_sector_42_dimension():
    assert enumerate_basis(SectorConfig(4, 2)).dim == 15


def test_sector_config_validation():
    with pytest.raises(ValueError):
        SectorConfig(1, 1)
    with pytest.raises(ValueError):
        SectorConfig(4, 0)
    with pytest.raises(ValueError):
        SectorConfig(4, 5)


def test_derived_occupations(basis42):
    for s in basis42.states:
        occ = basis42.occupations(s)
        assert occ["a0"] + occ["a1"] + occ["a2"] == 2
        assert occ["b0"] + occ["b1"] + occ["b2"] == 2
        assert occ["a1"] + occ["a2"] + occ["b1"] + occ["b2"] + occ["c"] == 2
        assert all(v >= 0 for v in occ.values())


def test_apply_ladder_amplitudes():
    occ = {"a0": 1, "a1": 2, "a2": 0, "b0": 2, "b1": 0, "b2": 0, "c": 1}
    amp, out = apply_ladder(occ, "a1", "lower")
    assert amp == pytest.approx(sqrt(2))
    assert out["a1"] == 1
    amp, out = apply_ladder(occ, "a1", "raise")
    assert amp == pytest.approx(sqrt(3))
    assert out["a1"] == 3
    amp, _ = apply_ladder(occ, "a2", "lower")
    assert amp == 0.0
    with pytest.raises(ValueError):
        apply_ladder(occ, "q7", "raise")
    with pytest.raises(ValueError):
        apply_ladder(occ, "a1", "sideways")


def test_operator_string_rejects_non_conserving(basis42):
    with pytest.raises(ValueError):
        operator_string(basis42, [("a1", "raise")])
    with pytest.raises(ValueError):
        operator_string(basis42, [("a1", "raise"), ("b1", "lower")])
    with pytest.raises(ValueError):
        operator_string(basis42, [("a0", "raise"), ("a1", "lower")])


def test_bilinear_adjoint_pairs(basis42):
    M = bilinear(basis42, "a2", "a1")
    Mt = bilinear(basis42, "a1", "a2")
    assert np.allclose(M.conj().T, Mt)


def test_bilinear_against_manual_matrix_elements(basis42):
    """Oracle: <i| a2+ a1 |j> = sqrt((n_a2+1) n_a1) between the matching states."""
    M = bilinear(basis42, "a2", "a1")
    for j, s in enumerate(basis42.states):
        col = M[:, j]
        if s.n_a1 == 0:
            assert np.allclose(col, 0)
            continue
        t = BasisState(s.n_a1 - 1, s.n_a2 + 1, s.n_b1, s.n_b2, s.n_c)
        i = basis42.index[t]
        expected = np.zeros(basis42.dim)
        expected[i] = sqrt((s.n_a2 + 1) * s.n_a1)
        assert np.allclose(col, expected)


@settings(max_examples=30, deadline=None)
@given(mode=st.sampled_from(["a1", "a2", "b1", "b2", "c"]))
def test_number_operator_is_diagonal_occupation(mode):
    basis = enumerate_basis(SectorConfig(4, 2))
    N = operator_string(basis, [(mode, "raise"), (mode, "lower")])
    diag = [basis.occupations(s)[mode] for s in basis.states]
    assert np.allclose(N, np.diag(diag))


def test_dicke_vector_42_amplitudes(basis42):
    v = dicke_vector(SectorConfig(4, 2), basis42)
    expected = np.zeros(basis42.dim)
    for k in range(3):
        expected[basis42.index[BasisState(k, 0, 2 - k, 0, 0)]] = sqrt(
            comb(2, k) * comb(2, 2 - k)
        )
    expected /= np.linalg.norm(expected)
    assert np.allclose(v, expected)
    # the (1, 2, 1) amplitude pattern over k = 0, 1, 2
    amps = [abs(v[basis42.index[BasisState(k, 0, 2 - k, 0, 0)]]) for k in range(3)]
    assert np.allclose(np.array(amps) * sqrt(6), [1, 2, 1])


@pytest.mark.parametrize("n,p", [(3, 2), (5, 3), (6, 2)])
def test_dicke_vector_is_normalized(n, p):
    v = dicke_vector(SectorConfig(n, p))
    assert np.linalg.norm(v) == pytest.approx(1.0)
