from __future__ import annotations

import numpy as np
import pytest

from darkholonomy import (
    ModelConfig,
    SectorConfig,
    enumerate_basis,
    prepare_dicke_holonomic,
)


@pytest.fixture(scope="session")
def basis42():
    return enumerate_basis(SectorConfig(4, 2))


@pytest.fixture(scope="session")
def config42():
    return ModelConfig(sector=SectorConfig(4, 2), g=20.0)


@pytest.fixture(scope="session")
def dicke_prep(config42):
    """Transported preparation holonomy and its fidelity (expensive; shared)."""
    result, fidelity = prepare_dicke_holonomic(config42)
    return result, fidelity


def random_params(rng: np.random.Generator):
    from darkholonomy import ControlParams

    return ControlParams(
        omega=float(rng.uniform(0.5, 2.0)),
        theta=float(rng.uniform(0.1, np.pi / 2 - 0.1)),
        phi_a=float(rng.uniform(0, 2 * np.pi)),
        phi_b=float(rng.uniform(0, 2 * np.pi)),
    )
