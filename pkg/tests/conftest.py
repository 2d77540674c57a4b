import numpy as np
import pytest

from geam import (conical_qubit_geam, mub_bases, mums_from_mubs,
                  pauli_mub_design, two_povm_qubit_geam)


@pytest.fixture(scope="session")
def mub_design():
    return pauli_mub_design()


@pytest.fixture(scope="session")
def two_povm():
    return two_povm_qubit_geam()


@pytest.fixture(scope="session")
def conical():
    return conical_qubit_geam()


@pytest.fixture(scope="session")
def mub3():
    return mub_bases(3)


@pytest.fixture(scope="session")
def mum_d2():
    return mums_from_mubs(2, 0.6)


def random_states(dim, count, seed):
    """Mixed-rank random states, deterministic in the seed."""
    rng = np.random.default_rng(seed)
    from geam import random_density
    return [random_density(dim, i % dim + 1, rng) for i in range(count)]
