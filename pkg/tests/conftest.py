import pytest

from ringprops.finring import make_cyclic_ring, matrix_ring, triangular_ring
from ringprops.harness.corpus import generate_corpus


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus()


@pytest.fixture(scope="session")
def Z():
    return {n: make_cyclic_ring(n) for n in range(1, 13)}


@pytest.fixture(scope="session")
def T2Z2(Z):
    return triangular_ring(Z[2], 2)


@pytest.fixture(scope="session")
def M2Z2(Z):
    return matrix_ring(Z[2], 2)
