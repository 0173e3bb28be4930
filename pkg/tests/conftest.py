import random

import pytest

from qact import DeformationParameter, Scalar, default_model, validate_q


@pytest.fixture(scope="session")
def q2() -> DeformationParameter:
    return validate_q(2)


@pytest.fixture(scope="session")
def q3() -> DeformationParameter:
    return validate_q(3)


@pytest.fixture(scope="session")
def qc() -> DeformationParameter:
    """The complex sample point q = 1 + i."""
    return validate_q(Scalar(1, 1))


@pytest.fixture(scope="session")
def model():
    return default_model()


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0xC1340)
