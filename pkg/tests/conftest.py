import pytest

from icherednik.center import central_generators
from icherednik.deform import DeformationParams, pairing_from_params


@pytest.fixture(scope="session")
def spec_n1_b01():
    params = DeformationParams(n=1, characteristic=0, b=("0", "1"))
    return pairing_from_params(params), params


@pytest.fixture(scope="session")
def spec_n2_b01():
    params = DeformationParams(n=2, characteristic=0, b=("0", "1"))
    return pairing_from_params(params), params


@pytest.fixture(scope="session")
def center_n1_b01(spec_n1_b01):
    spec, params = spec_n1_b01
    return spec, params, central_generators(spec, params=params)


@pytest.fixture(scope="session")
def center_n2_b01(spec_n2_b01):
    spec, params = spec_n2_b01
    return spec, params, central_generators(spec, params=params)
