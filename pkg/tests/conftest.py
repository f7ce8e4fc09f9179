import pytest
from hypothesis import HealthCheck, settings

from src.basis.basis import composite_basis, parse_basis, power_basis
from src.cli import golden
from src.galois_field.field import build_field
from src.log import setup_logger

settings.register_profile(
    'xcyclic',
    derandomize=True,
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile('xcyclic')


@pytest.fixture(scope='session', autouse=True)
def quiet_logger():
    setup_logger('WARNING')


@pytest.fixture(scope='session')
def gf16():
    return build_field(2, 4)


@pytest.fixture(scope='session')
def gf32():
    return build_field(2, 5, golden.GF32_POLY)


@pytest.fixture(scope='session')
def gf64():
    return build_field(2, 6)


@pytest.fixture(scope='session')
def gf256():
    return build_field(2, 8)


@pytest.fixture(scope='session')
def gf9():
    return build_field(3, 2)


@pytest.fixture(scope='session')
def power16(gf16):
    return power_basis(gf16, 2)


@pytest.fixture(scope='session')
def composite16(gf16):
    """{1, a^5} x {1, a}: первые два элемента порождают GF(4)"""
    return composite_basis(gf16, 2, 4, gf16.elements([0, 5]), gf16.elements([0, 1]))


@pytest.fixture(scope='session')
def power32(gf32):
    return power_basis(gf32, 2)


@pytest.fixture(scope='session')
def power256(gf256):
    return power_basis(gf256, 2)


@pytest.fixture(scope='session')
def composite256(gf256):
    return parse_basis(gf256, golden.COMPOSITE_BASIS_GF256, 2)
