import pytest

from qha.category import VectCategory
from qha.linalg import prime_field, rationals
from qha.quiver import named_quiver
from qha.rep import RepCategory


@pytest.fixture(scope="session")
def QQ():
    return rationals()


@pytest.fixture(scope="session")
def F5():
    return prime_field(5)


@pytest.fixture(scope="session")
def vect_q(QQ):
    return VectCategory(QQ)


@pytest.fixture(scope="session")
def vect_f5(F5):
    return VectCategory(F5)


@pytest.fixture(scope="session")
def a2_q(vect_q):
    return RepCategory(named_quiver("A2"), vect_q)


@pytest.fixture(scope="session")
def a2_f5(vect_f5):
    return RepCategory(named_quiver("A2"), vect_f5)


@pytest.fixture(scope="session")
def a3_f5(vect_f5):
    return RepCategory(named_quiver("A3"), vect_f5)


@pytest.fixture(scope="session")
def a2_objects(a2_q):
    return {
        "P1": a2_q.projective_at("1"),
        "P2": a2_q.projective_at("2"),
        "S1": a2_q.simple_at("1"),
        "S2": a2_q.simple_at("2"),
        "I1": a2_q.injective_at("1"),
        "I2": a2_q.injective_at("2"),
    }
