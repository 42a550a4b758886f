import pytest

from beliefkit import bundled_model_path, load_model


@pytest.fixture(scope="session")
def example1():
    return load_model(bundled_model_path("example1"))


@pytest.fixture(scope="session")
def example2():
    return load_model(bundled_model_path("example2"))


@pytest.fixture(scope="session")
def example1_path():
    return str(bundled_model_path("example1"))


@pytest.fixture(scope="session")
def example2_path():
    return str(bundled_model_path("example2"))
