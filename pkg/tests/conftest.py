import logging

import normscreen as ns

import numpy as np

import pytest


@pytest.fixture(scope="session")
def set1():
    return ns.load_fixture("set1")


@pytest.fixture(scope="session")
def set2():
    return ns.load_fixture("set2")


@pytest.fixture(scope="session")
def set2_trimmed(set2):
    # 9.603 is the largest value of set 2
    return set2.without(set2.n - 1)


@pytest.fixture
def rng():
    return np.random.default_rng(20090419)


@pytest.fixture(autouse=True)
def restore_package_logger():
    # main() installs its own stderr handler and stops propagation.
    package_logger = logging.getLogger("normscreen")
    state = (
        list(package_logger.handlers),
        package_logger.level,
        package_logger.propagate,
    )
    yield
    package_logger.handlers = state[0]
    package_logger.setLevel(state[1])
    package_logger.propagate = state[2]
