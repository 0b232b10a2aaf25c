"""Shared fixtures: the named algebras are immutable, so build them once."""

import pytest

from cdalg import named_algebra


@pytest.fixture(scope="session")
def reals():
    return named_algebra("R")


@pytest.fixture(scope="session")
def complexes():
    return named_algebra("C")


@pytest.fixture(scope="session")
def quaternions():
    return named_algebra("H")


@pytest.fixture(scope="session")
def octonions():
    return named_algebra("O")


@pytest.fixture(scope="session")
def sedenions():
    return named_algebra("S")


@pytest.fixture(scope="session")
def twisted_octonions():
    return named_algebra("TO")


@pytest.fixture(scope="session")
def twisted_sedenions():
    return named_algebra("TS")
