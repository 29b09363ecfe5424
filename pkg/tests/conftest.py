"""Shared fixtures: golden algebras and enumerated catalogs (built once per session)."""

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from enumeration import enumerate_srl_monoids  # noqa: E402
from golden_algebras import diamond, example_2, example_3, heyting_chain  # noqa: E402


@pytest.fixture(scope="session")
def ex2():
    return example_2()


@pytest.fixture(scope="session")
def ex3():
    return example_3()


@pytest.fixture(scope="session")
def dia():
    return diamond()


@pytest.fixture(scope="session")
def trivial():
    return heyting_chain(1)


@pytest.fixture(scope="session")
def golden(ex2, ex3, dia):
    return [ex2, ex3, dia]


@pytest.fixture(scope="session")
def catalog3():
    return enumerate_srl_monoids(3)


@pytest.fixture(scope="session")
def catalog4():
    return enumerate_srl_monoids(4)


def idx(s, name: str) -> int:
    return s.names.index(name)
