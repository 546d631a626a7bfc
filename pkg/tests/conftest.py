"""Shared fixtures: catalog graphs and small exhaustive corpora.

The corpus builders are cached inside the library, so requesting the same
corpus from several test modules costs one enumeration per session.
"""

from __future__ import annotations

import pytest

from hcolor.catalog import catalog
from hcolor.corpus import cubic_multigraph_corpus


@pytest.fixture(scope="session")
def p10():
    return catalog("P10")


@pytest.fixture(scope="session")
def s10():
    return catalog("S10")


@pytest.fixture(scope="session")
def s12():
    return catalog("S12")


@pytest.fixture(scope="session")
def p12():
    return catalog("P12")


@pytest.fixture(scope="session")
def s16():
    return catalog("S16")


@pytest.fixture(scope="session")
def k4():
    return catalog("K4")


@pytest.fixture(scope="session")
def theta():
    return catalog("THETA")


@pytest.fixture(scope="session")
def corpus6():
    return cubic_multigraph_corpus(6)


@pytest.fixture(scope="session")
def corpus8():
    return cubic_multigraph_corpus(8)


@pytest.fixture(scope="session")
def corpus10():
    return cubic_multigraph_corpus(10)


@pytest.fixture(scope="session")
def bridgeless10():
    return cubic_multigraph_corpus(10, bridgeless=True)
