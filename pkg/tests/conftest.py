"""Session-scoped fixtures: the matrix catalog and everything derived from it
are built once and shared read-only across all test modules."""

import pytest

from g2kit.repbuilder import build_catalog
from g2kit.tensors import build_derived_matrices, extract_tensors


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()


@pytest.fixture(scope="session")
def store(catalog):
    return extract_tensors(catalog)


@pytest.fixture(scope="session")
def derived(store):
    return build_derived_matrices(store)
