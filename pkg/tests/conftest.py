import pytest

import brute


@pytest.fixture(scope="session")
def brute_elements_10k():
    return brute.elements_upto(10_000)


@pytest.fixture(scope="session")
def brute_set_10k(brute_elements_10k):
    return set(brute_elements_10k)
