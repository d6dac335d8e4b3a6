import pytest

from unibranch.selftest import coprime_pairs


@pytest.fixture(scope="session")
def small_pairs():
    return coprime_pairs(7, 17)
