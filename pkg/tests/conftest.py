import pytest

from froblab.taft import build_taft


@pytest.fixture(scope="session")
def taft():
    cache = {}

    def get(p):
        if p not in cache:
            cache[p] = build_taft(p)
        return cache[p]
    return get
