"""Shared fixtures; verifier instances are expensive, so build each once."""

import pytest

from pseries import Verifier, parse_ring_spec

# the five (ring, n) pairs every theorem check must cover
STANDARD_PAIRS = [
    ("GF(2,1)", 2),
    ("GF(3,1)", 2),
    ("Z/4", 2),
    ("GF(2,1)", 3),
    ("Z/6", 2),
]

_cache = {}


@pytest.fixture(scope="session")
def vget():
    """Factory returning a cached Verifier for (spec, n, seed)."""

    def get(spec, n, seed=0):
        key = (spec, n, seed)
        if key not in _cache:
            _cache[key] = Verifier(parse_ring_spec(spec), n, seed=seed)
        return _cache[key]

    return get
