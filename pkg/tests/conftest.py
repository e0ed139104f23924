"""Shared fixtures: deterministic seeded corpora and derived samples."""
from __future__ import annotations

import random

import pytest

from conset import constituents
from conset.corpus import generate


@pytest.fixture(scope="session")
def corpus200():
    """200 pseudo-random sets, nesting depth at most 4."""
    return generate(101, 200, max_depth=4)


@pytest.fixture(scope="session")
def corpus1000():
    """1000 pseudo-random sets, nesting depth at most 5."""
    return generate(7, 1000, max_depth=5)


@pytest.fixture(scope="session")
def triples1000(corpus1000):
    """1000 deterministic (x, y, z) triples for replacement laws.

    Half the y values are drawn from the constituents of x so that
    replacements actually fire; the rest are unrelated corpus members.
    """
    rng = random.Random(42)
    triples = []
    n = len(corpus1000)
    for i, x in enumerate(corpus1000):
        if rng.random() < 0.5:
            y = rng.choice(constituents(x))
        else:
            y = corpus1000[rng.randrange(n)]
        z = corpus1000[rng.randrange(n)]
        triples.append((x, y, z))
    return triples


@pytest.fixture(scope="session")
def pairs500(corpus1000):
    """500 deterministic (a, b) pairs."""
    return list(zip(corpus1000[:500], corpus1000[500:]))
