"""Reproducible pseudo-random pure sets for property suites and the CLI."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .kernel import EMPTY, SetHandle, make_set

__all__ = ["generate", "stream"]


def stream(seed: int, max_depth: int = 4, max_width: int = 3) -> Iterator[SetHandle]:
    """Endless deterministic stream of sets of bounded depth and width."""
    rng = random.Random(seed)

    def gen(depth: int) -> SetHandle:
        if depth <= 0:
            return EMPTY
        width = rng.randint(0, max_width)
        return make_set([gen(depth - 1) for _ in range(width)])

    while True:
        yield gen(max_depth)


def generate(seed: int, count: int, max_depth: int = 4, max_width: int = 3) -> list[SetHandle]:
    """The first `count` sets of the stream for this seed."""
    return list(itertools.islice(stream(seed, max_depth, max_width), max(count, 0)))
