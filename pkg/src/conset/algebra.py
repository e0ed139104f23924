"""Replacement, composition, and the constituent orders built from them.

Replacement x(y -> z) swaps every occurrence of y inside x for z in one
simultaneous pass: occurrences are judged against the original subterms of x,
and the result is rebuilt bottom-up so merged duplicates and element order
re-canonicalize.  Composition x(y) is replacement of the empty set.
"""

from __future__ import annotations

from typing import Iterable

from .errors import (
    AmbiguousWitness,
    EmptyHasNoMaximal,
    NoneFound,
    NotABottom,
    NotUnique,
)
from .kernel import (
    EMPTY,
    SetHandle,
    constituent_set,
    constituents,
    is_constituent,
    make_set,
)

__all__ = [
    "replace",
    "compose",
    "compose_all",
    "has_bottom",
    "is_top",
    "remove_bottom",
    "remove_top",
    "maximal_elements",
    "maximal_constituents",
    "unique_maximum",
    "lcc_set",
    "lcc",
    "max_with_bottom",
    "max_with_bottom_unique",
    "with_top",
    "with_top_unique",
    "map_union",
]


def replace(x: SetHandle, y: SetHandle, z: SetHandle) -> SetHandle:
    """x with every occurrence of y replaced by z, judged on original subterms."""
    if not is_constituent(y, x):
        return x
    memo: dict[SetHandle, SetHandle] = {}

    def rec(w: SetHandle) -> SetHandle:
        if w is y:
            return z
        got = memo.get(w)
        if got is None:
            got = make_set([rec(c) for c in w.children])
            memo[w] = got
        return got

    return rec(x)


def compose(x: SetHandle, y: SetHandle) -> SetHandle:
    """x(y): plant y under x by replacing every empty-set occurrence in x."""
    return replace(x, EMPTY, y)


def compose_all(items: Iterable[SetHandle]) -> SetHandle:
    """Right-to-left composition chain; empty input gives the empty set."""
    acc = EMPTY
    for item in reversed(list(items)):
        acc = compose(item, acc)
    return acc


def has_bottom(b: SetHandle, a: SetHandle) -> bool:
    """True when a sits at the bottom of b: b(a -> {})(a) = b."""
    return compose(replace(b, a, EMPTY), a) is b


def is_top(c: SetHandle, b: SetHandle) -> bool:
    """True when c sits at the top of b: some a has c(a) = b.

    Any witness a is a constituent of b (or b itself when c is empty), so the
    search over constituent_set(b) is exhaustive.
    """
    return any(compose(c, a) is b for a in constituent_set(b))


def remove_bottom(b: SetHandle, a: SetHandle) -> SetHandle:
    """The part of b above a; requires a at the bottom of b."""
    if not has_bottom(b, a):
        raise NotABottom(f"{a!r} is not at the bottom of {b!r}")
    return replace(b, a, EMPTY)


def remove_top(c: SetHandle, b: SetHandle) -> SetHandle:
    """The unique a with c(a) = b when one exists, otherwise b itself."""
    witnesses = [a for a in constituents(b) if compose(c, a) is b]
    if not witnesses:
        return b
    if len(witnesses) > 1:
        raise AmbiguousWitness(
            f"{len(witnesses)} witnesses place {c!r} at the top of {b!r}"
        )
    return witnesses[0]


def maximal_elements(handles: Iterable[SetHandle]) -> list[SetHandle]:
    """Members of the collection that lie strictly inside no other member."""
    hs = list(dict.fromkeys(handles))
    return [
        h
        for h in hs
        if not any(o is not h and is_constituent(h, o) for o in hs)
    ]


def maximal_constituents(s: SetHandle) -> SetHandle:
    """The set of maximal proper constituents of s."""
    if s is EMPTY:
        raise EmptyHasNoMaximal("the empty set has no proper constituents")
    return make_set(maximal_elements(constituent_set(s) - {s}))


def unique_maximum(s: SetHandle) -> SetHandle:
    """The single maximal proper constituent of s; NotUnique otherwise."""
    if s is EMPTY:
        raise EmptyHasNoMaximal("the empty set has no proper constituents")
    ms = maximal_elements(constituent_set(s) - {s})
    if len(ms) != 1:
        raise NotUnique(f"{len(ms)} maximal constituents in {s!r}")
    return ms[0]


def _common(a: SetHandle, b: SetHandle) -> frozenset[SetHandle]:
    return constituent_set(a) & constituent_set(b)


def lcc_set(a: SetHandle, b: SetHandle) -> SetHandle:
    """Set of the largest common constituents of a and b."""
    return make_set(maximal_elements(_common(a, b)))


def lcc(a: SetHandle, b: SetHandle) -> SetHandle:
    """The largest common constituent when it is unique."""
    ms = maximal_elements(_common(a, b))
    if len(ms) != 1:
        raise NotUnique(f"{len(ms)} largest common constituents")
    return ms[0]


def max_with_bottom(a: SetHandle, b: SetHandle) -> SetHandle:
    """Set of the maximal constituents of a that have b at their bottom."""
    found = [c for c in constituent_set(a) if has_bottom(c, b)]
    return make_set(maximal_elements(found))


def max_with_bottom_unique(a: SetHandle, b: SetHandle) -> SetHandle:
    found = [c for c in constituent_set(a) if has_bottom(c, b)]
    if not found:
        raise NoneFound(f"no constituent of {a!r} has {b!r} at the bottom")
    ms = maximal_elements(found)
    if len(ms) != 1:
        raise NotUnique(f"{len(ms)} maximal constituents with that bottom")
    return ms[0]


def with_top(a: SetHandle, b: SetHandle) -> SetHandle:
    """Set of all constituents of a that have b at their top."""
    return make_set(c for c in constituent_set(a) if is_top(b, c))


def with_top_unique(a: SetHandle, b: SetHandle) -> SetHandle:
    """The single constituent of a with b at the top; NotUnique otherwise."""
    found = [c for c in constituent_set(a) if is_top(b, c)]
    if len(found) != 1:
        raise NotUnique(f"{len(found)} constituents of {a!r} have {b!r} at the top")
    return found[0]


def map_union(x: SetHandle, y: SetHandle) -> SetHandle:
    """Rebuild x unioning y into every subterm along the way."""
    memo: dict[SetHandle, SetHandle] = {}

    def rec(w: SetHandle) -> SetHandle:
        got = memo.get(w)
        if got is None:
            got = make_set([rec(c) for c in w.children] + list(y.children))
            memo[w] = got
        return got

    return rec(x)
