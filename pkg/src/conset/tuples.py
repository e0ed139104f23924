"""Positional tuples via diamond padding, plus the classic nested pair.

Each tuple entry is composed on top of a position marker (the diamond over a
successor numeral), which pads entries apart so no occupant can sit inside
another.  Extraction finds the unique maximal constituent with the marker at
its bottom and strips the marker.  The classic two-set pair {{a},{a,b}} is
provided with a diagnostic decoder that reports exactly when and why the
encoding loses information.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .algebra import (
    compose,
    compose_all,
    max_with_bottom_unique,
    replace,
)
from .errors import NoSuchPosition
from .kernel import EMPTY, SetHandle, constituent_set, is_constituent, make_set
from .numerals import zermelo

__all__ = [
    "diamond",
    "position",
    "position_path",
    "make_tuple",
    "contains_position",
    "constituent_at",
    "get_at",
    "kuratowski_pair",
    "kuratowski_top",
    "PairDiagnosis",
    "PairDecode",
    "decode_kuratowski",
]


def kuratowski_pair(a: SetHandle, b: SetHandle) -> SetHandle:
    """The nested pair {{a},{a,b}}; collapses to {{a}} when a = b."""
    return make_set([make_set([a]), make_set([a, b])])


@lru_cache(maxsize=None)
def diamond() -> SetHandle:
    """The smallest set whose covering diagram is not a chain: {{1},{0,1}}."""
    return kuratowski_pair(zermelo(1), zermelo(0))


def position(n: int) -> SetHandle:
    """Marker for tuple slot n: the diamond over the successor numeral n."""
    return compose(diamond(), zermelo(n))


def position_path(coords: Sequence[int]) -> SetHandle:
    """Marker for a nested slot; coords run innermost-first.

    The markers compose right-to-left, so the first coordinate addresses the
    innermost tuple: position_path(p + q) = compose(position_path(p),
    position_path(q)).
    """
    if not coords:
        raise ValueError("a position path needs at least one coordinate")
    parts: list[SetHandle] = []
    for c in coords:
        parts.append(diamond())
        parts.append(zermelo(c))
    return compose_all(parts)


def make_tuple(entries: Sequence[SetHandle]) -> SetHandle:
    """Ordered tuple: each entry composed onto its position marker."""
    if not entries:
        raise ValueError("a tuple needs at least one entry")
    return make_set([compose(e, position(i)) for i, e in enumerate(entries)])


def contains_position(t: SetHandle, coords: Sequence[int]) -> bool:
    """Whether the nested slot's marker occurs anywhere inside t."""
    return is_constituent(position_path(coords), t)


def constituent_at(t: SetHandle, coords: Sequence[int], s: SetHandle) -> bool:
    """Whether s (or the occupant it is part of) sits at the given slot."""
    return is_constituent(compose(s, position_path(coords)), t)


def get_at(t: SetHandle, coords: Sequence[int]) -> SetHandle:
    """The occupant of a nested slot: strip the marker from the unique
    maximal constituent that has it at the bottom."""
    marker = position_path(coords)
    if not is_constituent(marker, t):
        raise NoSuchPosition(f"no marker for path {list(coords)} inside {t!r}")
    occupant_with_pad = max_with_bottom_unique(t, marker)
    return replace(occupant_with_pad, marker, EMPTY)


def kuratowski_top() -> SetHandle:
    """The upper part of the nested pair's diagram, terminals left open."""
    return kuratowski_pair(position(0), position(1))


class PairDiagnosis(enum.Enum):
    OK = "ok"
    OK_UNIQUE_DEGENERATE = "ok-unique-degenerate"
    AMBIGUOUS_SECOND = "ambiguous-second"
    NOT_A_PAIR_SHAPE = "not-a-pair-shape"


@dataclass(frozen=True)
class PairDecode:
    first: SetHandle | None
    second: SetHandle | None
    diagnosis: PairDiagnosis
    cardinality_used: bool


def decode_kuratowski(h: SetHandle) -> PairDecode:
    """Best reconstruction of (a, b) from {{a},{a,b}} with a diagnosis.

    The decoder reports how far the shape alone determines the entries:
    when b is a proper part of a, the covering diagram of the pair no longer
    names b, except in the single degenerate shape (a = {{}}) where only one
    candidate remains.  When the two entries were equal the braces collapse,
    and only the element count of the inner set (not its shape) rules the
    second entry; that dependence is flagged.
    """
    elems = h.children
    if len(elems) == 1:
        (s,) = elems
        if len(s.children) == 1:
            # {{a}}: the collapsed pair (a, a).  Element count pins b = a,
            # but the shape admits any part of a, so stay ambiguous.
            return PairDecode(
                first=s.children[0],
                second=None,
                diagnosis=PairDiagnosis.AMBIGUOUS_SECOND,
                cardinality_used=True,
            )
        return PairDecode(None, None, PairDiagnosis.NOT_A_PAIR_SHAPE, False)
    if len(elems) != 2:
        return PairDecode(None, None, PairDiagnosis.NOT_A_PAIR_SHAPE, False)
    reading: tuple[SetHandle, SetHandle] | None = None
    for s, d in (elems, elems[::-1]):
        if len(s.children) == 1 and len(d.children) == 2:
            a = s.children[0]
            if a in d.children:
                b = next(c for c in d.children if c is not a)
                reading = (a, b)
                break
    if reading is None:
        return PairDecode(None, None, PairDiagnosis.NOT_A_PAIR_SHAPE, False)
    a, b = reading
    if is_constituent(b, a):
        # b is a proper part of a: the diagram admits every proper part of
        # a as the second entry, so b is determined only when a has exactly
        # one proper part (a = {{}}, b = {}).
        if len(constituent_set(a)) == 2:
            return PairDecode(a, b, PairDiagnosis.OK_UNIQUE_DEGENERATE, False)
        return PairDecode(a, None, PairDiagnosis.AMBIGUOUS_SECOND, False)
    return PairDecode(a, b, PairDiagnosis.OK, False)
