"""Interned canonical handles for pure finite sets.

Every distinct set is stored exactly once.  A handle keeps its elements as a
tuple of child handles sorted by the shortlex order of their canonical text
(length first, then lexicographic), with duplicates removed, and caches the
canonical text built from that ordering.  Because construction always goes
through the intern table, handle identity coincides with set equality and
every equality test in the package is a single pointer comparison.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .errors import MalformedText

__all__ = [
    "SetHandle",
    "empty",
    "make_set",
    "parse",
    "to_text",
    "elements",
    "cardinality",
    "union",
    "is_constituent",
    "constituent_set",
    "constituents",
    "instance_count",
    "shortlex_key",
]


class SetHandle:
    """A canonical pure finite set.  Obtain via make_set or parse only."""

    __slots__ = ("uid", "children", "text", "_constituents", "_instances")

    def __init__(self, uid: int, children: tuple["SetHandle", ...], text: str):
        self.uid = uid
        self.children = children
        self.text = text
        self._constituents: frozenset[SetHandle] | None = None
        self._instances: int | None = None

    def __repr__(self) -> str:
        t = self.text
        if len(t) > 48:
            t = t[:22] + "..." + t[-22:]
        return f"<set {t}>"

    def __len__(self) -> int:
        return len(self.children)

    def __iter__(self):
        return iter(self.children)

    # identity-based __eq__/__hash__ are correct because of interning


_table: dict[tuple[int, ...], SetHandle] = {}
_ids = itertools.count()


def shortlex_key(text: str) -> tuple[int, str]:
    return (len(text), text)


def make_set(elems: Iterable[SetHandle]) -> SetHandle:
    """The canonical set whose elements are the given handles."""
    uniq = {e.uid: e for e in elems}
    children = tuple(sorted(uniq.values(), key=lambda e: (len(e.text), e.text)))
    key = tuple(c.uid for c in children)
    h = _table.get(key)
    if h is None:
        text = "{" + ",".join(c.text for c in children) + "}"
        # setdefault keeps insert-if-absent atomic; a racing duplicate loses
        h = _table.setdefault(key, SetHandle(next(_ids), children, text))
    return h


EMPTY: SetHandle = make_set(())


def empty() -> SetHandle:
    return EMPTY


def to_text(h: SetHandle) -> str:
    """Canonical text of h; parse(to_text(h)) is h."""
    return h.text


def parse(text: str) -> SetHandle:
    """Parse brace text into a canonical handle.

    Whitespace between tokens is ignored.  The input need not be canonical:
    element order and duplicates are normalized during construction.
    """
    stack: list[list[SetHandle]] = []
    expect_item = True
    result: SetHandle | None = None
    for i, ch in enumerate(text):
        if ch.isspace():
            continue
        if result is not None:
            raise MalformedText(f"trailing input at offset {i}")
        if ch == "{":
            if not expect_item:
                raise MalformedText(f"missing comma before offset {i}")
            stack.append([])
            expect_item = True
        elif ch == "}":
            if not stack:
                raise MalformedText(f"unmatched close brace at offset {i}")
            if expect_item and stack[-1]:
                raise MalformedText(f"dangling comma before offset {i}")
            h = make_set(stack.pop())
            if stack:
                stack[-1].append(h)
            else:
                result = h
            expect_item = False
        elif ch == ",":
            if expect_item or not stack:
                raise MalformedText(f"misplaced comma at offset {i}")
            expect_item = True
        else:
            raise MalformedText(f"unexpected character {ch!r} at offset {i}")
    if result is None:
        raise MalformedText("unterminated set text")
    return result


def elements(h: SetHandle) -> list[SetHandle]:
    """Elements of h in canonical (shortlex) order."""
    return list(h.children)


def cardinality(h: SetHandle) -> int:
    return len(h.children)


def union(a: SetHandle, b: SetHandle) -> SetHandle:
    return make_set(a.children + b.children)


def _postorder(h: SetHandle) -> list[SetHandle]:
    """Distinct sub-handles of h, children before parents."""
    order: list[SetHandle] = []
    seen: set[SetHandle] = set()
    stack: list[tuple[SetHandle, bool]] = [(h, False)]
    while stack:
        node, expanded = stack.pop()
        if expanded:
            order.append(node)
            continue
        if node in seen:
            continue
        seen.add(node)
        stack.append((node, True))
        for c in node.children:
            if c not in seen:
                stack.append((c, False))
    return order


def constituent_set(h: SetHandle) -> frozenset[SetHandle]:
    """All constituents of h (reflexive), as a frozenset of handles."""
    if h._constituents is None:
        for node in _postorder(h):
            if node._constituents is None:
                acc: set[SetHandle] = {node}
                for c in node.children:
                    acc |= c._constituents  # children resolved by postorder
                node._constituents = frozenset(acc)
    return h._constituents


def constituents(h: SetHandle) -> list[SetHandle]:
    """Constituents of h sorted by shortlex canonical text."""
    return sorted(constituent_set(h), key=lambda c: (len(c.text), c.text))


def is_constituent(x: SetHandle, y: SetHandle) -> bool:
    """True when x occurs somewhere inside y (reflexively)."""
    return x is y or x in constituent_set(y)


def instance_count(h: SetHandle) -> int:
    """Number of subterm occurrences in h: one for h plus all element instances."""
    if h._instances is None:
        for node in _postorder(h):
            if node._instances is None:
                node._instances = 1 + sum(c._instances for c in node.children)
    return h._instances
