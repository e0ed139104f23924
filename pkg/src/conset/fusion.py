"""Top/bottom/middle structures, fusion, and the vertical-decomposition queries.

A top structure leaves numbered slots (position markers) open at its bottom; a
bottom structure carries numbered branches, each wrapped as the marker
n-singletons(diamond(branch)); fusion joins them with three replacement
phases whose diamond pads keep the branch interiors untouchable while the
slots are filled, shifted down in lockstep, and finally grounded.

Middle structures are both at once and form a monoid under fusion; closing a
middle structure grounds both sides, turning its branches into a plain set.
The double-turnstile queries ask whether such a decomposition exists at all,
by bounded search with exact verification.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .algebra import (
    compose,
    compose_all,
    is_top,
    maximal_elements,
    remove_top,
    replace,
)
from .errors import (
    ArityMismatch,
    IndexOutOfRange,
    NotAPermutation,
    NotAStructure,
    SearchBudgetExceeded,
    TerminalMismatch,
)
from .kernel import (
    EMPTY,
    SetHandle,
    constituent_set,
    constituents,
    is_constituent,
    make_set,
)
from .numerals import zermelo
from .tuples import diamond, make_tuple, position

__all__ = [
    "TopStructure",
    "BottomStructure",
    "MiddleStructure",
    "top_structure",
    "bottom_structure",
    "middle_structure",
    "validate_top",
    "validate_bottom",
    "validate_middle",
    "bottom_terminal",
    "match_terminals",
    "fuse",
    "fuse_with_terminals",
    "middle",
    "middle_identity",
    "middle_permutation",
    "fuse_middle",
    "close",
    "has_top_structure",
    "has_bottom_structure",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 100_000


@dataclass(frozen=True)
class TopStructure:
    set: SetHandle
    arity: int
    offset: int = 0


@dataclass(frozen=True)
class BottomStructure:
    set: SetHandle
    arity: int
    offset: int = 0
    # markers[i] is C_(offset+i), the branch i wrapped as a numbered marker
    markers: tuple[SetHandle, ...] = ()


@dataclass(frozen=True)
class MiddleStructure:
    set: SetHandle
    arity: int
    offset: int = 0


def _terminal_indices(h: SetHandle) -> list[int]:
    """All n whose position marker occurs inside h.

    Marker texts grow linearly with n, so only finitely many can fit.
    """
    ks = []
    n = 0
    while len(position(n).text) <= len(h.text):
        if is_constituent(position(n), h):
            ks.append(n)
        n += 1
    return ks


def top_structure(h: SetHandle, offset: int = 0) -> TopStructure:
    """Validate h as a top structure (strict: raises NotAStructure)."""
    ks = _terminal_indices(h)
    if not ks:
        raise NotAStructure("no position markers occur in the set")
    if ks != list(range(offset, offset + len(ks))):
        raise NotAStructure(
            f"marker indices {ks} are not contiguous from {offset}"
        )
    terminals = [position(k) for k in ks]
    for x in constituents(h):
        if not any(
            is_constituent(x, t) or is_constituent(t, x) for t in terminals
        ):
            raise NotAStructure(
                f"constituent bypasses every terminal: {x!r}"
            )
    return TopStructure(set=h, arity=len(ks), offset=offset)


def _parse_marker(m: SetHandle) -> tuple[int, SetHandle]:
    """Split a marker n-singletons(diamond(x)) into (n, x)."""
    n = 0
    w = m
    while len(w.children) == 1:
        w = w.children[0]
        n += 1
    if len(w.children) != 2:
        raise NotAStructure(f"marker residue is not diamond-shaped: {w!r}")
    x = remove_top(diamond(), w)
    if compose(diamond(), x) is not w:
        raise NotAStructure(f"marker residue is not a diamond stack: {w!r}")
    return n, x


def bottom_structure(h: SetHandle, offset: int = 0) -> BottomStructure:
    """Validate h as a bottom structure (strict: raises NotAStructure).

    Every maximal proper constituent must parse as a numbered marker; the
    numbering must be contiguous.  (Every other constituent then sits below
    some marker automatically, which is the no-bypass condition.)
    """
    if h is EMPTY:
        raise NotAStructure("the empty set carries no markers")
    markers: dict[int, SetHandle] = {}
    for m in maximal_elements(constituent_set(h) - {h}):
        n, _ = _parse_marker(m)
        if n in markers:
            raise NotAStructure(f"two maximal markers share index {n}")
        markers[n] = m
    ks = sorted(markers)
    if ks != list(range(offset, offset + len(ks))):
        raise NotAStructure(
            f"marker indices {ks} are not contiguous from {offset}"
        )
    return BottomStructure(
        set=h,
        arity=len(ks),
        offset=offset,
        markers=tuple(markers[k] for k in ks),
    )


def middle_structure(h: SetHandle, offset: int = 0) -> MiddleStructure:
    """Validate h as a middle structure (strict: raises NotAStructure)."""
    t = top_structure(h, offset)
    b = bottom_structure(h, offset)
    if t.arity != b.arity:
        raise NotAStructure(
            f"slot arity {t.arity} differs from marker arity {b.arity}"
        )
    terminals = {position(offset + i) for i in range(t.arity)}
    if terminals & set(b.markers):
        raise NotAStructure("a bare position marker doubles as a branch marker")
    return MiddleStructure(set=h, arity=t.arity, offset=offset)


def validate_top(h: SetHandle, offset: int = 0) -> TopStructure | None:
    try:
        return top_structure(h, offset)
    except NotAStructure:
        return None


def validate_bottom(h: SetHandle, offset: int = 0) -> BottomStructure | None:
    try:
        return bottom_structure(h, offset)
    except NotAStructure:
        return None


def validate_middle(h: SetHandle, offset: int = 0) -> MiddleStructure | None:
    try:
        return middle_structure(h, offset)
    except NotAStructure:
        return None


def _as_top(t: SetHandle | TopStructure) -> TopStructure:
    return t if isinstance(t, TopStructure) else top_structure(t)


def _as_bottom(b: SetHandle | BottomStructure) -> BottomStructure:
    return b if isinstance(b, BottomStructure) else bottom_structure(b)


def _as_middle(m: SetHandle | MiddleStructure) -> MiddleStructure:
    return m if isinstance(m, MiddleStructure) else middle_structure(m)


def bottom_terminal(b: SetHandle | BottomStructure, n: int) -> SetHandle:
    """Branch n of a bottom structure: the marker with its wrapping removed."""
    bv = _as_bottom(b)
    i = n - bv.offset
    if not 0 <= i < bv.arity:
        raise IndexOutOfRange(f"no marker {n} (arity {bv.arity}, offset {bv.offset})")
    return remove_top(compose(zermelo(n), diamond()), bv.markers[i])


def match_terminals(
    t: SetHandle | TopStructure, b: SetHandle | BottomStructure
) -> bool:
    """Whether every slot of t pairs with the equally numbered marker of b."""
    tv, bv = _as_top(t), _as_bottom(b)
    if tv.arity != bv.arity or tv.offset != bv.offset:
        return False
    for i in range(tv.arity):
        n = tv.offset + i
        if not is_top(
            compose(position(n), diamond()), compose(diamond(), bv.markers[i])
        ):
            return False
    return True


def _fuse_formula(top: SetHandle, terms: Sequence[SetHandle]) -> SetHandle:
    """The three replacement phases.

    Ascending, each slot receives its branch over a fresh pad; the pads keep
    marker look-alikes inside branches shifted out of harm's way.  Descending,
    all pads drop one slot per step in lockstep, converging on the bare
    diamond, which the final phase grounds to the empty set — restoring any
    shifted branch interiors in the same stroke.
    """
    cur = top
    m = len(terms)
    for n in range(m):
        p = position(n)
        cur = replace(cur, p, compose(terms[n], p))
    for n in range(m - 1, 0, -1):
        cur = replace(cur, position(n), position(n - 1))
    return replace(cur, diamond(), EMPTY)


def fuse(t: SetHandle | TopStructure, b: SetHandle | BottomStructure) -> SetHandle:
    """Join a top structure onto a bottom structure along numbered slots."""
    tv, bv = _as_top(t), _as_bottom(b)
    if tv.offset != 0 or bv.offset != 0:
        raise TerminalMismatch("fusion requires marker indices starting at 0")
    if not match_terminals(tv, bv):
        raise TerminalMismatch(
            f"slots (arity {tv.arity}) do not match markers (arity {bv.arity})"
        )
    terms = [bottom_terminal(bv, n) for n in range(bv.arity)]
    return _fuse_formula(tv.set, terms)


def fuse_with_terminals(
    t: SetHandle | TopStructure, terms: Sequence[SetHandle]
) -> SetHandle:
    """Fuse bare branches onto a top structure's slots (no marker wrapping)."""
    tv = _as_top(t)
    if tv.offset != 0:
        raise TerminalMismatch("fusion requires marker indices starting at 0")
    if len(terms) != tv.arity:
        raise ArityMismatch(f"{len(terms)} branches for {tv.arity} slots")
    return _fuse_formula(tv.set, list(terms))


def middle(entries: Sequence[SetHandle]) -> MiddleStructure:
    """Pass-through structure carrying each entry between slot n and marker n."""
    if not entries:
        raise ValueError("a middle structure needs at least one entry")
    parts = [
        compose_all([zermelo(n), diamond(), e, diamond(), zermelo(n)])
        for n, e in enumerate(entries)
    ]
    return middle_structure(make_set(parts))


def middle_identity(m: int) -> MiddleStructure:
    """The identity for fuse_middle at arity m: all entries empty."""
    if m < 1:
        raise ValueError("arity must be at least 1")
    return middle([EMPTY] * m)


def middle_permutation(perm: Sequence[int]) -> MiddleStructure:
    """Middle structure wiring slot n straight to marker perm(n)."""
    if sorted(perm) != list(range(len(perm))):
        raise NotAPermutation(f"{list(perm)} is not a permutation of 0..{len(perm) - 1}")
    parts = [
        compose_all([zermelo(n), diamond(), diamond(), zermelo(p)])
        for n, p in enumerate(perm)
    ]
    return middle_structure(make_set(parts))


def fuse_middle(
    a: SetHandle | MiddleStructure, b: SetHandle | MiddleStructure
) -> MiddleStructure:
    """Fuse a (as top) onto b (as bottom); middle structures form a monoid."""
    av, bv = _as_middle(a), _as_middle(b)
    if av.arity != bv.arity:
        raise ArityMismatch(f"arity {av.arity} fused with arity {bv.arity}")
    return middle_structure(fuse(av.set, bv.set))


def close(m: SetHandle | MiddleStructure) -> SetHandle:
    """Ground both sides of a middle structure: its branches become elements.

    Fusing empty branches onto the slots grounds the bottom side and leaves a
    bottom structure; fusing the all-empty tuple on top then grounds the
    markers, so each branch lands as a plain element.
    """
    mv = _as_middle(m)
    grounded = fuse_with_terminals(mv.set, [EMPTY] * mv.arity)
    return fuse(make_tuple([EMPTY] * mv.arity), grounded)


def has_top_structure(
    t: SetHandle | TopStructure,
    x: SetHandle,
    *,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Whether x decomposes with t on top (t followed by some branches).

    Complete search: any branch fused into x survives as a constituent of x,
    so enumerating constituent assignments covers every decomposition, and a
    decomposition exists iff some assignment both fuses to x and wraps into a
    valid bottom structure (fusion never reads a bottom beyond its markers,
    so the minimal marker set stands in for every bottom with those
    branches).  Each assignment costs one budget unit; most are discarded by
    an exact length bound (replacement is length-linear and canonical merging
    only shrinks).
    """
    tv = _as_top(t)
    if tv.offset != 0:
        raise NotAStructure("decomposition queries require offset-0 slots")
    m = tv.arity
    cons = constituents(x)
    occ = [tv.set.text.count(position(n).text) for n in range(m)]
    plen = [len(position(n).text) for n in range(m)]
    base = len(tv.set.text)
    target = len(x.text)
    spent = 0
    for assign in itertools.product(cons, repeat=m):
        spent += 1
        if spent > budget:
            raise SearchBudgetExceeded(
                f"stopped after {budget} candidate assignments"
            )
        predicted = base + sum(
            o * (len(a.text) - pl) for o, a, pl in zip(occ, assign, plen)
        )
        if predicted < target:
            continue
        if _fuse_formula(tv.set, assign) is not x:
            continue
        minimal = make_set(
            compose_all([zermelo(n), diamond(), a]) for n, a in enumerate(assign)
        )
        got = validate_bottom(minimal)
        if got is not None and got.arity == m:
            return True
    return False


def has_bottom_structure(
    x: SetHandle,
    b: SetHandle | BottomStructure,
    *,
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Whether x decomposes with b at the bottom (some top fused onto b).

    Searches substitution preimages of x: each subterm equal to a branch may
    have been a slot, and every combination of child preimages rebuilds a
    candidate.  Candidates that validate as offset-0 tops are verified by
    actually fusing.  The search does not reconstruct tops whose distinct
    slots collapsed to one subterm during fusion, so a False is definitive
    only up to that documented limit; True is always verified.
    """
    bv = _as_bottom(b)
    if bv.offset != 0:
        raise NotAStructure("decomposition queries require offset-0 markers")
    m = bv.arity
    terms = [bottom_terminal(bv, n) for n in range(m)]
    spent = 0
    memo: dict[SetHandle, list[SetHandle]] = {}

    def preimages(w: SetHandle) -> list[SetHandle]:
        nonlocal spent
        got = memo.get(w)
        if got is not None:
            return got
        out: list[SetHandle] = []
        for n in range(m):
            if terms[n] is w:
                out.append(position(n))
        child_opts = [preimages(c) for c in w.children]
        for choice in itertools.product(*child_opts):
            spent += 1
            if spent > budget:
                raise SearchBudgetExceeded(
                    f"stopped after {budget} candidate subterms"
                )
            out.append(make_set(choice))
        out = list(dict.fromkeys(out))
        memo[w] = out
        return out

    for candidate in preimages(x):
        tv = validate_top(candidate)
        if tv is None or tv.arity != m:
            continue
        if _fuse_formula(candidate, terms) is x:
            return True
    return False
