"""Isomorphism-invariant canonical forms for uniform families.

Labels are found by individualization/refinement: colour elements by
iterated incidence signatures, split the first non-singleton cell one element
at a time, and take the lexicographically least relabelled family over all
discrete leaves.  Branches related by a transposition that is an
automorphism of the family are explored once.
"""
from __future__ import annotations

from collections import Counter
from typing import Sequence

from .family import Family, FamilyError, elements_of

DEFAULT_MAX_SUPPORT = 10


class CanonicalFormError(FamilyError):
    """Support too large for exact canonicalization."""


def _refine(colors: list[int], incidence: list[list[int]], member_elems: list[tuple[int, ...]]) -> list[int]:
    while True:
        sigs = []
        for e, c in enumerate(colors):
            rows = sorted(tuple(sorted(colors[x] for x in member_elems[f])) for f in incidence[e])
            sigs.append((c, tuple(rows)))
        ranks = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranks[s] for s in sigs]
        if len(ranks) == len(set(colors)):
            return new
        colors = new


def _individualize(colors: list[int], v: int) -> list[int]:
    keyed = [(c, 0 if e == v else 1) for e, c in enumerate(colors)]
    ranks = {s: i for i, s in enumerate(sorted(set(keyed)))}
    return [ranks[s] for s in keyed]


def canonical_labeling(fam: Family, max_support: int | None = DEFAULT_MAX_SUPPORT) -> tuple[bytes, list[int]]:
    """Canonical form plus a permutation ``perm`` of [n] realising it.

    ``fam.relabel(perm)`` is the canonical representative; the form encodes
    it together with ``n`` and ``k``.
    """
    support = elements_of(fam.support())
    if max_support is not None and len(support) > max_support:
        raise CanonicalFormError(
            f"support of size {len(support)} exceeds {max_support} for exact canonicalization"
        )
    s = len(support)
    local = {e: i for i, e in enumerate(support)}
    member_elems = [tuple(local[e] for e in elements_of(m)) for m in fam.members]
    member_set = {frozenset(me) for me in member_elems}
    incidence: list[list[int]] = [[] for _ in range(s)]
    for f, me in enumerate(member_elems):
        for e in me:
            incidence[e].append(f)

    def swap_is_automorphism(u: int, v: int) -> bool:
        for me in member_elems:
            if (u in me) != (v in me):
                img = frozenset(v if x == u else u if x == v else x for x in me)
                if img not in member_set:
                    return False
        return True

    best: tuple | None = None
    best_colors: list[int] | None = None

    def leaf_key(colors: list[int]) -> tuple:
        return tuple(sorted(sum(1 << colors[x] for x in me) for me in member_elems))

    def search(colors: list[int]) -> None:
        nonlocal best, best_colors
        counts = Counter(colors)
        cell_color = min((c for c, cnt in counts.items() if cnt > 1), default=None)
        if cell_color is None:
            key = leaf_key(colors)
            if best is None or key < best:
                best, best_colors = key, colors
            return
        reps: list[int] = []
        for v in (e for e, c in enumerate(colors) if c == cell_color):
            if any(swap_is_automorphism(u, v) for u in reps):
                continue
            reps.append(v)
            search(_refine(_individualize(colors, v), incidence, member_elems))

    search(_refine([len(incidence[e]) for e in range(s)], incidence, member_elems))

    perm = [0] * fam.n
    if best_colors is not None:
        for e, c in zip(support, best_colors):
            perm[e - 1] = c + 1
    free = iter(range(s + 1, fam.n + 1))
    for e in range(1, fam.n + 1):
        if perm[e - 1] == 0:
            perm[e - 1] = next(free)
    body = ".".join(format(m, "x") for m in (best or ()))
    return f"{fam.n}:{fam.k}:{body}".encode(), perm


def canonical_form(fam: Family, max_support: int | None = DEFAULT_MAX_SUPPORT) -> bytes:
    """Identical bytes iff the families are isomorphic (same n and k)."""
    return canonical_labeling(fam, max_support)[0]


def fingerprint(fam: Family) -> tuple:
    """Cheap invariant: degree sequence and intersection-size histogram.

    Isomorphic families always agree; distinct classes may collide.
    """
    degrees = Counter()
    for m in fam.members:
        for e in elements_of(m):
            degrees[e] += 1
    ms: Sequence[int] = fam.members
    inter = Counter((a & b).bit_count() for i, a in enumerate(ms) for b in ms[i + 1:]) if len(ms) <= 2000 else Counter()
    return (
        "fingerprint",
        fam.n,
        fam.k,
        len(ms),
        tuple(sorted(degrees.values())),
        tuple(sorted(inter.items())),
    )
