"""t-covers and the covering number tau_t, plus classification of the cover family.

A t-cover of F is any T with ``|T & F| >= t`` for every member.  Covers are
found by branching: the first member that T fails to meet in t elements must
receive one more of its elements, so every cover of size <= s is reached
within depth s.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .canon import canonical_labeling
from .family import Family, FamilyError, NotIntersectingError, elements_of, is_maximal, mask_of


class ClassificationError(FamilyError):
    """Cover family matched none of the patterns it must match."""


class CoverCase(enum.Enum):
    TRIVIAL = "Trivial"
    FULL_SIMPLEX = "FullSimplex"
    CASE1 = "Case1"
    CASE2 = "Case2"
    CASE3 = "Case3"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class CoverReport:
    tau: int
    min_covers: tuple[int, ...]
    classification: CoverCase
    ell: int | None = None
    core: int | None = None
    witness: tuple[int, ...] | None = None

    @property
    def label(self) -> str:
        if self.classification is CoverCase.CASE3:
            return f"Case3({self.ell})"
        return self.classification.value


def is_t_cover(cover: int, fam: Family, t: int) -> bool:
    return all((cover & m).bit_count() >= t for m in fam.members)


def _covers_within(fam: Family, t: int, bound: int, first_only: bool) -> set[int]:
    members = fam.members
    found: set[int] = set()
    seen: set[int] = set()

    def walk(cover: int, size: int) -> bool:
        if cover in seen:
            return False
        seen.add(cover)
        for m in members:
            if (cover & m).bit_count() < t:
                break
        else:
            found.add(cover)
            return first_only
        if size == bound:
            return False
        rest = m & ~cover
        while rest:
            low = rest & -rest
            if walk(cover | low, size + 1):
                return True
            rest ^= low
        return False

    walk(0, 0)
    return found


def covering_number(fam: Family, t: int) -> int:
    """Least size of a t-cover."""
    if not fam.members:
        raise FamilyError("covering number of the empty family is undefined")
    if fam.k < t:
        raise FamilyError(f"members of size {fam.k} admit no {t}-cover")
    for size in range(t, fam.n + 1):
        if _covers_within(fam, t, size, first_only=True):
            return size
    raise AssertionError("[n] is always a cover")  # pragma: no cover


def min_covers(fam: Family, t: int) -> tuple[int, ...]:
    """All t-covers of size tau_t, ascending by mask."""
    tau = covering_number(fam, t)
    return tuple(sorted(c for c in _covers_within(fam, t, tau, first_only=False) if c.bit_count() == tau))


def covers_up_to(fam: Family, t: int, max_size: int) -> tuple[int, ...]:
    """Every t-cover of size <= max_size (not only minimum ones)."""
    out = []
    for size in range(0, max_size + 1):
        for combo in combinations(range(1, fam.n + 1), size):
            m = mask_of(combo)
            if is_t_cover(m, fam, t):
                out.append(m)
    return tuple(sorted(out))


def _pattern(n: int, t: int, kind: CoverCase, ell: int | None = None) -> Family:
    head = tuple(range(1, t + 1))
    if kind is CoverCase.FULL_SIMPLEX:
        sets = combinations(range(1, t + 3), t + 1)
    elif kind is CoverCase.CASE1:
        sets = [tuple(range(1, t + 2))]
    else:
        top = t + 2 if kind is CoverCase.CASE2 else ell
        sets = [head + (j,) for j in range(t + 1, top + 1)]
    return Family.from_sets(n, t + 1, sets)


def classify_cover_family(fam: Family, t: int, r: int = 2) -> CoverReport:
    """Match the minimum covers of a maximal t-intersecting family to a pattern.

    Patterns, for tau_t = t + 1: the full simplex C([t+2], t+1); a single
    cover [t+1]; two covers [t]+{t+1}, [t]+{t+2}; or [t]+{j} for
    t < j <= ell with ell >= t + 3.
    """
    if r != 2:
        raise FamilyError("cover classification is a 2-wise statement; r must be 2")
    if not fam.members:
        raise FamilyError("cannot classify the empty family")
    try:
        maximal = is_maximal(fam, 2, t)
    except NotIntersectingError:
        raise NotIntersectingError(f"family is not {t}-intersecting") from None
    if not maximal:
        raise FamilyError("cover classification needs a maximal family")
    covers = min_covers(fam, t)
    tau = covers[0].bit_count()
    if tau == t:
        return CoverReport(tau, covers, CoverCase.TRIVIAL, core=covers[0] if len(covers) == 1 else None)
    if tau >= t + 2:
        return CoverReport(tau, covers, CoverCase.UNCLASSIFIED)

    cfam = Family(fam.n, t + 1, covers)
    form, perm = canonical_labeling(cfam, max_support=None)
    core = cfam.common()
    candidates: list[tuple[CoverCase, int | None]] = [(CoverCase.FULL_SIMPLEX, None)]
    if len(covers) == 1:
        candidates.append((CoverCase.CASE1, t + 1))
    elif len(covers) == 2:
        candidates.append((CoverCase.CASE2, t + 2))
    elif t + len(covers) <= fam.n:
        candidates.append((CoverCase.CASE3, t + len(covers)))
    for kind, ell in candidates:
        pat = _pattern(fam.n, t, kind, ell)
        if canonical_labeling(pat, max_support=None)[0] == form:
            if kind is CoverCase.FULL_SIMPLEX:
                return CoverReport(tau, covers, kind, witness=tuple(perm))
            if kind is CoverCase.CASE1:
                core = None  # every t-subset of the single cover plays the role of [t]
            return CoverReport(tau, covers, kind, ell=ell, core=core, witness=tuple(perm))
    raise ClassificationError(
        f"tau_t = t + 1 but the {len(covers)} minimum covers "
        f"{[list(elements_of(c)) for c in covers]} match no known pattern"
    )
