"""Uniform set families over [n] and the intersection / triangle predicates.

A k-set is stored as a Python int used as a bit vector: element ``i`` of the
ground set ``[n] = {1, ..., n}`` is bit ``i - 1``.  Families keep their members
sorted by that integer value, which is the canonical order used everywhere
(serialization, saturation scans, candidate spaces).
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import reduce
from itertools import combinations
from math import comb
from typing import Iterable, Iterator, Sequence

import numpy as np

MAX_N = 128
ZETA_MAX_N = 20


class FamilyError(ValueError):
    """Malformed family or parameters."""


class NotIntersectingError(FamilyError):
    """Operation requires an r-wise t-intersecting family."""


class StandingAssumptionWarning(UserWarning):
    """Parameters fall outside 1 <= t <= k - r."""


# --------------------------------------------------------------------------
# bit helpers

def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if e < 1:
            raise FamilyError(f"elements are 1-indexed, got {e}")
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


# --------------------------------------------------------------------------
# types

@dataclass(frozen=True)
class Params:
    """The quadruple (n, k, r, t).

    Construction enforces the structural constraints (``r >= 2``, ``t >= 1``,
    ``k <= n <= 128``).  The standing assumption ``t <= k - r`` is reported by
    :attr:`standing` rather than enforced, since several small worked
    examples (e.g. ``k = 2, r = 2, t = 1``) sit just outside it.
    """

    n: int
    k: int
    r: int
    t: int

    def __post_init__(self):
        check_params(self.n, self.k, self.r, self.t)

    @property
    def standing(self) -> bool:
        return 1 <= self.t <= self.k - self.r


def check_params(n: int, k: int, r: int, t: int, *, bounded: bool = True) -> None:
    if r < 2:
        raise FamilyError(f"r must be >= 2, got {r}")
    if t < 1:
        raise FamilyError(f"t must be >= 1, got {t}")
    if k < 1 or k > n:
        raise FamilyError(f"need 1 <= k <= n, got k={k}, n={n}")
    if bounded and n > MAX_N:
        raise FamilyError(f"n={n} exceeds the supported width {MAX_N}")


@dataclass(frozen=True)
class Family:
    """A k-uniform family on [n], members in canonical (ascending mask) order."""

    n: int
    k: int
    members: tuple[int, ...] = field(default=())

    def __post_init__(self):
        if not 1 <= self.n <= MAX_N:
            raise FamilyError(f"n must lie in [1, {MAX_N}], got {self.n}")
        if not 0 <= self.k <= self.n:
            raise FamilyError(f"need 0 <= k <= n, got k={self.k}, n={self.n}")
        ms = sorted(int(m) for m in self.members)
        top = full_mask(self.n)
        for a, b in zip(ms, ms[1:]):
            if a == b:
                raise FamilyError(f"duplicate member {list(elements_of(a))}")
        for m in ms:
            if m & ~top or m < 0:
                raise FamilyError(f"member {list(elements_of(m))} leaves [1, {self.n}]")
            if m.bit_count() != self.k:
                raise FamilyError(f"member {list(elements_of(m))} does not have size {self.k}")
        object.__setattr__(self, "members", tuple(ms))

    @classmethod
    def from_sets(cls, n: int, k: int, sets: Iterable[Iterable[int]]) -> "Family":
        return cls(n, k, tuple(mask_of(s) for s in sets))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in self._member_set

    @property
    def _member_set(self) -> frozenset[int]:
        cached = self.__dict__.get("_ms")
        if cached is None:
            cached = frozenset(self.members)
            object.__setattr__(self, "_ms", cached)
        return cached

    def sets(self) -> list[tuple[int, ...]]:
        return [elements_of(m) for m in self.members]

    def support(self) -> int:
        return reduce(lambda a, b: a | b, self.members, 0)

    def common(self) -> int:
        """Intersection of all members (``[n]`` for the empty family)."""
        return reduce(lambda a, b: a & b, self.members, full_mask(self.n))

    def union(self, other: "Family | Iterable[int]") -> "Family":
        extra = other.members if isinstance(other, Family) else tuple(other)
        return Family(self.n, self.k, tuple(set(self.members) | set(extra)))

    def issubset(self, other: "Family") -> bool:
        return self._member_set <= other._member_set

    def relabel(self, perm: Sequence[int]) -> "Family":
        """Apply the permutation ``i -> perm[i - 1]`` of [n] to every member."""
        if sorted(perm) != list(range(1, self.n + 1)):
            raise FamilyError("perm must be a permutation of 1..n")
        return Family(self.n, self.k, tuple(relabel_mask(m, perm) for m in self.members))

    def incidence(self) -> np.ndarray:
        """Members x elements 0/1 matrix (float32, exact for these sizes)."""
        out = np.zeros((len(self.members), self.n), dtype=np.float32)
        for row, m in enumerate(self.members):
            out[row, [e - 1 for e in elements_of(m)]] = 1.0
        return out

    def __repr__(self) -> str:
        body = ", ".join("".join(map(str, s)) if self.n < 10 else str(list(s)) for s in self.sets()[:8])
        more = ", ..." if len(self) > 8 else ""
        return f"Family(n={self.n}, k={self.k}, |F|={len(self)}: {{{body}{more}}})"


def relabel_mask(mask: int, perm: Sequence[int]) -> int:
    out = 0
    for e in elements_of(mask):
        out |= 1 << (perm[e - 1] - 1)
    return out


# --------------------------------------------------------------------------
# predicates

def intersect_size(sets: Sequence[int]) -> int:
    """``|S_1 & ... & S_j|`` for a nonempty list of masks."""
    if not sets:
        raise FamilyError("intersect_size needs at least one set")
    return reduce(lambda a, b: a & b, sets).bit_count()


def _check_rt(r: int, t: int) -> None:
    if r < 2:
        raise FamilyError(f"r must be >= 2, got {r}")
    if t < 1:
        raise FamilyError(f"t must be >= 1, got {t}")


def is_r_wise_t_intersecting(fam: Family, r: int, t: int) -> bool:
    """Every r members, repetition allowed, share at least t elements.

    Repetition makes every subfamily of at most r distinct members binding,
    so a single member needs ``k >= t``.
    """
    _check_rt(r, t)
    if not fam.members:
        return True
    if fam.k < t:
        return False
    if fam.common().bit_count() >= t:
        return True
    if r == 2 and len(fam) > 64:
        b = fam.incidence()
        return bool((b @ b.T).min() >= t)
    levels = IntersectionLevels(r - 1, fam.n)
    for f in fam.members:
        if levels.min_meet(f, r - 1) < t:
            return False
        for new in levels.push(f)[1:]:
            if any(x.bit_count() < t for x in new):
                return False
    return True


class IntersectionLevels:
    """Distinct intersections of j distinct members, for j = 1 .. depth.

    ``push(f)`` records a new member and returns, per level, the masks that
    appeared for the first time.  Families on at most 64 elements are
    handled with numpy uint64 arrays.
    """

    def __init__(self, depth: int, n: int):
        self.depth = depth
        self.sets: list[set[int]] = [set() for _ in range(depth)]
        self.vector = n <= 64
        self.arrays: list[np.ndarray] = [np.zeros(0, dtype=np.uint64) for _ in range(depth)]

    def _meet(self, f: int, j: int) -> set[int]:
        """Distinct masks ``M & f`` over M at level j (1-based)."""
        if self.vector:
            arr = self.arrays[j - 1]
            if arr.size == 0:
                return set()
            return set(np.unique(arr & np.uint64(f)).tolist())
        return {m & f for m in self.sets[j - 1]}

    def min_meet(self, f: int, j: int) -> int:
        """Smallest ``|M & f|`` over M at level j; large when the level is empty."""
        if self.vector:
            arr = self.arrays[j - 1]
            if arr.size == 0:
                return MAX_N + 1
            return int(np.bitwise_count(arr & np.uint64(f)).min())
        return min(((m & f).bit_count() for m in self.sets[j - 1]), default=MAX_N + 1)

    def push(self, f: int) -> list[set[int]]:
        fresh: list[set[int]] = [set() for _ in range(self.depth)]
        for j in range(self.depth, 1, -1):
            fresh[j - 1] = self._meet(f, j - 1) - self.sets[j - 1]
        if f not in self.sets[0]:
            fresh[0] = {f}
        for j in range(self.depth):
            if fresh[j]:
                self.sets[j] |= fresh[j]
                if self.vector:
                    add = np.fromiter(fresh[j], dtype=np.uint64, count=len(fresh[j]))
                    self.arrays[j] = np.concatenate([self.arrays[j], add])
        return fresh


def is_triangle(sets: Sequence[int], r: int, t: int) -> bool:
    """The r + 1 distinct sets are r-wise t-intersecting yet share < t elements."""
    _check_rt(r, t)
    if len(sets) != r + 1:
        raise FamilyError(f"a triangle has exactly r + 1 = {r + 1} sets, got {len(sets)}")
    if len(set(sets)) != len(sets):
        raise FamilyError("triangle sets must be distinct")
    if intersect_size(sets) > t - 1:
        return False
    return all(intersect_size(sub) >= t for sub in combinations(sets, r))


def is_trivial(fam: Family, t: int) -> bool:
    """Some t-set lies in every member."""
    return fam.common().bit_count() >= t


def count_triangles(fam: Family, r: int, t: int, *, force: bool = False) -> int:
    """Number of (r+1, t)-triangles in ``fam``.

    The count is only defined for r-wise t-intersecting families; anything
    else raises :class:`NotIntersectingError` unless ``force`` is set.
    """
    _check_rt(r, t)
    if not force and not is_r_wise_t_intersecting(fam, r, t):
        raise NotIntersectingError(f"family is not {r}-wise {t}-intersecting")
    return _count(fam, r, t, checked=not force)


def _count(fam: Family, r: int, t: int, checked: bool) -> int:
    members = fam.members
    m = len(members)
    if m < r + 1 or fam.common().bit_count() >= t:
        return 0
    if not checked:
        return sum(1 for _ in _iter_forced(members, r, t))
    if fam.n <= ZETA_MAX_N:
        return comb(m, r + 1) - _count_meeting(fam, r + 1, t)
    # every r-subset already meets in >= t elements: only the full
    # (r+1)-fold intersection matters.  Fix r - 1 members, then count the
    # closing pairs with one matrix product.
    inc = fam.incidence()
    total = 0

    def close(start: int, running: int) -> int:
        sub = inc[start:]
        if sub.shape[0] < 2:
            return 0
        cols = [e - 1 for e in elements_of(running)]
        sizes = sub[:, cols] @ sub[:, cols].T
        upper = np.triu(sizes <= t - 1, k=1)
        return int(upper.sum())

    def walk(start: int, depth: int, running: int) -> None:
        nonlocal total
        if depth == r - 1:
            total += close(start, running)
            return
        for i in range(start, m - (r - depth)):
            walk(i + 1, depth + 1, running & members[i])

    walk(0, 0, full_mask(fam.n))
    return total


def _count_meeting(fam: Family, size: int, t: int) -> int:
    """Subfamilies of ``size`` members whose common part has >= t elements.

    With d(T) the number of members containing T, a subfamily with common
    part I is counted once by ``sum_{t <= |T|, T <= I} (-1)^(|T|-t) C(|T|-1, t-1)``,
    so the total is that weighted sum of C(d(T), size) over all T.
    """
    n = fam.n
    deg = np.zeros(1 << n, dtype=np.int64)
    deg[list(fam.members)] = 1
    for bit in range(n):
        # superset sums: d(T) += d(T | bit) for T without bit
        view = deg.reshape(-1, 2, 1 << bit)
        view[:, 0, :] += view[:, 1, :]
    weights = np.bitwise_count(np.arange(1 << n, dtype=np.uint64)).astype(np.int64)
    keep = (deg >= size) & (weights >= t)
    pairs, mult = np.unique(np.stack([weights[keep], deg[keep]]), axis=1, return_counts=True)
    total = 0
    for (j, d), c in zip(pairs.T.tolist(), mult.tolist()):
        total += (-1) ** (j - t) * comb(j - 1, t - 1) * comb(d, size) * c
    return total


def _iter_forced(members: Sequence[int], r: int, t: int) -> Iterator[tuple[int, ...]]:
    # prefixes of size <= r whose intersection drops below t cannot extend
    m = len(members)

    def walk(start: int, chosen: list[int], running: int):
        if len(chosen) == r + 1:
            if is_triangle(chosen, r, t):
                yield tuple(chosen)
            return
        for i in range(start, m):
            nxt = running & members[i]
            if len(chosen) + 1 <= r and nxt.bit_count() < t:
                continue
            chosen.append(members[i])
            yield from walk(i + 1, chosen, nxt)
            chosen.pop()

    yield from walk(0, [], -1)


def iter_triangles(fam: Family, r: int, t: int, *, force: bool = False) -> Iterator[tuple[int, ...]]:
    """Yield each triangle as a tuple of masks, in canonical order."""
    _check_rt(r, t)
    if not force and not is_r_wise_t_intersecting(fam, r, t):
        raise NotIntersectingError(f"family is not {r}-wise {t}-intersecting")
    yield from _iter_forced(fam.members, r, t)


def is_maximal(fam: Family, r: int, t: int) -> bool:
    """No k-set outside ``fam`` can join while keeping r-wise t-intersection."""
    from .space import Saturator

    if not is_r_wise_t_intersecting(fam, r, t):
        raise NotIntersectingError(f"family is not {r}-wise {t}-intersecting")
    sat = Saturator(fam.n, fam.k, r, t, fam.members)
    return sat.next_candidate(0) is None


def saturate(fam: Family, r: int, t: int) -> Family:
    """Greedy maximal extension, scanning candidates in canonical order."""
    from .space import Saturator

    if not is_r_wise_t_intersecting(fam, r, t):
        raise NotIntersectingError(f"family is not {r}-wise {t}-intersecting")
    sat = Saturator(fam.n, fam.k, r, t, fam.members)
    sat.fill()
    return sat.family()


def warn_standing(k: int, r: int, t: int) -> None:
    if not 1 <= t <= k - r:
        warnings.warn(
            f"(k, r, t) = ({k}, {r}, {t}) is outside 1 <= t <= k - r",
            StandingAssumptionWarning,
            stacklevel=3,
        )
