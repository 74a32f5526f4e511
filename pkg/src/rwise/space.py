"""The candidate space C([n], k) and incremental compatibility tracking.

Candidates are indexed in canonical order (ascending bit-vector value, i.e.
colex).  For each ground element the space keeps a packed bit row marking the
candidates that contain it; "does candidate G meet mask M in >= t elements"
for all G at once is then a handful of bytewise ops on those rows.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .family import Family, FamilyError, IntersectionLevels, elements_of

MAX_CANDIDATES = 3_000_000


class KSetSpace:
    """All k-subsets of [n] in canonical order."""

    def __init__(self, n: int, k: int):
        size = comb(n, k)
        if size > MAX_CANDIDATES:
            raise FamilyError(f"C({n}, {k}) = {size} candidates exceeds the cap {MAX_CANDIDATES}")
        self.n, self.k, self.size = n, k, size
        if k == 0:
            combos = np.zeros((1, 0), dtype=np.int64)
        else:
            combos = np.array(list(combinations(range(n), k)), dtype=np.int64).reshape(-1, k)
        # colex: sort by largest element first, then the next, ...
        order = np.lexsort(combos.T) if k else np.arange(1)
        combos = combos[order]
        self.combos = combos
        self.masks: list[int] = [sum(1 << int(e) for e in row) for row in combos]
        self.index = {m: i for i, m in enumerate(self.masks)}
        contains = np.zeros((n, size), dtype=bool)
        for col in range(k):
            contains[combos[:, col], np.arange(size)] = True
        self.rows = np.packbits(contains, axis=1, bitorder="little")
        self.nbytes = self.rows.shape[1]

    def indices(self, masks: Iterable[int]) -> list[int]:
        try:
            return [self.index[m] for m in masks]
        except KeyError as exc:
            raise FamilyError(f"{list(elements_of(exc.args[0]))} is not a {self.k}-subset of [{self.n}]") from None

    def all_true(self) -> np.ndarray:
        packed = np.full(self.nbytes, 0xFF, dtype=np.uint8)
        tail = self.size % 8
        if tail:
            packed[-1] = (1 << tail) - 1
        return packed

    def meets(self, mask: int, t: int, start_byte: int = 0) -> np.ndarray:
        """Packed flags: candidate shares >= t elements with ``mask``."""
        elems = [e - 1 for e in elements_of(mask)]
        width = self.nbytes - start_byte
        if len(elems) < t:
            return np.zeros(width, dtype=np.uint8)
        rows = self.rows[elems, start_byte:]
        if t == 1:
            return np.bitwise_or.reduce(rows, axis=0)
        # at_least[j]: candidate seen >= j + 1 hits so far
        at_least = [np.zeros(width, dtype=np.uint8) for _ in range(t)]
        for row in rows:
            for j in range(t - 1, 0, -1):
                at_least[j] |= at_least[j - 1] & row
            at_least[0] |= row
        return at_least[t - 1]


@lru_cache(maxsize=16)
def kset_space(n: int, k: int) -> KSetSpace:
    return KSetSpace(n, k)


def _unpack(packed: np.ndarray, size: int) -> np.ndarray:
    return np.unpackbits(packed, bitorder="little")[:size].astype(bool)


class Saturator:
    """Grow an r-wise t-intersecting family one candidate at a time.

    A candidate G may join iff ``|G & M| >= t`` for every intersection M of
    at most r - 1 distinct current members.  Those intersections are kept by
    level and each new one narrows the packed ``compatible`` flags; a flag,
    once cleared, never comes back, so one forward scan saturates.
    """

    def __init__(self, n: int, k: int, r: int, t: int, members: Sequence[int] = ()):
        self.space = kset_space(n, k)
        self.n, self.k, self.r, self.t = n, k, r, t
        self.compatible = self.space.all_true() if k >= t else np.zeros(self.space.nbytes, np.uint8)
        self.levels = IntersectionLevels(r - 1, n)
        self.members: list[int] = []
        for m in members:
            self.add(m)

    def _clear(self, idx: int) -> None:
        self.compatible[idx >> 3] &= np.uint8(0xFF ^ (1 << (idx & 7)))

    def add(self, mask: int) -> None:
        idx = self.space.indices([mask])[0]
        self.members.append(mask)
        self._clear(idx)
        for level in self.levels.push(mask):
            for m in level:
                self.compatible &= self.space.meets(m, self.t)

    def _narrow_from(self, start_byte: int, masks: Iterable[int]) -> None:
        for m in masks:
            self.compatible[start_byte:] &= self.space.meets(m, self.t, start_byte)

    def next_candidate(self, pos: int) -> int | None:
        """Index of the first compatible non-member at or after ``pos``."""
        nb = self.space.nbytes
        b = pos >> 3
        if b >= nb:
            return None
        first = int(self.compatible[b]) & (0xFF << (pos & 7)) & 0xFF
        if first:
            return (b << 3) + ((first & -first).bit_length() - 1)
        rest = self.compatible[b + 1:]
        nz = np.flatnonzero(rest)
        if nz.size == 0:
            return None
        bb = b + 1 + int(nz[0])
        byte = int(self.compatible[bb])
        return (bb << 3) + ((byte & -byte).bit_length() - 1)

    def compatible_indices(self) -> np.ndarray:
        return np.flatnonzero(_unpack(self.compatible, self.space.size))

    def fill(self) -> None:
        """Greedy pass in canonical order until nothing else fits."""
        pos = 0
        masks = self.space.masks
        while True:
            idx = self.next_candidate(pos)
            if idx is None:
                return
            self._add_scanning(masks[idx], idx)
            pos = idx + 1

    def _add_scanning(self, mask: int, idx: int) -> None:
        # as add(), but nothing before idx is looked at again
        self.members.append(mask)
        self._clear(idx)
        for level in self.levels.push(mask):
            self._narrow_from(idx >> 3, level)

    def family(self) -> Family:
        return Family(self.n, self.k, tuple(self.members))
