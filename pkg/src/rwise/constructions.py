"""Builders for the named extremal families.

Notation: ``core = [r + t]``.  G keeps exactly one element of the core out of
every member, G' additionally allows the whole core, and block ``i`` of G is
the part of G missing ``i``.
"""
from __future__ import annotations

import warnings
from itertools import combinations
from math import comb

from .family import Family, FamilyError, check_params, mask_of, warn_standing


class NoGuaranteeWarning(UserWarning):
    """The construction is emitted but its usual guarantee does not apply."""


def _check_builder(n: int, k: int, r: int, t: int) -> None:
    check_params(n, k, r, t)
    if n < r + t:
        raise FamilyError(f"need n >= r + t = {r + t}, got n={n}")
    if k < r + t - 1:
        raise FamilyError(f"need k >= r + t - 1 = {r + t - 1}, got k={k}")
    warn_standing(k, r, t)


def _with_outside(inside: int, first_outside: int, n: int, size: int):
    for extra in combinations(range(first_outside, n + 1), size):
        yield inside | mask_of(extra)


def build_G_block(n: int, k: int, r: int, t: int, i: int) -> Family:
    """Members of G that miss core element ``i``."""
    _check_builder(n, k, r, t)
    core = r + t
    if not 1 <= i <= core:
        raise FamilyError(f"block index must lie in [1, {core}], got {i}")
    inside = mask_of(j for j in range(1, core + 1) if j != i)
    return Family(n, k, tuple(_with_outside(inside, core + 1, n, k - core + 1)))


def build_G(n: int, k: int, r: int, t: int) -> Family:
    """{F : |F & [r+t]| = r + t - 1}; size (r+t) * C(n-r-t, k-r-t+1)."""
    _check_builder(n, k, r, t)
    core = r + t
    members: list[int] = []
    for i in range(1, core + 1):
        inside = mask_of(j for j in range(1, core + 1) if j != i)
        members.extend(_with_outside(inside, core + 1, n, k - core + 1))
    return Family(n, k, tuple(members))


def build_Gprime(n: int, k: int, r: int, t: int) -> Family:
    """{F : |F & [r+t]| >= r + t - 1}."""
    g = build_G(n, k, r, t)
    core = r + t
    whole = list(_with_outside(mask_of(range(1, core + 1)), core + 1, n, k - core)) if k >= core else []
    return Family(n, k, g.members + tuple(whole))


def build_trivial(n: int, k: int, t: int) -> Family:
    """All k-sets containing [t]."""
    if not 1 <= t <= k <= n:
        raise FamilyError(f"need 1 <= t <= k <= n, got t={t}, k={k}, n={n}")
    return Family(n, k, tuple(_with_outside(mask_of(range(1, t + 1)), t + 1, n, k - t)))


def build_frankl(n: int, k: int, t: int, ell: int) -> Family:
    """A t-intersecting family whose minimum t-covers are {[t] + j : t < j <= ell}.

    For ``ell >= t + 3``::

        {F : [t] <= F, F meets [t+1, ell]} + {F : |F & [t]| = t-1, [t+1, ell] <= F}

    For ``ell == t + 2`` that recipe collapses to G'_{2,t}, whose covers form
    the full simplex.  Instead a witness F0 = [t] + X, X = [t+3, k+2], is
    added, and the members missing an element of [t] must also meet X::

        {F : [t] <= F, F meets {t+1, t+2}} + {F0}
          + {F : |F & [t]| = t-1, {t+1, t+2} <= F, F meets X}
    """
    if not 1 <= t <= k <= n:
        raise FamilyError(f"need 1 <= t <= k <= n, got t={t}, k={k}, n={n}")
    if not t + 2 <= ell <= k + 1:
        raise FamilyError(f"need t + 2 <= ell <= k + 1, got ell={ell}")
    if ell > n:
        raise FamilyError(f"need ell <= n, got ell={ell}, n={n}")
    head = mask_of(range(1, t + 1))
    window = mask_of(range(t + 1, ell + 1))
    members: set[int] = set()
    for rest in combinations(range(t + 1, n + 1), k - t):
        m = mask_of(rest)
        if m & window:
            members.add(head | m)
    if ell >= t + 3:
        for a in range(1, t + 1):
            base = (head & ~(1 << (a - 1))) | window
            members.update(_with_outside(base, ell + 1, n, k - ell + 1))
        return Family(n, k, tuple(members))
    if n < k + 2 or k - t < 2:
        raise FamilyError("the ell = t + 2 family needs n >= k + 2 and k >= t + 2")
    x = mask_of(range(t + 3, k + 3))
    members.add(head | x)
    for a in range(1, t + 1):
        base = (head & ~(1 << (a - 1))) | window
        for m in _with_outside(base, t + 3, n, k - t - 1):
            if m & x:
                members.add(m)
    return Family(n, k, tuple(members))


def frankl_size(n: int, k: int, t: int, ell: int) -> int:
    """Closed-form member count of :func:`build_frankl`."""
    starred = comb(n - t, k - t) - comb(n - ell, k - t)
    if ell >= t + 3:
        return starred + t * comb(n - ell, k - ell + 1)
    return starred + 1 + t * (comb(n - t - 2, k - t - 1) - comb(n - k - 2, k - t - 1))


def build_two_block(n: int, k: int, r: int, t: int) -> Family:
    """k-sets meeting both [r+t] and [r+t+1, 2r+2t] in >= r + t - 1 elements."""
    check_params(n, k, r, t)
    core = r + t
    if n < 2 * core:
        raise FamilyError(f"need n >= 2(r + t) = {2 * core}, got n={n}")
    if k < 2 * core - 2:
        raise FamilyError(f"need k >= 2(r + t) - 2 = {2 * core - 2}, got k={k}")
    if t < 2:
        warnings.warn("t = 1: two-block family carries no zero-triangle guarantee", NoGuaranteeWarning, stacklevel=2)
    first = range(1, core + 1)
    second = range(core + 1, 2 * core + 1)
    members: list[int] = []
    for a in (core - 1, core):
        for b in (core - 1, core):
            if a + b > k:
                continue
            for left in combinations(first, a):
                for right in combinations(second, b):
                    members.extend(_with_outside(mask_of(left + right), 2 * core + 1, n, k - a - b))
    return Family(n, k, tuple(members))
