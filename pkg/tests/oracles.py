"""Slow, obviously-correct reference implementations used only by tests."""
from itertools import combinations

from rwise.family import Family, mask_of


def all_ksets(n, k):
    return [mask_of(c) for c in combinations(range(1, n + 1), k)]


def meet(sets):
    out = sets[0]
    for s in sets[1:]:
        out &= s
    return out


def rwise(members, r, t):
    # with repetition allowed, checking every j <= r distinct members suffices
    ms = list(members)
    for j in range(1, min(r, len(ms)) + 1):
        for combo in combinations(ms, j):
            if meet(combo).bit_count() < t:
                return False
    return True


def triangles(members, r, t):
    out = []
    for combo in combinations(sorted(members), r + 1):
        if meet(combo).bit_count() <= t - 1 and all(meet(sub).bit_count() >= t for sub in combinations(combo, r)):
            out.append(combo)
    return out


def maximal(fam: Family, r, t):
    return rwise(fam.members, r, t) and all(
        not rwise(fam.members + (g,), r, t) for g in all_ksets(fam.n, fam.k) if g not in fam)


def covering_number(fam: Family, t):
    for size in range(fam.n + 1):
        for c in combinations(range(1, fam.n + 1), size):
            m = mask_of(c)
            if all((m & f).bit_count() >= t for f in fam.members):
                return size


def min_covers(fam: Family, t):
    tau = covering_number(fam, t)
    return sorted(mask_of(c) for c in combinations(range(1, fam.n + 1), tau)
                  if all((mask_of(c) & f).bit_count() >= t for f in fam.members))


def greedy_saturate(fam: Family, r, t):
    members = list(fam.members)
    for g in sorted(all_ksets(fam.n, fam.k)):
        if g not in members and rwise(members + [g], r, t):
            members.append(g)
    return Family(fam.n, fam.k, tuple(members))
