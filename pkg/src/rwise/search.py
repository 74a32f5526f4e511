"""Search for triangle-rich maximal families.

Exhaustive mode (r = 2): maximal t-intersecting families are exactly the
maximal cliques of the graph on C([n], k) joining sets that share >= t
elements; cliques are deduplicated up to isomorphism.

Stochastic mode (any r): seed a few random compatible k-sets, saturate
greedily, count triangles; repeat ``budget`` times.
"""
from __future__ import annotations

import os
import random
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator

import networkx as nx

from .canon import CanonicalFormError, canonical_form, fingerprint
from .family import Family, FamilyError, _count, check_params, is_trivial, mask_of
from .formulas import exact_count_G
from .space import Saturator, kset_space

MAX_EXHAUSTIVE_VERTICES = 200
WORKERS_ENV = "RWISE_WORKERS"


class InexactDedupWarning(UserWarning):
    """Fell back to a fingerprint; isomorphism classes may be over-merged."""


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def class_key(fam: Family) -> tuple[bool, object]:
    """(exact, key): canonical form when feasible, else the fingerprint."""
    try:
        return True, canonical_form(fam)
    except CanonicalFormError:
        return False, fingerprint(fam)


def enumerate_maximal_r2(n: int, k: int, t: int) -> Iterator[Family]:
    """One representative per isomorphism class of maximal t-intersecting families."""
    if comb(n, k) > MAX_EXHAUSTIVE_VERTICES:
        raise FamilyError(f"C({n}, {k}) = {comb(n, k)} exceeds the exhaustive cap {MAX_EXHAUSTIVE_VERTICES}")
    if not 1 <= k <= n or t < 1:
        raise FamilyError(f"bad parameters n={n}, k={k}, t={t}")
    if k < t:
        return
    vertices = [mask_of(c) for c in combinations(range(1, n + 1), k)]
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from((a, b) for a, b in combinations(vertices, 2) if (a & b).bit_count() >= t)
    seen: set = set()
    warned = False
    for clique in nx.find_cliques(graph):
        fam = Family(n, k, tuple(clique))
        exact, key = class_key(fam)
        if not exact and not warned:
            warnings.warn("support above the exact canonicalization limit; using fingerprints",
                          InexactDedupWarning, stacklevel=2)
            warned = True
        if key in seen:
            continue
        seen.add(key)
        yield fam


@dataclass
class SearchReport:
    mode: str
    n: int
    k: int
    r: int
    t: int
    seed: int | None
    budget: int | None
    best_count: int = 0
    best_family: Family | None = None
    families_examined: int = 0
    complete: bool = False
    reference_count: int | None = None
    trivial_families: int = 0
    trivial_shortcuts: int = 0
    exact_dedup: bool = True
    classes: list[dict] = field(default_factory=list)

    @property
    def exceeded(self) -> bool:
        return self.reference_count is not None and self.best_count > self.reference_count

    def to_dict(self) -> dict:
        fam = self.best_family
        return {
            "mode": self.mode,
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "t": self.t,
            "seed": self.seed,
            "budget": self.budget,
            "complete": self.complete,
            "families_examined": self.families_examined,
            "best_count": self.best_count,
            "reference_count": self.reference_count,
            "exceeded": self.exceeded,
            "trivial_families": self.trivial_families,
            "trivial_shortcuts": self.trivial_shortcuts,
            "exact_dedup": self.exact_dedup,
            "best_family": None if fam is None else [list(s) for s in fam.sets()],
            "classes": self.classes,
        }


def _better(count: int, fam: Family, best_count: int, best: Family | None) -> bool:
    if best is None or count > best_count:
        return True
    return count == best_count and fam.members < best.members


def triangle_count_shortcut(fam: Family, r: int, t: int) -> tuple[int, bool]:
    """(count, shortcut_fired); trivial families are answered without enumeration."""
    if is_trivial(fam, t):
        return 0, True
    return _count(fam, r, t, checked=True), False


def exhaustive_search(n: int, k: int, t: int) -> SearchReport:
    report = SearchReport("exhaustive", n, k, 2, t, None, None, complete=True)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always", InexactDedupWarning)
        families = list(enumerate_maximal_r2(n, k, t))
    report.exact_dedup = not any(issubclass(w.category, InexactDedupWarning) for w in caught)
    if k >= 2 + t - 1 and n >= 2 + t:
        report.reference_count = exact_count_G(n, k, 2, t)
    for fam in families:
        count, fired = triangle_count_shortcut(fam, 2, t)
        report.families_examined += 1
        if fired:
            report.trivial_families += 1
            report.trivial_shortcuts += 1
        report.classes.append({"size": len(fam), "triangles": count, "trivial": fired,
                               "family": [list(s) for s in fam.sets()]})
        if _better(count, fam, report.best_count, report.best_family):
            report.best_count, report.best_family = count, fam
    report.classes.sort(key=lambda c: (-c["triangles"], c["size"], c["family"]))
    return report


def _random_seed_family(sat: Saturator, rng: random.Random, size: int) -> None:
    for _ in range(size):
        pool = sat.compatible_indices()
        if pool.size == 0:
            return
        idx = int(pool[rng.randrange(pool.size)])
        sat.add(sat.space.masks[idx])


def _stochastic_worker(n: int, k: int, r: int, t: int, seed: int, budget: int) -> SearchReport:
    report = SearchReport("stochastic", n, k, r, t, seed, budget)
    if budget <= 0:
        return report
    kset_space(n, k)
    rng = random.Random(seed)
    for _ in range(budget):
        sat = Saturator(n, k, r, t)
        _random_seed_family(sat, rng, rng.randint(1, r + 2))
        sat.fill()
        fam = sat.family()
        count, fired = triangle_count_shortcut(fam, r, t)
        report.families_examined += 1
        if is_trivial(fam, t):
            report.trivial_families += 1
        report.trivial_shortcuts += fired
        if _better(count, fam, report.best_count, report.best_family):
            report.best_count, report.best_family = count, fam
    return report


def stochastic_search(n: int, k: int, r: int, t: int, seed: int = 0, budget: int = 100,
                      workers: int | None = None) -> SearchReport:
    """Best triangle count over ``budget`` random saturations.

    Deterministic for fixed (seed, budget) with one worker.  With several
    workers the budget is split and worker ``i`` uses seed ``seed * 1000003 + i``.
    """
    check_params(n, k, r, t)
    workers = default_workers() if workers is None else max(1, workers)
    if budget <= 0:
        report = SearchReport("stochastic", n, k, r, t, seed, budget)
    elif workers == 1:
        report = _stochastic_worker(n, k, r, t, seed, budget)
    else:
        shares = [budget // workers + (i < budget % workers) for i in range(workers)]
        jobs = [(n, k, r, t, seed * 1000003 + i, share) for i, share in enumerate(shares) if share]
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            parts = list(pool.map(_run_job, jobs))
        report = SearchReport("stochastic", n, k, r, t, seed, budget)
        for part in parts:
            report.families_examined += part.families_examined
            report.trivial_families += part.trivial_families
            report.trivial_shortcuts += part.trivial_shortcuts
            if part.best_family is not None and _better(part.best_count, part.best_family,
                                                         report.best_count, report.best_family):
                report.best_count, report.best_family = part.best_count, part.best_family
    if n >= r + t and k >= r + t - 1:
        report.reference_count = exact_count_G(n, k, r, t)
    return report


def _run_job(args: tuple) -> SearchReport:
    return _stochastic_worker(*args)
