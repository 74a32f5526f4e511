import json
from itertools import combinations

import pytest

from oracles import all_ksets, maximal
from rwise.canon import canonical_form
from rwise.constructions import build_Gprime
from rwise.family import Family, FamilyError, count_triangles
from rwise.formulas import exact_count_G
from rwise.search import (enumerate_maximal_r2, exhaustive_search, stochastic_search,
                          triangle_count_shortcut)


def brute_maximal_classes(n, k, t):
    """Every maximal t-intersecting family by walking all subfamilies."""
    pool = all_ksets(n, k)
    found = set()
    for size in range(1, len(pool) + 1):
        for combo in combinations(pool, size):
            if all((a & b).bit_count() >= t for a, b in combinations(combo, 2)):
                fam = Family(n, k, combo)
                if maximal(fam, 2, t):
                    found.add(canonical_form(fam))
    return found


@pytest.mark.parametrize("n, k, t", [(5, 2, 1), (4, 3, 2), (4, 2, 1)])
def test_enumeration_matches_subset_lattice(n, k, t):
    got = {canonical_form(f) for f in enumerate_maximal_r2(n, k, t)}
    assert got == brute_maximal_classes(n, k, t)


@pytest.mark.filterwarnings("ignore::rwise.search.InexactDedupWarning")
def test_k2_classes():
    for n in (5, 8, 16):
        fams = list(enumerate_maximal_r2(n, 2, 1))
        assert sorted(len(f) for f in fams) == sorted([3, n - 1])


def test_enumeration_cap():
    with pytest.raises(FamilyError):
        list(enumerate_maximal_r2(12, 3, 1))


def test_exhaustive_report():
    rep = exhaustive_search(5, 2, 1)
    assert len(rep.classes) == 2 and rep.best_count == 1 and rep.complete
    assert canonical_form(rep.best_family) == canonical_form(build_Gprime(5, 2, 2, 1))
    assert rep.trivial_shortcuts == 1


def test_shortcut():
    star = Family.from_sets(6, 2, [(1, j) for j in range(2, 7)])
    assert triangle_count_shortcut(star, 2, 1) == (0, True)
    tri = Family.from_sets(6, 2, [(1, 2), (1, 3), (2, 3)])
    assert triangle_count_shortcut(tri, 2, 1) == (1, False)


def test_stochastic_small():
    for seed in (0, 3):
        rep = stochastic_search(5, 2, 2, 1, seed=seed, budget=10)
        assert rep.best_count == 1 and rep.families_examined == 10


def test_stochastic_budget_zero():
    rep = stochastic_search(8, 3, 2, 1, budget=0)
    assert rep.families_examined == 0 and rep.best_family is None and not rep.complete


def test_stochastic_best_is_counted_correctly():
    rep = stochastic_search(8, 4, 3, 1, seed=2, budget=15)
    assert count_triangles(rep.best_family, 3, 1) == rep.best_count
    assert rep.best_count <= exact_count_G(8, 4, 3, 1) or rep.exceeded


def test_stochastic_deterministic():
    a = stochastic_search(9, 4, 2, 1, seed=5, budget=8, workers=1)
    b = stochastic_search(9, 4, 2, 1, seed=5, budget=8, workers=1)
    assert json.dumps(a.to_dict()) == json.dumps(b.to_dict())


def test_worker_env(monkeypatch):
    from rwise.search import default_workers
    monkeypatch.setenv("RWISE_WORKERS", "3")
    assert default_workers() == 3
    monkeypatch.setenv("RWISE_WORKERS", "junk")
    assert default_workers() == 1


def test_parallel_workers_merge():
    rep = stochastic_search(7, 3, 2, 1, seed=1, budget=6, workers=2)
    assert rep.families_examined == 6
    assert rep.best_count == count_triangles(rep.best_family, 2, 1)
