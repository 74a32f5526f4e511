import random

from rwise.covers import covering_number
from rwise.family import is_maximal, is_r_wise_t_intersecting
from rwise.verify import SUITES, random_rwise_family, run_suite


def test_sampler_produces_maximal_families():
    rng = random.Random(11)
    taus = set()
    for _ in range(20):
        fam, r, t = random_rwise_family(rng)
        assert is_r_wise_t_intersecting(fam, r, t) and is_maximal(fam, r, t)
        taus.add(covering_number(fam, t) - t)
    assert {0, 1} <= taus


def test_small_suites_pass():
    for name in ("oracle", "lemma21", "lemma24", "lemma47"):
        (res,) = run_suite(name, max_n=7, max_k=4)
        assert res.ok, res.failures


def test_pairwise_floor_suite_seed7():
    (res,) = run_suite("lemma41", seed=7, samples=60)
    assert res.ok and res.passed == 60


def test_all_lists_every_suite():
    assert len(SUITES) == 7
