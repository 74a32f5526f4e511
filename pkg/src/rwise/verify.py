"""Named verification suites.

Each suite runs a batch of exact checks and stops recording detail after the
first failure, which is kept as a JSON-ready counterexample.
"""
from __future__ import annotations

import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

from .constructions import build_G, build_Gprime, build_frankl, build_two_block
from .covers import CoverCase, classify_cover_family, covering_number
from .family import Family, count_triangles, is_triangle, mask_of, saturate
from .formulas import exact_count_G, intersection_floor, lower_bound_L21, size_bounds_L24
from .hypergraph import Verdict, build_cover_hypergraph, decompose, verdict_consequence
from .io import family_to_dict
from .space import Saturator

SUITES = ("oracle", "lemma21", "lemma23", "lemma24", "lemma41", "lemma47", "hypergraph")


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    counterexample: dict | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def record(self, ok: bool, what: str, payload: dict | None = None) -> None:
        if ok:
            self.passed += 1
            return
        self.failed += 1
        self.failures.append(what)
        if self.counterexample is None:
            self.counterexample = {"suite": self.name, "check": what, **(payload or {})}


def naive_triangles(fam: Family, r: int, t: int) -> int:
    return sum(1 for combo in combinations(fam.members, r + 1) if is_triangle(combo, r, t))


def brute_covering_number(fam: Family, t: int) -> int:
    for size in range(0, fam.n + 1):
        for combo in combinations(range(1, fam.n + 1), size):
            m = mask_of(combo)
            if all((m & f).bit_count() >= t for f in fam.members):
                return size
    raise ValueError("no cover")


def grid(max_n: int, max_k: int, rs=(2, 3)):
    """(n, k, r, t) with r + t <= n <= max_n, k <= min(n, max_k), 1 <= t <= k - r."""
    for r in rs:
        for k in range(1, max_k + 1):
            for t in range(1, k - r + 1):
                for n in range(max(k, r + t), max_n + 1):
                    yield n, k, r, t


def suite_oracle(max_n: int = 9, max_k: int = 5, naive_cap: int = 40, **_) -> SuiteResult:
    res = SuiteResult("oracle")
    for n, k, r, t in grid(max_n, max_k):
        g, gp = build_G(n, k, r, t), build_Gprime(n, k, r, t)
        closed = exact_count_G(n, k, r, t)
        got = count_triangles(g, r, t)
        params = {"n": n, "k": k, "r": r, "t": t}
        res.record(closed == got, f"exact_count_G{tuple(params.values())}",
                   {**params, "closed_form": closed, "counted": got})
        res.record(count_triangles(gp, r, t) == got, f"G' = G count at {tuple(params.values())}", params)
        if len(g) <= naive_cap:
            res.record(naive_triangles(g, r, t) == got, f"naive scan at {tuple(params.values())}", params)
    return res


LEMMA21_POINTS = ((2, 1, 3), (2, 2, 4), (3, 1, 4), (3, 2, 5))


def suite_lemma21(**_) -> SuiteResult:
    res = SuiteResult("lemma21")
    for r, t, k in LEMMA21_POINTS:
        n = k**4
        exact, bound = exact_count_G(n, k, r, t), lower_bound_L21(n, k, r, t)
        res.record(Fraction(exact) >= bound, f"N(G) >= bound at n={n}, k={k}, r={r}, t={t}",
                   {"n": n, "k": k, "r": r, "t": t, "exact": str(exact), "bound": str(bound)})
    return res


FRANKL_POINTS = ((12, 4, 1), (12, 4, 2), (12, 5, 2))


def random_family(rng: random.Random, max_n: int = 10) -> Family:
    n = rng.randint(3, max_n)
    k = rng.randint(1, min(n, 5))
    pool = [mask_of(c) for c in combinations(range(1, n + 1), k)]
    size = rng.randint(1, min(len(pool), 12))
    return Family(n, k, tuple(rng.sample(pool, size)))


def suite_lemma23(seed: int = 0, samples: int = 200, **_) -> SuiteResult:
    res = SuiteResult("lemma23")
    rng = random.Random(seed)
    for _ in range(samples):
        fam = random_family(rng)
        t = rng.randint(1, fam.k)
        fast, brute = covering_number(fam, t), brute_covering_number(fam, t)
        res.record(fast == brute, "covering number vs brute force",
                   {"family": family_to_dict(fam, t=t), "fast": fast, "brute": brute})
    for n, k, t in FRANKL_POINTS:
        for ell in range(t + 2, k + 2):
            fam = saturate(build_frankl(n, k, t, ell), 2, t)
            rep = classify_cover_family(fam, t)
            want = CoverCase.CASE2 if ell == t + 2 else CoverCase.CASE3
            ok = rep.classification is want and (want is CoverCase.CASE2 or rep.ell == ell)
            res.record(ok, f"frankl({n},{k},{t},{ell}) -> {rep.label}",
                       {"n": n, "k": k, "t": t, "ell": ell, "got": rep.label})
    gp = build_Gprime(8, 4, 2, 2)
    rep = classify_cover_family(gp, 2)
    res.record(rep.classification is CoverCase.FULL_SIMPLEX, f"G'(8,4,2,2) -> {rep.label}", {"got": rep.label})
    return res


def suite_lemma24(**_) -> SuiteResult:
    res = SuiteResult("lemma24")
    n, k, t = 81, 3, 1
    for ell, case in ((3, 2), (4, 3)):
        fam = saturate(build_frankl(n, k, t, ell), 2, t)
        bound = size_bounds_L24(n, k, t, case)
        res.record(len(fam) <= bound, f"|frankl({n},{k},{t},{ell})| = {len(fam)} <= {bound}",
                   {"ell": ell, "case": case, "size": len(fam), "bound": str(bound)})
    return res


def random_rwise_family(rng: random.Random, max_n: int = 14, rs=(3, 4)) -> tuple[Family, int, int]:
    """A saturated r-wise t-intersecting family from a random seed.

    Half the seeds are random subfamilies of G_{r,t}, so that families with
    tau_t = t + 1 show up, not only trivial ones.
    """
    r = rng.choice(rs)
    t = rng.randint(1, 2)
    n = rng.randint(r + t + 2, max(max_n, r + t + 2))
    k = rng.randint(r + t, min(n - 2, r + t + 2))
    sat = Saturator(n, k, r, t)
    if rng.random() < 0.5:
        g = build_G(n, k, r, t).members
        for m in rng.sample(g, rng.randint(1, min(len(g), 2 * (r + t)))):
            if sat.space.index[m] in set(sat.compatible_indices().tolist()):
                sat.add(m)
    else:
        for _ in range(rng.randint(1, r + 2)):
            pool = sat.compatible_indices()
            if pool.size == 0:
                break
            sat.add(sat.space.masks[int(pool[rng.randrange(pool.size)])])
    sat.fill()
    return sat.family(), r, t


def min_pairwise(fam: Family) -> int:
    if len(fam) < 2:
        return fam.k
    inc = fam.incidence()
    gram = inc @ inc.T
    gram[range(len(fam)), range(len(fam))] = fam.n + 1
    return int(gram.min())


def suite_lemma41(seed: int = 0, samples: int = 1000, max_n: int = 14, **_) -> SuiteResult:
    res = SuiteResult("lemma41")
    rng = random.Random(seed)
    for _ in range(samples):
        fam, r, t = random_rwise_family(rng, max_n)
        s = covering_number(fam, t)
        floor = intersection_floor(r, s, t)
        low = min_pairwise(fam)
        res.record(low >= floor, f"pairwise >= (r-2)(s-t)+t with r={r}, t={t}, s={s}",
                   {"family": family_to_dict(fam, r, t), "tau": s, "floor": floor, "min_pairwise": low})
    return res


TWO_BLOCK_POINTS = ((10, 7, 2, 2), (12, 9, 3, 2), (12, 8, 2, 3))


def suite_lemma47(**_) -> SuiteResult:
    res = SuiteResult("lemma47")
    for n, k, r, t in TWO_BLOCK_POINTS:
        fam = build_two_block(n, k, r, t)
        count = count_triangles(fam, r, t)
        res.record(count == 0, f"two_block{(n, k, r, t)} has {count} triangles", {"n": n, "k": k, "r": r, "t": t})
        with warnings.catch_warnings():
            # blocks meet in fewer than t vertices, which the builder reports
            warnings.simplefilter("ignore")
            rep = decompose(build_cover_hypergraph(fam, t), r)
        res.record(rep.verdict is Verdict.MULTI_CLIQUE, f"two_block{(n, k, r, t)} verdict {rep.verdict}",
                   {"n": n, "k": k, "r": r, "t": t})
        if rep.verdict is Verdict.MULTI_CLIQUE:
            res.record(bool(verdict_consequence(rep.verdict, r, t, rep).check(fam)),
                       f"two_block{(n, k, r, t)} claim", {"n": n, "k": k, "r": r, "t": t})
    return res


def suite_hypergraph(max_n: int = 9, max_k: int = 5, **_) -> SuiteResult:
    res = SuiteResult("hypergraph")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        for n, k, r, t in grid(max_n, max_k):
            if not len(build_G(n, k, r, t)):
                continue
            gp = build_Gprime(n, k, r, t)
            rep = decompose(build_cover_hypergraph(gp, t), r)
            orders = [c.order for c in rep.components]
            ok = rep.verdict is Verdict.SINGLE_CLIQUE and orders == [r + t]
            res.record(ok, f"G'{(n, k, r, t)}: {rep.verdict and rep.verdict.value} orders {orders}",
                       {"n": n, "k": k, "r": r, "t": t, "orders": orders,
                        "verdict": rep.verdict and rep.verdict.value})
        for n, k, r, t in TWO_BLOCK_POINTS:
            rep = decompose(build_cover_hypergraph(build_two_block(n, k, r, t), t), r)
            res.record(rep.verdict is Verdict.MULTI_CLIQUE, f"two_block{(n, k, r, t)}: {rep.verdict}",
                       {"n": n, "k": k, "r": r, "t": t})
    return res


RUNNERS: dict[str, Callable[..., SuiteResult]] = {
    "oracle": suite_oracle,
    "lemma21": suite_lemma21,
    "lemma23": suite_lemma23,
    "lemma24": suite_lemma24,
    "lemma41": suite_lemma41,
    "lemma47": suite_lemma47,
    "hypergraph": suite_hypergraph,
}


def run_suite(name: str, **options) -> list[SuiteResult]:
    names = SUITES if name == "all" else (name,)
    return [RUNNERS[s](**{k: v for k, v in options.items() if v is not None}) for s in names]
