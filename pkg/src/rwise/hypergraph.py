"""The (t+1)-uniform hypergraph of minimum t-covers and its component verdicts."""
from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .family import Family, count_triangles, elements_of, is_r_wise_t_intersecting
from .covers import covering_number, min_covers
from .formulas import ThresholdSpec, threshold_n0, exact_count_G


class HypergraphWarning(UserWarning):
    pass


class Verdict(enum.Enum):
    SINGLE_CLIQUE = "SingleCliqueOrderRPlusT"
    NOT_CLIQUE = "NotClique"
    TOO_LARGE = "TooLarge"
    TOO_SMALL = "TooSmall"
    MULTI_CLIQUE = "MultiClique"


@dataclass(frozen=True)
class CoverHypergraph:
    n: int
    t: int
    tau: int
    edges: tuple[int, ...]

    @property
    def vertices(self) -> int:
        v = 0
        for e in self.edges:
            v |= e
        return v

    def pairwise_t_intersecting(self) -> bool:
        es = self.edges
        return all((a & b).bit_count() == self.t for i, a in enumerate(es) for b in es[i + 1:])

    def relabel(self, perm) -> "CoverHypergraph":
        from .family import relabel_mask

        return CoverHypergraph(self.n, self.t, self.tau, tuple(sorted(relabel_mask(e, perm) for e in self.edges)))


@dataclass(frozen=True)
class Component:
    vertices: int
    edges: tuple[int, ...]
    is_clique: bool

    @property
    def order(self) -> int:
        return self.vertices.bit_count()


@dataclass(frozen=True)
class ComponentReport:
    components: tuple[Component, ...]
    verdict: Verdict | None
    warnings: tuple[str, ...] = field(default=())


def build_cover_hypergraph(fam: Family, t: int) -> CoverHypergraph:
    """Edges are the (t+1)-sized t-covers when tau_t = t + 1, else none."""
    tau = covering_number(fam, t)
    if tau != t + 1:
        warnings.warn(f"tau_t = {tau}, not t + 1 = {t + 1}: hypergraph left empty", HypergraphWarning, stacklevel=2)
        return CoverHypergraph(fam.n, t, tau, ())
    hg = CoverHypergraph(fam.n, t, tau, min_covers(fam, t))
    if not hg.pairwise_t_intersecting():
        warnings.warn("some pair of edges does not meet in exactly t vertices", HypergraphWarning, stacklevel=2)
    return hg


def _components(edges: tuple[int, ...]) -> list[tuple[int, tuple[int, ...]]]:
    parent: dict[int, int] = {}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        vs = elements_of(e)
        for v in vs:
            parent.setdefault(v, v)
        for v in vs[1:]:
            a, b = find(vs[0]), find(v)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for e in edges:
        groups.setdefault(find(elements_of(e)[0]), []).append(e)
    out = []
    for es in groups.values():
        v = 0
        for e in es:
            v |= e
        out.append((v, tuple(sorted(es))))
    return sorted(out)


def decompose(hg: CoverHypergraph, r: int) -> ComponentReport:
    """Components (edges adjacent when they share a vertex), clique flags, verdict.

    Verdict precedence: any non-clique component, then any clique of order
    above r + t, then below r + t, then two or more cliques of order r + t.
    """
    if not hg.edges:
        return ComponentReport((), None, ("no edges: verdict undefined",))
    comps = tuple(
        Component(v, es, len(es) == comb(v.bit_count(), hg.t + 1)) for v, es in _components(hg.edges)
    )
    target = r + hg.t
    if not all(c.is_clique for c in comps):
        verdict = Verdict.NOT_CLIQUE
    elif any(c.order > target for c in comps):
        verdict = Verdict.TOO_LARGE
    elif any(c.order < target for c in comps):
        verdict = Verdict.TOO_SMALL
    elif len(comps) >= 2:
        verdict = Verdict.MULTI_CLIQUE
    else:
        verdict = Verdict.SINGLE_CLIQUE
    notes = () if hg.pairwise_t_intersecting() else ("edges not pairwise t-intersecting",)
    return ComponentReport(comps, verdict, notes)


@dataclass(frozen=True)
class Claim:
    """A checkable consequence of a verdict.

    ``check`` returns True/False, or None when the claim is gated on a
    threshold that the parameters do not reach.
    """

    verdict: Verdict
    description: str
    gate: ThresholdSpec | None
    _check: Callable[[Family], bool] = field(repr=False)

    def applies(self, n: int, k: int) -> bool:
        return self.gate is None or self.gate.holds(n, k)

    def check(self, fam: Family) -> bool | None:
        if not self.applies(fam.n, fam.k):
            return None
        return self._check(fam)


def _sandwiched(report: ComponentReport, r: int, t: int) -> Callable[[Family], bool]:
    def check(fam: Family) -> bool:
        core = report.components[0].vertices
        size = r + t
        if core.bit_count() != size:
            return False
        if any((m & core).bit_count() < size - 1 for m in fam.members):
            return False
        # every k-set meeting the core in exactly r + t - 1 must be present
        from .constructions import build_G

        g = build_G(fam.n, fam.k, r, t)
        core_elems = elements_of(core)
        others = [e for e in range(1, fam.n + 1) if e not in core_elems]
        perm = [0] * fam.n
        for i, e in enumerate(core_elems + tuple(others)):
            perm[i] = e
        return g.relabel(perm).issubset(fam)

    return check


def verdict_consequence(verdict: Verdict, r: int, t: int, report: ComponentReport | None = None) -> Claim:
    """Map a verdict to the statement it implies about the originating family."""
    if verdict is Verdict.MULTI_CLIQUE:
        return Claim(verdict, "no (r+1, t)-triangles", None,
                     lambda fam: count_triangles(fam, r, t, force=True) == 0)
    if verdict is Verdict.SINGLE_CLIQUE:
        if report is None:
            raise ValueError("the sandwich claim needs the component report")
        return Claim(verdict, "G <= F <= G' after relabelling the clique to [r + t]", None,
                     _sandwiched(report, r, t))
    lemma = {Verdict.NOT_CLIQUE: "4.4", Verdict.TOO_LARGE: "4.5", Verdict.TOO_SMALL: "4.6"}[verdict]
    gate = threshold_n0(r, t, lemma)

    def fewer(fam: Family) -> bool:
        if not is_r_wise_t_intersecting(fam, r, t):
            return False
        return count_triangles(fam, r, t) < exact_count_G(fam.n, fam.k, r, t)

    return Claim(verdict, "N(F) < N(G_{r,t}) once n >= c k^d", gate, fewer)
