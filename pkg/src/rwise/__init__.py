"""Exact tools for r-wise t-intersecting families of k-sets and their triangles."""
from .constructions import build_frankl, build_G, build_G_block, build_Gprime, build_trivial, build_two_block
from .covers import CoverCase, classify_cover_family, covering_number, is_t_cover, min_covers
from .family import (Family, FamilyError, NotIntersectingError, count_triangles, is_maximal,
                     is_r_wise_t_intersecting, is_triangle, is_trivial, iter_triangles, saturate)
from .formulas import exact_count_G, lower_bound_L21, threshold_n0
from .hypergraph import Verdict, build_cover_hypergraph, decompose, verdict_consequence
from .search import enumerate_maximal_r2, exhaustive_search, stochastic_search

__version__ = "0.1.0"
