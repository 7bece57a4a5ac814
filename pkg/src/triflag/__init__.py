"""Exact facet maximization and feasibility for flag f-vectors of 3-colored complexes."""

from .complexes import StaircaseGraph, TriComplex, edge_counts, facet_count, is_color_shifted, within_budget
from .construct import CandidateParams, build, compute_b, determinize
from .flagvec import ColorPermutation, FlagVector, HVector, canonical_relabel, f_to_h, h_to_f, product_bounds, validate
from .maximize import EdgeInfeasible, MaxResult, is_feasible, maximize
from .oracle import CapExceeded, brute_max

__all__ = [
    "CandidateParams",
    "CapExceeded",
    "ColorPermutation",
    "EdgeInfeasible",
    "FlagVector",
    "HVector",
    "MaxResult",
    "StaircaseGraph",
    "TriComplex",
    "brute_max",
    "build",
    "canonical_relabel",
    "compute_b",
    "determinize",
    "edge_counts",
    "f_to_h",
    "facet_count",
    "h_to_f",
    "is_color_shifted",
    "is_feasible",
    "maximize",
    "product_bounds",
    "validate",
    "within_budget",
]
