"""Combinatorial workbench for dichromatic numbers of generalized Kneser and
Johnson graphs: exact solvers, explicit orientations and colorings, and
machine-checkable certificates at desk scale."""

from .setfam import KSubset, enumerate_ksubsets, rank, unrank
from .digraph import Digraph, FamilyGraph, is_acyclic
from .families import gen_generalized_kneser, gen_johnson, orient_min_rule, orient_sum_rule
from .colorings import Coloring, clamped_min_coloring, block_coloring_johnson, verify_acyclic_coloring
from .solvers import SolveBudget, SolveResult, chromatic_number, dichromatic_number

__all__ = [
    "KSubset", "enumerate_ksubsets", "rank", "unrank",
    "Digraph", "FamilyGraph", "is_acyclic",
    "gen_generalized_kneser", "gen_johnson", "orient_min_rule", "orient_sum_rule",
    "Coloring", "clamped_min_coloring", "block_coloring_johnson", "verify_acyclic_coloring",
    "SolveBudget", "SolveResult", "chromatic_number", "dichromatic_number",
]

__version__ = "0.1.0"
