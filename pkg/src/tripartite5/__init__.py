"""Decompositions of complete tripartite graphs into 5-cycles.

A {3,5}-cycle decomposition of K_{r,s,t} is built from a latin
representation by trading groups of triangles for 5-cycles; blowing every
vertex up into five copies then yields a 5-cycle decomposition of
K_{5r,5s,5t}.

>>> from tripartite5 import Params, construct_decomposition, blowup_decomposition, verify
>>> dec, budget = construct_decomposition(Params(23, 25, 29))
>>> verify(dec).ok
True
>>> verify(blowup_decomposition(dec), (5,)).ok
True
"""

__version__ = "0.1.0"

from .blowup import b5_c5_cycles, blowup_decomposition, k555_cycles
from .conditions import (
    FeasibilityReport,
    check_construction_domain,
    check_necessary,
    check_scaled,
    lemma_rs_lower_bound,
)
from .core import (
    CellRef,
    ConstructionError,
    Decomposition,
    DualCell,
    LatinRep,
    Params,
    Vertex,
    build_latin_rep,
    region_of,
    wrap1,
)
from .expansion import BudgetReport, build_label_map, construct, construct_decomposition, find_x
from .oracle import SearchConfig, brute_force_decompose, cross_validate
from .verifier import VerifyOutcome, verify

__all__ = [
    "BudgetReport", "CellRef", "ConstructionError", "Decomposition", "DualCell",
    "FeasibilityReport", "LatinRep", "Params", "SearchConfig", "Vertex", "VerifyOutcome",
    "b5_c5_cycles", "blowup_decomposition", "brute_force_decompose", "build_label_map",
    "build_latin_rep", "check_construction_domain", "check_necessary", "check_scaled",
    "construct", "construct_decomposition", "cross_validate", "find_x", "k555_cycles",
    "lemma_rs_lower_bound", "region_of", "verify", "wrap1",
]
