"""Cluster vertex deletion on cographs, exact oracles, and hardness reductions."""

from .cotree import BinaryCotree, Cotree, CotreeNode, binarize, build_cotree, expand, is_cograph
from .dp import dp_stats, extract_set, solve
from .errors import ClusterVDError
from .graph import INFINITY, Graph, Pattern, PatternWitness, find_induced, parse_graph
from .oracle import TargetPredicate, Verdict, branch_cvd, brute_min, verify
from .reductions import (ClassifyVerdict, ReducedInstance, amplify, build_gadget_tree, choose_t,
                         cvd_to_ccvd, dichotomy_classify, subdivide3, vc_to_cvd_dense)
from .solution import Solution, Variant

__all__ = [
    "BinaryCotree", "ClassifyVerdict", "ClusterVDError", "Cotree", "CotreeNode", "Graph",
    "INFINITY", "Pattern", "PatternWitness", "ReducedInstance", "Solution", "TargetPredicate",
    "Variant", "Verdict", "amplify", "binarize", "branch_cvd", "brute_min", "build_cotree",
    "build_gadget_tree", "choose_t", "cvd_to_ccvd", "dichotomy_classify", "dp_stats", "expand",
    "extract_set", "find_induced", "is_cograph", "parse_graph", "solve", "subdivide3",
    "vc_to_cvd_dense", "verify",
]
