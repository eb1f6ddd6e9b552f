"""Exterior powers of signed graphs, computed combinatorially and algebraically."""

from .combinat import Permutation, compose, k_cycle, perm_sign, rank, unrank
from .exterior import WedgeEdge, WedgePower, connecting_permutation, mirror_map, wedge_graph, wedge_power
from .signed import (
    BalanceReport,
    SignedGraph,
    contains_claw,
    is_antibalanced,
    is_balanced,
    negate,
    sign_of_cycle,
    switch,
    switching_equivalent,
    underlying,
)

__version__ = "0.1.0"

__all__ = [
    "BalanceReport",
    "Permutation",
    "SignedGraph",
    "WedgeEdge",
    "WedgePower",
    "compose",
    "connecting_permutation",
    "contains_claw",
    "is_antibalanced",
    "is_balanced",
    "k_cycle",
    "mirror_map",
    "negate",
    "perm_sign",
    "rank",
    "sign_of_cycle",
    "switch",
    "switching_equivalent",
    "underlying",
    "unrank",
    "wedge_graph",
    "wedge_power",
]
