"""
Right Kazhdan-Lusztig cells of ``w_J(lam)`` in the symmetric group.

The cell of ``w_J(lam)`` is ``w_J(lam) Z(lam)`` where ``Z(lam)`` is a
prefix-closed set of distinguished coset representatives; its maximal
elements (the rim) are the ``w_D`` of certain admissible diagrams.
"""

from .cells import (brute_force_cell, cell_elements, cell_report, enumerate_Z,
                    in_Z, rim_diagrams, rim_Y, special_rim)
from .diagram import Diagram, canonical_diagram, parse_diagram, w_of
from .perm import Permutation, compose, parse_permutation
from .rs import StandardTableau, rs_pair, subsequence_type
from .shapes import parse_composition

__version__ = "0.1.0"

__all__ = [
    "Permutation", "compose", "parse_permutation", "parse_composition",
    "Diagram", "canonical_diagram", "parse_diagram", "w_of",
    "StandardTableau", "rs_pair", "subsequence_type",
    "in_Z", "enumerate_Z", "rim_Y", "rim_diagrams", "special_rim",
    "cell_elements", "brute_force_cell", "cell_report",
]
