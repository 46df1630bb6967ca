"""Cayley graphs of small groups, graph automorphism groups and transitivity classification."""

from .analysis import ObstructionCertificate, verify_non_arc_transitive_locally
from .cayley import (ConditionReport, GeneratingSet, cayley_graph, check_generating_conditions,
                     doyle_graph, left_translation)
from .finite_group import (FiniteGroup, GroupAutomorphism, GroupElement, element_order,
                           enumerate_automorphisms, inv, make_cyclic, make_modular27, mul)
from .graph_core import (Graph, degree_sequence, from_edges, from_graph6, is_regular, to_dot,
                         to_edgelist, to_graph6)
from .metrics import BallSubgraph, ball_subgraph, bfs_distances, diameter, girth
from .symmetry import (Permutation, PermutationGroup, SymmetryReport, arc_orbits,
                       automorphism_group, classify, edge_orbits, find_arc_reversal,
                       is_vertex_transitive, refine_partition, vertex_orbits)

__version__ = "0.1.0"
