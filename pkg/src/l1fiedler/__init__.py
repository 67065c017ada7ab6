"""Exact computation of the l1-Fiedler value b(G) of small graphs, together
with the cut, tree, spectral and max-edge-difference invariants it relates
to, and an exhaustive verification harness for the inequalities between
them."""

from .graphs import (Graph, GraphError, all_trees, attach_pendants, complement,
                     disjoint_union, is_connected, is_tree, join, named_graph,
                     parse_edge_list, parse_graph6, prufer_decode,
                     random_connected_graph, to_graph6)
from .cuts import (InvariantResult, b_exact, b_oracle_all_subsets,
                   boundary_size, cheeger_exact, edge_connectivity,
                   edge_connectivity_subsets, equality_structure_check,
                   growth_certificate, iso_exact, min_xi_exact)
from .trees import (CentreEdgeReport, centre_edges, star_root_vertices,
                    substar_check, subtree_sizes)
from .spectral import (algebraic_connectivity, eigen_sym, l1_fiedler_vector,
                       lambda_max, laplacian, laplacian_identity_check,
                       laplacian_spectrum)
from .gamma import GammaResult, LinearProgram, gamma_exact, gamma_grid, solve_lp
from .bounds import (BoundReport, extremal_tree_diameter, extremal_tree_maxdeg,
                     extremal_tree_pendants, nordhaus_gaddum_check, path_b,
                     pendant_addition_bound, report_json, verify_all_trees,
                     verify_exhaustive_graphs, verify_suite,
                     verify_tree_extremals)

__version__ = "0.1.0"

__all__ = [n for n in dir() if not n.startswith("_")]
