"""Left regular bands and the homology of their algebras.

Build LRBs (free, free partially commutative, sign-vector closures, face
monoids of rational arrangements, raw tables) and compute Ext between simple
modules, the quiver, relation counts and global dimension from order
complexes. :mod:`lrbhom.bar` recomputes Ext from the bar complex as a check.
"""
from .arrangements import Arrangement, face_monoid, intersection_lattice, sphere_ext_check, three_lines
from .bar import bar_ext, bar_ext_dims, oracle_sweep
from .invariants import (Report, contraction_acyclicity_check, crosscut_check, ext_dimension,
                         ext_table, fpc_ext_check, global_dimension, leray_bound_check,
                         main_result_check, quiver, relation_counts, tree_quiver)
from .monoid import (LRB, Caps, CapExceeded, Graph, LRBError, fpc_lrb, free_lrb, sign_closure,
                     three_element_lrb, validate_lrb)
from .order import r_order, support_lattice
from .topology import RATIONALS, Field, clique_complex, leray_number, order_complex, reduced_betti

__version__ = "0.1.0"

__all__ = [
    "Arrangement", "face_monoid", "intersection_lattice", "sphere_ext_check", "three_lines",
    "bar_ext", "bar_ext_dims", "oracle_sweep",
    "Report", "contraction_acyclicity_check", "crosscut_check", "ext_dimension", "ext_table",
    "fpc_ext_check", "global_dimension", "leray_bound_check", "main_result_check", "quiver",
    "relation_counts", "tree_quiver",
    "LRB", "Caps", "CapExceeded", "Graph", "LRBError", "fpc_lrb", "free_lrb", "sign_closure",
    "three_element_lrb", "validate_lrb",
    "r_order", "support_lattice",
    "RATIONALS", "Field", "clique_complex", "leray_number", "order_complex", "reduced_betti",
]
