"""Exact Wiener indices for trees grown by subdivision, star-fractal and
vertex operations, with graph oracles to check every closed form."""

from .closed_form import WienerState, iterate_closed_form, starfractal_wiener, subdivision_wiener, subdivision_wiener_t, vertexop_wiener
from .errors import EdgeListFormatError, IntegrityError, InvalidArgumentError, NotATreeError, TooLargeError, TreeWienerError
from .growth_ops import GrowthOp, OpKind, first_order_subdivision, iterate, star_fractal, vertex_op
from .models import ModelParams, build_t_odot, build_t_star, odot_wiener, star_wiener
from .random_walk import WalkConfig, exact_hitting_time, exact_mean_hitting, mc_mean_hitting
from .tree_core import (
    TreeGraph,
    VertexClass,
    VertexMeta,
    degree_histogram,
    diameter,
    from_edge_list,
    new_path,
    new_single_edge,
    new_star,
    random_tree,
    to_edge_list,
    validate,
    wiener_bfs,
    wiener_subtree,
)

__version__ = "0.1.0"
