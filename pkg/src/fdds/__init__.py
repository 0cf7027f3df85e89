"""Arithmetic, division and roots of finite discrete-time dynamical systems."""

from .core import (
    Component,
    Fdds,
    FddsError,
    canonical_form,
    cycle,
    empty,
    fdds_power,
    fdds_product,
    fdds_sum,
    fixed_point,
    is_isomorphic,
    sum_all,
)
from .division import divide_children, forest_divide, tree_divide
from .solvers import (
    SolveOutcome,
    Status,
    all_roots,
    divide_connected,
    root_connected,
    root_forest,
    solve_axk,
    solve_component_extremal,
    unroll_divide,
)
from .trees import Forest, Tree, attach_root, children_forest, compare, cut, leaf, path, tree_power, tree_product
from .unroll import CutUnroll, PeriodicPattern, cut_unroll, periodic_pattern, required_depth, roll

__all__ = [
    "Component",
    "CutUnroll",
    "Fdds",
    "FddsError",
    "Forest",
    "PeriodicPattern",
    "SolveOutcome",
    "Status",
    "Tree",
    "all_roots",
    "attach_root",
    "canonical_form",
    "children_forest",
    "compare",
    "cut",
    "cut_unroll",
    "cycle",
    "divide_children",
    "divide_connected",
    "empty",
    "fdds_power",
    "fdds_product",
    "fdds_sum",
    "fixed_point",
    "forest_divide",
    "is_isomorphic",
    "leaf",
    "path",
    "periodic_pattern",
    "required_depth",
    "roll",
    "root_connected",
    "root_forest",
    "solve_axk",
    "solve_component_extremal",
    "sum_all",
    "tree_divide",
    "tree_power",
    "tree_product",
    "unroll_divide",
]
