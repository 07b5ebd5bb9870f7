"""Exact computational geometry of C-coconvex bodies.

Bodies live in a pointed full-dimensional polyhedral cone C and are stored
through their convex complement; all arithmetic is exact rational.
"""
from .body import (
    CFullSet,
    CoconvexBody,
    build_cap,
    choose_hyperplane,
    combine,
    detect_homothety,
    equals,
    make_coconvex,
    oplus,
    scale,
    volume,
)
from .cone import PolyhedralCone, validate as make_cone
from .geom import Hyperplane
from .polytope import Polytope, convex_hull
from .theorems import (
    CheckReport,
    RootExpression,
    Verdict,
    certified_root_compare,
    check_cylinder_concavity,
    check_reversed_bm,
    check_segment_remark,
    check_volume_convexity,
    classify_lemma3_equality,
)

__version__ = "0.1.0"
