"""Exact smoothness tests for toric hypersurfaces cut out by rational hyperplanes."""

from .analysis import EquivalenceReport, equivalence_verdict, image_is_delzant, image_polytope
from .chart import build_binomial, is_smooth, smoothness_report
from .classify import good_polytope, good_vertex
from .polytope import DelzantPolytope, HalfSpace, builtin, parse_builtin, validate_delzant
from .subspace import AffineSubspace, new_subspace, pullback

__all__ = [
    "AffineSubspace",
    "DelzantPolytope",
    "EquivalenceReport",
    "HalfSpace",
    "build_binomial",
    "builtin",
    "equivalence_verdict",
    "good_polytope",
    "good_vertex",
    "image_is_delzant",
    "image_polytope",
    "is_smooth",
    "new_subspace",
    "parse_builtin",
    "pullback",
    "smoothness_report",
    "validate_delzant",
]
