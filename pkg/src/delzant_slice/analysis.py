"""Image polytope ``i_V^*(Δ)`` and the combined good/smooth verdict."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import lattice as la
from .chart import ChartReport, smoothness_report
from .classify import VertexClassification, good_polytope
from .errors import DegenerateImage, EquivalenceViolated
from .polytope import DelzantPolytope, HalfSpace, validate_delzant
from .subspace import AffineSubspace, chart_constant_exponent, pullback


@dataclass(frozen=True)
class ConvexPolytope:
    dim: int
    halfspaces: tuple[HalfSpace, ...]
    vertices: tuple[tuple[Fraction, ...], ...]


def convex_hull(points: Sequence[Sequence], dim: int) -> ConvexPolytope:
    """Exact H-representation of ``conv(points)`` with primitive inward normals.

    Brute force: every facet passes through ``dim`` affinely independent input
    points, so each ``dim``-subset spanning a hyperplane is tried as a facet.
    """
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    base = pts[0]
    diffs = [tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]
    if la.rank(diffs) < dim:
        raise DegenerateImage(f"{len(pts)} points span less than dimension {dim}")
    if dim == 1:
        lo, hi = pts[0][0], pts[-1][0]
        hs = (HalfSpace((1,), lo), HalfSpace((-1,), -hi))
    else:
        facets = set()
        for subset in itertools.combinations(pts, dim):
            rows = [la.clear_denominators([a - b for a, b in zip(p, subset[0])]) for p in subset[1:]]
            if la.rank(rows) != dim - 1:
                continue
            (normal,) = la.integer_kernel(rows)
            offset = la.dot(normal, subset[0])
            values = [la.dot(normal, p) - offset for p in pts]
            if all(v >= 0 for v in values):
                facets.add((tuple(normal), offset))
            elif all(v <= 0 for v in values):
                facets.add((tuple(-x for x in normal), -offset))
        hs = tuple(HalfSpace(n, o) for n, o in sorted(facets))
    # hull vertices are input points; they are the ones on dim independent facets
    verts = tuple(p for p in pts if la.rank([h.normal for h in hs if h.slack(p) == 0]) == dim)
    return ConvexPolytope(dim, hs, verts)


def image_polytope(poly: DelzantPolytope, sub: AffineSubspace) -> ConvexPolytope:
    return convex_hull([pullback(sub, f.vertex) for f in poly.frames], sub.dim - 1)


def image_is_delzant(img: ConvexPolytope) -> bool:
    return validate_delzant(img.halfspaces, img.dim).passed


def edge_directions_at(img: ConvexPolytope, point: Sequence) -> set[tuple[int, ...]] | None:
    """Primitive edge directions of ``img`` at a simple vertex ``point``; ``None`` if not simple."""
    point = tuple(Fraction(x) for x in point)
    tight = [h.normal for h in img.halfspaces if h.slack(point) == 0]
    if len(tight) != img.dim or la.det(tight) == 0:
        return None
    cols = la.transpose(la.inverse(tight))
    return {la.primitive(la.clear_denominators(c)) for c in cols}


@dataclass(frozen=True)
class EquivalenceReport:
    good_polytope: bool
    all_charts_smooth: bool
    equivalence_holds: bool
    image: ConvexPolytope | None
    image_is_delzant: bool | None
    classifications: tuple[VertexClassification, ...]
    charts: tuple[ChartReport, ...]
    const_exponent: Fraction
    # False when the two readings of the good-polytope bullets disagree
    readings_agree: bool

    @property
    def image_label(self) -> str:
        # the hull is a moment image only when the closure is smooth
        return "moment image" if self.all_charts_smooth else "formal image"


def equivalence_verdict(poly: DelzantPolytope, sub: AffineSubspace, strict: bool = False) -> EquivalenceReport:
    good, per_vertex = good_polytope(poly, sub)
    charts = smoothness_report(poly, sub)
    smooth = all(c.verdict.smooth for c in charts)
    loose = all(v.meets_good_polytope_loose for v in per_vertex)
    try:
        img = image_polytope(poly, sub)
        img_ok = image_is_delzant(img)
    except DegenerateImage:
        img, img_ok = None, None
    report = EquivalenceReport(
        good_polytope=good,
        all_charts_smooth=smooth,
        equivalence_holds=good == smooth,
        image=img,
        image_is_delzant=img_ok,
        classifications=tuple(per_vertex),
        charts=tuple(charts),
        const_exponent=chart_constant_exponent(sub),
        readings_agree=loose == good,
    )
    if strict:
        if not report.equivalence_holds:
            raise EquivalenceViolated(f"good_polytope={good} but all_charts_smooth={smooth}")
        if smooth and img_ok is not True:
            raise EquivalenceViolated("closure is smooth but the image polytope is not Delzant")
    return report
