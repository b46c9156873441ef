"""Good vertices and good polytopes with respect to a pullback ``i_V^*``.

All per-vertex indices are 0-based positions in the frame's active list.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import lattice as la
from .errors import CrossCheckMismatch, DimensionMismatch
from .feasibility import nonnegative_solution
from .polytope import DelzantPolytope, VertexFrame
from .subspace import AffineSubspace, pullback


@dataclass(frozen=True)
class IndexSets:
    iplus: frozenset[int]
    iminus: frozenset[int]
    izero: frozenset[int]


@dataclass(frozen=True)
class ConeChoice:
    """Drop direction ``dropped``; the others must span the image cone.

    ``coefficients`` express the dropped image in terms of the remaining ones
    (in increasing index order); ``determinant`` is that of the remaining
    images, so ``|determinant| == 1`` means they form a Z-basis.
    """

    dropped: int
    coefficients: tuple[Fraction, ...]
    determinant: int

    @property
    def spans_cone(self) -> bool:
        return all(s >= 0 for s in self.coefficients)

    @property
    def zbasis(self) -> bool:
        return abs(self.determinant) == 1


@dataclass(frozen=True)
class VertexClassification:
    vertex: int
    index_sets: IndexSets
    pairings: tuple[int, ...]  # <u_i, q>
    images: tuple[tuple[int, ...], ...]  # i_V^*(v_i)
    jset: frozenset[int]
    image_is_vertex: bool
    all_images_nonzero: bool
    is_good: bool
    choices: tuple[ConeChoice, ...] = ()
    cone_choice: ConeChoice | None = None
    zbasis_ok: bool | None = None

    @property
    def meets_good_polytope(self) -> bool:
        """Whether this vertex is compatible with a good polytope (same-choice reading)."""
        return not self.is_good or bool(self.zbasis_ok)

    @property
    def meets_good_polytope_loose(self) -> bool:
        """Reading where the cone bullet and the Z-basis bullet may use different drops."""
        if not self.is_good:
            return True
        return any(c.spans_cone for c in self.choices) and any(c.zbasis for c in self.choices)


def _check(frame: VertexFrame, sub: AffineSubspace):
    if frame.dim != sub.dim:
        raise DimensionMismatch(f"frame in dimension {frame.dim}, subspace in {sub.dim}")
    if frame.edges is None:
        raise ValueError("frame has no edge directions")


def pairings(frame: VertexFrame, sub: AffineSubspace) -> tuple[int, ...]:
    _check(frame, sub)
    return tuple(la.dot(u, sub.q) for u in frame.normals)


def index_sets(frame: VertexFrame, sub: AffineSubspace) -> IndexSets:
    c = pairings(frame, sub)
    return IndexSets(
        frozenset(i for i, x in enumerate(c) if x >= 0),
        frozenset(i for i, x in enumerate(c) if x <= 0),
        frozenset(i for i, x in enumerate(c) if x == 0),
    )


def edge_images(frame: VertexFrame, sub: AffineSubspace) -> tuple[tuple[int, ...], ...]:
    _check(frame, sub)
    return tuple(pullback(sub, v) for v in frame.edges)


def jset(frame: VertexFrame, sub: AffineSubspace) -> frozenset[int]:
    """Edges whose direction is annihilated by every ``p_l``."""
    js = frozenset(i for i, w in enumerate(edge_images(frame, sub)) if not any(w))
    if len(js) > 1:
        raise CrossCheckMismatch(f"{len(js)} edge directions collapse under the pullback")
    return js


def cone_pointed(gens: Sequence[Sequence]) -> tuple[bool, tuple[Fraction, ...] | None]:
    """Decide whether ``cone(gens)`` is pointed.

    Not pointed iff some ``r >= 0`` with ``sum r = 1`` has ``sum r_j g_j = 0``;
    that ``r`` is returned as the witness.
    """
    gens = [tuple(g) for g in gens]
    if not gens:
        return True, None
    d = len(gens[0])
    A = [[g[k] for g in gens] for k in range(d)] + [[1] * len(gens)]
    r = nonnegative_solution(A, [0] * d + [1])
    return (True, None) if r is None else (False, r)


def separating_functional(point: Sequence, others: Sequence[Sequence]) -> tuple[Fraction, ...] | None:
    """Some ``w`` with ``<w, y - point> >= 1`` for every ``y`` in ``others``, if any.

    Such a ``w`` exists iff ``point`` is outside ``conv(others)``.  Solved as
    ``{w+ - w- , s >= 0}`` with one equality per other point.
    """
    d = len(point)
    others = [tuple(y) for y in others]
    if not others:
        return tuple(Fraction(0) for _ in range(d))
    k = len(others)
    A = []
    for i, y in enumerate(others):
        diff = [Fraction(a) - Fraction(b) for a, b in zip(y, point)]
        A.append(diff + [-x for x in diff] + [-int(j == i) for j in range(k)])
    sol = nonnegative_solution(A, [1] * k)
    if sol is None:
        return None
    return tuple(sol[i] - sol[d + i] for i in range(d))


def hull_vertex(points: Sequence[Sequence], index: int) -> bool:
    """Is ``points[index]`` a vertex of ``conv(points)``?  Certified by a separating functional."""
    x = tuple(points[index])
    others = sorted({tuple(p) for p in points if tuple(p) != x})
    w = separating_functional(x, others)
    if w is None:
        return False
    if any(la.dot(w, y) - la.dot(w, x) <= 0 for y in others):
        raise CrossCheckMismatch("separating functional does not separate")
    return True


def image_is_vertex(poly: DelzantPolytope, sub: AffineSubspace, vertex: int) -> bool:
    """Condition (1) of a good vertex, decided by two independent tests.

    (a) the image of the tangent cone is pointed; (b) the image point is
    separated from the images of all other vertices.  Zero images are left
    out of (a).
    """
    frame = poly.frames[vertex]
    gens = [w for w in edge_images(frame, sub) if any(w)]
    pointed, witness = cone_pointed(gens)
    if witness is not None:
        combo = [sum(r * g[k] for r, g in zip(witness, gens)) for k in range(len(gens[0]))]
        if any(combo):
            raise CrossCheckMismatch("pointedness witness does not sum to zero")
    images = [pullback(sub, f.vertex) for f in poly.frames]
    separated = hull_vertex(images, vertex)
    if pointed != separated:
        raise CrossCheckMismatch(
            f"vertex {vertex}: cone test says {pointed}, hull test says {separated}"
        )
    return pointed


def cone_choices(images: Sequence[Sequence[int]]) -> tuple[ConeChoice, ...]:
    """Every drop ``j`` whose remaining n-1 images are linearly independent."""
    out = []
    for j in range(len(images)):
        rest = [images[i] for i in range(len(images)) if i != j]
        d = la.det(rest)
        if d == 0:
            continue
        # images[j] = sum_i S_i rest[i]  <=>  rest^T S = images[j]
        S = la.solve(la.transpose(rest), images[j])
        out.append(ConeChoice(j, S, d))
    return tuple(out)


def good_vertex(poly: DelzantPolytope, sub: AffineSubspace, vertex: int) -> VertexClassification:
    frame = poly.frames[vertex]
    c = pairings(frame, sub)
    images = edge_images(frame, sub)
    js = jset(frame, sub)
    on_vertex = image_is_vertex(poly, sub, vertex)
    nonzero = not js
    good = on_vertex and nonzero
    base = dict(
        vertex=vertex,
        index_sets=index_sets(frame, sub),
        pairings=c,
        images=images,
        jset=js,
        image_is_vertex=on_vertex,
        all_images_nonzero=nonzero,
        is_good=good,
    )
    if not good:
        return VertexClassification(**base)
    choices = cone_choices(images)
    spanning = [ch for ch in choices if ch.spans_cone]
    both = [ch for ch in spanning if ch.zbasis]
    pick = both[0] if both else (spanning[0] if spanning else None)
    return VertexClassification(**base, choices=choices, cone_choice=pick, zbasis_ok=bool(both))


def good_polytope(poly: DelzantPolytope, sub: AffineSubspace) -> tuple[bool, list[VertexClassification]]:
    per_vertex = [good_vertex(poly, sub, i) for i in range(len(poly.frames))]
    return all(v.meets_good_polytope for v in per_vertex), per_vertex
