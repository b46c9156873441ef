"""Delzant polytopes given by half-spaces.

A polytope is the set ``{x : <normal_i, x> >= offset_i}``.  Vertices are
always derived from the half-spaces by brute-force n-subset enumeration,
which is fine at the sizes we care about (n <= 6, a dozen or so facets).

Inside a :class:`VertexFrame` the active facets are listed in ascending
global index; every per-vertex index used elsewhere in the package refers
to this local order (0-based).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import lattice as la
from .errors import (
    BadParams,
    DimensionMismatch,
    Empty,
    InputError,
    NotSimple,
    NotSmoothDelzant,
    RedundantHalfSpace,
    Unbounded,
    UnknownName,
)
from .feasibility import nonnegative_solution


@dataclass(frozen=True)
class HalfSpace:
    normal: tuple[int, ...]
    offset: Fraction

    def __post_init__(self):
        normal = la.as_int_vec(self.normal)
        if not la.is_primitive(normal):
            raise InputError(f"normal {normal} is not a primitive nonzero integer vector")
        object.__setattr__(self, "normal", normal)
        object.__setattr__(self, "offset", Fraction(self.offset))

    def slack(self, x: Sequence) -> Fraction:
        return la.dot(self.normal, x) - self.offset


@dataclass(frozen=True)
class VertexFrame:
    """A vertex together with its active normals ``u_i`` and edge directions ``v_i``.

    ``edges`` is ``None`` for a frame straight out of vertex enumeration; it
    is filled in by :func:`vertex_frame`.
    """

    vertex: tuple[Fraction, ...]
    active: tuple[int, ...]
    normals: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, ...], ...] | None = None

    @property
    def dim(self) -> int:
        return len(self.vertex)

    @property
    def U(self) -> la.Mat:
        """Matrix whose columns are the active normals."""
        return la.transpose(self.normals)

    @property
    def V(self) -> la.Mat:
        """Matrix whose columns are the edge directions (``Q`` in the chart formulas)."""
        if self.edges is None:
            raise ValueError("frame has no edge directions yet")
        return la.transpose(self.edges)


@dataclass(frozen=True)
class DelzantPolytope:
    dim: int
    halfspaces: tuple[HalfSpace, ...]
    frames: tuple[VertexFrame, ...] = field(default=(), compare=False)

    @classmethod
    def from_halfspaces(cls, halfspaces: Sequence[HalfSpace], dim: int | None = None) -> DelzantPolytope:
        halfspaces = tuple(halfspaces)
        if dim is None:
            dim = len(halfspaces[0].normal)
        frames = tuple(vertex_frame(f) for f in enumerate_vertices(halfspaces, dim))
        return cls(dim, halfspaces, frames)

    @property
    def vertices(self) -> list[tuple[Fraction, ...]]:
        return [f.vertex for f in self.frames]

    def __len__(self):
        return len(self.frames)


# --- vertex enumeration --------------------------------------------------


def _check_dims(halfspaces: Sequence[HalfSpace], dim: int):
    if dim < 1:
        raise DimensionMismatch("dimension must be positive")
    for h in halfspaces:
        if len(h.normal) != dim:
            raise DimensionMismatch(f"normal {h.normal} does not live in dimension {dim}")
    if len(halfspaces) < dim + 1:
        raise Unbounded(f"{len(halfspaces)} half-spaces cannot bound a {dim}-dimensional polytope")


def _is_bounded(halfspaces: Sequence[HalfSpace], dim: int) -> bool:
    # the recession cone {x : <u_i, x> >= 0} is {0} iff the normals positively span R^n
    cols = la.transpose([h.normal for h in halfspaces])
    for k in range(dim):
        for s in (1, -1):
            target = [s * int(i == k) for i in range(dim)]
            if nonnegative_solution(cols, target) is None:
                return False
    return True


def _vertex_points(halfspaces: Sequence[HalfSpace], dim: int) -> list[tuple[tuple[Fraction, ...], tuple[int, ...]]]:
    """All vertices with their full tight sets, sorted by coordinates."""
    _check_dims(halfspaces, dim)
    if not _is_bounded(halfspaces, dim):
        raise Unbounded("recession cone is nontrivial")
    found: dict[tuple[Fraction, ...], tuple[int, ...]] = {}
    for idx in itertools.combinations(range(len(halfspaces)), dim):
        rows = [halfspaces[i].normal for i in idx]
        if la.det(rows) == 0:
            continue
        x = la.solve(rows, [halfspaces[i].offset for i in idx])
        if x in found:
            continue
        slacks = [h.slack(x) for h in halfspaces]
        if all(s >= 0 for s in slacks):
            found[x] = tuple(i for i, s in enumerate(slacks) if s == 0)
    if not found:
        raise Empty("half-spaces have empty intersection")
    return sorted(found.items())


def enumerate_vertices(halfspaces: Sequence[HalfSpace], dim: int) -> list[VertexFrame]:
    """Vertices of a simple polytope as frames without edge directions."""
    points = _vertex_points(halfspaces, dim)
    touched = set()
    frames = []
    for x, active in points:
        if len(active) > dim:
            raise NotSimple(f"vertex {tuple(map(str, x))} lies on {len(active)} facets")
        touched.update(active)
        frames.append(VertexFrame(x, active, tuple(halfspaces[i].normal for i in active)))
    missing = sorted(set(range(len(halfspaces))) - touched)
    if missing:
        raise RedundantHalfSpace(f"half-spaces {missing} touch no vertex")
    return frames


def vertex_frame(frame: VertexFrame) -> VertexFrame:
    """Fill in edge directions: ``V = (U^T)^{-1}``, which is integral iff ``|det U| = 1``."""
    Ut = frame.normals
    d = la.det(Ut)
    if abs(d) != 1:
        raise NotSmoothDelzant(
            f"active normals at vertex {tuple(map(str, frame.vertex))} have determinant {d}"
        )
    V = la.integer_inverse(Ut)
    return VertexFrame(frame.vertex, frame.active, frame.normals, la.transpose(V))


# --- validation ------------------------------------------------------------


@dataclass(frozen=True)
class VertexCheck:
    vertex: tuple[Fraction, ...]
    active: tuple[int, ...]
    simple: bool
    rational: bool
    smooth: bool
    determinant: int | None


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    vertices: tuple[VertexCheck, ...]
    error: str | None = None

    @property
    def failures(self) -> list[VertexCheck]:
        return [v for v in self.vertices if not (v.simple and v.rational and v.smooth)]


def validate_delzant(poly, dim: int | None = None) -> ValidationReport:
    """Check simplicity, rationality and smoothness at every vertex.

    ``poly`` is a :class:`DelzantPolytope` or a sequence of half-spaces.
    Failures are recorded in the report, never raised.
    """
    halfspaces = poly.halfspaces if isinstance(poly, DelzantPolytope) else tuple(poly)
    if dim is None:
        dim = poly.dim if isinstance(poly, DelzantPolytope) else len(halfspaces[0].normal)
    try:
        points = _vertex_points(halfspaces, dim)
    except InputError as exc:
        return ValidationReport(False, (), f"{type(exc).__name__}: {exc}")
    checks = []
    for x, active in points:
        simple = len(active) == dim
        det = la.det([halfspaces[i].normal for i in active]) if simple else None
        # integer normals make every vertex rational
        checks.append(VertexCheck(x, active, simple, True, simple and abs(det) == 1, det))
    touched = {i for _, active in points for i in active}
    error = None
    if len(touched) != len(halfspaces):
        error = f"RedundantHalfSpace: {sorted(set(range(len(halfspaces))) - touched)}"
    passed = error is None and all(c.simple and c.rational and c.smooth for c in checks)
    return ValidationReport(passed, tuple(checks), error)


def transition_matrix(poly: DelzantPolytope, lam: int, sigma: int) -> la.Mat:
    """``D = Q_lam^{-1} Q_sigma``; since ``Q_lam^{-1} = U_lam^T`` no inversion is needed."""
    a, b = poly.frames[lam], poly.frames[sigma]
    return la.matmul(a.normals, b.V)


# --- corpus --------------------------------------------------------------------


def _positive(s, what="size") -> Fraction:
    try:
        s = Fraction(s)
    except (TypeError, ValueError, ZeroDivisionError):
        raise BadParams(f"{what} {s!r} is not a rational number") from None
    if s <= 0:
        raise BadParams(f"{what} must be positive, got {s}")
    return s


def _count(n, lo=1, what="dimension") -> int:
    try:
        k = Fraction(n)
    except (TypeError, ValueError, ZeroDivisionError):
        raise BadParams(f"{what} {n!r} is not an integer") from None
    if k.denominator != 1 or k < lo:
        raise BadParams(f"{what} must be an integer >= {lo}, got {n}")
    return int(k)


def _unit(n, i, s=1):
    return tuple(s * int(k == i) for k in range(n))


def simplex(n, s=1) -> DelzantPolytope:
    n, s = _count(n), _positive(s)
    hs = [HalfSpace(_unit(n, i), 0) for i in range(n)]
    hs.append(HalfSpace((-1,) * n, -s))
    return DelzantPolytope.from_halfspaces(hs, n)


def cube(n, s=1) -> DelzantPolytope:
    n, s = _count(n), _positive(s)
    hs = [HalfSpace(_unit(n, i), 0) for i in range(n)]
    hs += [HalfSpace(_unit(n, i, -1), -s) for i in range(n)]
    return DelzantPolytope.from_halfspaces(hs, n)


def hirzebruch(k, s1=1, s2=1) -> DelzantPolytope:
    """Hirzebruch trapezoid: height ``s1``, top edge length ``s2``, slant ``k``."""
    k = _count(k, lo=0, what="twist")
    s1, s2 = _positive(s1, "height"), _positive(s2, "width")
    hs = [
        HalfSpace((1, 0), 0),
        HalfSpace((0, 1), 0),
        HalfSpace((0, -1), -s1),
        HalfSpace((-1, -k), -(s2 + k * s1)),
    ]
    return DelzantPolytope.from_halfspaces(hs, 2)


def product(P: DelzantPolytope, Q: DelzantPolytope) -> DelzantPolytope:
    zp, zq = (0,) * P.dim, (0,) * Q.dim
    hs = [HalfSpace(h.normal + zq, h.offset) for h in P.halfspaces]
    hs += [HalfSpace(zp + h.normal, h.offset) for h in Q.halfspaces]
    return DelzantPolytope.from_halfspaces(hs, P.dim + Q.dim)


_BUILTINS = {"simplex": simplex, "cube": cube, "hirzebruch": hirzebruch, "product": product}


def builtin(name: str, *params) -> DelzantPolytope:
    try:
        make = _BUILTINS[name]
    except KeyError:
        raise UnknownName(f"unknown builtin {name!r}; choose from {sorted(_BUILTINS)}") from None
    if name == "product":
        if len(params) != 2 or not all(isinstance(p, DelzantPolytope) for p in params):
            raise BadParams("product takes exactly two polytopes")
    try:
        return make(*params)
    except TypeError as exc:
        raise BadParams(f"{name}: {exc}") from None


def parse_builtin(text: str) -> DelzantPolytope:
    """Parse ``name:arg:arg`` strings; ``A*B`` is the product of two builtins.

    >>> len(parse_builtin("simplex:2:1").frames)
    3
    >>> parse_builtin("simplex:1:1*simplex:2:1").dim
    3
    """
    if "*" in text:
        left, _, right = text.partition("*")
        return product(parse_builtin(left), parse_builtin(right))
    name, *args = text.strip().split(":")
    if name == "product":
        raise BadParams("write products as A*B, e.g. simplex:1:1*simplex:2:1")
    return builtin(name, *args)
