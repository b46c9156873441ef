import itertools
from fractions import Fraction

import pytest

from delzant_slice import lattice as la
from delzant_slice.errors import (
    BadParams,
    Empty,
    NotSimple,
    NotSmoothDelzant,
    RedundantHalfSpace,
    Unbounded,
    UnknownName,
)
from delzant_slice.polytope import (
    DelzantPolytope,
    HalfSpace,
    builtin,
    cube,
    enumerate_vertices,
    hirzebruch,
    parse_builtin,
    product,
    simplex,
    transition_matrix,
    validate_delzant,
    vertex_frame,
)

from conftest import corpus

CP2 = [HalfSpace((1, 0), 0), HalfSpace((0, 1), 0), HalfSpace((-1, -1), -1)]
SQUARE = [HalfSpace((1, 0), 0), HalfSpace((0, 1), 0), HalfSpace((-1, 0), -1), HalfSpace((0, -1), -1)]
WEIGHTED = [HalfSpace((1, 0), 0), HalfSpace((0, 1), 0), HalfSpace((-1, -2), -2)]


def pts(frames):
    return {tuple(f.vertex) for f in frames}


class TestEnumerate:
    def test_cp2(self):
        assert pts(enumerate_vertices(CP2, 2)) == {(0, 0), (1, 0), (0, 1)}

    def test_square(self):
        assert len(enumerate_vertices(SQUARE, 2)) == 4

    def test_quadrant_unbounded(self):
        with pytest.raises(Unbounded):
            enumerate_vertices(CP2[:2], 2)

    def test_strip_unbounded(self):
        with pytest.raises(Unbounded):
            enumerate_vertices([HalfSpace((1, 0), 0), HalfSpace((-1, 0), -1), HalfSpace((0, 1), 0)], 2)

    def test_empty(self):
        hs = [HalfSpace((1, 0), 2), HalfSpace((0, 1), 0), HalfSpace((-1, -1), -1)]
        with pytest.raises(Empty):
            enumerate_vertices(hs, 2)

    def test_pyramid_not_simple(self):
        hs = [
            HalfSpace((0, 0, 1), 0),
            HalfSpace((-1, 0, -1), -1),
            HalfSpace((1, 0, -1), -1),
            HalfSpace((0, -1, -1), -1),
            HalfSpace((0, 1, -1), -1),
        ]
        with pytest.raises(NotSimple):
            enumerate_vertices(hs, 3)

    def test_redundant(self):
        with pytest.raises(RedundantHalfSpace):
            enumerate_vertices(CP2 + [HalfSpace((1, 1), -5)], 2)

    def test_rational_vertex(self):
        hs = [HalfSpace((1, 0), 0), HalfSpace((0, 1), 0), HalfSpace((-1, -1), Fraction(-1, 2))]
        assert pts(enumerate_vertices(hs, 2)) == {(0, 0), (Fraction(1, 2), 0), (0, Fraction(1, 2))}

    def test_active_order_ascending(self):
        for f in enumerate_vertices(SQUARE, 2):
            assert list(f.active) == sorted(f.active)

    def test_non_primitive_normal_rejected(self):
        with pytest.raises(ValueError):
            HalfSpace((2, 0), 0)


class TestVertexFrame:
    def frame_at(self, hs, point):
        return next(f for f in enumerate_vertices(hs, 2) if f.vertex == point)

    def test_origin(self):
        f = vertex_frame(self.frame_at(CP2, (0, 0)))
        assert f.edges == ((1, 0), (0, 1))

    def test_cp2_vertex_10(self):
        f = vertex_frame(self.frame_at(CP2, (1, 0)))
        assert f.normals == ((0, 1), (-1, -1))
        assert f.edges == ((-1, 1), (-1, 0))

    def test_weighted_triangle(self):
        raw = self.frame_at(WEIGHTED, (0, 1))
        assert la.det(raw.normals) == -2
        with pytest.raises(NotSmoothDelzant):
            vertex_frame(raw)


class TestValidate:
    def test_cp2(self):
        rep = validate_delzant(CP2, 2)
        assert rep.passed and all(abs(v.determinant) == 1 for v in rep.vertices)

    def test_square(self):
        assert validate_delzant(SQUARE, 2).passed

    def test_weighted_triangle(self):
        rep = validate_delzant(WEIGHTED, 2)
        assert not rep.passed
        (bad,) = rep.failures
        assert bad.vertex == (0, 1) and bad.determinant == -2 and bad.simple and bad.rational

    def test_unbounded_reported_not_raised(self):
        rep = validate_delzant(CP2[:2], 2)
        assert not rep.passed and rep.error.startswith("Unbounded")

    def test_non_simple_reported(self):
        hs = [
            HalfSpace((0, 0, 1), 0),
            HalfSpace((-1, 0, -1), -1),
            HalfSpace((1, 0, -1), -1),
            HalfSpace((0, -1, -1), -1),
            HalfSpace((0, 1, -1), -1),
        ]
        rep = validate_delzant(hs, 3)
        assert not rep.passed
        assert [f.vertex for f in rep.failures] == [(0, 0, 1)]

    def test_one_dimensional(self):
        assert validate_delzant([HalfSpace((1,), 0), HalfSpace((-1,), -2)], 1).passed


class TestTransition:
    def test_identity(self, cp2):
        for i in range(3):
            assert transition_matrix(cp2, i, i) == la.identity(2)

    def test_cp2_example(self, cp2):
        a = cp2.vertices.index((0, 0))
        b = cp2.vertices.index((1, 0))
        assert transition_matrix(cp2, a, b) == ((-1, -1), (1, 0))

    def test_matches_definition(self, cp2):
        # D = Q_a^{-1} Q_b computed with a rational inverse
        for a, b in itertools.permutations(range(3), 2):
            Qa, Qb = cp2.frames[a].V, cp2.frames[b].V
            assert transition_matrix(cp2, a, b) == la.matmul(la.inverse(Qa), Qb)

    @pytest.mark.parametrize("name", list(corpus()))
    def test_cocycle(self, name):
        P = corpus()[name]
        k = len(P.frames)
        for a, b in itertools.product(range(k), repeat=2):
            assert la.matmul(transition_matrix(P, a, b), transition_matrix(P, b, a)) == la.identity(P.dim)
        for a, b, c in itertools.product(range(min(k, 6)), repeat=3):
            ab_bc = la.matmul(transition_matrix(P, a, b), transition_matrix(P, b, c))
            assert ab_bc == transition_matrix(P, a, c)


@pytest.mark.parametrize("name", list(corpus()))
def test_duality_and_edges(name):
    P = corpus()[name]
    verts = set(P.vertices)
    for f in P.frames:
        assert la.matmul(la.transpose(f.U), f.V) == la.identity(P.dim)
        assert abs(la.det(f.V)) == 1
        inactive = [h for i, h in enumerate(P.halfspaces) if i not in f.active]
        for v in f.edges:
            # walk along v until the first inactive facet becomes tight
            steps = [h.slack(f.vertex) / -la.dot(h.normal, v) for h in inactive if la.dot(h.normal, v) < 0]
            t = min(steps)
            assert t > 0
            assert tuple(x + t * y for x, y in zip(f.vertex, v)) in verts


class TestBuiltins:
    def test_simplex_is_cp2(self):
        assert simplex(2, 1).halfspaces == tuple(CP2)

    def test_product_is_square(self):
        assert set(product(simplex(1, 1), simplex(1, 1)).halfspaces) == set(SQUARE)

    def test_hirzebruch(self):
        H = hirzebruch(1, 1, 1)
        assert [(h.normal, h.offset) for h in H.halfspaces] == [
            ((1, 0), 0),
            ((0, 1), 0),
            ((0, -1), -1),
            ((-1, -1), -2),
        ]
        assert len(H.frames) == 4
        assert validate_delzant(H).passed

    @pytest.mark.parametrize(
        "make, params",
        [(simplex, (n, s)) for n in (1, 2, 3, 4) for s in (1, Fraction(1, 2), 3)]
        + [(cube, (n, s)) for n in (1, 2, 3) for s in (1, Fraction(5, 2))]
        + [(hirzebruch, (k, a, b)) for k in range(5) for a in (1, 2) for b in (Fraction(1, 3), 2)],
    )
    def test_sweep_validates(self, make, params):
        assert validate_delzant(make(*params)).passed

    def test_dispatch(self):
        assert builtin("cube", 2, 1).halfspaces == cube(2, 1).halfspaces
        assert builtin("product", simplex(1), simplex(2)).dim == 3
        with pytest.raises(UnknownName):
            builtin("torus", 2)
        with pytest.raises(BadParams):
            builtin("simplex", 0, 1)
        with pytest.raises(BadParams):
            builtin("cube", 2, -1)
        with pytest.raises(BadParams):
            builtin("hirzebruch", Fraction(1, 2), 1, 1)
        with pytest.raises(BadParams):
            builtin("product", simplex(1))

    def test_parse(self):
        assert parse_builtin("hirzebruch:2:1:3") == hirzebruch(2, 1, 3)
        assert parse_builtin("simplex:1:1*simplex:2:1").dim == 3
        assert parse_builtin("simplex:2:1/2").halfspaces[-1].offset == Fraction(-1, 2)
        with pytest.raises(BadParams):
            parse_builtin("simplex:x")

    def test_from_halfspaces_rejects_non_smooth(self):
        with pytest.raises(NotSmoothDelzant):
            DelzantPolytope.from_halfspaces(WEIGHTED)
