from fractions import Fraction

import pytest

from gkmloc.exact import ParamPoly
from gkmloc.toric import (
    L_HAT,
    L_TILDE,
    NotDelzantVertexError,
    NotFullDimensionalError,
    ParametricCombinatoricsUnstableError,
    Polytope,
    VertexData,
    VertexOnCutError,
    builtin_glue_report,
    builtin_polytopes,
    default_cut,
    glue_check,
    hull_combinatorics,
    polytope_edges,
    polytope_from_json,
    polytope_to_json,
    project_fixed_data,
    vertex_weights,
)


def lin(c1, c2):
    return ParamPoly.linear(c1, c2)


def const(c):
    return ParamPoly.const(c)


def const_polytope(coords, name=""):
    return Polytope(
        tuple(tuple(const(c) for c in v) for v in coords), name=name)


HAT = builtin_polytopes()["tolman-hat"]
TILDE = builtin_polytopes()["tolman-tilde"]

HAT_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 4), (2, 5),
             (3, 4), (3, 5), (4, 5))
TILDE_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 5), (2, 4),
               (3, 4), (3, 5), (4, 5))


class TestHullCombinatorics:
    def test_tetrahedron(self):
        facets, edges = hull_combinatorics(
            [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
        assert len(facets) == 4
        assert len(edges) == 6

    def test_cube_with_square_facets(self):
        corners = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
        facets, edges = hull_combinatorics(corners)
        assert len(facets) == 6
        assert all(len(f) == 4 for f in facets)
        assert len(edges) == 12

    def test_interior_points_ignored(self):
        corners = [(x, y, z) for x in (0, 2) for y in (0, 2) for z in (0, 2)]
        facets, edges = hull_combinatorics(corners + [(1, 1, 1)])
        assert len(facets) == 6
        assert len(edges) == 12
        assert all(8 not in f for f in facets)

    def test_flat_input_rejected(self):
        with pytest.raises(NotFullDimensionalError):
            hull_combinatorics([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0)])


class TestBuiltinPolytopes:
    def test_vertex_counts(self):
        assert len(HAT.vertices) == 6
        assert len(TILDE.vertices) == 6
        assert HAT.name == "tolman-hat"

    def test_edges(self):
        assert polytope_edges(HAT) == HAT_EDGES
        assert polytope_edges(TILDE) == TILDE_EDGES

    def test_chopped_corner_edge_lengths(self):
        # the triangle replacing the chopped corner has side length l2 - l1
        v3, v4, v5 = TILDE.vertices[3], TILDE.vertices[4], TILDE.vertices[5]
        assert tuple(v4[c] - v3[c] for c in range(3)) == \
            (ParamPoly.zero(), lin(-1, 1), ParamPoly.zero())
        assert tuple(v5[c] - v3[c] for c in range(3)) == \
            (lin(-1, 1), ParamPoly.zero(), ParamPoly.zero())

    def test_vertex_weights(self):
        assert vertex_weights(HAT, 0) == ((1, 0, 0), (0, 1, 0), (0, 0, 1))
        assert vertex_weights(HAT, 4) == ((0, 0, -1), (-1, 0, 0), (-1, 1, 0))
        assert vertex_weights(TILDE, 3) == ((-1, -1, -1), (0, 1, 0), (1, 0, 0))

    def test_all_vertices_are_delzant(self):
        for poly in (HAT, TILDE):
            edges = polytope_edges(poly)
            for idx in range(6):
                assert len(vertex_weights(poly, idx, edges)) == 3

    def test_json_round_trip(self):
        assert polytope_from_json(polytope_to_json(TILDE)) == TILDE

    def test_vertex_validation(self):
        with pytest.raises(TypeError):
            Polytope(((lin(1, 0), lin(0, 1)),))


class TestDelzantChecks:
    def test_four_edges_at_a_vertex(self):
        pyramid = const_polytope([
            (0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0),
            (Fraction(1, 2), Fraction(1, 2), 1),
        ])
        with pytest.raises(NotDelzantVertexError):
            vertex_weights(pyramid, 4)

    def test_non_unimodular_corner(self):
        tet = const_polytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 2)])
        with pytest.raises(NotDelzantVertexError):
            vertex_weights(tet, 0)

    def test_unknown_vertex_index(self):
        with pytest.raises(IndexError):
            vertex_weights(HAT, 17)

    def test_parameter_dependent_combinatorics_detected(self):
        # fifth point sits inside the simplex at (1, 2) and outside at (1, 3)
        t = lin(Fraction(-7, 4), 1)
        probe = Polytope((
            (const(0), const(0), const(0)),
            (const(1), const(0), const(0)),
            (const(0), const(1), const(0)),
            (const(0), const(0), const(1)),
            (t, t, t),
        ))
        with pytest.raises(ParametricCombinatoricsUnstableError):
            polytope_edges(probe)


class TestProjection:
    def test_matrix_validation(self):
        with pytest.raises(ValueError):
            project_fixed_data(TILDE, ((1, 0), (0, 1)))
        with pytest.raises(ValueError):
            project_fixed_data(TILDE, ((1, 0, 0),))

    def test_tilde_vertex_one(self):
        data = project_fixed_data(TILDE, L_TILDE)
        vd = data[1]
        assert vd.image == (lin(2, 1), lin(0, 0))
        assert sorted(vd.weights) == [(-2, 1), (-1, 0), (-1, 1)]

    def test_hat_vertex_five(self):
        data = project_fixed_data(HAT, L_HAT)
        vd = data[5]
        assert vd.image == (lin(1, 0), lin(1, 1))
        assert sorted(vd.weights) == [(-1, 0), (0, -1), (1, -1)]


class TestGlue:
    def test_builtin_pair_glues(self):
        report = builtin_glue_report()
        assert report.ok
        assert report.matched == ("x00", "x03", "x11", "x13", "x21", "x40")
        assert report.tilde_points == ("x00", "x11", "x21", "x40")
        assert report.hat_points == ("x03", "x13")
        assert report.problems == ()

    def test_default_cut_level(self):
        assert default_cut() == ParamPoly.linear(Fraction(1, 2), Fraction(1, 2))

    def test_moved_vertex_breaks_the_match(self):
        hat_data = project_fixed_data(HAT, L_HAT)
        tilde_data = list(project_fixed_data(TILDE, L_TILDE))
        vd = tilde_data[3]
        tilde_data[3] = VertexData(vd.index, (lin(2, 0), lin(1, 0)), vd.weights)
        report = glue_check(hat_data, tuple(tilde_data))
        assert not report.ok
        assert any("no surviving vertex maps to x11" in p for p in report.problems)
        assert any("extra tilde vertex" in p for p in report.problems)

    def test_wrong_weights_break_the_match(self):
        hat_data = project_fixed_data(HAT, L_HAT)
        tilde_data = list(project_fixed_data(TILDE, L_TILDE))
        vd = tilde_data[3]
        bad = ((5, 5),) + vd.weights[1:]
        tilde_data[3] = VertexData(vd.index, vd.image, bad)
        report = glue_check(hat_data, tuple(tilde_data))
        assert not report.ok
        assert any(p.startswith("weights at x11 differ") for p in report.problems)

    def test_vertex_on_cut_rejected(self):
        hat_data = project_fixed_data(HAT, L_HAT)
        tilde_data = project_fixed_data(TILDE, L_TILDE)
        with pytest.raises(VertexOnCutError):
            glue_check(hat_data, tilde_data, cut=ParamPoly.linear(0, 1))

    def test_parameter_dependent_cut_side_rejected(self):
        hat_data = project_fixed_data(HAT, L_HAT)
        tilde_data = project_fixed_data(TILDE, L_TILDE)
        # above the cut at (1, 2), below it at (1, 3)
        wobble = VertexData(9, (lin(0, 0), lin(3, Fraction(-1, 2))), ())
        with pytest.raises(ParametricCombinatoricsUnstableError):
            glue_check(hat_data, tilde_data + (wobble,))
