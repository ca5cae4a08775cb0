import math
from fractions import Fraction

import pytest

from gkmloc.exact import ParamPoly
from gkmloc.gkm import (
    AxisSubcircleError,
    CircleAction,
    DegenerateWeightError,
    Edge,
    EdgeFixedPointwiseError,
    FixedPoint,
    GKMGraph,
    IncompleteCocycleError,
    MalformedEdgeError,
    NoSuchFixedPointError,
    NotCoprimeError,
    betti_numbers,
    builtin_graphs,
    c1_on_sphere,
    c1_values,
    edge_weight,
    fixed_point_index,
    graph_from_json,
    graph_to_json,
    hamiltonian,
    is_coprime_action,
    isotropy_spheres,
    omega_basis_values,
    outgoing_edges,
    pair_with_c2,
    restrict_weights,
    sphere_area,
    tolman_coprime_criterion,
    tolman_graph,
)


def lin(c1, c2):
    return ParamPoly.linear(c1, c2)


G = tolman_graph()

POINT_IDS = ("x00", "x03", "x11", "x13", "x21", "x40")

# outgoing primitive directions at each point, ascending lex order
DIRECTIONS = {
    "x00": ((0, 1), (1, 0), (1, 1)),
    "x03": ((0, -1), (1, -1), (1, 0)),
    "x11": ((-1, -1), (0, 1), (1, 0)),
    "x13": ((-1, 0), (0, -1), (1, -1)),
    "x21": ((-1, 0), (-1, 1), (2, -1)),
    "x40": ((-2, 1), (-1, 0), (-1, 1)),
}

# symplectic area of each sphere, keyed by unordered endpoint pair
AREAS = {
    ("x00", "x40"): lin(2, 1),
    ("x00", "x03"): lin(1, 1),
    ("x00", "x11"): lin(1, 0),
    ("x11", "x21"): lin(-1, 1),
    ("x11", "x13"): lin(0, 1),
    ("x03", "x13"): lin(1, 0),
    ("x21", "x40"): lin(1, 0),
    ("x03", "x21"): lin(0, 1),
    ("x13", "x40"): lin(1, 1),
}

# <c1, S> for each sphere
C1_TABLE = {
    ("x00", "x40"): 6,
    ("x00", "x03"): 4,
    ("x13", "x40"): 4,
    ("x00", "x11"): 2,
    ("x03", "x13"): 2,
    ("x03", "x21"): 2,
    ("x11", "x13"): 2,
    ("x21", "x40"): 2,
    ("x11", "x21"): 0,
}


def edge_key(e):
    return tuple(sorted((e.tail, e.head)))


def nondegenerate(a, b):
    return 0 not in (a, b, a + b, a - b, 2 * a - b)


class TestGraphStructure:
    def test_point_and_edge_counts(self):
        assert tuple(p.id for p in G.points) == POINT_IDS
        assert len(G.edges) == 9

    def test_builtin_registry(self):
        assert builtin_graphs()["tolman"] is G

    def test_trivalent(self):
        for pid in POINT_IDS:
            assert len(outgoing_edges(G, pid)) == 3

    def test_canonical_outgoing_directions(self):
        for pid, dirs in DIRECTIONS.items():
            assert tuple(d for _, d in outgoing_edges(G, pid)) == dirs

    def test_direction_multiset_is_symmetric(self):
        all_dirs = [d for pid in POINT_IDS for _, d in outgoing_edges(G, pid)]
        negated = sorted((-x, -y) for x, y in all_dirs)
        assert sorted(all_dirs) == negated

    def test_moment_images(self):
        assert G.point("x40").moment_image == (lin(2, 1), lin(0, 0))
        assert G.point("x13").moment_image == (lin(1, 0), lin(1, 1))

    def test_unknown_point(self):
        with pytest.raises(NoSuchFixedPointError):
            outgoing_edges(G, "x99")

    def test_json_round_trip(self):
        assert graph_from_json(graph_to_json(G)) == G


class TestGraphValidation:
    def test_non_primitive_direction_rejected(self):
        with pytest.raises(MalformedEdgeError):
            Edge("p", "q", (2, 2))

    def test_loop_rejected(self):
        with pytest.raises(MalformedEdgeError):
            Edge("p", "p", (1, 0))

    def test_non_collinear_edge_rejected(self):
        pts = (
            FixedPoint("p", (lin(0, 0), lin(0, 0))),
            FixedPoint("q", (lin(1, 0), lin(1, 0))),
        )
        with pytest.raises(MalformedEdgeError):
            GKMGraph(pts, (Edge("p", "q", (1, 0)),))

    def test_backwards_edge_rejected(self):
        # head - tail = -l1 * (1, 0): negative area
        pts = (
            FixedPoint("p", (lin(1, 0), lin(0, 0))),
            FixedPoint("q", (lin(0, 0), lin(0, 0))),
        )
        with pytest.raises(MalformedEdgeError):
            GKMGraph(pts, (Edge("p", "q", (1, 0)),))

    def test_unknown_endpoint_rejected(self):
        pts = (FixedPoint("p", (lin(0, 0), lin(0, 0))),)
        with pytest.raises(MalformedEdgeError):
            GKMGraph(pts, (Edge("p", "q", (1, 0)),))

    def test_trivial_subcircle_rejected(self):
        with pytest.raises(ValueError):
            CircleAction(0, 0)

    def test_edge_reversal_is_harmless(self):
        flipped = []
        for e in G.edges:
            if (e.tail, e.head) == ("x00", "x11"):
                flipped.append(Edge("x11", "x00", (-1, -1)))
            else:
                flipped.append(e)
        g2 = GKMGraph(G.points, tuple(flipped))
        for pid in POINT_IDS:
            assert restrict_weights(g2, (2, 1), pid) == restrict_weights(G, (2, 1), pid)
        assert betti_numbers(g2, (2, 1)) == betti_numbers(G, (2, 1))
        vals = {edge_key(e): v for e, v in c1_values(g2, (2, 1)).items()}
        assert vals == C1_TABLE


class TestWeights:
    def test_frozen_weight_vectors(self):
        assert restrict_weights(G, (2, 1), "x00") == (1, 2, 3)
        assert restrict_weights(G, (2, 1), "x40") == (-3, -2, -1)
        assert restrict_weights(G, (7, 2), "x40") == (-12, -7, -5)
        assert restrict_weights(G, (2, 1), "x03") == (-1, 1, 2)

    def test_weight_formulas(self):
        # the six weight triples as functions of (a, b), canonical order
        formulas = {
            "x00": lambda a, b: (b, a, a + b),
            "x03": lambda a, b: (-b, a - b, a),
            "x11": lambda a, b: (-a - b, b, a),
            "x13": lambda a, b: (-a, -b, a - b),
            "x21": lambda a, b: (-a, -a + b, 2 * a - b),
            "x40": lambda a, b: (-2 * a + b, -a, -a + b),
        }
        for a, b in [(2, 1), (1, 3), (7, 2), (-3, 5), (4, -9)]:
            for pid in POINT_IDS:
                assert restrict_weights(G, (a, b), pid) == formulas[pid](a, b)

    def test_weight_sum_is_zero_over_graph(self):
        for a, b in [(2, 1), (5, -7)]:
            total = sum(sum(restrict_weights(G, (a, b), pid)) for pid in POINT_IDS)
            assert total == 0

    def test_edge_weight_orientation(self):
        e = next(e for e in G.edges if edge_key(e) == ("x21", "x40"))
        assert edge_weight(G, (2, 1), e) == 3
        assert edge_weight(G, (1, 3), e) == -1

    def test_hamiltonian_values(self):
        assert hamiltonian(G, (2, 1), "x13") == ParamPoly({(1, 0): 3, (0, 1): 1})
        assert hamiltonian(G, (2, 1), "x00") == ParamPoly.zero()


class TestMorseData:
    def test_index_counts_negative_weights(self):
        assert fixed_point_index((-1, 2, 1)) == 2
        assert fixed_point_index((-1, -2, -3)) == 6
        assert fixed_point_index((1, 2, 3)) == 0

    def test_zero_weight_rejected(self):
        with pytest.raises(DegenerateWeightError):
            fixed_point_index((0, 1, 2))

    def test_betti_numbers(self):
        assert betti_numbers(G, (2, 1)) == (1, 0, 2, 0, 2, 0, 1)
        assert betti_numbers(G, (1, 3)) == (1, 0, 2, 0, 2, 0, 1)

    def test_betti_degenerate_subcircle(self):
        with pytest.raises(DegenerateWeightError):
            betti_numbers(G, (1, 1))

    def test_betti_needs_uniform_valence(self):
        pts = (
            FixedPoint("p", (lin(0, 0), lin(0, 0))),
            FixedPoint("q", (lin(1, 0), lin(0, 0))),
            FixedPoint("r", (lin(2, 0), lin(0, 0))),
        )
        path = GKMGraph(pts, (Edge("p", "q", (1, 0)), Edge("q", "r", (1, 0))))
        with pytest.raises(ValueError):
            betti_numbers(path, (2, 1))


class TestSpheres:
    def test_areas(self):
        for e in G.edges:
            assert sphere_area(G, e) == AREAS[edge_key(e)]

    def test_c1_pairings(self):
        vals = {edge_key(e): v for e, v in c1_values(G, (2, 1)).items()}
        assert vals == C1_TABLE

    def test_c1_is_subcircle_independent(self):
        tables = []
        for s in [(2, 1), (1, 3), (-4, 7), (5, 2)]:
            tables.append({edge_key(e): v for e, v in c1_values(G, s).items()})
        assert all(t == tables[0] for t in tables)

    def test_c1_multiset(self):
        vals = sorted(c1_values(G, (2, 1)).values(), reverse=True)
        assert vals == [6, 4, 4, 2, 2, 2, 2, 2, 0]

    def test_pointwise_fixed_sphere_rejected(self):
        e = next(e for e in G.edges if edge_key(e) == ("x11", "x21"))
        with pytest.raises(EdgeFixedPointwiseError):
            c1_on_sphere(G, (0, 1), e)

    def test_omega_basis_values(self):
        expected = {
            ("x00", "x40"): (2, 1),
            ("x00", "x03"): (1, 1),
            ("x00", "x11"): (1, 0),
            ("x11", "x21"): (-1, 1),
            ("x11", "x13"): (0, 1),
            ("x03", "x13"): (1, 0),
            ("x21", "x40"): (1, 0),
            ("x03", "x21"): (0, 1),
            ("x13", "x40"): (1, 1),
        }
        vals = omega_basis_values(G)
        assert {edge_key(e): v for e, v in vals.items()} == expected

    def test_omega_values_reassemble_area(self):
        for e, (x, y) in omega_basis_values(G).items():
            assert ParamPoly.linear(x, y) == sphere_area(G, e)

    def test_c2_pairings_from_cocycles(self):
        vals = omega_basis_values(G)
        assert pair_with_c2(G, {e: v[0] for e, v in vals.items()}) == 6
        assert pair_with_c2(G, {e: v[1] for e, v in vals.items()}) == 6
        c1s = c1_values(G, (2, 1))
        assert pair_with_c2(G, c1s) == 24

    def test_incomplete_cocycle_rejected(self):
        vals = dict(c1_values(G, (2, 1)))
        vals.pop(next(iter(vals)))
        with pytest.raises(IncompleteCocycleError):
            pair_with_c2(G, vals)


class TestCoprimality:
    def test_coprime_example(self):
        ok, witness = is_coprime_action(G, (7, 2))
        assert ok and witness is None

    def test_unit_weight_witness(self):
        ok, witness = is_coprime_action(G, (2, 1))
        assert not ok
        assert (witness.point, witness.reason) == ("x00", "unit_weight")
        ok, witness = is_coprime_action(G, (3, 2))
        assert not ok
        assert (witness.point, witness.weights, witness.reason) == ("x03", (1,), "unit_weight")

    def test_common_factor_witness(self):
        ok, witness = is_coprime_action(G, (2, 4))
        assert not ok
        assert witness.reason == "common_factor"
        assert math.gcd(*witness.weights) > 1

    def test_zero_weight_witness(self):
        ok, witness = is_coprime_action(G, (-2, 2))
        assert not ok
        assert (witness.weights, witness.reason) == ((0,), "zero_weight")

    def test_axis_subcircles_rejected(self):
        with pytest.raises(AxisSubcircleError):
            is_coprime_action(G, (0, 1))
        with pytest.raises(AxisSubcircleError):
            tolman_coprime_criterion(5, 0)

    def test_criterion_matches_direct_test(self):
        for a in range(-6, 7):
            for b in range(-6, 7):
                if a == 0 or b == 0:
                    continue
                ok, _ = is_coprime_action(G, (a, b))
                assert tolman_coprime_criterion(a, b) == ok, (a, b)

    def test_criterion_boundary_cases(self):
        # pairwise-coprime weights but fails on a unit weight
        assert not tolman_coprime_criterion(1, 4)
        assert not tolman_coprime_criterion(3, 5)  # 2a - b = 1
        assert tolman_coprime_criterion(5, 3)
        assert tolman_coprime_criterion(7, 2)
        assert not tolman_coprime_criterion(2, 4)  # common factor


class TestIsotropySpheres:
    def test_orders_for_coprime_subcircle(self):
        expected = {
            ("x00", "x40"): 7,
            ("x00", "x03"): 2,
            ("x00", "x11"): 9,
            ("x11", "x21"): 7,
            ("x11", "x13"): 2,
            ("x03", "x13"): 7,
            ("x21", "x40"): 12,
            ("x03", "x21"): 5,
            ("x13", "x40"): 5,
        }
        spheres = isotropy_spheres(G, (7, 2))
        assert len(spheres) == 9
        assert {edge_key(e): order for e, order in spheres} == expected
        assert all(order >= 2 for _, order in spheres)

    def test_non_coprime_subcircle_rejected(self):
        with pytest.raises(NotCoprimeError):
            isotropy_spheres(G, (2, 1))
