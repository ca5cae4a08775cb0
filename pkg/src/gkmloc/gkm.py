"""GKM graphs: moment graphs of Hamiltonian T^2-actions on 6-manifolds.

A graph records the fixed points with their moment images (linear polynomials
in the parameters l1 < l2) and the invariant 2-spheres as edges labeled by a
primitive integer direction. A subcircle of T^2 is a pair (a, b); the weight
of the subcircle along an outgoing edge with primitive direction (x1, x2) is

    w = a*x1 + b*x2.

The six-fixed-point graph with moment images (0,0), (2*l1+l2, 0), (l1, l1),
(l2, l1), (0, l1+l2), (l1, l1+l2) ships as the built-in "tolman".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .exact import (
    ParamPoly,
    ToolkitError,
    primitive,
    rat,
)


class NoSuchFixedPointError(ToolkitError):
    code = "NoSuchFixedPoint"


class DegenerateWeightError(ToolkitError):
    code = "DegenerateWeight"


class MalformedEdgeError(ToolkitError):
    code = "MalformedEdge"


class EdgeFixedPointwiseError(ToolkitError):
    code = "EdgeFixedPointwise"


class AxisSubcircleError(ToolkitError):
    code = "AxisSubcircle"


class NotCoprimeError(ToolkitError):
    code = "NotCoprime"


class IncompleteCocycleError(ToolkitError):
    code = "IncompleteCocycle"


# Sample parameter values used to certify polynomial sign conditions; both
# satisfy 0 < l1 < l2.
_SIGN_SAMPLES = ((1, 2), (2, 5))


@dataclass(frozen=True)
class CircleAction:
    """Subcircle {(t^a, t^b)} of T^2; (a, b) must not both vanish."""

    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("CircleAction components must be ints")
        if self.a == 0 and self.b == 0:
            raise ValueError("CircleAction (0, 0) is trivial")


def as_action(s) -> CircleAction:
    """Coerce a CircleAction or (a, b) pair."""
    if isinstance(s, CircleAction):
        return s
    a, b = s
    return CircleAction(int(a), int(b))


@dataclass(frozen=True)
class FixedPoint:
    id: str
    moment_image: tuple

    def __post_init__(self):
        img = tuple(self.moment_image)
        object.__setattr__(self, "moment_image", img)
        if len(img) != 2 or not all(isinstance(c, ParamPoly) for c in img):
            raise TypeError("moment_image must be a pair of ParamPoly")
        for c in img:
            if c.degree() > 1:
                raise ValueError(f"moment image of {self.id} is not linear")


@dataclass(frozen=True)
class Edge:
    """Invariant sphere from tail to head; direction is primitive, nonzero."""

    tail: str
    head: str
    direction: tuple

    def __post_init__(self):
        d = tuple(int(c) for c in self.direction)
        object.__setattr__(self, "direction", d)
        if len(d) != 2:
            raise MalformedEdgeError("edge direction must be a 2-vector")
        if self.tail == self.head:
            raise MalformedEdgeError("edge endpoints must differ")
        u, g = primitive(d)
        if g != 1:
            raise MalformedEdgeError(f"direction {d} is not primitive")


@dataclass(frozen=True)
class GKMGraph:
    """Validated moment graph; points and edges are kept in canonical order."""

    points: tuple
    edges: tuple

    def __post_init__(self):
        pts = tuple(sorted(self.points, key=lambda p: p.id))
        edges = tuple(sorted(self.edges, key=lambda e: (e.tail, e.head)))
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "edges", edges)
        ids = [p.id for p in pts]
        if len(set(ids)) != len(ids):
            raise ValueError("fixed point ids must be unique")
        known = set(ids)
        for e in edges:
            if e.tail not in known or e.head not in known:
                raise MalformedEdgeError(f"edge {e.tail}->{e.head} references unknown point")
            # raises MalformedEdgeError unless head - tail = area * direction
            # with area positive at the sample parameter values
            _edge_area(self, e)

    @cached_property
    def _by_id(self):
        return {p.id: p for p in self.points}

    @cached_property
    def _outgoing(self):
        out = {p.id: [] for p in self.points}
        for e in self.edges:
            out[e.tail].append((e, e.direction))
            out[e.head].append((e, (-e.direction[0], -e.direction[1])))
        # canonical order at each point: ascending lex on the direction vector
        return {pid: tuple(sorted(inc, key=lambda t: t[1])) for pid, inc in out.items()}

    def point(self, point_id: str) -> FixedPoint:
        try:
            return self._by_id[point_id]
        except KeyError:
            raise NoSuchFixedPointError(f"no fixed point {point_id!r}") from None


def _edge_area(g: GKMGraph, e: Edge) -> ParamPoly:
    """Area polynomial A with head - tail == A * direction, A > 0 on samples."""
    tail = g.point(e.tail).moment_image
    head = g.point(e.head).moment_image
    diff = (head[0] - tail[0], head[1] - tail[1])
    x1, x2 = e.direction
    area = diff[0] / x1 if x1 else diff[1] / x2
    if diff[0] != area * x1 or diff[1] != area * x2:
        raise MalformedEdgeError(
            f"edge {e.tail}->{e.head}: moment images not collinear with {e.direction}")
    for l1, l2 in _SIGN_SAMPLES:
        if area.evaluate(l1, l2) <= 0:
            raise MalformedEdgeError(
                f"edge {e.tail}->{e.head}: area {area} not positive at ({l1},{l2})")
    return area


# ---------------------------------------------------------------------------
# built-in graph
# ---------------------------------------------------------------------------

def _lin(c1, c2) -> ParamPoly:
    return ParamPoly.linear(c1, c2)


@lru_cache(maxsize=None)
def tolman_graph() -> GKMGraph:
    """The six-fixed-point moment graph with non-invariant-Kaehler interior.

    Fixed point ids encode the moment image at (l1, l2) = (1, 2): point xIJ
    sits at (I, J).
    """
    points = (
        FixedPoint("x00", (_lin(0, 0), _lin(0, 0))),
        FixedPoint("x40", (_lin(2, 1), _lin(0, 0))),
        FixedPoint("x11", (_lin(1, 0), _lin(1, 0))),
        FixedPoint("x21", (_lin(0, 1), _lin(1, 0))),
        FixedPoint("x03", (_lin(0, 0), _lin(1, 1))),
        FixedPoint("x13", (_lin(1, 0), _lin(1, 1))),
    )
    edges = (
        Edge("x00", "x40", (1, 0)),
        Edge("x00", "x03", (0, 1)),
        Edge("x00", "x11", (1, 1)),
        Edge("x11", "x21", (1, 0)),
        Edge("x11", "x13", (0, 1)),
        Edge("x03", "x13", (1, 0)),
        Edge("x21", "x40", (2, -1)),
        Edge("x21", "x03", (-1, 1)),
        Edge("x13", "x40", (1, -1)),
    )
    return GKMGraph(points, edges)


def builtin_graphs():
    return {"tolman": tolman_graph()}


# ---------------------------------------------------------------------------
# JSON round trip
# ---------------------------------------------------------------------------

def graph_to_json(g: GKMGraph) -> dict:
    return {
        "points": [
            {"id": p.id, "image": [c.to_json() for c in p.moment_image]}
            for p in g.points
        ],
        "edges": [
            {"tail": e.tail, "head": e.head, "dir": list(e.direction)}
            for e in g.edges
        ],
    }


def graph_from_json(data: dict) -> GKMGraph:
    points = tuple(
        FixedPoint(rec["id"], tuple(ParamPoly.from_json(c) for c in rec["image"]))
        for rec in data["points"]
    )
    edges = tuple(
        Edge(rec["tail"], rec["head"], tuple(rec["dir"])) for rec in data["edges"]
    )
    return GKMGraph(points, edges)


# ---------------------------------------------------------------------------
# weights, indices, Betti numbers
# ---------------------------------------------------------------------------

def outgoing_edges(g: GKMGraph, point_id: str):
    """(edge, outgoing direction) pairs at a point, in canonical order."""
    g.point(point_id)
    return g._outgoing[point_id]


def restrict_weights(g: GKMGraph, s, point_id: str):
    """Weights of subcircle s at a fixed point, one per incident edge.

    Order follows the canonical edge order (ascending lex on the outgoing
    direction).
    """
    s = as_action(s)
    return tuple(s.a * d[0] + s.b * d[1] for _, d in outgoing_edges(g, point_id))


def edge_weight(g: GKMGraph, s, e: Edge) -> int:
    """Weight of s on the sphere e, measured along the tail-to-head direction."""
    s = as_action(s)
    return s.a * e.direction[0] + s.b * e.direction[1]


def hamiltonian(g: GKMGraph, s, point_id: str) -> ParamPoly:
    """Value of the momentum a*phi1 + b*phi2 at a fixed point."""
    s = as_action(s)
    img = g.point(point_id).moment_image
    return img[0] * s.a + img[1] * s.b


def fixed_point_index(weights) -> int:
    """Morse index of the momentum at a point: twice the number of negative weights."""
    ws = tuple(int(w) for w in weights)
    if any(w == 0 for w in ws):
        raise DegenerateWeightError(f"zero weight in {ws}; index undefined")
    return 2 * sum(1 for w in ws if w < 0)


def betti_numbers(g: GKMGraph, s):
    """Even Betti numbers (b0, b1, ..., b_{2n}) read off the index histogram."""
    valences = {len(outgoing_edges(g, p.id)) for p in g.points}
    if len(valences) != 1:
        raise ValueError("graph is not uniformly valent")
    n = valences.pop()
    betti = [0] * (2 * n + 1)
    for p in g.points:
        betti[fixed_point_index(restrict_weights(g, s, p.id))] += 1
    return tuple(betti)


# ---------------------------------------------------------------------------
# spheres: symplectic area and first Chern class
# ---------------------------------------------------------------------------

def sphere_area(g: GKMGraph, e: Edge) -> ParamPoly:
    """Symplectic area of the sphere e: head - tail = area * direction."""
    return _edge_area(g, e)


def c1_on_sphere(g: GKMGraph, s, e: Edge) -> Fraction:
    """Pairing of c1 of the ambient manifold with the invariant sphere e.

    Computed from the weight sums at the two poles: with p_min/p_max the
    endpoints ordered by the momentum of s (their difference equals
    area * w, so the sign of the restricted weight w decides the order),

        <c1, S> = (sum of weights at p_min - sum at p_max) / |w|.

    The value does not depend on s as long as w != 0.
    """
    s = as_action(s)
    w = edge_weight(g, s, e)
    if w == 0:
        raise EdgeFixedPointwiseError(
            f"subcircle ({s.a},{s.b}) fixes the sphere {e.tail}->{e.head} pointwise")
    lo, hi = (e.tail, e.head) if w > 0 else (e.head, e.tail)
    total_lo = sum(restrict_weights(g, s, lo))
    total_hi = sum(restrict_weights(g, s, hi))
    return Fraction(total_lo - total_hi, abs(w))


def c1_values(g: GKMGraph, s) -> dict:
    """c1 pairing for every edge, keyed by Edge, in one pass."""
    return {e: c1_on_sphere(g, s, e) for e in g.edges}


# ---------------------------------------------------------------------------
# coprime subcircles and isotropy spheres
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CoprimeWitness:
    """Failure certificate: the point and the offending weight(s)."""

    point: str
    weights: tuple
    reason: str


def is_coprime_action(g: GKMGraph, s):
    """Whether the weights of s are coprime at every fixed point.

    Coprime at a point means all pairwise gcds are 1 and no weight lies in
    {-1, 0, 1} (a unit weight would make the corresponding invariant sphere a
    free-orbit sphere rather than an isotropy sphere). Returns (ok, witness)
    with witness None on success; on failure the witness is the first
    violation in canonical point order.
    """
    s = as_action(s)
    if s.a == 0 or s.b == 0:
        raise AxisSubcircleError("coprimality test needs a, b both nonzero")
    for p in g.points:
        ws = restrict_weights(g, s, p.id)
        for w in ws:
            if w == 0:
                return False, CoprimeWitness(p.id, (w,), "zero_weight")
            if abs(w) == 1:
                return False, CoprimeWitness(p.id, (w,), "unit_weight")
        for i in range(len(ws)):
            for j in range(i + 1, len(ws)):
                if math.gcd(ws[i], ws[j]) != 1:
                    return False, CoprimeWitness(p.id, (ws[i], ws[j]), "common_factor")
    return True, None


def tolman_coprime_criterion(a: int, b: int) -> bool:
    """Closed-form coprimality test for subcircles of the built-in graph.

    The weight magnitudes occurring in the graph are exactly
    {|a|, |b|, |a+b|, |a-b|, |2a-b|}, and every pairwise gcd reduces to
    gcd(a, b), so coprimality is the conjunction below.
    """
    if a == 0 or b == 0:
        raise AxisSubcircleError("criterion needs a, b both nonzero")
    return (
        math.gcd(a, b) == 1
        and abs(a) > 1
        and abs(b) > 1
        and abs(a + b) > 1
        and abs(a - b) > 1
        and abs(2 * a - b) > 1
    )


def isotropy_spheres(g: GKMGraph, s):
    """The isotropy spheres of a coprime subcircle with their stabilizer orders.

    Each invariant sphere on which s acts with weight w has generic stabilizer
    Z_|w|; for a coprime action every |w| >= 2, so all spheres qualify.
    """
    s = as_action(s)
    ok, witness = is_coprime_action(g, s)
    if not ok:
        raise NotCoprimeError(f"subcircle ({s.a},{s.b}) is not coprime: {witness}")
    return tuple((e, abs(edge_weight(g, s, e))) for e in g.edges)


# ---------------------------------------------------------------------------
# degree-2 classes from areas, and the c2 pairing
# ---------------------------------------------------------------------------

def omega_basis_values(g: GKMGraph):
    """Per-edge values (xi, eta) of the two classes decomposing the symplectic class.

    The symplectic class evaluates on the sphere e to its area, and the area
    is required to be homogeneous linear: area = xi*l1 + eta*l2. The returned
    values are the coefficient pairs, keyed by Edge.
    """
    out = {}
    for e in g.edges:
        area = sphere_area(g, e)
        if not area.is_homogeneous(1):
            raise ValueError(
                f"area of {e.tail}->{e.head} is not homogeneous linear: {area}")
        out[e] = (area.coefficient(1, 0), area.coefficient(0, 1))
    return out


def pair_with_c2(g: GKMGraph, values) -> Fraction:
    """Pair a degree-2 class, given by its value on each sphere, with c2.

    c2 of the ambient manifold is Poincare dual to the sum of the invariant
    spheres, so the pairing is the sum of the per-edge values. Every edge of
    the graph must be present in the mapping.
    """
    total = Fraction(0)
    for e in g.edges:
        if e not in values:
            raise IncompleteCocycleError(f"missing value on edge {e.tail}->{e.head}")
        total += rat(values[e])
    return total
