"""Intersection theory of projectivized rank-2 bundles over the projective plane.

For a rank-2 complex vector bundle E over CP^2 with c1(E) = k1*h and
c2(E) = k2*h^2, the projectivization P(E) has integral cohomology ring

    Z[eta, xi] / (eta^3, xi^2 + k1*eta*xi + k2*eta^2)

where eta is the pullback of the hyperplane class and xi is the first Chern
class of the fiberwise dual tautological line bundle. A basis of the even
cohomology is 1; eta, xi; eta^2, eta*xi; eta^2*xi, and integration sends
eta^2*xi to 1.

Degree-2k elements are stored as coordinate vectors in that basis, ordered
(eta, xi) in degree 2 and (eta^2, eta*xi) in degree 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .exact import Rational, ToolkitError, rat


class DegreeOverflowError(ToolkitError):
    code = "DegreeOverflow"


class NotTopDegreeError(ToolkitError):
    code = "NotTopDegree"


class NotCubicError(ToolkitError):
    code = "NotCubic"


class NotUnimodularError(ToolkitError):
    code = "NotUnimodular"


_BASIS_SIZE = {0: 1, 2: 2, 4: 2, 6: 1}
_BASIS_NAMES = {
    0: ("1",),
    2: ("eta", "xi"),
    4: ("eta^2", "eta*xi"),
    6: ("eta^2*xi",),
}


@dataclass(frozen=True)
class Bundle:
    """Chern data (k1, k2) of the rank-2 bundle being projectivized."""

    k1: int
    k2: int

    def __post_init__(self):
        if not isinstance(self.k1, int) or not isinstance(self.k2, int):
            raise TypeError("bundle Chern numbers must be ints")


@dataclass(frozen=True)
class RingElement:
    """Homogeneous class of even degree 0, 2, 4 or 6 in normal-form coordinates."""

    degree: int
    coords: tuple

    def __post_init__(self):
        if self.degree not in _BASIS_SIZE:
            raise DegreeOverflowError(f"no classes of degree {self.degree}")
        coords = tuple(rat(c) for c in self.coords)
        if len(coords) != _BASIS_SIZE[self.degree]:
            raise ValueError(
                f"degree {self.degree} needs {_BASIS_SIZE[self.degree]} coordinates")
        object.__setattr__(self, "coords", coords)

    def __add__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("cannot add classes of different degrees")
        return RingElement(self.degree,
                           tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        if not isinstance(other, RingElement):
            return NotImplemented
        return self + (-1) * other

    def __mul__(self, scalar):
        if isinstance(scalar, RingElement):
            raise TypeError("use cup() to multiply ring classes")
        c = rat(scalar)
        return RingElement(self.degree, tuple(c * v for v in self.coords))

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __str__(self):
        names = _BASIS_NAMES[self.degree]
        parts = [f"{c}*{n}" if n != "1" else str(c)
                 for c, n in zip(self.coords, names) if c]
        return " + ".join(parts) if parts else "0"


def one() -> RingElement:
    return RingElement(0, (1,))


def eta() -> RingElement:
    return RingElement(2, (1, 0))


def xi() -> RingElement:
    return RingElement(2, (0, 1))


def degree2(a, b) -> RingElement:
    """a*eta + b*xi."""
    return RingElement(2, (a, b))


def cup(bundle: Bundle, x: RingElement, y: RingElement) -> RingElement:
    """Cup product in the ring of P(E), reduced to normal form.

    Reduction uses eta^3 = 0 and xi^2 = -k1*eta*xi - k2*eta^2 (hence
    eta*xi^2 = -k1*eta^2*xi and xi^3 = (k1^2 - k2)*eta^2*xi).
    """
    k1, k2 = bundle.k1, bundle.k2
    d = x.degree + y.degree
    if d > 6:
        raise DegreeOverflowError(
            f"product of degrees {x.degree} and {y.degree} exceeds the top degree")
    if x.degree == 0:
        return y * x.coords[0]
    if y.degree == 0:
        return x * y.coords[0]
    if x.degree > y.degree:
        x, y = y, x
    if x.degree == 2 and y.degree == 2:
        a1, b1 = x.coords
        a2, b2 = y.coords
        # eta^2, eta*xi, xi^2 coefficients before reduction
        ee, ex, xx = a1 * a2, a1 * b2 + a2 * b1, b1 * b2
        return RingElement(4, (ee - k2 * xx, ex - k1 * xx))
    if x.degree == 2 and y.degree == 4:
        a, b = x.coords
        p, q = y.coords
        # eta^3 = 0; eta^2*xi survives; eta*xi^2 = -k1*eta^2*xi
        return RingElement(6, (a * q + b * p - k1 * b * q,))
    raise DegreeOverflowError(
        f"product of degrees {x.degree} and {y.degree} exceeds the top degree")


def integrate(bundle: Bundle, x: RingElement) -> Rational:
    """Integrate a top-degree class; the basis class eta^2*xi has integral 1."""
    if x.degree != 6:
        raise NotTopDegreeError(f"cannot integrate a degree-{x.degree} class")
    return x.coords[0]


def cup_power(bundle: Bundle, x: RingElement, n: int) -> RingElement:
    out = one()
    for _ in range(n):
        out = cup(bundle, out, x)
    return out


# ---------------------------------------------------------------------------
# characteristic classes
# ---------------------------------------------------------------------------

def total_chern(bundle: Bundle):
    """(c1, c2, c3) of the tangent bundle of P(E).

    From c(T P(E)) = p^* c(T CP^2) * c(p^* E tensor O(1)); the degree-4 part
    of the second factor is the ring relation, so it drops out.
    """
    k1 = bundle.k1
    c1 = RingElement(2, (3 + k1, 2))
    c2 = RingElement(4, (3 * (1 + k1), 6))
    c3 = RingElement(6, (6,))
    return c1, c2, c3


def c1_cubed(bundle: Bundle) -> int:
    """Closed form for the Chern number c1^3 of P(E)."""
    return 2 * (27 + bundle.k1**2 - 4 * bundle.k2)


def p1_and_w2(bundle: Bundle):
    """First Pontryagin class, second Stiefel-Whitney vector, and parity of c1.

    p1 = c1^2 - 2*c2 in normal form; w2 is c1 mod 2 in the (eta, xi)
    coordinate order; c1 is even exactly when k1 is odd.
    """
    c1, c2, _ = total_chern(bundle)
    p1 = cup(bundle, c1, c1) - 2 * c2
    w2 = tuple(int(c) % 2 for c in c1.coords)
    return p1, w2, all(v == 0 for v in w2)


def c2_pairings(bundle: Bundle):
    """(<c2, eta>, <c2, xi>) computed by ring reduction."""
    _, c2, _ = total_chern(bundle)
    return (integrate(bundle, cup(bundle, c2, eta())),
            integrate(bundle, cup(bundle, c2, xi())))


def cubic_form(bundle: Bundle, a, b) -> Rational:
    """Cubic intersection form on degree 2: the integral of (a*eta + b*xi)^3.

    Closed form b*(3a^2 - 3*k1*a*b + (k1^2 - k2)*b^2); the ring route
    integrate(cup(cup(y, y), y)) agrees and is kept as a separate path for
    cross-checking.
    """
    a, b = rat(a), rat(b)
    k1, k2 = bundle.k1, bundle.k2
    return b * (3 * a * a - 3 * k1 * a * b + (k1 * k1 - k2) * b * b)


def cubic_coefficients(bundle: Bundle):
    """Coefficients (u^3, u^2 v, u v^2, v^3) of the cubic form on basis (xi, eta).

    That is, integral of (u*xi + v*eta)^3 as a polynomial in (u, v).
    """
    k1, k2 = bundle.k1, bundle.k2
    return (k1 * k1 - k2, -3 * k1, 3, 0)


# ---------------------------------------------------------------------------
# trilinear forms and diffeomorphism invariants
# ---------------------------------------------------------------------------

def _eval_cubic(coeffs, v):
    u, w = v
    c0, c1, c2, c3 = coeffs
    return c0 * u**3 + c1 * u**2 * w + c2 * u * w**2 + c3 * w**3


def trilinear_from_cubic(coeffs):
    """Polarize a binary cubic form S into the symmetric tensor T(x, y, z).

    coeffs are (c0, c1, c2, c3) for S(u, v) = c0 u^3 + c1 u^2 v + c2 u v^2 +
    c3 v^3; the tensor is indexed by the same basis order and satisfies
    6 T(x,y,z) = S(x+y+z) - S(x+y) - S(x+z) - S(y+z) + S(x) + S(y) + S(z).
    """
    try:
        coeffs = tuple(rat(c) for c in coeffs)
    except (TypeError, ValueError) as exc:
        raise NotCubicError(f"bad cubic coefficients: {exc}") from None
    if len(coeffs) != 4:
        raise NotCubicError("a binary cubic form has exactly 4 coefficients")

    def add(x, y):
        return (x[0] + y[0], x[1] + y[1])

    basis = ((1, 0), (0, 1))

    def entry(x, y, z):
        s = (
            _eval_cubic(coeffs, add(add(x, y), z))
            - _eval_cubic(coeffs, add(x, y))
            - _eval_cubic(coeffs, add(x, z))
            - _eval_cubic(coeffs, add(y, z))
            + _eval_cubic(coeffs, x)
            + _eval_cubic(coeffs, y)
            + _eval_cubic(coeffs, z)
        )
        val = Fraction(s, 6)
        return int(val) if val.denominator == 1 else val

    return tuple(
        tuple(tuple(entry(basis[i], basis[j], basis[k]) for k in range(2))
              for j in range(2))
        for i in range(2)
    )


def tensor_apply(tensor, x, y, z):
    """Evaluate a 2x2x2 symmetric tensor on three coordinate vectors."""
    return sum(
        tensor[i][j][k] * x[i] * y[j] * z[k]
        for i, j, k in product(range(2), repeat=3)
    )


@dataclass(frozen=True)
class JuppInvariants:
    """Classifying data of a simply connected closed 6-manifold.

    Component order is (xi-type class, eta-type class) throughout: trilinear
    is the 2x2x2 cubic intersection tensor, w2 the Stiefel-Whitney vector
    mod 2, p1_pairings the values of p1 against the two basis classes.
    """

    trilinear: tuple
    w2: tuple
    p1_pairings: tuple


@dataclass(frozen=True)
class JuppComparison:
    """Outcome of comparing two invariant sets under a basis change Q."""

    trilinear_ok: bool
    w2_ok: bool
    p1_ok: bool

    @property
    def ok(self) -> bool:
        return self.trilinear_ok and self.w2_ok and self.p1_ok

    @property
    def failures(self):
        return tuple(
            name for name, good in (
                ("trilinear", self.trilinear_ok),
                ("w2", self.w2_ok),
                ("p1", self.p1_ok),
            ) if not good
        )

    def __bool__(self):
        return self.ok


def jupp_invariants(bundle: Bundle) -> JuppInvariants:
    """Invariants of P(E) on the ordered basis (xi, eta), via ring reduction."""
    basis = (xi(), eta())
    tensor = tuple(
        tuple(
            tuple(
                int(integrate(bundle, cup(bundle, cup(bundle, basis[i], basis[j]), basis[k])))
                for k in range(2))
            for j in range(2))
        for i in range(2)
    )
    c1, _, _ = total_chern(bundle)
    w2 = (int(c1.coords[1]) % 2, int(c1.coords[0]) % 2)
    p1, _, _ = p1_and_w2(bundle)
    pairings = tuple(int(integrate(bundle, cup(bundle, p1, y))) for y in basis)
    return JuppInvariants(tensor, w2, pairings)


def jupp_compare(inv1: JuppInvariants, inv2: JuppInvariants, q) -> JuppComparison:
    """Decide whether Q identifies two invariant sets.

    Q is a 2x2 integer matrix with |det Q| = 1 sending inv1 coordinates to
    inv2 coordinates (columns are the images of inv1's basis vectors). The
    three classifying conditions are checked independently:

      trilinear:  T2(Qx, Qy, Qz) == T1(x, y, z) on basis triples,
      w2:         Q * w2_1 == w2_2  (mod 2),
      p1:         <p1_2, Q x> == <p1_1, x> on basis vectors.
    """
    ((q00, q01), (q10, q11)) = ((int(q[0][0]), int(q[0][1])),
                                (int(q[1][0]), int(q[1][1])))
    det = q00 * q11 - q01 * q10
    if det not in (1, -1):
        raise NotUnimodularError(f"det Q = {det}; Q must be unimodular")
    cols = ((q00, q10), (q01, q11))

    trilinear_ok = all(
        tensor_apply(inv2.trilinear, cols[i], cols[j], cols[k])
        == inv1.trilinear[i][j][k]
        for i, j, k in product(range(2), repeat=3)
    )
    w2_image = (
        (q00 * inv1.w2[0] + q01 * inv1.w2[1]) % 2,
        (q10 * inv1.w2[0] + q11 * inv1.w2[1]) % 2,
    )
    w2_ok = w2_image == tuple(v % 2 for v in inv2.w2)
    p1_ok = all(
        inv2.p1_pairings[0] * cols[i][0] + inv2.p1_pairings[1] * cols[i][1]
        == inv1.p1_pairings[i]
        for i in range(2)
    )
    return JuppComparison(trilinear_ok, w2_ok, p1_ok)


def find_equivalence(inv1: JuppInvariants, inv2: JuppInvariants, bound: int = 3):
    """Bounded brute-force search for a unimodular Q matching two invariant sets.

    Heuristic: only entries with |q_ij| <= bound are tried, so None means no
    witness was found in the box, not that none exists. Returned matrices are
    the first hit in a fixed scan order.
    """
    rng = range(-bound, bound + 1)
    for q00, q01, q10, q11 in product(rng, repeat=4):
        if q00 * q11 - q01 * q10 not in (1, -1):
            continue
        q = ((q00, q01), (q10, q11))
        if jupp_compare(inv1, inv2, q).ok:
            return q
    return None
