"""Explicit instances and samplers.

Four sources of configurations feed the verification suites:

* the one-parameter deformation of Klein's cubic threefold with its marked
  line, symbolically in the deformation parameter or specialized;
* random cubic threefolds through a fixed line, for the polar-pencil
  checks;
* the twelve-parameter family of plane quintics with two marked tangent
  lines (a 4-tangent and a bitangent), symbolic or specialized;
* random quintics prescribed to be doubly tangent to a fixed split conic
  at five random points.

All samplers are deterministic functions of (field, seed) and reject bad
draws with a logged reason, up to a hard retry cap.
"""

import random

from .conicbundle import LineInX, conic_bundle, special_line_test, triple_points
from .gaussmaps import QuinticConfig, alpha_certificate
from .jacobian import JacobianRing, SingularityError, quadric_rank
from .linalg import Matrix, QQ, nullspace
from .planecurves import binary_ring, restrict_to_line
from .poly import PolyRing


def _unit(i):
    return tuple(1 if j == i else 0 for j in range(5))


# ---------------------------------------------------------------------------
# deformed Klein cubic


def klein_cubic(ring, eps):
    """Klein's cubic plus eps times the deforming cubic, over the first
    five variables of the ring; eps may be a field constant or a
    polynomial of the ring (e.g. an extra variable)."""
    x0, x1, x2, x3, x4 = (ring.var(i) for i in range(5))
    base = (x0 * x0 * x1 + x4 * x4 * x0 + x1 * x1 * x2
            + x2 * x2 * x3 + x3 * x3 * x4)
    bump = x1 * x1 * x3 + x3 * x3 * x2
    if hasattr(eps, "ring"):
        return base + bump * eps
    return base + bump.scale(ring.field.of(eps))


def _klein_line(cubic):
    return LineInX(cubic, _unit(0), _unit(3), (_unit(1), _unit(2), _unit(4)))


def klein_symbolic():
    """The deformed Klein cubic with the deformation parameter as an extra
    polynomial variable, plus its marked line."""
    ring = PolyRing(QQ, ("x0", "x1", "x2", "x3", "x4", "eps"))
    return _klein_line(klein_cubic(ring, ring.var(5)))


class KleinDeformation:
    """A specialized member of the deformed Klein family.

    Carries the marked base point [1:0:0:0:0], whose polar quadric is
    2*x0*x1 + x4^2 independently of the parameter; its Gram rank 3 is
    re-checked on construction.
    """

    __slots__ = ("epsilon", "cubic", "line", "base_point")

    def __init__(self, field, epsilon):
        ring = PolyRing(field, ("x0", "x1", "x2", "x3", "x4"))
        self.epsilon = field.of(epsilon)
        self.cubic = klein_cubic(ring, self.epsilon)
        self.line = _klein_line(self.cubic)
        self.base_point = _unit(0)
        x0, x1, x4 = ring.var(0), ring.var(1), ring.var(4)
        polar = self.cubic.partial(0)
        if not (polar - (x0 * x1).scale(field.of(2)) - x4 * x4).is_zero():
            raise AssertionError("base-point polar does not match the closed form")
        if quadric_rank(polar) != 3:
            raise AssertionError("base-point polar quadric does not have rank 3")


def klein_closed_quintic(ring3, eps):
    """The closed form of the family's discriminant quintic in the plane
    coordinates, up to a global scalar: 4x^3yz + 2e*x^3y^2 - xy^4 - e^2x^5
    - z^5 - e*z^4y."""
    x, y, z = ring3.var(0), ring3.var(1), ring3.var(2)
    if not hasattr(eps, "ring"):
        eps = ring3.const(ring3.field.of(eps))
    return ((x ** 3 * y * z).scale(ring3.field.of(4))
            + (x ** 3 * y * y * eps).scale(ring3.field.of(2))
            - x * y ** 4 - x ** 5 * eps * eps - z ** 5 - z ** 4 * y * eps)


class KleinInstance:
    """Specialized Klein pipeline result: bundle data, contact divisor,
    and the quintic configuration when the divisor is rational."""

    __slots__ = ("deformation", "bundle", "triple", "accepted", "rejection",
                 "config")

    def __init__(self, deformation, bundle, triple, accepted, rejection, config):
        self.deformation = deformation
        self.bundle = bundle
        self.triple = triple
        self.accepted = accepted
        self.rejection = rejection
        self.config = config


def klein_instance(field, epsilon, seed=0):
    """Run the full line-projection pipeline on one parameter value.

    The computed quintic is compared against the closed form (hard error
    on mismatch); the instance is accepted as a QuinticConfig only when
    the quintic is smooth and the contact divisor is rational over the
    field."""
    dfm = KleinDeformation(field, epsilon)
    data = conic_bundle(dfm.line)
    expected = klein_closed_quintic(data.ring3, dfm.epsilon)
    got = data.quintic.primitive_normalized()
    if not (got - expected.primitive_normalized()).is_zero():
        raise AssertionError("discriminant quintic does not match the closed form")
    x, y, z = (data.ring3.var(i) for i in range(3))
    if not (data.conic - x * (z + y.scale(dfm.epsilon))).is_zero():
        raise AssertionError("discriminant conic does not match the closed form")
    if not special_line_test(data):
        return KleinInstance(dfm, data, None, False,
                             "discriminant quintic is singular", None)
    trip = triple_points(data, seed=seed)
    if not trip.resolvable:
        return KleinInstance(dfm, data, trip, False, trip.reason, None)
    if not trip.is_rational:
        return KleinInstance(dfm, data, trip, False,
                             "contact divisor has irrational points", None)
    config = QuinticConfig(data.quintic, data.conic,
                           sorted(trip.d_points.items()))
    return KleinInstance(dfm, data, trip, True, None, config)


# ---------------------------------------------------------------------------
# random cubics through a fixed line

# monomials supported entirely on the span of the first two coordinates;
# a cubic contains the line {x2=x3=x4=0} iff these are absent
_LINE_MONOS = ((3, 0, 0, 0, 0), (2, 1, 0, 0, 0), (1, 2, 0, 0, 0), (0, 3, 0, 0, 0))


def random_cubic_with_line(field, seed, cap=200):
    """Sample a smooth cubic threefold through the line spanned by the
    first two coordinate points, with a smooth discriminant quintic.

    Returns (line, bundle, log); the log lists rejection reasons for the
    discarded draws."""
    rng = random.Random(seed)
    ring = PolyRing(field, ("x0", "x1", "x2", "x3", "x4"))
    log = []
    for _ in range(cap):
        terms = {}
        for m in ring.monomials(3):
            if m in _LINE_MONOS:
                continue
            c = rng.randint(-9, 9)
            if c:
                terms[m] = c
        cubic = ring.from_dict(terms)
        if cubic.is_zero():
            log.append("zero draw")
            continue
        if not JacobianRing(cubic).is_smooth():
            log.append("cubic is singular")
            continue
        line = LineInX(cubic, _unit(0), _unit(1), (_unit(2), _unit(3), _unit(4)))
        try:
            data = conic_bundle(line)
        except ValueError as err:
            log.append(str(err))
            continue
        if not special_line_test(data):
            log.append("discriminant quintic is singular")
            continue
        return line, data, log
    raise RuntimeError("no admissible cubic found in %d attempts" % cap)


# ---------------------------------------------------------------------------
# pointed quintics with two tangent lines

# exponent support of the twelve coefficient blocks
_U_BLOCKS = (
    {(4, 1, 0): 1},
    {(4, 0, 1): 1, (3, 0, 2): -2, (2, 0, 3): 1},
    {(3, 1, 1): 1},
    {(2, 2, 1): 1},
    {(2, 1, 2): 1},
    {(1, 3, 1): 1},
    {(1, 2, 2): 1},
    {(1, 1, 3): 1},
    {(0, 3, 2): 1},
    {(0, 2, 3): 1},
    {(0, 1, 4): 1},
    {(0, 4, 1): 1},
)

U_POINTS = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1))
U_DIVISOR = (((1, 0, 0), 1), ((0, 1, 0), 2), ((0, 0, 1), 1), ((1, 0, 1), 1))


class UFamilySpec:
    """Twelve coefficients for the pointed-quintic family, subject to the
    affine constraint sum of all but the second = 0 (equivalently, the
    quintic passes through [1:1:1])."""

    __slots__ = ("field", "a")

    def __init__(self, field, coefficients):
        coefficients = tuple(field.of(c) for c in coefficients)
        if len(coefficients) != 12:
            raise ValueError("expected 12 coefficients")
        total = field.zero
        for i, c in enumerate(coefficients):
            if i != 1:
                total = field.add(total, c)
        if total != field.zero:
            raise ValueError("coefficients violate the through-[1:1:1] constraint")
        self.field = field
        self.a = coefficients

    @classmethod
    def sample(cls, field, rng):
        """Random admissible coefficients, with the first solved from the
        constraint; redrawn until the two leading coefficients (which
        control the line tangencies) are nonzero."""
        while True:
            rest = [rng.randint(-9, 9) for _ in range(10)]
            a2 = 0
            while a2 == 0:
                a2 = rng.randint(-9, 9)
            a1 = -sum(rest)
            if a1 == 0 or field.of(a1) == field.zero or field.of(a2) == field.zero:
                continue
            return cls(field, [a1, a2] + rest)


def u_family_polynomial(ring, coefficients):
    """Assemble the family quintic from twelve blocks; the coefficients
    may be constants of the ring's field or polynomials of the ring (the
    symbolic case)."""
    pad = ring.nvars - 3
    out = ring.zero()
    for a, block in zip(coefficients, _U_BLOCKS):
        piece = ring.from_dict({m + (0,) * pad: c for m, c in block.items()})
        if hasattr(a, "ring"):
            out = out + piece * a
        else:
            out = out + piece.scale(ring.field.of(a))
    return out


def u_family_symbolic():
    """The family quintic with all twelve coefficients as extra variables
    (no constraint imposed); returns (ring, quintic)."""
    ring = PolyRing(QQ, ("x", "y", "z") + tuple("a%d" % i for i in range(1, 13)))
    return ring, u_family_polynomial(ring, [ring.var(3 + i) for i in range(12)])


def u_family_quintic(spec):
    """Build and verify the configuration of one family member.

    The two line tangencies (order 4 at [0:1:0] along {z=0}; order 2 at
    [0:0:1] and [1:0:1] along {y=0}) hold identically in the parameters,
    so their failure is a hard error; a singular quintic raises
    SingularityError, which samplers treat as a resample."""
    field = spec.field
    ring = PolyRing(field, ("x", "y", "z"))
    q = u_family_polynomial(ring, spec.a)
    bring = binary_ring(field)
    u, v = bring.var(0), bring.var(1)
    on_l1 = restrict_to_line(q, (1, 0, 0), (0, 1, 0))
    if not (on_l1 - (u ** 4 * v).scale(spec.a[0])).is_zero():
        raise AssertionError("4-tangent line restriction has the wrong shape")
    on_l2 = restrict_to_line(q, (1, 0, 0), (0, 0, 1))
    want_l2 = (u * u * v * (u - v) * (u - v)).scale(spec.a[1])
    if not (on_l2 - want_l2).is_zero():
        raise AssertionError("bitangent line restriction has the wrong shape")
    one = (field.of(1),) * 3
    if q.evaluate(one) != field.zero:
        raise AssertionError("family member misses [1:1:1]")
    if not JacobianRing(q).is_smooth():
        raise SingularityError("family quintic is singular")
    y, z = ring.var(1), ring.var(2)
    return QuinticConfig(q, y * z, U_DIVISOR)


def random_u_family(field, seed, cap=200):
    """Sample an admissible family member; returns (spec, config, log)."""
    rng = random.Random(seed)
    log = []
    for _ in range(cap):
        spec = UFamilySpec.sample(field, rng)
        try:
            return spec, u_family_quintic(spec), log
        except SingularityError:
            log.append("family quintic is singular")
    raise RuntimeError("no smooth family member found in %d attempts" % cap)


# ---------------------------------------------------------------------------
# random conic-tangency configurations


def random_tangency_config(field, seed, cap=200):
    """Sample a quintic doubly tangent to the split conic xz - y^2 at five
    random rational points of it, then keep only configurations passing
    the twist certificate (no line through the divisor, a unique conic).

    Returns (config, log).  The tangency conditions are imposed through
    the conic's parametrization; the configuration re-verifies them on
    the quintic's own branches, an independent route.
    """
    rng = random.Random(seed)
    ring = PolyRing(field, ("x", "y", "z"))
    x, y, z = (ring.var(i) for i in range(3))
    conic = x * z - y * y
    monos5 = ring.monomials(5)
    b5 = ring.basis(5)
    bring = binary_ring(field)
    s, t = bring.var(0), bring.var(1)
    log = []
    for _ in range(cap):
        ts = set()
        while len(ts) < 5:
            ts.add(rng.randint(-25, 25) if field is QQ
                   else rng.randrange(field.p))
        ts = sorted(ts)
        points = [(field.of(1), field.of(tv), field.mul(field.of(tv), field.of(tv)))
                  for tv in ts]
        rows = []
        for pt in points:
            rows.append([ring.monomial(m).evaluate(pt) for m in monos5])
            two_t = field.mul(field.of(2), pt[1])
            rows.append([
                field.add(ring.monomial(m).partial(1).evaluate(pt),
                          field.mul(two_t, ring.monomial(m).partial(2).evaluate(pt)))
                for m in monos5
            ])
        basis = nullspace(Matrix(field, rows, len(monos5)))
        if len(basis) != 21 - 10:
            log.append("tangency conditions have unexpected rank")
            continue
        vec = [field.zero] * len(monos5)
        for bvec in basis:
            c = field.of(rng.randint(-9, 9))
            vec = [field.add(a, field.mul(c, b)) for a, b in zip(vec, bvec)]
        q = b5.from_vector(vec)
        if q.is_zero():
            log.append("zero draw")
            continue
        restriction = q.substitute([s * s, s * t, t * t], bring)
        if restriction.is_zero():
            log.append("conic divides the quintic")
            continue
        contact = bring.one()
        for tv in ts:
            factor = t - s.scale(field.of(tv))
            contact = contact * factor * factor
        quotient = restriction.exact_divide(contact)
        if quotient is None or quotient.degree() != 0:
            log.append("extra contact with the conic")
            continue
        if not JacobianRing(q).is_smooth():
            log.append("quintic is singular")
            continue
        config = QuinticConfig(q, conic, [(pt, 1) for pt in points])
        cert = alpha_certificate(config)
        if not cert.accepted:
            log.append("twist certificate rejected (lines %s, conics %d)"
                       % (not cert.no_line_through_D, cert.oddness_dim))
            continue
        return config, log
    raise RuntimeError("no admissible tangency configuration in %d attempts" % cap)
