"""Conic-bundle structure of a cubic threefold containing a line.

Projecting the threefold from a marked line fibers it in conics over a
plane.  This module computes, exactly:

* the symmetric 3x3 matrix of the fiber conic over the plane (entries are
  forms in the plane coordinates),
* the discriminant quintic (its determinant),
* the conic cut out by the leading 2x2 block (where the fiber's singular
  point meets the marked line), and
* the adjugate-column map sending a plane point to the singular point of
  its fiber, used to pull polar quadrics of the threefold back to the plane.

The cubic may carry extra passive parameter variables after its five
projective coordinates; the whole construction is carried out symbolically
in them.
"""

from .jacobian import JacobianRing
from .linalg import Matrix, Subspace, nullspace
from .poly import PolyRing
from .planecurves import conic_section_cycle


def _main_degree(p, count):
    """Degree in the first `count` variables; -1 for the zero polynomial.
    Raises if p is not homogeneous in those variables."""
    if p.is_zero():
        return -1
    degs = {sum(m[:count]) for m in p.terms}
    if len(degs) != 1:
        raise ValueError("polynomial is not homogeneous in the main variables")
    return degs.pop()


class LineInX:
    """A cubic threefold with a marked line and a complementary plane.

    p1, p2 span the line; the plane is spanned by three further points, and
    together the five points must span the whole space.  The cubic must
    vanish on the line (checked exactly via the binary restriction).
    """

    __slots__ = ("cubic", "p1", "p2", "plane", "param_names")

    def __init__(self, cubic, p1, p2, plane):
        ring = cubic.ring
        field = ring.field
        if ring.nvars < 5:
            raise ValueError("cubic must live in at least five variables")
        if _main_degree(cubic, 5) != 3:
            raise ValueError("form is not a cubic in the five main variables")
        p1 = tuple(field.of(c) for c in p1)
        p2 = tuple(field.of(c) for c in p2)
        plane = tuple(tuple(field.of(c) for c in pt) for pt in plane)
        if len(p1) != 5 or len(p2) != 5 or len(plane) != 3 or any(len(pt) != 5 for pt in plane):
            raise ValueError("need five points of P^4")
        span = Matrix(field, [list(p1), list(p2)] + [list(pt) for pt in plane], 5)
        if span.det() == field.of(0):
            raise ValueError("line and plane do not span the space")
        self.cubic = cubic
        self.p1 = p1
        self.p2 = p2
        self.plane = plane
        self.param_names = ring.names[5:]
        if not self._restriction_to_line().is_zero():
            raise ValueError("cubic does not vanish on the line")

    def _restriction_to_line(self):
        ring = self.cubic.ring
        field = ring.field
        target = PolyRing(field, ("u", "v") + self.param_names)
        u, v = target.var(0), target.var(1)
        images = [
            u.scale(self.p1[i]) + v.scale(self.p2[i]) for i in range(5)
        ] + [target.var(2 + k) for k in range(len(self.param_names))]
        return self.cubic.substitute(images, target)

    def plane_embedding(self, ring3):
        """The five linear forms sending plane coordinates (x, y, z) into
        the ambient space: x*A + y*B + z*C coordinate-wise."""
        x, y, z = ring3.var(0), ring3.var(1), ring3.var(2)
        A, B, C = self.plane
        return [
            x.scale(A[i]) + y.scale(B[i]) + z.scale(C[i]) for i in range(5)
        ]


class ConicBundleData:
    """Output of the projection-from-a-line computation."""

    __slots__ = ("line", "ring3", "matrix", "quintic", "conic", "psi")

    def __init__(self, line, ring3, matrix, quintic, conic, psi):
        self.line = line
        self.ring3 = ring3
        self.matrix = matrix
        self.quintic = quintic
        self.conic = conic
        self.psi = psi


def _det3(M):
    a, b, c = M[0]
    d, e, f = M[1]
    g, h, i = M[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def conic_bundle(line):
    """Fiber the cubic in conics over the plane, by exact substitution.

    Substitutes u*p1 + v*p2 + t*(x*A + y*B + z*C), divides by t, and reads
    off the symmetric matrix of the resulting conic in [u : v : t].  Raises
    when the declared line is not on the cubic (division by t fails) or the
    discriminant vanishes identically.
    """
    cubic = line.cubic
    field = cubic.ring.field
    pnames = line.param_names
    ring6 = PolyRing(field, ("u", "v", "t", "x", "y", "z") + pnames)
    ring3 = PolyRing(field, ("x", "y", "z") + pnames)
    u, v, t = ring6.var(0), ring6.var(1), ring6.var(2)
    xyz6 = [ring6.var(3), ring6.var(4), ring6.var(5)]
    A, B, C = line.plane
    images = [
        u.scale(line.p1[i]) + v.scale(line.p2[i])
        + t * (xyz6[0].scale(A[i]) + xyz6[1].scale(B[i]) + xyz6[2].scale(C[i]))
        for i in range(5)
    ] + [ring6.var(6 + k) for k in range(len(pnames))]
    total = cubic.substitute(images, ring6)
    divided = total.exact_divide(t)
    if divided is None:
        raise ValueError("line is not contained in the cubic")
    pieces = divided.split_by((0, 1, 2), ring3)
    zero3 = ring3.zero()

    def piece(a, b, c):
        return pieces.get((a, b, c), zero3)

    half = field.inv(field.of(2))
    M = [
        [piece(2, 0, 0), piece(1, 1, 0).scale(half), piece(1, 0, 1).scale(half)],
        [None, piece(0, 2, 0), piece(0, 1, 1).scale(half)],
        [None, None, piece(0, 0, 2)],
    ]
    M[1][0] = M[0][1]
    M[2][0] = M[0][2]
    M[2][1] = M[1][2]
    expected_degree = [[1, 1, 2], [1, 1, 2], [2, 2, 3]]
    for i in range(3):
        for j in range(3):
            d = _main_degree(M[i][j], 3)
            if d not in (-1, expected_degree[i][j]):
                raise AssertionError(
                    "conic matrix entry (%d, %d) has main degree %d, expected %d"
                    % (i, j, d, expected_degree[i][j])
                )
    quintic = _det3(M)
    if quintic.is_zero():
        raise ValueError("discriminant quintic vanishes identically")
    conic = M[0][0] * M[1][1] - M[0][1] * M[0][1]
    adj_u = M[0][1] * M[1][2] - M[0][2] * M[1][1]
    adj_v = M[0][1] * M[0][2] - M[0][0] * M[1][2]
    adj_t = conic
    # adjugate-column identities: M . adj = (0, 0, det)^T
    for i, want_det in ((0, False), (1, False), (2, True)):
        acc = M[i][0] * adj_u + M[i][1] * adj_v + M[i][2] * adj_t
        if want_det:
            if not (acc - quintic).is_zero():
                raise AssertionError("adjugate column fails the determinant identity")
        elif not acc.is_zero():
            raise AssertionError("adjugate column is not in the matrix kernel")
    embed = line.plane_embedding(ring3)
    psi = tuple(
        adj_u.scale(line.p1[i]) + adj_v.scale(line.p2[i]) + adj_t * embed[i]
        for i in range(5)
    )
    # the singular-point map lands on the cubic: F(psi) = 0 mod quintic
    psi_images = list(psi) + [ring3.var(3 + k) for k in range(len(pnames))]
    pullback = cubic.substitute(psi_images, ring3)
    if not pullback.is_zero() and pullback.exact_divide(quintic) is None:
        raise AssertionError("singular-point map does not land on the cubic")
    return ConicBundleData(line, ring3, tuple(tuple(row) for row in M),
                           quintic, conic, psi)


def polar_form(cubic, point):
    """First polar of a form at a point: sum of point_i * dF/dx_i over the
    five main variables."""
    field = cubic.ring.field
    grads = [cubic.partial(i) for i in range(5)]
    out = cubic.ring.zero()
    for c, g in zip(point, grads):
        out = out + g.scale(field.of(c))
    return out


def pullback_mod_quintic(data, form5):
    """form5(psi) reduced mod the discriminant quintic: the exact quotient
    witness (quotient, remainder-is-zero flag)."""
    pnames = data.line.param_names
    images = list(data.psi) + [data.ring3.var(3 + k) for k in range(len(pnames))]
    pulled = form5.substitute(images, data.ring3)
    if pulled.is_zero():
        return True
    return pulled.exact_divide(data.quintic) is not None


def verify_polar_quadrics(data, rng=None):
    """The two marked-point polars cut the fibration's plane model.

    Checks (parameter-free data only):
      * polar(P1) and polar(P2) vanish on psi modulo the quintic;
      * they are independent quadrics;
      * the space of quadrics with that property is exactly a pencil
        (dimension 2), found by an independent linear solve;
      * a random quadric outside the pencil does not vanish.
    Returns a report dict.
    """
    if data.line.param_names:
        raise ValueError("polar verification needs a parameter-free instance")
    cubic = data.line.cubic
    ring5 = cubic.ring
    field = ring5.field
    ring3 = data.ring3
    g1 = polar_form(cubic, data.line.p1)
    g2 = polar_form(cubic, data.line.p2)
    both = polar_form(cubic, [field.add(a, b) for a, b in zip(data.line.p1, data.line.p2)])
    report = {
        "polar_p1_vanishes": pullback_mod_quintic(data, g1),
        "polar_p2_vanishes": pullback_mod_quintic(data, g2),
        "polar_sum_vanishes": pullback_mod_quintic(data, both),
    }
    b2 = ring5.basis(2)
    report["polars_independent"] = Matrix(
        field, [b2.to_vector(g1), b2.to_vector(g2)], len(b2)
    ).rank() == 2
    # all quadrics G with G(psi) = 0 mod quintic, by linear algebra
    b6 = ring3.basis(6)
    qs1 = Subspace.from_vectors(
        field, len(b6),
        [b6.to_vector(data.quintic * ring3.var(i)) for i in range(3)],
    )
    rows = []
    for mono in ring5.monomials(2):
        m = ring5.monomial(mono)
        pulled = m.substitute(list(data.psi), ring3)
        rows.append(qs1.reduce(b6.to_vector(pulled)))
    kernel = nullspace(Matrix(field, rows, len(b6)).transpose())
    report["pencil_dim"] = len(kernel)
    pencil = Subspace.from_vectors(field, len(b2), kernel)
    report["polars_in_pencil"] = pencil.contains(b2.to_vector(g1)) and pencil.contains(
        b2.to_vector(g2)
    )
    if rng is not None:
        while True:
            g = ring5.random_form(2, rng)
            if g.is_zero() or pencil.contains(b2.to_vector(g)):
                continue
            report["random_nonmember_vanishes"] = pullback_mod_quintic(data, g)
            break
    report["ok"] = (
        report["polar_p1_vanishes"]
        and report["polar_p2_vanishes"]
        and report["polar_sum_vanishes"]
        and report["polars_independent"]
        and report["pencil_dim"] == 2
        and report["polars_in_pencil"]
        and not report.get("random_nonmember_vanishes", False)
    )
    return report


def special_line_test(data):
    """True when the marked line is general enough that the discriminant
    quintic is smooth; False for special lines (singular discriminant)."""
    if data.line.param_names:
        raise ValueError("smoothness test needs a parameter-free instance")
    if data.ring3.nvars != 3:
        raise ValueError("smoothness test needs a parameter-free instance")
    return JacobianRing(data.quintic).is_smooth()


class TriplePointsReport:
    """Even-ness certificate for the contact divisor of the 2x2-block conic.

    The conic meets the quintic in a cycle that must be twice a divisor D;
    resolvable=False means the conic's rational points could not be
    enumerated over the base field (with the reason recorded).
    """

    __slots__ = ("resolvable", "reason", "cycle", "d_points", "d_residual",
                 "is_reduced", "is_rational", "psi_vanishes")

    def __init__(self, resolvable, reason=None, cycle=None, d_points=None,
                 d_residual=None, is_reduced=False, is_rational=False,
                 psi_vanishes=None):
        self.resolvable = resolvable
        self.reason = reason
        self.cycle = cycle
        self.d_points = d_points or {}
        self.d_residual = d_residual or []
        self.is_reduced = is_reduced
        self.is_rational = is_rational
        self.psi_vanishes = psi_vanishes


def triple_points(data, seed=0):
    """Halve the conic-quintic contact cycle into the marked divisor D.

    Raises ValueError when some intersection multiplicity is odd (the
    configuration then violates the even-contact requirement).
    """
    if data.line.param_names:
        raise ValueError("triple-point extraction needs a parameter-free instance")
    field = data.ring3.field
    cyc, reason = conic_section_cycle(data.conic, data.quintic, seed=seed)
    if cyc is None:
        return TriplePointsReport(False, "divisor not rationally resolvable: " + reason)
    for pt, m in cyc.points.items():
        if m % 2 != 0:
            raise ValueError("odd contact multiplicity %d at %s" % (m, (pt,)))
    for d, m, _ in cyc.residual:
        if m % 2 != 0:
            raise ValueError("odd contact multiplicity %d on a degree-%d factor" % (m, d))
    d_points = {pt: m // 2 for pt, m in cyc.points.items()}
    d_residual = [(d, m // 2, irr) for d, m, irr in cyc.residual]
    is_rational = not d_residual
    is_reduced = all(m == 1 for m in d_points.values()) and all(
        m == 1 for _, m, _ in d_residual
    )
    zero = field.of(0)
    psi_vanishes = all(
        all(comp.evaluate(pt) == zero for comp in data.psi) for pt in d_points
    )
    return TriplePointsReport(True, None, cyc, d_points, d_residual,
                              is_reduced, is_rational, psi_vanishes)
