"""Gaussian maps on a marked plane quintic.

The configuration is a smooth plane quintic Q with a reduced conic C
meeting it in twice a degree-5 divisor D.  This module certifies the
divisor data (no line contains D; the conic through D is unique, which is
the oddness of the associated 2-torsion twist), builds first and second
Gaussian maps from Jacobian determinants, performs the exact division by
the conic, and tests the resulting degree-8 classes against the Jacobian
ideal of the quintic.
"""

from .jacobian import JacobianRing
from .linalg import Matrix, Subspace, nullspace, solve
from .planecurves import (
    Branch,
    conic_rank,
    lines_through_point,
    normalize_point,
    point_on,
)


class QuinticConfig:
    """A smooth plane quintic, a reduced conic, and the half-contact divisor.

    divisor is a sequence of (rational point, multiplicity) pairs of total
    degree 5.  Construction verifies, exactly:

      * Q is smooth and C is reduced (rank of its Gram matrix >= 2);
      * every divisor point lies on both curves;
      * the local intersection number of C with Q at each point is exactly
        twice its divisor multiplicity (read off the unique branch of Q);
      * those doubled multiplicities sum to 10 = deg C * deg Q, so there
        are no further intersection points over any extension.
    """

    __slots__ = ("quintic", "conic", "divisor", "ring", "jring", "branches",
                 "_mod_q")

    def __init__(self, quintic, conic, divisor):
        ring = quintic.ring
        field = ring.field
        if ring.nvars != 3:
            raise ValueError("quintic configuration needs a three-variable ring")
        if not quintic.is_homogeneous(5):
            raise ValueError("expected a degree-5 form")
        if conic.ring != ring or not conic.is_homogeneous(2):
            raise ValueError("expected a degree-2 form in the same ring")
        self.ring = ring
        self.quintic = quintic
        self.conic = conic
        self.jring = JacobianRing(quintic)
        if not self.jring.is_smooth():
            raise ValueError("quintic is singular")
        if conic_rank(conic) < 2:
            raise ValueError("conic is a double line; the twist would be trivial")
        pts = []
        seen = set()
        total = 0
        self.branches = {}
        for point, mult in divisor:
            point = normalize_point(field, point)
            if point in seen:
                raise ValueError("repeated divisor point %s" % (point,))
            seen.add(point)
            if mult < 1:
                raise ValueError("divisor multiplicities must be positive")
            if not point_on(quintic, point):
                raise ValueError("divisor point %s is not on the quintic" % (point,))
            if not point_on(conic, point):
                raise ValueError("divisor point %s is not on the conic" % (point,))
            branch = Branch(quintic, point, truncation=2 * mult + 2)
            order = branch.order_of(conic)
            if order != 2 * mult:
                raise ValueError(
                    "contact order of the conic at %s is %s, expected %d"
                    % (point, order, 2 * mult))
            self.branches[point] = branch
            pts.append((point, mult))
            total += mult
        if total != 5:
            raise ValueError("divisor degree is %d, expected 5" % total)
        self.divisor = tuple(pts)
        self._mod_q = None

    def is_reduced(self):
        return all(m == 1 for _, m in self.divisor)

    def mod_quintic_subspace(self):
        """span(Q * S^3) inside S^8, cached; classes of degree-8 forms are
        taken modulo this subspace."""
        if self._mod_q is None:
            ring = self.ring
            b8 = ring.basis(8)
            vecs = [b8.to_vector(self.quintic * ring.monomial(m))
                    for m in ring.monomials(3)]
            self._mod_q = Subspace.from_vectors(ring.field, len(b8), vecs)
        return self._mod_q


class AlphaCertificate:
    """Linear-system evidence that the twist is nontrivial and odd."""

    __slots__ = ("no_line_through_D", "oddness_dim", "accepted")

    def __init__(self, no_line_through_D, oddness_dim):
        self.no_line_through_D = no_line_through_D
        self.oddness_dim = oddness_dim
        self.accepted = no_line_through_D and oddness_dim == 1


def _vanishing_system(cfg, degree):
    """Forms of the given degree vanishing on Q to order >= mult at every
    divisor point, as a coefficient subspace."""
    ring = cfg.ring
    rows = []
    for point, mult in cfg.divisor:
        rows.extend(cfg.branches[point].vanishing_rows(ring, degree, mult))
    return Subspace.from_vectors(
        ring.field, len(ring.monomials(degree)),
        nullspace(Matrix(ring.field, rows, len(ring.monomials(degree)))))


def alpha_certificate(cfg):
    """No line through D, and the conic through D is unique.

    The oddness dimension is dim{conics G : G vanishes on Q to the divisor
    orders}; it is always >= 1 because C itself qualifies, and equals 1
    exactly when the configuration is accepted.
    """
    lines = _vanishing_system(cfg, 1)
    conics = _vanishing_system(cfg, 2)
    b2 = cfg.ring.basis(2)
    if not conics.contains(b2.to_vector(cfg.conic)):
        raise AssertionError("the marked conic fails its own contact conditions")
    return AlphaCertificate(lines.dim == 0, conics.dim)


def jacobian_det(f, g, h):
    """Determinant of the matrix of gradients of three ternary forms."""
    rows = [[p.partial(i) for i in range(3)] for p in (f, g, h)]
    a, b, c = rows[0]
    d, e, ff = rows[1]
    g2, h2, i2 = rows[2]
    return (a * (e * i2 - ff * h2) - b * (d * i2 - ff * g2)
            + c * (d * h2 - e * g2))


def mu1_line_pencil(quintic, point):
    """First Gaussian map on the pencil of lines through a point of Q:
    the Jacobian determinant of two independent lines through the point
    and Q itself.  Equals a nonzero scalar times the polar of Q at the
    point, since the cross product of the two constant line gradients is
    the point itself."""
    point = normalize_point(quintic.ring.field, point)
    if not point_on(quintic, point):
        raise ValueError("point is not on the quintic")
    l1, l2 = lines_through_point(quintic.ring, point)
    return jacobian_det(l1, l2, quintic)


def conic_pencil_through(ring, points):
    """Basis of the pencil of conics through four points; raises when the
    solution space is not 2-dimensional (degenerate position)."""
    field = ring.field
    b2 = ring.basis(2)
    rows = []
    for p in points:
        p = normalize_point(field, p)
        rows.append([ring.monomial(m).evaluate(p) for m in ring.monomials(2)])
    kern = nullspace(Matrix(field, rows, len(b2)))
    if len(kern) != 2:
        raise ValueError(
            "conics through the four points form a %d-dimensional space, "
            "expected a pencil" % len(kern))
    return b2.from_vector(kern[0]), b2.from_vector(kern[1])


def divide_by_conic(cfg, w):
    """Solve C*rho + Q*mu = w for rho in S^8, exactly.

    The solution rho is unique modulo Q*S^3 (the kernel of the system is
    {(Q*s, -C*s)}, of dimension 10, which is asserted).  Raises when the
    system is inconsistent, which signals a configuration whose contact
    divisor is not twice the marked divisor.
    """
    ring = cfg.ring
    field = ring.field
    b10 = ring.basis(10)
    b8 = ring.basis(8)
    cols = []
    for m in ring.monomials(8):
        cols.append(b10.to_vector(cfg.conic * ring.monomial(m)))
    for m in ring.monomials(5):
        cols.append(b10.to_vector(cfg.quintic * ring.monomial(m)))
    system = Matrix(field, cols, len(b10)).transpose()
    particular, kernel = solve(system, b10.to_vector(w))
    if particular is None:
        raise ValueError("the conic does not divide the product modulo the quintic")
    if len(kernel) != 10:
        raise AssertionError(
            "division kernel has dimension %d, expected 10" % len(kernel))
    return b8.from_vector(particular[:len(b8)])


class Mu2Element:
    """A second-Gaussian-map image: a degree-8 form modulo Q*S^3.

    The normal form is the reduction against the row space of Q*S^3,
    rescaled so its first nonzero grlex coordinate is 1; it is the
    canonical representative of the class up to scalar.
    """

    __slots__ = ("config", "representative", "normal_vector")

    def __init__(self, config, representative):
        if not representative.is_homogeneous(8):
            raise ValueError("expected a degree-8 form")
        self.config = config
        self.representative = representative
        field = config.ring.field
        b8 = config.ring.basis(8)
        vec = config.mod_quintic_subspace().reduce(b8.to_vector(representative))
        zero = field.zero
        for c in vec:
            if c != zero:
                inv = field.inv(c)
                vec = [field.mul(inv, x) for x in vec]
                break
        self.normal_vector = vec

    def normal_form(self):
        return self.config.ring.basis(8).from_vector(self.normal_vector)

    def is_zero_class(self):
        zero = self.config.ring.field.zero
        return all(c == zero for c in self.normal_vector)


def mu2_rank4(cfg, i):
    """Second Gaussian map at the i-th divisor point, reduced divisor route.

    W is the product of the line-pencil Jacobian determinant at the point
    and the conic-pencil Jacobian determinant through the other four
    points; the element is W divided exactly by the marked conic modulo
    the quintic.
    """
    if not cfg.is_reduced() or len(cfg.divisor) != 5:
        raise ValueError("rank-4 route needs a reduced divisor of five points")
    points = [p for p, _ in cfg.divisor]
    base = points[i]
    others = points[:i] + points[i + 1:]
    l1, l2 = lines_through_point(cfg.ring, base)
    c1, c2 = conic_pencil_through(cfg.ring, others)
    w = jacobian_det(l1, l2, cfg.quintic) * jacobian_det(c1, c2, cfg.quintic)
    return Mu2Element(cfg, divide_by_conic(cfg, w))


def mu2_rank3(cfg):
    """Second Gaussian map in the normalized two-line frame.

    Requires C = y*z (up to scalar) and D = (1,0,0) + 2*(0,1,0) + (0,0,1)
    + (1,0,1).  Computes h with z*h = y*Q_y - Q by exact division and
    returns the class of h*Q_y; the identity z*(h*Q_y) = y*Q_y^2 - Q*Q_y
    is re-checked exactly.
    """
    ring = cfg.ring
    field = ring.field
    y, z = ring.var(1), ring.var(2)
    if not (cfg.conic.primitive_normalized() - (y * z).primitive_normalized()).is_zero():
        raise ValueError("configuration is not in the normalized two-line frame")
    want = {
        normalize_point(field, (1, 0, 0)): 1,
        normalize_point(field, (0, 1, 0)): 2,
        normalize_point(field, (0, 0, 1)): 1,
        normalize_point(field, (1, 0, 1)): 1,
    }
    if dict(cfg.divisor) != want:
        raise ValueError("configuration is not in the normalized two-line frame")
    qy = cfg.quintic.partial(1)
    h = (y * qy - cfg.quintic).exact_divide(z)
    if h is None:
        raise ValueError("y*Q_y - Q is not divisible by z; frame mismatch")
    rho = h * qy
    if not (z * rho - y * qy * qy + cfg.quintic * qy).is_zero():
        raise AssertionError("two-line construction identity failed")
    return Mu2Element(cfg, rho)


def tau_membership(element):
    """True when the representative lies in the degree-8 Jacobian ideal of
    the quintic.  Q*S^3 is inside the ideal by the Euler relation, so the
    verdict only depends on the class."""
    return element.config.jring.in_ideal(element.representative)


def tau_class(element):
    """The class of the representative in the degree-8 Jacobian ring."""
    return element.config.jring.ring_class(element.representative, 8)


def mu2_injectivity_check(cfg, i=0, j=1):
    """Classes at two divisor points are linearly independent mod Q*S^3."""
    a = mu2_rank4(cfg, i)
    b = mu2_rank4(cfg, j)
    field = cfg.ring.field
    m = Matrix(field, [a.normal_vector, b.normal_vector], len(cfg.ring.monomials(8)))
    return m.rank() == 2
