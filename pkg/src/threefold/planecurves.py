"""Local geometry of plane curves over an exact field.

Everything a linear system with base conditions needs, and nothing more:

* restriction of a ternary form to a line or to a parametrized conic,
  giving a binary form whose root structure is the intersection cycle;
* intersection cycles with rational support (points + multiplicities,
  plus a residual bookkeeping for the non-rational part);
* condition rows that impose multiplicities, cluster/osculation orders,
  or vanishing orders along a branch on an unknown curve of given degree;
* truncated power-series branch expansion of a curve at a smooth point,
  which turns "vanishing order along the curve" into exact linear algebra.

All arithmetic is exact (rationals or a prime field); there is no
floating point anywhere.
"""

import math
from fractions import Fraction

from .linalg import Matrix, Subspace, nullspace, solve
from .poly import PolyRing, Polynomial, binary_form_cycle, graded_dim


# ---------------------------------------------------------------------------
# points
# ---------------------------------------------------------------------------


def normalize_point(field, coords):
    """Canonical projective representative: first nonzero coordinate is 1."""
    vals = [field.of(c) for c in coords]
    pivot = None
    for v in vals:
        if v != field.of(0):
            pivot = v
            break
    if pivot is None:
        raise ValueError("zero vector is not a projective point")
    inv = field.inv(pivot)
    return tuple(field.mul(inv, v) for v in vals)


def point_on(f, point):
    return f.evaluate(point) == f.ring.field.of(0)


def lines_through_point(ring, point):
    """Two independent linear forms vanishing at a point of the plane.

    Deterministic: with m the first nonzero coordinate of the point, the
    forms are p[j]*x_m - p[m]*x_j for the two indices j != m.
    """
    field = ring.field
    p = normalize_point(field, point)
    m = next(i for i, v in enumerate(p) if v != field.of(0))
    out = []
    for j in range(3):
        if j == m:
            continue
        form = ring.var(m).scale(p[j]) - ring.var(j).scale(p[m])
        out.append(form)
    return out[0], out[1]


def line_through(ring, p, q):
    """The linear form vanishing on the line spanned by two distinct points."""
    field = ring.field
    a = [field.of(c) for c in p]
    b = [field.of(c) for c in q]
    coeffs = [
        field.sub(field.mul(a[1], b[2]), field.mul(a[2], b[1])),
        field.sub(field.mul(a[2], b[0]), field.mul(a[0], b[2])),
        field.sub(field.mul(a[0], b[1]), field.mul(a[1], b[0])),
    ]
    if all(c == field.of(0) for c in coeffs):
        raise ValueError("points do not span a line")
    out = ring.zero()
    for i, c in enumerate(coeffs):
        out = out + ring.var(i).scale(c)
    return out


def points_on_line(line):
    """Two points spanning the zero locus of a linear form."""
    field = line.ring.field
    coeffs = [line.coefficient(tuple(1 if j == i else 0 for j in range(3))) for i in range(3)]
    ker = nullspace(Matrix(field, [coeffs], 3))
    if len(ker) != 2:
        raise ValueError("form is not a nonzero linear form")
    return tuple(ker[0]), tuple(ker[1])


# ---------------------------------------------------------------------------
# restriction to lines, cycles on lines
# ---------------------------------------------------------------------------

_BINARY_CACHE = {}
_LOCAL_CACHE = {}


def binary_ring(field):
    try:
        return _BINARY_CACHE[field]
    except KeyError:
        ring = PolyRing(field, ("u", "v"))
        _BINARY_CACHE[field] = ring
        return ring


def local_ring(field):
    """Inhomogeneous two-variable ring used for Taylor/branch expansions."""
    try:
        return _LOCAL_CACHE[field]
    except KeyError:
        ring = PolyRing(field, ("b", "c"))
        _LOCAL_CACHE[field] = ring
        return ring


def restrict_to_line(f, p, q):
    """The binary form f(u*p + v*q) in the cached (u, v) ring."""
    ring2 = binary_ring(f.ring.field)
    u, v = ring2.var(0), ring2.var(1)
    field = f.ring.field
    images = [
        u.scale(field.of(p[i])) + v.scale(field.of(q[i]))
        for i in range(f.ring.nvars)
    ]
    return f.substitute(images, ring2)


class PlaneCycle:
    """A curve section's intersection cycle with rational support split off.

    points: dict mapping normalized plane points to multiplicities.
    residual: list of (degree, multiplicity, irreducible_or_None) factors
        that have no rational root, exactly as binary_form_cycle reports them.
    """

    __slots__ = ("points", "residual")

    def __init__(self, points, residual):
        self.points = dict(points)
        self.residual = list(residual)

    def total_degree(self):
        return sum(self.points.values()) + sum(d * m for d, m, _ in self.residual)

    def rational_degree(self):
        return sum(self.points.values())

    def is_rational(self):
        return not self.residual

    def add(self, other):
        pts = dict(self.points)
        for pt, m in other.points.items():
            pts[pt] = pts.get(pt, 0) + m
        return PlaneCycle(pts, self.residual + other.residual)

    def scaled(self, k):
        return PlaneCycle(
            {pt: k * m for pt, m in self.points.items()},
            [(d, k * m, irr) for d, m, irr in self.residual],
        )

    def __repr__(self):
        parts = ["%s:%d" % (pt, m) for pt, m in sorted(self.points.items(), key=repr)]
        parts += ["deg%d^%d" % (d, m) for d, m, _ in self.residual]
        return "PlaneCycle(" + ", ".join(parts) + ")"


def line_section_cycle(f, p, q, seed=0):
    """Intersection cycle of the curve f = 0 with the line through p and q.

    Raises ValueError if the line is a component of f (identically zero
    restriction).
    """
    field = f.ring.field
    rest = restrict_to_line(f, p, q)
    if rest.is_zero():
        raise ValueError("line is a component of the curve")
    cyc = binary_form_cycle(rest, seed=seed)
    points = {}
    for (a, b), m in cyc.points:
        pt = normalize_point(
            field,
            [
                field.add(field.mul(field.of(a), field.of(p[i])),
                          field.mul(field.of(b), field.of(q[i])))
                for i in range(3)
            ],
        )
        points[pt] = points.get(pt, 0) + m
    return PlaneCycle(points, cyc.residual)


# ---------------------------------------------------------------------------
# square roots
# ---------------------------------------------------------------------------


def field_sqrt(field, a):
    """A square root of a in the field, or None if a is not a square."""
    a = field.of(a)
    if a == field.of(0):
        return a
    if field.describe() == "q":
        num, den = a.numerator, a.denominator
        if num < 0:
            return None
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn != num or rd * rd != den:
            return None
        return Fraction(rn, rd)
    p = field.p
    if p == 2:
        return a  # every element is a square mod 2
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    return _tonelli(a, p)


def _tonelli(a, p):
    """Tonelli-Shanks for odd p, assuming a is a nonzero square mod p."""
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    # write p - 1 = q * 2^s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    # find a quadratic non-residue deterministically
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        t2, i = t, 0
        while t2 != 1:
            t2 = (t2 * t2) % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, (b * b) % p
        t, r = (t * c) % p, (r * b) % p
    return r


# ---------------------------------------------------------------------------
# conics
# ---------------------------------------------------------------------------


def conic_gram(q):
    """Symmetric 3x3 Gram matrix of a ternary quadratic form."""
    ring = q.ring
    field = ring.field
    if ring.nvars != 3 or not q.is_homogeneous(2):
        raise ValueError("expected a ternary quadratic form")
    if field.describe() != "q" and field.p == 2:
        raise ValueError("Gram matrix needs an invertible 2")
    half = field.inv(field.of(2))
    rows = [[field.of(0)] * 3 for _ in range(3)]
    for i in range(3):
        e = [0, 0, 0]
        e[i] = 2
        rows[i][i] = q.coefficient(tuple(e))
        for j in range(i + 1, 3):
            e = [0, 0, 0]
            e[i] = e[j] = 1
            val = field.mul(q.coefficient(tuple(e)), half)
            rows[i][j] = val
            rows[j][i] = val
    return Matrix(field, rows, 3)


def conic_rank(q):
    return conic_gram(q).rank()


def conic_kernel_point(q):
    """The singular point of a rank-2 or rank-1 conic."""
    ker = nullspace(conic_gram(q))
    if not ker:
        raise ValueError("conic is smooth; no singular point")
    return normalize_point(q.ring.field, ker[0])


def split_conic(q):
    """Factor a ternary conic into two linear forms, if possible.

    Returns (l1, l2) with l1 * l2 == q exactly, or None when the conic does
    not factor over the base field (smooth conic, or conjugate line pair).
    """
    ring = q.ring
    field = ring.field
    G = conic_gram(q)
    r = G.rank()
    if r == 3:
        return None
    zero = field.of(0)
    if r == 1:
        i = next(k for k in range(3) if G.rows[k][k] != zero)
        inv = field.inv(G.rows[i][i])
        line = ring.zero()
        for j in range(3):
            line = line + ring.var(j).scale(field.mul(inv, G.rows[i][j]))
        l1 = line.scale(G.rows[i][i])
        if not (l1 * line - q).is_zero():
            raise AssertionError("rank-1 factorization failed")
        return l1, line
    # rank 2: both lines pass through the singular point
    k = conic_kernel_point(q)
    f1, f2 = lines_through_point(ring, k)
    # q = alpha*f1^2 + beta*f1*f2 + gamma*f2^2: solve the 3 coefficients
    basis = ring.basis(2)
    A = Matrix(
        field,
        [basis.to_vector(f1 * f1), basis.to_vector(f1 * f2), basis.to_vector(f2 * f2)],
        len(basis),
    ).transpose()
    sol, _ = solve(A, basis.to_vector(q))
    if sol is None:
        raise AssertionError("rank-2 conic not expressible through its singular point")
    alpha, beta, gamma = sol
    if alpha == zero:
        if gamma == zero:
            l1, l2 = f2.scale(beta), f1
        else:
            l1, l2 = f2, f1.scale(beta) + f2.scale(gamma)
    else:
        disc = field.sub(field.mul(beta, beta),
                         field.mul(field.of(4), field.mul(alpha, gamma)))
        s = field_sqrt(field, disc)
        if s is None:
            return None
        two_alpha = field.mul(field.of(2), alpha)
        l1 = (f1.scale(two_alpha) + f2.scale(field.sub(beta, s))).scale(field.inv(two_alpha))
        l2 = (f1.scale(two_alpha) + f2.scale(field.add(beta, s))).scale(field.inv(field.of(2)))
    if not (l1 * l2 - q).is_zero():
        raise AssertionError("rank-2 factorization failed")
    return l1, l2


def rational_point_on_conic(q, rng=None, height=20, tries=64):
    """A rational point on a smooth conic, or None if the search fails.

    Over the rationals this is a height-bounded search (small solutions are
    found immediately; a conic with no point of height <= height is reported
    as not resolvable).  Over a prime field a point is found with random
    x-slices and a square root, so failure is essentially impossible.
    """
    ring = q.ring
    field = ring.field
    zero = field.of(0)
    for i in range(3):
        e = [0, 0, 0]
        e[i] = 1
        pt = tuple(e)
        if q.evaluate(pt) == zero:
            return normalize_point(field, pt)
    if field.describe() == "q":
        for h in range(1, height + 1):
            span = range(-h, h + 1)
            for a in span:
                for b in span:
                    for c in span:
                        if max(abs(a), abs(b), abs(c)) != h:
                            continue
                        if math.gcd(math.gcd(abs(a), abs(b)), abs(c)) != 1:
                            continue
                        if q.evaluate((a, b, c)) == 0:
                            return normalize_point(field, (a, b, c))
        return None
    # prime field: slice with x = r, z = 1 and solve the quadratic in y
    import random as _random

    rng = rng or _random.Random(0x51CE)
    p = field.p
    cy2 = q.coefficient((0, 2, 0))
    for _ in range(tries):
        r = field.of(rng.randrange(p))
        # q(r, y, 1) = cy2*y^2 + b1*y + c0
        ry = q.substitute(
            [ring.const(r), ring.var(1), ring.one()], ring
        )
        b1 = ry.coefficient((0, 1, 0))
        c0 = ry.coefficient((0, 0, 0))
        if cy2 == zero:
            if b1 != zero:
                y = field.neg(field.div(c0, b1))
                return normalize_point(field, (r, y, field.of(1)))
            continue
        disc = field.sub(field.mul(b1, b1), field.mul(field.of(4), field.mul(cy2, c0)))
        s = field_sqrt(field, disc)
        if s is None:
            continue
        y = field.div(field.sub(s, b1), field.mul(field.of(2), cy2))
        return normalize_point(field, (r, y, field.of(1)))
    return None


class ConicParam:
    """Quadratic parametrization [s:t] -> smooth conic, by stereographic
    projection from a rational point of the conic."""

    __slots__ = ("conic", "base_point", "ring2", "components")

    def __init__(self, conic, base_point):
        ring = conic.ring
        field = ring.field
        p0 = normalize_point(field, base_point)
        if not point_on(conic, p0):
            raise ValueError("base point is not on the conic")
        G = conic_gram(conic)
        pivot = next(i for i, v in enumerate(p0) if v != field.of(0))
        dirs = [tuple(1 if j == i else 0 for j in range(3)) for i in range(3) if i != pivot]
        ring2 = PolyRing(field, ("s", "t"))
        s, t = ring2.var(0), ring2.var(1)
        # d = s*u + t*w, x(s,t) = B(d,d)*p0 - 2*B(p0,d)*d
        d = [s.scale(field.of(dirs[0][i])) + t.scale(field.of(dirs[1][i])) for i in range(3)]
        p0v = [ring2.const(v) for v in p0]
        Bdd = _bilinear(G, d, d)
        Bpd = _bilinear(G, p0v, d)
        comps = [Bdd * p0v[i] - Bpd * d[i] - Bpd * d[i] for i in range(3)]
        self.conic = conic
        self.base_point = p0
        self.ring2 = ring2
        self.components = tuple(comps)
        check = conic.substitute(list(comps), ring2)
        if not check.is_zero():
            raise AssertionError("parametrization does not satisfy the conic")
        if all(c.is_zero() for c in comps):
            raise AssertionError("degenerate parametrization")

    def point_at(self, s, t):
        field = self.conic.ring.field
        vals = [c.evaluate((s, t)) for c in self.components]
        return normalize_point(field, vals)

    def restrict(self, f):
        """Binary form f(x(s,t)) of degree 2*deg(f)."""
        return f.substitute(list(self.components), self.ring2)


def _bilinear(G, a, b):
    out = None
    for i in range(3):
        for j in range(3):
            term = (a[i] * b[j]).scale(G.rows[i][j])
            out = term if out is None else out + term
    return out


def conic_section_cycle(conic, f, seed=0):
    """Intersection cycle of the curve f = 0 with a conic.

    Returns (cycle, reason): cycle is a PlaneCycle when the conic's rational
    points can be enumerated (split conic, or smooth conic with a rational
    point); otherwise cycle is None and reason says why.

    Raises ValueError when the conic and the curve share a component.
    """
    field = conic.ring.field
    r = conic_rank(conic)
    if r == 0:
        raise ValueError("zero conic")
    if r == 1:
        lines = split_conic(conic)
        p, q = points_on_line(lines[1])
        return line_section_cycle(f, p, q, seed=seed).scaled(2), None
    if r == 2:
        lines = split_conic(conic)
        if lines is None:
            return None, "conic is a pair of conjugate lines over the base field"
        cycles = []
        for line in lines:
            p, q = points_on_line(line)
            cycles.append(line_section_cycle(f, p, q, seed=seed))
        return cycles[0].add(cycles[1]), None
    pt = rational_point_on_conic(conic)
    if pt is None:
        return None, "no rational point found on the smooth conic"
    param = ConicParam(conic, pt)
    rest = param.restrict(f)
    if rest.is_zero():
        raise ValueError("conic is a component of the curve")
    cyc = binary_form_cycle(rest, seed=seed)
    points = {}
    for (a, b), m in cyc.points:
        plane_pt = param.point_at(a, b)
        points[plane_pt] = points.get(plane_pt, 0) + m
    return PlaneCycle(points, cyc.residual), None


# ---------------------------------------------------------------------------
# condition rows for linear systems
# ---------------------------------------------------------------------------


def _frame_at(field, point):
    """Deterministic affine frame (p, T, N) with T, N completing the point."""
    p = normalize_point(field, point)
    pivot = next(i for i, v in enumerate(p) if v != field.of(0))
    dirs = [tuple(field.of(1) if j == i else field.of(0) for j in range(3))
            for i in range(3) if i != pivot]
    return p, dirs[0], dirs[1]


def _monomial_expansions(ring, degree, p, T, N):
    """For each degree-`degree` monomial m, the 2-variable Taylor polynomial
    m(p + b*T + c*N), in grlex-descending monomial order of the basis."""
    field = ring.field
    loc = local_ring(field)
    b, c = loc.var(0), loc.var(1)
    lins = [
        loc.const(p[i]) + b.scale(T[i]) + c.scale(N[i])
        for i in range(3)
    ]
    pows = []
    for i in range(3):
        cur = [loc.one()]
        for _ in range(degree):
            cur.append(cur[-1] * lins[i])
        pows.append(cur)
    out = []
    for mono in ring.monomials(degree):
        out.append(pows[0][mono[0]] * pows[1][mono[1]] * pows[2][mono[2]])
    return out


def multiplicity_rows(ring, degree, point, mult):
    """Condition rows forcing multiplicity >= mult at the point.

    One row per Taylor coefficient b^i c^j with i + j < mult; columns follow
    the grlex-descending monomial basis of S^degree.
    """
    field = ring.field
    p, T, N = _frame_at(field, point)
    exps = _monomial_expansions(ring, degree, p, T, N)
    rows = []
    for i in range(mult):
        for j in range(mult - i):
            rows.append([e.coefficient((i, j)) for e in exps])
    return rows


def cluster_rows(ring, degree, point, tangent_point, order):
    """Condition rows for an osculation cluster of the given order.

    The conditions kill every Taylor coefficient b^i c^j with i + 2j < order,
    where b moves along the tangent line (toward tangent_point) and c moves
    off it.  For order = 2k this imposes multiplicity k at the point together
    with multiplicity k at the infinitely near point in the tangent
    direction — k(k+1) conditions — which is the linear-system meaning of
    "osculates the branch to order 2k".  The row span does not depend on the
    choice of the transversal direction (the change of frame is triangular
    for the weight i + 2j).
    """
    field = ring.field
    p = normalize_point(field, point)
    T = tuple(field.of(x) for x in tangent_point)
    # transversal: first standard vector with det(p, T, e) != 0
    N = None
    for i in range(3):
        e = tuple(field.of(1) if j == i else field.of(0) for j in range(3))
        if Matrix(field, [list(p), list(T), list(e)], 3).det() != field.of(0):
            N = e
            break
    if N is None:
        raise ValueError("tangent point does not give a direction at the point")
    exps = _monomial_expansions(ring, degree, p, T, N)
    rows = []
    for j in range(0, (order + 1) // 2 + 1):
        for i in range(max(order - 2 * j, 0)):
            if i + 2 * j < order:
                rows.append([e.coefficient((i, j)) for e in exps])
    return rows


def system_from_rows(ring, degree, rows):
    """The Subspace of S^degree (grlex-desc coordinates) cut out by rows."""
    n = graded_dim(3, degree)
    if not rows:
        return Subspace.from_vectors(ring.field, n,
                                     Matrix.identity(ring.field, n).rows)
    A = Matrix(ring.field, rows, n)
    basis = nullspace(A)
    return Subspace.from_vectors(ring.field, n, basis)


# ---------------------------------------------------------------------------
# branches of a curve at a smooth point
# ---------------------------------------------------------------------------


def _series_trim(a, L):
    a = a[: L + 1]
    return a + [a[0] * 0] * (L + 1 - len(a))


def _series_add(a, b):
    return [x + y for x, y in zip(a, b)]


def _series_sub(a, b):
    return [x - y for x, y in zip(a, b)]


def _series_mul(field, a, b, L):
    out = [field.of(0)] * (L + 1)
    for i, x in enumerate(a):
        if x == field.of(0):
            continue
        for j, y in enumerate(b):
            if i + j > L:
                break
            out[i + j] = field.add(out[i + j], field.mul(x, y))
    return out


def _series_inv(field, a, L):
    if a[0] == field.of(0):
        raise ZeroDivisionError("series has no inverse")
    inv0 = field.inv(a[0])
    out = [field.of(0)] * (L + 1)
    out[0] = inv0
    for n in range(1, L + 1):
        acc = field.of(0)
        for k in range(1, n + 1):
            acc = field.add(acc, field.mul(a[k] if k < len(a) else field.of(0), out[n - k]))
        out[n] = field.neg(field.mul(inv0, acc))
    return out


def _poly2_on_series(field, poly2, phi, L):
    """Evaluate a 2-variable polynomial at (b, phi(b)), truncated at b^L.

    poly2 lives in the local (b, c) ring; phi is the series for c.
    """
    by_c = {}
    for mono, coeff in poly2.terms.items():
        by_c.setdefault(mono[1], []).append((mono[0], coeff))
    if not by_c:
        return [field.of(0)] * (L + 1)
    top = max(by_c)
    out = [field.of(0)] * (L + 1)
    for j in range(top, -1, -1):
        out = _series_mul(field, out, phi, L)
        for i, coeff in by_c.get(j, ()):
            if i <= L:
                out[i] = field.add(out[i], coeff)
    return out


class Branch:
    """Truncated power-series branch of a curve at a smooth point.

    The branch is b -> point + b*T + phi(b)*N with phi(0) = phi'(0) = 0;
    T spans the tangent direction, N is a fixed transversal.  `order_of`
    computes the vanishing order of any form along the branch, exactly,
    up to the stored truncation.
    """

    __slots__ = ("curve", "point", "T", "N", "phi", "truncation")

    def __init__(self, curve, point, truncation):
        field = curve.ring.field
        zero = field.of(0)
        p = normalize_point(field, point)
        if curve.evaluate(p) != zero:
            raise ValueError("point is not on the curve")
        grad = [g.evaluate(p) for g in curve.gradient()]
        if all(g == zero for g in grad):
            raise ValueError("point is a singular point of the curve")
        # tangent direction: kernel of the gradient, independent from p
        ker = nullspace(Matrix(field, [grad], 3))
        T = None
        for v in ker:
            if Matrix(field, [list(p), list(v)], 3).rank() == 2:
                T = tuple(v)
                break
        if T is None:
            raise AssertionError("no tangent direction found")
        N = None
        for i in range(3):
            e = tuple(field.of(1) if j == i else field.of(0) for j in range(3))
            if Matrix(field, [list(p), list(T), list(e)], 3).det() != zero:
                N = e
                break
        loc = local_ring(field)
        b, c = loc.var(0), loc.var(1)
        lins = [loc.const(p[i]) + b.scale(T[i]) + c.scale(N[i]) for i in range(3)]
        F = curve.substitute(lins, loc)
        Fc = F.partial(1)
        L = truncation
        phi = [zero] * (L + 1)
        for _ in range(L.bit_length() + 2):
            val = _poly2_on_series(field, F, phi, L)
            der = _poly2_on_series(field, Fc, phi, L)
            step = _series_mul(field, val, _series_inv(field, der, L), L)
            new = _series_sub(phi, step)
            if new == phi:
                break
            phi = new
        if any(v != zero for v in _poly2_on_series(field, F, phi, L)):
            raise AssertionError("branch expansion did not converge")
        if phi[0] != zero or phi[1] != zero:
            raise AssertionError("branch must be tangent to T")
        self.curve = curve
        self.point = p
        self.T = T
        self.N = N
        self.phi = phi
        self.truncation = L

    def series_of(self, form):
        """Coefficients of form(point + b*T + phi(b)*N) up to b^truncation."""
        field = self.curve.ring.field
        loc = local_ring(field)
        b, c = loc.var(0), loc.var(1)
        lins = [
            loc.const(self.point[i]) + b.scale(self.T[i]) + c.scale(self.N[i])
            for i in range(3)
        ]
        g = form.substitute(lins, loc)
        return _poly2_on_series(field, g, self.phi, self.truncation)

    def order_of(self, form):
        """Vanishing order along the branch, or None when it exceeds the
        truncation (order >= truncation + 1)."""
        zero = self.curve.ring.field.of(0)
        ser = self.series_of(form)
        for i, v in enumerate(ser):
            if v != zero:
                return i
        return None

    def vanishing_rows(self, ring, degree, count):
        """Condition rows: the first `count` branch-series coefficients of
        each degree-`degree` monomial (columns in grlex-desc order)."""
        if count > self.truncation + 1:
            raise ValueError("branch truncation too small for requested count")
        field = ring.field
        loc = local_ring(field)
        b, c = loc.var(0), loc.var(1)
        lins = [
            loc.const(self.point[i]) + b.scale(self.T[i]) + c.scale(self.N[i])
            for i in range(3)
        ]
        pows = []
        for i in range(3):
            cur = [loc.one()]
            for _ in range(degree):
                cur.append(cur[-1] * lins[i])
            pows.append(cur)
        cols = []
        for mono in ring.monomials(degree):
            g = pows[0][mono[0]] * pows[1][mono[1]] * pows[2][mono[2]]
            cols.append(_poly2_on_series(field, g, self.phi, self.truncation))
        return [[col[r] for col in cols] for r in range(count)]


def intersection_multiplicity_smooth(curve, other, point, cap):
    """Intersection multiplicity of two curves at a smooth point of `curve`.

    Exact when the multiplicity is at most cap; returns None when the order
    exceeds the truncation (meaning: multiplicity >= cap + 1).
    """
    branch = Branch(curve, point, cap)
    return branch.order_of(other)
