"""Tests for plane-curve local analysis: restrictions, cycles, condition
rows, branch expansions, and conic utilities.

Oracle strategy: intersection cycles are checked on curves CONSTRUCTED as
products with known factors; condition rows are checked against an
independent partial-derivative oracle and against hand-pinned bases of the
classical linear systems; branch expansions are checked by exact
back-substitution into the curve equation.
"""

import random

from fractions import Fraction

import pytest

from threefold.linalg import DEFAULT_SWEEP_PRIME, GF, QQ, Matrix, Subspace
from threefold.poly import PolyRing, graded_dim
from threefold import planecurves as pc

P_SMALL = 1000000007
P_ALT = 998244353

RING = PolyRing(QQ, ("x", "y", "z"))
X, Y, Z = RING.var(0), RING.var(1), RING.var(2)


# ---------------------------------------------------------------------------
# points and lines
# ---------------------------------------------------------------------------


def test_normalize_point():
    assert pc.normalize_point(QQ, (0, -2, 4)) == (0, 1, -2)
    assert pc.normalize_point(QQ, (3, 6, 0)) == (1, 2, 0)
    F = GF(7)
    assert pc.normalize_point(F, (0, 3, 5)) == (0, 1, 4)  # 3^-1 = 5, 5*5 = 25 = 4
    with pytest.raises(ValueError):
        pc.normalize_point(QQ, (0, 0, 0))


def test_lines_through_point():
    p = (1, 2, 3)
    l1, l2 = pc.lines_through_point(RING, p)
    for line in (l1, l2):
        assert line.is_homogeneous(1)
        assert line.evaluate(p) == 0
    # independent linear forms
    b1 = RING.basis(1)
    M = Matrix(QQ, [b1.to_vector(l1), b1.to_vector(l2)], 3)
    assert M.rank() == 2


def test_line_through_two_points():
    line = pc.line_through(RING, (1, 0, 0), (0, 1, 0))
    assert line.evaluate((1, 0, 0)) == 0
    assert line.evaluate((0, 1, 0)) == 0
    assert line.evaluate((0, 0, 1)) != 0
    with pytest.raises(ValueError):
        pc.line_through(RING, (1, 2, 3), (2, 4, 6))


def test_points_on_line_roundtrip():
    line = X.scale(2) - Y.scale(3) + Z
    p, q = pc.points_on_line(line)
    assert line.evaluate(p) == 0 and line.evaluate(q) == 0
    assert Matrix(QQ, [list(p), list(q)], 3).rank() == 2


# ---------------------------------------------------------------------------
# cycles on lines: constructed products as oracles
# ---------------------------------------------------------------------------


def test_line_cycle_constructed_quintic():
    f = (X + Y + Z) ** 2 * (X - Y.scale(2)) * (X * X + Y * Y + Z * Z)
    cyc = pc.line_section_cycle(f, (1, 0, 0), (0, 1, 0))
    assert cyc.points[(Fraction(1), Fraction(-1), Fraction(0))] == 2
    assert cyc.points[(Fraction(1), Fraction(1, 2), Fraction(0))] == 1
    assert cyc.residual == [(2, 1, True)]
    assert cyc.total_degree() == 5
    assert cyc.rational_degree() == 3
    assert not cyc.is_rational()


def test_line_cycle_is_component_error():
    f = Z * (X * X + Y * Y)
    with pytest.raises(ValueError):
        pc.line_section_cycle(f, (1, 0, 0), (0, 1, 0))


def test_line_cycle_mod_p():
    F = GF(P_SMALL)
    ring = PolyRing(F, ("x", "y", "z"))
    x, y, z = ring.var(0), ring.var(1), ring.var(2)
    f = (x - y.scale(5)) ** 3 * (y - z) * (x + z)
    cyc = pc.line_section_cycle(f, (1, 0, 0), (0, 1, 0))  # line z = 0
    # restriction: (u - 5v)^3 * v * u
    assert cyc.points[pc.normalize_point(F, (5, 1, 0))] == 3
    assert cyc.points[pc.normalize_point(F, (1, 0, 0))] == 1
    assert cyc.points[pc.normalize_point(F, (0, 1, 0))] == 1
    assert cyc.total_degree() == 5 and cyc.is_rational()


def test_cycle_add_and_scale():
    a = pc.PlaneCycle({(1, 0, 0): 2}, [(2, 1, True)])
    b = pc.PlaneCycle({(1, 0, 0): 1, (0, 1, 0): 3}, [])
    s = a.add(b)
    assert s.points == {(1, 0, 0): 3, (0, 1, 0): 3}
    assert s.residual == [(2, 1, True)]
    d = a.scaled(2)
    assert d.points == {(1, 0, 0): 4} and d.residual == [(2, 2, True)]


# ---------------------------------------------------------------------------
# square roots
# ---------------------------------------------------------------------------


def test_field_sqrt_rationals():
    assert pc.field_sqrt(QQ, Fraction(4, 9)) == Fraction(2, 3)
    assert pc.field_sqrt(QQ, Fraction(0)) == 0
    assert pc.field_sqrt(QQ, Fraction(2)) is None
    assert pc.field_sqrt(QQ, Fraction(-4)) is None
    assert pc.field_sqrt(QQ, Fraction(49)) == 7


def test_field_sqrt_prime_fields():
    rng = random.Random(11)
    for p in (P_SMALL, P_ALT, DEFAULT_SWEEP_PRIME):
        F = GF(p)
        for _ in range(20):
            r = rng.randrange(1, p)
            s = pc.field_sqrt(F, (r * r) % p)
            assert s is not None and (s * s) % p == (r * r) % p
        # Euler criterion agreement on arbitrary elements
        for _ in range(20):
            a = rng.randrange(1, p)
            is_sq = pow(a, (p - 1) // 2, p) == 1
            assert (pc.field_sqrt(F, a) is not None) == is_sq


# ---------------------------------------------------------------------------
# conic classification and splitting
# ---------------------------------------------------------------------------


def test_conic_rank_examples():
    assert pc.conic_rank(X * Y) == 2
    assert pc.conic_rank(X * X) == 1
    assert pc.conic_rank(X * Z - Y * Y) == 3
    assert pc.conic_rank(X * X + Y * Y + Z * Z) == 3


def test_split_conic_product_roundtrip():
    rng = random.Random(3)
    for _ in range(12):
        l1 = RING.random_form(1, rng)
        l2 = RING.random_form(1, rng)
        if l1.is_zero() or l2.is_zero():
            continue
        q = l1 * l2
        got = pc.split_conic(q)
        assert got is not None
        g1, g2 = got
        assert (g1 * g2 - q).is_zero()


def test_split_conic_double_line():
    q = (X - Y.scale(3) + Z.scale(2)) ** 2
    g1, g2 = pc.split_conic(q)
    assert (g1 * g2 - q).is_zero()
    # both factors cut out the same line
    b1 = RING.basis(1)
    assert Matrix(QQ, [b1.to_vector(g1), b1.to_vector(g2)], 3).rank() == 1


def test_split_conic_rejects_smooth_and_conjugate():
    assert pc.split_conic(X * Z - Y * Y) is None
    assert pc.split_conic(X * X + Y * Y) is None  # conjugate pair over Q
    # same pair splits over a field where -1 is a square (13 = 1 mod 4)
    F = GF(13)
    ring = PolyRing(F, ("x", "y", "z"))
    x, y = ring.var(0), ring.var(1)
    got = pc.split_conic(x * x + y * y)
    assert got is not None
    assert (got[0] * got[1] - (x * x + y * y)).is_zero()


def test_conic_kernel_point():
    q = X * Y  # singular at (0,0,1)
    assert pc.conic_kernel_point(q) == (0, 0, 1)
    shifted = (X + Z) * (Y - Z)  # lines meet where x+z = y-z = 0
    assert pc.conic_kernel_point(shifted) == pc.normalize_point(QQ, (-1, 1, 1))
    with pytest.raises(ValueError):
        pc.conic_kernel_point(X * Z - Y * Y)


# ---------------------------------------------------------------------------
# rational points and parametrization of smooth conics
# ---------------------------------------------------------------------------


def test_rational_point_small_search():
    q = X * X + Y * Y - (Z * Z).scale(2)
    pt = pc.rational_point_on_conic(q)
    assert pt is not None and q.evaluate(pt) == 0
    # a conic with no rational points at all (2 is not a norm mod 3)
    assert pc.rational_point_on_conic(X * X + Y * Y - (Z * Z).scale(3)) is None


def test_rational_point_prime_field():
    rng = random.Random(5)
    F = GF(P_ALT)
    ring = PolyRing(F, ("x", "y", "z"))
    for _ in range(6):
        q = ring.random_form(2, rng)
        if pc.conic_rank(q) != 3:
            continue
        pt = pc.rational_point_on_conic(q, rng=rng)
        assert pt is not None and q.evaluate(pt) == F.of(0)


def test_conic_param_lands_on_conic_identically():
    q = X * X + Y * Y - (Z * Z).scale(2)
    param = pc.ConicParam(q, (1, 1, 1))
    # the defining check is an exact polynomial identity; re-run by hand
    assert q.substitute(list(param.components), param.ring2).is_zero()
    for s, t in [(1, 0), (0, 1), (2, 3), (-5, 7)]:
        assert q.evaluate(param.point_at(Fraction(s), Fraction(t))) == 0


def test_conic_param_degree_two_components():
    q = X * Z - Y * Y
    param = pc.ConicParam(q, (1, 0, 0))
    for comp in param.components:
        assert comp.is_zero() or comp.is_homogeneous(2)
    assert any(not comp.is_zero() for comp in param.components)


# ---------------------------------------------------------------------------
# conic cycles: dual-route oracles
# ---------------------------------------------------------------------------


def test_conic_cycle_split_matches_line_route():
    # split conic: cycle must equal the sum of the two line cycles
    f = (X + Y + Z) * (X - Z) * (X * X * X + Y * Y * Z)
    conic = Y * Z
    total, reason = pc.conic_section_cycle(conic, f)
    assert reason is None
    for line in (Y, Z):
        p, q = pc.points_on_line(line)
        part = pc.line_section_cycle(f, p, q)
        for pt, m in part.points.items():
            assert total.points[pt] >= m
    assert total.total_degree() == 10


def test_conic_cycle_tangency_oracle():
    # construct tangency, then recover it: conic x^2+y^2-2z^2 and its
    # tangent line at (1,1,1) meet doubly there
    q = X * X + Y * Y - (Z * Z).scale(2)
    tangent = X.scale(2) + Y.scale(2) - Z.scale(4)
    cyc, reason = pc.conic_section_cycle(q, tangent)
    assert reason is None
    assert cyc.points == {(Fraction(1), Fraction(1), Fraction(1)): 2}
    assert cyc.total_degree() == 2


def test_conic_cycle_prescribed_tangencies_roundtrip():
    # build a quintic forced to osculate the split conic yz at chosen points,
    # then read the cycle back off; this is a full dual-route check:
    # condition rows (Taylor route) vs cycle extraction (factoring route).
    ring = RING
    conic = Y * Z
    quintic = ring.parse(
        "x^4*y + x^4*z - 2*x^3*z^2 + x^2*z^3 + x^3*y*z - 2*x*y^3*z"
    )
    cyc, reason = pc.conic_section_cycle(conic, quintic)
    assert reason is None
    want = {
        (Fraction(1), Fraction(0), Fraction(0)): 2,
        (Fraction(0), Fraction(1), Fraction(0)): 4,
        (Fraction(0), Fraction(0), Fraction(1)): 2,
        (Fraction(1), Fraction(0), Fraction(1)): 2,
    }
    assert cyc.points == want and cyc.is_rational()


def test_conic_cycle_smooth_param_route():
    q = X * X + Y * Y - (Z * Z).scale(2)
    f = (X - Y) * (X - Z) * (X + Y + Z.scale(3))
    cyc, reason = pc.conic_section_cycle(q, f)
    assert reason is None
    assert cyc.total_degree() == 6
    # x = y meets the conic at (1,1,1) and (1,1,-1)
    assert cyc.points[(Fraction(1), Fraction(1), Fraction(1))] >= 1
    assert cyc.points[(Fraction(1), Fraction(1), Fraction(-1))] >= 1


def test_conic_cycle_unresolvable_reports_reason():
    q = X * X + Y * Y - (Z * Z).scale(3)
    cyc, reason = pc.conic_section_cycle(q, X - Y)
    assert cyc is None and "no rational point" in reason
    conj = X * X + Y * Y
    cyc, reason = pc.conic_section_cycle(conj, X - Z)
    assert cyc is None and "conjugate" in reason


def test_conic_cycle_double_line():
    q = Z * Z
    f = X * X * X + Y * Y * Z + (Z ** 3).scale(5)
    cyc, reason = pc.conic_section_cycle(q, f)
    assert reason is None
    # cycle of z=0 with f, doubled
    p1, p2 = pc.points_on_line(Z)
    single = pc.line_section_cycle(f, p1, p2)
    assert cyc.points == {pt: 2 * m for pt, m in single.points.items()}


def test_conic_cycle_shared_component_error():
    with pytest.raises(ValueError):
        pc.conic_section_cycle(Y * Z, Z * (X ** 4))


# ---------------------------------------------------------------------------
# condition rows: partial-derivative oracle and pinned bases
# ---------------------------------------------------------------------------


def _derivative_condition_space(ring, degree, point, mult):
    """Oracle: forms whose partials of order < mult all vanish at the point.

    Computed with iterated Polynomial.partial in the ORIGINAL coordinates —
    a route independent of the affine-frame Taylor expansion in the module.
    """
    rows = []
    basis = ring.basis(degree)
    for i in range(mult):
        for j in range(mult - i):
            for k in range(mult - i - j):
                if i + j + k >= mult:
                    continue
                row = []
                for mono in ring.monomials(degree):
                    p = ring.monomial(mono)
                    for _ in range(i):
                        p = p.partial(0)
                    for _ in range(j):
                        p = p.partial(1)
                    for _ in range(k):
                        p = p.partial(2)
                    row.append(p.evaluate(point))
                rows.append(row)
    return pc.system_from_rows(ring, degree, rows)


def test_multiplicity_rows_match_derivative_oracle():
    for point, mult, degree in [((1, 2, 3), 2, 4), ((0, 1, -1), 3, 5), ((1, 0, 0), 2, 3)]:
        rows = pc.multiplicity_rows(RING, degree, point, mult)
        got = pc.system_from_rows(RING, degree, rows)
        want = _derivative_condition_space(RING, degree, point, mult)
        assert got.dim == want.dim
        for vec in want.basis:
            assert got.contains(vec)


def test_multiplicity_rows_count_and_membership():
    point = (1, -1, 2)
    rows = pc.multiplicity_rows(RING, 5, point, 3)
    assert len(rows) == 6  # 3*(3+1)/2
    sub = pc.system_from_rows(RING, 5, rows)
    assert sub.dim == graded_dim(3, 5) - 6
    l1, l2 = pc.lines_through_point(RING, point)
    member = l1 * l1 * l2 * RING.random_form(2, random.Random(0))
    if not member.is_zero():
        assert sub.contains(RING.basis(5).to_vector(member))


def test_cluster_rows_reproduce_pointed_cubic_system():
    # cubics through (1,0,0), (0,0,1), (1,0,1), passing through (0,1,0)
    # with assigned tangent line z = 0: the classical pencil-of-five
    rows = []
    for p0 in [(1, 0, 0), (0, 0, 1), (1, 0, 1)]:
        rows += pc.multiplicity_rows(RING, 3, p0, 1)
    rows += pc.cluster_rows(RING, 3, (0, 1, 0), (1, 0, 0), 2)
    sub = pc.system_from_rows(RING, 3, rows)
    assert sub.dim == 5
    b3 = RING.basis(3)
    for text in ("x^2*y", "x^2*z - x*z^2", "y^2*z", "x*y*z", "y*z^2"):
        assert sub.contains(b3.to_vector(RING.parse(text)))


def test_cluster_rows_reproduce_osculating_sextics():
    rows = []
    for p0 in [(1, 0, 0), (0, 0, 1), (1, 0, 1)]:
        rows += pc.multiplicity_rows(RING, 6, p0, 2)
    rows += pc.cluster_rows(RING, 6, (0, 1, 0), (1, 0, 0), 4)
    sub = pc.system_from_rows(RING, 6, rows)
    assert sub.dim == 13
    b6 = RING.basis(6)
    texts = (
        "x^4*y^2", "x^4*y*z - x^3*y*z^2", "x^2*y^3*z", "x^3*y^2*z",
        "x^2*y^2*z^2", "x^4*z^2 + x^2*z^4 - 2*x^3*z^3",
        "x^3*y*z^2 - x^2*y*z^3", "x^2*y*z^3 - x*y*z^4",
        "y^4*z^2", "x*y^3*z^2", "y^3*z^3", "x*y^2*z^3", "y^2*z^4",
    )
    assert len(texts) == 13
    for text in texts:
        assert sub.contains(b6.to_vector(RING.parse(text)))


def test_cluster_rows_count():
    for k in (1, 2, 3, 4):
        rows = pc.cluster_rows(RING, 3 * k, (0, 1, 0), (1, 0, 0), 2 * k)
        assert len(rows) == k * (k + 1)


def test_cluster_span_invariant_under_transversal_choice():
    # image of the conditions must not depend on which transversal the
    # frame picked; compare against a sheared frame built by hand
    ring = RING
    degree, order = 4, 4
    rows = pc.cluster_rows(ring, degree, (0, 1, 0), (1, 0, 0), order)
    A = Matrix(QQ, rows, graded_dim(3, degree))
    # hand frame: T = (1,0,0), N' = (1,0,1) (sheared transversal)
    field = QQ
    loc = pc.local_ring(field)
    b, c = loc.var(0), loc.var(1)
    p = (Fraction(0), Fraction(1), Fraction(0))
    T = (Fraction(1), Fraction(0), Fraction(0))
    N = (Fraction(1), Fraction(0), Fraction(1))
    lins = [loc.const(p[i]) + b.scale(T[i]) + c.scale(N[i]) for i in range(3)]
    rows2 = []
    exps = []
    for mono in ring.monomials(degree):
        e = loc.one()
        for i in range(3):
            for _ in range(mono[i]):
                e = e * lins[i]
        exps.append(e)
    for j in range(order // 2 + 1):
        for i in range(order - 2 * j):
            rows2.append([e.coefficient((i, j)) for e in exps])
    B = Matrix(QQ, rows2, graded_dim(3, degree))
    sa = Subspace.from_vectors(QQ, A.ncols, A.rows)
    sb = Subspace.from_vectors(QQ, B.ncols, B.rows)
    assert sa.dim == sb.dim
    for row in B.rows:
        assert sa.contains(row)


def test_reduced_position_dimensions():
    # the three linear systems at the heart of the lifting argument, for a
    # reduced 5-point divisor in general position
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]
    for degree, mult, want in ((6, 2, 13), (12, 4, 41), (7, 3, 6)):
        rows = []
        for p0 in pts:
            rows += pc.multiplicity_rows(RING, degree, p0, mult)
        assert pc.system_from_rows(RING, degree, rows).dim == want


def test_reduced_position_dimensions_mod_p():
    F = GF(P_SMALL)
    ring = PolyRing(F, ("x", "y", "z"))
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1), (1, 2, 3)]
    for degree, mult, want in ((6, 2, 13), (7, 3, 6)):
        rows = []
        for p0 in pts:
            rows += pc.multiplicity_rows(ring, degree, p0, mult)
        assert pc.system_from_rows(ring, degree, rows).dim == want


# ---------------------------------------------------------------------------
# branches
# ---------------------------------------------------------------------------


def test_branch_of_standard_conic():
    q = X * Z - Y * Y
    br = pc.Branch(q, (1, 0, 0), 8)
    # the local solve gives z = y^2 exactly: phi = b^2
    assert br.phi[2] == 1 and all(v == 0 for i, v in enumerate(br.phi) if i != 2)
    assert br.order_of(X) == 0
    assert br.order_of(Y) == 1
    assert br.order_of(Z) == 2
    assert br.order_of(Y * Z) == 3
    assert br.order_of(Z * Z) == 4
    assert br.order_of(q) is None  # vanishes identically along its own branch


def test_branch_back_substitution_random_curves():
    rng = random.Random(17)
    hits = 0
    for _ in range(30):
        f = RING.random_form(4, rng)
        pt = (1, rng.randrange(-4, 5), rng.randrange(-4, 5))
        # force the point onto the curve by adjusting the x^4 coefficient
        val = f.evaluate(pt)
        f = f - (X ** 4).scale(val)
        grad = [g.evaluate(pt) for g in f.gradient()]
        if all(g == 0 for g in grad):
            continue
        br = pc.Branch(f, pt, 7)
        assert br.order_of(f) is None  # exact back-substitution
        hits += 1
        # a generic line through the point meets the branch with order 1
        l1, l2 = pc.lines_through_point(RING, pt)
        o1, o2 = br.order_of(l1), br.order_of(l2)
        assert min(o1, o2) == 1  # at most one of them is the tangent
    assert hits >= 25


def test_branch_rejects_bad_points():
    q = X * Z - Y * Y
    with pytest.raises(ValueError):
        pc.Branch(q, (1, 1, 0), 4)  # not on the curve
    with pytest.raises(ValueError):
        pc.Branch(X * Y * (X + Y), (0, 0, 1), 4)  # singular point


def test_branch_orders_match_line_cycle():
    # dual route: order along the branch vs multiplicity in the line cycle
    q = X * Z - Y * Y
    line_pts = ((1, 0, 0), (0, 1, 0))  # the tangent line z = 0 at (1,0,0)
    cyc = pc.line_section_cycle(q, *line_pts)
    assert cyc.points[(Fraction(1), Fraction(0), Fraction(0))] == 2
    assert pc.intersection_multiplicity_smooth(q, Z, (1, 0, 0), 6) == 2
    # a transversal line: both routes report order 1
    line = X - Z
    assert pc.intersection_multiplicity_smooth(q, line, (1, 1, 1), 6) == 1


def test_branch_vanishing_rows_cut_correct_orders():
    q = X * Z - Y * Y
    br = pc.Branch(q, (1, 0, 0), 9)
    rows = br.vanishing_rows(RING, 2, 4)  # order >= 4 along the branch
    sub = pc.system_from_rows(RING, 2, rows)
    b2 = RING.basis(2)
    # z^2 has order exactly 4; q itself has infinite order; y*z only 3
    assert sub.contains(b2.to_vector(q))
    assert sub.contains(b2.to_vector(Z * Z))
    assert not sub.contains(b2.to_vector(Y * Z))
    # and the space is exactly 2-dimensional (q and z^2 are independent)
    assert sub.dim == 2


def test_branch_mod_p():
    F = GF(P_ALT)
    ring = PolyRing(F, ("x", "y", "z"))
    x, y, z = ring.var(0), ring.var(1), ring.var(2)
    q = x * z - y * y
    br = pc.Branch(q, (1, 0, 0), 6)
    assert br.order_of(z) == 2 and br.order_of(q) is None
    f = x ** 3 + y ** 3 + z ** 3 - x * y * z.scale(3)
    # (1, 1, 1) is singular on this cubic (it is the Hesse-type degeneration)
    with pytest.raises(ValueError):
        pc.Branch(f, (1, 1, 1), 4)
