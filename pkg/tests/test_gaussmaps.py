"""Tests for the Gaussian-map pipeline on marked quintics.

Oracles, all local to this file and independent of the module under test:

  * ideal8_span -- the degree-8 slice of the Jacobian ideal as an explicit
    span of partial-times-monomial products; checks tau membership verdicts.
  * point_conditions_dim -- naive evaluation-matrix rank for linear systems
    through points; checks the alpha certificate on reduced divisors.
  * tangency oracle rows -- value plus tangent-directional derivative at a
    doubled point; checks the certificate on the four-tangent family.
  * polar_of -- the classical first polar, which the line-pencil Jacobian
    determinant must reproduce up to scalar.
  * multiply-back -- C*rho - w must land in Q*S^5 after divide_by_conic.
"""

import random

from threefold.families import random_tangency_config, random_u_family
from threefold.gaussmaps import (
    Mu2Element,
    QuinticConfig,
    alpha_certificate,
    conic_pencil_through,
    divide_by_conic,
    jacobian_det,
    mu1_line_pencil,
    mu2_injectivity_check,
    mu2_rank3,
    mu2_rank4,
    tau_class,
    tau_membership,
)
from threefold.linalg import DEFAULT_SWEEP_PRIME, GF, QQ, Matrix, Subspace, nullspace
from threefold.poly import PolyRing

import pytest

FP = GF(DEFAULT_SWEEP_PRIME)


def ideal8_span(quintic):
    """Degree-8 slice of the Jacobian ideal, built directly from the three
    partials (contains Q*S^3 by the Euler relation)."""
    ring = quintic.ring
    b8 = ring.basis(8)
    vecs = []
    for i in range(3):
        g = quintic.partial(i)
        for m in ring.monomials(4):
            vecs.append(b8.to_vector(g * ring.monomial(m)))
    return Subspace.from_vectors(ring.field, len(b8), vecs)


def in_ideal8(span, form):
    return span.contains(form.ring.basis(8).to_vector(form))


def point_conditions_dim(ring, degree, points):
    """dim of degree-`degree` forms vanishing at the given points."""
    monos = ring.monomials(degree)
    rows = [[ring.monomial(m).evaluate(p) for m in monos] for p in points]
    return len(nullspace(Matrix(ring.field, rows, len(monos))))


def polar_of(form, point):
    out = form.ring.zero()
    for i, c in enumerate(point):
        out = out + form.partial(i).scale(form.ring.field.of(c))
    return out


def test_tau_membership_agrees_with_ideal_span():
    cfg, _ = random_tangency_config(FP, seed=5)
    span = ideal8_span(cfg.quintic)
    assert span.dim == 42  # 45 monomials minus the 3-dimensional degree-8 ring slice
    ring = cfg.ring
    rng = random.Random(7)
    # elements of the span are members by both routes
    for _ in range(5):
        w = ring.zero()
        for i in range(3):
            w = w + cfg.quintic.partial(i) * ring.random_form(4, rng)
        assert in_ideal8(span, w)
        assert cfg.jring.in_ideal(w)
    # generic forms are not
    for _ in range(5):
        w = ring.random_form(8, rng)
        assert in_ideal8(span, w) == cfg.jring.in_ideal(w)
        assert not cfg.jring.in_ideal(w)


def test_alpha_certificate_matches_point_count_oracle():
    cfg, _ = random_tangency_config(FP, seed=1)
    cert = alpha_certificate(cfg)
    assert cert.accepted
    points = [p for p, _ in cfg.divisor]
    assert point_conditions_dim(cfg.ring, 1, points) == 0
    assert point_conditions_dim(cfg.ring, 2, points) == cert.oddness_dim == 1


def test_alpha_certificate_on_four_tangent_family():
    # the doubled point turns one evaluation row into value + tangent
    # derivative.  No single line fits the weighted divisor: {z=0} has the
    # right order at the doubled point but misses the two bitangent points,
    # {y=0} carries those but misses the doubled point.
    _, cfg, _ = random_u_family(QQ, seed=2)
    cert = alpha_certificate(cfg)
    assert cert.accepted
    assert cert.no_line_through_D
    assert cert.oddness_dim == 1
    ring = cfg.ring
    field = ring.field
    doubled = [p for p, m in cfg.divisor if m == 2][0]
    grad = [cfg.quintic.partial(i).evaluate(doubled) for i in range(3)]
    # tangent direction of the quintic at the doubled point is (1,0,0)
    assert grad[0] == field.zero and grad[1] == field.zero
    monos = ring.monomials(2)
    rows = []
    for p, m in cfg.divisor:
        rows.append([ring.monomial(mo).evaluate(p) for mo in monos])
        if m == 2:
            rows.append([ring.monomial(mo).partial(0).evaluate(p) for mo in monos])
    assert len(nullspace(Matrix(field, rows, len(monos)))) == 1


def test_mu1_line_pencil_is_polar():
    cfg, _ = random_tangency_config(FP, seed=3)
    for p, _ in cfg.divisor:
        got = mu1_line_pencil(cfg.quintic, p).primitive_normalized()
        want = polar_of(cfg.quintic, p).primitive_normalized()
        assert (got - want).is_zero() or (got + want).is_zero()
    with pytest.raises(ValueError):
        mu1_line_pencil(cfg.quintic, (1, 0, 0))


def test_mu1_two_line_frame_closed_form():
    # lines through (0,1,0) are -x and -z, so the determinant is exactly -Q_y
    _, cfg, _ = random_u_family(QQ, seed=4)
    got = mu1_line_pencil(cfg.quintic, (0, 1, 0))
    assert (got + cfg.quintic.partial(1)).is_zero()


def test_conic_pencil_through_four_points():
    ring = PolyRing(QQ, ("x", "y", "z"))
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3)]
    c1, c2 = conic_pencil_through(ring, pts)
    field = ring.field
    for c in (c1, c2):
        for p in pts:
            assert c.evaluate(tuple(field.of(v) for v in p)) == field.zero
    m = Matrix(field, [ring.basis(2).to_vector(c1), ring.basis(2).to_vector(c2)], 6)
    assert m.rank() == 2
    with pytest.raises(ValueError):
        conic_pencil_through(ring, [(1, 0, 0), (0, 0, 1), (1, 0, 1), (2, 0, 1)])


def test_divide_by_conic_multiplies_back():
    cfg, _ = random_tangency_config(FP, seed=9)
    ring = cfg.ring
    b10 = ring.basis(10)
    mod_q5 = Subspace.from_vectors(
        ring.field, len(b10),
        [b10.to_vector(cfg.quintic * ring.monomial(m)) for m in ring.monomials(5)])
    points = [p for p, _ in cfg.divisor]
    c1, c2 = conic_pencil_through(ring, points[1:])
    w = mu1_line_pencil(cfg.quintic, points[0]) * jacobian_det(c1, c2, cfg.quintic)
    rho = divide_by_conic(cfg, w)
    assert rho.is_homogeneous(8)
    assert mod_q5.contains(b10.to_vector(cfg.conic * rho - w))
    # a generic degree-10 form is not divisible
    rng = random.Random(11)
    with pytest.raises(ValueError):
        divide_by_conic(cfg, ring.random_form(10, rng))


def test_mu2_element_class_invariants():
    cfg, _ = random_tangency_config(FP, seed=13)
    ring = cfg.ring
    rng = random.Random(17)
    e = mu2_rank4(cfg, 0)
    assert not e.is_zero_class()
    shifted = Mu2Element(cfg, e.representative + cfg.quintic * ring.random_form(3, rng))
    assert shifted.normal_vector == e.normal_vector
    scaled = Mu2Element(cfg, e.representative.scale(ring.field.of(7)))
    assert scaled.normal_vector == e.normal_vector
    trivial = Mu2Element(cfg, cfg.quintic * ring.random_form(3, rng))
    assert trivial.is_zero_class()
    with pytest.raises(ValueError):
        Mu2Element(cfg, ring.random_form(7, rng))


def test_mu2_rank4_lands_in_jacobian_ideal():
    for seed in (21, 22):
        cfg, _ = random_tangency_config(FP, seed=seed)
        span = ideal8_span(cfg.quintic)
        for i in range(5):
            e = mu2_rank4(cfg, i)
            assert not e.is_zero_class()
            assert tau_membership(e)
            assert in_ideal8(span, e.representative)
            assert tau_class(e).is_zero()


def test_mu2_rank4_rational_field():
    cfg, _ = random_tangency_config(QQ, seed=23)
    e = mu2_rank4(cfg, 0)
    assert not e.is_zero_class()
    assert tau_membership(e)
    assert in_ideal8(ideal8_span(cfg.quintic), e.representative)
    assert tau_class(e).is_zero()


def test_mu2_rank3_two_line_frame():
    _, cfg, _ = random_u_family(FP, seed=31)
    e = mu2_rank3(cfg)
    assert not e.is_zero_class()
    assert tau_membership(e)
    assert in_ideal8(ideal8_span(cfg.quintic), e.representative)
    assert tau_class(e).is_zero()
    # the rank-4 route refuses the non-reduced divisor, and vice versa
    with pytest.raises(ValueError):
        mu2_rank4(cfg, 0)
    red, _ = random_tangency_config(FP, seed=31)
    with pytest.raises(ValueError):
        mu2_rank3(red)


def test_mu2_injectivity_between_divisor_points():
    cfg, _ = random_tangency_config(FP, seed=37)
    assert mu2_injectivity_check(cfg, 0, 1)
    assert mu2_injectivity_check(cfg, 2, 4)


def test_quintic_config_validation():
    cfg, _ = random_tangency_config(FP, seed=41)
    ring, q, c = cfg.ring, cfg.quintic, cfg.conic
    pts = [p for p, _ in cfg.divisor]
    with pytest.raises(ValueError):
        QuinticConfig(q, c, [(pts[0], 2)] + [(p, 1) for p in pts[1:4]])
    with pytest.raises(ValueError):
        QuinticConfig(q, c, [(pts[0], 1), (pts[0], 1)] + [(p, 1) for p in pts[1:4]])
    with pytest.raises(ValueError):
        QuinticConfig(q, c, [(p, 1) for p in pts[:4]])
    with pytest.raises(ValueError):
        QuinticConfig(q, c, [((1, 0, 0), 1)] + [(p, 1) for p in pts[:4]])
    y = ring.var(1)
    with pytest.raises(ValueError):
        QuinticConfig(q, y * y, [(p, 1) for p in pts])
    with pytest.raises(ValueError):
        QuinticConfig(q * ring.var(0), c, [(p, 1) for p in pts])
