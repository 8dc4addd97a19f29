"""Conic-bundle discriminant tests.

Independent oracles:
  * a permutation-expansion 3x3 determinant, written separately from the
    library's cofactor route;
  * the polar form recomputed as the t-linear Taylor coefficient of
    F(x + t*p) in an extended ring;
  * direct substitution of the singular-point section into the cubic,
    with the quotient by the quintic checked by multiplying back.

The symbolic one-parameter family is pinned bit for bit by a golden file
(tests/golden/deformation_bundle.json); run pytest --regold to rewrite it
after an intentional change.
"""

import json
import os
import random

import pytest

from threefold.conicbundle import (
    LineInX,
    conic_bundle,
    polar_form,
    pullback_mod_quintic,
    special_line_test,
    triple_points,
    verify_polar_quadrics,
)
from threefold.families import (
    klein_cubic,
    klein_instance,
    klein_symbolic,
    random_cubic_with_line,
)
from threefold.linalg import GF, QQ, DEFAULT_SWEEP_PRIME
from threefold.poly import PolyRing

GOLDEN = os.path.join(os.path.dirname(__file__), "golden",
                      "deformation_bundle.json")


def golden_check(payload, regold):
    if regold or not os.path.exists(GOLDEN):
        os.makedirs(os.path.dirname(GOLDEN), exist_ok=True)
        with open(GOLDEN, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return
    with open(GOLDEN) as fh:
        want = json.load(fh)
    assert payload == want


def det3_oracle(m):
    """Determinant by the signed permutation sum, no cofactors."""
    return (m[0][0] * m[1][1] * m[2][2]
            + m[0][1] * m[1][2] * m[2][0]
            + m[0][2] * m[1][0] * m[2][1]
            - m[0][2] * m[1][1] * m[2][0]
            - m[0][0] * m[1][2] * m[2][1]
            - m[0][1] * m[1][0] * m[2][2])


def polar_oracle(cubic, point):
    """Coefficient of t in F(x + t*p), computed in a six-variable ring."""
    ring = cubic.ring
    ext = PolyRing(ring.field, tuple(ring.names) + ("t",))
    t = ext.var(5)
    images = [ext.var(i) + t.scale(ring.field.of(c)) for i, c in enumerate(point)]
    shifted = cubic.substitute(images, ext)
    bucket = shifted.split_by((5,), ring).get((1,))
    return ring.zero() if bucket is None else bucket


def fermat_with_line():
    ring = PolyRing(QQ, ("x0", "x1", "x2", "x3", "x4"))
    cubic = ring.parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3")
    return LineInX(cubic, (1, -1, 0, 0, 0), (0, 0, 1, -1, 0),
                   ((1, 1, 0, 0, 0), (0, 0, 1, 1, 0), (0, 0, 0, 0, 1)))


def test_rejects_line_not_on_cubic():
    ring = PolyRing(QQ, ("x0", "x1", "x2", "x3", "x4"))
    cubic = ring.parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3 + x0*x1*x2")
    with pytest.raises(ValueError):
        LineInX(cubic, (1, -1, 0, 0, 0), (0, 0, 1, -1, 0),
                ((1, 1, 0, 0, 0), (0, 0, 1, 1, 0), (0, 0, 0, 0, 1)))


def test_rejects_degenerate_plane():
    ring = PolyRing(QQ, ("x0", "x1", "x2", "x3", "x4"))
    cubic = ring.parse("x0^3 + x1^3 + x2^3 + x3^3 + x4^3")
    with pytest.raises(ValueError):
        LineInX(cubic, (1, -1, 0, 0, 0), (0, 0, 1, -1, 0),
                ((1, -1, 0, 0, 0), (0, 0, 1, 1, 0), (0, 0, 0, 0, 1)))


def test_symbolic_family_golden(regold):
    line = klein_symbolic()
    data = conic_bundle(line)
    payload = {
        "matrix": [[str(e) for e in row] for row in data.matrix],
        "quintic": str(data.quintic),
        "quintic_normalized": str(data.quintic.primitive_normalized()),
        "conic": str(data.conic),
        "psi": [str(c) for c in data.psi],
    }
    golden_check(payload, regold)


def test_symbolic_determinant_matches_oracle():
    data = conic_bundle(klein_symbolic())
    assert (data.quintic - det3_oracle(data.matrix)).is_zero()


def test_symbolic_conic_is_upper_principal_minor():
    data = conic_bundle(klein_symbolic())
    m = data.matrix
    assert (data.conic - (m[0][0] * m[1][1] - m[0][1] * m[0][1])).is_zero()


def test_section_lands_on_cubic():
    line = klein_symbolic()
    data = conic_bundle(line)
    images = list(data.psi) + [data.ring3.variable(n) for n in line.param_names]
    composed = line.cubic.substitute(images, data.ring3)
    quotient = composed.exact_divide(data.quintic)
    assert quotient is not None
    assert (quotient * data.quintic - composed).is_zero()


def test_polar_form_matches_taylor_oracle():
    rng = random.Random(5)
    ring = PolyRing(QQ, ("x0", "x1", "x2", "x3", "x4"))
    for _ in range(4):
        cubic = ring.random_form(3, rng)
        point = tuple(rng.randint(-4, 4) for _ in range(5))
        mine = polar_form(cubic, point)
        assert (mine - polar_oracle(cubic, point)).is_zero()


def test_fermat_line_is_special():
    data = conic_bundle(fermat_with_line())
    x, y, z = (data.ring3.var(i) for i in range(3))
    factored = (x * y * (z * z * z + (x ** 3 + y ** 3).scale(QQ.of(2)))
                ).scale(QQ.of(36))
    assert (data.quintic - factored).is_zero()
    assert special_line_test(data) is False


def test_klein_specializations_triple_points(regold):
    minus = klein_instance(QQ, -1)
    assert minus.accepted
    report = minus.triple
    assert report.resolvable and report.is_rational
    assert not report.is_reduced  # one divisor point is doubled
    assert report.psi_vanishes
    plus = klein_instance(QQ, 1)
    assert not plus.accepted
    assert "irrational" in plus.rejection
    payload = {
        "minus_divisor": sorted(
            [[str(c) for c in pt], m] for pt, m in report.d_points.items()),
        "plus_rejection": plus.rejection,
    }
    path = os.path.join(os.path.dirname(GOLDEN), "specialized_divisors.json")
    if regold or not os.path.exists(path):
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return
    with open(path) as fh:
        assert payload == json.load(fh)


def test_klein_divisor_support():
    minus = klein_instance(QQ, -1)
    points = dict(minus.triple.d_points)
    want = {
        (QQ.of(0), QQ.of(1), QQ.of(0)): 2,
        (QQ.of(0), QQ.of(1), QQ.of(1)): 1,
        (QQ.of(1), QQ.of(1), QQ.of(1)): 1,
        (QQ.of(1), QQ.of(-1), QQ.of(-1)): 1,
    }
    assert points == want
    # the doubled point sits on the branch line {z=0}, the node of the
    # conic x*(z-y) is the simple point (0,1,1)
    cycle = dict(minus.triple.cycle.points)
    assert cycle == {pt: 2 * m for pt, m in want.items()}


def test_klein_polar_pencils():
    for eps in (-1, 1):
        inst = klein_instance(QQ, eps)
        report = verify_polar_quadrics(inst.bundle, rng=random.Random(3))
        assert report["ok"]
        assert report["pencil_dim"] == 2
        assert report["polar_p1_vanishes"] and report["polar_p2_vanishes"]
        assert not report["random_nonmember_vanishes"]


def test_klein_smooth_quintics_both_signs():
    for eps in (-1, 1):
        inst = klein_instance(QQ, eps)
        assert special_line_test(inst.bundle) is True


def test_triple_points_requires_good_reduction():
    # the Fermat line's quintic is a product with multiple components, so
    # the conic section cannot be halved into a divisor
    data = conic_bundle(fermat_with_line())
    with pytest.raises(ValueError):
        triple_points(data)


def test_random_cubic_lines_polar_pencils_prime_field():
    field = GF(DEFAULT_SWEEP_PRIME)
    for seed in (11, 12, 13):
        line, data, log = random_cubic_with_line(field, seed=seed)
        report = verify_polar_quadrics(data)
        assert report["ok"], (seed, report, log)


def test_random_cubic_lines_polar_pencils_rational():
    line, data, log = random_cubic_with_line(QQ, seed=11)
    report = verify_polar_quadrics(data)
    assert report["ok"], (report, log)


def test_polar_pullbacks_vanish_mod_quintic():
    field = GF(DEFAULT_SWEEP_PRIME)
    line, data, _ = random_cubic_with_line(field, seed=21)
    for point in (line.p1, line.p2):
        quadric = polar_form(line.cubic, point)
        assert pullback_mod_quintic(data, quadric)


def test_klein_cubic_polar_rank():
    from threefold.jacobian import quadric_rank
    ring = PolyRing(QQ, ("x0", "x1", "x2", "x3", "x4"))
    cubic = klein_cubic(ring, QQ.of(-1))
    polar = polar_form(cubic, (1, 0, 0, 0, 0))
    expected = ring.parse("2*x0*x1 + x4^2")
    assert (polar - expected).is_zero()
    assert quadric_rank(polar) == 3
