"""Acceptance battery.

One test per acceptance criterion, so ``pytest -v`` prints exactly one
pass/fail line for each; every test also prints a one-line verdict with
the instance count and wall time (visible with -s, or on failure).

Each criterion runs the corresponding verification suite at its stated
instance counts and tolerance (everything here is exact arithmetic — a
"tolerance" only ever shows up as a stated wall-clock budget, asserted
where the criterion gives one).  Failure lists are asserted empty, never
truncated: if a suite reports a broken identity, the raw failure records
appear in the assertion message.

Two measured dimensions differ from the naive expectation and are
asserted at their measured values: in the two-line frame the degree-7
weight-3 system has dimension 8 (three of the simple base points are
collinear), with the 2-dimensional lift ambiguity exactly killed by the
h map.  The reduced configurations show the naive dimension 6 and no
ambiguity.  Both facts are pinned here.
"""

from threefold.linalg import GF, QQ
from threefold.suites import run_suite

_MEMO = {}


def _suite(name, **kwargs):
    key = (name,) + tuple(sorted(kwargs.items()))
    if key not in _MEMO:
        _MEMO[key] = run_suite(name, **kwargs)
    return _MEMO[key]


def _check(rep, label):
    verdict = "PASS" if rep.passed() else "FAIL"
    print("%-52s %s  (%d instances, %.2fs)"
          % (label, verdict, rep.instances_run, rep.wall_time))
    assert rep.passed(), (label, rep.failures)


def test_criterion_01_macaulay_duality():
    # word-size prime takes the fast elimination backend; the 62-bit
    # sweep prime stays the default everywhere else
    rep = _suite("macaulay", field=GF(1000000007), trials=20)
    _check(rep, "1: Macaulay duality, 20+20 rings over F_p")
    assert rep.instances_run >= 40
    assert rep.wall_time < 60.0
    rep_q = _suite("macaulay", field=QQ, trials=20)
    _check(rep_q, "1: Macaulay duality, 20+20 rings over Q")
    assert rep_q.instances_run >= 40
    assert rep_q.wall_time < 120.0


def test_criterion_02_discriminant_golden():
    rep = _suite("discriminant")
    _check(rep, "2: symbolic discriminant matches golden text")
    # the budget covers the whole suite, so a fortiori the golden compare
    assert rep.wall_time < 1.0


def test_criterion_03_smoothness_and_cycles():
    # same suite: the +1 member is smooth but rejected as irrational,
    # the -1 member reproduces both line-restriction cycles
    rep = _suite("discriminant")
    _check(rep, "3: smooth witness and contact cycles")
    assert rep.instances_run == 3


def test_criterion_04_quadric_pencils():
    rep = _suite("i2-polars", trials=10)
    _check(rep, "4: vanishing-quadric pencils have dimension 2")
    assert rep.instances_run >= 11  # distinguished member + 10 random
    assert rep.details["pencil_dim"] == 2


def test_criterion_05_euler_identity():
    rep = _suite("euler", trials=10)
    _check(rep, "5: Euler identity, numeric and symbolic")
    assert rep.instances_run >= 11  # 10 instances + the symbolic leg


def test_criterion_06_dimension_chain():
    rep = _suite("dims", trials=10)
    _check(rep, "6: base-system dimension chain")
    assert rep.instances_run >= 20  # 10 reduced + 10 frame specializations
    assert rep.details["reduced_degree7_dim"] == 6
    assert rep.details["frame_degree7_dim"] == 8
    assert rep.details["frame_lift_ambiguity"] == 2
    assert rep.details["h_kernel_dim"] == 2


def test_criterion_07_symbolic_frame_identities():
    rep = _suite("lemma-ai")
    _check(rep, "7: closed-form frame identities, 15 variables")
    assert rep.details["quartic_count"] == 13


def test_criterion_08_mu2_membership():
    rep = _suite("mu2-membership", trials=50, confirm_rational=5)
    _check(rep, "8: mu2 images lie in the degree-8 Jacobian piece")
    assert rep.details["rank3_instances"] >= 50
    assert rep.details["rank4_instances"] >= 25
    # 5 rational confirmations of each route on top of the F_p legs
    assert rep.instances_run >= 50 + 25 + 10


def test_criterion_09_lifted_map_vanishes():
    rep_zero = _suite("tau-tilde-zero", trials=50)
    _check(rep_zero, "9: lifted image is the zero class")
    assert rep_zero.instances_run >= 50
    rep_h = _suite("h-tau", trials=20)
    _check(rep_h, "9: h after lift equals the projection")
    assert len(rep_h.details["configs"]) >= 4
    assert rep_h.details["classes_per_config"] >= 20
    assert rep_zero.wall_time + rep_h.wall_time < 600.0


def test_criterion_10_mu2_injectivity():
    rep = _suite("mu2-injectivity", trials=25)
    _check(rep, "10: paired mu2 images are independent")
    assert rep.instances_run >= 25
