"""Command-line front end.

Subcommands:

  verify SUITE        run a named verification suite (or "all")
  discriminant        line-projection data of a cubic threefold
  triple-points       contact divisor of the discriminant's marked conic
  gauss mu2           second Gaussian map on a pointed-quintic instance
  lift verify         the lifted-map suites (subset of verify)
  family              print one configuration (u8 | klein | random)

Exit codes: 0 all checks pass, 1 verification failures, 2 usage or
configuration errors.
"""

import argparse
import json
import sys
import time
from fractions import Fraction

from .conicbundle import LineInX, conic_bundle, special_line_test, triple_points
from .families import (
    UFamilySpec,
    klein_instance,
    random_tangency_config,
    random_u_family,
    u_family_quintic,
)
from .gaussmaps import mu2_rank3, mu2_rank4, tau_membership
from .jacobian import SingularityError
from .linalg import QQ, field_from_descriptor
from .poly import PolyRing
from .suites import SUITE_NAMES, report_schema_version, run_all, run_suite

LIFT_SUITES = ("euler", "li-ti", "dims", "lemma-ai", "tau-tilde-zero", "h-tau")


class UsageError(ValueError):
    pass


def _parse_field(text):
    try:
        return field_from_descriptor(text)
    except ValueError as err:
        raise UsageError(str(err))


def _parse_point(text, field, n):
    parts = text.split(",")
    if len(parts) != n:
        raise UsageError("point %r needs %d comma-separated coordinates"
                         % (text, n))
    try:
        return tuple(field.of(Fraction(p.strip())) for p in parts)
    except (ValueError, ZeroDivisionError) as err:
        raise UsageError("bad coordinate in %r: %s" % (text, err))


def _point_text(pt):
    return ":".join(str(c) for c in pt)


def _cycle_payload(points):
    return sorted(([_point_text(pt), m] for pt, m in points.items()))


def _emit(args, text_render, payload):
    out = text_render() if getattr(args, "text", False) else json.dumps(payload)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(out + "\n")
    else:
        print(out)


def _build_bundle(args, field):
    ring = PolyRing(field, ("x0", "x1", "x2", "x3", "x4"))
    try:
        cubic = ring.parse(args.cubic)
    except ValueError as err:
        raise UsageError("cannot parse cubic: %s" % err)
    p1 = _parse_point(args.line[0], field, 5)
    p2 = _parse_point(args.line[1], field, 5)
    plane = tuple(_parse_point(t, field, 5) for t in args.plane)
    try:
        line = LineInX(cubic, p1, p2, plane)
        return conic_bundle(line)
    except ValueError as err:
        raise UsageError(str(err))


def _bundle_payload(data):
    return {
        "matrix": [[str(e) for e in row] for row in data.matrix],
        "quintic": str(data.quintic),
        "quintic_normalized": str(data.quintic.primitive_normalized()),
        "conic": str(data.conic),
        "psi": [str(c) for c in data.psi],
        "quintic_smooth": special_line_test(data),
    }


def _bundle_text(payload):
    lines = ["matrix:"]
    for row in payload["matrix"]:
        lines.append("  [ " + " | ".join(row) + " ]")
    lines.append("quintic:  %s" % payload["quintic"])
    lines.append("conic:    %s" % payload["conic"])
    for i, c in enumerate(payload["psi"]):
        lines.append("psi[%d]:   %s" % (i, c))
    lines.append("smooth discriminant: %s" % payload["quintic_smooth"])
    return "\n".join(lines)


def cmd_verify(args):
    field = _parse_field(args.field) if args.field else None
    if args.suite == "all":
        reports = run_all(field=field, seed=args.seed, trials=args.trials,
                          confirm_rational=args.confirm_rational)
        if args.text:
            body = "\n\n".join(rep.to_text() for rep in reports)
        else:
            body = "\n".join(json.dumps(rep.to_dict()) for rep in reports)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(body + "\n")
        else:
            print(body)
        return 0 if all(rep.passed() for rep in reports) else 1
    rep = run_suite(args.suite, field=field, seed=args.seed,
                    trials=args.trials, confirm_rational=args.confirm_rational)
    _emit(args, rep.to_text, rep.to_dict())
    return 0 if rep.passed() else 1


def cmd_discriminant(args):
    field = _parse_field(args.field)
    data = _build_bundle(args, field)
    payload = _bundle_payload(data)
    _emit(args, lambda: _bundle_text(payload), payload)
    return 0


def cmd_triple_points(args):
    field = _parse_field(args.field)
    data = _build_bundle(args, field)
    payload = _bundle_payload(data)
    try:
        report = triple_points(data, seed=args.seed)
    except ValueError as err:
        payload.update({"resolvable": False, "reason": str(err)})
        _emit(args, lambda: _bundle_text(payload) + "\nnot resolvable: %s" % err,
              payload)
        return 1
    payload.update({
        "resolvable": report.resolvable,
        "reason": report.reason,
        "cycle": _cycle_payload(report.cycle.points) if report.cycle else None,
        "divisor": _cycle_payload(report.d_points),
        "irrational_part": [[d, m, str(f)] for d, m, f in report.d_residual],
        "is_reduced": report.is_reduced,
        "is_rational": report.is_rational,
        "psi_vanishes_on_divisor": report.psi_vanishes,
    })

    def render():
        lines = [_bundle_text(payload)]
        lines.append("cycle:    %s" % payload["cycle"])
        lines.append("divisor:  %s" % payload["divisor"])
        lines.append("reduced: %s  rational: %s" %
                      (payload["is_reduced"], payload["is_rational"]))
        return "\n".join(lines)

    _emit(args, render, payload)
    return 0 if report.resolvable and report.is_rational else 1


def _u8_config(field, spec_text, seed):
    if spec_text is None:
        spec, cfg, _ = random_u_family(field, seed)
        return spec, cfg
    parts = spec_text.split(",")
    if len(parts) == 1:
        spec, cfg, _ = random_u_family(field, int(parts[0]))
        return spec, cfg
    if len(parts) != 12:
        raise UsageError("--spec wants a seed or 12 comma-separated values")
    try:
        spec = UFamilySpec(field, [Fraction(p.strip()) for p in parts])
        return spec, u_family_quintic(spec)
    except (ValueError, SingularityError) as err:
        raise UsageError(str(err))


def cmd_gauss(args):
    field = _parse_field(args.field)
    start = time.perf_counter()
    if args.family == "u8":
        spec, cfg = _u8_config(field, args.spec, args.seed)
        element = mu2_rank3(cfg)
        meta = {"family": "u8", "coefficients": [str(a) for a in spec.a]}
    else:
        cfg, _ = random_tangency_config(field, args.seed)
        element = mu2_rank4(cfg, 0)
        meta = {"family": "tangency",
                "divisor": _cycle_payload(dict(cfg.divisor))}
    member = tau_membership(element)
    payload = {
        "field": field.describe(),
        "quintic": str(cfg.quintic),
        "conic": str(cfg.conic),
        "rho": str(element.representative),
        "normal_form": str(element.normal_form()),
        "is_zero_class": element.is_zero_class(),
        "in_jacobian_ideal": member,
        "wall_time": time.perf_counter() - start,
    }
    payload.update(meta)

    def render():
        lines = ["family:   %s" % payload["family"],
                 "quintic:  %s" % payload["quintic"],
                 "conic:    %s" % payload["conic"],
                 "rho:      %s" % payload["rho"],
                 "zero class:        %s" % payload["is_zero_class"],
                 "in Jacobian ideal: %s" % payload["in_jacobian_ideal"]]
        return "\n".join(lines)

    _emit(args, render, payload)
    return 0 if member else 1


def cmd_lift(args):
    field = _parse_field(args.field) if args.field else None
    rep = run_suite(args.suite, field=field, seed=args.seed,
                    trials=args.trials, confirm_rational=args.confirm_rational)
    payload = {
        "suite": rep.suite_name,
        "claim": rep.claim,
        "field": rep.field,
        "seed": rep.seed,
        "instances": rep.instances_run,
        "failures": rep.failures,
        "timings": {"wall_time": rep.wall_time},
    }
    _emit(args, rep.to_text, payload)
    return 0 if rep.passed() else 1


def cmd_family(args):
    """Print the configuration's polynomials as text, then JSON metadata."""
    field = _parse_field(args.field)
    code = 0
    if args.kind == "klein":
        eps = Fraction(args.params) if args.params else Fraction(-1)
        inst = klein_instance(field, eps, seed=args.seed)
        meta = {
            "kind": "klein",
            "field": field.describe(),
            "epsilon": str(eps),
            "cubic": str(inst.deformation.cubic),
            "quintic": str(inst.bundle.quintic.primitive_normalized()),
            "conic": str(inst.bundle.conic),
            "accepted": inst.accepted,
            "rejection": inst.rejection,
            "divisor": (_cycle_payload(dict(inst.config.divisor))
                        if inst.accepted else None),
        }
        header = meta["cubic"]
        code = 0 if inst.accepted else 1
    else:
        if args.kind == "u8":
            spec, cfg = _u8_config(field, args.params, args.seed)
            meta = {"kind": "u8", "field": field.describe(),
                    "coefficients": [str(a) for a in spec.a]}
        else:
            cfg, _ = random_tangency_config(field, args.seed)
            meta = {"kind": "random-tangency", "field": field.describe()}
        meta.update({
            "quintic": str(cfg.quintic),
            "conic": str(cfg.conic),
            "divisor": _cycle_payload(dict(cfg.divisor)),
            "seed": args.seed,
        })
        header = meta["quintic"]
    body = header + "\n" + json.dumps(meta)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(body + "\n")
    else:
        print(body)
    return code


def _add_common(parser, default_field=None, with_trials=False,
                with_format=True):
    parser.add_argument("--field", default=default_field,
                        help="q (rationals) or p=<prime>; p alone is the "
                             "62-bit sweep prime")
    parser.add_argument("--seed", type=int, default=0, help="base RNG seed")
    if with_trials:
        parser.add_argument("--trials", type=int, default=None,
                            help="instance count (suite default when omitted)")
        parser.add_argument("--confirm-rational", type=int, default=0,
                            dest="confirm_rational", metavar="K",
                            help="re-run K extra instances over the rationals")
    parser.add_argument("--out", default=None, help="write output to a file")
    if with_format:
        fmt = parser.add_mutually_exclusive_group()
        fmt.add_argument("--json", dest="text", action="store_false",
                         help="machine-readable output (default)")
        fmt.add_argument("--text", dest="text", action="store_true",
                         help="human-readable output")
        parser.set_defaults(text=False)


def _add_bundle_inputs(parser):
    parser.add_argument("--cubic", required=True,
                        help="cubic threefold in x0..x4, e.g. "
                             "'x0^2*x2 + x1^2*x3 + ...'")
    parser.add_argument("--line", nargs=2, required=True, metavar="PT",
                        help="two points spanning the line, each "
                             "'c0,c1,c2,c3,c4'")
    parser.add_argument("--plane", nargs=3, required=True, metavar="PT",
                        help="three points spanning a complementary plane")


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="threefold",
        description="Exact verification of conic-bundle and Gaussian-map "
                    "identities for cubic threefolds and their discriminant "
                    "quintics (report schema %s)." % report_schema_version())
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run a named verification suite")
    p.add_argument("suite", choices=SUITE_NAMES)
    _add_common(p, with_trials=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("discriminant",
                       help="line-projection matrix, quintic, conic, psi")
    _add_bundle_inputs(p)
    _add_common(p, default_field="q")
    p.set_defaults(func=cmd_discriminant)

    p = sub.add_parser("triple-points",
                       help="contact divisor of the marked conic")
    _add_bundle_inputs(p)
    _add_common(p, default_field="q")
    p.set_defaults(func=cmd_triple_points)

    p = sub.add_parser("gauss", help="Gaussian-map computations")
    gsub = p.add_subparsers(dest="gauss_command", required=True)
    g = gsub.add_parser("mu2", help="second Gaussian map image and verdicts")
    g.add_argument("--family", choices=("u8", "tangency"), default="u8")
    g.add_argument("--spec", default=None,
                   help="sampler seed or 12 comma-separated coefficients")
    _add_common(g, default_field="q")
    g.set_defaults(func=cmd_gauss)

    p = sub.add_parser("lift", help="lifted-map verification")
    lsub = p.add_subparsers(dest="lift_command", required=True)
    v = lsub.add_parser("verify", help="run one lifted-map suite")
    v.add_argument("--suite", choices=LIFT_SUITES, required=True)
    _add_common(v, with_trials=True)
    v.set_defaults(func=cmd_lift)

    p = sub.add_parser("family",
                       help="print one configuration (polynomials + JSON)")
    p.add_argument("kind", choices=("u8", "klein", "random"))
    p.add_argument("--params", default=None,
                   help="u8: 12 comma-separated coefficients; klein: epsilon")
    _add_common(p, default_field="q", with_format=False)
    p.set_defaults(func=cmd_family)
    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.seed < 0 or args.seed >= 1 << 64:
        print("seed must fit in 64 bits", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except UsageError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2
    except ValueError as err:
        print("error: %s" % err, file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
