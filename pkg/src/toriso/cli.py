"""Command line interface.

Decision results go to stdout, diagnostics to stderr.  Exit codes: 0 for a
positive decision, 1 for a negative one, 2 for any input or usage error.
`main` takes an argv list and returns the exit code, so tests drive it
in-process; `entry` is the console-script wrapper.
"""

from __future__ import annotations

import argparse
import sys

from .cohomology import DegreeTwoClass, annihilator_rank_oracle, presentation, zero_length
from .fanio import FanFormatError, load_fan, render_fan
from .fans import FanData, blow_up, hirzebruch, product, projective_space, validate
from .isomorphism import DecisionMode, decide
from .quotient import kernel_data


class InputError(Exception):
    """User-facing problem with an input; maps to exit code 2."""


def _load(path: str) -> FanData:
    try:
        return load_fan(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except FanFormatError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_valid(path: str) -> FanData:
    fan = _load(path)
    report = validate(fan)
    if not report.ok:
        first = report.issues[0]
        raise InputError(
            f"{path}: fan fails validation ({first.check}: {first.message})"
        )
    return fan


def _parse_face(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"face must be comma-separated integers, got {text!r}") from exc


def cmd_validate(args) -> int:
    fan = _load(args.fan)
    report = validate(fan, strict_sphere=args.strict_sphere)
    print(report.render())
    return 0 if report.ok else 1


def cmd_cohomology(args) -> int:
    fan = _load_valid(args.fan)
    print(presentation(fan).render())
    return 0


def cmd_zerolength(args) -> int:
    fan = _load_valid(args.fan)
    coeffs = _parse_face(args.class_coeffs)
    if len(coeffs) != fan.m:
        raise InputError(
            f"--class needs {fan.m} comma-separated integers, got {len(coeffs)}"
        )
    xi = DegreeTwoClass(coeffs)
    count = zero_length(fan, xi)
    if args.oracle:
        check = annihilator_rank_oracle(fan, xi)
        if check != count:
            raise InputError(
                f"internal disagreement: support count {count}, oracle {check}"
            )
    print(count)
    return 0


def cmd_fixedpoints(args) -> int:
    fan = _load_valid(args.fan)
    for facet in fan.complex.facets:
        print(",".join(str(v) for v in facet))
    return 0


def cmd_iso(args) -> int:
    mode = DecisionMode(args.mode)
    first = _load_valid(args.first)
    second = _load_valid(args.second)
    try:
        witness = decide(first, second, mode)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if witness is None:
        print("NOT ISOMORPHIC")
        return 1
    print(witness.to_json())
    if witness.uses_negative_sign():
        print(
            "note: witness flips the orientation of some rays "
            "(epsilon has -1 entries)",
            file=sys.stderr,
        )
    return 0


def cmd_quotient(args) -> int:
    fan = _load_valid(args.fan)
    if fan.mode != "toric":
        raise InputError("quotient requires a toric-mode fan")
    print(kernel_data(fan).render())
    return 0


def cmd_gen(args) -> int:
    name = args.family
    params = args.params
    try:
        if name == "projective_space":
            if len(params) != 1:
                raise InputError("projective_space takes one parameter: the dimension")
            fan = projective_space(_int_param(params[0]))
        elif name == "hirzebruch":
            if len(params) != 1:
                raise InputError("hirzebruch takes one parameter: the twist")
            fan = hirzebruch(_int_param(params[0]))
        elif name == "product":
            if len(params) != 2:
                raise InputError("product takes two fan files")
            fan = product(_load_valid(params[0]), _load_valid(params[1]))
        else:
            raise InputError(
                f"unknown family {name!r}; choose projective_space, hirzebruch, "
                "or product"
            )
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    sys.stdout.write(render_fan(fan))
    return 0


def _int_param(text: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise InputError(f"expected an integer parameter, got {text!r}") from exc


def cmd_blowup(args) -> int:
    fan = _load_valid(args.fan)
    face = _parse_face(args.face)
    try:
        result = blow_up(fan, face)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    sys.stdout.write(render_fan(result))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toriso",
        description="Validate fans, present their equivariant cohomology, "
        "and decide isomorphism with explicit witnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the axioms for the fan's mode")
    p.add_argument("fan")
    p.add_argument(
        "--strict-sphere",
        action="store_true",
        help="also require the Euler characteristic of a sphere",
    )
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("cohomology", help="print the face-ring presentation")
    p.add_argument("fan")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser(
        "zerolength",
        help="count fixed points where a degree-2 class restricts to zero",
    )
    p.add_argument("fan")
    p.add_argument(
        "--class",
        dest="class_coeffs",
        required=True,
        metavar="A1,...,AM",
        help="coefficients of the class on tau_1..tau_m",
    )
    p.add_argument(
        "--oracle",
        action="store_true",
        help="cross-check with the per-point linear-algebra route",
    )
    p.set_defaults(func=cmd_zerolength)

    p = sub.add_parser("fixedpoints", help="list the maximal cones")
    p.add_argument("fan")
    p.set_defaults(func=cmd_fixedpoints)

    p = sub.add_parser("iso", help="decide isomorphism and print a witness")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument(
        "--mode",
        choices=[m.value for m in DecisionMode],
        default=DecisionMode.WEAK_TORIC.value,
    )
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("quotient", help="print the kernel lattice of the rays")
    p.add_argument("fan")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("gen", help="write a standard fan to stdout")
    p.add_argument("family")
    p.add_argument("params", nargs="*")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("blowup", help="subdivide at a face, appending the ray sum")
    p.add_argument("fan")
    p.add_argument("--face", required=True, metavar="I1,...,IK")
    p.set_defaults(func=cmd_blowup)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FanFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())
