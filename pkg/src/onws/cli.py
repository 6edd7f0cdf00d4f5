"""Command-line front end.  Every subcommand writes one JSON document to stdout.

Exit status: 0 on success, 1 when a system fails verification or a bound is
violated (the report is still printed), 2 on invalid input.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import catalog
from .digits import DigitKind, digit_set, verify_digit_properties
from .formats import (
    dumps, family_from_json, family_to_json, load, save, signal_from_json, signal_to_json,
)
from .lattice import IntMatrix2, LatticeError, make_dilation
from .spectral import SizeMismatch, dft, idft
from .uncertainty import (
    NotVerified, ZeroSignal, bound_sweep, check_uncertainty, expand, localization_constants,
)
from .wavelet import (
    WaveletError, WaveletFamily, construct_single_generator, random_onws,
    verify_onws, verify_onws_gram, verify_single_generator,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonneg_float(text: str) -> float:
    value = float(text)
    if not value >= 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {text}")
    return value


def _matrix(text: str) -> IntMatrix2:
    try:
        return IntMatrix2.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pts(points) -> list[list[int]]:
    return [[int(a), int(b)] for a, b in points]


def digits_payload(ctx) -> dict:
    D = digit_set(ctx, DigitKind.FOR_B)
    props = verify_digit_properties(D)
    return {
        "N": ctx.N,
        "A": ctx.A.to_list(),
        "B": ctx.B.to_list(),
        "C": ctx.C.to_list(),
        "q": ctx.q,
        "r": ctx.r,
        "orders": {
            "A_image": len(ctx.image_A),
            "B_image": len(ctx.image_B),
            "C_image": len(ctx.image_C),
            "quotient_by_A_image": ctx.N ** 2 // len(ctx.image_A),
            "quotient_by_B_image": ctx.N ** 2 // len(ctx.image_B),
        },
        "subgroups": {
            "A_image": _pts(ctx.image_A),
            "B_image": _pts(ctx.image_B),
            "C_image": _pts(ctx.image_C),
        },
        "digits": {
            "D": _pts(D),
            "D_star": _pts(digit_set(ctx, DigitKind.FOR_C)),
            "D0": _pts(digit_set(ctx, DigitKind.FOR_A)),
        },
        "properties": props.checks,
    }


def verify_payload(fam: WaveletFamily, tol: float) -> dict:
    if fam.q == 1:
        ok = verify_single_generator(fam.generators[0], tol)
        return {"isONWS": ok, "q": 1, "singleGenerator": True, "frequencyLocalized": False}
    sysm = verify_onws(fam, tol)
    gram = verify_onws_gram(fam, tol=tol)
    return {
        "isONWS": sysm.is_onws and gram.is_onws,
        "q": fam.q,
        "maxUnitarityDeviation": sysm.max_unitarity_deviation,
        "maxConditionDeviation": sysm.max_condition_deviation,
        "maxGramDeviation": gram.max_gram_deviation,
        "systemMatrix": sysm.to_dict(),
        "gram": gram.to_dict(),
    }


def cmd_digits(args) -> int:
    print(dumps(digits_payload(make_dilation(args.N, args.matrix))), end="")
    return EXIT_OK


def cmd_dft(args) -> int:
    f = signal_from_json(load(args.signal))
    out = signal_to_json(idft(f) if args.inverse else dft(f))
    if args.out:
        save(out, args.out)
    print(dumps(out), end="")
    return EXIT_OK


def cmd_verify(args) -> int:
    payload = verify_payload(family_from_json(load(args.system)), args.tol)
    print(dumps(payload), end="")
    return EXIT_OK if payload["isONWS"] else EXIT_FAIL


def cmd_construct(args) -> int:
    ctx = make_dilation(args.N, args.matrix)
    rng = np.random.default_rng(args.seed)
    if ctx.q == 1:
        phases = rng.uniform(0, 2 * np.pi, size=(ctx.N, ctx.N))
        fam = WaveletFamily(ctx, (construct_single_generator(ctx.N, phases),))
    else:
        fam = random_onws(ctx, rng)
    doc = family_to_json(fam)
    if args.out:
        save(doc, args.out)
        payload = verify_payload(fam, args.tol)
        payload["out"] = str(args.out)
        print(dumps(payload), end="")
    else:
        print(dumps(doc), end="")
    return EXIT_OK


def _uncertainty_entry(f, fam, consts, threshold) -> dict:
    rep = expand(f, fam, threshold=threshold)
    checks = check_uncertainty(rep, consts)
    return {**rep.counts(), "normSq": rep.norm_sq,
            "bounds": [c.to_dict() for c in checks],
            "passed": all(c.passed for c in checks)}


def cmd_expand(args) -> int:
    fam = family_from_json(load(args.system))
    f = signal_from_json(load(args.signal))
    rep = expand(f, fam, threshold=args.threshold)

    def cplx(a):
        return [[float(z.real), float(z.imag)] for z in np.ravel(a)]

    payload = {
        **rep.counts(),
        "normSq": rep.norm_sq,
        "threshold": rep.threshold,
        "t": cplx(rep.t),
        "s": cplx(rep.s),
        "w": cplx(rep.w),
    }
    print(dumps(payload), end="")
    return EXIT_OK


def cmd_uncertainty(args) -> int:
    fam = family_from_json(load(args.system))
    consts = localization_constants(fam)
    per_signal = []
    if args.signal:
        per_signal.append(_uncertainty_entry(signal_from_json(load(args.signal)), fam,
                                             consts, args.threshold))
    if args.sweep:
        _, sweep = bound_sweep(fam, args.sweep, args.seed, args.threshold)
        per_signal.extend(sweep)
    violations = sum(not s["passed"] for s in per_signal)
    payload = {**consts.to_dict(), "violations": violations, "perSignal": per_signal}
    print(dumps(payload), end="")
    return EXIT_OK if violations == 0 else EXIT_FAIL


def cmd_example(args) -> int:
    ctx = catalog.example_context(args.name)
    doc = {"name": args.name, **digits_payload(ctx)}
    if args.name != "2.8":
        fam = catalog.example_family(args.name)
        doc["generators"] = family_to_json(fam)["generators"]
        doc["spectra"] = [signal_to_json(s) for s in fam.spectra]
    if args.out:
        save(doc, args.out)
    print(dumps(doc), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="onws", description="Orthonormal wavelet systems on Z_N x Z_N."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("digits", help="subgroups and digit sets of a dilation")
    p.add_argument("--N", type=_positive_int, required=True)
    p.add_argument("--matrix", type=_matrix, required=True, help="row-major a,b,c,d")
    p.set_defaults(func=cmd_digits)

    p = sub.add_parser("dft", help="2-D DFT of a signal file")
    p.add_argument("--signal", required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_dft)

    p = sub.add_parser("verify", help="check that a family is an orthonormal wavelet system")
    p.add_argument("--system", required=True)
    p.add_argument("--tol", type=_nonneg_float, default=1e-9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="random wavelet system from seeded unitaries")
    p.add_argument("--N", type=_positive_int, required=True)
    p.add_argument("--matrix", type=_matrix, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=_nonneg_float, default=1e-9)
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("expand", help="coefficients of a signal in the three bases")
    p.add_argument("--system", required=True)
    p.add_argument("--signal", required=True)
    p.add_argument("--threshold", type=_nonneg_float, default=1e-9)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("uncertainty", help="localization constants and sparsity bounds")
    p.add_argument("--system", required=True)
    p.add_argument("--signal")
    p.add_argument("--threshold", type=_nonneg_float, default=1e-9)
    p.add_argument("--sweep", type=int, default=0, metavar="COUNT")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_uncertainty)

    p = sub.add_parser("example", help="emit a built-in worked example")
    p.add_argument("--name", choices=catalog.NAMES, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotVerified as exc:
        print(f"onws {args.command}: {exc}", file=sys.stderr)
        print(dumps({"error": "NotVerified", "message": str(exc)}), end="")
        return EXIT_FAIL
    except (LatticeError, SizeMismatch, ZeroSignal, WaveletError, ValueError,
            KeyError, OSError) as exc:
        print(f"onws {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        print(dumps({"error": type(exc).__name__, "message": str(exc)}), end="")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
