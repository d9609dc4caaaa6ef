"""Command-line interface.

Subcommands: compute, compare, classify, generate, bounds, galois, units,
search.  All input and output is UTF-8 JSON with exact rational values; pass
--approx where available to add floating-point renderings for human reading.

Exit codes: compare uses 0 for translate pairs, 1 when the signals are
distinguished at or below the requested order, and 3 when they share all
requested orders without being translates.  classify and galois exit 0 on a
positive verdict and 1 on a negative one.  Usage, file, and capacity errors
exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from abelcorr import __version__, _kernels
from abelcorr.autocorr import autocorr_direct, equal_through_order
from abelcorr.bounds import bounds_report, units_sum_decompose
from abelcorr.cyclotomic import Cyclotomic
from abelcorr.homometry import (
    brute_force_search,
    classify_z6_pair,
    generate_z6_pairs,
    lift_to_z30,
)
from abelcorr.io import (
    dumps,
    parse_group_spec,
    parse_rational,
    parse_support_spec,
    read_signal,
    signal_from_json,
    signal_to_json,
    spectrum_from_json,
    tensor_to_json,
)
from abelcorr.spectral import fourier, inverse_fourier, rationality_check


def _approx(value) -> float | list[float]:
    if isinstance(value, Cyclotomic):
        z = value.to_complex()
        return [z.real, z.imag]
    return float(value)


def _load_signal_or_spectrum(path: str):
    """Read a file as a spectrum when its values form a map, else as a signal."""
    with open(path, encoding="utf-8") as handle:
        obj = json.load(handle)
    if isinstance(obj, dict) and isinstance(obj.get("values"), dict):
        return None, spectrum_from_json(obj)
    f = signal_from_json(obj)
    return f, fourier(f)


# -- subcommands -----------------------------------------------------------------


def cmd_compute(args) -> int:
    f = read_signal(args.file)
    tensor = autocorr_direct(f, args.order)
    zero = tuple(tuple(0 for _ in f.group.factors) for _ in range(args.order - 1))
    out = {
        "group": list(f.group.factors),
        "order": args.order,
        "backend": _kernels.BACKEND,
        "zero_shift_value": str(tensor.value(zero)),
        "entry_count": len(tensor.entries),
    }
    if args.order <= 3:
        out["entries"] = tensor_to_json(tensor)["entries"]
        if args.approx:
            for entry in out["entries"]:
                entry["value_approx"] = float(Fraction(entry["value"]))
    if args.approx:
        out["zero_shift_value_approx"] = float(Fraction(out["zero_shift_value"]))
    print(dumps(out))
    return 0


def cmd_compare(args) -> int:
    f = read_signal(args.f)
    g = read_signal(args.g)
    report = equal_through_order(f, g, args.max_order)
    print(dumps(report.to_json()))
    if report.translate_offset is not None:
        return 0
    if report.first_difference_order is not None:
        return 1
    return 3


def cmd_classify(args) -> int:
    f = read_signal(args.f)
    g = read_signal(args.g)
    verdict = classify_z6_pair(f, g)
    out = verdict.to_json()
    if args.approx:
        out["witnesses"]["f_primary_approx"] = _approx(verdict.f_primary)
        out["witnesses"]["g_primary_approx"] = _approx(verdict.g_primary)
    print(dumps(out))
    return 0 if verdict.is_homometric_pair else 1


def cmd_generate(args) -> int:
    mean = parse_rational(args.e0)
    pairs = generate_z6_pairs(args.r, mean=0 if args.modulus == 30 else mean)
    if args.modulus == 30:
        pairs = [
            lift_to_z30(p.f_primary, p.g_primary, mean=mean) for p in pairs
        ]
    out = []
    for p in pairs:
        item = p.to_json()
        if args.approx:
            item["f_primary_approx"] = _approx(p.f_primary)
            item["g_primary_approx"] = _approx(p.g_primary)
        out.append(item)
    print(dumps(out))
    return 0


def cmd_bounds(args) -> int:
    group = parse_group_spec(args.group)
    support = parse_support_spec(args.support, group)
    print(dumps(bounds_report(group, support).to_json()))
    return 0


def cmd_galois(args) -> int:
    _, F = _load_signal_or_spectrum(args.file)
    cert = rationality_check(F)
    out = {
        "passed": cert.passed,
        "detail": cert.detail,
        "violation": None,
    }
    if cert.violation is not None:
        chi, unit = cert.violation
        out["violation"] = {"character": list(chi), "unit": unit}
        inverted = inverse_fourier(F)
        if inverted.witness is not None:
            element, value = inverted.witness
            witness = {"element": list(element), "value": value.to_json()}
            if args.approx:
                witness["value_approx"] = _approx(value)
            out["non_rational_witness"] = witness
    print(dumps(out))
    return 0 if cert.passed else 1


def cmd_units(args) -> int:
    print(dumps(units_sum_decompose(args.modulus, args.target).to_json()))
    return 0


def cmd_search(args) -> int:
    group = parse_group_spec(args.group)
    pairs = brute_force_search(group, args.bound, args.max_order, threads=args.threads)
    out = {
        "group": list(group.factors),
        "bound": args.bound,
        "max_order": args.max_order,
        "pair_count": len(pairs),
        "pairs": [[signal_to_json(a), signal_to_json(b)] for a, b in pairs],
    }
    print(dumps(out))
    return 0


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelcorr",
        description="Exact higher-order autocorrelations on finite abelian groups.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--seed",
        type=int,
        default=None,
        help="seed for randomized data generation (reserved; current commands are deterministic)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="autocorrelation tensor of one signal")
    p.add_argument("file", help="signal JSON file")
    p.add_argument("--order", type=int, required=True, help="autocorrelation order n >= 1")
    p.add_argument("--approx", action="store_true", help="add decimal renderings")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("compare", help="decide translation equivalence through an order")
    p.add_argument("f", help="first signal JSON file")
    p.add_argument("g", help="second signal JSON file")
    p.add_argument("--max-order", type=int, default=6, help="highest order to compare")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("classify", help="spectral test for maximal pairs on Z_6")
    p.add_argument("f", help="first signal JSON file")
    p.add_argument("g", help="second signal JSON file")
    p.add_argument("--approx", action="store_true", help="add decimal renderings")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("generate", help="construct maximal homometric pairs")
    p.add_argument("--r", type=int, required=True, help="norm parameter r > 1")
    p.add_argument(
        "--modulus", type=int, choices=(6, 30), default=6, help="target group Z_6 or Z_30"
    )
    p.add_argument("--e0", default="0", help="rational mean value for both signals")
    p.add_argument("--approx", action="store_true", help="add decimal renderings")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("bounds", help="completeness-order bounds for a support set")
    p.add_argument("--group", required=True, help="comma-separated moduli, e.g. 2,6")
    p.add_argument(
        "--support",
        required=True,
        help='semicolon-separated characters, e.g. "1,1;1,5" (bare "1,5" for rank 1)',
    )
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("galois", help="rationality certificate for a signal or spectrum")
    p.add_argument("file", help="signal or spectrum JSON file")
    p.add_argument("--approx", action="store_true", help="add decimal renderings")
    p.set_defaults(func=cmd_galois)

    p = sub.add_parser("units", help="write a residue as a sum of at most three units")
    p.add_argument("--modulus", type=int, required=True, help="modulus N >= 2")
    p.add_argument("--target", type=int, required=True, help="residue to decompose")
    p.set_defaults(func=cmd_units)

    p = sub.add_parser("search", help="exhaustive homometric pair search")
    p.add_argument("--group", required=True, help="comma-separated moduli")
    p.add_argument("--bound", type=int, required=True, help="value range [-bound, bound]")
    p.add_argument("--max-order", type=int, required=True, help="orders compared: 1..max")
    p.add_argument("--threads", type=int, default=1, help="enumeration worker count")
    p.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
