"""Command line: certify, certify-zero, scan, oracle, trace.

Exit codes: 0 certified / completed, 1 not certified (or oracle overlap),
2 inconclusive, 3 input error.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .certify import Verdict, certify_theorem1, t_n_threshold, trace_w, word_class, word_matrix_trace
from .hermitian import classify_real_trace
from .oracle import check_cygan_disjointness, check_disk_disjointness
from .scan import ScanConfig, run_scan
from .siegel import ZeroParams, certify_theorem3, t_n_zero, trace_margin_zero, trace_w_zero
from .ultra import TriangleParams

EXIT_OK, EXIT_NOT_CERTIFIED, EXIT_INCONCLUSIVE, EXIT_INPUT = 0, 1, 2, 3

_VERDICT_EXIT = {
    Verdict.CERTIFIED: EXIT_OK,
    Verdict.NOT_CERTIFIED: EXIT_NOT_CERTIFIED,
    Verdict.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _angle(args) -> float:
    if (args.alpha is None) == (args.cos_alpha is None):
        raise InputError("give exactly one of --alpha or --cos-alpha")
    if args.alpha is not None:
        return args.alpha
    if not -1 <= args.cos_alpha <= 1:
        raise InputError("--cos-alpha must lie in [-1, 1]")
    return math.acos(args.cos_alpha)


def _ultra_params(args) -> TriangleParams:
    rs = (args.r1, args.r2, args.r3)
    ms = (args.m1, args.m2, args.m3)
    if all(v is not None for v in rs) and all(v is None for v in ms):
        return TriangleParams(*rs, _angle(args))
    if all(v is not None for v in ms) and all(v is None for v in rs):
        return TriangleParams.from_distances(*ms, _angle(args))
    raise InputError("give either --r1 --r2 --r3 or --m1 --m2 --m3")


def _add_angle(p):
    p.add_argument("--alpha", type=float, help="angular invariant in radians, folded into [0, pi]")
    p.add_argument("--cos-alpha", type=float, help="cos of the angular invariant")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ultratri", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    c = sub.add_parser("certify", help="certify an [m1,m2,m3] group with m3 > 0")
    for k in ("r1", "r2", "r3", "m1", "m2", "m3"):
        c.add_argument(f"--{k}", type=float)
    _add_angle(c)
    c.add_argument("--all-n", type=int, metavar="N_MAX",
                   help="check w(n) for every n <= N_MAX instead of the two-index algorithm")

    z = sub.add_parser("certify-zero", help="certify an [m1,m2,0] group")
    z.add_argument("--r1", type=float, required=True)
    z.add_argument("--r2", type=float, required=True)
    _add_angle(z)

    s = sub.add_parser("scan", help="grid scan driven by a key = value config file")
    s.add_argument("--config", required=True)

    o = sub.add_parser("oracle", help="brute-force disk / Cygan sphere disjointness report (CSV)")
    for k in ("r1", "r2", "r3"):
        o.add_argument(f"--{k}", type=float)
    o.add_argument("--m1", type=float)
    o.add_argument("--m2", type=float)
    o.add_argument("--m3", type=float)
    _add_angle(o)
    o.add_argument("--max-n", type=int, default=10)
    o.add_argument("--csv", help="write the report here instead of stdout")

    t = sub.add_parser("trace", help="trace, threshold t_n and class of w(n)")
    for k in ("r1", "r2", "r3"):
        t.add_argument(f"--{k}", type=float)
    t.add_argument("--m1", type=float)
    t.add_argument("--m2", type=float)
    t.add_argument("--m3", type=float)
    _add_angle(t)
    t.add_argument("--n", type=int, required=True)
    return ap


def _is_zero_case(args) -> bool:
    return args.r3 is None and args.m3 is None or args.r3 == 1 or args.m3 == 0


def _cmd_certify(args) -> int:
    cert = certify_theorem1(_ultra_params(args), all_n=args.all_n)
    print(json.dumps(cert.to_record(), indent=2))
    return _VERDICT_EXIT[cert.verdict]


def _cmd_certify_zero(args) -> int:
    cert = certify_theorem3(ZeroParams(args.r1, args.r2, _angle(args)))
    print(json.dumps(cert.to_record(), indent=2))
    return _VERDICT_EXIT[cert.verdict]


def _cmd_scan(args) -> int:
    if not Path(args.config).is_file():
        raise InputError(f"config file not found: {args.config}")
    config = ScanConfig.from_file(args.config)
    table = run_scan(config)
    if not config.csv_path:
        sys.stdout.write(table.to_csv())
    print(f"scan complete: {len(table)} cells", file=sys.stderr)
    return EXIT_OK


def _zero_params(args) -> ZeroParams:
    if args.m1 is not None or args.m2 is not None:
        if args.r1 is not None or args.r2 is not None:
            raise InputError("give either --r1 --r2 or --m1 --m2")
        return ZeroParams(math.cosh(args.m1 / 2), math.cosh(args.m2 / 2), _angle(args))
    return ZeroParams(args.r1, args.r2, _angle(args))


def _cmd_oracle(args) -> int:
    if args.max_n < 1:
        raise InputError("--max-n must be positive")
    if _is_zero_case(args):
        report = check_cygan_disjointness(_zero_params(args), args.max_n)
    else:
        report = check_disk_disjointness(_ultra_params(args), args.max_n)
    text = report.to_csv()
    if args.csv:
        Path(args.csv).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.clean else EXIT_NOT_CERTIFIED


def _cmd_trace(args) -> int:
    n = args.n
    if n < 1:
        raise InputError("--n must be positive")
    if _is_zero_case(args):
        z = _zero_params(args)
        tr = trace_w_zero(z.r1, z.r2, z.alpha, n)
        cls = classify_real_trace(3.0 + trace_margin_zero(z.r1, z.r2, z.alpha, n))
        rec = {"n": n, "trace": tr, "t_n": t_n_zero(z.r1, z.r2, n), "class": cls.kind.value,
               "non_elliptic": cls.non_elliptic}
    else:
        p = _ultra_params(args)
        cls = word_class(p, n)
        rec = {"n": n, "trace": trace_w(p, n), "matrix_trace": word_matrix_trace(p, n).real,
               "t_n": t_n_threshold(p.r1, p.r2, p.r3, n), "class": cls.kind.value,
               "non_elliptic": cls.non_elliptic}
    print(json.dumps(rec, indent=2))
    return EXIT_OK


_COMMANDS = {
    "certify": _cmd_certify,
    "certify-zero": _cmd_certify_zero,
    "scan": _cmd_scan,
    "oracle": _cmd_oracle,
    "trace": _cmd_trace,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.cmd](args)
    except (InputError, ValueError) as exc:
        print(f"ultratri {args.cmd}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
