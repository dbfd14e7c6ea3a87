"""Command-line interface.

Subcommands: tables, figure1, count, capacity, redundancy, encode,
decode, verify.  CSV goes to stdout unless --out is given; relative
--out paths are resolved against $DNACODES_OUTDIR when it is set.
Exit codes: 0 success, 1 data or validation failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import asymptotics, blockcodes, counting, oracle
from .constructions import make_codec
from .payload import decode_bytes, encode_bytes
from .words import at_weight, max_run, oligo_to_text, text_to_oligo

TABLE_IDS = (
    "capacity",
    "coefficient",
    "eta",
    "two-mode",
    "state-indep",
    "state-dep",
    "gamma",
)

# The unconstrained (m -> infinity) run-length distribution is geometric
# with ratio 1/2 in either plane, whose variance factor is exactly 1.
_GAMMA_LIMIT_ROW = ("inf", 1.0, 1.0)


class DataError(Exception):
    """Input data failed validation; maps to exit code 1."""


def _fmt(value: float, precision: int) -> str:
    return f"{value:.{precision}f}"


def _resolve_out(out: str) -> str:
    base = os.environ.get("DNACODES_OUTDIR")
    if base and not os.path.isabs(out):
        return os.path.join(base, out)
    return out


def _emit(lines: list[str], out: str | None) -> None:
    text = "\n".join(lines) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        with open(_resolve_out(out), "w", encoding="ascii") as fh:
            fh.write(text)


def _table_rows(table_id: str, precision: int) -> list[str]:
    p = precision
    if table_id == "capacity":
        lines = ["m,capacity_binary,capacity_quaternary"]
        for m in range(1, 7):
            c2 = asymptotics.capacity(2, m).capacity_bits
            c4 = asymptotics.capacity(4, m).capacity_bits
            lines.append(f"{m},{_fmt(c2, p)},{_fmt(c4, p)}")
        return lines
    if table_id == "coefficient":
        lines = ["m,coefficient_binary,coefficient_quaternary"]
        for m in range(1, 7):
            a2 = "" if m == 1 else _fmt(asymptotics.leading_coefficient(2, m), p)
            a4 = _fmt(asymptotics.leading_coefficient(4, m), p)
            lines.append(f"{m},{a2},{a4}")
        return lines
    if table_id == "eta":
        lines = ["m,eta"]
        for m in range(2, 8):
            lines.append(f"{m},{_fmt(asymptotics.efficiency_eta(m), 3)}")
        return lines
    if table_id == "two-mode":
        lines = ["n,m=2,m=3,m=4"]
        for n in range(5, 11):
            effs = [
                blockcodes.rate_two_mode(m, n) / asymptotics.capacity(4, m).capacity_bits
                for m in (2, 3, 4)
            ]
            lines.append(f"{n}," + ",".join(_fmt(e, 3) for e in effs))
        return lines
    if table_id in ("state-indep", "state-dep"):
        rate = (
            blockcodes.rate_state_independent
            if table_id == "state-indep"
            else blockcodes.rate_state_dependent
        )
        lines = ["n,m=1,m=2,m=3,m=4"]
        for n in range(5, 11):
            effs = [
                rate(m, n) / asymptotics.capacity(4, m).capacity_bits for m in (1, 2, 3, 4)
            ]
            lines.append(f"{n}," + ",".join(_fmt(e, 3) for e in effs))
        return lines
    if table_id == "gamma":
        lines = ["m,gamma_binary,gamma_quaternary"]
        for m in (1, 2, 3, 4, 5, 10):
            g2 = "" if m == 1 else _fmt(asymptotics.gamma_binary(m), p)
            lines.append(f"{m},{g2},{_fmt(asymptotics.gamma_quaternary(m), p)}")
        label, g2, g4 = _GAMMA_LIMIT_ROW
        lines.append(f"{label},{_fmt(g2, p)},{_fmt(g4, p)}")
        return lines
    raise ValueError(f"unknown table id {table_id!r}")


def cmd_tables(args) -> int:
    _emit(_table_rows(args.table, args.precision), args.out)
    return 0


def cmd_figure1(args) -> int:
    a_values = [float(s) for s in args.a_list.split(",") if s]
    lines = ["n,a,redundancy_bits"]
    for a in a_values:
        for n in range(args.n_min, args.n_max + 1):
            r = counting.balance_redundancy(n, a, args.boundary)
            lines.append(f"{n},{a},{_fmt(r, args.precision)}")
    _emit(lines, args.out)
    return 0


def cmd_count(args) -> int:
    if args.weight_profile:
        kind = "binary" if args.q == 2 else "quaternary"
        profile = counting.weight_profile(kind, args.m, args.n)
        lines = ["w,count"]
        lines.extend(f"{w},{c}" for w, c in enumerate(profile.counts))
        lines.append(f"total,{profile.total()}")
        _emit(lines, args.out)
        return 0
    count = (
        counting.rll_count_gf(args.q, args.m, args.n)
        if args.gf
        else counting.rll_count(args.q, args.m, args.n)
    )
    _emit([str(count)], args.out)
    return 0


def cmd_capacity(args) -> int:
    result = asymptotics.capacity(args.q, args.m)
    if args.full:
        _emit(
            [
                f"lambda,{result.lam!r}",
                f"capacity_bits,{_fmt(result.capacity_bits, args.precision)}",
                f"residual,{result.residual:.3e}",
            ],
            args.out,
        )
    else:
        _emit([_fmt(result.capacity_bits, args.precision)], args.out)
    return 0


def cmd_redundancy(args) -> int:
    if args.family == "balance":
        value = counting.balance_redundancy(args.n, args.a, args.boundary)
    elif args.family == "runlength":
        mode = "asymptotic" if args.asymptotic else "exact"
        value = asymptotics.rll_redundancy(args.q, args.m, args.n, mode)
    else:
        kind = "binary" if args.q == 2 else "quaternary"
        mode = "exact" if args.exact else "asymptotic"
        value = asymptotics.combined_redundancy(
            kind, args.m, args.a, args.n, mode, args.boundary
        )
    _emit([_fmt(value, args.precision)], args.out)
    return 0


def _build_codec(args):
    if args.construction == "construction1":
        if args.ell is None:
            raise ValueError("construction1 needs --ell")
        params = {"ell": args.ell, "balancer": args.balancer}
        if args.balancer == "weak-knuth":
            if args.p0 is None:
                raise ValueError("weak-knuth needs --p0")
            params["p0"] = args.p0
        return make_codec("construction1", **params)
    if args.m is None or args.n is None:
        raise ValueError(f"{args.construction} needs --m and --n")
    return make_codec(args.construction, m=args.m, n=args.n)


def cmd_encode(args) -> int:
    codec = _build_codec(args)
    with open(args.infile, "rb") as fh:
        data = fh.read()
    blocks = encode_bytes(codec, data)
    _emit([oligo_to_text(b) for b in blocks], args.out)
    return 0


def cmd_decode(args) -> int:
    codec = _build_codec(args)
    with open(args.infile, "r", encoding="ascii") as fh:
        raw_lines = fh.read().splitlines()
    blocks = []
    run_cap = getattr(codec, "m", None)
    weight_bound = getattr(codec, "weight_bound", None)
    for lineno, line in enumerate(raw_lines, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            word = text_to_oligo(line)
        except ValueError as exc:
            raise DataError(f"line {lineno}: {exc}") from exc
        if len(word) != codec.oligo_len:
            raise DataError(
                f"line {lineno}: expected {codec.oligo_len} symbols, got {len(word)}"
            )
        if run_cap is not None and max_run(word) > run_cap:
            raise DataError(f"line {lineno}: homopolymer run exceeds {run_cap}")
        if weight_bound is not None:
            gap = abs(2 * at_weight(word) - codec.oligo_len)
            if gap > 2 * weight_bound:
                raise DataError(f"line {lineno}: AT/GC unbalance exceeds the code bound")
        blocks.append(word)
    try:
        data = decode_bytes(codec, blocks)
    except ValueError as exc:
        raise DataError(str(exc)) from exc
    if args.out is None:
        sys.stdout.buffer.write(data)
    else:
        with open(_resolve_out(args.out), "wb") as fh:
            fh.write(data)
    return 0


def cmd_verify(args) -> int:
    lines = []
    failures = 0
    for q in (2, 4):
        for m in range(1, args.m_max + 1):
            for n in range(1, args.n_max + 1):
                exact = counting.rll_count(q, m, n)
                gf = counting.rll_count_gf(q, m, n)
                brute = oracle.brute_rll_count(q, m, n)
                ok = exact == gf == brute
                failures += not ok
                if not ok or args.verbose:
                    lines.append(
                        f"count q={q} m={m} n={n}: recurrence={exact} gf={gf} brute={brute}"
                        f" {'ok' if ok else 'MISMATCH'}"
                    )
                kind = "binary" if q == 2 else "quaternary"
                profile = counting.weight_profile(kind, m, n)
                for w in range(n + 1):
                    bw = oracle.brute_weight_count(q, m, w, n)
                    if profile.counts[w] != bw:
                        failures += 1
                        lines.append(
                            f"weight q={q} m={m} n={n} w={w}: "
                            f"formula={profile.counts[w]} brute={bw} MISMATCH"
                        )
    lines.append(f"count grid q in (2,4), m <= {args.m_max}, n <= {args.n_max}: "
                 f"{'all equal' if failures == 0 else f'{failures} mismatches'}")
    for codec_id, params in (
        ("two_mode", {"m": 2, "n": 6}),
        ("state_independent", {"m": 3, "n": 5}),
        ("state_dependent", {"m": 3, "n": 5}),
        ("weak_knuth", {"n": 10, "p0": 2}),
    ):
        report = oracle.validate_codec(codec_id, stream_blocks=args.stream_blocks, **params)
        lines.append(report.summary())
        failures += not report.ok
        lines.extend(f"  {f}" for f in report.failures[:5])
    lines.append("verify: " + ("PASS" if failures == 0 else f"FAIL ({failures})"))
    _emit(lines, args.out)
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dnacodes",
        description="Constrained-code toolkit for DNA data storage.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--precision", type=int, default=4, help="decimals for floats")

    p = sub.add_parser("tables", help="reference tables as CSV")
    p.add_argument("table", choices=TABLE_IDS)
    add_common(p)
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("figure1", help="balance redundancy curve as CSV")
    p.add_argument("--a-list", default="0.05,0.10,0.15")
    p.add_argument("--n-min", type=int, default=10)
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--boundary", choices=counting.BOUNDARY_MODES, default="strict")
    add_common(p)
    p.set_defaults(func=cmd_figure1)

    p = sub.add_parser("count", help="exact constrained sequence counts")
    p.add_argument("--q", type=int, required=True, choices=(2, 4))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gf", action="store_true", help="extract from the generating function")
    p.add_argument("--weight-profile", action="store_true", help="per-weight counts")
    add_common(p)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("capacity", help="constraint capacity in bits per symbol")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--full", action="store_true", help="also print the root and residual")
    add_common(p)
    p.set_defaults(func=cmd_capacity)

    p = sub.add_parser("redundancy", help="redundancy figures in bits")
    p.add_argument("--family", choices=("balance", "runlength", "combined"), required=True)
    p.add_argument("--q", type=int, default=4, choices=(2, 4))
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float)
    p.add_argument("--boundary", choices=counting.BOUNDARY_MODES, default="strict")
    p.add_argument("--asymptotic", action="store_true")
    p.add_argument("--exact", action="store_true")
    add_common(p)
    p.set_defaults(func=cmd_redundancy)

    for name, func in (("encode", cmd_encode), ("decode", cmd_decode)):
        p = sub.add_parser(name, help=f"{name} a file")
        p.add_argument(
            "--construction",
            required=True,
            choices=("construction1", "construction2", "state-independent", "state-dependent"),
        )
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)
        p.add_argument("--ell", type=int, help="data bits per block for construction1")
        p.add_argument("--balancer", choices=("knuth", "weak-knuth"), default="knuth")
        p.add_argument("--p0", type=int, help="index bits for the weak balancer")
        p.add_argument("--in", dest="infile", required=True)
        p.add_argument("--out")
        p.set_defaults(func=func)

    p = sub.add_parser("verify", help="compare formulas against brute force")
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--stream-blocks", type=int, default=1000)
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DataError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
