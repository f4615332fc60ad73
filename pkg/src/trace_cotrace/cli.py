"""Command-line surface: counting, verification, reference tables,
Kloosterman profiles and asymptotics.

Exit codes: 0 success, 1 value mismatch (verify/tables), 2 invalid
flags, 3 non-irreducible modulus, 4 enumeration guard exceeded.
Data goes to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from . import counting, oracle
from .errors import TooLargeError
from .ext_field import FieldCtx, is_irreducible
from .golden import GOLDEN, golden_cells
from .kloosterman import KloostermanProfile, check_weil
from .prime_field import is_prime

__all__ = ["OutputRecord", "main", "run"]


@dataclass(frozen=True)
class OutputRecord:
    """One computed table, in a form that serializes losslessly."""

    p: int
    m: int
    q: int
    modulus: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]
    t1s: tuple[int, ...]
    method: str

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, payload: str) -> OutputRecord:
        raw = json.loads(payload)
        return cls(
            p=raw["p"],
            m=raw["m"],
            q=raw["q"],
            modulus=tuple(raw["modulus"]),
            table=tuple(tuple(row) for row in raw["table"]),
            t1s=tuple(raw["t1s"]),
            method=raw["method"],
        )

    def to_csv(self) -> str:
        lines = ["p,m,i,j,T"]
        for i, row in enumerate(self.table):
            for j, value in enumerate(row):
                lines.append(f"{self.p},{self.m},{i},{j},{value}")
        return "\n".join(lines)

    def to_text(self) -> str:
        width = max(len(str(v)) for row in self.table for v in row)
        width = max(width, len(str(self.p - 1)))
        header = "T(i,j) " + " ".join(f"{j:>{width}}" for j in range(self.p))
        lines = [
            f"p={self.p} m={self.m} q={self.q} "
            f"modulus={','.join(str(c) for c in self.modulus)} method={self.method}",
            header,
        ]
        for i, row in enumerate(self.table):
            cells = " ".join(f"{v:>{width}}" for v in row)
            lines.append(f"{i:>6} {cells}")
        return "\n".join(lines)

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        return self.to_text()


def _record_from_table(table, method: str) -> OutputRecord:
    t1s = tuple(table.counts[1][s] for s in range(1, table.p)) if table.p > 1 else ()
    return OutputRecord(
        p=table.p,
        m=table.m,
        q=table.q,
        modulus=table.modulus,
        table=table.counts,
        t1s=t1s,
        method=method,
    )


def _prime_arg(raw: str) -> int:
    value = int(raw)
    if not is_prime(value):
        raise argparse.ArgumentTypeError(f"p must be prime, got {value}")
    return value


def _degree_arg(raw: str) -> int:
    value = int(raw)
    if value < 1:
        raise argparse.ArgumentTypeError(f"m must be at least 1, got {value}")
    return value


def _parse_modulus(raw: str, p: int, m: int) -> tuple[int, ...] | None:
    """Comma-separated ascending coefficients, e.g. '1,1,1' for x^2+x+1.

    Returns None (and prints a diagnostic) when the polynomial is not a
    monic degree-m irreducible over F_p; the caller exits with code 3.
    """
    try:
        coeffs = tuple(int(c) % p for c in raw.split(","))
    except ValueError:
        print(f"cannot parse modulus {raw!r}", file=sys.stderr)
        return None
    if len(coeffs) != m + 1 or coeffs[-1] != 1:
        print(f"modulus must be monic of degree {m}", file=sys.stderr)
        return None
    if not is_irreducible(coeffs, p):
        print(f"modulus {raw} is reducible over F_{p}", file=sys.stderr)
        return None
    return coeffs


def _cmd_count(args: argparse.Namespace) -> int:
    modulus = None
    if args.modulus is not None:
        modulus = _parse_modulus(args.modulus, args.p, args.m)
        if modulus is None:
            return 3
    table = counting.full_table(args.p, args.m, modulus)
    print(_record_from_table(table, "closed-form").render(args.format))
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        ctx = FieldCtx(args.p, args.m)
        oracle_table = oracle.tally(ctx)
    except TooLargeError as exc:
        print(str(exc), file=sys.stderr)
        return 4
    closed = counting.full_table(args.p, args.m, ctx.modulus)
    if closed.counts == oracle_table.counts:
        print(
            f"p={args.p} m={args.m}: closed form and enumeration agree "
            f"on all {args.p * args.p} cells"
        )
        return 0
    print(f"p={args.p} m={args.m}: MISMATCH", file=sys.stderr)
    for i in range(args.p):
        for j in range(args.p):
            a, b = closed.counts[i][j], oracle_table.counts[i][j]
            if a != b:
                print(f"  T[{i}][{j}]: closed-form {a} != oracle {b}", file=sys.stderr)
    return 1


def _cmd_tables(args: argparse.Namespace) -> int:
    failures = 0
    for p in sorted(GOLDEN):
        degrees = GOLDEN[p]["degrees"]
        computed = {m: counting.full_table(p, m) for m in degrees}
        print(f"characteristic {p} (m = {degrees[0]}..{degrees[-1]})")
        header = "      " + " ".join(f"{m:>6}" for m in degrees)
        print(header)
        for (i, j) in GOLDEN[p]["series"]:
            cells = " ".join(f"{computed[m].counts[i][j]:>6}" for m in degrees)
            print(f"  T{i}{j} {cells}")
        for m, i, j, expected in golden_cells(p):
            got = computed[m].counts[i][j]
            if got != expected:
                failures += 1
                print(
                    f"  MISMATCH p={p} m={m} T[{i}][{j}]: computed {got},"
                    f" reference {expected}",
                    file=sys.stderr,
                )
    total = sum(len(g["series"]) * len(g["degrees"]) for g in GOLDEN.values())
    if failures:
        print(f"{failures} of {total} cells disagree", file=sys.stderr)
        return 1
    print(f"all {total} reference cells reproduced")
    return 0


def _cmd_kloosterman(args: argparse.Namespace) -> int:
    profile = KloostermanProfile.compute(args.p, args.m)
    q = args.p**args.m
    print(f"p={args.p} m={args.m} q={q}  coefficients on basis 1, z, ..., z^{args.p - 2}")
    for u in range(1, args.p):
        prime_vec = [str(c) for c in profile.prime_sums[u - 1].coeffs]
        lift_vec = [str(c) for c in profile.lifted_sums[u - 1].coeffs]
        line = f"u={u}  K({u}) = [{', '.join(prime_vec)}]  K^({args.m})({u}) = [{', '.join(lift_vec)}]"
        if args.float:
            value = profile.lifted_sums[u - 1].embed_complex().real
            margin = 2.0 * (q**0.5) - abs(value)
            assert check_weil(profile.lifted_sums[u - 1], q)
            line += f"  float={value:.6f} weil_margin={margin:.6f}"
        print(line)
    return 0


def _cmd_asymptotics(args: argparse.Namespace) -> int:
    rows = counting.asymptotic_report(args.p, (1, args.m_max))
    print("p,m,i,j,count,ratio,deviation,bound")
    for row in rows:
        print(
            f"{args.p},{row.m},{row.i},{row.j},{row.count},"
            f"{row.ratio:.6f},{row.deviation:.6f},{row.bound:.6f}"
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trace-cotrace",
        description="Exact counts of finite field elements by trace and co-trace.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser("count", help="full T table via the closed-form pipeline")
    count.add_argument("--p", type=_prime_arg, required=True)
    count.add_argument("--m", type=_degree_arg, required=True)
    count.add_argument("--modulus", type=str, default=None)
    count.add_argument("--format", choices=("table", "json", "csv"), default="table")
    count.set_defaults(func=_cmd_count)

    verify = sub.add_parser("verify", help="closed form against brute-force enumeration")
    verify.add_argument("--p", type=_prime_arg, required=True)
    verify.add_argument("--m", type=_degree_arg, required=True)
    verify.set_defaults(func=_cmd_verify)

    tables = sub.add_parser("tables", help="regenerate the frozen reference tables")
    tables.set_defaults(func=_cmd_tables)

    kloosterman = sub.add_parser("kloosterman", help="exact Kloosterman profiles")
    kloosterman.add_argument("--p", type=_prime_arg, required=True)
    kloosterman.add_argument("--m", type=_degree_arg, required=True)
    kloosterman.add_argument("--float", action="store_true")
    kloosterman.set_defaults(func=_cmd_kloosterman)

    asymptotics = sub.add_parser("asymptotics", help="deviation report in CSV")
    asymptotics.add_argument("--p", type=_prime_arg, required=True)
    asymptotics.add_argument("--m-max", type=_degree_arg, required=True)
    asymptotics.set_defaults(func=_cmd_asymptotics)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
