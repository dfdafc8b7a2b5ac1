"""Command line interface.

Exit codes: 0 success, 1 usage/parse error, 2 verification failure,
3 budget or range error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import formats, minifloat, oracle, posit, takum
from .core import BitString, BudgetError, CapacityError, DomainError, FormatError
from .formats import MinifloatSpec, PositFormat, TakumFormat

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2
EXIT_BUDGET = 3

_E4M3_PUBLISHED = 32  # widely circulated value; enumeration gives 16 (3 fraction bits, not 4)

_FOOTNOTE = (
    "published tables commonly list 2^5 = 32 for e4m3, which presumes 4 fraction "
    "bits; E4M3 has 3.  Exhaustive enumeration of all 256 bit patterns gives 16."
)


@dataclass(frozen=True, slots=True)
class TableRow:
    """One line of the summary table."""

    name: str
    value: int
    ratio: float
    source: str  # "closed_form", "oracle", or "reference"
    footnote: bool = False


def _signed_count(width: int) -> int:
    return (1 << (width - 1)) - 1


def build_table() -> list[TableRow]:
    """Largest consecutive integers for the standard 8..128-bit formats.

    Every row is computed from the closed forms except the OFP8 rows, which
    come from full enumeration, and the e4m3 reference row, which repeats the
    widely published (and contradicted) value so the conflict stays visible.
    """
    e4m3 = oracle.largest_consecutive(minifloat.PRESETS["e4m3"]).value
    e5m2 = oracle.largest_consecutive(minifloat.PRESETS["e5m2"]).value
    rows = [
        TableRow("e4m3", _E4M3_PUBLISHED, _E4M3_PUBLISHED / _signed_count(8), "reference", True),
        TableRow("e4m3 (computed)", e4m3, e4m3 / _signed_count(8), "oracle", True),
        TableRow("e5m2", e5m2, e5m2 / _signed_count(8), "oracle"),
    ]

    def closed_form(name: str, fmt: formats.FormatSpec, n: int | None = None) -> TableRow:
        return TableRow(
            name, formats.largest_consecutive(fmt, n), formats.signed_integer_ratio(fmt, n),
            "closed_form",
        )

    for n in (8, 16, 32, 64, 128):
        if n == 16:
            rows.append(closed_form("float16", minifloat.PRESETS["float16"]))
            rows.append(closed_form("bfloat16", minifloat.PRESETS["bfloat16"]))
        elif n >= 32:
            rows.append(closed_form(f"float{n}", minifloat.PRESETS[f"float{n}"]))
        rows.append(closed_form(f"posit{n}", PositFormat(n)))
        rows.append(closed_form(f"takum{n}", TakumFormat(n)))
    return rows


def render_magnitude(value: int, exact: bool = False) -> str:
    """Render counts like 2^11 = 2048 or 2^24 (~ 1.7e+07)."""
    power = f"2^{value.bit_length() - 1}" if value > 0 and value & (value - 1) == 0 else None
    if exact or value < 10**5:
        return f"{power} = {value}" if power else str(value)
    try:
        approx = format(value, ".1e")
    except OverflowError:
        digits = str(value)
        approx = f"{digits[0]}.{digits[1]}e+{len(digits) - 1}"
    return f"{power} (~ {approx})" if power else f"~ {approx}"


def _render_table(rows: list[TableRow], exact: bool) -> str:
    header = ("type", "largest consecutive", "of signed integers")
    body = []
    for row in rows:
        marker = " *" if row.footnote else ""
        body.append(
            (
                row.name + marker,
                render_magnitude(row.value, exact),
                f"{row.ratio * 100:.2g}%",
            )
        )
    widths = [max(len(header[i]), *(len(line[i]) for line in body)) for i in range(3)]
    lines = ["  ".join(header[i].ljust(widths[i]) for i in range(3)).rstrip()]
    lines.append("  ".join("-" * widths[i] for i in range(3)))
    for line in body:
        lines.append("  ".join(line[i].ljust(widths[i]) for i in range(3)).rstrip())
    lines.append("")
    lines.append(f"* {_FOOTNOTE}")
    return "\n".join(lines) + "\n"


def _write(text: str, out: str | None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as handle:
            handle.write(text)


def _family_format(args) -> PositFormat | TakumFormat:
    fmt = formats.parse_format(args.format)
    if isinstance(fmt, MinifloatSpec):
        raise FormatError(f"{args.format}: this command supports posit/takum only")
    return fmt


def cmd_decode(args) -> int:
    fmt = formats.parse_format(args.format)
    value = formats.decode(fmt, BitString(args.bits))
    print(value)
    return EXIT_OK


def cmd_encode_int(args) -> int:
    fmt = _family_format(args)
    max_bits = args.max_n if args.max_n is not None else (fmt.n or posit.DEFAULT_MAX_BITS)
    encode = posit.encode_integer if isinstance(fmt, PositFormat) else takum.encode_integer
    print(encode(args.value, max_bits))
    return EXIT_OK


def cmd_min_bits(args) -> int:
    fmt = _family_format(args)
    length = posit.min_length if isinstance(fmt, PositFormat) else takum.min_length
    print(length(args.value))
    return EXIT_OK


def cmd_max_consecutive(args) -> int:
    fmt = formats.parse_format(args.format)
    value = formats.largest_consecutive(fmt, args.n)
    print(render_magnitude(value, args.exact))
    return EXIT_OK


def cmd_table(args) -> int:
    _write(_render_table(build_table(), args.exact), args.out)
    return EXIT_OK


def figure_rows(n_min: int, n_max: int) -> list[tuple[int, int, int]]:
    """(n, posit exponent, takum exponent) of the largest consecutive integer."""
    if not 5 <= n_min <= n_max <= 1024:
        raise DomainError(f"need 5 <= n_min <= n_max <= 1024, got {n_min}..{n_max}")
    return [
        (n, 4 * (n - 3) // 5, takum.consecutive_exponent(n)) for n in range(n_min, n_max + 1)
    ]


def cmd_figure(args) -> int:
    lines = ["n,posit_exponent,takum_exponent"]
    lines += [f"{n},{p},{t}" for n, p, t in figure_rows(args.n_min, args.n_max)]
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def profile_rows(fmt: formats.FormatSpec) -> list[tuple[int, int]]:
    """(exponent, non-fraction bits) over the format's exponent domain."""
    if isinstance(fmt, PositFormat):
        if fmt.n is None:
            raise FormatError("posit precision profile needs a width, e.g. posit32")
        return [(e, posit.non_fraction_bits(e)) for e in posit.exponent_range(fmt.n)]
    if isinstance(fmt, TakumFormat):
        return [(e, takum.non_fraction_bits(e)) for e in takum.exponent_range(fmt.n or 12)]
    lo, hi = minifloat.exponent_domain(fmt)
    return [(e, minifloat.non_fraction_bits(fmt, e)) for e in range(lo, hi + 1)]


def cmd_precision_profile(args) -> int:
    fmt = formats.parse_format(args.format)
    lines = ["exponent,non_fraction_bits"]
    lines += [f"{e},{b}" for e, b in profile_rows(fmt)]
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = oracle.verify_all(args.max_n, args.max_m)
    failures = 0
    for result in results:
        status = "NOTE" if result.note else ("PASS" if result.passed else "FAIL")
        failures += not result.passed
        print(f"{status}  {result.name}: {result.detail}")
    checks = sum(1 for r in results if not r.note)
    if failures:
        print(f"{failures} of {checks} checks failed")
        return EXIT_VERIFICATION
    print(f"all {checks} checks passed")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="intrep",
        description="Exact integer representability in posit, takum, and minifloat formats.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("decode", cmd_decode, "decode a bit string to its exact value")
    p.add_argument("--format", required=True, help="posit[N], takum[N], or a minifloat preset")
    p.add_argument("--bits", required=True, help="bit string, MSB first, optional 0b prefix")

    p = add("encode-int", cmd_encode_int, "shortest bit string for an integer")
    p.add_argument("--format", required=True, help="posit[N] or takum[N]")
    p.add_argument("--value", required=True, type=int, help="integer to encode")
    p.add_argument("--max-n", type=int, default=None, help="bit budget (default: width or 256)")

    p = add("min-bits", cmd_min_bits, "minimal representation length of an integer")
    p.add_argument("--format", required=True, help="posit or takum")
    p.add_argument("--value", required=True, type=int, help="nonzero integer")

    p = add("max-consecutive", cmd_max_consecutive, "largest consecutive representable integer")
    p.add_argument("--format", required=True, help="posit[N], takum[N], or a minifloat preset")
    p.add_argument("--n", type=int, default=None, help="width for bare posit/takum")
    p.add_argument("--exact", action="store_true", help="print the exact decimal value")

    p = add("table", cmd_table, "summary table across the standard formats")
    p.add_argument("--exact", action="store_true", help="print exact decimal values")
    p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = add("figure", cmd_figure, "CSV of consecutive-integer exponents vs width")
    p.add_argument("--n-min", type=int, default=5, help="first width (>= 5)")
    p.add_argument("--n-max", type=int, default=128, help="last width (<= 1024)")
    p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = add("precision-profile", cmd_precision_profile, "CSV of non-fraction bits per exponent")
    p.add_argument("--format", required=True, help="positN, takum[N], or a minifloat preset")
    p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = add("verify", cmd_verify, "run every formula-vs-oracle suite")
    p.add_argument("--max-n", type=int, default=16, help="largest enumerated width (<= 24)")
    p.add_argument("--max-m", type=int, default=4096, help="largest integer for length checks")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (DomainError, CapacityError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
