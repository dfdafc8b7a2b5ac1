"""Exhaustive brute-force verification of the closed-form results.

Everything here works by decoding complete pattern spaces — no shortcuts
shared with the formulas under test — so agreement between the two routes is
meaningful evidence.  Enumeration is capped at 24-bit widths.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import formats, minifloat, posit, takum
from .core import BitString, BudgetError, FormatError
from .formats import FormatSpec, PositFormat, TakumFormat

MAX_ENUM_BITS = 24


def _check_budget(n: int) -> None:
    if n < 1:
        raise FormatError(f"width must be positive, got {n}")
    if n > MAX_ENUM_BITS:
        raise BudgetError(f"enumeration of {n}-bit patterns exceeds the {MAX_ENUM_BITS}-bit budget")


@dataclass(frozen=True, slots=True)
class RepresentableSet:
    """All integers within the window that some n-bit pattern decodes to."""

    format: FormatSpec
    n: int
    window: int
    integers: tuple[int, ...]

    def __contains__(self, m: int) -> bool:
        return m in set(self.integers)


@dataclass(frozen=True, slots=True)
class ConsecutiveReport:
    """Largest k with every integer in [-k, k] representable at width n."""

    format: FormatSpec
    n: int
    value: int
    exponent: int | None  # log2(value) when value is a power of two
    source: str  # "closed_form" or "oracle"
    agreement: bool | None  # oracle vs closed form; None when no closed form applies


def _scan_chunk(fmt: FormatSpec, n: int, lo: int, hi: int, window: int) -> set[int]:
    found = set()
    for pattern in range(lo, hi):
        value = formats.decode(fmt, BitString.from_uint(pattern, n))
        if value.is_integer():
            m = value.as_integer()
            if -window <= m <= window:
                found.add(m)
    return found


def _integers_at_width(fmt: FormatSpec, n: int, window: int, workers: int | None) -> set[int]:
    total = 1 << n
    if not workers or workers <= 1 or total < (1 << 16):
        return _scan_chunk(fmt, n, 0, total, window)
    step = -(-total // workers)
    bounds = [(lo, min(lo + step, total)) for lo in range(0, total, step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_scan_chunk, *zip(*((fmt, n, lo, hi, window) for lo, hi in bounds)))
        return set().union(*parts)


def representable_set(
    fmt: FormatSpec,
    n: int | None = None,
    window: int | None = None,
    workers: int | None = None,
) -> RepresentableSet:
    """Exact set of representable integers in [-window, window] at width n."""
    if window is None or window < 1:
        raise FormatError(f"window must be a positive integer, got {window}")
    width = formats.resolve_width(fmt, n)
    _check_budget(width)
    found = _integers_at_width(fmt, width, window, workers)
    return RepresentableSet(fmt, width, window, tuple(sorted(found)))


def largest_consecutive(
    fmt: FormatSpec, n: int | None = None, workers: int | None = None
) -> ConsecutiveReport:
    """Largest consecutive integer by full enumeration, checked against the closed form."""
    width = formats.resolve_width(fmt, n)
    _check_budget(width)
    # k is bounded by the pattern count, so a window of 2^width loses nothing.
    found = _integers_at_width(fmt, width, 1 << width, workers)
    k = 0
    while k + 1 in found:
        k += 1
    try:
        closed = formats.largest_consecutive(fmt, width)
    except (FormatError, ValueError):
        closed = None
    exponent = k.bit_length() - 1 if k > 0 and k & (k - 1) == 0 else None
    agreement = None if closed is None else (closed == k)
    return ConsecutiveReport(fmt, width, k, exponent, "oracle", agreement)


def _variable_length_decoder(fmt: FormatSpec):
    if isinstance(fmt, PositFormat):
        return posit.decode
    if isinstance(fmt, TakumFormat):
        return takum.decode
    raise FormatError(f"{formats.format_name(fmt)} has no variable-length encoding")


def min_length_table(
    fmt: FormatSpec, targets, max_len: int = MAX_ENUM_BITS
) -> dict[int, int | None]:
    """Minimal representation lengths for many integers in one sweep.

    Scans widths in ascending order; at width L only patterns ending in 1 are
    new (everything else is a shorter pattern zero-extended).  Entries left
    None were not representable within max_len bits.
    """
    _check_budget(max_len)
    decode = _variable_length_decoder(fmt)
    remaining = {int(m) for m in targets}
    if 0 in remaining or not all(isinstance(m, int) for m in remaining):
        raise FormatError("targets must be nonzero integers")
    lengths: dict[int, int | None] = {m: None for m in remaining}
    for width in range(2, max_len + 1):
        if not remaining:
            break
        for odd in range(1, 1 << width, 2):
            value = decode(BitString.from_uint(odd, width))
            if value.is_finite and value.is_integer():
                m = value.as_integer()
                if m in remaining:
                    lengths[m] = width
                    remaining.discard(m)
    return lengths


def min_length(fmt: FormatSpec, m: int, max_len: int = MAX_ENUM_BITS) -> int | None:
    """Minimal bits representing m exactly, or None if max_len does not suffice."""
    if m == 0:
        return 1
    return min_length_table(fmt, [m], max_len)[m]


@dataclass(frozen=True, slots=True)
class CheckResult:
    """Outcome of one formula-vs-oracle suite."""

    name: str
    passed: bool
    detail: str
    note: bool = False  # informational line, never counted as a failure


def check_posit_consecutive(max_n: int = 16) -> CheckResult:
    name = f"posit largest-consecutive formula vs oracle, n=5..{max_n}"
    for n in range(5, max_n + 1):
        report = largest_consecutive(PositFormat(), n)
        expected = posit.largest_consecutive(n)
        if report.value != expected:
            return CheckResult(name, False, f"n={n}: formula {expected}, oracle {report.value}")
    return CheckResult(name, True, "exact agreement")


def check_takum_consecutive(max_n: int = 16) -> CheckResult:
    name = f"takum largest-consecutive formula vs oracle, n=5..{max_n}"
    for n in range(5, max_n + 1):
        report = largest_consecutive(TakumFormat(), n)
        expected = takum.largest_consecutive(n)
        if report.value != expected:
            return CheckResult(name, False, f"n={n}: formula {expected}, oracle {report.value}")
    return CheckResult(name, True, "exact agreement")


def check_minifloat_consecutive(max_width: int = 16) -> CheckResult:
    names = [p for p, s in minifloat.PRESETS.items() if s.width <= min(max_width, MAX_ENUM_BITS)]
    name = f"minifloat largest-consecutive vs oracle ({', '.join(names)})"
    for preset in names:
        spec = minifloat.PRESETS[preset]
        report = largest_consecutive(spec)
        expected = minifloat.largest_consecutive(spec)
        if report.value != expected:
            return CheckResult(
                name, False, f"{preset}: closed form {expected}, oracle {report.value}"
            )
    return CheckResult(name, True, "exact agreement")


def check_min_length(fmt: FormatSpec, max_m: int = 4096) -> CheckResult:
    family = formats.format_name(fmt)
    name = f"{family} min-length formula vs oracle, m=1..{max_m}"
    if max_m > 65535:
        # Integers beyond 16 bits can need more than MAX_ENUM_BITS pattern bits.
        raise BudgetError(f"min-length verification capped at m <= 65535, got {max_m}")
    formula = posit.min_length if isinstance(fmt, PositFormat) else takum.min_length
    table = min_length_table(fmt, range(1, max_m + 1))
    for m in range(1, max_m + 1):
        expected = formula(m)
        if table[m] != expected:
            return CheckResult(name, False, f"m={m}: formula {expected}, oracle {table[m]}")
    return CheckResult(name, True, "exact agreement")


def check_negation_closure(max_n: int = 14) -> CheckResult:
    name = f"two's-complement negation closure, n=5..{max_n}"
    for decode, family in ((posit.decode, "posit"), (takum.decode, "takum")):
        for n in range(5, max_n + 1):
            for pattern in range(1 << n):
                bits = BitString.from_uint(pattern, n)
                value = decode(bits)
                if value.is_finite and decode(bits.twos_complement()) != -value:
                    return CheckResult(name, False, f"{family} pattern {bits} at n={n}")
    return CheckResult(name, True, "negation holds for every finite pattern")


def check_round_trip(max_m: int = 4096) -> CheckResult:
    name = f"encode/decode round trip with minimal width, |m|<={max_m}"
    for encode, decode, length, family in (
        (posit.encode_integer, posit.decode, posit.min_length, "posit"),
        (takum.encode_integer, takum.decode, takum.min_length, "takum"),
    ):
        for a in range(1, max_m + 1):
            for m in (a, -a):
                bits = encode(m)
                value = decode(bits)
                if not value.is_integer() or value.as_integer() != m:
                    return CheckResult(name, False, f"{family} m={m} decoded to {value}")
                if bits.width != length(m):
                    return CheckResult(
                        name, False, f"{family} m={m}: width {bits.width} != {length(m)}"
                    )
    return CheckResult(name, True, "round trips at the predicted minimal width")


def check_analytic_consecutive(max_n: int = 64) -> CheckResult:
    name = f"takum consecutive exponent, exact search vs Lambert-W, n=5..{max_n}"
    for n in range(5, max_n + 1):
        exact = takum.consecutive_exponent(n)
        analytic = takum.consecutive_exponent_analytic(n)
        if exact != analytic:
            return CheckResult(name, False, f"n={n}: exact {exact}, analytic {analytic}")
        x = math.log(2.0) * math.pow(2.0, n - 3)
        result = takum.lambert_w0(x)
        if result.residual > 1e-12 * max(1.0, x):
            return CheckResult(name, False, f"n={n}: residual {result.residual} too large")
    return CheckResult(name, True, "exact agreement, residuals within tolerance")


def known_discrepancies() -> list[CheckResult]:
    """Informational notes about published values the oracle contradicts."""
    report = largest_consecutive(minifloat.PRESETS["e4m3"])
    return [
        CheckResult(
            "e4m3 largest-consecutive vs commonly published value",
            True,
            f"enumeration of all 256 patterns gives {report.value}; the widely "
            f"quoted 32 would need 4 fraction bits, but E4M3 has 3 "
            f"(known discrepancy, not a failure)",
            note=True,
        )
    ]


def verify_all(max_n: int = 16, max_m: int = 4096) -> list[CheckResult]:
    """Every formula-vs-oracle suite at the given budgets."""
    if max_n > MAX_ENUM_BITS:
        raise BudgetError(f"max_n {max_n} exceeds the {MAX_ENUM_BITS}-bit enumeration budget")
    if max_n < 5:
        raise FormatError(f"max_n must be at least 5, got {max_n}")
    if max_m < 1:
        raise FormatError(f"max_m must be positive, got {max_m}")
    return [
        check_posit_consecutive(max_n),
        check_takum_consecutive(max_n),
        check_minifloat_consecutive(max_n),
        check_min_length(PositFormat(), max_m),
        check_min_length(TakumFormat(), max_m),
        check_negation_closure(min(max_n, 14)),
        check_round_trip(max_m),
        check_analytic_consecutive(),
        *known_discrepancies(),
    ]
