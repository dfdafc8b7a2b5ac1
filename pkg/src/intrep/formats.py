"""Uniform handle on the supported number formats.

A FormatSpec is a PositFormat, a TakumFormat, or a MinifloatSpec.  Posit and
takum handles may carry a width or stand for the whole family (width None);
minifloat widths are intrinsic to the spec.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Union

from . import minifloat, posit, takum
from .core import BitString, DomainError, DyadicValue, FormatError
from .minifloat import PRESETS, MinifloatSpec


@dataclass(frozen=True, slots=True)
class PositFormat:
    n: int | None = None

    def __post_init__(self):
        if self.n is not None and self.n < 3:
            raise FormatError(f"posit width must be at least 3, got {self.n}")


@dataclass(frozen=True, slots=True)
class TakumFormat:
    n: int | None = None

    def __post_init__(self):
        if self.n is not None and self.n < 5:
            raise FormatError(f"takum width must be at least 5, got {self.n}")


FormatSpec = Union[PositFormat, TakumFormat, MinifloatSpec]

_FAMILY_PATTERN = re.compile(r"^(posit|takum)(\d+)?$")


def parse_format(text: str) -> FormatSpec:
    """Parse names like "posit16", "takum", "e4m3", or "bfloat16"."""
    name = text.strip().lower()
    match = _FAMILY_PATTERN.match(name)
    if match:
        family, width = match.group(1), match.group(2)
        n = int(width) if width else None
        return PositFormat(n) if family == "posit" else TakumFormat(n)
    if name in PRESETS:
        return PRESETS[name]
    known = ", ".join(["posit[N]", "takum[N]", *PRESETS])
    raise FormatError(f"unknown format {text!r} (known: {known})")


def format_name(fmt: FormatSpec) -> str:
    if isinstance(fmt, PositFormat):
        return f"posit{fmt.n}" if fmt.n else "posit"
    if isinstance(fmt, TakumFormat):
        return f"takum{fmt.n}" if fmt.n else "takum"
    for name, spec in PRESETS.items():
        if spec == fmt:
            return name
    s = fmt
    return f"minifloat(e={s.exponent_bits},f={s.fraction_bits},bias={s.bias},{s.special.value})"


def format_width(fmt: FormatSpec) -> int | None:
    if isinstance(fmt, MinifloatSpec):
        return fmt.width
    return fmt.n


def resolve_width(fmt: FormatSpec, n: int | None = None) -> int:
    """The concrete bit width to work at, from the handle and/or override."""
    intrinsic = format_width(fmt)
    if n is None:
        if intrinsic is None:
            raise FormatError(f"{format_name(fmt)} needs an explicit width")
        return intrinsic
    if intrinsic is not None and intrinsic != n:
        raise FormatError(f"width {n} conflicts with {format_name(fmt)}")
    return n


def decode(fmt: FormatSpec, bits: BitString) -> DyadicValue:
    """Decode bits in the given format.

    Minifloats require their exact width; posit/takum accept any length up
    to the handle's width (appended zeros never change the value).
    """
    if isinstance(fmt, MinifloatSpec):
        return minifloat.decode(fmt, bits)
    if fmt.n is not None and bits.width > fmt.n:
        raise FormatError(f"{bits.width} bits do not fit {format_name(fmt)}")
    if isinstance(fmt, PositFormat):
        return posit.decode(bits)
    return takum.decode(bits)


def largest_consecutive(fmt: FormatSpec, n: int | None = None) -> int:
    """Closed-form largest consecutive integer for the format at width n."""
    if isinstance(fmt, MinifloatSpec):
        if n is not None and n != fmt.width:
            raise FormatError(f"width {n} conflicts with {format_name(fmt)}")
        return minifloat.largest_consecutive(fmt)
    width = resolve_width(fmt, n)
    if isinstance(fmt, PositFormat):
        return posit.largest_consecutive(width)
    return takum.largest_consecutive(width)


def signed_integer_ratio(fmt: FormatSpec, n: int | None = None) -> float:
    """largest_consecutive over the signed-integer count 2^(n-1) - 1."""
    if isinstance(fmt, MinifloatSpec):
        width = fmt.width
    else:
        width = resolve_width(fmt, n)
    if width < 2:
        raise DomainError(f"no signed integers in {width} bit(s)")
    return largest_consecutive(fmt, n) / ((1 << (width - 1)) - 1)
