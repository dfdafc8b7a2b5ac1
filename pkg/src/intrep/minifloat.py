"""IEEE-754-style minifloat codec: sign | exponent | fraction.

Covers classic binary interchange formats (float16/32/64/128), bfloat16, and
the OFP8 8-bit formats E4M3 and E5M2.  The formats differ in how the all-ones
exponent field is spent, captured by SpecialValues:

  IEEE  - all-ones exponent encodes infinities and NaNs (all collapse to NaR)
  E4M3  - no infinities; the single NaN has exponent and fraction all ones,
          every other all-ones-exponent pattern is an ordinary normal number
  NONE  - no special patterns at all; all-ones exponent is an ordinary normal
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import BitString, BudgetError, DyadicValue, FormatError

ENUMERATION_BIT_LIMIT = 24


class SpecialValues(enum.Enum):
    IEEE = "ieee"
    E4M3 = "e4m3"
    NONE = "none"


@dataclass(frozen=True, slots=True)
class MinifloatSpec:
    """Shape of a minifloat format: exponent bits, fraction bits, bias, specials."""

    exponent_bits: int
    fraction_bits: int
    bias: int
    special: SpecialValues = SpecialValues.IEEE

    def __post_init__(self):
        if self.exponent_bits < 1 or self.fraction_bits < 0:
            raise FormatError(f"impossible minifloat shape: {self}")

    @property
    def width(self) -> int:
        return 1 + self.exponent_bits + self.fraction_bits

    @property
    def min_normal_exponent(self) -> int:
        return 1 - self.bias

    @property
    def max_normal_exponent(self) -> int:
        """Largest unbiased exponent of a finite normal number."""
        top = (1 << self.exponent_bits) - 1
        if self.special is SpecialValues.IEEE:
            top -= 1
        elif self.special is SpecialValues.E4M3 and self.fraction_bits == 0:
            top -= 1  # with no fraction bits the lone NaN eats the top exponent
        return top - self.bias


PRESETS: dict[str, MinifloatSpec] = {
    "float16": MinifloatSpec(5, 10, 15),
    "bfloat16": MinifloatSpec(8, 7, 127),
    "float32": MinifloatSpec(8, 23, 127),
    "float64": MinifloatSpec(11, 52, 1023),
    "float128": MinifloatSpec(15, 112, 16383),
    "e4m3": MinifloatSpec(4, 3, 7, SpecialValues.E4M3),
    "e5m2": MinifloatSpec(5, 2, 15),
}


def decode(spec: MinifloatSpec, bits: BitString) -> DyadicValue:
    """Exact value of a bit string in the given minifloat format."""
    if bits.width != spec.width:
        raise FormatError(f"need exactly {spec.width} bits, got {bits.width}")
    s = bits.bit(0)
    exp_field = bits.field(1, spec.exponent_bits)
    frac = bits.field(1 + spec.exponent_bits, spec.fraction_bits)
    all_ones = (1 << spec.exponent_bits) - 1

    if exp_field == all_ones:
        if spec.special is SpecialValues.IEEE:
            return DyadicValue.nar()  # infinities and NaNs alike
        if spec.special is SpecialValues.E4M3 and frac == (1 << spec.fraction_bits) - 1:
            return DyadicValue.nar()

    if exp_field == 0:
        if frac == 0:
            return DyadicValue.zero()  # both signs of zero
        numer = frac
        exponent = spec.min_normal_exponent
    else:
        numer = (1 << spec.fraction_bits) + frac
        exponent = exp_field - spec.bias
    return DyadicValue.from_mantissa(-1 if s else 1, numer, exponent - spec.fraction_bits)


def largest_consecutive(spec: MinifloatSpec) -> int:
    """Largest k such that every integer in [-k, k] is representable.

    Closed form 2^(fraction_bits + 1) whenever that value is itself a finite
    normal number and the normal range starts at or below exponent 0 (then
    every smaller integer is representable and integers above it fall into
    gaps of width >= 2); shapes where the precondition fails are settled by
    enumeration.
    """
    target_exponent = spec.fraction_bits + 1
    if spec.min_normal_exponent <= 0 and spec.max_normal_exponent >= target_exponent:
        return 1 << target_exponent
    return _enumerate_largest_consecutive(spec)


def _enumerate_largest_consecutive(spec: MinifloatSpec) -> int:
    if spec.width > ENUMERATION_BIT_LIMIT:
        raise BudgetError(f"cannot enumerate {spec.width}-bit patterns (limit 24)")
    seen = set()
    for pattern in range(1 << spec.width):
        value = decode(spec, BitString.from_uint(pattern, spec.width))
        if value.is_integer():
            seen.add(value.as_integer())
    k = 0
    while k + 1 in seen:
        k += 1
    return k


def non_fraction_bits(spec: MinifloatSpec, exponent: int) -> int:
    """Bits spent on sign and exponent at a given value exponent.

    Constant 1 + exponent_bits over the normal range; below it each step into
    the subnormals costs one leading fraction zero.
    """
    lo, hi = exponent_domain(spec)
    if not lo <= exponent <= hi:
        raise FormatError(f"exponent {exponent} outside [{lo}, {hi}] for {spec}")
    fixed = 1 + spec.exponent_bits
    if exponent >= spec.min_normal_exponent:
        return fixed
    return fixed + (spec.min_normal_exponent - exponent)


def exponent_domain(spec: MinifloatSpec) -> tuple[int, int]:
    """Smallest (subnormal) and largest (normal) value exponents of the format."""
    return spec.min_normal_exponent - spec.fraction_bits, spec.max_normal_exponent
