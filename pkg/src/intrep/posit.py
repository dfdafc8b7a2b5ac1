"""Posit codec and integer-representability results.

Bit layout of an n-bit posit (MSB first):

    S | R ... R | ~R | E1 E0 | F ...
        regime   term  2-bit    fraction (n - k - 4 bits, clamped at 0)

The regime is the run of k identical bits after the sign, terminated by the
complementary bit.  With regime value r (-k if the run is of zeros, k-1 if of
ones) and 2-bit exponent field e = 2*E1 + E0, the coded exponent is
(-1)^S * (4r + e + S) and the value is ((1 - 3S) + f) * 2^exponent for
fraction f in [0, 1).  A string whose non-sign bits are all zero is 0 (S=0)
or NaR (S=1).  Short strings decode via zero-extension, so every value keeps
its meaning under appended zeros.
"""

from __future__ import annotations

from .core import (
    BitString,
    CapacityError,
    DomainError,
    DyadicValue,
    integer_profile,
)

# Positive encodings start "01...", so nothing meaningful is shorter than 2 bits.
_MIN_WIDTH = 2

DEFAULT_MAX_BITS = 256


def decode(bits: BitString) -> DyadicValue:
    """Exact value of a posit bit string of any length >= 1."""
    s = bits.bit(0)
    if bits.all_zero_from(1):
        return DyadicValue.zero() if s == 0 else DyadicValue.nar()
    lead = bits.bit(1)
    k = bits.run_length(1)
    regime = k - 1 if lead == 1 else -k
    exp_field = bits.field(2 + k, 2)
    frac_start = 4 + k
    p = max(0, bits.width - frac_start)
    frac = bits.field(frac_start, p)

    magnitude = 4 * regime + exp_field + s
    exponent = -magnitude if s else magnitude
    # value = ((1 - 3s) + frac/2^p) * 2^exponent, kept exact as numer * 2^(exponent-p)
    numer = ((1 << p) + frac) if s == 0 else ((2 << p) - frac)
    return DyadicValue.from_mantissa(-1 if s else 1, numer, exponent - p)


def min_length(m: int) -> int:
    """Fewest posit bits that represent the integer m exactly (m != 0)."""
    prof = integer_profile(m)
    v, w = prof.v, prof.w
    length = (5 * (v + 3)) // 4 - w
    if w == v - 1:
        # No fraction bits: the exponent field's trailing zeros go too.
        if v % 4 == 1:
            length -= 3  # termination bit and both exponent bits
        elif v % 4 == 3:
            length -= 1  # low exponent bit only
    return length


def encode_integer(m: int, max_bits: int = DEFAULT_MAX_BITS) -> BitString:
    """Shortest posit bit string decoding exactly to the integer m.

    Returns the width-1 string "0" for m = 0.  Raises CapacityError when the
    shortest representation would exceed max_bits.
    """
    if m == 0:
        return BitString("0")
    need = min_length(m)
    if need > max_bits:
        raise CapacityError(f"{m} needs {need} posit bits, more than max_bits={max_bits}")

    prof = integer_profile(m)
    v, w = prof.v, prof.w
    a = abs(m)
    k = (v + 3) // 4
    exp_field = (v + 3) % 4
    frac = (a >> w) & ((1 << prof.fraction_bits) - 1)

    # Assemble 0 | 1^k | 0 | exp | frac, then drop trailing zeros.
    value = ((1 << k) - 1) << 1
    value = (value << 2) | exp_field
    value = (value << prof.fraction_bits) | frac
    width = 4 + k + prof.fraction_bits
    pattern = BitString.from_uint(value, width).truncate_trailing_zeros(_MIN_WIDTH)
    if m < 0:
        pattern = pattern.twos_complement()
    assert pattern.width == need
    return pattern


def largest_consecutive(n: int) -> int:
    """Largest k such that every integer in [-k, k] fits in an n-bit posit."""
    if n < 3:
        raise DomainError(f"posit width must be at least 3, got {n}")
    return 1 << (4 * (n - 3) // 5)


def non_fraction_bits(exponent: int) -> int:
    """Bits an n-large posit spends on sign, regime, termination, and exponent.

    For coded exponent e the regime needs k = floor(e/4) + 1 bits when e >= 0
    and k = -floor(e/4) bits when e < 0; the fixed overhead is 4.
    """
    k = exponent // 4 + 1 if exponent >= 0 else -(exponent // 4)
    return 4 + k


def exponent_range(n: int) -> range:
    """Coded exponents reachable by n-bit posits: [-(4n-8), 4n-8]."""
    if n < 3:
        raise DomainError(f"posit width must be at least 3, got {n}")
    top = 4 * n - 8
    return range(-top, top + 1)
