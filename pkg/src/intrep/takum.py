"""Linear takum codec and integer-representability results.

Bit layout of an n-bit takum (MSB first):

    S | D | R2 R1 R0 | C ... C | F ...
       dir   3-bit     r bits    fraction (n - r - 5 bits, clamped at 0)

With direction bit D = 1 the regime field R gives r directly and the
characteristic is c = 2^r - 1 + C; with D = 0 it gives r as the value of the
complemented regime bits and c = -2^(r+1) + 1 + C.  Either way c lies in
[-255, 254], the coded exponent is (-1)^S * (c + S), and the value is
((1 - 3S) + f) * 2^exponent for fraction f in [0, 1).  A string whose
non-sign bits are all zero is 0 (S=0) or NaR (S=1).  Short strings decode
via zero-extension, exactly as posits do.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import (
    BitString,
    CapacityError,
    DomainError,
    DyadicValue,
    integer_profile,
    trailing_zero_count,
)

_MIN_WIDTH = 2

DEFAULT_MAX_BITS = 256

# The characteristic reaches 254, so integers with more than 255 bits are out
# of range no matter how many fraction bits are available.
MAX_MAGNITUDE = 1 << 254

MIN_EXPONENT = -255
MAX_EXPONENT = 254


def decode(bits: BitString) -> DyadicValue:
    """Exact value of a takum bit string of any length >= 1."""
    s = bits.bit(0)
    if bits.all_zero_from(1):
        return DyadicValue.zero() if s == 0 else DyadicValue.nar()
    d = bits.bit(1)
    regime = bits.field(2, 3)
    if d == 1:
        r = regime
        c = (1 << r) - 1 + bits.field(5, r)
    else:
        r = 7 - regime
        c = -(1 << (r + 1)) + 1 + bits.field(5, r)
    frac_start = 5 + r
    p = max(0, bits.width - frac_start)
    frac = bits.field(frac_start, p)

    exponent = -(c + 1) if s else c
    numer = ((1 << p) + frac) if s == 0 else ((2 << p) - frac)
    return DyadicValue.from_mantissa(-1 if s else 1, numer, exponent - p)


def min_length(m: int) -> int:
    """Fewest takum bits that represent the integer m exactly (m != 0)."""
    prof = integer_profile(m)
    if abs(m) > MAX_MAGNITUDE:
        raise DomainError(f"|m| exceeds the takum exponent range (2^254): {m}")
    v, w = prof.v, prof.w
    r = v.bit_length() - 1  # floor(log2 v)
    length = 4 + v - w + r
    if w == v - 1:
        # No fraction bits; trailing zeros of the characteristic go too.
        characteristic = v - (1 << r)
        if characteristic == 0:
            # All r characteristic bits are zero, and the regime's own
            # trailing zeros (all 3 bits when r = 0) come off as well.
            length -= r
            length -= 3 if r == 0 else trailing_zero_count(r)
        else:
            length -= trailing_zero_count(characteristic)
    return length


def encode_integer(m: int, max_bits: int = DEFAULT_MAX_BITS) -> BitString:
    """Shortest takum bit string decoding exactly to the integer m.

    Returns the width-1 string "0" for m = 0.  Raises DomainError when
    |m| > 2^254 and CapacityError when the shortest representation would
    exceed max_bits.
    """
    if m == 0:
        return BitString("0")
    need = min_length(m)
    if need > max_bits:
        raise CapacityError(f"{m} needs {need} takum bits, more than max_bits={max_bits}")

    prof = integer_profile(m)
    v, w = prof.v, prof.w
    a = abs(m)
    r = v.bit_length() - 1
    characteristic = v - (1 << r)
    frac = (a >> w) & ((1 << prof.fraction_bits) - 1)

    # Assemble 0 | 1 | regime | characteristic | frac, then drop trailing zeros.
    value = (1 << 3) | r
    value = (value << r) | characteristic
    value = (value << prof.fraction_bits) | frac
    width = 5 + r + prof.fraction_bits
    pattern = BitString.from_uint(value, width).truncate_trailing_zeros(_MIN_WIDTH)
    if m < 0:
        pattern = pattern.twos_complement()
    assert pattern.width == need
    return pattern


def consecutive_exponent(n: int) -> int:
    """Largest v with v * 2^v < 2^(n-3), by exact big-integer search."""
    if n < 5:
        raise DomainError(f"takum width must be at least 5, got {n}")
    bound = 1 << (n - 3)
    v = 1
    while (v + 1) << (v + 1) < bound:
        v += 1
    assert (v << v) < bound <= ((v + 1) << (v + 1))
    return v


def largest_consecutive(n: int) -> int:
    """Largest k such that every integer in [-k, k] fits in an n-bit takum."""
    return 1 << consecutive_exponent(n)


@dataclass(frozen=True, slots=True)
class LambertW0Result:
    """One evaluation of the principal Lambert W branch: w * e^w = x."""

    x: float
    w: float
    residual: float


def lambert_w0(x: float, max_iterations: int = 100) -> LambertW0Result:
    """Principal branch W0 on [0, inf), by Halley iteration.

    Converges when |w * e^w - x| <= 1e-12 * max(1, x).  Seeded with
    log(x) - log(log(x)) for x > e and with x itself below that.
    """
    if x < 0 or math.isnan(x):
        raise DomainError(f"lambert_w0 needs x >= 0, got {x}")
    if x == 0.0:
        return LambertW0Result(x, 0.0, 0.0)
    tolerance = 1e-12 * max(1.0, x)
    w = math.log(x) - math.log(math.log(x)) if x > math.e else x
    for _ in range(max_iterations):
        ew = math.exp(w)
        f = w * ew - x
        if abs(f) <= tolerance:
            return LambertW0Result(x, w, abs(f))
        # Halley's method for f(w) = w e^w - x.
        w -= f / (ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0))
    raise ArithmeticError(f"lambert_w0 did not converge for x={x}")


def consecutive_exponent_analytic(n: int) -> int:
    """The exponent of largest_consecutive as ceil(W0(2^(n-3) ln2)/ln2 - 1).

    Double-precision cross-check of consecutive_exponent: the argument of the
    ceiling is an exact integer whenever 2^(n-3) equals some v * 2^v (n = 6,
    9, 14, 23, 40, ...), so results within 1e-9 above an integer snap down to
    it; W0 is evaluated far more accurately than that.
    """
    if n < 5:
        raise DomainError(f"takum width must be at least 5, got {n}")
    x = math.log(2.0) * math.pow(2.0, n - 3)
    if math.isinf(x):
        raise DomainError(f"2^(n-3) overflows double precision for n={n}")
    t = lambert_w0(x).w / math.log(2.0) - 1.0
    return math.ceil(t - 1e-9)


def non_fraction_bits(exponent: int) -> int:
    """Bits a takum spends on sign, direction, regime, and characteristic.

    For coded exponent e the characteristic field has r = floor(log2(e+1))
    bits when e >= 0 (r = 0 for e = 0) and r = floor(log2(-e)) bits when
    e < 0; the fixed overhead is 5.
    """
    if not MIN_EXPONENT <= exponent <= MAX_EXPONENT:
        raise DomainError(f"takum exponent out of range: {exponent}")
    magnitude = exponent + 1 if exponent >= 0 else -exponent
    r = magnitude.bit_length() - 1
    return 5 + r


def exponent_range(n: int = 12) -> range:
    """Coded exponents of the takum format: [-255, 254] for any width."""
    if n < 5:
        raise DomainError(f"takum width must be at least 5, got {n}")
    return range(MIN_EXPONENT, MAX_EXPONENT + 1)
