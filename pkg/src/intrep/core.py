"""Bit strings and exact binary values.

Shared ground for the codec modules: an immutable MSB-first bit string with
zero-extension ("ghost bit") semantics, an exact value type built on Python
integers, and the bit-level profile of a nonzero integer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction


class DomainError(ValueError):
    """An argument lies outside an operation's mathematical domain."""


class CapacityError(ValueError):
    """The value is representable, but not within the given bit budget."""


class FormatError(ValueError):
    """A bit string cannot be parsed or does not fit the addressed format."""


class BudgetError(ValueError):
    """An exhaustive enumeration would exceed the configured budget."""


def trailing_zero_count(x: int) -> int:
    """Number of trailing zero bits of a positive integer."""
    return (x & -x).bit_length() - 1


class BitString:
    """Immutable bit string, most significant bit first, never empty.

    Reads past the end yield zeros ("ghost bits"), so a string stands for
    the whole equivalence class of its zero-extensions.  Text form is ASCII
    '0'/'1'; parsing accepts an optional "0b" prefix and ignores spaces and
    underscores.
    """

    __slots__ = ("_value", "_width")

    def __init__(self, bits: str):
        text = bits.strip().removeprefix("0b")
        text = text.replace(" ", "").replace("_", "")
        if not text or text.strip("01"):
            raise FormatError(f"not a bit string: {bits!r}")
        self._value = int(text, 2)
        self._width = len(text)

    @classmethod
    def from_uint(cls, value: int, width: int) -> "BitString":
        if width < 1 or value < 0 or value >> width:
            raise FormatError(f"{value} does not fit in {width} bits")
        self = object.__new__(cls)
        self._value = value
        self._width = width
        return self

    @property
    def uint(self) -> int:
        """The bits read as an unsigned integer."""
        return self._value

    @property
    def width(self) -> int:
        return self._width

    def __len__(self) -> int:
        return self._width

    def __eq__(self, other: object):
        if not isinstance(other, BitString):
            return NotImplemented
        return self._value == other._value and self._width == other._width

    def __hash__(self):
        return hash((self._value, self._width))

    def __str__(self) -> str:
        return format(self._value, f"0{self._width}b")

    def __repr__(self) -> str:
        return f"BitString({str(self)!r})"

    def bit(self, i: int) -> int:
        """Bit at MSB-first position i; zero past the end."""
        if i < 0:
            raise IndexError(i)
        if i >= self._width:
            return 0
        return (self._value >> (self._width - 1 - i)) & 1

    def field(self, start: int, count: int) -> int:
        """Unsigned value of bits [start, start+count), ghost zeros past the end."""
        if count <= 0:
            return 0
        explicit = min(self._width - start, count)
        if explicit <= 0:
            return 0
        chunk = (self._value >> (self._width - start - explicit)) & ((1 << explicit) - 1)
        return chunk << (count - explicit)

    def run_length(self, start: int) -> int:
        """Length of the run of identical bits beginning at explicit position start."""
        if start >= self._width:
            return 0
        lead = self.bit(start)
        n = 1
        while start + n < self._width and self.bit(start + n) == lead:
            n += 1
        return n

    def all_zero_from(self, start: int) -> bool:
        """True if every explicit bit at position >= start is zero."""
        if start >= self._width:
            return True
        return self._value & ((1 << (self._width - start)) - 1) == 0

    def trailing_zeros(self) -> int:
        if self._value == 0:
            return self._width
        return trailing_zero_count(self._value)

    def zero_extend(self, extra: int) -> "BitString":
        """Append extra zero bits at the least significant end."""
        if extra < 0:
            raise DomainError("cannot extend by a negative count")
        if extra == 0:
            return self
        return BitString.from_uint(self._value << extra, self._width + extra)

    def truncate_trailing_zeros(self, min_len: int = 1) -> "BitString":
        """Shortest prefix, at least min_len wide, whose zero-extension equals self."""
        if min_len < 1:
            raise DomainError("min_len must be at least 1")
        width = max(min_len, self._width - self.trailing_zeros())
        if width >= self._width:
            return self
        return BitString.from_uint(self._value >> (self._width - width), width)

    def twos_complement(self) -> "BitString":
        """Two's complement at the same width (an involution)."""
        return BitString.from_uint(-self._value & ((1 << self._width) - 1), self._width)


class ValueKind(enum.Enum):
    ZERO = "zero"
    NAR = "nar"
    FINITE = "finite"


@dataclass(frozen=True, slots=True)
class DyadicValue:
    """Exact decoded value: zero, NaR (not a real), or sign*significand*2**exponent2.

    Finite values are canonical: sign is +1 or -1 and the significand is an
    odd positive integer, so structurally equal values compare equal.
    """

    kind: ValueKind
    sign: int = 1
    significand: int = 0
    exponent2: int = 0

    @classmethod
    def zero(cls) -> "DyadicValue":
        return cls(ValueKind.ZERO)

    @classmethod
    def nar(cls) -> "DyadicValue":
        return cls(ValueKind.NAR)

    @classmethod
    def from_mantissa(cls, sign: int, numerator: int, exponent2: int) -> "DyadicValue":
        """Finite value sign*numerator*2**exponent2, normalized to an odd significand."""
        if sign not in (1, -1) or numerator <= 0:
            raise DomainError("finite values need sign in {1,-1} and numerator > 0")
        shift = trailing_zero_count(numerator)
        return cls(ValueKind.FINITE, sign, numerator >> shift, exponent2 + shift)

    @classmethod
    def from_int(cls, m: int) -> "DyadicValue":
        if m == 0:
            return cls.zero()
        return cls.from_mantissa(1 if m > 0 else -1, abs(m), 0)

    @property
    def is_zero(self) -> bool:
        return self.kind is ValueKind.ZERO

    @property
    def is_nar(self) -> bool:
        return self.kind is ValueKind.NAR

    @property
    def is_finite(self) -> bool:
        return self.kind is ValueKind.FINITE

    def is_integer(self) -> bool:
        if self.is_zero:
            return True
        return self.is_finite and self.exponent2 >= 0

    def as_integer(self) -> int:
        if not self.is_integer():
            raise DomainError(f"{self} is not an integer")
        if self.is_zero:
            return 0
        return self.sign * (self.significand << self.exponent2)

    def as_fraction(self) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        if self.is_nar:
            raise DomainError("NaR has no numeric value")
        return Fraction(self.sign * self.significand) * Fraction(2) ** self.exponent2

    def __neg__(self) -> "DyadicValue":
        if not self.is_finite:
            return self
        return DyadicValue(ValueKind.FINITE, -self.sign, self.significand, self.exponent2)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.is_nar:
            return "NaR"
        # Small enough integers print in decimal; everything else stays in
        # the exact significand*2^exponent form.
        if self.exponent2 >= 0 and self.significand.bit_length() + self.exponent2 <= 128:
            return str(self.as_integer())
        sign = "-" if self.sign < 0 else ""
        return f"{sign}{self.significand}*2^{self.exponent2}"


@dataclass(frozen=True, slots=True)
class IntegerProfile:
    """Bit shape of a nonzero integer: v bits up to the leading 1, w trailing zeros."""

    v: int
    w: int

    @property
    def fraction_bits(self) -> int:
        """Explicit significand bits below the leading 1: v - w - 1."""
        return self.v - self.w - 1


def integer_profile(m: int) -> IntegerProfile:
    """Profile of a nonzero integer; the sign is ignored."""
    if m == 0:
        raise DomainError("0 has no integer profile")
    a = abs(m)
    return IntegerProfile(a.bit_length(), trailing_zero_count(a))
