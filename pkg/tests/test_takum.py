import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from intrep import BitString, CapacityError, DomainError, DyadicValue, oracle, takum
from intrep.formats import TakumFormat


def value(sign, numerator, exponent2):
    return DyadicValue.from_mantissa(sign, numerator, exponent2)


# Hand-decoded from the field layout: sign, direction, 3 regime bits,
# r characteristic bits, fraction, with ghost zeros past the end.
DECODE_CASES = [
    ("0", DyadicValue.zero()),
    ("1", DyadicValue.nar()),
    ("10", DyadicValue.nar()),
    ("000000000000", DyadicValue.zero()),
    ("100000000000", DyadicValue.nar()),
    ("01", value(1, 1, 0)),
    ("010010000000", value(1, 1, 1)),  # regime 001, characteristic 0 -> c=1
    ("01001", value(1, 1, 1)),
    ("0101", value(1, 1, 3)),  # regime 010, both characteristic bits ghost
    ("010011", value(1, 1, 2)),  # regime 001, characteristic 1 -> c=2
    ("0100101", value(1, 3, 0)),  # c=1, fraction 1 -> (1+1/2)*2 = 3
    ("01001101", value(1, 5, 0)),  # c=2, fraction 01 -> (1+1/4)*4 = 5
    ("0110", value(1, 1, 15)),  # regime 100 -> 4 characteristic bits, ghost
    ("00111", value(1, 1, -1)),  # direction 0, regime 111 -> c=-1
    ("0011", value(1, 1, -3)),  # direction 0, regime 110 -> c=-4+1+0=-3
    ("11", value(-1, 1, 0)),  # two's complement of "01" -> -1
    ("1011", value(-1, 1, 3)),  # two's complement of "0101" -> -8
    ("10111", value(-1, 1, 1)),  # two's complement of "01001" -> -2
]


@pytest.mark.parametrize("bits,expected", DECODE_CASES)
def test_decode(bits, expected):
    assert takum.decode(BitString(bits)) == expected


def test_decode_negative_characteristic_band():
    # direction 0, regime 110 -> one characteristic bit, c = -4 + 1 + C.
    assert takum.decode(BitString("00110")) == value(1, 1, -3)
    assert takum.decode(BitString("001101")) == value(1, 1, -2)
    assert takum.decode(BitString("00111")) == value(1, 1, -1)


ENCODE_CASES = [
    (1, "01"),
    (2, "01001"),
    (3, "0100101"),
    (4, "010011"),
    (5, "01001101"),
    (8, "0101"),
    (16, "0101001"),
    (12, "01010001"),
    (-1, "11"),
    (-8, "1011"),
]


@pytest.mark.parametrize("m,bits", ENCODE_CASES)
def test_encode_integer(m, bits):
    assert str(takum.encode_integer(m)) == bits


def test_encode_zero_is_single_bit():
    assert str(takum.encode_integer(0)) == "0"


MIN_LENGTH_CASES = [
    (1, 2),
    (2, 5),
    (3, 7),
    (4, 6),
    (8, 4),
    (16, 7),
    (5, 8),
    # Regression: the characteristic-truncation savings only apply when the
    # fraction is empty, even though the bit length is a power of two here.
    (9, 10),
    (10, 9),
    (12, 8),
]


@pytest.mark.parametrize("m,length", MIN_LENGTH_CASES)
def test_min_length(m, length):
    assert takum.min_length(m) == length
    assert takum.min_length(-m) == length


def test_min_length_rejects_zero():
    with pytest.raises(DomainError):
        takum.min_length(0)


def test_magnitude_range():
    top = 1 << 254
    assert takum.min_length(top) == 12
    assert takum.decode(takum.encode_integer(top)) == DyadicValue.from_int(top)
    with pytest.raises(DomainError):
        takum.min_length(top + 1)
    with pytest.raises(DomainError):
        takum.encode_integer(1 << 255)


def test_encode_capacity():
    with pytest.raises(CapacityError):
        takum.encode_integer(3, max_bits=6)
    assert str(takum.encode_integer(3, max_bits=7)) == "0100101"


LARGEST_CONSECUTIVE_CASES = [
    (5, 2),
    (8, 2**3),
    (12, 2**6),
    (16, 2**9),
    (32, 2**24),
    (64, 2**55),
    (128, 2**118),
]


@pytest.mark.parametrize("n,expected", LARGEST_CONSECUTIVE_CASES)
def test_largest_consecutive(n, expected):
    assert takum.largest_consecutive(n) == expected


def test_largest_consecutive_domain():
    with pytest.raises(DomainError):
        takum.largest_consecutive(4)


def test_consecutive_exponent_sandwich():
    for n in range(5, 200):
        v = takum.consecutive_exponent(n)
        bound = 1 << (n - 3)
        assert v * 2**v < bound <= (v + 1) * 2 ** (v + 1)


def test_lambert_w0_known_points():
    result = takum.lambert_w0(0.0)
    assert (result.x, result.w, result.residual) == (0.0, 0.0, 0.0)
    assert takum.lambert_w0(math.e).w == pytest.approx(1.0, abs=1e-12)
    # W0(1) is the omega constant.
    assert takum.lambert_w0(1.0).w == pytest.approx(0.5671432904097838, abs=1e-12)
    with pytest.raises(DomainError):
        takum.lambert_w0(-1.0)


@pytest.mark.parametrize(
    "x", [1e-12, 0.25, 1.0, 2.5, math.e, 3.0, 100.0, 1e6, 1e18, 1e30]
)
def test_lambert_w0_matches_mpmath(x):
    ours = takum.lambert_w0(x)
    reference = float(mpmath.lambertw(mpmath.mpf(x)))
    assert ours.w == pytest.approx(reference, rel=1e-10)
    assert ours.residual <= 1e-12 * max(1.0, x)


def test_analytic_consecutive_exponent():
    for n in range(5, 65):
        assert takum.consecutive_exponent_analytic(n) == takum.consecutive_exponent(n), n


def test_analytic_consecutive_exponent_exact_boundaries():
    # At these widths the bound is hit exactly, the razor's edge for the
    # floating-point ceiling.
    for n in (6, 9, 14, 23, 40):
        assert takum.consecutive_exponent_analytic(n) == takum.consecutive_exponent(n), n


def test_non_fraction_bits():
    assert takum.non_fraction_bits(0) == 5
    assert takum.non_fraction_bits(1) == 6
    assert takum.non_fraction_bits(7) == 8
    assert takum.non_fraction_bits(-1) == 5
    assert takum.non_fraction_bits(-2) == 6
    assert takum.non_fraction_bits(254) == 12
    assert takum.non_fraction_bits(-255) == 12
    with pytest.raises(DomainError):
        takum.non_fraction_bits(255)
    with pytest.raises(DomainError):
        takum.non_fraction_bits(-256)


def test_exponent_range():
    assert takum.exponent_range() == range(-255, 255)
    assert takum.exponent_range(64) == range(-255, 255)


@given(st.integers(-(2**200), 2**200).filter(lambda m: m != 0))
def test_round_trip_at_min_length(m):
    bits = takum.encode_integer(m, max_bits=4096)
    assert bits.width == takum.min_length(m)
    assert takum.decode(bits) == DyadicValue.from_int(m)


@given(st.integers(1, 2**24), st.integers(0, 12))
def test_decode_ignores_appended_zeros(pattern_seed, extra):
    width = max(2, pattern_seed.bit_length())
    bits = BitString.from_uint(pattern_seed % (1 << width), width)
    assert takum.decode(bits.zero_extend(extra)) == takum.decode(bits)


@given(st.integers(1, 2**16 - 1))
def test_negation_closure(pattern):
    bits = BitString.from_uint(pattern, 16)
    v = takum.decode(bits)
    if v.is_finite:
        assert takum.decode(bits.twos_complement()) == -v


@given(st.integers(1, 2**14 - 1), st.integers(2, 14))
def test_exponent_domain(pattern, width):
    v = takum.decode(BitString.from_uint(pattern % (1 << width), width))
    if v.is_finite:
        exponent = v.exponent2 + (v.significand.bit_length() - 1)
        assert takum.MIN_EXPONENT <= exponent <= takum.MAX_EXPONENT


def test_min_length_matches_oracle_small():
    table = oracle.min_length_table(TakumFormat(), range(1, 257))
    for m in range(1, 257):
        assert table[m] == takum.min_length(m), m
