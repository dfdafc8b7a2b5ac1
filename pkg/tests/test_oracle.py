import pytest

from intrep import (
    PRESETS,
    BudgetError,
    FormatError,
    MinifloatSpec,
    PositFormat,
    TakumFormat,
    oracle,
    posit,
    takum,
)

# Frozen from the exhaustive enumeration: every integer some 5-bit posit
# pattern hits within [-100, 100].  Note 3, 5, 6, 7 are absent: five bits
# leave no fraction bits, so only exact powers of two survive (and 64 has a
# shorter pattern than 32 does at this width).
POSIT5_INTEGERS = (-64, -16, -8, -4, -2, -1, 0, 1, 2, 4, 8, 16, 64)


def test_posit5_representable_set():
    result = oracle.representable_set(PositFormat(), 5, 100)
    assert result.integers == POSIT5_INTEGERS
    assert result.n == 5
    assert result.window == 100
    assert 16 in result
    assert 3 not in result


def test_takum12_covers_small_integers():
    result = oracle.representable_set(TakumFormat(), 12, 10)
    assert result.integers == tuple(range(-10, 11))


def test_e4m3_largest_integer():
    result = oracle.representable_set(PRESETS["e4m3"], window=500)
    assert max(result.integers) == 448
    assert min(result.integers) == -448


def test_representable_set_validation():
    with pytest.raises(FormatError):
        oracle.representable_set(PositFormat(), 8)  # no window
    with pytest.raises(FormatError):
        oracle.representable_set(PositFormat(), 8, 0)
    with pytest.raises(BudgetError):
        oracle.representable_set(PositFormat(), 25, 10)


def test_workers_match_serial():
    serial = oracle.representable_set(PositFormat(), 16, 50)
    parallel = oracle.representable_set(PositFormat(), 16, 50, workers=2)
    assert serial.integers == parallel.integers


def test_consecutive_report_posit8():
    report = oracle.largest_consecutive(PositFormat(), 8)
    assert report.n == 8
    assert report.value == 16
    assert report.exponent == 4
    assert report.source == "oracle"
    assert report.agreement is True


def test_consecutive_report_e4m3():
    report = oracle.largest_consecutive(PRESETS["e4m3"])
    assert report.value == 16
    assert report.agreement is True


def test_consecutive_report_without_closed_form():
    # Width 2 is below the posit formula's domain, so there is nothing to
    # agree with; the enumeration alone settles it.
    report = oracle.largest_consecutive(PositFormat(), 2)
    assert report.value == 1
    assert report.exponent == 0
    assert report.agreement is None


def test_consecutive_report_non_power_of_two():
    report = oracle.largest_consecutive(MinifloatSpec(2, 2, 0))
    assert report.value == 7
    assert report.exponent is None
    assert report.agreement is True


def test_largest_consecutive_budget():
    with pytest.raises(BudgetError):
        oracle.largest_consecutive(PositFormat(), 25)


def test_min_length_examples():
    assert oracle.min_length(PositFormat(), 1) == 2
    assert oracle.min_length(PositFormat(), 3) == 6
    assert oracle.min_length(TakumFormat(), 8) == 4
    assert oracle.min_length(TakumFormat(), -8) == 4
    assert oracle.min_length(PositFormat(), 0) == 1


def test_min_length_not_found_is_none():
    assert oracle.min_length(PositFormat(), 3, max_len=5) is None


def test_min_length_table_validation():
    with pytest.raises(FormatError):
        oracle.min_length_table(PositFormat(), [0, 1])
    with pytest.raises(FormatError):
        oracle.min_length_table(PRESETS["e4m3"], [1, 2])
    with pytest.raises(BudgetError):
        oracle.min_length_table(PositFormat(), [1], max_len=25)


def test_min_length_table_sweep():
    table = oracle.min_length_table(TakumFormat(), [1, 8, 9, 10])
    assert table == {1: 2, 8: 4, 9: 10, 10: 9}


def test_verify_all_validation():
    with pytest.raises(BudgetError):
        oracle.verify_all(max_n=25)
    with pytest.raises(FormatError):
        oracle.verify_all(max_n=4)
    with pytest.raises(FormatError):
        oracle.verify_all(max_m=0)
    with pytest.raises(BudgetError):
        oracle.check_min_length(PositFormat(), 65536)


def test_verify_all_small_budget_passes():
    results = oracle.verify_all(max_n=8, max_m=64)
    assert all(r.passed for r in results)
    notes = [r for r in results if r.note]
    assert len(notes) == 1
    assert "256 patterns gives 16" in notes[0].detail


def test_check_min_length_catches_mutated_formula(monkeypatch):
    true_formula = posit.min_length
    monkeypatch.setattr(posit, "min_length", lambda m: true_formula(m) + (m == 7))
    result = oracle.check_min_length(PositFormat(), 16)
    assert not result.passed
    assert "m=7" in result.detail


def test_check_takum_consecutive_catches_mutated_formula(monkeypatch):
    true_formula = takum.largest_consecutive
    monkeypatch.setattr(takum, "largest_consecutive", lambda n: 2 * true_formula(n))
    result = oracle.check_takum_consecutive(max_n=6)
    assert not result.passed
    assert "n=5" in result.detail
