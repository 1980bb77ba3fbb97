"""Tests for the named series builders and their cross-form invariants."""

from fractions import Fraction

import pytest

from qlab import partitions as pt
from qlab.qfunctions import (
    MONO_ONE,
    MONO_Q,
    MONO_ZERO,
    MissingParameter,
    Monomial,
    UnknownName,
    build,
    builder_forms,
    fine_exponent,
    mono,
    names,
    smallest_part_exponent,
)
from qlab.series import TruncationStall


def coeffs(series, lo, hi):
    return [series.coefficient(k) for k in range(lo, hi)]


def test_euler_inverse_example():
    assert coeffs(build("euler_inverse", 6), 0, 6) == [1, 1, 2, 3, 5, 7]


def test_f3_low_coefficients():
    assert coeffs(build("f3_def", 4), 0, 4) == [1, 1, -2, 3]


def test_theta_low_coefficients():
    assert coeffs(build("theta_phi_neg", 5), 0, 5) == [1, -2, 0, 0, 2]


def test_g_series_known_value():
    assert build("G_series", 9).coefficient(8) == 7


def test_form_counts():
    assert len(builder_forms("G_series")) == 3
    assert len(builder_forms("theta_phi_neg")) == 2
    assert len(builder_forms("euler_product")) == 2
    assert len(builder_forms("euler_inverse")) == 2
    assert len(builder_forms("No_plus_series")) == 7
    assert len(builder_forms("f3_def")) == 1


def test_unknown_name_rejected():
    with pytest.raises(UnknownName):
        build("nu3_def", 10)


def test_missing_parameter_rejected():
    with pytest.raises(MissingParameter):
        build("lem21_lhs", 10)
    with pytest.raises(MissingParameter):
        build("f3_def", 10, {"b": MONO_Q})


def test_order_must_be_positive():
    with pytest.raises(ValueError):
        build("f3_def", 0)


@pytest.mark.parametrize(
    "name",
    [n for n in names() if len(builder_forms(n)) > 1],
)
def test_multi_form_agreement(name):
    """All registered forms of a name agree on their common window."""
    forms = builder_forms(name)
    reference = build(name, 60, form=0)
    for i in range(1, len(forms)):
        other = build(name, 60, form=i)
        ok, mismatch = reference.equal_up_to(other, 60)
        assert ok, f"{name} form {i}: {mismatch}"


def test_euler_inverse_coefficients_monotone():
    e = build("euler_inverse", 60)
    values = [e.coefficient(k) for k in range(60)]
    assert all(v.denominator == 1 and v > 0 for v in values)
    assert all(values[k] <= values[k + 1] for k in range(1, 59))


def test_spt_lhs_positive_integers():
    s = build("spt_lhs", 50)
    for n in range(1, 50):
        v = s.coefficient(n)
        assert v.denominator == 1 and v > 0, f"spt coefficient at {n}: {v}"


def test_spt_lhs_matches_oracle():
    s = build("spt_lhs", 31)
    for n in range(1, 31):
        assert s.coefficient(n) == pt.spt(n), f"n={n}"


def test_fine_numbers_triple_agreement():
    direct = build("fineJ_direct", 60)
    two_color_style = build("fineJ_rhs", 60)
    from_f3 = build("fineJ_from_f3", 60)
    assert direct.equal_up_to(two_color_style, 60) == (True, None)
    assert direct.equal_up_to(from_f3, 60) == (True, None)
    assert two_color_style.equal_up_to(from_f3, 60) == (True, None)


def test_shifted_omega_counts_partitions():
    """q*omega(q) has nonnegative integer coefficients counting partitions
    whose odd parts are all less than twice the smallest part."""
    shifted = build("omega3_def", 60).shift(1)
    for n in range(1, 61):
        v = shifted.coefficient(n)
        assert v.denominator == 1 and v >= 0
    for n in range(1, 21):
        assert shifted.coefficient(n) == pt.count_omega_interpretation(n), f"n={n}"


def test_exponent_helpers_integral():
    for n in range(1, 200):
        assert smallest_part_exponent(n) * 2 == 3 * n * (n + 1)
        assert fine_exponent(n) * 2 == n * (3 * n + 1)


def test_rank_parity_matches_f3():
    f3 = build("f3_def", 21)
    for n in range(1, 21):
        stats = pt.rank_stats(n)
        assert f3.coefficient(n) == stats.even - stats.odd, f"n={n}"


def test_gprime_series_matches_oracle():
    g = build("Gprime_series", 21)
    for n in range(1, 21):
        assert g.coefficient(n) == pt.count_Gprime(n), f"n={n}"


def test_window_soundness_across_orders():
    """Coefficients must not depend on the truncation order they were
    computed at."""
    for name in ("f3_def", "spt_rhs", "thm61_rhs", "omega3_rep_rhs"):
        small = build(name, 12)
        large = build(name, 37)
        ok, mismatch = small.equal_up_to(large, 12)
        assert ok, f"{name}: {mismatch}"
    z = mono(1, 5)
    small = build("z_identity_rhs", 9, {"z": z})
    large = build("z_identity_rhs", 23, {"z": z})
    ok, mismatch = small.equal_up_to(large, 9)
    assert ok, f"z_identity_rhs: {mismatch}"


def test_builders_honor_requested_order():
    for name in names():
        sdef_params = {
            "b": MONO_Q,
            "z": mono(1, 3),
            "a": MONO_ONE,
        }
        from qlab.qfunctions import series_def

        params = {p: sdef_params[p] for p in series_def(name).params}
        series = build(name, 17, params or None)
        assert series.order >= 17, name


def test_before_ac_stalls_at_one():
    with pytest.raises(TruncationStall):
        build("before_ac_rhs", 20, {"b": MONO_ONE})


def test_monomial_parse():
    assert Monomial.parse("0") == MONO_ZERO
    assert Monomial.parse("1") == MONO_ONE
    assert Monomial.parse("q") == MONO_Q
    assert Monomial.parse("-q") == Monomial(Fraction(-1), 1)
    assert Monomial.parse("q^-1") == Monomial(Fraction(1), -1)
    assert Monomial.parse("q^5") == mono(1, 5)
    assert Monomial.parse("1/2*q^3") == Monomial(Fraction(1, 2), 3)
    assert Monomial.parse("-3") == Monomial(Fraction(-3), 0)
    with pytest.raises(ValueError):
        Monomial.parse("x+1")


def test_monomial_str_roundtrip():
    for m in (MONO_ZERO, MONO_ONE, MONO_Q, mono(1, -1), mono(-1, 2), Monomial(Fraction(1, 2), 3)):
        assert Monomial.parse(str(m)) == m
