"""Property tests for the series ring, driven by hypothesis."""

from hypothesis import given, settings, strategies as st

from qlab.series import (
    LaurentSeries,
    PochhammerSpec,
    monomial,
    one,
    pochhammer,
)


@st.composite
def series(draw, max_len=10):
    min_exp = draw(st.integers(-5, 5))
    n = draw(st.integers(0, max_len))
    coeffs = draw(
        st.lists(
            st.fractions(min_value=-9, max_value=9, max_denominator=4),
            min_size=n,
            max_size=n,
        )
    )
    return LaurentSeries.from_coeffs(min_exp, coeffs, min_exp + n)


nonzero_series = series().filter(lambda s: not s.is_zero)

finite_poch = st.builds(
    PochhammerSpec,
    sign=st.sampled_from([1, -1]),
    offset=st.integers(-3, 5),
    step=st.integers(1, 4),
    length=st.integers(0, 6),
)


def assert_equal_on_common(a: LaurentSeries, b: LaurentSeries) -> None:
    order = min(a.order, b.order)
    ok, mismatch = a.equal_up_to(b, order)
    assert ok, mismatch


@given(series(), series(), series())
def test_add_associative_and_commutative(a, b, c):
    assert_equal_on_common(a.add(b).add(c), a.add(b.add(c)))
    assert_equal_on_common(a.add(b), b.add(a))


@given(series(), series(), series())
def test_mul_associative(a, b, c):
    assert_equal_on_common(a.mul(b).mul(c), a.mul(b.mul(c)))


@given(series(), series())
def test_mul_commutative(a, b):
    assert_equal_on_common(a.mul(b), b.mul(a))


@given(series(), series(), series())
def test_mul_distributes_over_add(a, b, c):
    assert_equal_on_common(a.mul(b.add(c)), a.mul(b).add(a.mul(c)))


@given(nonzero_series)
def test_mul_by_inverse_is_one(a):
    p = a.mul(a.invert())
    if p.order <= 0:
        return
    assert p.coefficient(0) == 1
    for k in range(p.min_exp, p.order):
        if k != 0:
            assert p.coefficient(k) == 0, f"q^{k} in a * a^-1"


@given(nonzero_series)
def test_inverse_window(a):
    inv = a.invert()
    assert inv.min_exp == -a.min_exp
    assert inv.order == a.order - 2 * a.min_exp


@given(finite_poch, st.integers(5, 30))
def test_pochhammer_defining_recursion(spec, order):
    longer = pochhammer(PochhammerSpec(spec.sign, spec.offset, spec.step, spec.length + 1), order)
    shorter = pochhammer(spec, order)
    e = spec.offset + spec.length * spec.step
    factor = one(order + abs(e) + 1).sub(monomial(spec.sign, e, order + abs(e) + 1))
    assert_equal_on_common(longer, shorter.mul(factor))


@given(series(), series(), st.integers(1, 4))
def test_substitute_power_is_ring_homomorphism(a, b, k):
    assert_equal_on_common(
        a.add(b).substitute_power(k), a.substitute_power(k).add(b.substitute_power(k))
    )
    assert_equal_on_common(
        a.mul(b).substitute_power(k), a.substitute_power(k).mul(b.substitute_power(k))
    )


@given(finite_poch, st.integers(2, 20), st.integers(2, 20))
def test_pochhammer_window_contract_soundness(spec, n1, n2):
    """Evaluating at a larger order never changes the coefficients below."""
    lo, hi = min(n1, n2), max(n1, n2)
    a = pochhammer(spec, lo)
    b = pochhammer(spec, hi)
    ok, mismatch = a.equal_up_to(b, min(lo, a.order, b.order))
    assert ok, mismatch


@settings(max_examples=60)
@given(st.integers(-3, 3), st.integers(1, 3), st.integers(5, 25), st.integers(5, 25))
def test_infinite_pochhammer_window_soundness(offset, step, n1, n2):
    spec = PochhammerSpec(1, offset, step, None)
    lo, hi = min(n1, n2), max(n1, n2)
    a = pochhammer(spec, lo)
    b = pochhammer(spec, hi)
    ok, mismatch = a.equal_up_to(b, min(lo, a.order, b.order))
    assert ok, mismatch


@given(series(), st.fractions(min_value=-5, max_value=5, max_denominator=6))
def test_scale_matches_monomial_multiplication(a, c):
    if a.order <= 0:
        return
    assert_equal_on_common(a.scale(c), a.mul(monomial(c, 0, a.order)) if c else a.scale(0))


@given(series())
def test_canonical_representation(a):
    assert len(a.nums) == a.order - a.min_exp
    assert a.den >= 1
    if a.nums:
        assert a.nums[0] != 0
    else:
        assert a.min_exp == a.order
