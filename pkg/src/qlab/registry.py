"""The identity catalog and its verification engine.

Each :class:`IdentityEntry` pairs two independent series builders (left and
right side of one identity) with the monomial specializations at which the
identity is checked and a default truncation order.  :func:`verify` builds
both sides and compares them coefficient by coefficient through
:meth:`LaurentSeries.equal_up_to`; :func:`verify_all` runs the whole catalog
and aggregates per-row results without aborting on failures.

Parameterized identities are checked at finitely many monomial
specializations with distinct exponents rather than through a bivariate
engine; a passing row is evidence at that specialization only, and the
reports keep the rows separate.  One catalog row is a deliberate negative
control: the pre-continuation evaluation at b = 1 must stall (its tail has
constant-valuation terms), mirroring why the analytic continuation is needed
in the first place.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .series import (
    DEFAULT_TERM_CAP,
    LaurentSeries,
    Mismatch,
    TruncationStall,
    monomial,
    one,
    sum_terms,
    zero,
)
from . import qfunctions as qf
from .qfunctions import (
    MONO_ONE,
    MONO_Q,
    MONO_ZERO,
    Monomial,
    euler_inv,
    euler_product_direct,
    inv_one_minus,
    inv_one_plus,
    inv_qpoch,
    mono,
    one_minus,
    one_plus,
    phi3_neg,
    poch_of_monomial,
    qpoch,
    theta_phi_neg_prod,
)


class UnknownIdentity(KeyError):
    """The requested identity id is not in the catalog."""


class UnknownSpecialization(ValueError):
    """The requested specialization is not registered for this identity."""


SideBuilder = Callable[..., LaurentSeries]


@dataclass(frozen=True)
class Specialization:
    """One parameter assignment at which an identity row is verified."""

    label: Optional[str]
    params: Tuple[Tuple[str, Monomial], ...] = ()
    expects_stall: bool = False
    term_cap: Optional[int] = None

    def param_dict(self) -> Dict[str, Monomial]:
        return dict(self.params)


UNSPECIALIZED = (Specialization(label=None),)


@dataclass(frozen=True)
class IdentityEntry:
    """A catalog row: two builders, specializations, default order, anchor."""

    id: str
    anchor: str
    lhs: SideBuilder
    rhs: SideBuilder
    specializations: Tuple[Specialization, ...] = UNSPECIALIZED
    default_order: int = 100
    takes_cap: bool = False

    def specialization(self, label: Optional[str]) -> Specialization:
        for spec in self.specializations:
            if spec.label == label:
                return spec
        raise UnknownSpecialization(
            f"{self.id} has no specialization {label!r}; "
            f"available: {[s.label for s in self.specializations]}"
        )


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity row at one truncation order."""

    id: str
    specialization: Optional[str]
    order: int
    passed: bool
    first_mismatch: Optional[Mismatch]
    elapsed_ms: float
    stalled: bool = False
    expected_stall: bool = False
    error: Optional[str] = None

    @property
    def row_id(self) -> str:
        return self.id if self.specialization is None else f"{self.id}@{self.specialization}"


def _spec_rows(param: str, values: Sequence[Monomial]) -> Tuple[Specialization, ...]:
    return tuple(
        Specialization(label=f"{param}={v}", params=((param, v),)) for v in values
    )


# ----------------------------------------------------------------------
# shared sub-sums (each used by several catalog rows)


def _alt_sum(order: int, exponent, denom_builder) -> LaurentSeries:
    """sum over n >= 0 of sign_n q^(exponent(n)) / denom(n), generic driver."""

    def term(n: int) -> LaurentSeries:
        sgn, k = exponent(n)
        if k >= order:
            return zero(order)
        return denom_builder(n, order - k).shift_scale(sgn, k)

    return sum_terms(term, order)


def _alt_q_odd_over_plus(order: int) -> LaurentSeries:
    # sum (-1)^n q^(2n+1) / (1 + q^(2n+1))
    return _alt_sum(
        order,
        lambda n: ((-1) ** n, 2 * n + 1),
        lambda n, w: inv_one_plus(2 * n + 1, w),
    )


def _alt_q2_over_plus(order: int) -> LaurentSeries:
    # sum (-1)^n q^(2n) / (1 + q^(2n+1))
    return _alt_sum(
        order,
        lambda n: ((-1) ** n, 2 * n),
        lambda n, w: inv_one_plus(2 * n + 1, w),
    )


def _alt_q_over_plus2(order: int) -> LaurentSeries:
    # sum (-1)^n q^n / (1 + q^(2n+2))
    return _alt_sum(
        order,
        lambda n: ((-1) ** n, n),
        lambda n, w: inv_one_plus(2 * n + 2, w),
    )


def _alt_sq_sum_base1(order: int) -> LaurentSeries:
    # sum_{m>=1} (-1)^(m-1) q^(m^2) / (-q;q^2)_m
    def term(i: int) -> LaurentSeries:
        m = i + 1
        k = m * m
        if k >= order:
            return zero(order)
        return inv_qpoch(-1, 1, 2, m, order - k).shift_scale((-1) ** (m - 1), k)

    return sum_terms(term, order)


def _alt_sq_sum_base3(order: int) -> LaurentSeries:
    # sum_{m>=1} (-1)^m q^(m^2) / (-q^3;q^2)_m
    def term(i: int) -> LaurentSeries:
        m = i + 1
        k = m * m
        if k >= order:
            return zero(order)
        return inv_qpoch(-1, 3, 2, m, order - k).shift_scale((-1) ** m, k)

    return sum_terms(term, order)


def _phi3m_sum(order: int) -> LaurentSeries:
    # sum_{m>=0} (-1)^m q^(m^2) / (-q^2;q^2)_{m+1}
    return _alt_sum(
        order,
        lambda m: ((-1) ** m, m * m),
        lambda m, w: inv_qpoch(-1, 2, 2, m + 1, w),
    )


def _pair_tail(order: int) -> LaurentSeries:
    # sum_{n>=1} (-1)^n q^(2n) / ((1+q^(2n+1))(1+q^(2n+3)))
    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        body = inv_one_plus(2 * n + 1, w).mul(inv_one_plus(2 * n + 3, w))
        return body.shift_scale((-1) ** n, k)

    return sum_terms(term, order)


def _pair_tail_from0(order: int) -> LaurentSeries:
    # sum_{n>=0} (-1)^n q^(2n) / ((1+q^(2n+1))(1+q^(2n+3)))
    def term(n: int) -> LaurentSeries:
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        body = inv_one_plus(2 * n + 1, w).mul(inv_one_plus(2 * n + 3, w))
        return body.shift_scale((-1) ** n, k)

    return sum_terms(term, order)


def _theta_over_plus(order: int) -> LaurentSeries:
    # (q;q)_inf / (-q;q)_inf^2
    return euler_product_direct(order).mul(inv_qpoch(-1, 1, 1, None, order).pow(2))


def _q_one_plus_q(s: LaurentSeries) -> LaurentSeries:
    # q(1+q) * s, exactly
    return s.shift(1).add(s.shift(2))


# ----------------------------------------------------------------------
# one-off entry sides


def _even_rank_lhs(order: int) -> LaurentSeries:
    # (f(q) + 1/(q;q)_inf)/2; the constant term 1 counts the empty partition
    return qf.build("f3_def", order).add(euler_inv(order)).scale(Fraction(1, 2))


def _lem31_lhs(order: int) -> LaurentSeries:
    return _alt_q_odd_over_plus(order)


def _lem31_rhs(order: int) -> LaurentSeries:
    # 1/4 - (1/4) (q;q)_inf^2 / (-q;q)_inf^2
    return (1 - theta_phi_neg_prod(order).pow(2)).scale(Fraction(1, 4))


def _neg_shift(m: Monomial, k: int) -> Monomial:
    if m.is_zero:
        return MONO_ZERO
    return Monomial(-m.coeff, m.power + k)


def _fourparam_lhs(order: int, B: Monomial, a: Monomial, b: Monomial) -> LaurentSeries:
    # base Q = q^2, vanishing-A limit:
    # sum (B;Q)_n Q^n / ((-aQ;Q)_n (-bQ;Q)_n)
    na, nb = _neg_shift(a, 2), _neg_shift(b, 2)

    def term(n: int) -> LaurentSeries:
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        num = poch_of_monomial(B, 2, n, w)
        den = poch_of_monomial(na, 2, n, w).mul(poch_of_monomial(nb, 2, n, w))
        return num.mul(den.invert()).shift(k)

    return sum_terms(term, order)


def _fourparam_rhs(order: int, B: Monomial, a: Monomial, b: Monomial) -> LaurentSeries:
    # base Q = q^2, vanishing-A limit, using
    # lim (A^{-1};Q)_m A^m = (-1)^m Q^(m(m-1)/2):
    #  -(B;Q)_inf / (a (-bQ;Q)_inf (-aQ;Q)_inf)
    #      * sum (-1)^m Q^(m(m-1)/2) (bQ/a)^m / (-B/a;Q)_{m+1}
    #  + (1+b) sum (-a^{-1};Q)_{m+1} (-b)^m / (-B/a;Q)_{m+1}
    w = order + 8
    na, nb = _neg_shift(a, 2), _neg_shift(b, 2)
    neg_b_over_a = Monomial(-(B.coeff / a.coeff), B.power - a.power)
    bq_over_a = b.times(Monomial(Fraction(1), 2)).times(a.inv())
    neg_inv_a = Monomial(-1 / a.coeff, -a.power)

    pref = poch_of_monomial(B, 2, None, w).mul(
        poch_of_monomial(nb, 2, None, w).mul(poch_of_monomial(na, 2, None, w)).invert()
    ).shift_scale(-1 / a.coeff, -a.power)

    def s1_term(m: int) -> LaurentSeries:
        zm = bq_over_a.pow(m)
        k = m * (m - 1) + zm.power
        if k >= w:
            return zero(w)
        ww = w - k
        return (
            poch_of_monomial(neg_b_over_a, 2, m + 1, ww)
            .invert()
            .shift_scale((-1) ** m * zm.coeff, k)
        )

    piece1 = pref.mul(sum_terms(s1_term, w))

    def s2_term(m: int) -> LaurentSeries:
        bm = b.pow(m)
        if bm.is_zero:
            return zero(w)
        k = bm.power
        if k >= w:
            return zero(w)
        ww = w - k + 2
        num = poch_of_monomial(neg_inv_a, 2, m + 1, ww)
        den = poch_of_monomial(neg_b_over_a, 2, m + 1, ww)
        return num.mul(den.invert()).shift_scale((-1) ** m * bm.coeff, k)

    pref2 = one(w).add(b.to_series(w)) if not b.is_zero else one(w)
    piece2 = pref2.mul(sum_terms(s2_term, w))
    return piece1.add(piece2)


def _psi_split_base2_lhs(order: int) -> LaurentSeries:
    # the bilateral quotient sum with base q^2, split into unilateral tails:
    # 2(1+q^2) sum (-1)^n q^n/(1+q^(2n+2)) - (1+q^2)/(2q)
    w = order + 2
    part = one_plus(2, w).mul(_alt_q_over_plus2(w)).scale(2)
    corr = monomial(Fraction(1, 2), -1, w).add(monomial(Fraction(1, 2), 1, w))
    return part.sub(corr)


def _psi_product_base2_rhs(order: int) -> LaurentSeries:
    # (q^3;q^2)_inf (q^{-1};q^2)_inf (q^2;q^2)_inf^2
    #   / ((-q;q^2)_inf^2 (-q^4;q^2)_inf (-1;q^2)_inf)
    w = order + 4
    num = (
        qpoch(1, 3, 2, None, w)
        .mul(qpoch(1, -1, 2, None, w))
        .mul(qpoch(1, 2, 2, None, w).pow(2))
    )
    den = (
        qpoch(-1, 1, 2, None, w)
        .pow(2)
        .mul(qpoch(-1, 4, 2, None, w))
        .mul(qpoch(-1, 0, 2, None, w))
    )
    return num.mul(den.invert())


def _final1729_rhs(order: int) -> LaurentSeries:
    # 1/(4q) - (1/(4q)) (q;q)_inf^2/(-q;q)_inf^2
    w = order + 2
    return (1 - theta_phi_neg_prod(w).pow(2)).shift_scale(Fraction(1, 4), -1)


def _almost_spt_lhs(order: int) -> LaurentSeries:
    # sum_{n>=1} (q^2;q^2)_{n-1}^2 q^(2n) / ((q^2;q^2)_n (-q;q)_{2n});
    # the n=0 term vanishes under the reciprocal negative-index convention
    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        num = qpoch(1, 2, 2, n - 1, w).pow(2)
        den = qpoch(1, 2, 2, n, w).mul(qpoch(-1, 1, 1, 2 * n, w))
        return num.mul(den.invert()).shift(k)

    return sum_terms(term, order)


def _4para1_rhs(order: int) -> LaurentSeries:
    # -(1/q^2) (q^2;q^2)_inf/((-q^4;q^2)_inf (-q^3;q^2)_inf) * S1
    #   + (1+q)(1+q^2)/q * S2
    w = order + 4
    pref1 = qpoch(1, 2, 2, None, w).mul(
        qpoch(-1, 4, 2, None, w).mul(qpoch(-1, 3, 2, None, w)).invert()
    )
    piece1 = pref1.mul(_alt_sq_sum_base1(w)).shift_scale(-1, -2)
    piece2 = one_plus(1, w).mul(one_plus(2, w)).mul(_alt_q2_over_plus(w)).shift(-1)
    return piece1.add(piece2)


def _2sums_rhs(order: int) -> LaurentSeries:
    # -S1 + (1/(q;q)_inf) sum (-1)^m q^(2m+1)/(1+q^(2m+1))
    return _alt_sq_sum_base1(order).neg().add(
        euler_inv(order).mul(_alt_q_odd_over_plus(order))
    )


def _phi312_rhs(order: int) -> LaurentSeries:
    # (1/2) phi(-q) - (1/2) (q;q)_inf/(-q;q)_inf^2
    return phi3_neg(order).sub(_theta_over_plus(order)).scale(Fraction(1, 2))


def _231_rhs(order: int) -> LaurentSeries:
    # (1/2) f(q) + (1/2) (q;q)_inf/(-q;q)_inf^2
    return qf.build("f3_def", order).add(_theta_over_plus(order)).scale(Fraction(1, 2))


def _suminf_rhs(order: int) -> LaurentSeries:
    # (1/4) f(q) - (1/4) (q;q)_inf/(-q;q)_inf^2
    return qf.build("f3_def", order).sub(_theta_over_plus(order)).scale(Fraction(1, 4))


def _phi3m_rhs(order: int) -> LaurentSeries:
    # -q + (1+q) phi(-q)
    phi = phi3_neg(order)
    return phi.add(phi.shift(1)).sub(monomial(1, 1, order + 1))


def _psi_split_sec6_lhs(order: int) -> LaurentSeries:
    # 2(1+q)(1+q^3) sum_{n>=0} (-1)^n q^(2n)/((1+q^(2n+1))(1+q^(2n+3)))
    #   - (1/q)(1+q^3)/(1+q)
    w = order + 2
    part = one_plus(1, w).mul(one_plus(3, w)).mul(_pair_tail_from0(w)).scale(2)
    corr = one_plus(3, w).mul(inv_one_plus(1, w)).shift(-1)
    return part.sub(corr)


def _psi_product_sec6_rhs(order: int) -> LaurentSeries:
    # (q^3;q^2)_inf (q^{-1};q^2)_inf (q^2;q^2)_inf (q^4;q^2)_inf
    #   / ((-q^2;q^2)_inf^2 (-q^5;q^2)_inf (-q;q^2)_inf)
    w = order + 4
    num = (
        qpoch(1, 3, 2, None, w)
        .mul(qpoch(1, -1, 2, None, w))
        .mul(qpoch(1, 2, 2, None, w))
        .mul(qpoch(1, 4, 2, None, w))
    )
    den = (
        qpoch(-1, 2, 2, None, w)
        .pow(2)
        .mul(qpoch(-1, 5, 2, None, w))
        .mul(qpoch(-1, 1, 2, None, w))
    )
    return num.mul(den.invert())


def _last1_rhs(order: int) -> LaurentSeries:
    # 1/(2q(1+q)^2) - 1/((1+q)(1+q^3)) - (1/(2q(1-q^2))) (q;q)_inf^2/(-q;q)_inf^2
    w = order + 4
    p1 = inv_one_plus(1, w).pow(2).shift_scale(Fraction(1, 2), -1)
    p2 = inv_one_plus(1, w).mul(inv_one_plus(3, w)).neg()
    p3 = (
        theta_phi_neg_prod(w)
        .pow(2)
        .mul(inv_one_minus(2, w))
        .shift_scale(Fraction(-1, 2), -1)
    )
    return p1.add(p2).add(p3)


def _last2_rhs(order: int) -> LaurentSeries:
    # q^2 - q(1+q) phi(-q) + q(1+q)(q;q)_inf/(-q;q)_inf^2
    #   + q(1+q)/((q;q)_inf (1+q^3))
    #   + (q(1+q)(1-q^2)/(q;q)_inf) sum (-1)^m q^(2m+1)/((1+q^(2m+1))(1+q^(2m+3)))
    w = order + 2
    t1 = monomial(1, 2, w + 2)
    t2 = _q_one_plus_q(phi3_neg(w)).neg()
    t3 = _q_one_plus_q(_theta_over_plus(w))
    t4 = _q_one_plus_q(euler_inv(w).mul(inv_one_plus(3, w)))
    tail = euler_inv(w).mul(one_plus(1, w)).mul(one_minus(2, w)).mul(
        _pair_tail(w).shift(1)
    )
    return t1.add(t2).add(t3).add(t4).add(tail.shift(1))


def _seriesf_rhs(order: int) -> LaurentSeries:
    # q sum_{m>=1} (-1)^m q^(m^2)/(-q^3;q^2)_m + q(1+q)/((q;q)_inf(1+q^3))
    #   + (q(1+q)(1-q^2)/(q;q)_inf) * the paired tail at q^(2m+1)
    w = order + 2
    t1 = _alt_sq_sum_base3(w).shift(1)
    t2 = _q_one_plus_q(euler_inv(w).mul(inv_one_plus(3, w)))
    tail = euler_inv(w).mul(one_plus(1, w)).mul(one_minus(2, w)).mul(
        _pair_tail(w).shift(1)
    )
    return t1.add(t2).add(tail.shift(1))


def _beforephi_rhs(order: int) -> LaurentSeries:
    # q(q;q)_inf/((-q;q)_inf(-q^2;q)_inf) - q sum (-1)^m q^(m^2)/(-q^2;q^2)_{m+1}
    #   + q(1+q)/((q;q)_inf(1+q^3)) + the paired-tail block
    w = order + 2
    head = euler_product_direct(w).mul(
        qpoch(-1, 1, 1, None, w).mul(qpoch(-1, 2, 1, None, w)).invert()
    )
    t1 = head.shift(1)
    t2 = _phi3m_sum(w).shift(1).neg()
    t3 = _q_one_plus_q(euler_inv(w).mul(inv_one_plus(3, w)))
    tail = euler_inv(w).mul(one_plus(1, w)).mul(one_minus(2, w)).mul(
        _pair_tail(w).shift(1)
    )
    return t1.add(t2).add(t3).add(tail.shift(1))


# ----------------------------------------------------------------------
# catalog


def _named(name: str) -> SideBuilder:
    def side(order: int, **params: Monomial) -> LaurentSeries:
        return qf.build(name, order, params or None)

    side.__name__ = f"build_{name}"
    return side


def _named_form(name: str, form: int) -> SideBuilder:
    def side(order: int, **params: Monomial) -> LaurentSeries:
        return qf.build(name, order, params or None, form=form)

    side.__name__ = f"build_{name}_form{form}"
    return side


def _before_ac_side(order: int, b: Monomial, cap: int = DEFAULT_TERM_CAP) -> LaurentSeries:
    return qf.before_ac_rhs(order, b, cap=cap)


_B_VALUES = (MONO_ZERO, MONO_Q, mono(1, 2), MONO_ONE)
_Z_VALUES = (MONO_Q, mono(1, 3), mono(1, 5))
_A_VALUES = (MONO_ONE, MONO_Q, mono(1, 2))


def _build_catalog() -> Tuple[IdentityEntry, ...]:
    entries: List[IdentityEntry] = []

    def add(entry: IdentityEntry) -> None:
        entries.append(entry)

    add(IdentityEntry(
        id="omega3-rep",
        anchor="omega(q) equals its smallest-part style sum",
        lhs=_named("omega3_def"),
        rhs=_named("omega3_rep_rhs"),
    ))
    add(IdentityEntry(
        id="spt-fundamental",
        anchor="smallest-part sum equals its rank-moment evaluation "
               "(first member, the enumerative count, is checked by the oracle suite)",
        lhs=_named("spt_lhs"),
        rhs=_named("spt_rhs"),
    ))
    add(IdentityEntry(
        id="thm-1.1",
        anchor="new representation of f(q) through the positive-odd-rank sum",
        lhs=_named("f3_def"),
        rhs=_named("f3_newrep_rhs"),
    ))
    add(IdentityEntry(
        id="thm-1.3",
        anchor="two-color smallest-part sum equals its evaluated form",
        lhs=_named("sptG_lhs"),
        rhs=_named("sptG_rhs"),
    ))
    add(IdentityEntry(
        id="cor-1.4-even-rank",
        anchor="even-rank generating function (constant term: empty partition)",
        lhs=_even_rank_lhs,
        rhs=_named("Ne_series_rhs"),
    ))
    add(IdentityEntry(
        id="cor-1.4-fine",
        anchor="Fine's numbers as a two-color style sum",
        lhs=_named("fineJ_direct"),
        rhs=_named("fineJ_rhs"),
    ))
    add(IdentityEntry(
        id="lem-2.1",
        anchor="analytic continuation of the b-parameterized quotient sum",
        lhs=_named("lem21_lhs"),
        rhs=_named("lem21_rhs"),
        specializations=_spec_rows("b", _B_VALUES),
        default_order=60,
    ))
    add(IdentityEntry(
        id="eq-before-ac",
        anchor="pre-continuation evaluation; b=1 is the divergence control",
        lhs=_named("lem21_lhs"),
        rhs=_before_ac_side,
        specializations=tuple(
            Specialization(
                label=f"b={v}",
                params=(("b", v),),
                expects_stall=(v == MONO_ONE),
                term_cap=20_000 if v == MONO_ONE else None,
            )
            for v in _B_VALUES
        ),
        default_order=60,
        takes_cap=True,
    ))
    add(IdentityEntry(
        id="eq-4parameter",
        anchor="four-parameter transformation in the vanishing-A limit, base q^2",
        lhs=_fourparam_lhs,
        rhs=_fourparam_rhs,
        specializations=(
            Specialization(
                label="B=q^2,a=q^-1,b=q",
                params=(("B", mono(1, 2)), ("a", mono(1, -1)), ("b", MONO_Q)),
            ),
            Specialization(
                label="B=q^2,a=q,b=q^2",
                params=(("B", mono(1, 2)), ("a", MONO_Q), ("b", mono(1, 2))),
            ),
        ),
        default_order=60,
    ))
    add(IdentityEntry(
        id="lem-3.1",
        anchor="closed form of sum (-1)^n q^(2n+1)/(1+q^(2n+1))",
        lhs=_lem31_lhs,
        rhs=_lem31_rhs,
    ))
    add(IdentityEntry(
        id="eq-2phi12",
        anchor="reindexing of the alternating quotient sum",
        lhs=_alt_q2_over_plus,
        rhs=_alt_q_over_plus2,
    ))
    add(IdentityEntry(
        id="eq-1psi1-sec3",
        anchor="Ramanujan 1psi1 bilateral evaluation, base q^2, split form",
        lhs=_psi_split_base2_lhs,
        rhs=_psi_product_base2_rhs,
    ))
    add(IdentityEntry(
        id="eq-final1729",
        anchor="evaluation of sum (-1)^n q^n/(1+q^(2n+2))",
        lhs=_alt_q_over_plus2,
        rhs=_final1729_rhs,
    ))
    add(IdentityEntry(
        id="eq-z-identity",
        anchor="z-parameterized product-plus-tail identity, odd monomials",
        lhs=_named("z_identity_lhs"),
        rhs=_named("z_identity_rhs"),
        specializations=_spec_rows("z", _Z_VALUES),
        default_order=60,
    ))
    add(IdentityEntry(
        id="eq-almost-spt",
        anchor="the double-derivative limit identity behind thm-1.3",
        lhs=_almost_spt_lhs,
        rhs=qf.sptg_bracket,
    ))
    add(IdentityEntry(
        id="eq-transf",
        anchor="rewriting chain, first equals last (intermediates are "
               "form-equivalent builders of No_plus_series)",
        lhs=_named_form("No_plus_series", 0),
        rhs=_named_form("No_plus_series", 6),
    ))
    add(IdentityEntry(
        id="eq-4para1",
        anchor="even-base quotient sum evaluated via the four-parameter limit",
        lhs=_named("even_base_quotient_sum"),
        rhs=_4para1_rhs,
    ))
    add(IdentityEntry(
        id="eq-2sums",
        anchor="positive-odd-rank sum split into the alternating q^(m^2) piece",
        lhs=_named_form("No_plus_series", 0),
        rhs=_2sums_rhs,
    ))
    add(IdentityEntry(
        id="entry-239",
        anchor="alternating q^(m^2) transformation with parameter a "
               "(Lost Notebook entry 2.3.9)",
        lhs=_named("entry239_lhs"),
        rhs=_named("entry239_rhs"),
        specializations=_spec_rows("a", _A_VALUES),
        default_order=60,
    ))
    add(IdentityEntry(
        id="eq-phi312",
        anchor="the base-1 alternating q^(m^2) sum through phi(-q)",
        lhs=_alt_sq_sum_base1,
        rhs=_phi312_rhs,
    ))
    add(IdentityEntry(
        id="eq-2.3.1",
        anchor="relation between phi(-q) and f(q) (Lost Notebook entry 2.3.1)",
        lhs=phi3_neg,
        rhs=_231_rhs,
    ))
    add(IdentityEntry(
        id="eq-suminf",
        anchor="the base-1 alternating q^(m^2) sum through f(q)",
        lhs=_alt_sq_sum_base1,
        rhs=_suminf_rhs,
    ))
    add(IdentityEntry(
        id="eq-g1",
        anchor="split two-color sum equals its combinatorial product form",
        lhs=_named_form("G_series", 0),
        rhs=_named_form("G_series", 2),
    ))
    add(IdentityEntry(
        id="eq-g2",
        anchor="positive-odd-rank sum equals the split two-color sum",
        lhs=_named_form("No_plus_series", 0),
        rhs=_named_form("G_series", 0),
    ))
    add(IdentityEntry(
        id="thm-6.1",
        anchor="odd-smallest-part series in closed form via phi(-q)",
        lhs=_named("Gprime_series"),
        rhs=_named("thm61_rhs"),
    ))
    add(IdentityEntry(
        id="eq-phi3m",
        anchor="shifted phi(-q) partial-fraction step",
        lhs=_phi3m_sum,
        rhs=_phi3m_rhs,
    ))
    add(IdentityEntry(
        id="eq-1psi1-sec6",
        anchor="Ramanujan 1psi1 bilateral evaluation with the paired tail, split form",
        lhs=_psi_split_sec6_lhs,
        rhs=_psi_product_sec6_rhs,
    ))
    add(IdentityEntry(
        id="eq-last1",
        anchor="closed form of the paired alternating tail",
        lhs=_pair_tail,
        rhs=_last1_rhs,
    ))
    add(IdentityEntry(
        id="eq-last2",
        anchor="odd-smallest-part series before the final tail evaluation",
        lhs=_named("Gprime_series"),
        rhs=_last2_rhs,
    ))
    add(IdentityEntry(
        id="eq-seriesf",
        anchor="odd-smallest-part series after continuing the quotient sum at b=1",
        lhs=_named("Gprime_series"),
        rhs=_seriesf_rhs,
    ))
    add(IdentityEntry(
        id="eq-beforephi",
        anchor="odd-smallest-part series with the alternating piece transformed",
        lhs=_named("Gprime_series"),
        rhs=_beforephi_rhs,
    ))
    return tuple(entries)


_CATALOG: Tuple[IdentityEntry, ...] = _build_catalog()
_BY_ID: Dict[str, IdentityEntry] = {e.id: e for e in _CATALOG}


def catalog() -> Tuple[IdentityEntry, ...]:
    """The complete, immutable identity catalog."""
    return _CATALOG


def get_entry(entry_id: str) -> IdentityEntry:
    try:
        return _BY_ID[entry_id]
    except KeyError:
        raise UnknownIdentity(entry_id) from None


# ----------------------------------------------------------------------
# verification


def _run_row(
    entry: IdentityEntry, spec: Specialization, order: int
) -> VerificationReport:
    params = spec.param_dict()
    kwargs = dict(params)
    start = time.perf_counter()

    def report(**kw) -> VerificationReport:
        elapsed = (time.perf_counter() - start) * 1000.0
        return VerificationReport(
            id=entry.id,
            specialization=spec.label,
            order=order,
            elapsed_ms=elapsed,
            expected_stall=spec.expects_stall,
            **kw,
        )

    try:
        lhs = entry.lhs(order, **kwargs)
        if entry.takes_cap and spec.term_cap is not None:
            rhs = entry.rhs(order, cap=spec.term_cap, **kwargs)
        else:
            rhs = entry.rhs(order, **kwargs)
    except TruncationStall as stall:
        if spec.expects_stall:
            return report(passed=True, first_mismatch=None, stalled=True)
        raise stall
    if spec.expects_stall:
        # completing without a stall means the negative control failed
        return report(
            passed=False,
            first_mismatch=None,
            error="expected TruncationStall, but evaluation completed",
        )
    ok, mismatch = lhs.equal_up_to(rhs, order)
    return report(passed=ok, first_mismatch=mismatch)


def verify(
    entry_id: str,
    specialization: Optional[str] = None,
    order: Optional[int] = None,
) -> VerificationReport:
    """Verify one catalog row; raises on unknown ids or unexpected stalls."""
    entry = get_entry(entry_id)
    spec = entry.specialization(specialization)
    return _run_row(entry, spec, order if order is not None else entry.default_order)


def _row_order(entry: IdentityEntry, order: Optional[int]) -> int:
    if order is None:
        return entry.default_order
    return min(order, entry.default_order)


def _rows(
    entries: Sequence[IdentityEntry], order: Optional[int]
) -> List[Tuple[IdentityEntry, Specialization, int]]:
    return [
        (entry, spec, _row_order(entry, order))
        for entry in entries
        for spec in entry.specializations
    ]


def _run_row_guarded(
    entry: IdentityEntry, spec: Specialization, order: int
) -> VerificationReport:
    try:
        return _run_row(entry, spec, order)
    except Exception as exc:  # aggregate without aborting the run
        return VerificationReport(
            id=entry.id,
            specialization=spec.label,
            order=order,
            passed=False,
            first_mismatch=None,
            elapsed_ms=0.0,
            stalled=isinstance(exc, TruncationStall),
            expected_stall=spec.expects_stall,
            error=f"{type(exc).__name__}: {exc}",
        )


def _worker(args: Tuple[str, Optional[str], int]) -> VerificationReport:
    entry_id, label, order = args
    entry = get_entry(entry_id)
    return _run_row_guarded(entry, entry.specialization(label), order)


def verify_all(
    order: Optional[int] = None,
    entries: Optional[Sequence[IdentityEntry]] = None,
    jobs: int = 1,
) -> List[VerificationReport]:
    """Verify every catalog row; never raises, failures become failed reports.

    ``order`` caps each row at its default order (specialized rows keep their
    smaller default), so ``verify_all(100)`` runs unparameterized entries at
    100 and specialized ones at 60.  Results are sorted by row id regardless
    of execution order.
    """
    rows = _rows(entries if entries is not None else _CATALOG, order)
    if jobs > 1 and entries is None and len(rows) > 1:
        import concurrent.futures

        args = [(e.id, s.label, o) for e, s, o in rows]
        with concurrent.futures.ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(_worker, args))
    else:
        reports = [_run_row_guarded(e, s, o) for e, s, o in rows]
    reports.sort(key=lambda r: (r.id, r.specialization or ""))
    return reports


def all_row_ids() -> List[str]:
    """Every id@specialization row name, in catalog order."""
    out = []
    for entry in _CATALOG:
        for spec in entry.specializations:
            out.append(entry.id if spec.label is None else f"{entry.id}@{spec.label}")
    return out
