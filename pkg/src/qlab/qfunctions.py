"""Named builders for the q-series used throughout the package.

Every catalog name resolves to one or more independent builder functions,
each of which returns an exact :class:`~qlab.series.LaurentSeries` at a
requested truncation order.  Names with several algebraically distinct
computable forms (different arrangements of the same series) expose all of
them through :func:`builder_forms`; the forms are cross-checked in the test
suite and must agree coefficient by coefficient.

The catalog covers the third-order mock theta functions f(q), omega(q) and
phi(q), the theta value phi(-q) = (q;q)_inf/(-q;q)_inf, the partition
generating function, smallest-part generating functions, the two-color
partition generating functions (even and odd smallest part), the even-rank
and positive-odd-rank generating functions, and Fine's numbers.

A few parameterized sums are exposed as well; their parameters are exact
monomials c*q^k supplied through :class:`Monomial`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, Mapping, Optional, Tuple

from .series import (
    DEFAULT_TERM_CAP,
    LaurentSeries,
    PochhammerSpec,
    monomial,
    one,
    pochhammer,
    sum_terms,
    zero,
)


class UnknownName(KeyError):
    """The requested series name is not in the catalog."""


class MissingParameter(ValueError):
    """A parameterized builder was invoked without a required parameter."""


# ----------------------------------------------------------------------
# monomial parameters


@dataclass(frozen=True)
class Monomial:
    """An exact monomial c*q^power used as a specialization value."""

    coeff: Fraction
    power: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", Fraction(self.coeff))
        if self.coeff == 0 and self.power != 0:
            raise ValueError("the zero monomial must carry power 0")

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0

    def pow(self, m: int) -> "Monomial":
        if m == 0:
            return Monomial(Fraction(1), 0)
        return Monomial(self.coeff**m, self.power * m)

    def inv(self) -> "Monomial":
        if self.is_zero:
            raise ZeroDivisionError("zero monomial has no inverse")
        return Monomial(1 / self.coeff, -self.power)

    def times(self, other: "Monomial") -> "Monomial":
        if self.is_zero or other.is_zero:
            return Monomial(Fraction(0), 0)
        return Monomial(self.coeff * other.coeff, self.power + other.power)

    def times_q(self, k: int) -> "Monomial":
        if self.is_zero:
            return self
        return Monomial(self.coeff, self.power + k)

    def to_series(self, order: int) -> LaurentSeries:
        # a monomial at or above the window top is zero on the window
        if self.is_zero or self.power >= order:
            return zero(order)
        return monomial(self.coeff, self.power, order)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        if self.power == 0:
            return str(self.coeff)
        q = "q" if self.power == 1 else f"q^{self.power}"
        if self.coeff == 1:
            return q
        if self.coeff == -1:
            return f"-{q}"
        return f"{self.coeff}*{q}"

    _PATTERN = re.compile(
        r"^\s*(?P<coeff>[+-]?\d+(?:/\d+)?)?\s*\*?\s*(?:(?P<neg>-)?q(?:\^(?P<pow>-?\d+))?)?\s*$"
    )

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse strings like ``0``, ``1``, ``q``, ``-q``, ``q^-1``, ``1/2*q^3``."""
        m = cls._PATTERN.match(text)
        if not m or (m.group("coeff") is None and m.group("neg") is None and "q" not in text):
            raise ValueError(f"cannot parse monomial {text!r}")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("neg"):
            coeff = -coeff
        power = 0
        if "q" in text:
            power = int(m.group("pow")) if m.group("pow") else 1
        return cls(coeff, power)


MONO_ZERO = Monomial(Fraction(0), 0)
MONO_ONE = Monomial(Fraction(1), 0)
MONO_Q = Monomial(Fraction(1), 1)


def mono(c, k: int = 0) -> Monomial:
    return Monomial(Fraction(c), k)


# ----------------------------------------------------------------------
# cached primitive products


@lru_cache(maxsize=None)
def qpoch(sign: int, offset: int, step: int, length: Optional[int], order: int) -> LaurentSeries:
    """Cached (sign*q^offset; q^step)_length truncated at ``order``."""
    return pochhammer(PochhammerSpec(sign, offset, step, length), order)


@lru_cache(maxsize=None)
def inv_qpoch(sign: int, offset: int, step: int, length: Optional[int], order: int) -> LaurentSeries:
    return qpoch(sign, offset, step, length, order).invert()


def one_minus(e: int, order: int) -> LaurentSeries:
    """The binomial 1 - q^e."""
    return qpoch(1, e, 1, 1, order)


def one_plus(e: int, order: int) -> LaurentSeries:
    """The binomial 1 + q^e."""
    return qpoch(-1, e, 1, 1, order)


def inv_one_minus(e: int, order: int) -> LaurentSeries:
    return inv_qpoch(1, e, 1, 1, order)


def inv_one_plus(e: int, order: int) -> LaurentSeries:
    return inv_qpoch(-1, e, 1, 1, order)


def poch_of_monomial(
    arg: Monomial, step: int, length: Optional[int], order: int
) -> LaurentSeries:
    """(arg; q^step)_length for a monomial argument with coefficient 0 or +-1."""
    if arg.is_zero:
        return one(order)
    if arg.coeff == 1:
        sign = 1
    elif arg.coeff == -1:
        sign = -1
    else:
        raise ValueError(f"unsupported product argument coefficient {arg.coeff}")
    return qpoch(sign, arg.power, step, length, order)


def smallest_part_exponent(n: int) -> int:
    """Exponent 3n(n+1)/2 of the theta-like tail terms; always integral."""
    prod = 3 * n * (n + 1)
    assert prod % 2 == 0, f"non-integral exponent at n={n}"
    return prod // 2


def fine_exponent(n: int) -> int:
    """Exponent n(3n+1)/2 of Fine's number sum; always integral."""
    prod = n * (3 * n + 1)
    assert prod % 2 == 0, f"non-integral exponent at n={n}"
    return prod // 2


# ----------------------------------------------------------------------
# Euler products and theta


def euler_product_direct(order: int) -> LaurentSeries:
    """(q;q)_inf as the literal product of binomials."""
    return qpoch(1, 1, 1, None, order)


def euler_product_pentagonal(order: int) -> LaurentSeries:
    """(q;q)_inf through the pentagonal number theorem (sparse sum)."""

    def term(k: int) -> LaurentSeries:
        if k == 0:
            return one(order)
        e1 = k * (3 * k - 1) // 2
        if e1 >= order:
            return zero(order)
        t = monomial((-1) ** k, e1, order)
        e2 = k * (3 * k + 1) // 2
        if e2 < order:
            t = t.add(monomial((-1) ** k, e2, order))
        return t

    return sum_terms(term, order)


@lru_cache(maxsize=None)
def euler_inv(order: int) -> LaurentSeries:
    """1/(q;q)_inf, the partition generating function (pentagonal fast path)."""
    return euler_product_pentagonal(order).invert()


def euler_inverse_direct(order: int) -> LaurentSeries:
    return euler_product_direct(order).invert()


def theta_phi_neg_sum(order: int) -> LaurentSeries:
    """sum over all integers n of (-1)^n q^(n^2), folded to n >= 0."""

    def term(n: int) -> LaurentSeries:
        if n == 0:
            return one(order)
        e = n * n
        if e >= order:
            return zero(order)
        return monomial(2 * (-1) ** n, e, order)

    return sum_terms(term, order)


@lru_cache(maxsize=None)
def theta_phi_neg_prod(order: int) -> LaurentSeries:
    """(q;q)_inf / (-q;q)_inf."""
    return euler_product_direct(order).mul(inv_qpoch(-1, 1, 1, None, order))


# ----------------------------------------------------------------------
# mock theta functions


def f3_def(order: int) -> LaurentSeries:
    """f(q) = sum q^(n^2) / (-q;q)_n^2, the principal third-order mock theta."""

    def term(n: int) -> LaurentSeries:
        k = n * n
        if k >= order:
            return zero(order)
        w = order - k
        den = qpoch(-1, 1, 1, n, w)
        return den.mul(den).invert().shift(k)

    return sum_terms(term, order)


def omega3_def(order: int) -> LaurentSeries:
    """omega(q) = sum q^(2n(n+1)) / (q;q^2)_{n+1}^2."""

    def term(n: int) -> LaurentSeries:
        k = 2 * n * (n + 1)
        if k >= order:
            return zero(order)
        w = order - k
        den = qpoch(1, 1, 2, n + 1, w)
        return den.mul(den).invert().shift(k)

    return sum_terms(term, order)


def omega3_rep_rhs(order: int) -> LaurentSeries:
    """The smallest-part style rewriting of omega(q).

    sum over n >= 1 of q^(n-1) / ((1-q^n) (q^{n+1};q)_n (q^{2n+2};q^2)_inf).
    """

    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = n - 1
        if k >= order:
            return zero(order)
        w = order - k
        den = one_minus(n, w).mul(qpoch(1, n + 1, 1, n, w)).mul(qpoch(1, 2 * n + 2, 2, None, w))
        return den.invert().shift(k)

    return sum_terms(term, order)


def phi3_def(order: int) -> LaurentSeries:
    """phi(q) = sum q^(n^2) / (-q^2;q^2)_n, third order."""

    def term(n: int) -> LaurentSeries:
        k = n * n
        if k >= order:
            return zero(order)
        w = order - k
        return inv_qpoch(-1, 2, 2, n, w).shift(k)

    return sum_terms(term, order)


@lru_cache(maxsize=None)
def phi3_neg(order: int) -> LaurentSeries:
    """phi(-q) = sum (-1)^n q^(n^2) / (-q^2;q^2)_n."""

    def term(n: int) -> LaurentSeries:
        k = n * n
        if k >= order:
            return zero(order)
        w = order - k
        return inv_qpoch(-1, 2, 2, n, w).shift_scale((-1) ** n, k)

    return sum_terms(term, order)


# ----------------------------------------------------------------------
# smallest-part generating functions


def spt_lhs(order: int) -> LaurentSeries:
    """sum q^n / ((1-q^n)^2 (q^{n+1};q)_inf): counts smallest parts."""

    def term(i: int) -> LaurentSeries:
        n = i + 1
        if n >= order:
            return zero(order)
        w = order - n
        b = one_minus(n, w)
        den = b.mul(b).mul(qpoch(1, n + 1, 1, None, w))
        return den.invert().shift(n)

    return sum_terms(term, order)


def spt_rhs(order: int) -> LaurentSeries:
    """The rank-moment style evaluation of the smallest-part sum.

    The theta-like tail carries q^(n(3n+1)/2); the coefficient check against
    the enumerated smallest-part counts pins that exponent down.
    """

    def t1(i: int) -> LaurentSeries:
        n = i + 1
        if n >= order:
            return zero(order)
        return inv_one_minus(n, order - n).shift_scale(n, n)

    def t2(i: int) -> LaurentSeries:
        n = i + 1
        k = fine_exponent(n)
        if k >= order:
            return zero(order)
        w = order - k
        body = inv_one_minus(n, w)
        body = body.mul(body)
        body = body.add(body.shift(n))
        return body.shift_scale((-1) ** n, k)

    s = sum_terms(t1, order).add(sum_terms(t2, order))
    return euler_inv(order).mul(s)


def sptG_lhs(order: int) -> LaurentSeries:
    """sum q^(2n) / ((1-q^(2n))^2 (-q^{n+1};q)_n (q^{n+1};q)_inf).

    Weighted by smallest-part multiplicity over the even-smallest-part
    two-color partitions.
    """

    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        b = one_minus(2 * n, w)
        den = b.mul(b).mul(qpoch(-1, n + 1, 1, n, w)).mul(qpoch(1, n + 1, 1, None, w))
        return den.invert().shift(k)

    return sum_terms(term, order)


def sptg_bracket(order: int) -> LaurentSeries:
    """sum n q^(2n)/(1-q^(2n)) + sum (-1)^n (1+q^n) q^(3n(n+1)/2)/(1-q^(2n))^2."""

    def t1(i: int) -> LaurentSeries:
        n = i + 1
        k = 2 * n
        if k >= order:
            return zero(order)
        return inv_one_minus(2 * n, order - k).shift_scale(n, k)

    def t2(i: int) -> LaurentSeries:
        n = i + 1
        k = smallest_part_exponent(n)
        if k >= order:
            return zero(order)
        w = order - k
        body = inv_one_minus(2 * n, w)
        body = body.mul(body)
        body = body.add(body.shift(n))
        return body.shift_scale((-1) ** n, k)

    return sum_terms(t1, order).add(sum_terms(t2, order))


def sptG_rhs(order: int) -> LaurentSeries:
    """Companion evaluation of sptG_lhs with the same theta-like tail."""
    return euler_inv(order).mul(sptg_bracket(order))


# ----------------------------------------------------------------------
# two-color partition generating functions and rank series


def _g_form_split(order: int) -> LaurentSeries:
    # sum q^(2n) / ((1-q^(2n)) (-q^{n+1};q)_n (q^{n+1};q)_inf)
    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        den = one_minus(2 * n, w).mul(qpoch(-1, n + 1, 1, n, w)).mul(qpoch(1, n + 1, 1, None, w))
        return den.invert().shift(k)

    return sum_terms(term, order)


def _g_form_merged(order: int) -> LaurentSeries:
    # sum q^(2n) / ((1-q^(2n)) (q^{2n+2};q^2)_n (q^{2n+1};q)_inf)
    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        den = one_minus(2 * n, w).mul(qpoch(1, 2 * n + 2, 2, n, w)).mul(qpoch(1, 2 * n + 1, 1, None, w))
        return den.invert().shift(k)

    return sum_terms(term, order)


def _g_form_combinatorial(order: int) -> LaurentSeries:
    # sum q^(2n) / ((q^{2n+2};q^2)_n (q^{2n};q)_inf): even smallest part 2n,
    # blue parts >= 2n, red parts even in (2n, 4n]
    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        den = qpoch(1, 2 * n + 2, 2, n, w).mul(qpoch(1, 2 * n, 1, None, w))
        return den.invert().shift(k)

    return sum_terms(term, order)


def _no_plus_form1(order: int) -> LaurentSeries:
    # sum q^(2n) / ((q^{2n};q^2)_{n+1} (q^{2n+1};q)_inf)
    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        den = qpoch(1, 2 * n, 2, n + 1, w).mul(qpoch(1, 2 * n + 1, 1, None, w))
        return den.invert().shift(k)

    return sum_terms(term, order)


def _no_plus_form3(order: int) -> LaurentSeries:
    # sum q^(2n) / ((-q^n;q)_{n+1} (q^n;q)_inf)
    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        den = qpoch(-1, n, 1, n + 1, w).mul(qpoch(1, n, 1, None, w))
        return den.invert().shift(k)

    return sum_terms(term, order)


def _no_plus_form4(order: int) -> LaurentSeries:
    # q^2 sum_{n>=0} q^(2n) / ((-q^{n+1};q)_{n+2} (q^{n+1};q)_inf)
    def term(n: int) -> LaurentSeries:
        k = 2 * n + 2
        if k >= order:
            return zero(order)
        w = order - k
        den = qpoch(-1, n + 1, 1, n + 2, w).mul(qpoch(1, n + 1, 1, None, w))
        return den.invert().shift(k)

    return sum_terms(term, order)


def _no_plus_form5(order: int) -> LaurentSeries:
    # (q^2/(q;q)_inf) sum (q;q)_n q^(2n) / (-q^{n+1};q)_{n+2}
    if order <= 2:
        return zero(order)
    w = order - 2

    def term(n: int) -> LaurentSeries:
        k = 2 * n
        if k >= w:
            return zero(w)
        ww = w - k
        return qpoch(1, 1, 1, n, ww).mul(inv_qpoch(-1, n + 1, 1, n + 2, ww)).shift(k)

    return euler_inv(w).mul(sum_terms(term, w)).shift(2)


def _no_plus_form6(order: int) -> LaurentSeries:
    # (q^2/(q;q)_inf) sum (q;q)_n (-q;q)_n q^(2n) / (-q;q)_{2n+2}
    if order <= 2:
        return zero(order)
    w = order - 2

    def term(n: int) -> LaurentSeries:
        k = 2 * n
        if k >= w:
            return zero(w)
        ww = w - k
        num = qpoch(1, 1, 1, n, ww).mul(qpoch(-1, 1, 1, n, ww))
        return num.mul(inv_qpoch(-1, 1, 1, 2 * n + 2, ww)).shift(k)

    return euler_inv(w).mul(sum_terms(term, w)).shift(2)


def _no_plus_form7(order: int) -> LaurentSeries:
    # q^2 / ((q;q)_inf (1+q)(1+q^2)) times the even-base quotient sum
    if order <= 2:
        return zero(order)
    w = order - 2
    pref = euler_inv(w).mul(inv_one_plus(1, w)).mul(inv_one_plus(2, w))
    return pref.mul(even_base_quotient_sum(w)).shift(2)


def even_base_quotient_sum(order: int) -> LaurentSeries:
    """sum (q^2;q^2)_n q^(2n) / ((-q^3;q^2)_n (-q^4;q^2)_n)."""

    def term(n: int) -> LaurentSeries:
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        num = qpoch(1, 2, 2, n, w)
        den = qpoch(-1, 3, 2, n, w).mul(qpoch(-1, 4, 2, n, w))
        return num.mul(den.invert()).shift(k)

    return sum_terms(term, order)


def f3_newrep_rhs(order: int) -> LaurentSeries:
    """1/(q;q)_inf - 4 * (positive-odd-rank generating sum)."""
    return euler_inv(order).sub(_no_plus_form1(order).scale(4))


def gprime_series(order: int) -> LaurentSeries:
    """sum_{n>=0} q^(2n+1) / ((q^{2n+1};q)_inf (q^{2n+2};q^2)_n).

    Odd smallest part 2n+1, blue parts >= 2n+1, red parts even in (2n, 4n].
    """

    def term(n: int) -> LaurentSeries:
        k = 2 * n + 1
        if k >= order:
            return zero(order)
        w = order - k
        den = qpoch(1, 2 * n + 1, 1, None, w).mul(qpoch(1, 2 * n + 2, 2, n, w))
        return den.invert().shift(k)

    return sum_terms(term, order)


def ne_series_rhs(order: int) -> LaurentSeries:
    """Even-rank generating function: 1/(q;q)_inf - 2 * (split two-color sum)."""
    return euler_inv(order).sub(_g_form_split(order).scale(2))


def fineJ_direct(order: int) -> LaurentSeries:
    """sum (-1)^n q^(n(3n+1)/2) / (1+q^n): Fine's numbers."""

    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = fine_exponent(n)
        if k >= order:
            return zero(order)
        return inv_one_plus(n, order - k).shift_scale((-1) ** n, k)

    return sum_terms(term, order)


def fineJ_rhs(order: int) -> LaurentSeries:
    """- sum (q;q)_n q^(2n) / ((1-q^(2n)) (-q^{n+1};q)_n)."""

    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        num = qpoch(1, 1, 1, n, w)
        den = one_minus(2 * n, w).mul(qpoch(-1, n + 1, 1, n, w))
        return num.mul(den.invert()).shift(k)

    return sum_terms(term, order).neg()


def fineJ_from_f3(order: int) -> LaurentSeries:
    """(f(q) (q;q)_inf - 1) / 4."""
    prod = f3_def(order).mul(euler_product_direct(order))
    return (prod - 1).scale(Fraction(1, 4))


def thm61_rhs(order: int) -> LaurentSeries:
    """Closed evaluation of the odd-smallest-part two-color series.

    q^2 - q(1+q) phi(-q) + q(3-q)/(2 (q;q)_inf)
        + q(1+q)(q^2;q^2)_inf / (2 (-q;q)_inf^3).
    """
    phi = phi3_neg(order)
    t1 = monomial(1, 2, order + 2)
    t2 = phi.shift(1).add(phi.shift(2)).neg()
    e = euler_inv(order)
    t3 = e.shift_scale(Fraction(3, 2), 1).add(e.shift_scale(Fraction(-1, 2), 2))
    u = qpoch(1, 2, 2, None, order).mul(inv_qpoch(-1, 1, 1, None, order).pow(3))
    t4 = u.shift(1).add(u.shift(2)).scale(Fraction(1, 2))
    return t1.add(t2).add(t3).add(t4)


# ----------------------------------------------------------------------
# parameterized sums


def lem21_lhs(order: int, b: Monomial) -> LaurentSeries:
    """sum (q^2;q^2)_n q^(2n) / ((-q;q^2)_n (-b q^2;q^2)_n)."""
    barg = Monomial(-b.coeff, b.power + 2) if not b.is_zero else MONO_ZERO

    def term(n: int) -> LaurentSeries:
        k = 2 * n
        if k >= order:
            return zero(order)
        w = order - k
        num = qpoch(1, 2, 2, n, w)
        den = qpoch(-1, 1, 2, n, w).mul(poch_of_monomial(barg, 2, n, w))
        return num.mul(den.invert()).shift(k)

    return sum_terms(term, order)


def _lem21_theta_part(order: int, b: Monomial) -> LaurentSeries:
    # -q (q^2;q^2)_inf / ((-q;q^2)_inf (-b q^2;q^2)_inf)
    #    * sum_{m>=0} (-1)^m b^m q^(m^2+2m) / (-q^3;q^2)_{m+1}
    barg = Monomial(-b.coeff, b.power + 2) if not b.is_zero else MONO_ZERO
    pref = qpoch(1, 2, 2, None, order).mul(
        qpoch(-1, 1, 2, None, order).mul(poch_of_monomial(barg, 2, None, order)).invert()
    )

    def term(m: int) -> LaurentSeries:
        bm = b.pow(m)
        if bm.is_zero:
            return zero(order)
        k = m * m + 2 * m + bm.power
        if k >= order:
            return zero(order)
        w = order - k
        return inv_qpoch(-1, 3, 2, m + 1, w).shift_scale((-1) ** m * bm.coeff, k)

    return pref.mul(sum_terms(term, order)).shift(1).neg()


def lem21_rhs(order: int, b: Monomial) -> LaurentSeries:
    """(1+q)/(1+q^3) + theta part + the continued tail sum.

    Valid for any monomial b; this is the analytically continued form whose
    tail terms carry q^(2m+1), so it converges formally even at b = 1.
    """
    part1 = one_plus(1, order).mul(inv_one_plus(3, order))
    part2 = _lem21_theta_part(order, b)

    def tail(i: int) -> LaurentSeries:
        m = i + 1
        bm = b.pow(m)
        if bm.is_zero:
            return zero(order)
        k = 2 * m + 1 + bm.power
        if k >= order:
            return zero(order)
        w = order - k
        body = inv_one_plus(2 * m + 1, w).mul(inv_one_plus(2 * m + 3, w))
        return body.shift_scale((-1) ** m * bm.coeff, k)

    part3 = one_plus(1, order).mul(one_minus(2, order)).mul(sum_terms(tail, order))
    return part1.add(part2).add(part3)


def before_ac_rhs(order: int, b: Monomial, cap: int = DEFAULT_TERM_CAP) -> LaurentSeries:
    """The pre-continuation form: theta part + (1+b)(1+q) sum (-b)^m/(1+q^{2m+3}).

    At b = 1 the final sum has constant-valuation terms and is formally
    divergent; evaluation then raises TruncationStall at the cap.
    """
    part1 = _lem21_theta_part(order, b)

    def tail(m: int) -> LaurentSeries:
        bm = b.pow(m)
        if bm.is_zero:
            return zero(order)
        k = bm.power
        if k >= order:
            return zero(order)
        w = order - k
        return inv_one_plus(2 * m + 3, w).shift_scale((-1) ** m * bm.coeff, k)

    pref = one_plus(1, order).add(
        b.to_series(order).add(b.to_series(order).shift(1)) if not b.is_zero else zero(order)
    )
    part2 = pref.mul(sum_terms(tail, order, cap=cap))
    return part1.add(part2)


def entry239_lhs(order: int, a: Monomial) -> LaurentSeries:
    """sum (-1)^m q^(m^2) / (-a q^2;q^2)_m."""
    arg = Monomial(-a.coeff, a.power + 2) if not a.is_zero else MONO_ZERO

    def term(m: int) -> LaurentSeries:
        k = m * m
        if k >= order:
            return zero(order)
        w = order - k
        return poch_of_monomial(arg, 2, m, w).invert().shift_scale((-1) ** m, k)

    return sum_terms(term, order)


def entry239_rhs(order: int, a: Monomial) -> LaurentSeries:
    """(1+a) sum (-1)^(m-1) q^(m^2) / (-a q;q^2)_m + phi(-q)/(-a q;q)_inf."""
    arg = Monomial(-a.coeff, a.power + 1) if not a.is_zero else MONO_ZERO

    def term(i: int) -> LaurentSeries:
        m = i + 1
        k = m * m
        if k >= order:
            return zero(order)
        w = order - k
        return poch_of_monomial(arg, 2, m, w).invert().shift_scale((-1) ** (m - 1), k)

    s = sum_terms(term, order)
    pref = one(order).add(a.to_series(order)) if not a.is_zero else one(order)
    t = theta_phi_neg_prod(order).mul(poch_of_monomial(arg, 1, None, order).invert())
    return pref.mul(s).add(t)


def _z_pad(z: Monomial) -> int:
    # total Laurent depth of (z^{-1};q^2)_inf for z = q^j, j odd positive
    j = z.power
    return ((j + 1) // 2) ** 2


def z_identity_lhs(order: int, z: Monomial) -> LaurentSeries:
    """sum (z;q^2)_n (z^{-1};q^2)_n q^(2n) / ((q^2;q^2)_n (-q;q)_{2n})."""
    pad = _z_pad(z)

    def term(n: int) -> LaurentSeries:
        k = 2 * n
        if k - pad >= order:
            return zero(order)
        w = order - k + pad
        num = poch_of_monomial(z, 2, n, w).mul(poch_of_monomial(z.inv(), 2, n, w))
        den = qpoch(1, 2, 2, n, w).mul(qpoch(-1, 1, 1, 2 * n, w))
        t = num.mul(den.invert()).shift(k)
        if t.min_exp >= order:
            return zero(order)
        return t

    return sum_terms(term, order)


def z_identity_rhs(order: int, z: Monomial) -> LaurentSeries:
    """The paired product form with the theta-like tail, for monomial z.

    (1/(q^2;q^2)_inf^2) [ (z^{-1}q^2;q^2)_inf (z q^2;q^2)_inf
      + sum_{n>=1} (-1)^n (1+q^n) (z^{-1};q^2)_inf (z;q^2)_inf
          q^(3n(n+1)/2) / ((1-z q^(2n)) (1-q^(2n)/z)) ]
    """
    pad = 3 * _z_pad(z) + 4
    w = order + pad
    inv_sq = inv_qpoch(1, 2, 2, None, w).pow(2)
    head = poch_of_monomial(z.inv().times_q(2), 2, None, w).mul(
        poch_of_monomial(z.times_q(2), 2, None, w)
    )
    wings = poch_of_monomial(z.inv(), 2, None, w).mul(poch_of_monomial(z, 2, None, w))

    def term(i: int) -> LaurentSeries:
        n = i + 1
        k = smallest_part_exponent(n)
        if k >= order + pad:
            return zero(w)
        u = one_minus(2 * n + z.power, w).mul(one_minus(2 * n - z.power, w)).invert()
        body = wings.mul(u)
        body = body.add(body.shift(n))
        return body.shift_scale((-1) ** n, k)

    tail = sum_terms(term, order)
    return inv_sq.mul(head.add(tail))

# ----------------------------------------------------------------------
# the name catalog


@dataclass(frozen=True)
class SeriesDef:
    """One catalog row: a name, its builder forms, and its parameter names."""

    name: str
    summary: str
    forms: Tuple[Callable[..., LaurentSeries], ...]
    params: Tuple[str, ...] = ()


_CATALOG: Dict[str, SeriesDef] = {}


def _register(name: str, summary: str, *forms: Callable[..., LaurentSeries], params: Tuple[str, ...] = ()) -> None:
    if name in _CATALOG:
        raise ValueError(f"duplicate series name {name}")
    _CATALOG[name] = SeriesDef(name, summary, tuple(forms), params)


_register(
    "f3_def",
    "third-order mock theta f(q) = sum q^(n^2)/(-q;q)_n^2",
    f3_def,
)
_register(
    "f3_newrep_rhs",
    "partition gf minus four times the positive-odd-rank sum",
    f3_newrep_rhs,
)
_register(
    "omega3_def",
    "third-order mock theta omega(q) = sum q^(2n(n+1))/(q;q^2)_{n+1}^2",
    omega3_def,
)
_register(
    "omega3_rep_rhs",
    "smallest-part style rewriting of omega(q)",
    omega3_rep_rhs,
)
_register(
    "phi3_def",
    "third-order mock theta phi(q) = sum q^(n^2)/(-q^2;q^2)_n",
    phi3_def,
)
_register(
    "phi3_neg",
    "phi(-q), the alternating form of phi3_def",
    phi3_neg,
)
_register(
    "theta_phi_neg",
    "theta value sum (-1)^n q^(n^2) = (q;q)_inf/(-q;q)_inf",
    theta_phi_neg_sum,
    theta_phi_neg_prod,
)
_register(
    "euler_product",
    "(q;q)_inf: literal product and pentagonal sparse sum",
    euler_product_direct,
    euler_product_pentagonal,
)
_register(
    "euler_inverse",
    "1/(q;q)_inf, the partition generating function",
    euler_inv,
    euler_inverse_direct,
)
_register(
    "spt_lhs",
    "smallest-part counting sum q^n/((1-q^n)^2 (q^{n+1};q)_inf)",
    spt_lhs,
)
_register(
    "spt_rhs",
    "evaluated form of the smallest-part sum",
    spt_rhs,
)
_register(
    "sptG_lhs",
    "smallest-part counting sum over even-smallest two-color partitions",
    sptG_lhs,
)
_register(
    "sptG_rhs",
    "evaluated form of the two-color smallest-part sum",
    sptG_rhs,
)
_register(
    "G_series",
    "two-color partitions with even smallest part: three sum forms",
    _g_form_split,
    _g_form_merged,
    _g_form_combinatorial,
)
_register(
    "Gprime_series",
    "two-color partitions with odd smallest part",
    gprime_series,
)
_register(
    "No_plus_series",
    "positive-odd-rank generating function and its rewriting chain",
    _no_plus_form1,
    _g_form_split,
    _no_plus_form3,
    _no_plus_form4,
    _no_plus_form5,
    _no_plus_form6,
    _no_plus_form7,
)
_register(
    "Ne_series_rhs",
    "even-rank generating function (constant term counts the empty partition)",
    ne_series_rhs,
)
_register(
    "fineJ_direct",
    "Fine's numbers: sum (-1)^n q^(n(3n+1)/2)/(1+q^n)",
    fineJ_direct,
)
_register(
    "fineJ_rhs",
    "Fine's numbers as a two-color style sum",
    fineJ_rhs,
)
_register(
    "fineJ_from_f3",
    "Fine's numbers extracted from f(q)(q;q)_inf",
    fineJ_from_f3,
)
_register(
    "thm61_rhs",
    "closed evaluation of the odd-smallest-part two-color series",
    thm61_rhs,
)
_register(
    "lem21_lhs",
    "b-parameterized quotient sum (q^2;q^2)_n q^(2n)/((-q;q^2)_n(-bq^2;q^2)_n)",
    lem21_lhs,
    params=("b",),
)
_register(
    "lem21_rhs",
    "analytically continued evaluation of lem21_lhs (valid at b=1)",
    lem21_rhs,
    params=("b",),
)
_register(
    "before_ac_rhs",
    "pre-continuation evaluation of lem21_lhs (divergent at b=1)",
    before_ac_rhs,
    params=("b",),
)
_register(
    "z_identity_lhs",
    "z-parameterized quotient sum with (z;q^2)_n(z^{-1};q^2)_n",
    z_identity_lhs,
    params=("z",),
)
_register(
    "z_identity_rhs",
    "product-plus-tail evaluation of z_identity_lhs",
    z_identity_rhs,
    params=("z",),
)
_register(
    "entry239_lhs",
    "a-parameterized alternating q^(m^2) sum",
    entry239_lhs,
    params=("a",),
)
_register(
    "entry239_rhs",
    "three-term transformation of entry239_lhs",
    entry239_rhs,
    params=("a",),
)
_register(
    "even_base_quotient_sum",
    "sum (q^2;q^2)_n q^(2n)/((-q^3;q^2)_n(-q^4;q^2)_n)",
    even_base_quotient_sum,
)


def names() -> Tuple[str, ...]:
    """All registered series names, in registration order."""
    return tuple(_CATALOG)


def series_def(name: str) -> SeriesDef:
    try:
        return _CATALOG[name]
    except KeyError:
        raise UnknownName(name) from None


def builder_forms(name: str) -> Tuple[Callable[..., LaurentSeries], ...]:
    """Every independent builder form registered for ``name``."""
    return series_def(name).forms


_BUILD_MEMO: Dict[tuple, LaurentSeries] = {}


def build(
    name: str,
    order: int,
    params: Optional[Mapping[str, Monomial]] = None,
    form: int = 0,
) -> LaurentSeries:
    """Evaluate a named series at the requested truncation order.

    ``params`` supplies monomial values for parameterized names and must
    match the declared parameter list exactly.
    """
    if order < 1:
        raise ValueError(f"order must be positive, got {order}")
    sdef = series_def(name)
    given = dict(params or {})
    if set(given) != set(sdef.params):
        missing = set(sdef.params) - set(given)
        if missing:
            raise MissingParameter(f"{name} needs parameters {sorted(missing)}")
        raise MissingParameter(
            f"{name} takes parameters {list(sdef.params)}, got {sorted(given)}"
        )
    key = (name, form, order, tuple(sorted((k, v) for k, v in given.items())))
    hit = _BUILD_MEMO.get(key)
    if hit is not None:
        return hit
    result = sdef.forms[form](order, **given)
    if result.order < order:
        raise InvalidWindowContract(name, result.order, order)
    _BUILD_MEMO.setdefault(key, result)
    return result


class InvalidWindowContract(AssertionError):
    """A builder delivered a smaller window than requested (internal bug)."""

    def __init__(self, name: str, got: int, wanted: int):
        super().__init__(f"{name} delivered order {got}, wanted {wanted}")
