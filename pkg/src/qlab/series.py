"""Exact truncated Laurent series in q over arbitrary-precision rationals.

The single value type is :class:`LaurentSeries`: a finite window of exact
rational coefficients together with the bound below which those coefficients
are guaranteed correct.  All ring operations track windows pessimistically,
so every coefficient that can be read out of a series is exact; nothing is
ever approximated with floating point.

Windows.  A series stores coefficients for exponents ``min_exp <= k < order``.
Coefficients below ``min_exp`` are exactly zero; coefficients at ``order`` and
above are unknown.  Binary operations shrink the window to the range on which
the result is fully determined: sums keep ``min(a.order, b.order)``, products
keep ``min(a.order + b.min_exp, b.order + a.min_exp)``.

Representation.  Coefficients are stored as integers over a single positive
common denominator, which keeps the hot convolution loops in plain integer
arithmetic; :class:`fractions.Fraction` values are materialised only at the
API boundary.  The leading stored coefficient is nonzero, except that a
series which is zero on its whole window is stored with an empty coefficient
block and ``min_exp == order``.

Everything here is immutable and side-effect free, so series may be shared
freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Callable, NamedTuple, Optional, Sequence, Tuple, Union

Rational = Union[int, Fraction]

#: Default bound on term evaluations in :func:`sum_terms` before a formally
#: divergent sum is reported via :class:`TruncationStall`.
DEFAULT_TERM_CAP = 100_000


class SeriesError(Exception):
    """Base class for series arithmetic errors."""


class InvalidWindow(SeriesError):
    """A requested window is empty or inconsistent with the data."""


class NotInvertible(SeriesError):
    """Inversion of a series whose leading coefficient is unavailable or zero."""


class OutOfWindow(SeriesError):
    """A coefficient beyond the determined window was requested."""


class TruncationStall(SeriesError):
    """A term sum failed to leave the window within the term cap.

    This is the formal-divergence signal: the terms of the sum keep
    contributing below the truncation order instead of escaping above it.
    """


class Mismatch(NamedTuple):
    """First disagreeing coefficient found by :meth:`LaurentSeries.equal_up_to`."""

    exponent: int
    lhs: Fraction
    rhs: Fraction


class LaurentSeries:
    """A truncated formal Laurent series with exact rational coefficients.

    Instances are canonical: the coefficient stored at ``min_exp`` is nonzero
    unless the series is zero on its whole window, in which case the window
    is collapsed to ``min_exp == order``.  Construct via :func:`monomial`,
    :func:`pochhammer`, :func:`sum_terms` or :meth:`from_coeffs`.
    """

    __slots__ = ("min_exp", "nums", "den", "order")

    min_exp: int
    nums: Tuple[int, ...]
    den: int
    order: int

    def __init__(self, min_exp: int, coeffs: Sequence[Rational], order: int):
        if order - min_exp != len(coeffs):
            raise InvalidWindow(
                f"window [{min_exp}, {order}) needs {order - min_exp} "
                f"coefficients, got {len(coeffs)}"
            )
        den = 1
        for c in coeffs:
            if isinstance(c, Fraction):
                d = c.denominator
                den = den // gcd(den, d) * d
        nums = [
            (c.numerator * (den // c.denominator) if isinstance(c, Fraction) else c * den)
            for c in coeffs
        ]
        src = _make(min_exp, nums, den, order)
        object.__setattr__(self, "min_exp", src.min_exp)
        object.__setattr__(self, "nums", src.nums)
        object.__setattr__(self, "den", src.den)
        object.__setattr__(self, "order", src.order)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("LaurentSeries is immutable")

    @classmethod
    def from_coeffs(
        cls, min_exp: int, coeffs: Sequence[Rational], order: int
    ) -> "LaurentSeries":
        """Build a series from explicit window data (validated, normalised)."""
        return cls(min_exp, coeffs, order)

    # ------------------------------------------------------------------
    # inspection

    @property
    def is_zero(self) -> bool:
        """True when every coefficient on the window is zero."""
        return not self.nums

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        """The window coefficients, lowest exponent first, as Fractions."""
        d = self.den
        return tuple(Fraction(n, d) for n in self.nums)

    def _num_at(self, k: int) -> int:
        i = k - self.min_exp
        if 0 <= i < len(self.nums):
            return self.nums[i]
        return 0

    def coefficient(self, k: int) -> Fraction:
        """Exact coefficient of q^k; zero below the window, error at/above ``order``."""
        if k >= self.order:
            raise OutOfWindow(f"coefficient {k} requested, window ends at {self.order}")
        return Fraction(self._num_at(k), self.den)

    def equal_up_to(
        self, other: "LaurentSeries", order: int
    ) -> Tuple[bool, Optional[Mismatch]]:
        """Compare coefficients for all exponents below ``order``.

        Returns ``(True, None)`` on agreement, otherwise ``(False, mismatch)``
        with the smallest disagreeing exponent and both values.
        """
        if order > self.order or order > other.order:
            raise OutOfWindow(
                f"comparison order {order} exceeds windows "
                f"{self.order} / {other.order}"
            )
        lo = min(self.min_exp, other.min_exp)
        da, db = self.den, other.den
        for k in range(lo, order):
            a = self._num_at(k) * db
            b = other._num_at(k) * da
            if a != b:
                return False, Mismatch(k, self.coefficient(k), other.coefficient(k))
        return True, None

    # ------------------------------------------------------------------
    # ring operations

    def add(self, other: "LaurentSeries") -> "LaurentSeries":
        mo = min(self.order, other.order)
        me = min(self.min_exp, other.min_exp, mo)
        if mo <= me:
            return _zero(mo)
        da, db = self.den, other.den
        if da == db:
            den, fa, fb = da, 1, 1
        else:
            g = gcd(da, db)
            den = da // g * db
            fa, fb = den // da, den // db
        out = [0] * (mo - me)
        base = self.min_exp - me
        for i, x in enumerate(self.nums):
            j = base + i
            if j >= mo - me:
                break
            if x:
                out[j] += x * fa
        base = other.min_exp - me
        for i, x in enumerate(other.nums):
            j = base + i
            if j >= mo - me:
                break
            if x:
                out[j] += x * fb
        return _make(me, out, den, mo)

    def neg(self) -> "LaurentSeries":
        return _raw(self.min_exp, tuple(-x for x in self.nums), self.den, self.order)

    def sub(self, other: "LaurentSeries") -> "LaurentSeries":
        return self.add(other.neg())

    def scale(self, c: Rational) -> "LaurentSeries":
        """Multiply every coefficient by the exact rational ``c``."""
        c = Fraction(c)
        if not c:
            return _zero(self.order)
        cn, cd = c.numerator, c.denominator
        return _make(self.min_exp, [x * cn for x in self.nums], self.den * cd, self.order)

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by q^k exactly; the window translates with no loss."""
        return _raw(self.min_exp + k, self.nums, self.den, self.order + k)

    def shift_scale(self, c: Rational, k: int) -> "LaurentSeries":
        """Multiply by the exact monomial c*q^k; the window translates by k."""
        return self.scale(c).shift(k)

    def mul(self, other: "LaurentSeries") -> "LaurentSeries":
        me = self.min_exp + other.min_exp
        mo = min(self.order + other.min_exp, other.order + self.min_exp)
        if mo <= me:
            return _zero(mo)
        a, b = self.nums, other.nums
        if len(a) > len(b):
            a, b = b, a
        length = mo - me  # equals min(len(a), len(b))
        out = [0] * length
        for i, ai in enumerate(a):
            if ai:
                m = length - i
                out[i:] = [x + ai * y for x, y in zip(out[i:], b[:m])]
        return _make(me, out, self.den * other.den, mo)

    def invert(self) -> "LaurentSeries":
        """Multiplicative inverse on the determined window.

        For a series known on ``[m, N)`` with nonzero leading coefficient the
        inverse is known on ``[-m, N - 2m)``, which is exactly the window on
        which ``self.mul(result)`` evaluates to 1.
        """
        if not self.nums:
            raise NotInvertible("series is zero on its window")
        a = self.nums
        lead = a[0]
        n = len(a)
        sparse = [(i, ai) for i, ai in enumerate(a) if ai and i > 0]
        if lead == 1 or lead == -1:
            inv = [0] * n
            inv[0] = lead
            for k in range(1, n):
                s = 0
                for i, ai in sparse:
                    if i > k:
                        break
                    s += ai * inv[k - i]
                if s:
                    inv[k] = -lead * s
            nums = [self.den * x for x in inv]
            den = 1
        else:
            # scaled recurrence keeps everything integral: c[k] are the inverse
            # coefficients times lead**(k+1)
            c = [0] * n
            c[0] = 1
            for k in range(1, n):
                s = 0
                for i, ai in sparse:
                    if i > k:
                        break
                    s += ai * c[k - i] * lead ** (i - 1)
                c[k] = -s
            nums = [self.den * c[k] * lead ** (n - 1 - k) for k in range(n)]
            den = lead**n
        m = self.min_exp
        return _make(-m, nums, den, self.order - 2 * m)

    def substitute_power(self, k: int) -> "LaurentSeries":
        """Replace q by q^k (k >= 1): coefficients move to k-times exponents."""
        if k < 1:
            raise ValueError("substitute_power requires k >= 1")
        if k == 1 or not self.nums:
            return _raw(self.min_exp * k, self.nums, self.den, self.order * k)
        out = [0] * (k * len(self.nums))
        for i, x in enumerate(self.nums):
            out[i * k] = x
        return _make(self.min_exp * k, out, self.den, self.order * k)

    def pow(self, e: int) -> "LaurentSeries":
        """Repeated multiplication, e >= 1."""
        if e < 1:
            raise ValueError("pow requires a positive exponent")
        result = self
        for _ in range(e - 1):
            result = result.mul(self)
        return result

    # ------------------------------------------------------------------
    # operator sugar

    def _coerce(self, other: object) -> Optional["LaurentSeries"]:
        if isinstance(other, LaurentSeries):
            return other
        if isinstance(other, (int, Fraction)):
            # a constant is known everywhere, so the window stays ours;
            # with the window top at or below 0 the constant is invisible
            if other and self.order > 0:
                return monomial(other, 0, self.order)
            return _zero(self.order)
        return None

    def __add__(self, other: object) -> "LaurentSeries":
        o = self._coerce(other)
        return NotImplemented if o is None else self.add(o)

    __radd__ = __add__

    def __sub__(self, other: object) -> "LaurentSeries":
        o = self._coerce(other)
        return NotImplemented if o is None else self.sub(o)

    def __rsub__(self, other: object) -> "LaurentSeries":
        o = self._coerce(other)
        return NotImplemented if o is None else o.sub(self)

    def __mul__(self, other: object) -> "LaurentSeries":
        if isinstance(other, LaurentSeries):
            return self.mul(other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __neg__(self) -> "LaurentSeries":
        return self.neg()

    def __pow__(self, e: int) -> "LaurentSeries":
        return self.pow(e)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (
            self.min_exp == other.min_exp
            and self.order == other.order
            and self.den == other.den
            and self.nums == other.nums
        )

    def __hash__(self) -> int:
        return hash((self.min_exp, self.order, self.den, self.nums))

    def __repr__(self) -> str:
        terms = []
        for i, x in enumerate(self.nums):
            if x:
                terms.append(f"{Fraction(x, self.den)}*q^{self.min_exp + i}")
            if len(terms) == 8:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"<{body} on [{self.min_exp},{self.order})>"


# ----------------------------------------------------------------------
# construction helpers


def _raw(min_exp: int, nums: Tuple[int, ...], den: int, order: int) -> LaurentSeries:
    s = object.__new__(LaurentSeries)
    object.__setattr__(s, "min_exp", min_exp)
    object.__setattr__(s, "nums", nums)
    object.__setattr__(s, "den", den)
    object.__setattr__(s, "order", order)
    return s


def _zero(order: int) -> LaurentSeries:
    return _raw(order, (), 1, order)


def _make(min_exp: int, nums: Sequence[int], den: int, order: int) -> LaurentSeries:
    """Normalise raw window data: strip leading zeros, reduce, fix den sign."""
    i = 0
    n = len(nums)
    while i < n and not nums[i]:
        i += 1
    if i == n:
        return _zero(order)
    if i:
        min_exp += i
        nums = nums[i:]
    if den < 0:
        den = -den
        nums = [-x for x in nums]
    if den > 1:
        g = den
        for x in nums:
            if x:
                g = gcd(g, x)
                if g == 1:
                    break
        if g > 1:
            den //= g
            nums = [x // g for x in nums]
    return _raw(min_exp, tuple(nums), den, order)


def zero(order: int) -> LaurentSeries:
    """The zero series, known to vanish for all exponents below ``order``."""
    return _zero(order)


def one(order: int) -> LaurentSeries:
    """The constant series 1 on the window [0, order)."""
    return monomial(1, 0, order)


def monomial(c: Rational, k: int, order: int) -> LaurentSeries:
    """The single-term series c*q^k on the window [k, order)."""
    if k >= order:
        raise InvalidWindow(f"monomial exponent {k} not below order {order}")
    c = Fraction(c)
    nums = [c.numerator] + [0] * (order - k - 1)
    return _make(k, nums, c.denominator, order)


# ----------------------------------------------------------------------
# q-shifted factorials


@dataclass(frozen=True)
class PochhammerSpec:
    """Symbolic q-shifted factorial (sign*q^offset; q^step)_length.

    ``length`` is a nonnegative integer or ``None`` for the infinite product.
    The factor exponents ``offset + k*step`` grow without bound because
    ``step >= 1``, so truncated evaluation always terminates.
    """

    sign: int
    offset: int
    step: int
    length: Optional[int]

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.step < 1:
            raise ValueError("step must be a positive integer")
        if self.length is not None and self.length < 0:
            raise ValueError("length must be nonnegative or None")


def _binomial_factor_inplace(arr: list, sign: int, e: int) -> None:
    """Multiply the dense window ``arr`` by (1 - sign*q^e) in place."""
    length = len(arr)
    if e >= length:
        return
    if e >= 0:
        m = length - e
        if sign == 1:
            arr[e:] = [x - y for x, y in zip(arr[e:], arr[:m])]
        else:
            arr[e:] = [x + y for x, y in zip(arr[e:], arr[:m])]
    else:
        m = -e
        if m >= length:
            return
        if sign == 1:
            arr[: length - m] = [x - y for x, y in zip(arr[: length - m], arr[m:])]
        else:
            arr[: length - m] = [x + y for x, y in zip(arr[: length - m], arr[m:])]


def pochhammer(spec: PochhammerSpec, order: int) -> LaurentSeries:
    """Evaluate a q-shifted factorial as an exact series on [min_exp, order).

    Finite length multiplies the literal binomials.  Infinite length stops
    once the factor exponent reaches ``order - min_exp``, beyond which no
    factor can touch the window.
    """
    sign, offset, step, length = spec.sign, spec.offset, spec.step, spec.length
    neg_exps = []
    if offset < 0:
        k = 0
        e = offset
        while e < 0 and (length is None or k < length):
            neg_exps.append(e)
            k += 1
            e = offset + k * step
    mu = sum(neg_exps)
    if order <= mu:
        return _zero(order)
    top = order if order >= 1 else 1
    arr = [0] * (top - mu)
    arr[-mu] = 1
    # Negative-exponent factors must be applied while the partial product
    # still has bounded support, so they come first.
    for e in neg_exps:
        _binomial_factor_inplace(arr, sign, e)
    k = len(neg_exps)
    bound = top - mu
    while length is None or k < length:
        e = offset + k * step
        if e >= bound:
            break
        _binomial_factor_inplace(arr, sign, e)
        k += 1
    return _make(mu, arr[: order - mu], 1, order)


# ----------------------------------------------------------------------
# truncated sums


def sum_terms(
    term: Callable[[int], LaurentSeries],
    order: int,
    cap: int = DEFAULT_TERM_CAP,
) -> LaurentSeries:
    """Sum ``term(0) + term(1) + ...`` until a term clears the window.

    The sum stops at the first index whose term has no coefficient below
    ``order``; all earlier terms are accumulated.  Terms must be built with
    a window reaching at least ``order``.  If no closing term appears within
    ``cap`` evaluations the sum is formally divergent at this truncation and
    :class:`TruncationStall` is raised.
    """
    total = _zero(order)
    for idx in range(cap):
        t = term(idx)
        if t.order < order:
            raise InvalidWindow(
                f"term {idx} delivers order {t.order}, sum needs {order}"
            )
        if t.min_exp >= order:
            return total
        total = total.add(t)
    raise TruncationStall(
        f"no term cleared order {order} within {cap} evaluations"
    )
