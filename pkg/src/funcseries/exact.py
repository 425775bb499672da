"""Exact rational scalars and the combinatorial primitives built on them.

Everything downstream (series coefficients, Bell polynomial tables,
approximation coefficients) funnels through :class:`ExactScalar`: a thin
wrapper holding either an exact ``fractions.Fraction`` or, when some input
was irrational, an ordinary double tagged as approximate.  Arithmetic
between exact values stays exact; any operation that touches an
approximate value yields an approximate result.  This mirrors Python's own
``Fraction``/``float`` mixing rules, which is exactly the contamination
behaviour we want.

The combinatorial helpers evaluate the classical alternating sums
directly:

* ``stirling2(n, m)``   second-kind Stirling numbers,
  ``(1/m!) * sum_k (-1)^k C(m,k) (m-k)^n``;
* ``stirling1(n, m)``   signed first-kind Stirling numbers, written as a
  double alternating sum over second-kind numbers;
* ``falling_factorial(a, n)``   ``a (a-1) ... (a-n+1)`` for arbitrary
  rational or float ``a``;
* ``double_factorial(n)``   with the conventions ``(-1)!! = 0!! = 1``;
* ``binomial(a, k)``   generalized binomial ``falling_factorial(a,k)/k!``.

The sums are implemented verbatim rather than via the usual recurrences;
the recurrences serve as independent oracles in the test suite.  Both
Stirling tables are memoized (a triangular cache keyed by ``(n, m)``);
under CPython the caches are safe to share across threads, the worst case
being a duplicated computation.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Union

__all__ = [
    "ExactScalar",
    "scalar",
    "ZERO",
    "ONE",
    "stirling2",
    "stirling1",
    "falling_factorial",
    "double_factorial",
    "binomial",
]

ScalarLike = Union[int, float, Fraction, str, "ExactScalar"]


def _coerce(value: ScalarLike):
    """Return the raw Fraction or float behind any scalar-like input."""
    if isinstance(value, ExactScalar):
        return value._v
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar value")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, float):
        return value
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as a scalar")


class ExactScalar:
    """A rational number of unbounded size, or a float tagged approximate.

    Instances are immutable.  Construct from int, ``Fraction``, a string
    such as ``"2/3"`` (all exact), or a float (approximate).  Exactness is
    sticky through arithmetic: the result of an operation is exact if and
    only if every operand was exact.
    """

    __slots__ = ("_v",)

    def __init__(self, value: ScalarLike):
        object.__setattr__(self, "_v", _coerce(value))

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @property
    def is_exact(self) -> bool:
        return isinstance(self._v, Fraction)

    def as_fraction(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("value is approximate, no exact representation")
        return self._v

    @property
    def numerator(self) -> int:
        return self.as_fraction().numerator

    @property
    def denominator(self) -> int:
        return self.as_fraction().denominator

    def __float__(self) -> float:
        return float(self._v)

    def __bool__(self) -> bool:
        return self._v != 0

    # -- arithmetic -------------------------------------------------------

    def _binop(self, other, op):
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(op(self._v, o))

    def _rbinop(self, other, op):
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(op(o, self._v))

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._rbinop(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._rbinop(other, lambda a, b: a / b)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or isinstance(exponent, bool):
            raise TypeError("only integer exponents are supported")
        return ExactScalar(self._v ** exponent)

    def __neg__(self):
        return ExactScalar(-self._v)

    def __pos__(self):
        return self

    def __abs__(self):
        return ExactScalar(abs(self._v))

    def sqrt(self) -> "ExactScalar":
        """Square root; exact when the operand is a perfect rational square."""
        v = self._v
        if isinstance(v, float):
            if v < 0:
                raise ValueError("square root of a negative value")
            return ExactScalar(math.sqrt(v))
        if v < 0:
            raise ValueError("square root of a negative value")
        rn = math.isqrt(v.numerator)
        rd = math.isqrt(v.denominator)
        if rn * rn == v.numerator and rd * rd == v.denominator:
            return ExactScalar(Fraction(rn, rd))
        return ExactScalar(math.sqrt(float(v)))

    # -- comparisons ------------------------------------------------------

    def __eq__(self, other):
        try:
            o = _coerce(other)
        except TypeError:
            return NotImplemented
        return self._v == o

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __lt__(self, other):
        try:
            return self._v < _coerce(other)
        except TypeError:
            return NotImplemented

    def __le__(self, other):
        try:
            return self._v <= _coerce(other)
        except TypeError:
            return NotImplemented

    def __gt__(self, other):
        try:
            return self._v > _coerce(other)
        except TypeError:
            return NotImplemented

    def __ge__(self, other):
        try:
            return self._v >= _coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash(self._v)

    def __repr__(self):
        tag = "" if self.is_exact else "~"
        return f"ExactScalar({tag}{self._v})"

    def __str__(self):
        return str(self._v)


def scalar(value: ScalarLike) -> ExactScalar:
    """Coerce any scalar-like value to :class:`ExactScalar`."""
    if isinstance(value, ExactScalar):
        return value
    return ExactScalar(value)


ZERO = ExactScalar(0)
ONE = ExactScalar(1)


# -- combinatorial primitives ---------------------------------------------


@lru_cache(maxsize=None)
def _stirling2_raw(n: int, m: int) -> Fraction:
    total = 0
    for k in range(m + 1):
        total += (-1) ** k * math.comb(m, k) * (m - k) ** n
    return Fraction(total, math.factorial(m))


def stirling2(n: int, m: int) -> ExactScalar:
    """Second-kind Stirling number: partitions of an n-set into m blocks.

    Computed from the alternating binomial sum with the ``0**0 == 1``
    convention, so ``stirling2(0, 0) == 1``.
    """
    if n < 0 or m < 0:
        raise ValueError("stirling2 requires n >= 0 and m >= 0")
    if m > n:
        return ZERO
    return ExactScalar(_stirling2_raw(n, m))


@lru_cache(maxsize=None)
def _stirling1_raw(n: int, m: int) -> Fraction:
    if n == 0:
        return Fraction(1 if m == 0 else 0)
    total = Fraction(0)
    for j in range(n - m + 1):
        total += (
            (-1) ** j
            * math.comb(n - 1 + j, n - m + j)
            * math.comb(2 * n - m, n - m - j)
            * _stirling2_raw(n - m + j, j)
        )
    return total


def stirling1(n: int, m: int) -> ExactScalar:
    """Signed first-kind Stirling number.

    Evaluated through the double alternating sum over second-kind numbers;
    for example ``stirling1(3, 1) == 2`` and ``stirling1(2, 1) == -1``.
    """
    if n < 0 or m < 0:
        raise ValueError("stirling1 requires n >= 0 and m >= 0")
    if m > n:
        return ZERO
    return ExactScalar(_stirling1_raw(n, m))


def falling_factorial(a: ScalarLike, n: int) -> ExactScalar:
    """Product a (a-1) ... (a-n+1); empty product is 1."""
    if n < 0:
        raise ValueError("falling_factorial requires n >= 0")
    base = scalar(a)
    out = ONE
    for k in range(n):
        out = out * (base - k)
    return out


def double_factorial(n: int) -> ExactScalar:
    """n!! for n >= -1, with (-1)!! == 0!! == 1."""
    if n < -1:
        raise ValueError("double_factorial requires n >= -1")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return ExactScalar(result)


def binomial(a: ScalarLike, k: int) -> ExactScalar:
    """Generalized binomial coefficient C(a, k) for scalar a, integer k >= 0."""
    if k < 0:
        raise ValueError("binomial requires k >= 0")
    return falling_factorial(a, k) / math.factorial(k)
