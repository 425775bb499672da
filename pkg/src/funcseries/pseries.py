"""Truncated Maclaurin series arithmetic over exact scalars.

Series are the engine behind two independent routes to the same
approximation coefficients: direct composition of Maclaurin expansions,
and Bell-polynomial assembly from derivative sequences.  Keeping
coefficients exact (``Fraction`` under the hood, via ExactScalar) lets the
cross-validation suites demand bit-for-bit equality instead of tolerances.

A :class:`TruncatedSeries` of order N stores c_0 .. c_N, with c_n the
plain Maclaurin coefficient, so d_n = n! * c_n.  Binary operations require
equal orders and return the same order; truncation never happens silently.

:func:`elementary` constructs the inverse-basis series for the expansion
families whose g-inverse has a standalone closed form.  :func:`family_series`
extends the mapping to every family key, building the composite cases
(c1 .. c5) by series arithmetic on an exponential backbone and the
squared-arccosine case (c6) by reversion.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .exact import ExactScalar, ONE, ZERO, binomial, scalar

__all__ = [
    "MAX_ORDER",
    "TruncatedSeries",
    "constant",
    "identity",
    "elementary",
    "family_series",
    "ELEMENTARY_KINDS",
    "FAMILY_KEYS",
    "FAMILY_PARAMS",
]

# Supported order cap.  Rational coefficient bit-length grows fast with the
# order, and nothing downstream needs more than a 20-term model; 64 leaves
# generous headroom while keeping worst-case arithmetic affordable.
MAX_ORDER = 64


def _check_order(order: int) -> None:
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise ValueError("order must be a positive integer")
    if order > MAX_ORDER:
        raise ValueError(f"order {order} exceeds the supported cap {MAX_ORDER}")


class TruncatedSeries:
    """Immutable truncated Maclaurin series with ExactScalar coefficients."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable):
        c = tuple(scalar(v) for v in coeffs)
        if not c:
            raise ValueError("a series needs at least the constant coefficient")
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def order(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, n: int) -> ExactScalar:
        return self._c[n]

    def __iter__(self):
        return iter(self._c)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"TruncatedSeries([{', '.join(str(c) for c in self._c)}])"

    def is_exact(self) -> bool:
        return all(c.is_exact for c in self._c)

    def _require_same_order(self, other: "TruncatedSeries") -> None:
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries operand")
        if other.order != self.order:
            raise ValueError(
                f"order mismatch: {self.order} vs {other.order}; "
                "binary operations require equal orders"
            )

    # -- ring operations ----------------------------------------------------

    def add(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_order(other)
        return TruncatedSeries(a + b for a, b in zip(self._c, other._c))

    def sub(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._require_same_order(other)
        return TruncatedSeries(a - b for a, b in zip(self._c, other._c))

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Cauchy product truncated at the shared order.

        Zero factors are skipped so that exact zero coefficients stay exact
        even when the other series carries approximate (float) entries.
        """
        self._require_same_order(other)
        a, b = self._c, other._c
        n = self.order
        out = []
        for m in range(n + 1):
            acc = ZERO
            for i in range(m + 1):
                if a[i] and b[m - i]:
                    acc = acc + a[i] * b[m - i]
            out.append(acc)
        return TruncatedSeries(out)

    def scale(self, factor) -> "TruncatedSeries":
        s = scalar(factor)
        return TruncatedSeries(c * s if c else c for c in self._c)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.add(other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.sub(other)
        return NotImplemented

    def __neg__(self):
        return TruncatedSeries(-c for c in self._c)

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return self.mul(other)
        try:
            return self.scale(other)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    # -- structural operations ----------------------------------------------

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Coefficients of self(inner(y)) to the shared order.

        Horner-style accumulation over the outer coefficients; the inner
        series must have zero constant term so that truncation is sound.
        """
        self._require_same_order(inner)
        if inner._c[0] != 0:
            raise ValueError("composition requires inner constant term 0")
        n = self.order
        acc = constant(self._c[n], n)
        for k in range(n - 1, -1, -1):
            acc = acc.mul(inner)
            acc = TruncatedSeries((acc._c[0] + self._c[k],) + acc._c[1:])
        return acc

    def reversion(self) -> "TruncatedSeries":
        """Compositional inverse t with self(t(y)) = y to the same order.

        Triangular scheme: walking the target order m upward, the table
        pw[k][m] = [y^m] t(y)^k is filled for k >= 2 from already-known
        t_1 .. t_{m-1}, after which t_m drops out of the requirement that
        [y^m] self(t(y)) vanishes for m >= 2.
        """
        s = self._c
        if s[0] != 0:
            raise ValueError("reversion requires constant term 0")
        if self.order < 1 or not s[1]:
            raise ValueError("reversion requires a nonzero linear term")
        n = self.order
        t = [ZERO] * (n + 1)
        t[1] = ONE / s[1]
        pw = [[ZERO] * (n + 1) for _ in range(n + 1)]
        pw[1][1] = t[1]
        for m in range(2, n + 1):
            for k in range(2, m + 1):
                acc = ZERO
                for j in range(1, m - k + 2):
                    if t[j] and pw[k - 1][m - j]:
                        acc = acc + pw[k - 1][m - j] * t[j]
                pw[k][m] = acc
            acc = ZERO
            for k in range(2, m + 1):
                if s[k] and pw[k][m]:
                    acc = acc + s[k] * pw[k][m]
            t[m] = -acc / s[1]
            pw[1][m] = t[m]
        return TruncatedSeries(t)

    def shift_down(self, k: int) -> "TruncatedSeries":
        """Divide by y^k; the first k coefficients must be exactly zero."""
        if k < 0 or k >= len(self._c):
            raise ValueError("shift amount out of range")
        if any(c != 0 for c in self._c[:k]):
            raise ValueError("shift_down requires the leading coefficients to vanish")
        return TruncatedSeries(self._c[k:])

    def derivatives(self) -> tuple:
        """Derivative values d_1 .. d_N at zero (d_n = n! * c_n)."""
        return tuple(
            self._c[m] * math.factorial(m) if self._c[m] else self._c[m]
            for m in range(1, len(self._c))
        )

    def eval_float(self, x: float) -> float:
        """Horner evaluation in double precision."""
        acc = 0.0
        for c in reversed(self._c):
            acc = acc * x + float(c)
        return acc


def constant(value, order: int) -> TruncatedSeries:
    if order < 0:
        raise ValueError("order must be non-negative")
    return TruncatedSeries([scalar(value)] + [ZERO] * order)


def identity(order: int) -> TruncatedSeries:
    if order < 1:
        raise ValueError("the identity series needs order >= 1")
    return TruncatedSeries([ZERO, ONE] + [ZERO] * (order - 1))


# -- elementary inverse-basis series ---------------------------------------


def _build_exp_m1(order):
    return TruncatedSeries(
        [0] + [Fraction(1, math.factorial(n)) for n in range(1, order + 1)]
    )


def _build_neg_ln_1m(order):
    return TruncatedSeries([0] + [Fraction(1, n) for n in range(1, order + 1)])


def _build_sinh(order):
    return TruncatedSeries(
        Fraction(1, math.factorial(n)) if n % 2 else Fraction(0)
        for n in range(order + 1)
    )


def _build_sin(order):
    return TruncatedSeries(
        Fraction((-1) ** (n // 2), math.factorial(n)) if n % 2 else Fraction(0)
        for n in range(order + 1)
    )


def _build_pow_alpha_m1(order, alpha):
    if alpha == 0:
        raise ValueError("pow_alpha_m1 requires alpha != 0")
    return TruncatedSeries([ZERO] + [binomial(alpha, n) for n in range(1, order + 1)])


def _build_half_sq_plus_wx(order, w):
    if w == 0:
        raise ValueError("half_sq_plus_wx requires w != 0")
    tail = [Fraction(1, 2)] + [0] * (order - 2) if order >= 2 else []
    return TruncatedSeries([ZERO, w] + tail)


def _build_sqrt_shift(order, alpha, beta):
    if not alpha > 0:
        raise ValueError("sqrt_shift requires alpha > 0")
    if beta == 0:
        raise ValueError("sqrt_shift requires beta != 0")
    root = alpha.sqrt()
    ratio = beta / alpha
    return TruncatedSeries(
        [ZERO]
        + [root * binomial(Fraction(1, 2), n) * ratio**n for n in range(1, order + 1)]
    )


def _build_inv_sq_m1(order):
    return TruncatedSeries([0] + [n + 1 for n in range(1, order + 1)])


def _build_odd_geom(order):
    return TruncatedSeries(1 if n % 2 else 0 for n in range(order + 1))


def _build_lambert_pair(order, w):
    if w == 0:
        raise ValueError("lambert_pair requires w != 0")
    return TruncatedSeries(
        [ZERO] + [(w - 1 + n) / math.factorial(n) for n in range(1, order + 1)]
    )


def _build_log_ratio(order):
    return TruncatedSeries([0] + [Fraction(1, n + 1) for n in range(1, order + 1)])


def _build_expm1_ratio(order):
    return TruncatedSeries(
        [0] + [Fraction(1, math.factorial(n + 1)) for n in range(1, order + 1)]
    )


def _build_arcsin(order):
    coeffs = [Fraction(0)] * (order + 1)
    for n in range(1, order + 1, 2):
        j = n // 2
        coeffs[n] = Fraction(math.comb(2 * j, j), 4**j * n)
    return TruncatedSeries(coeffs)


def _build_sq_arccos_shift(order):
    # The square of the arccosine shift solves cos(sqrt(s)) - 1 = y for
    # s = [arccos(1+y)]^2, so the series is obtained by reverting
    # y(s) = sum_{j>=1} (-1)^j s^j / (2j)! and dividing out one power of y.
    inner = TruncatedSeries(
        [0]
        + [Fraction((-1) ** j, math.factorial(2 * j)) for j in range(1, order + 2)]
    )
    t = inner.reversion()
    return t.shift_down(1).scale(Fraction(-1, 2)).sub(constant(1, order))


_ELEMENTARY = {
    "exp_m1": ((), _build_exp_m1),
    "neg_ln_1m": ((), _build_neg_ln_1m),
    "sinh": ((), _build_sinh),
    "sin": ((), _build_sin),
    "pow_alpha_m1": (("alpha",), _build_pow_alpha_m1),
    "half_sq_plus_wx": (("w",), _build_half_sq_plus_wx),
    "sqrt_shift": (("alpha", "beta"), _build_sqrt_shift),
    "inv_sq_m1": ((), _build_inv_sq_m1),
    "odd_geom": ((), _build_odd_geom),
    "lambert_pair": (("w",), _build_lambert_pair),
    "log_ratio": ((), _build_log_ratio),
    "expm1_ratio": ((), _build_expm1_ratio),
    "arcsin": ((), _build_arcsin),
    "sq_arccos_shift": ((), _build_sq_arccos_shift),
}

ELEMENTARY_KINDS = tuple(_ELEMENTARY)


def _take_params(context: str, needed, alpha, beta, w) -> dict:
    given = {"alpha": alpha, "beta": beta, "w": w}
    kwargs = {}
    for name, value in given.items():
        if name in needed:
            if value is None:
                raise ValueError(f"{context} requires parameter {name!r}")
            kwargs[name] = scalar(value)
        elif value is not None:
            raise ValueError(f"{context} takes no parameter {name!r}")
    return kwargs


def elementary(kind: str, order: int, *, alpha=None, beta=None, w=None) -> TruncatedSeries:
    """Exact Maclaurin coefficients of a named inverse-basis function.

    The removable-singularity kinds (log_ratio, expm1_ratio,
    sq_arccos_shift) are assembled from series of the primitive functions
    with the constant term shifted out, never by evaluating their defining
    formula at zero.
    """
    _check_order(order)
    try:
        needed, builder = _ELEMENTARY[kind]
    except KeyError:
        raise ValueError(f"unknown elementary kind {kind!r}") from None
    kwargs = _take_params(f"elementary kind {kind!r}", needed, alpha, beta, w)
    return builder(order, **kwargs)


# -- per-family inverse series ----------------------------------------------

_FAMILY_ELEMENTARY = {
    "a1": "exp_m1",
    "a2": "neg_ln_1m",
    "a3": "sinh",
    "a4": "sin",
    "a5": "pow_alpha_m1",
    "a6": "half_sq_plus_wx",
    "a7": "sqrt_shift",
    "a8": "inv_sq_m1",
    "a9": "odd_geom",
    "a10": "lambert_pair",
    "a11": "log_ratio",
    "a12": "expm1_ratio",
    "a13": "arcsin",
    "c6": "sq_arccos_shift",
}

# Parameter names per family key.  For c5 the library-wide flag names map
# onto the three shape parameters as alpha -> additive constant, w -> first
# derivative, beta -> second derivative of the inverse basis.
FAMILY_PARAMS = {
    "a5": ("alpha",),
    "a6": ("w",),
    "a7": ("alpha", "beta"),
    "a10": ("w",),
    "c1": ("w",),
    "c5": ("alpha", "w", "beta"),
}

FAMILY_KEYS = tuple(f"a{i}" for i in range(1, 14)) + tuple(
    f"c{i}" for i in range(1, 7)
)


def _exp_full(order):
    return TruncatedSeries(
        Fraction(1, math.factorial(n)) for n in range(order + 1)
    )


def _family_c1(order, w):
    if w == 0:
        raise ValueError("family 'c1' requires w != 0")
    shifted = _exp_full(order).add(constant(w - 1, order))
    return identity(order).mul(shifted)


def _family_c2(order):
    lin = TruncatedSeries([-2, 1] + [0] * (order - 1))
    out = _exp_full(order).mul(lin)
    return out.sub(identity(order)).add(constant(2, order))


def _family_c3(order):
    m = order + 2
    poly = TruncatedSeries([2, 2, 1] + [0] * (m - 2))
    num = _exp_full(m).scale(2).sub(poly)
    return num.shift_down(2).scale(Fraction(1, 2))


def _family_c4(order):
    m = order + 3
    poly = TruncatedSeries([12, 6, 0, -1] + [0] * (m - 3))
    num = identity(m).mul(_exp_full(m)).scale(6).sub(_exp_full(m).scale(12)).add(poly)
    return num.shift_down(3).scale(Fraction(1, 6))


def _family_c5(order, alpha, w, beta):
    # alpha is the constant shift; w and beta are the prescribed first and
    # second derivative values of the inverse basis.
    if w == 0:
        raise ValueError("family 'c5' requires w != 0 (the linear coefficient)")
    head_coeffs = [alpha, alpha + w - 1, (alpha + beta - 2) / 2]
    head = TruncatedSeries(head_coeffs[: order + 1] + [0] * max(0, order - 2))
    lin = identity(order).add(constant(-alpha, order))
    return head.add(lin.mul(_exp_full(order)))


def family_series(key: str, order: int, *, alpha=None, beta=None, w=None) -> TruncatedSeries:
    """Maclaurin series of the inverse basis function for a family key."""
    _check_order(order)
    if key not in FAMILY_KEYS:
        raise ValueError(f"unknown family key {key!r}")
    needed = FAMILY_PARAMS.get(key, ())
    kwargs = _take_params(f"family {key!r}", needed, alpha, beta, w)
    kind = _FAMILY_ELEMENTARY.get(key)
    if kind is not None:
        return elementary(kind, order, **kwargs)
    if key == "c1":
        return _family_c1(order, kwargs["w"])
    if key == "c2":
        return _family_c2(order)
    if key == "c3":
        return _family_c3(order)
    if key == "c4":
        return _family_c4(order)
    return _family_c5(order, kwargs["alpha"], kwargs["w"], kwargs["beta"])
