"""Independent reference implementations used to cross-check the package.

Nothing in here imports from funcseries.  The oracles are deliberately
naive: set partitions enumerated one element at a time, polynomial
arithmetic as nested loops over Fraction lists, Stirling numbers by their
recurrences, derivatives by central differences.  Slow is fine; the point
is that a bug in the package and a bug here would have to coincide.
"""

from fractions import Fraction

import math


# -- set partitions and Bell values -----------------------------------------


def set_partitions(n):
    """Yield every partition of {0, .., n-1} as a list of blocks."""
    if n == 0:
        yield []
        return
    for part in set_partitions(n - 1):
        for i in range(len(part)):
            yield part[:i] + [part[i] + [n - 1]] + part[i + 1 :]
        yield part + [[n - 1]]


def bell_by_partitions(n, k, args):
    """B(n, k) as a sum of block-size products over set partitions.

    ``args`` lists x_1, x_2, .. with x_j weighting blocks of size j; the
    list must reach x_{n-k+1}, the largest block size possible with k
    blocks.  Exponential cost, usable up to n around 9.
    """
    if n == 0 and k == 0:
        return Fraction(1)
    total = Fraction(0)
    for part in set_partitions(n):
        if len(part) != k:
            continue
        prod = Fraction(1)
        for block in part:
            prod *= Fraction(args[len(block) - 1])
        total += prod
    return total


# -- Stirling numbers by recurrence ------------------------------------------


def stirling2_rec(n, m):
    if m < 0 or m > n:
        return 0
    row = [1]
    for i in range(1, n + 1):
        new = [0] * (i + 1)
        for j in range(1, i + 1):
            upper = row[j] if j < len(row) else 0
            new[j] = j * upper + row[j - 1]
        row = new
    return row[m] if n else (1 if m == 0 else 0)


def stirling1_rec(n, m):
    """Signed first kind: s(n, m) = s(n-1, m-1) - (n-1) s(n-1, m)."""
    if m < 0 or m > n:
        return 0
    row = [1]
    for i in range(1, n + 1):
        new = [0] * (i + 1)
        for j in range(1, i + 1):
            new[j] = row[j - 1] - (i - 1) * (row[j] if j < len(row) else 0)
        new[0] = -(i - 1) * row[0]
        row = new
    return row[m]


# -- naive polynomial arithmetic over Fraction lists -------------------------


def poly_mul(a, b, order):
    out = [Fraction(0)] * (order + 1)
    for i, ai in enumerate(a):
        if i > order or ai == 0:
            continue
        for j, bj in enumerate(b):
            if i + j > order:
                break
            out[i + j] += Fraction(ai) * Fraction(bj)
    return out


def poly_compose(outer, inner, order):
    """Coefficients of outer(inner(y)) truncated at ``order``."""
    out = [Fraction(0)] * (order + 1)
    power = [Fraction(1)] + [Fraction(0)] * order
    for c in outer:
        for idx in range(order + 1):
            out[idx] += Fraction(c) * power[idx]
        power = poly_mul(power, inner, order)
    return out


def poly_eval(coeffs, x):
    total = Fraction(0)
    xf = Fraction(x)
    for c in reversed(list(coeffs)):
        total = total * xf + Fraction(c)
    return total


def poly_eval_float(coeffs, x):
    total = 0.0
    for c in reversed(list(coeffs)):
        total = total * x + float(c)
    return total


# -- numerical derivatives ----------------------------------------------------


def nth_derivative_fd(f, n, h=1e-2):
    """n-th derivative of f at 0: central differences plus one Richardson step.

    Accuracy is roughly h^4 times higher derivatives, so keep comparisons
    loose (1e-5 relative is realistic for n <= 4 on smooth functions).
    """

    def central(step):
        acc = 0.0
        for i in range(n + 1):
            x = (n / 2 - i) * step
            acc += (-1) ** i * math.comb(n, i) * f(x)
        return acc / step**n

    d1 = central(h)
    d2 = central(h / 2)
    return (4.0 * d2 - d1) / 3.0
