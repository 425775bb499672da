"""Approximating the fifth root far outside the Taylor radius.

f(x) = (1+x)^(1/5) has Taylor radius 1, so a Taylor polynomial is useless
at x = 2.  The square-root basis of family a5 (alpha = 2) reaches much
further: its substituted series converges wherever |sqrt(1+x) - 1| stays
below the coefficient radius, which maps to a far larger x-interval.
With eight matched derivatives the basis expansion is four orders of
magnitude closer at x = 2, while the Taylor polynomial has already blown
past the true value.

Run:  python3 demos/fifth_root_beyond_taylor.py
"""

from fractions import Fraction

from funcseries import (
    assemble,
    builtin_function,
    error_report,
    estimate_radius,
    evaluate,
    get_expansion,
    map_domain,
    taylor_baseline,
)


def main():
    f = builtin_function("pow", alpha=Fraction(1, 5))
    exp5 = get_expansion("a5", alpha=2)
    m5 = assemble(exp5, f, 8)
    tp = taylor_baseline(f, 8)

    print("f(x) = (1+x)^(1/5), eight matched derivatives")
    print(f"{'x':>6s} {'a5 error':>12s} {'taylor error':>14s}")
    for x in (0.5, 1.0, 2.0, 4.0, 6.0):
        exact = f.value_at(x)
        e5 = abs(evaluate(m5, x) - exact)
        etp = abs(evaluate(tp, x) - exact)
        print(f"{x:6.1f} {e5:12.3e} {etp:14.3e}")

    print()
    r5 = estimate_radius(assemble(exp5, f, 20))
    rtp = estimate_radius(taylor_baseline(f, 20))
    print(f"estimated coefficient radius: a5 {r5:.3f}, taylor {rtp:.3f}")
    print(f"x-interval where the a5 series converges: {map_domain(exp5, r5)}")
    print(f"x-interval for the taylor series:         {map_domain(get_expansion('a5', alpha=1), rtp)}")

    print()
    print("per-point report rows carry approx, reference and delta:")
    for row in error_report(m5, [2.0, 6.0]):
        print(f"  x={row.x:4.1f} approx={row.approx:.12f} exact={row.exact:.12f} delta={row.delta:+.2e}")


if __name__ == "__main__":
    main()
