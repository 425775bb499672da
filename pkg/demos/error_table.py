"""How fast does a non-Taylor basis converge?

ln(1+x) evaluated at x = 1/2, approximated with N matched derivatives in
the inverse-square basis (family a8) and as a plain Taylor polynomial.
The basis change buys roughly five extra digits by N = 10, and at N = 20
the a8 error has hit exact zero: every coefficient is rational, the
evaluation error is pure float roundoff, and the roundoff happens to
cancel.

The same numbers are available from the command line:

    funcseries table

Run:  python3 demos/error_table.py
"""

import math

from funcseries import assemble, builtin_function, evaluate, get_expansion, taylor_baseline


def main():
    f = builtin_function("ln1p")
    x = 0.5
    exact = math.log1p(x)

    print(f"absolute error of ln(1+x) at x = {x}")
    print(f"{'N':>4s} {'a8 basis':>14s} {'taylor':>14s}")
    for n in (1, 2, 3, 5, 7, 10, 14, 20):
        da8 = abs(evaluate(assemble(get_expansion("a8"), f, n), x) - exact)
        dtp = abs(evaluate(taylor_baseline(f, n), x) - exact)
        print(f"{n:4d} {da8:14.3e} {dtp:14.3e}")

    print()
    print("the a8 coefficients stay exact; what shrinks is the tail weight")
    m = assemble(get_expansion("a8"), f, 8)
    print("  a_n =", ", ".join(str(c) for c in m.coefficients))


if __name__ == "__main__":
    main()
