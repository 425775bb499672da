"""A function can be a single term in the right basis.

The classic Taylor polynomial of ln(1+x) needs infinitely many terms and
still only converges on (-1, 1].  Matching the same derivatives against
powers of a different basis function changes the picture completely: in
the basis g(x) = ln(1+x) itself the expansion collapses to a_1 = 1 with
every other coefficient exactly zero, so the "approximation" is exact on
the whole validity domain.  The inverse-square basis of family a8 keeps
infinitely many terms but they are the tidy rationals 2/n.

Run:  python3 demos/exact_log_in_one_term.py
"""

import math

from funcseries import assemble, builtin_function, evaluate, get_expansion, taylor_baseline


def main():
    f = builtin_function("ln1p")

    own_basis = assemble(get_expansion("a1"), f, 10)
    print("ln(1+x) against powers of g(x) = ln(1+x):")
    print("  coefficients:", [str(c) for c in own_basis.coefficients])
    for x in (0.5, 4.0, 100.0):
        approx = evaluate(own_basis, x)
        exact = math.log1p(x)
        print(f"  x = {x:7.1f}   A(x) = {approx:.16f}   error = {approx - exact:.1e}")

    print()
    print("same function against g(x) = 1 - 1/sqrt(1+x) (family a8):")
    sq_basis = assemble(get_expansion("a8"), f, 10)
    print("  coefficients:", [str(c) for c in sq_basis.coefficients])
    print("  the general term is 2/n, a closed form the Taylor row lacks")

    print()
    print("ten-term errors at x = 4 (outside the Taylor radius):")
    tp = taylor_baseline(f, 10)
    for name, model in (("a1", own_basis), ("a8", sq_basis), ("tp", tp)):
        err = abs(evaluate(model, 4.0) - math.log(5.0))
        print(f"  {name:3s} {err:.3e}")


if __name__ == "__main__":
    main()
