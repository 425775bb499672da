"""Where does each expansion of ln(1+x) actually converge?

The substituted series sum a_n y^n has an ordinary radius of convergence
R, estimated here from the decay of the high-order coefficients.  The
x-domain of the expansion is then {x : |g(x)| < R}, obtained by mapping
(-R, R) through the basis inverse.  Different bases trade convergence
speed against domain size, and a few make the domain unbounded.

Run:  python3 demos/convergence_domains.py
"""

import math

from funcseries import (
    FAMILY_KEYS,
    assemble,
    builtin_function,
    estimate_radius,
    get_expansion,
    map_domain,
)


def main():
    f = builtin_function("ln1p")
    order = 24

    print(f"{'family':>6s} {'R (estimated)':>14s}   x-domain for ln(1+x)")
    for key in FAMILY_KEYS:
        exp = get_expansion(key)
        model = assemble(exp, f, order)
        r = estimate_radius(model)
        if math.isinf(r):
            domain = exp.domain
            shown = "inf"
        else:
            domain = map_domain(exp, r)
            shown = f"{r:.4f}"
        print(f"{key:>6s} {shown:>14s}   {domain}")

    print()
    print("a8 at unit radius maps to (-0.75, inf): the basis compresses the")
    print("whole half-line into |y| < 1, which is why its table wins so big")


if __name__ == "__main__":
    main()
