"""Bases defined only through their inverse.

Families c1 to c6 specify the inverse basis g^-1 and leave g itself to a
solver: monotone Newton iteration with a bisection fallback.  Family c1
with w = 1 is the perfect test case, because its inverse y e^y makes g
exactly the Lambert W function, which the library also implements
directly (Halley iteration).  The two must agree to solver tolerance,
and the same Newton machinery has to round-trip every other implicit
family on its validity domain.

Run:  python3 demos/lambert_inverse_families.py
"""

import math

from funcseries import eval_g, eval_ginv, get_expansion, lambert_w0


def main():
    print("lambert_w0 residuals |W e^W - x| / max(1, |x|):")
    for x in (-0.36, -0.1, 0.0, 1.0, math.e, 100.0, 1e6):
        w = lambert_w0(x)
        resid = abs(w * math.exp(w) - x) / max(1.0, abs(x))
        print(f"  x = {x:10.3g}   W = {w:18.15f}   residual = {resid:.1e}")

    print()
    print("family c1 (w=1): solver-based g against the direct W implementation")
    exp = get_expansion("c1", w=1)
    worst = 0.0
    for i in range(101):
        x = -0.3 + (10.3) * i / 100
        worst = max(worst, abs(eval_g(exp, x) - lambert_w0(x)))
    print(f"  largest difference on [-0.3, 10]: {worst:.2e}")

    print()
    print("newton round trips x -> g(x) -> g^-1 -> x for the implicit families:")
    windows = {
        "c1": (-0.36, 8.0),
        "c2": (-1.86, 8.0),
        "c3": (-0.49, 8.0),
        "c4": (-0.16, 8.0),
        "c5": (-8.0, 8.0),
        "c6": (0.0, 1.46),
    }
    for key, (lo, hi) in windows.items():
        e = get_expansion(key)
        worst = 0.0
        for i in range(101):
            x = lo + (hi - lo) * i / 100
            y = eval_g(e, x)
            worst = max(worst, abs(eval_ginv(e, y) - x) / max(1.0, abs(x)))
        print(f"  {key:4s} domain {str(e.domain):32s} worst relative error {worst:.2e}")


if __name__ == "__main__":
    main()
