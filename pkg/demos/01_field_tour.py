"""
A first look at F_{3^4}
=======================

Build the field, inspect its modulus and generator, then look at traces and
the two quadratic Gaussian periods.
"""

import numpy as np

from ghwlab import build_field, gaussian_period_bf, gaussian_period_closed_N2, quad_to_cyc

F = build_field(3, 4)
print("field:", F)
print("modulus (c0 first):", F.modulus)
print("alpha:", F.alpha)

# every element is an integer code sum c_i 3^i; tables are indexed by code
x = F.alpha_pow(10)
y = F.alpha_pow(25)
print("\nalpha^10 * alpha^25 =", F.mul(x, y), " log =", F.dlog(F.mul(x, y)))

# the absolute trace hits each residue equally often
print("\ntrace fibre sizes:", np.bincount(F.trace_table, minlength=3))

# quadratic periods: closed form vs a direct character sum
for i in (0, 1):
    closed = gaussian_period_closed_N2(3, 4, i)
    brute = gaussian_period_bf(F, 2, i)
    print(f"eta_{i}: closed {closed}  brute {brute}  same: {quad_to_cyc(3, closed) == brute}")
