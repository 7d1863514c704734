"""
When the gcd hypothesis fails: (p, m) = (3, 6), special exponent
================================================================

Here x^d always lands in the fourth roots of unity inside F_9, and the
relative trace down to F_9 is multiplication by 3 = 0. Every nonzero element
is therefore in the defining set, so the code is much longer than the closed
form predicts.
"""

import warnings

from ghwlab import build_defining_set, build_field, d_mode_params, ghw_closed, ghw_hyperplane
from ghwlab.codes import closed_length_dimension

F = build_field(3, 6)
params = d_mode_params(3, 6, "special")
print("hypothesis checks:", params.hypothesis_warnings())

D = build_defining_set(F, params)
print(f"brute force: n = {D.n}, k = {D.k}")
print("closed form [n, k]:", closed_length_dimension(params))

with warnings.catch_warnings():
    warnings.simplefilter("ignore")
    closed = [ghw_closed(params, r) for r in range(1, 7)]
brute = [ghw_hyperplane(F, D, r) for r in range(1, D.k + 1)]
print("closed-form hierarchy:", closed)
print("brute-force hierarchy:", brute)
