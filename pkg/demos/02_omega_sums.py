"""
Character sums over M-th powers
===============================

Compare the exact closed form of Omega(a, b) with a direct sum for every
pair (a, b) over F_49 with M = 8.
"""

from ghwlab import build_field, omega_closed, omega_params
from ghwlab.charsums import omega_bf_all_b

F = build_field(7, 2)
params = omega_params(7, 2, 8)
print(f"f={params.f} h={params.h} d={params.d} first case: {params.first_case}")

a = F.alpha_pow(5)
row = omega_bf_all_b(F, a, 8)
for b in range(6):
    cf = omega_closed(F, params, a, b)
    print(f"b code {b}: brute {row[b]}  closed {cf.to_cyc(F)}")

mismatches = 0
for a in range(1, F.q):
    row = omega_bf_all_b(F, a, 8)
    mismatches += sum(omega_closed(F, params, a, b).to_cyc(F) != row[b] for b in range(F.q))
print(f"\nall {(F.q - 1) * F.q} pairs checked, mismatches: {mismatches}")
