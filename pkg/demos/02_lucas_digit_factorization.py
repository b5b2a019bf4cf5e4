"""
Generalized binomial coefficients and the digit factorization
=============================================================

In Z_(p) with representatives 0..p-1, F_n(u_m) is the ordinary binomial
coefficient C(m, n). In F_q[t]_(t), or with other representatives, the
values change but their residues still factor over base-q digits.
"""

import math

from dvdbinom import digit_coeff_table, fn_eval_exact, fn_residue, make_model

Z3 = make_model("zp", 3)
print("F_2(u_5) =", fn_eval_exact(2, Z3.u(5)), " C(5, 2) =", math.comb(5, 2))

# %%
# Residues from single-digit factors: 4 = (1, 1) and 5 = (2, 1) in base 3.
T = digit_coeff_table(Z3)
print("T =", T)
print("F_4(u_5) mod 3 =", fn_residue(4, 5, Z3), "=", T[1][2], "*", T[1][1])

# %%
# Randomized representatives: u_n is no longer n, yet the fast residue
# still equals the residue of the exact value.
Z5 = make_model("zp", 5, seed=42)
print("reps:", Z5.reps, " u_13 =", Z5.u(13))
for n, m in [(3, 13), (7, 19), (12, 24)]:
    exact = fn_eval_exact(n, Z5.u(m))
    print(f"F_{n}(u_{m}) = {exact}   residue {exact.residue()}   digit product {fn_residue(n, m, Z5)}")

# %%
# The function-field model over F_4.
F4t = make_model("fqt", 2, 2, [1, 1, 1])
x = F4t.u(6)
print("u_6 =", x)
for n in range(7):
    print(n, fn_eval_exact(n, x), fn_residue(n, 6, F4t))
