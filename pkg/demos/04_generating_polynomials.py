"""
Generating polynomials of residue-class counts
==============================================

G_n(x) = sum_j eps_j(n) x^j records how many F_m(u_n), 0 <= m <= n, fall in
each class root^j. Modulo x^(q-1) - 1 it factors over the digits of n.
"""

from dvdbinom import digit_stats, eps_counts, gen_poly, make_model, theorem_rhs

Z5 = make_model("zp", 5)
for n in (3, 6, 8, 117):
    print(f"G_{n} = {gen_poly(n, Z5)}   digits-product = {theorem_rhs(n, Z5)}"
          f"   e(n) = {digit_stats(n, 5).e}")

# %%
# Counts including the zero class, by brute force and by convolution.
print(eps_counts(117, Z5, "bruteforce"))
print(eps_counts(117, Z5, "convolution"))

# %%
# The classes depend on the chosen primitive root, the totals do not.
alt = make_model("zp", 5, primitive_root=3)
print("root 2:", gen_poly(117, Z5), "  root 3:", gen_poly(117, alt))

# %%
# A function-field example over F_4 with randomized representatives.
M = make_model("fqt", 2, 2, [1, 1, 1], seed=11)
print("G_1000 over F_4:", gen_poly(1000, M), "=", theorem_rhs(1000, M))
