"""
Residue fields and primitive roots
==================================

Every model works over a finite residue field F_q. Elements are integer
codes whose base-p digits are polynomial coefficients in the generator y.
"""

from dvdbinom import build_field

# %%
# A prime field and the field with four elements, built from y^2 + y + 1.
F5 = build_field(5)
F4 = build_field(2, 2, [1, 1, 1])
print(F5, F4)

# %%
# Multiplication in F_4: y * y = y + 1, i.e. code 2 * code 2 = code 3.
for a in range(4):
    print([F4.mul(a, b) for b in range(4)])

# %%
# Discrete logs are taken to the base of the fixed primitive root. The
# default is the smallest code of full order; any other generator can be
# passed explicitly.
print("dlog_2(4) in F_5:", F5.dlog(4))
print("primitive roots of F_5:", F5.primitive_roots)
alt = build_field(5, primitive_root=3)
print("dlog_3(4) in F_5:", alt.dlog(4))

# %%
# Without a modulus the smallest irreducible polynomial is chosen.
F8 = build_field(2, 3)
print("F_8 modulus (low coefficient first):", list(F8.modulus))
