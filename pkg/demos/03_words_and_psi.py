"""
Digit words, class sets and the pairing psi
===========================================

A word of digit labels names both an element of V (upsilon) and an integer
(z). For each class j, S_j(w) collects the m <= z(w) with
F_m(upsilon(w)) congruent to root^j.
"""

from dvdbinom import DigitWord, concat, make_model, psi, s_sets, upsilon, verify_bijection, z_of

Z3 = make_model("zp", 3)
a, b = DigitWord((1,)), DigitWord((1,))
ab = concat(a, b)
print("upsilon(1,1) =", upsilon(ab, Z3), " z(1,1) =", z_of(ab, 3))

# %%
# psi(l, m) = l + q^deg(a) * m pairs class sets of a and b onto those of ab.
sa, _ = s_sets(a, Z3)
sb, _ = s_sets(b, Z3)
print("S_0(a) =", sa[0], " S_0(b) =", sb[0])
print("images:", sorted(psi(l, m, a, 3) for l in sa[0] for m in sb[0]))
print("S_0(ab) =", s_sets(ab, Z3)[0][0])

# %%
# The same check on a longer pair in F_4[t]_(t) with random representatives.
M = make_model("fqt", 2, 2, [1, 1, 1], seed=7)
a, b = DigitWord((3, 0, 2)), DigitWord((1, 3))
for n in range(3):
    r = verify_bijection(a, b, n, M)
    print(f"n={n}: ok={r.ok} |S_n(ab)|={r.details.get('card')}")
