"""
Residue-class triangles
=======================

Row n, column m holds the class of F_m(u_n). Zero residues give the
familiar Sierpinski-type pattern; the grey levels show the unit classes.
"""

import sys

import numpy as np

from dvdbinom import class_triangle, make_model
from dvdbinom.cli import pgm_bytes

M = make_model("zp", 5)
tri = class_triangle(30, M)

# %%
# Text rendering of the first rows.
for n in range(12):
    print(" ".join("." if c < 0 else str(c) for c in tri[n, : n + 1]))

# %%
# Fraction of zero residues in the first 125 rows (q^3 rows for q = 5).
big = class_triangle(124, M)
lower = np.tril(np.ones_like(big, dtype=bool))
print("zero fraction:", float((big[lower] < 0).mean()))

# %%
# Write a PGM image (same encoding as ``dvdbinom triangle --format pgm``).
out = sys.argv[1] if len(sys.argv) > 1 else "triangle_q4.pgm"
F4 = make_model("fqt", 2, 2, [1, 1, 1])
with open(out, "wb") as fh:
    fh.write(pgm_bytes(class_triangle(255, F4), F4.q))
print("wrote", out)
