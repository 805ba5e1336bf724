"""
Degenerating the coordinate cross
=================================

The cross xy = 0 with weights (1, -1) has a one-parameter family whose
fibre at 0 is the product of attractor and repeller over the fixed points.
That family is not flat: t kills xy.
"""

from fractions import Fraction

from gmtilde.gmaction import GradedAlgebra
from gmtilde.interpolation import build_interpolation, embedding_ideal, fiber_at, t_torsion

A = GradedAlgebra.from_strings([("x", 1), ("y", -1)], ["x*y"])
B = build_interpolation(A)
print("family:", B.algebra)

for t in (Fraction(1), Fraction(-2, 3), Fraction(0)):
    fib = fiber_at(B, t)
    print(f"fibre at t = {t}: {fib.algebra}   matches expected: {fib.isomorphic}")

print("t-torsion:", [str(g) for g in t_torsion(B).generators])

# the family as a subscheme of A^1 x Z x Z
emb = embedding_ideal(B)
print("embedding ideal:")
for g in emb.reduced():
    print("   ", g)
