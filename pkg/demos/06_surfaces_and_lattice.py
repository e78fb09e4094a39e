"""The conic group law, the compactification surfaces, and the divisor ledger.

The circle conic is rationally parameterized and the parameterization is a
group homomorphism, as an exact polynomial identity.  Three conic points
multiplying to the identity cut out a surface in the triple product of
lines whose divisor-class lattice carries the whole symmetry story: six
line classes in a hexagon, a conjugation isometry pairing opposite sides,
and an invariant lattice spanned by the canonical class alone.
"""

import random
from fractions import Fraction

from cayleycert import (LedgerStep, inter, invariant_sublattice, ledger_run,
                        line_classes, singular_points, standard_actions,
                        surface_membership)
from cayleycert.picard import CANONICAL, galois_matrix, mat_apply
from cayleycert.surfaces import (conic_param_components, parameter_inverse,
                                 parameter_law, surface_X, surface_Y)

print("Conic parameterization f([u,v]) = [u^2 - v^2, 2uv, u^2 + v^2]:")
t1, t2, t0 = conic_param_components()
print("  on-conic identity t1^2 + t2^2 - t0^2 expands to:",
      t1 * t1 + t2 * t2 - t0 * t0)
print()

print("Random torus triples land on the surface X:")
rng = random.Random(99)
sX = surface_X()
hits = 0
for _ in range(10):
    x = (Fraction(rng.randint(-9, 9)), Fraction(rng.randint(1, 9)))
    y = (Fraction(rng.randint(-9, 9)), Fraction(rng.randint(1, 9)))
    z = parameter_inverse(parameter_law(x, y))
    hits += surface_membership(sX, x + y + z)
print(f"  {hits} of 10 triples (x, y, (x*y)^-1) satisfy the trilinear equation")
print()

print("The cubic t1 t2 t3 = t0^3 has exactly three singular points:")
sY = surface_Y()
zero, one = Fraction(0), Fraction(1)
trio = [(zero, one, zero, zero), (zero, zero, one, zero), (zero, zero, zero, one)]
print("  gradient vanishes at the coordinate points:", singular_points(sY, trio))
print("  one random torus point is smooth:",
      not singular_points(sY, [(one, Fraction(2), Fraction(3), Fraction(1, 6))])[0])
print()

print("Divisor-class lattice of the degree-6 surface:")
print("  K = (-3, 1, 1, 1), K.K =", inter(CANONICAL, CANONICAL))
labels, classes = line_classes()
print("  line classes:", ", ".join(labels))
g = galois_matrix()
print("  conjugation sends e1 to", mat_apply(g, classes[0]), "= f1")
basis = invariant_sublattice([m for _, m in standard_actions()])
print("  invariant sublattice of the full action:", basis)
print()

print("Self-intersection ledger across two birational links:")
values, _ = ledger_run(6, [LedgerStep("blowup", 1), LedgerStep("blowdown", 3)])
print("  start 6, blow up a point, blow down three conics:", values)
values, _ = ledger_run(8, [LedgerStep("blowup", 5), LedgerStep("blowdown", 2)])
print("  start 8, degree-5 subscheme up, degree-2 down:   ", values)
