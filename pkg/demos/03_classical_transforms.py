"""The classical transform between a matrix group and its skew space.

For each involution kind the map a -> (1 - a)(1 + a)^-1 takes group
points (iota(a) a = 1) to skew elements (iota(x) = -x) and is its own
inverse; conjugating first or transforming first makes no difference.
The projective variant [a] -> (n / tr a) a - 1 handles the quotient by
scalars, with an honest symbolic proof of scalar invariance.
"""

import random
from fractions import Fraction

from cayleycert import (QuadField, cayley_conjugation_equivariance,
                        cayley_transform, cayley_transform_of_skew, pgl_cayley,
                        symplectic_alg, unitary_alg)
from cayleycert.classical import pgl_scalar_invariance
from cayleycert.matrices import mat_str, trace

print("Symplectic, size 2: the quarter rotation goes to its own negative.")
alg = symplectic_alg(2)
a = ((Fraction(0), Fraction(1)), (Fraction(-1), Fraction(0)))
x = cayley_transform(alg, a)
print("  a =", mat_str(a))
print("  transform(a) =", mat_str(x), " trace:", trace(x))
print("  back again:  ", mat_str(cayley_transform_of_skew(alg, x)))
print()

print("Hermitian over Q(sqrt(-3)): diag(zeta, zeta^2, 1) is unitary.")
F = QuadField(-3)
zeta = F.zeta()
ualg = unitary_alg(3)
d = ((zeta, F.zero, F.zero), (F.zero, zeta ** 2, F.zero), (F.zero, F.zero, F.one))
xu = cayley_transform(ualg, d)
print("  skew-Hermitian image:", mat_str(xu))
print("  round trip exact:", cayley_transform_of_skew(ualg, xu) == d)
print()

print("Conjugation equivariance at random group points:")
rng = random.Random(2024)
hits = 0
for _ in range(5):
    p = ualg.random_group_point(rng)
    g = ualg.random_group_point(rng)
    hits += cayley_conjugation_equivariance(ualg, p, g)
print(f"  {hits} of 5 random (a, g) pairs satisfy "
      "transform(g a g^-1) = g transform(a) g^-1 exactly")
print()

print("Quotient by scalars, size 3:")
pair = pgl_cayley(3)
pt = [Fraction(0)] * 9
pt[0], pt[4], pt[8] = Fraction(2), Fraction(1), Fraction(1)
img = [c.eval(tuple(pt)) for c in pair.forward.components]
print("  [diag(2,1,1)] maps to diag(%s, %s, %s), traceless" % (img[0], img[4], img[8]))
print("  scalar invariance of the forward map, symbolically:",
      pgl_scalar_invariance(3))
