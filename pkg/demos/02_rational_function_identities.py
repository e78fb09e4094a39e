"""Exact identity testing for rational functions, with variety charts.

No floating point and no probabilistic shortcut: equality of rational
functions is decided by cross multiplication and full expansion, and
identities that only hold on a torus or a linear slice are decided after
substituting the chart of the relation.
"""

from cayleycert import RatFunc, chart_restrict, ratfunc_compose, ratfunc_equal

V = ("x1", "x2", "x3")
x1, x2, x3 = RatFunc.variables(V)

print("Cancellation is invisible to the representation but not to equality:")
f = (x1 ** 2 - 1) / (x1 - 1)
print("  (x1^2 - 1)/(x1 - 1) == x1 + 1 ?", ratfunc_equal(f, x1 + 1))
print("  (x1 + x2)/x2 == x1 ?          ", ratfunc_equal((x1 + x2) / x2, x1))
print()

print("Composition clears denominators exactly:")
g = x1 + 1 / x1
h = ratfunc_compose(g, (1 / x1, x2, x3))
print("  x + 1/x after x -> 1/x:", h, " same function:", ratfunc_equal(h, g))
print()

print("Charts make 'equal modulo a relation' decidable.")
print("On the torus x1 x2 x3 = 1, eliminate x3:")
r = chart_restrict(x2 / x3, "torus-product", "x3")
print("  x2/x3 restricts to:", r)
r2 = chart_restrict(x1 * x2 * x3, "torus-product", "x3")
print("  x1 x2 x3 restricts to:", r2)
print()

print("On the slice x1 + x2 + x3 = 0, eliminate x3:")
s = chart_restrict(x1 + x2 + x3, "linear-sum", "x3")
print("  x1 + x2 + x3 restricts to:", s)
print()

print("The same mechanism handles the Segre quadric a11 a22 = a12 a21,")
print("read as the monomial relation a11 * a12^-1 * a21^-1 * a22 = 1:")
Q = ("a11", "a12", "a21", "a22")
a21 = RatFunc.variable(Q, "a21")
solved = chart_restrict(a21, "torus-product", "a21",
                        variables=Q, exponents=(1, -1, -1, 1))
print("  a21 on the chart becomes:", solved)
