"""Conic parameterization, its group law, and the compactification surfaces.

The circle conic C in the plane is rationally parameterized by
f([u, v]) = [u^2 - v^2, 2uv, u^2 + v^2] and carries the group law
[u, v] * [u', v'] = [uu' - vv', uv' + u'v] on parameters.  Both the
parameterization identity and the fact that f is a homomorphism onto the
conic's law are exact polynomial identities, expanded and certified here.

The surface X in the triple product of projective lines is cut out by the
trilinear equation saying the three conic points multiply to the identity;
the cubic Y with equation t1 t2 t3 = t0^3 compactifies the diagonal torus
and has exactly three singular points, detected by exact gradient
evaluation.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, StructureError
from .field import random_rational
from .poly import Poly
from .ratmap import (Block, Certificate, VarietySpec, projective_space)

UV = ("u", "v")
UV2 = ("u", "v", "u2", "v2")


def conic_param_components():
    """[u, v] -> [u^2 - v^2, 2uv, u^2 + v^2], returned as polynomials."""
    u = Poly.variable(UV, "u")
    v = Poly.variable(UV, "v")
    return (u * u - v * v, 2 * u * v, u * u + v * v)


def parameter_law(a, b):
    """The group law on parameters: (u, v) * (u', v') = (uu'-vv', uv'+u'v).

    Works on any ring elements, scalars and polynomials alike.
    """
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def parameter_inverse(a):
    return (a[0], -a[1])


def conic_law(p, q):
    """The induced law on conic triples (t1, t2, t0) order: complex
    multiplication on the first two coordinates, product on the last."""
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0], p[2] * q[2])


@dataclass
class SurfaceSpec:
    """A hypersurface in a product of projective blocks."""

    name: str
    ambient: VarietySpec
    equation: Poly

    def __post_init__(self):
        if self.equation.vars != self.ambient.coords:
            raise StructureError("equation variables must match the ambient")
        for block, start, stop in self.ambient.block_slices():
            idx = range(start, stop)
            degs = set()
            for exps in self.equation.terms:
                degs.add(sum(exps[i] for i in idx))
            if len(degs) > 1:
                raise StructureError(
                    f"{self.name}: equation is not homogeneous in block "
                    f"{block.coords}")


def surface_membership(s: SurfaceSpec, point) -> bool:
    """Exact: the defining polynomial vanishes at the point."""
    if len(point) != len(s.ambient.coords):
        raise StructureError(
            f"point arity {len(point)} does not match ambient "
            f"{len(s.ambient.coords)}")
    return not s.equation.eval(point)


def singular_points(s: SurfaceSpec, candidates):
    """Flag each on-surface candidate singular iff the full gradient
    vanishes there; off-surface candidates are precondition errors."""
    grads = [s.equation.derivative(v) for v in s.ambient.coords]
    verdicts = []
    for p in candidates:
        if not surface_membership(s, p):
            raise PreconditionError(f"candidate {p} is not on {s.name}")
        verdicts.append(all(not g.eval(p) for g in grads))
    return verdicts


def surface_X() -> SurfaceSpec:
    """Type (1,1,1) hypersurface in (P^1)^3: the triple product is trivial."""
    coords = ("u1", "v1", "u2", "v2", "u3", "v3")
    blocks = tuple(Block("projective", (f"u{i}", f"v{i}")) for i in (1, 2, 3))
    ambient = VarietySpec("P1xP1xP1", blocks)
    c = {n: Poly.variable(coords, n) for n in coords}
    eq = (c["u1"] * c["u2"] * c["v3"] - c["v1"] * c["v2"] * c["v3"]
          + c["u1"] * c["v2"] * c["u3"] + c["u2"] * c["v1"] * c["u3"])
    return SurfaceSpec("X", ambient, eq)


def surface_Y() -> SurfaceSpec:
    """The cubic t1 t2 t3 = t0^3 in P^3."""
    coords = ("t0", "t1", "t2", "t3")
    ambient = projective_space("P3", coords)
    c = {n: Poly.variable(coords, n) for n in coords}
    eq = c["t1"] * c["t2"] * c["t3"] - c["t0"] ** 3
    return SurfaceSpec("Y", ambient, eq)


def surface_Q() -> SurfaceSpec:
    """The Segre quadric a11 a22 = a12 a21 in P^3."""
    coords = ("a11", "a12", "a21", "a22")
    ambient = projective_space("P3", coords)
    c = {n: Poly.variable(coords, n) for n in coords}
    eq = c["a11"] * c["a22"] - c["a12"] * c["a21"]
    return SurfaceSpec("Q", ambient, eq)


def surface_C() -> SurfaceSpec:
    """The plane conic t1^2 + t2^2 = t0^2."""
    coords = ("t0", "t1", "t2")
    ambient = projective_space("P2", coords)
    c = {n: Poly.variable(coords, n) for n in coords}
    eq = c["t1"] ** 2 + c["t2"] ** 2 - c["t0"] ** 2
    return SurfaceSpec("C", ambient, eq)


# -- certificates ------------------------------------------------------------

def conic_certificate(seed: int = 42, trials: int = 100) -> Certificate:
    """All the conic identities, as exact polynomial expansions."""
    t0 = time.perf_counter()
    cert = Certificate(construction="appendix.conic", seed=seed)

    t1, t2, tt0 = conic_param_components()
    on_c = t1 * t1 + t2 * t2 - tt0 * tt0
    cert.add("parameterization-on-conic", "pass" if on_c.is_zero() else "fail",
             "(u^2-v^2)^2 + (2uv)^2 = (u^2+v^2)^2")

    a = (Poly.variable(UV2, "u"), Poly.variable(UV2, "v"))
    b = (Poly.variable(UV2, "u2"), Poly.variable(UV2, "v2"))

    def param_image(p):
        return (p[0] * p[0] - p[1] * p[1], 2 * p[0] * p[1],
                p[0] * p[0] + p[1] * p[1])

    lhs = param_image(parameter_law(a, b))
    rhs = conic_law(param_image(a), param_image(b))
    homo = all((l - r).is_zero() for l, r in zip(lhs, rhs))
    cert.add("homomorphism-identity", "pass" if homo else "fail",
             "f([u,v]*[u',v']) = f([u,v]) * f([u',v']), coordinatewise in 4 variables")

    ident = tuple(c.eval((Fraction(1), Fraction(0))) for c in conic_param_components())
    cert.add("identity-element", "pass" if ident == (1, 0, 1) else "fail",
             "f([1,0]) = [1, 0, 1]")

    inv = parameter_law(a[:2], (a[0], -a[1]))
    inv_ok = inv[1].is_zero() and not inv[0].is_zero()
    cert.add("inverse-law", "pass" if inv_ok else "fail",
             "[u,v]*[u,-v] = [u^2+v^2, 0] ~ [1, 0]")

    six = ("u", "v", "u2", "v2", "u3", "v3")
    av = (Poly.variable(six, "u"), Poly.variable(six, "v"))
    bv = (Poly.variable(six, "u2"), Poly.variable(six, "v2"))
    cv = (Poly.variable(six, "u3"), Poly.variable(six, "v3"))
    assoc = parameter_law(parameter_law(av, bv), cv)
    assoc2 = parameter_law(av, parameter_law(bv, cv))
    cert.add("associativity",
             "pass" if all((x - y).is_zero() for x, y in zip(assoc, assoc2))
             else "fail")
    comm = parameter_law(a, b)
    comm2 = parameter_law(b, a)
    cert.add("commutativity",
             "pass" if all((x - y).is_zero() for x, y in zip(comm, comm2))
             else "fail")

    sC = surface_C()
    rng = random.Random(seed)
    ok = 0
    for _ in range(min(trials, 50)):
        p = (random_rational(rng), random_rational(rng, nonzero=True))
        img = param_image(p)
        if surface_membership(sC, (img[2], img[0], img[1])):
            ok += 1
    cert.add("random-images-on-conic", "pass" if ok == min(trials, 50) else "fail",
             f"{ok} sampled parameter points")
    cert.ms = 1000 * (time.perf_counter() - t0)
    return cert


def x_membership_certificate(seed: int = 42, trials: int = 100) -> Certificate:
    """Random torus triples with z = (x*y)^-1 lie on X, exactly."""
    t0 = time.perf_counter()
    cert = Certificate(construction="appendix.X", seed=seed)
    sX = surface_X()
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        x = (random_rational(rng), random_rational(rng, nonzero=True))
        y = (random_rational(rng), random_rational(rng, nonzero=True))
        z = parameter_inverse(parameter_law(x, y))
        if not surface_membership(sX, x + y + z):
            failures += 1
    cert.add("triple-product-membership", "pass" if failures == 0 else "fail",
             f"{trials} random triples, {failures} failures")
    base = surface_membership(sX, (Fraction(1), Fraction(0)) * 3)
    cert.add("identity-triple", "pass" if base else "fail",
             "((1,0),(1,0),(1,0)) lies on X")
    cert.ms = 1000 * (time.perf_counter() - t0)
    return cert


def y_singular_certificate(seed: int = 42, trials: int = 20) -> Certificate:
    """The cubic has exactly the three coordinate singular points; random
    torus points are nonsingular."""
    t0 = time.perf_counter()
    cert = Certificate(construction="appendix.Y.singular", seed=seed)
    sY = surface_Y()
    zero, one = Fraction(0), Fraction(1)
    trio = [(zero, one, zero, zero), (zero, zero, one, zero),
            (zero, zero, zero, one)]
    flags = singular_points(sY, trio)
    cert.add("three-singular-points", "pass" if all(flags) else "fail",
             "all coordinate candidates have vanishing gradient")
    rng = random.Random(seed)
    smooth = 0
    for _ in range(trials):
        a = random_rational(rng, nonzero=True)
        b = random_rational(rng, nonzero=True)
        p = (one, a, b, 1 / (a * b))
        if not singular_points(sY, [p])[0]:
            smooth += 1
    cert.add("random-smooth-points", "pass" if smooth == trials else "fail",
             f"{smooth} of {trials} flagged nonsingular")

    sQ = surface_Q()
    q_pt = (one, Fraction(2), Fraction(3), Fraction(6))
    q_ok = surface_membership(sQ, q_pt) and not singular_points(sQ, [q_pt])[0]
    cert.add("quadric-smooth-point", "pass" if q_ok else "fail")
    sC = surface_C()
    c_ok = not singular_points(sC, [(one, one, zero)])[0]
    cert.add("conic-smooth-point", "pass" if c_ok else "fail",
             "gradient (-2, 2, 0) at [1, 1, 0]")
    cert.ms = 1000 * (time.perf_counter() - t0)
    return cert


def y_membership_certificate(seed: int = 42, trials: int = 50) -> Certificate:
    t0 = time.perf_counter()
    cert = Certificate(construction="appendix.Y", seed=seed)
    sY = surface_Y()
    rng = random.Random(seed)
    ok = 0
    for _ in range(trials):
        a = random_rational(rng, nonzero=True)
        b = random_rational(rng, nonzero=True)
        if surface_membership(sY, (Fraction(1), a, b, 1 / (a * b))):
            ok += 1
    cert.add("torus-membership", "pass" if ok == trials else "fail",
             f"{ok} of {trials} points with t1 t2 t3 = t0^3")
    cert.ms = 1000 * (time.perf_counter() - t0)
    return cert


conic_suite = conic_certificate
