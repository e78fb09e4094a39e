"""Exact scalars: rationals and quadratic extensions Q(sqrt(d)).

Everything in this package is computed over Q or over a quadratic
extension Q(sqrt(d)) with d a fixed squarefree integer (default -3, which
hosts the primitive cube root of unity zeta = (-1+sqrt(-3))/2).  Rationals
are plain ``fractions.Fraction`` values, which are always stored reduced
with a positive denominator.  Extension elements are ``QuadExt`` pairs
a + b*sqrt(d) with Fraction parts; arithmetic is exact and the Galois
involution sqrt(d) -> -sqrt(d) is available on every value through
:func:`conj`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateError, FieldMismatchError, StructureError

Rational = Fraction


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        while n % p == 0:
            n //= p
        p += 1
    return True


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class QuadExt:
    """Element a + b*sqrt(d) of the quadratic field Q(sqrt(d)).

    d is squarefree and fixed per value; mixing discriminants in
    arithmetic raises :class:`FieldMismatchError`.  Values are immutable.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d: int = -3):
        if not _is_squarefree(d) or d == 1:
            raise StructureError(f"discriminant must be squarefree and != 0, 1: {d}")
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))
        object.__setattr__(self, "d", d)

    def __setattr__(self, *args):
        raise AttributeError("QuadExt values are immutable")

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d and other.b != 0 and self.b != 0:
                raise FieldMismatchError(
                    f"mixed discriminants: sqrt({self.d}) vs sqrt({other.d})")
            if other.d != self.d:
                # one side is rational; move it into this field
                if other.b == 0:
                    return QuadExt(other.a, 0, self.d)
                raise FieldMismatchError(
                    f"mixed discriminants: sqrt({self.d}) vs sqrt({other.d})")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadExt(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(o.a - self.a, o.b - self.b, self.d)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        """Field norm x * conj(x) = a^2 - d*b^2, always a rational."""
        return self.a * self.a - self.d * self.b * self.b

    def conj(self) -> "QuadExt":
        """Galois conjugate a - b*sqrt(d)."""
        return QuadExt(self.a, -self.b, self.d)

    def inverse(self) -> "QuadExt":
        n = self.norm()
        if n == 0:
            raise DegenerateError("division by zero in Q(sqrt(%d))" % self.d)
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        out = QuadExt(1, 0, self.d)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.d != other.d:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __str__(self):
        return scalar_str(self)

    def __repr__(self):
        return f"QuadExt({self.a!r}, {self.b!r}, d={self.d})"


def conj(x):
    """Galois conjugate of a scalar; rationals are fixed."""
    if isinstance(x, QuadExt):
        return x.conj()
    if isinstance(x, (int, Fraction)):
        return x
    raise TypeError(f"cannot conjugate {x!r}")


def is_zero(x) -> bool:
    return not x


def scalar_str(x) -> str:
    """Report form: "a/b" for rationals, "a/b+c/e*sqrt(d)" for extensions."""
    if isinstance(x, (int, Fraction)):
        return str(x)
    if isinstance(x, QuadExt):
        if x.b == 0:
            return str(x.a)
        root = f"sqrt({x.d})"
        if x.b == 1:
            tail = root
        elif x.b == -1:
            tail = f"-{root}"
        else:
            tail = f"{x.b}*{root}"
        if x.a == 0:
            return tail
        sign = "+" if x.b > 0 else ""
        return f"{x.a}{sign}{tail}"
    raise TypeError(f"not a scalar: {x!r}")


def qext_arith(op: str, x: QuadExt, y: QuadExt) -> QuadExt:
    """Exact field arithmetic, op in {"add", "sub", "mul"}."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise StructureError(f"unknown op {op!r}")


def qext_inv(x: QuadExt) -> QuadExt:
    """Multiplicative inverse (a - b*sqrt(d)) / (a^2 - d*b^2)."""
    return x.inverse()


def conjugate(x):
    """Spec-level alias of :func:`conj`."""
    return conj(x)


class QuadField:
    """Factory fixing one discriminant, so call sites stay uncluttered."""

    def __init__(self, d: int = -3):
        if not _is_squarefree(d) or d == 1:
            raise StructureError(f"bad discriminant {d}")
        self.d = d

    def of(self, a, b=0) -> QuadExt:
        return QuadExt(a, b, self.d)

    @property
    def sqrt(self) -> QuadExt:
        return QuadExt(0, 1, self.d)

    @property
    def one(self) -> QuadExt:
        return QuadExt(1, 0, self.d)

    @property
    def zero(self) -> QuadExt:
        return QuadExt(0, 0, self.d)

    def zeta(self) -> QuadExt:
        """Primitive cube root of unity; only lives in Q(sqrt(-3))."""
        if self.d != -3:
            raise StructureError("zeta requires d = -3")
        return QuadExt(Fraction(-1, 2), Fraction(1, 2), -3)

    def random(self, rng, span: int = 9, nonzero: bool = False) -> QuadExt:
        while True:
            a = Fraction(rng.randint(-span, span), rng.randint(1, span))
            b = Fraction(rng.randint(-span, span), rng.randint(1, span))
            x = QuadExt(a, b, self.d)
            if not nonzero or x:
                return x

    def __repr__(self):
        return f"QuadField(d={self.d})"


def random_rational(rng, span: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        x = Fraction(rng.randint(-span, span), rng.randint(1, span))
        if not nonzero or x != 0:
            return x
