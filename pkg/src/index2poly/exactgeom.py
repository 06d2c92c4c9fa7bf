"""Exact arithmetic in Q(sqrt 5), 3-vectors, orthogonal matrices and the
full Platonic point groups [3,3], [3,4], [3,5].

Everything here is immutable and hashable so group elements and points can
live in sets and dict keys.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Iterable, Union

Rational = Union[int, Fraction]

SQRT5_FLOAT = math.sqrt(5.0)


@total_ordering
class FieldElement:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        # Fraction normalises to lowest terms with a positive denominator.
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction) -> "FieldElement":
        # both arguments already Fractions; skips re-normalisation
        x = object.__new__(cls)
        object.__setattr__(x, "a", a)
        object.__setattr__(x, "b", b)
        return x

    @classmethod
    def coerce(cls, x: "FieldElement | Rational") -> "FieldElement":
        if isinstance(x, FieldElement):
            return x
        if isinstance(x, (int, Fraction)):
            return cls(x, 0)
        raise TypeError(f"cannot coerce {type(x).__name__} to FieldElement")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        try:
            o = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        if not o:
            return self
        if not self:
            return o
        return FieldElement._raw(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement._raw(-self.a, -self.b)

    def __sub__(self, other):
        try:
            o = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        if not o:
            return self
        return FieldElement._raw(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        if not self or not o:
            return ZERO
        if not self.b and not o.b:
            return FieldElement._raw(self.a * o.a, _F0)
        return FieldElement._raw(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "FieldElement":
        """Galois conjugate ``a - b*sqrt(5)``."""
        return FieldElement(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 5 * self.b * self.b

    def inverse(self) -> "FieldElement":
        n = self.norm()
        if n == 0:
            # norm vanishes only at zero since sqrt(5) is irrational
            raise ZeroDivisionError("division by zero")
        return FieldElement(self.a / n, -self.b / n)

    def __truediv__(self, other):
        try:
            o = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return FieldElement.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- order ------------------------------------------------------------
    def sign(self) -> int:
        """Exact sign, no floating point involved."""
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 0 if (a == 0 and b == 0) else 1
        if a <= 0 and b <= 0:
            return -1
        # mixed signs: compare a^2 with 5 b^2
        if a > 0:  # b < 0
            return 1 if a * a > 5 * b * b else -1
        return 1 if 5 * b * b > a * a else -1

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, FieldElement):
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __lt__(self, other) -> bool:
        try:
            o = FieldElement.coerce(other)
        except TypeError:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * SQRT5_FLOAT

    def __repr__(self) -> str:
        return f"FieldElement({self.a!s}, {self.b!s})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            head = ""
        else:
            head = str(self.a)
        coef = self.b
        sign = "-" if coef < 0 else ("+" if head else "")
        coef = abs(coef)
        if coef == 1:
            body = "√5"
        elif coef.denominator == 1:
            body = f"{coef.numerator}√5"
        else:
            body = f"{coef.numerator}/{coef.denominator}√5"
        return f"{head}{sign}{body}"


_F0 = Fraction(0)
ZERO = FieldElement(0)
ONE = FieldElement(1)
SQRT5 = FieldElement(0, 1)
TAU = FieldElement(Fraction(1, 2), Fraction(1, 2))
TAU_INV = TAU - 1


def fe(x: "FieldElement | Rational") -> FieldElement:
    return FieldElement.coerce(x)


# -- vectors ----------------------------------------------------------------

Vec3 = tuple  # tuple[FieldElement, FieldElement, FieldElement]


def vec(x, y, z) -> Vec3:
    return (fe(x), fe(y), fe(z))


def vadd(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def vsub(u: Vec3, v: Vec3) -> Vec3:
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def vneg(u: Vec3) -> Vec3:
    return (-u[0], -u[1], -u[2])


def vscale(c, u: Vec3) -> Vec3:
    return (u[0] * c, u[1] * c, u[2] * c)


def dot(u: Vec3, v: Vec3) -> FieldElement:
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u: Vec3, v: Vec3) -> Vec3:
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def det3(u: Vec3, v: Vec3, w: Vec3) -> FieldElement:
    return dot(u, cross(v, w))


def is_zero_vec(u: Vec3) -> bool:
    return not (u[0] or u[1] or u[2])


def to_float(u: Vec3) -> tuple[float, float, float]:
    return (float(u[0]), float(u[1]), float(u[2]))


# -- isometries -------------------------------------------------------------


@dataclass(frozen=True)
class Isometry:
    """A 3x3 matrix over Q(sqrt 5), stored row-major as nine entries."""

    m: tuple

    @classmethod
    def from_rows(cls, rows) -> "Isometry":
        return cls(tuple(fe(x) for row in rows for x in row))

    @classmethod
    def identity(cls) -> "Isometry":
        return cls.from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])

    def row(self, i: int) -> Vec3:
        return self.m[3 * i : 3 * i + 3]

    def __matmul__(self, other):
        if isinstance(other, Isometry):
            a, b = self.m, other.m
            return Isometry(
                tuple(
                    a[3 * i] * b[j] + a[3 * i + 1] * b[3 + j] + a[3 * i + 2] * b[6 + j]
                    for i in range(3)
                    for j in range(3)
                )
            )
        return self.apply(other)

    def apply(self, v: Vec3) -> Vec3:
        a = self.m
        return (
            a[0] * v[0] + a[1] * v[1] + a[2] * v[2],
            a[3] * v[0] + a[4] * v[1] + a[5] * v[2],
            a[6] * v[0] + a[7] * v[1] + a[8] * v[2],
        )

    def transpose(self) -> "Isometry":
        a = self.m
        return Isometry((a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]))

    def det(self) -> FieldElement:
        return det3(self.row(0), self.row(1), self.row(2))

    def trace(self) -> FieldElement:
        return self.m[0] + self.m[4] + self.m[8]

    def is_orthogonal(self) -> bool:
        return self.transpose() @ self == Isometry.identity()

    @property
    def is_proper(self) -> bool:
        return self.det() == 1

    def is_plane_reflection(self) -> bool:
        # improper involution with a 2-dimensional fixed space
        return self.det() == -1 and self.trace() == 1

    def __repr__(self) -> str:
        rows = ["[" + ", ".join(str(x) for x in self.row(i)) + "]" for i in range(3)]
        return "Isometry(" + ", ".join(rows) + ")"


def reflection(normal: Vec3) -> Isometry:
    """Reflection in the plane through the origin orthogonal to ``normal``."""
    nn = dot(normal, normal)
    rows = []
    for i in range(3):
        rows.append([(1 if i == j else 0) - 2 * normal[i] * normal[j] / nn for j in range(3)])
    return Isometry.from_rows(rows)


GROUP_ORDERS = {"[3,3]": 24, "[3,4]": 48, "[3,5]": 120}


@dataclass(frozen=True)
class PointGroup:
    kind: str
    elements: tuple  # tuple[Isometry, ...], identity first

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def rotation_subgroup(self) -> tuple:
        return tuple(g for g in self.elements if g.is_proper)

    def __contains__(self, g: Isometry) -> bool:
        return g in self._members

    @property
    def _members(self) -> frozenset:
        return frozenset(self.elements)


def _seed_generators(kind: str) -> list[Isometry]:
    swap_xy = Isometry.from_rows([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    swap_yz = Isometry.from_rows([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    if kind == "[3,3]":
        # mirrors x=y, y=z and x=-y: the symmetric group on the even-parity cube vertices
        return [swap_xy, swap_yz, Isometry.from_rows([[0, -1, 0], [-1, 0, 0], [0, 0, 1]])]
    if kind == "[3,4]":
        return [swap_xy, swap_yz, Isometry.from_rows([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])]
    if kind == "[3,5]":
        cyc = Isometry.from_rows([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
        flip = Isometry.from_rows([[-1, 0, 0], [0, 1, 0], [0, 0, 1]])
        return [cyc, flip, reflection((TAU, ONE, TAU_INV))]
    raise ValueError(f"unknown point group kind {kind!r}")


@lru_cache(maxsize=None)
def generate_point_group(kind: str) -> PointGroup:
    """Close the seed generators of ``kind`` under composition."""
    gens = _seed_generators(kind)
    limit = GROUP_ORDERS[kind]
    ident = Isometry.identity()
    seen = {ident}
    order = [ident]
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = s @ g
                if h not in seen:
                    seen.add(h)
                    order.append(h)
                    nxt.append(h)
                    if len(order) > limit:
                        raise RuntimeError(
                            f"closure of {kind} exceeded order {limit}; seed matrices are not exact"
                        )
        frontier = nxt
    if len(order) != limit:
        raise RuntimeError(f"closure of {kind} has order {len(order)}, expected {limit}")
    return PointGroup(kind, tuple(order))


def orbit(p: Vec3, elements: Iterable[Isometry]) -> frozenset:
    """Exact, de-duplicated orbit of ``p``."""
    return frozenset(g.apply(p) for g in elements)
