"""Coordinate model of the flop correspondence for G(2,4).

Near a point of the zero section, the exceptional locus of the blown-up
deformation space is a projective 4-space with homogeneous coordinates
(alpha : x : y : z : w); the correspondence degenerates there to an
explicit rational map into the dual Grassmannian sitting inside P^5 as
the Pluecker quadric.  This module evaluates that limit map, the quadric
form, its indeterminacy locus, the rank-one determinantal model of the
fiber-product singularities, and the dimensions of Springer fibers.

Everything is generic over the scalars: exact rationals, integers, prime
fields, or the small polynomial type used for the symbolic identity
check all work, since only ring operations are used.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Sequence


# ---------------------------------------------------------------------------
# Scalars: prime fields for fuzzing
# ---------------------------------------------------------------------------

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, isqrt(n) + 1):
        if n % d == 0:
            return False
    return True


@dataclass(frozen=True)
class FpElement:
    """An element of Z/pZ supporting ring operations; no division needed."""

    modulus: int
    value: int

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.modulus != self.modulus:
                raise ValueError("mixed moduli")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.modulus, (self.value + v) % self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.modulus, (self.value - v) % self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.modulus, (v - self.value) % self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.modulus, (self.value * v) % self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FpElement(self.modulus, -self.value % self.modulus)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.value % self.modulus == other % self.modulus
        if isinstance(other, FpElement):
            return self.modulus == other.modulus and self.value % self.modulus == other.value % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((self.modulus, self.value % self.modulus))

    def __bool__(self):
        return self.value % self.modulus != 0

    def __repr__(self):
        return f"{self.value % self.modulus} (mod {self.modulus})"


class PrimeField:
    """Factory for FpElement values: F = PrimeField(32003); F(5)."""

    def __init__(self, p: int):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p

    def __call__(self, v: int) -> FpElement:
        return FpElement(self.p, v % self.p)

    def __repr__(self):
        return f"PrimeField({self.p})"


# ---------------------------------------------------------------------------
# The limit map and the Pluecker quadric
# ---------------------------------------------------------------------------

def pluecker_limit_map(pt: Sequence):
    """Image of (alpha : x : y : z : w) under the limit of the flop
    correspondence, in Pluecker coordinates (p12:p13:p14:p23:p24:p34).

    The limiting subspace is spanned by (alpha, 0, x, y) and
    (0, alpha, z, w); taking 2x2 minors gives the formula below.  The
    all-zero output is meaningful: it marks the indeterminacy locus.
    """
    alpha, x, y, z, w = pt
    return (
        alpha * alpha,
        alpha * z,
        alpha * w,
        -(alpha * x),
        -(alpha * y),
        x * w - y * z,
    )


def quadric_value(pt: Sequence):
    """The Pluecker quadric p12 p34 - p13 p24 + p14 p23 evaluated at pt."""
    p12, p13, p14, p23, p24, p34 = pt
    return p12 * p34 - p13 * p24 + p14 * p23


def is_indeterminate(pt: Sequence) -> bool:
    """True iff the limit map sends pt to the zero tuple.

    Equivalent to alpha = 0 and xw - yz = 0.  The all-zero input is not a
    projective point and is rejected.
    """
    alpha, x, y, z, w = pt
    if all(not (c != 0) for c in (alpha, x, y, z, w)):
        raise ValueError("the all-zero tuple is not a projective point")
    return not (alpha != 0) and not (x * w - y * z != 0)


def determinantal_membership(p8: Sequence) -> bool:
    """Membership in the rank-<=1 locus of [[x,y,z,w],[-v,t,u,-s]].

    Input order (x, y, z, w, s, t, u, v); true iff all six 2x2 minors
    vanish.  This is the local model of the fiber-product singularities
    along the graph of the duality isomorphism.
    """
    x, y, z, w, s, t, u, v = p8
    top = (x, y, z, w)
    bottom = (-v, t, u, -s)
    for i in range(4):
        for j in range(i + 1, 4):
            if top[i] * bottom[j] - top[j] * bottom[i] != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# Symbolic identity: the limit map lands on the quadric
# ---------------------------------------------------------------------------

class _Poly:
    """Minimal multivariate polynomial over Z: {exponent tuple: coeff}."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {e: c for e, c in (terms or {}).items() if c}

    @classmethod
    def variable(cls, n, i):
        e = tuple(int(j == i) for j in range(n))
        return cls(n, {e: 1})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return _Poly(self.n, out)

    def __sub__(self, other):
        return self + (-1) * other

    def __rmul__(self, k):
        return _Poly(self.n, {e: k * c for e, c in self.terms.items()})

    def __neg__(self):
        return (-1) * self

    def __mul__(self, other):
        if isinstance(other, int):
            return other * self
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return _Poly(self.n, out)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({(0,) * self.n: other} if other else {})
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def is_zero(self):
        return not self.terms


def quadric_vanishes_identically() -> bool:
    """Expand the quadric on the image of the limit map symbolically and
    check it is the zero polynomial in (alpha, x, y, z, w)."""
    vars5 = tuple(_Poly.variable(5, i) for i in range(5))
    image = pluecker_limit_map(vars5)
    return quadric_value(image).is_zero()


# ---------------------------------------------------------------------------
# Springer fibers
# ---------------------------------------------------------------------------

def springer_fiber(t: int, h: int, i: int) -> tuple[tuple[int, int], int]:
    """Grassmannian type and dimension of a Springer fiber.

    Over a square-zero endomorphism of rank i, the fiber of the
    resolution of the rank-<=t locus is the Grassmannian of (t-i)-planes
    in an (h-2i)-space, of dimension (t-i)(h-t-i).  The extremes: i = t
    gives a point (the resolution is an isomorphism over the open
    stratum), i = 0 gives the whole zero-section Grassmannian.
    """
    if not (0 <= i <= t and 2 * t <= h):
        raise ValueError(f"need 0 <= i <= t and 2t <= h, got t={t}, h={h}, i={i}")
    return (t - i, h - 2 * i), (t - i) * (h - t - i)
