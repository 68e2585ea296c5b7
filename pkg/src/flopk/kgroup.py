"""The Grothendieck lattice of G(t,h) and the flop correspondence matrix.

K(G) is free abelian on the classes of Schur powers of the tautological
subbundle, indexed by box partitions in the canonical order.  Pulling
back along the bundle projections identifies this lattice with the
K-groups of the cotangent space and of its one-parameter deformation, so
a single coordinate lattice serves all three; the correspondence induced
by the dual-Grassmannian flop acts on it by sending each basis class to
the class of the dual Schur power, and this module computes that matrix
together with its unimodularity and Smith-form certificates.

Expansion of an arbitrary tautological class works by one mechanism
everywhere: take its Chern character (module chow), solve against the
character matrix of the basis, and demand an integral solution.  A
non-integral solution can only come from a malformed expression or an
implementation bug, never from rounding, and raises NonIntegralExpansion.

A classical identity behind the involution property: for alpha in the
t x (h-t) box, the dual Schur power of the subbundle is isomorphic to
the Schur power of the rotated box complement of alpha twisted by
O(h-t), so dualizing permutes the basis up to a uniform twist (see
``dual_twist_pair``).  One consequence worth recording: the restriction
of a basis bundle to the central fiber of the one-parameter deformation
sits in a two-term exact sequence with the bundle itself on both ends,
so its K-class is the difference of equal classes, i.e. zero; classes
supported on the central fiber vanish in the deformed lattice.  That is
a modeling identity, not an operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import gcd

from .chow import (
    SchubertVector,
    chern_character,
    ch_matrix_inverse,
    dual_chern_character,
    line_chern_character,
    quot_chern_character,
    rational_inverse,
)
from .partitions import BoxShape, Partition, enumerate_box, partitions_of


class NonIntegralExpansion(Exception):
    """A Chern-character solve produced non-integer coordinates.

    Every genuine K-class expands integrally in the Schur-power basis, so
    this always signals a malformed expression or a bug upstream, never a
    value to be rounded.
    """


# ---------------------------------------------------------------------------
# K-vectors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class KVector:
    """Integer coordinates in the Schur-power basis, canonical box order."""

    box: BoxShape
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.box.rank:
            raise ValueError(
                f"expected {self.box.rank} coordinates for {self.box}, "
                f"got {len(self.coords)}"
            )

    @classmethod
    def basis_vector(cls, box: BoxShape, alpha) -> "KVector":
        alpha = Partition(alpha)
        idx = enumerate_box(box).index(alpha)
        return cls(box, tuple(int(i == idx) for i in range(box.rank)))

    def coefficient(self, alpha) -> int:
        return self.coords[enumerate_box(self.box).index(Partition(alpha))]

    def as_dict(self) -> dict[Partition, int]:
        basis = enumerate_box(self.box)
        return {p: c for p, c in zip(basis, self.coords) if c}

    def __add__(self, other: "KVector") -> "KVector":
        if self.box != other.box:
            raise ValueError("box mismatch")
        return KVector(self.box, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "KVector") -> "KVector":
        if self.box != other.box:
            raise ValueError("box mismatch")
        return KVector(self.box, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __rmul__(self, n: int) -> "KVector":
        return KVector(self.box, tuple(n * c for c in self.coords))

    def __str__(self):
        parts = []
        for p, c in self.as_dict().items():
            parts.append(f"{c}[S^{p.text()}]")
        return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# Formal tautological class expressions
# ---------------------------------------------------------------------------

# Atom kinds: ("sub", alpha) Schur power of the subbundle, ("sub*", alpha)
# of its dual, ("quot", alpha) of the quotient, ("line", k) the line bundle
# O(k), ("tangent_wedge", i) the i-th exterior power of the tangent bundle.
_Atom = tuple


class TautClass:
    """A formal integer combination of tensor products of tautological
    bundles, the admissible input of ``expand_in_basis``.

    Addition, subtraction and integer scaling are the lattice operations;
    ``*`` between two expressions is the tensor product.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[_Atom, ...], int] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def _atom(cls, atom: _Atom) -> "TautClass":
        return cls({(atom,): 1})

    def __add__(self, other: "TautClass") -> "TautClass":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return TautClass(out)

    def __sub__(self, other: "TautClass") -> "TautClass":
        return self + (-1) * other

    def __neg__(self) -> "TautClass":
        return (-1) * self

    def __rmul__(self, n: int) -> "TautClass":
        if not isinstance(n, int):
            return NotImplemented
        return TautClass({k: n * v for k, v in self.terms.items()})

    def __mul__(self, other) -> "TautClass":
        """Tensor product, extended bilinearly."""
        if isinstance(other, int):
            return other * self
        out: dict[tuple[_Atom, ...], int] = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                key = tuple(sorted(ka + kb))
                out[key] = out.get(key, 0) + va * vb
        return TautClass(out)

    def ch(self, box: BoxShape) -> SchubertVector:
        """Chern character of the expression on the given Grassmannian."""
        total = SchubertVector.zero(box)
        for atoms, coeff in self.terms.items():
            term = Fraction(coeff) * SchubertVector.unit(box)
            for atom in atoms:
                term = term * _atom_ch(atom, box)
            total = total + term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{list(k)}" for k, v in self.terms.items())


def schur_sub(alpha) -> TautClass:
    """The Schur power Sigma^alpha of the tautological subbundle."""
    return TautClass._atom(("sub", Partition(alpha)))


def schur_sub_dual(alpha) -> TautClass:
    """Sigma^alpha of the dual of the tautological subbundle."""
    return TautClass._atom(("sub*", Partition(alpha)))


def schur_quot(alpha) -> TautClass:
    """Sigma^alpha of the quotient bundle."""
    return TautClass._atom(("quot", Partition(alpha)))


def wedge_sub(i: int) -> TautClass:
    """i-th exterior power of the subbundle (the one-column Schur power)."""
    return schur_sub((1,) * i) if i else line_bundle(0)


def wedge_quot(i: int) -> TautClass:
    """i-th exterior power of the quotient bundle."""
    return schur_quot((1,) * i) if i else line_bundle(0)


def wedge_tangent(i: int) -> TautClass:
    """i-th exterior power of the tangent bundle (dual sub tensor quot)."""
    return TautClass._atom(("tangent_wedge", i))


def line_bundle(k: int) -> TautClass:
    """O(k); O(-1) is the determinant of the subbundle."""
    return TautClass._atom(("line", k))


@cache
def _atom_ch(atom: _Atom, box: BoxShape) -> SchubertVector:
    kind, arg = atom
    if kind == "sub":
        return chern_character(arg, box)
    if kind == "sub*":
        return dual_chern_character(arg, box)
    if kind == "quot":
        return quot_chern_character(arg, box)
    if kind == "line":
        return line_chern_character(arg, box)
    if kind == "tangent_wedge":
        # Cauchy: wedge^i(sub* (x) quot) splits into Schur powers over
        # partitions of i, the conjugate acting on the quotient factor.
        total = SchubertVector.zero(box)
        for mu in partitions_of(arg, box.rows, box.cols):
            total = total + dual_chern_character(mu, box) * quot_chern_character(
                mu.conjugate(), box
            )
        return total
    raise ValueError(f"unknown atom {atom}")


# ---------------------------------------------------------------------------
# Expansion in the Schur-power basis
# ---------------------------------------------------------------------------

def expand_in_basis(expr: TautClass, box: BoxShape) -> KVector:
    """Integer coordinates of a tautological class in the Schur-power basis.

    Computes the Chern character and solves against the basis character
    matrix; raises NonIntegralExpansion if the solution is not integral.
    """
    chv = expr.ch(box)
    rhs = [chv.coefficient(p) for p in enumerate_box(box)]
    inv = ch_matrix_inverse(box)
    coords = []
    for row in inv:
        val = sum(a * b for a, b in zip(row, rhs))
        if val.denominator != 1:
            raise NonIntegralExpansion(
                f"expansion of {expr!r} on {box} has non-integer coordinate {val}"
            )
        coords.append(int(val))
    return KVector(box, tuple(coords))


def line_bundle_class(k: int, box: BoxShape) -> KVector:
    """[O(k)] in the Schur-power basis."""
    return expand_in_basis(line_bundle(k), box)


def dual_class(alpha, box: BoxShape) -> KVector:
    """[Sigma^alpha of the dual subbundle] in the basis of plain Schur powers."""
    return expand_in_basis(schur_sub_dual(alpha), box)


def dual_twist_pair(alpha, box: BoxShape) -> tuple[Partition, int]:
    """The (beta, c) with Sigma^alpha(sub dual) = Sigma^beta(sub) (x) O(c).

    beta is the rotated box complement of alpha and c the box width; the
    identity is verified by expansion and holds with this single uniform
    twist for every alpha in the box.
    """
    alpha = Partition(alpha)
    beta = box.complement(alpha)
    c = box.cols
    lhs = dual_class(alpha, box)
    rhs = expand_in_basis(schur_sub(beta) * line_bundle(c), box)
    if lhs != rhs:
        raise AssertionError(
            f"twist identity failed for {alpha} in {box}: {lhs} != {rhs}"
        )
    return beta, c


# ---------------------------------------------------------------------------
# Integer matrices: determinant, Smith form, flop certificates
# ---------------------------------------------------------------------------

class IntegerMatrix:
    """A rectangular matrix of arbitrary-precision integers."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        rows = [tuple(int(x) for x in row) for row in entries]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("entries must be a non-empty rectangular array")
        self.entries = tuple(rows)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns) -> "IntegerMatrix":
        cols = [list(c) for c in columns]
        return cls([[cols[j][i] for j in range(len(cols))] for i in range(len(cols[0]))])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        return IntegerMatrix(
            [
                [
                    sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
                    for j in range(other.cols)
                ]
                for i in range(self.rows)
            ]
        )

    def apply(self, vector) -> tuple[int, ...]:
        if len(vector) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(r * v for r, v in zip(row, vector)) for row in self.entries)

    def det(self) -> int:
        """Determinant by fraction-free (Bareiss) elimination."""
        if self.rows != self.cols:
            raise ValueError("determinant needs a square matrix")
        n = self.rows
        m = [list(row) for row in self.entries]
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pivot = next((r for r in range(k + 1, n) if m[r][k]), None)
                if pivot is None:
                    return 0
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def inverse_unimodular(self) -> "IntegerMatrix":
        """Inverse of a matrix with determinant +-1 (stays integral)."""
        d = self.det()
        if d not in (1, -1):
            raise ValueError(f"matrix is not unimodular (det={d})")
        inv = rational_inverse(self.entries)
        return IntegerMatrix([[int(x) for x in row] for row in inv])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntegerMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"IntegerMatrix[{body}]"


def is_unimodular(matrix: IntegerMatrix) -> bool:
    """True iff the (square) matrix has determinant +1 or -1."""
    return matrix.det() in (1, -1)


def smith_normal_form(matrix: IntegerMatrix) -> tuple[int, ...]:
    """Invariant factors d_1 | d_2 | ... of the matrix, zeros last.

    The cokernel of the column lattice is the direct sum of Z/d_i over the
    nonzero invariants plus one copy of Z per zero.  Reduction pivots on
    the least absolute value to keep entries small.
    """
    m = [list(row) for row in matrix.entries]
    nrows, ncols = len(m), len(m[0])
    k = 0
    while k < min(nrows, ncols):
        # locate the smallest nonzero entry in the remaining block
        pivot = None
        for i in range(k, nrows):
            for j in range(k, ncols):
                if m[i][j] and (pivot is None or abs(m[i][j]) < abs(m[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[k], m[pi] = m[pi], m[k]
        for row in m:
            row[k], row[pj] = row[pj], row[k]
        # clear row and column k; a nonzero remainder becomes the new,
        # strictly smaller pivot, so this terminates
        dirty = True
        while dirty:
            dirty = False
            for i in range(k + 1, nrows):
                if m[i][k]:
                    q = m[i][k] // m[k][k]
                    for j in range(k, ncols):
                        m[i][j] -= q * m[k][j]
                    if m[i][k]:
                        m[k], m[i] = m[i], m[k]
                        dirty = True
            for j in range(k + 1, ncols):
                if m[k][j]:
                    q = m[k][j] // m[k][k]
                    for i in range(k, nrows):
                        m[i][j] -= q * m[i][k]
                    if m[k][j]:
                        for row in m:
                            row[k], row[j] = row[j], row[k]
                        dirty = True
        k += 1
    diag = [abs(m[i][i]) for i in range(min(nrows, ncols))]
    # enforce the divisibility chain d_i | d_{i+1}
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            if diag[i] == 0 and diag[j] != 0:
                diag[i], diag[j] = diag[j], diag[i]
            a, b = diag[i], diag[j]
            if a and b and b % a:
                g = gcd(a, b)
                diag[i], diag[j] = g, a * b // g
    nonzero = sorted(d for d in diag if d)
    return tuple(nonzero) + (0,) * (len(diag) - len(nonzero))


@cache
def flop_matrix(box: BoxShape) -> IntegerMatrix:
    """Matrix of the flop correspondence on the Grothendieck lattice.

    Column alpha is the expansion of the dual Schur power; by the pullback
    identifications the same matrix represents the correspondence on the
    cotangent spaces and on their one-parameter deformations.  It is an
    involution and unimodular.
    """
    return IntegerMatrix.from_columns(
        [dual_class(alpha, box).coords for alpha in enumerate_box(box)]
    )
