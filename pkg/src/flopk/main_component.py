"""The main-component correspondence on the cotangent space of the plane.

For t=1, h=3 the fiber product of the two Springer resolutions over the
nilpotent variety breaks into two irreducible components.  The full
correspondence is a lattice isomorphism, but the main component alone
(the one dominating both sides) is not: its matrix sends the three line
bundle generators to [O(1)], [O] and the class of the twisted ideal
sheaf of the zero section, and the image lattice has index 2.

The twisted ideal-sheaf class comes from the Koszul resolution of the
zero section inside the cotangent space: an alternating sum of exterior
powers of the pulled-back tangent bundle, all twisted by O(-1).  The
construction is uniform in h, so ``koszul_ideal_class`` accepts any
h >= 2 although only h = 3 enters the index-2 computation.

Two presentation bases are available: the line-bundle basis
([O(1)], [O], [O(-1)]), in which the image vectors take their simplest
form, and the canonical basis of Schur powers of the subbundle.  The
change of basis is unimodular, so the image index is the same in both.
"""

from __future__ import annotations

from functools import cache

from .kgroup import (
    IntegerMatrix,
    KVector,
    expand_in_basis,
    line_bundle,
    line_bundle_class,
    smith_normal_form,
    wedge_tangent,
)
from .partitions import BoxShape


def koszul_ideal_class(h: int) -> KVector:
    """[I (x) O(-1)] for the ideal sheaf I of the zero section, on P^(h-1).

    Koszul: the zero section of the cotangent space is cut out by the
    tautological section of the pulled-back cotangent bundle, so the
    ideal sheaf resolves by exterior powers of the pulled-back tangent
    bundle; in K-theory the twisted class is the alternating sum
    sum_{i>=1} (-1)^(i+1) [wedge^i Tangent (x) O(-1)].
    """
    if h < 2:
        raise ValueError(f"need h >= 2, got {h}")
    box = BoxShape.for_grassmannian(1, h)
    expr = 0 * line_bundle(0)
    for i in range(1, h):
        expr = expr + (-1) ** (i + 1) * (wedge_tangent(i) * line_bundle(-1))
    return expand_in_basis(expr, box)


@cache
def line_basis_matrix(box: BoxShape) -> IntegerMatrix:
    """Columns are [O(1)], [O], [O(-1)], ... in canonical coordinates.

    For a projective space of K-rank n the twists run 1, 0, ..., 2-n;
    this is a unimodular change of basis (a twist of the standard one).
    """
    if box.rows != 1:
        raise ValueError("line-bundle bases only exist for projective spaces")
    cols = [line_bundle_class(k, box).coords for k in range(1, 1 - box.rank, -1)]
    mat = IntegerMatrix.from_columns(cols)
    if mat.det() not in (1, -1):
        raise AssertionError(f"line-bundle basis on {box} is not unimodular")
    return mat


def to_line_basis(v: KVector) -> tuple[int, ...]:
    """Coordinates of a K-class in the ([O(1)], [O], [O(-1)], ...) basis."""
    return line_basis_matrix(v.box).inverse_unimodular().apply(v.coords)


def main_component_matrix(basis: str = "line") -> IntegerMatrix:
    """Matrix of the main-component correspondence for t=1, h=3.

    In the "line" presentation rows are the target basis
    ([O(1)], [O], [O(-1)]) and columns the images of the domain basis
    ([O+(-1)], [O+], [O+(1)]), which are [O(1)], [O] and the twisted
    ideal-sheaf class.  The "canonical" presentation conjugates by the
    (unimodular) line-bundle basis changes on both sides.
    """
    box = BoxShape.for_grassmannian(1, 3)
    images = [
        line_bundle_class(1, box),
        line_bundle_class(0, box),
        koszul_ideal_class(3),
    ]
    line_presented = IntegerMatrix.from_columns([to_line_basis(v) for v in images])
    if basis == "line":
        return line_presented
    if basis == "canonical":
        # target basis change: columns [O(1)], [O], [O(-1)] in canonical
        # coordinates; domain basis change: columns [O(-1)], [O], [O(1)]
        # (the domain generators carry the opposite twists).
        b_target = line_basis_matrix(box)
        b_domain = IntegerMatrix.from_columns(
            [line_bundle_class(k, box).coords for k in (-1, 0, 1)]
        )
        return (b_target @ line_presented) @ b_domain.inverse_unimodular()
    raise ValueError(f"unknown basis {basis!r}; use 'line' or 'canonical'")


def image_index(matrix: IntegerMatrix):
    """Index of the column lattice inside the ambient lattice.

    The product of the Smith invariant factors, or the string "infinite"
    when the matrix is singular (rank-deficient column lattice).
    """
    if matrix.rows != matrix.cols:
        raise ValueError("image index needs a square matrix")
    invariants = smith_normal_form(matrix)
    index = 1
    for d in invariants:
        if d == 0:
            return "infinite"
        index *= d
    return index
