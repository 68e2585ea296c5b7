"""Consistency checks that tie independent engines to each other.

The character engine (chow), the cohomology engine (bott) and the
lattice engine (kgroup) each compute representation-theoretic numbers by
different routes; where their outputs overlap they must agree exactly.
"""

import pytest

from flopk.bott import BottResult, Weight, bott_cohomology, weyl_dimension
from flopk.chow import SchubertVector, chern_character, dual_chern_character
from flopk.kgroup import (
    IntegerMatrix,
    dual_class,
    expand_in_basis,
    flop_matrix,
    line_bundle,
    schur_sub,
)
from flopk.partitions import BoxShape, enumerate_box


@pytest.mark.parametrize("shape", [(1, 2), (2, 2), (2, 3)])
def test_rank_of_schur_power_matches_weyl_dimension(shape):
    # degree-zero Chern character = rank of the bundle = dimension of the
    # Schur functor applied to a rank-t space
    box = BoxShape(*shape)
    for alpha in enumerate_box(box):
        rank = chern_character(alpha, box).coefficient(())
        padded = tuple(alpha) + (0,) * (box.rows - len(alpha))
        assert rank == weyl_dimension(padded)


@pytest.mark.parametrize("shape", [(1, 1), (1, 2), (2, 2), (2, 3)])
def test_borel_weil_sections_of_dual_schur_powers(shape):
    # sections of Sigma^alpha(sub*) form the irreducible with highest
    # weight alpha padded to length h; cohomology sits in degree zero
    box = BoxShape(*shape)
    for alpha in enumerate_box(box):
        a = tuple(alpha) + (0,) * (box.rows - len(alpha))
        w = Weight(a, (0,) * box.cols)
        result = bott_cohomology(w)
        expected_dim = weyl_dimension(tuple(alpha) + (0,) * (box.h - len(alpha)))
        assert result == BottResult(0, expected_dim)


@pytest.mark.parametrize("shape", [(1, 1), (1, 3), (2, 2), (2, 3)])
def test_flop_matrix_from_twist_route(shape):
    # independent construction of the whole matrix: dualizing a basis
    # class is the same as complementing in the box and twisting by the
    # box width
    box = BoxShape(*shape)
    columns = []
    for alpha in enumerate_box(box):
        beta = box.complement(alpha)
        columns.append(
            expand_in_basis(schur_sub(beta) * line_bundle(box.cols), box).coords
        )
    assert IntegerMatrix.from_columns(columns) == flop_matrix(box)


@pytest.mark.parametrize("shape", [(1, 2), (2, 2)])
def test_dual_class_chern_character_consistency(shape):
    # the expansion coordinates of a dual Schur power reproduce its Chern
    # character when summed against the basis characters
    box = BoxShape(*shape)
    basis = enumerate_box(box)
    for alpha in basis:
        v = dual_class(alpha, box)
        recomposed = SchubertVector.zero(box)
        for coeff, beta in zip(v.coords, basis):
            recomposed = recomposed + coeff * chern_character(beta, box)
        assert recomposed == dual_chern_character(alpha, box)
