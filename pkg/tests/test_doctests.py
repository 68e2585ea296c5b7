import doctest

import pytest

from flopk import flopgeom, partitions, weyl


@pytest.mark.parametrize("module", [partitions, weyl, flopgeom], ids=lambda m: m.__name__)
def test_doctests(module):
    failures, _ = doctest.testmod(module, verbose=False)
    assert failures == 0
