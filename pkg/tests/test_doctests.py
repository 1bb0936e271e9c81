import doctest

import pytest

from singlink import legendrian, linalg, sl2z


@pytest.mark.parametrize("module", [linalg, sl2z, legendrian])
def test_doctests(module):
    failures, _ = doctest.testmod(module)
    assert failures == 0
