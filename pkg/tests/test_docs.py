import doctest

import planedom


def test_package_doctest():
    result = doctest.testmod(planedom)
    assert result.attempted > 0 and result.failed == 0
