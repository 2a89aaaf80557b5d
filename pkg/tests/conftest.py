from fractions import Fraction as F

import pytest

from polystab import make_polynomial


@pytest.fixture
def binomial_quintic():
    """(s+1)^5 by binomial expansion; stable with all roots at -1."""
    return make_polynomial(5, [5, 10, 10, 5, 1])


@pytest.fixture
def cor2_exemplar():
    """s^5 + s^4 + 2s^3 + s^2 + s + 1/2; unstable, fourth minor -1/4."""
    return make_polynomial(5, [1, 2, 1, 1, F(1, 2)])


@pytest.fixture
def cor5_exemplar():
    """s^5 + s^4 + 3s^3 + (9/4)s^2 + s + 1/2; stable via the vertex equality."""
    return make_polynomial(5, [1, 3, F(9, 4), 1, F(1, 2)])


@pytest.fixture
def sextic_quotient():
    """s^5 + s^4 + s^3 + s^2 + s + 1 = (s^6 - 1)/(s - 1); unstable."""
    return make_polynomial(5, [1, 1, 1, 1, 1])
