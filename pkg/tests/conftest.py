import pytest

from rank2spectra.threefold import BundleChern, catalog_lookup

# N(-1) on P^3: c1 = -2H, c2 = 2H^2; lambda = 2H, c2(Z) = 6H^2.
NULL_CORRELATION = BundleChern(
    c1_cubed=-8, c1_c2=-4, c1sq_lambda=8, c2_lambda=4, c1_lambdasq=-8, c1_c2Z=-12
)
# O(-1) + O(-1) on P^3: c1 = -2H, c2 = H^2.
TWO_MINUS_ONE = BundleChern(
    c1_cubed=-8, c1_c2=-2, c1sq_lambda=8, c2_lambda=2, c1_lambdasq=-8, c1_c2Z=-12
)
# O + L^-1 with lambda^3 = 8: c1 = -lambda, c2 = 0.
O_PLUS_LINV = BundleChern(
    c1_cubed=-8, c1_c2=0, c1sq_lambda=8, c2_lambda=0, c1_lambdasq=-8, c1_c2Z=-12
)


@pytest.fixture
def p3():
    return catalog_lookup("p3-o2")


@pytest.fixture
def null_correlation():
    return NULL_CORRELATION


@pytest.fixture
def two_minus_one():
    return TWO_MINUS_ONE


@pytest.fixture
def o_plus_linv():
    return O_PLUS_LINV
