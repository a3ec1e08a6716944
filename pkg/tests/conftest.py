import pytest

from skewcodes import GF, ChainRing, CodeContext, RingAutomorphism


@pytest.fixture(scope="session")
def f3():
    return GF(3)


@pytest.fixture(scope="session")
def f9():
    return GF(3, 2)


@pytest.fixture(scope="session")
def r3(f3):
    return ChainRing(f3)


@pytest.fixture(scope="session")
def theta2(r3):
    """The order-2 automorphism a + b*u -> a + 2*b*u of F_3 + u F_3."""
    return RingAutomorphism(r3, 0, 2)


@pytest.fixture(scope="session")
def skew_ctx():
    """(F_3 + u F_3)[x; Theta] / <x^2 - 1> with the order-2 twist."""
    return CodeContext.create(p=3, m=1, theta_exp=0, beta=2, n=2, lam=1)


@pytest.fixture(scope="session")
def comm_ctx():
    """(F_3 + u F_3)[x] / <x^2 - 1>, identity automorphism."""
    return CodeContext.create(p=3, m=1, theta_exp=0, beta=1, n=2, lam=1)


@pytest.fixture(scope="session")
def skew_ctx6():
    """Length-6 variant of the skew context, home of the cube factorizations."""
    return CodeContext.create(p=3, m=1, theta_exp=0, beta=2, n=6, lam=1)


@pytest.fixture(scope="session")
def f4_ctx():
    """(F_4 + u F_4)[x; Theta] / <x^2 - 1> with the Frobenius twist (order 2)."""
    return CodeContext.create(p=2, m=2, theta_exp=1, beta=1, n=2, lam=1)
