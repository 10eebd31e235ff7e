import pytest

from idealdep import QQ, GradedRing, PolyRing


@pytest.fixture(scope="session")
def free_xy():
    """Q[x,y]."""
    return GradedRing.free(QQ, ("x", "y"))


@pytest.fixture(scope="session")
def free_XY():
    """Q[X,Y] — the monomial golden-example ring."""
    return GradedRing.free(QQ, ("X", "Y"))


@pytest.fixture(scope="session")
def free_xyz():
    """Q[x,y,z]."""
    return GradedRing.free(QQ, ("x", "y", "z"))


@pytest.fixture(scope="session")
def elliptic():
    """Q[x,y,z]/(x^3+y^3+z^3) — the cubic-curve golden-example ring."""
    amb = PolyRing(QQ, ("x", "y", "z"))
    return GradedRing(amb, [amb.parse("x^3+y^3+z^3")])


@pytest.fixture(scope="session")
def monomial_pair(free_XY):
    """I = (X^2, X*Y^2) inside J = (X^2, X*Y)."""
    return free_XY.ideal(["X^2", "X*Y^2"]), free_XY.ideal(["X^2", "X*Y"])


@pytest.fixture(scope="session")
def elliptic_pair(elliptic):
    """I = (x+y+z, yz) inside J = (x+y, z) on the cubic curve."""
    return elliptic.ideal(["x+y+z", "y*z"]), elliptic.ideal(["x+y", "z"])
