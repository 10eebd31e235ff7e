"""Exact computation of integral-dependence criteria for graded ideals.

Decides whether two homogeneous ideals I ⊆ J in a standard graded domain
have the same integral closure (equivalently, whether I is a reduction of
J) by comparing exact multiplicity invariants: diagonal-subalgebra
degrees, Rees multiplicities, mixed multiplicities and epsilon-multiplicity
differences.
"""

__version__ = "0.1.0"

from idealdep.fields import GF, QQ, FieldSpec  # noqa: F401
from idealdep.orders import GREVLEX, LEX, MonomialOrder, block_order  # noqa: F401
from idealdep.poly import Polynomial, PolyRing  # noqa: F401
from idealdep.rings import GradedIdeal, GradedRing  # noqa: F401
