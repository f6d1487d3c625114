"""
schubert_bd
===========

Signed permutations, symmetric clans and a monoid action on them, used to
predict Schubert structure constants ``c_{w0 u, v}^w`` for classes of
L-stable Richardson varieties in the flag varieties of types B and D.

The predictions can be checked against :mod:`schubert_bd.oracle`, which
computes the true constants from divided differences.
"""

from .action import *  # noqa: F401,F403
from .clans import *  # noqa: F401,F403
from .errors import *  # noqa: F401,F403
from .orbits import *  # noqa: F401,F403
from .richardson import *  # noqa: F401,F403
from .weyl import *  # noqa: F401,F403
from . import action, clans, errors, oracle, orbits, richardson, tables, weyl

__version__ = "0.1.0"
