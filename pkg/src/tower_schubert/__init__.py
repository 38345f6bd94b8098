"""Tower diagrams for permutations, with Monk and Pieri rules for Schubert polynomials."""

from .permcore import *  # noqa: F401,F403
from .towerdiag import *  # noqa: F401,F403
from .hooks import *  # noqa: F401,F403
from .monk import *  # noqa: F401,F403
from .pieri import *  # noqa: F401,F403
from .schuboracle import *  # noqa: F401,F403
from .render import render_ascii  # noqa: F401
from .verify import VerifyReport, run_verify  # noqa: F401

__version__ = "0.1.0"
