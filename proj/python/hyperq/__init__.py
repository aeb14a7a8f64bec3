from ._core import *  # noqa: F401,F403
from ._core import DomainError, NoConvergenceError, DivergenceError  # noqa: F401

__version__ = "0.1.0"
