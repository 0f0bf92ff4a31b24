"""Laplace Dirichlet/Neumann duality on annuli, disks and mapped regions."""

from ._hd import *  # noqa: F401,F403
from ._hd import __doc__  # noqa: F401
