"""Residue vectors over prime windows: q-series congruences, Bernoulli/Euler
numbers mod p, class numbers, Frobenius traces and Fermat quotients."""

from ._amod import *  # noqa: F401,F403
from ._amod import AmodError, TruncatedAdele

__version__ = "0.1.0"
