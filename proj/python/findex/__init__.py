"""Exact degree-based graph indices, subdivision operations, hierarchical
products, F-sums and closed-form verification."""

from ._findex import *  # noqa: F401,F403
from ._findex import __doc__  # noqa: F401
