"""Exact construction and decomposition of the symmetric-group modules carried by free Filippov n-algebras."""

from lanke.combinatorics import Partition

__version__ = "0.1.0"

__all__ = ["Partition", "__version__"]
