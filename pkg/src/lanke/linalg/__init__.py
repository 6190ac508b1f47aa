"""Exact linear algebra: rational ground truth and a certified modular fast path."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from lanke.linalg.modular import (
    BACKEND,
    Echelon,
    IntegerRows,
    certified_echelon,
    echelon_from_subspace,
    modular_echelon,
    modular_rank,
)
from lanke.linalg.rational import (
    Subspace,
    dump_rows,
    induced_action_on_quotient,
    kernel_basis,
    parse_rows,
    quotient_dimension,
)

MODES = ("rational", "multimodular")


def echelonize(rows: Iterable[Mapping[int, int | Fraction]], ncols: int, mode: str = "multimodular") -> Echelon:
    """Exact reduced echelon form of the row space, in either arithmetic mode."""
    if mode == "rational":
        space = Subspace(ncols)
        space.extend(rows)
        return echelon_from_subspace(space)
    if mode == "multimodular":
        return certified_echelon(rows, ncols)
    raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


__all__ = [
    "BACKEND",
    "Echelon",
    "IntegerRows",
    "MODES",
    "Subspace",
    "certified_echelon",
    "dump_rows",
    "echelon_from_subspace",
    "echelonize",
    "induced_action_on_quotient",
    "kernel_basis",
    "modular_echelon",
    "modular_rank",
    "parse_rows",
    "quotient_dimension",
]
