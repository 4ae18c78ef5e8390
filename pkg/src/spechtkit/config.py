"""Resource guards.

All enumeration limits live here so that desk-scale defaults can be raised
explicitly (CLI flags or SPECHTKIT_* environment variables) instead of being
hard-coded at call sites.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace


@dataclass(frozen=True)
class Limits:
    # combinatorics
    max_set_partition_n: int = 7
    # specht matrices
    max_matrix_cells: int = 4_000_000
    # matroids
    max_ground: int = 128
    max_circuit_ground: int = 20
    tutte_subset_limit: int = 20  # subset-sum strategy bound on |E|
    # polytopes
    max_polytope_points: int = 64
    max_polytope_dim: int = 8
    max_lattice_dim: int = 6
    max_box_volume: int = 2_000_000
    # coefficient matrices
    max_group_order: int = 10_000
    max_coefficient_n: int = 5
    # conjecture checks
    max_funny_sum_n: int = 5
    max_conjecture1_full_n: int = 4
    max_derangement_n: int = 9

    def require(self, name: str, value: int) -> None:
        bound = getattr(self, name)
        if value > bound:
            from .errors import ResourceLimitError

            raise ResourceLimitError(
                f"{name}: requested {value} exceeds limit {bound}"
            )


def limits_from_env(base: Limits | None = None) -> Limits:
    """Apply SPECHTKIT_<FIELD> environment overrides to *base*."""
    lim = base or Limits()
    overrides = {}
    for f in fields(Limits):
        raw = os.environ.get("SPECHTKIT_" + f.name.upper())
        if raw is not None:
            overrides[f.name] = int(raw)
    return replace(lim, **overrides) if overrides else lim


DEFAULT_LIMITS = Limits()
