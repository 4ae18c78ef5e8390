"""Exact computations with pairing matrices of partitions, their column
matroids, Chow rings, polytopes, and coefficient matrices."""

__version__ = "0.1.0"

from .combinatorics import (
    OrderedSetPartition,
    Partition,
    Permutation,
    classify_pair,
    properly_ordered_set_partitions,
    rearrangements,
)
from .errors import DomainError, ResourceLimitError
from .specht import SpechtMatrix, specht_matrix, specht_module_dimension, young_character
from .matroid import LinearMatroid, specht_matroid
from .chow import chow_graded_dimensions, chow_presentation, hilbert_series_text
from .polytope import Polytope, polytope_from_columns, root_polytope_structure_check
from .coefficients import (
    LabeledCoefficientMatrix,
    kronecker_coefficient,
    kronecker_matrix,
    lr_coefficient,
    lr_matrix,
    plethysm_coefficient,
    plethysm_matrix,
    wreath_elements,
)
from .conjectures import (
    check_conjecture1,
    check_conjecture2,
    cyclic_orbit_structures,
    derangement_excedance_counts,
    funny_sum,
)

__all__ = [
    "OrderedSetPartition",
    "Partition",
    "Permutation",
    "classify_pair",
    "properly_ordered_set_partitions",
    "rearrangements",
    "DomainError",
    "ResourceLimitError",
    "SpechtMatrix",
    "specht_matrix",
    "specht_module_dimension",
    "young_character",
    "LinearMatroid",
    "specht_matroid",
    "chow_graded_dimensions",
    "chow_presentation",
    "hilbert_series_text",
    "Polytope",
    "polytope_from_columns",
    "root_polytope_structure_check",
    "LabeledCoefficientMatrix",
    "kronecker_coefficient",
    "kronecker_matrix",
    "lr_coefficient",
    "lr_matrix",
    "plethysm_coefficient",
    "plethysm_matrix",
    "wreath_elements",
    "check_conjecture1",
    "check_conjecture2",
    "cyclic_orbit_structures",
    "derangement_excedance_counts",
    "funny_sum",
]
