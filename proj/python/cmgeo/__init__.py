"""Exact distance geometry: Cayley-Menger determinants, embedding dimension,
cross-polytope flatness classification and two-distance mapping checks.

All exact inputs accept ints, "p/q" strings or fractions.Fraction; exact
results come back as Fraction. Floats appear only in realizations and
bisection roots.
"""

from ._core import (
    ClosedFormCheck,
    FlatnessVerdict,
    InertiaSignature,
    MappingReport,
    Realization,
    SquaredDistanceMatrix,
    cable_strut_passes,
    circumradius_sq,
    classify_flatness,
    closed_form_determinant,
    cm_determinant,
    cm_matrix,
    construction_distance_matrix,
    cross_distance_matrix,
    embedding_dimension,
    fold_distance_sq,
    gram_matrix,
    inertia,
    mapping_report,
    pentagon_cm_det,
    pentagon_flat_diagonal,
    realize_floating,
    simplex_volume_sq,
    verify_bridge,
    verify_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "ClosedFormCheck",
    "FlatnessVerdict",
    "InertiaSignature",
    "MappingReport",
    "Realization",
    "SquaredDistanceMatrix",
    "cable_strut_passes",
    "circumradius_sq",
    "classify_flatness",
    "closed_form_determinant",
    "cm_determinant",
    "cm_matrix",
    "construction_distance_matrix",
    "cross_distance_matrix",
    "embedding_dimension",
    "fold_distance_sq",
    "gram_matrix",
    "inertia",
    "mapping_report",
    "pentagon_cm_det",
    "pentagon_flat_diagonal",
    "realize_floating",
    "simplex_volume_sq",
    "verify_bridge",
    "verify_closed_form",
]
