"""Hyperball packings in doubly truncated Coxeter orthoschemes of hyperbolic 3-space."""

from .errors import (
    AmbiguousClassification,
    DomainError,
    EmptyScan,
    FeasibilityError,
    HyperpackError,
    InternalInconsistency,
    NotDoublyTruncated,
    NotHyperbolic,
    SymmetryUnavailable,
)
from .hypmath import arcosh, golden_section_max, lobachevsky, lobachevsky_quadrature_oracle
from .orthoscheme import (
    FormPoint,
    GramData,
    KeyDistances,
    SchlafliParams,
    TruncationAreas,
    build_gram,
    key_distances,
    point_distance,
    symmetry_witness,
    truncation_areas,
    truncation_points,
)
from .packing import (
    DensityResult,
    HeightProfile,
    NonCongruentConfig,
    density_noncongruent,
    density_one_hyperball,
    density_two_congruent,
    height_profile,
    noncongruent_cases,
    optimize_noncongruent,
    scan_integer,
    scan_real_p,
)
from .volume import hyperball_piece_volume, orthoscheme_volume

__version__ = "0.1.0"
