"""Exact similarity groups, spacetime relations and the concept lattice of
seven coordinate geometries over ordered fields."""
from .field import (DivisionByZero, FieldMode, IncompatibleExtensions, NotRepresentable,
                    QuadExt, format_element, parse_element, sqrt_exact)
from .geometry import ArityMismatch, DimensionMismatch, ProductForm, RelationId, eval_relation
from .groups import (GroupId, SimilarityVerdict, Witness, classify, decompose_similarity,
                     generate, witness)
from .lattice import (GeometryId, InadmissiblePair, LatticeReport, build_report,
                      check_leiras2, compare_concept_sets, concept_in_geometry, emit_dot)
from .linalg import SingularMatrix
from .transform import AffineMap, compose, inverse, respects_exact, respects_sampled

__all__ = [
    "AffineMap", "ArityMismatch", "DimensionMismatch", "DivisionByZero", "FieldMode",
    "GeometryId", "GroupId", "IncompatibleExtensions", "InadmissiblePair", "LatticeReport",
    "NotRepresentable", "ProductForm", "QuadExt", "RelationId", "SimilarityVerdict",
    "SingularMatrix", "Witness", "build_report", "check_leiras2", "classify",
    "compare_concept_sets", "compose", "concept_in_geometry", "decompose_similarity",
    "emit_dot", "eval_relation", "format_element", "generate", "inverse", "parse_element",
    "respects_exact", "respects_sampled", "sqrt_exact", "witness",
]
