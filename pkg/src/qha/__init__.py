"""Exact homological algebra of quiver representations.

Representations of finite acyclic quivers over computable abelian bases,
bounded complexes and their cohomology, derived Hom via resolutions, roof
calculus, vertexwise localization, and derived functors of induced functors,
all over exact rational or prime-field arithmetic.
"""

from .category import BaseCategory, HomSystem, VectCategory
from .complexes import ChainMap, Complex, cohomology, cone, is_null_homotopic, is_quasi_iso, stalk, transpose, transpose_inv
from .derived import (
    DerivedRep,
    Roof,
    compose_roofs,
    complete_square,
    derived_rep_hom_dim,
    hom_derived,
    injective_resolution,
    is_semisimple,
    localize,
    projective_resolution,
    roof_equivalent,
    strictify,
    to_derived_rep,
)
from .induced import (
    DerivedFunctorSpec,
    build_tilting_functor,
    compare_induced_derived,
    comparison_functor_experiment,
    derive_induced,
    induced_equivalence_experiment,
    morita_functor,
)
from .linalg import FieldSpec, Mat, nullspace, parse_field, prime_field, rationals, rref, solve
from .quiver import Path, Quiver, compose, enumerate_morphisms, named_quiver, parse_quiver
from .rep import FunctorSpec, RepCategory, RepMap, RepObject, apply_induced, induce_on_reps

__all__ = [name for name in dir() if not name.startswith("_")]
