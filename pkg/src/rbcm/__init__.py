"""Classification toolkit for regular balanced Cayley maps on abelian p-groups."""

from .zring import Modulus, ResidueInt, multiplicative_order, p_valuation, unit_inverse
from .poly import (
    FieldElement,
    Poly,
    build_splitting_field,
    cyclotomic,
    divmod_monic,
    minimal_polynomial,
)
from .factorlift import (
    FactorLabel,
    LabeledFactor,
    coset_reps,
    factor_mod_p,
    factor_radical_sum,
    factor_xn_minus1,
    factor_xn_plus1,
    hensel_lift_factor,
    lambda_index,
    lift_radical_factor,
)
from .ideals import (
    IdealPresentation,
    canonical_form,
    compose_across_primes,
    crt_split,
    enumerate_ideals_containing,
    is_admissible,
)
from .structure import AbelianGroupTable, AbelianType, enumerate_residues, quotient_group_type
from .cayley import (
    CayleyMapRecord,
    MapStats,
    brute_force_rbcms,
    build_map,
    is_rbcm,
    maps_isomorphic,
    trace_faces,
)
from .classify import (
    classify_2group,
    classify_coprime,
    classify_cyclic,
    classify_elementary,
    classify_rank2,
    cross_check,
    solve_unit_roots,
    sweep,
    theta_set,
)

__all__ = [
    "Modulus",
    "ResidueInt",
    "multiplicative_order",
    "p_valuation",
    "unit_inverse",
    "FieldElement",
    "Poly",
    "build_splitting_field",
    "cyclotomic",
    "divmod_monic",
    "minimal_polynomial",
    "FactorLabel",
    "LabeledFactor",
    "coset_reps",
    "factor_mod_p",
    "factor_radical_sum",
    "factor_xn_minus1",
    "factor_xn_plus1",
    "hensel_lift_factor",
    "lambda_index",
    "lift_radical_factor",
    "IdealPresentation",
    "canonical_form",
    "compose_across_primes",
    "crt_split",
    "enumerate_ideals_containing",
    "is_admissible",
    "AbelianGroupTable",
    "AbelianType",
    "enumerate_residues",
    "quotient_group_type",
    "CayleyMapRecord",
    "MapStats",
    "brute_force_rbcms",
    "build_map",
    "is_rbcm",
    "maps_isomorphic",
    "trace_faces",
    "classify_2group",
    "classify_coprime",
    "classify_cyclic",
    "classify_elementary",
    "classify_rank2",
    "cross_check",
    "solve_unit_roots",
    "sweep",
    "theta_set",
]
