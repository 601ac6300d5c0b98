"""Admissible index sets, antipodal Weyl orbits and subgroup triples of root systems."""

from ._core import (
    ClassificationReport,
    DiscrepancyError,
    GammaSubgroup,
    NotAdmissibleError,
    OrbitResult,
    RootSystem,
    RootSystemType,
    admissibility_witness,
    build,
    closed_form,
    coefficient,
    enumerate_admissible,
    evaluate_on_xi_sum,
    extrinsic_symmetric_indices,
    fixed_root_set,
    is_admissible,
    is_triple,
    is_union_closed,
    minimal_triple_subgroups,
    orbit,
    reflect,
    stabilizer_order,
    subgroup_span,
    two_number,
    verify_classification,
    verify_maximality_proposition,
    weyl_group_order,
)

__version__ = "0.1.0"
