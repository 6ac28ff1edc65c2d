"""fusionkit: exact computation with fusion systems on finite p-groups."""

from __future__ import annotations

__version__ = "0.1.0"

from . import errors
from .catalog import catalog_names, load_catalog, load_group_spec, make_group
from .fusion import (
    FusionSystem,
    deserialize,
    direct_product,
    find_fusion_isomorphism,
    full_subcategory,
    fusion_of_group,
    generated_fusion,
    inner_fusion,
    internal_direct_product,
    intersect_raw,
    is_isomorphic_fusion,
    is_strongly_closed,
    is_subsystem,
    push_through_quotient,
    quotient,
    quotient_with_data,
    transport_fusion,
    validate_fusion,
)
from .groups import (
    DEFAULT_ORDER_BOUND,
    Group,
    Subgroup,
    all_subgroups,
    centralizer,
    commutator_subgroup,
    coset_quotient,
    direct_product_groups,
    group_centre,
    normalizer,
    o_p_prime_group,
    subgroup_closure,
    sylow,
    upper_central_series_group,
)
from .hypercentre import (
    CentralSeries,
    CentreComparisonReport,
    PerfectCentreReport,
    XSubgroup,
    centre_by_fixed_points,
    centre_of,
    group_vs_fusion_centres,
    is_perfect,
    upper_central_series,
    verify_perfect_z2,
    x_subgroup,
)
from .morphisms import (
    AutGroup,
    Morphism,
    automorphisms,
    conj_morphism,
    find_isomorphism,
    is_isomorphic,
)
from .normal_maps import (
    AutMap,
    BasedRange,
    MapVerdict,
    NotBased,
    aut_map_from_data,
    aut_map_of,
    aut_map_to_data,
    based_range,
    check_weakly_normal_map,
    complete_partial_map,
    enlarge_weakly_normal,
    generate_from_map,
    intersection_wedge,
    partial_domain,
    t_core,
    weakly_normal_systems_on,
)
from .perms import format_cycles, parse_perm
from .saturation import (
    SaturationVerdict,
    extend_morphism,
    is_centric,
    is_fully_automized,
    is_receptive,
    is_saturated,
    is_saturated_puig,
    subgroup_status,
)
from .subsystems import (
    NormalityVerdict,
    enumerate_subsystems_on,
    frattini_decompose,
    is_detecting_subgroup,
    local_subsystem,
    normality_status,
    o_p,
    o_p_by_central_series,
    o_p_prime_subsystem,
    strongly_closed_subgroups,
    verify_theorem_a,
)

__all__ = [
    "DEFAULT_ORDER_BOUND",
    "AutGroup",
    "AutMap",
    "BasedRange",
    "CentralSeries",
    "CentreComparisonReport",
    "FusionSystem",
    "Group",
    "MapVerdict",
    "Morphism",
    "NormalityVerdict",
    "NotBased",
    "PerfectCentreReport",
    "SaturationVerdict",
    "Subgroup",
    "XSubgroup",
    "all_subgroups",
    "aut_map_from_data",
    "aut_map_of",
    "aut_map_to_data",
    "automorphisms",
    "based_range",
    "catalog_names",
    "centralizer",
    "centre_by_fixed_points",
    "centre_of",
    "check_weakly_normal_map",
    "commutator_subgroup",
    "complete_partial_map",
    "conj_morphism",
    "coset_quotient",
    "deserialize",
    "direct_product",
    "direct_product_groups",
    "enlarge_weakly_normal",
    "enumerate_subsystems_on",
    "errors",
    "extend_morphism",
    "find_fusion_isomorphism",
    "find_isomorphism",
    "format_cycles",
    "frattini_decompose",
    "full_subcategory",
    "fusion_of_group",
    "generate_from_map",
    "generated_fusion",
    "group_centre",
    "group_vs_fusion_centres",
    "inner_fusion",
    "internal_direct_product",
    "intersect_raw",
    "intersection_wedge",
    "is_centric",
    "is_detecting_subgroup",
    "is_fully_automized",
    "is_isomorphic",
    "is_isomorphic_fusion",
    "is_perfect",
    "is_receptive",
    "is_saturated",
    "is_saturated_puig",
    "is_strongly_closed",
    "is_subsystem",
    "load_catalog",
    "load_group_spec",
    "local_subsystem",
    "make_group",
    "normality_status",
    "normalizer",
    "o_p",
    "o_p_by_central_series",
    "o_p_prime_group",
    "o_p_prime_subsystem",
    "parse_perm",
    "partial_domain",
    "push_through_quotient",
    "quotient",
    "quotient_with_data",
    "strongly_closed_subgroups",
    "subgroup_closure",
    "subgroup_status",
    "sylow",
    "t_core",
    "transport_fusion",
    "upper_central_series",
    "upper_central_series_group",
    "validate_fusion",
    "verify_perfect_z2",
    "verify_theorem_a",
    "weakly_normal_systems_on",
    "x_subgroup",
]
