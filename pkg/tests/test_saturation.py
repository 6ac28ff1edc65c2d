"""Saturation: the two criteria, their agreement, and the classic failure."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionkit import (
    Subgroup,
    extend_morphism,
    fusion_of_group,
    generated_fusion,
    inner_fusion,
    intersect_raw,
    is_centric,
    is_fully_automized,
    is_receptive,
    is_saturated,
    is_saturated_puig,
    load_group_spec,
    subgroup_status,
    sylow,
)
from fusionkit.saturation import has_surjectivity_property


def small_maps_system(F, bound=2):
    """The subsystem generated by all isomorphisms between subgroups of
    order at most the bound."""
    isos = [
        phi
        for Q in F.subgroups()
        if len(Q) <= bound
        for phi in F.isos_from(Q)
        if len(phi.codomain) <= bound
    ]
    return generated_fusion(F.P, F.p, isos)


@pytest.fixture(scope="module")
def v4_pair():
    G, _ = load_group_spec("a4")
    F = fusion_of_group(G, 2)
    return F, small_maps_system(F)


def test_group_fusion_systems_are_saturated():
    for name, p in [("s4", 2), ("a4", 2), ("s3xs3", 3), ("sl23", 2),
                    ("ea9_s3", 3), ("d12", 3), ("dic3", 2)]:
        G, _ = load_group_spec(name)
        F = fusion_of_group(G, p)
        assert is_saturated(F).saturated
        assert is_saturated_puig(F).saturated


def test_small_maps_system_is_not_saturated(v4_pair):
    F, E = v4_pair
    rs = is_saturated(E)
    puig = is_saturated_puig(E)
    assert not rs.saturated
    assert not puig.saturated
    assert rs.witness is not None


def test_small_maps_system_has_surjectivity_everywhere(v4_pair):
    F, E = v4_pair
    assert all(has_surjectivity_property(E, Q) for Q in E.subgroups())


def test_small_maps_failure_is_receptivity_at_the_involutions(v4_pair):
    """The cross-isomorphisms between the order-2 subgroups have N_phi = P
    but no extension, so the fully automized representatives fail to be
    receptive; the carrier itself is unobjectionable."""
    F, E = v4_pair
    carrier = subgroup_status(E, E.P)
    assert carrier.fully_normalized and carrier.receptive
    for Q in E.subgroups():
        if len(Q) == 2:
            status = subgroup_status(E, Q)
            assert status.fully_automized
            assert not status.receptive


def test_v4_statuses_in_the_full_system():
    G, _ = load_group_spec("a4")
    F = fusion_of_group(G, 2)
    assert is_centric(F, F.P)
    assert is_fully_automized(F, F.P)
    assert is_receptive(F, F.P)
    C2 = next(S for S in F.subgroups() if len(S) == 2)
    assert not is_centric(F, C2)
    assert is_receptive(F, C2)


def test_extend_morphism_from_receptive_target():
    G, _ = load_group_spec("s4")
    F = fusion_of_group(G, 2)
    Z = next(S for S in F.subgroups()
             if len(S) == 2 and F.c_p(S).elements == F.P.elements)
    phi = F.isos_between(Z, Z)[0]
    lifted = extend_morphism(F, phi, F.P)
    assert lifted is not None and lifted.domain == F.P


def test_raw_intersection_can_break_saturation():
    G, _ = load_group_spec("a4")
    F = fusion_of_group(G, 2)
    E = small_maps_system(F)
    raw = intersect_raw(F, E)
    assert raw == E
    assert is_saturated(raw).saturated == is_saturated_puig(raw).saturated


_SYSTEMS = [("s3", 3), ("d8", 2), ("q8", 2), ("a4", 2), ("a4", 3), ("s4", 2),
            ("s4", 3), ("d12", 2), ("c12", 2), ("dic3", 2), ("dic3", 3)]


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(_SYSTEMS), st.integers(1, 4))
def test_two_criteria_agree_on_generated_subsystems(pair, bound):
    """Agreement must hold on non-saturated systems too, so probe systems
    generated by bounded-order isomorphisms."""
    name, p = pair
    G, _ = load_group_spec(name)
    F = fusion_of_group(G, p)
    E = small_maps_system(F, bound=bound)
    assert is_saturated(E).saturated == is_saturated_puig(E).saturated


def test_inner_fusion_is_saturated_for_all_small_p_groups():
    for name in ["d8", "q8", "c8", "ea8", "c4xc2", "ea9", "c9"]:
        G, _ = load_group_spec(name)
        P = G.full_subgroup
        p = 2 if len(G) % 2 == 0 else 3
        F = inner_fusion(P, p)
        assert is_saturated(F).saturated
        assert is_saturated_puig(F).saturated
