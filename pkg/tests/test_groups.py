"""Group layer: lattice, Sylow theory, series, against brute-force oracles."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fusionkit import (
    Subgroup,
    all_subgroups,
    catalog_names,
    centralizer,
    commutator_subgroup,
    group_centre,
    load_catalog,
    load_group_spec,
    make_group,
    normalizer,
    o_p_prime_group,
    sylow,
    upper_central_series_group,
)
from oracles import oracle_subgroup_count

# counts of isomorphism types per order, as published for orders 1..24
GROUPS_PER_ORDER = [
    1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15,
]

SUBGROUP_COUNTS = {
    "d8": 10,
    "q8": 6,
    "a4": 10,
    "s4": 30,
    "c12": 6,
    "ea8": 16,
    "ea9": 6,
}


def _catalog_upto(bound):
    for name in sorted(catalog_names()):
        spec = load_catalog(name)
        if spec.get("order", 0) <= bound:
            yield name, spec


def test_catalog_covers_all_groups_up_to_24():
    seen = {}
    for name, spec in _catalog_upto(24):
        seen.setdefault(spec["order"], []).append(name)
    for order, expected in enumerate(GROUPS_PER_ORDER, start=1):
        assert len(seen.get(order, [])) == expected, f"order {order}"


def test_catalog_entries_are_pairwise_nonisomorphic():
    from fusionkit import is_isomorphic

    by_order = {}
    for name, spec in _catalog_upto(16):
        by_order.setdefault(spec["order"], []).append(make_group(spec))
    for order, groups in by_order.items():
        for i, G in enumerate(groups):
            for H in groups[i + 1 :]:
                assert not is_isomorphic(G.full_subgroup, H.full_subgroup)


@pytest.mark.parametrize("name,count", sorted(SUBGROUP_COUNTS.items()))
def test_subgroup_counts_frozen(name, count):
    G, _ = load_group_spec(name)
    assert len(all_subgroups(G.full_subgroup)) == count


@pytest.mark.parametrize("name", ["d8", "q8", "a4", "s4", "sl23", "d12", "dic3"])
def test_subgroup_lattice_matches_subset_closure_oracle(name):
    G, _ = load_group_spec(name)
    P = G.full_subgroup
    assert len(all_subgroups(P)) == oracle_subgroup_count(P)


def test_sylow_orders():
    for name, p, order in [("s4", 2, 8), ("s4", 3, 3), ("a4", 2, 4),
                           ("s3xs3", 3, 9), ("ea9_s3", 3, 27), ("sl23", 2, 8)]:
        G, _ = load_group_spec(name)
        P = sylow(G.full_subgroup, p)
        assert len(P) == order
        assert len(G) % len(P) == 0 and (len(G) // len(P)) % p != 0


def test_sylow_is_deterministic():
    G, _ = load_group_spec("s4")
    assert sylow(G.full_subgroup, 2).elements == sylow(G.full_subgroup, 2).elements


def test_centre_and_commutator():
    G, _ = load_group_spec("d8")
    P = G.full_subgroup
    assert len(group_centre(P)) == 2
    assert len(commutator_subgroup(P, P, P)) == 2
    G, _ = load_group_spec("s4")
    P = G.full_subgroup
    assert len(group_centre(P)) == 1
    assert len(commutator_subgroup(P, P, P)) == 12


def test_normalizer_centralizer_basics():
    G, _ = load_group_spec("s4")
    P = sylow(G.full_subgroup, 2)
    assert normalizer(G.full_subgroup, P).elements == P.elements
    Z = group_centre(P)
    assert centralizer(G.full_subgroup, Z) >= P


def test_upper_central_series_group():
    G, _ = load_group_spec("d8")
    series = upper_central_series_group(G.full_subgroup)
    assert [len(S) for S in series] == [2, 8]
    G, _ = load_group_spec("s4")
    series = upper_central_series_group(G.full_subgroup)
    assert [len(S) for S in series] == [1]


def test_o_p_prime_group():
    G, _ = load_group_spec("a4")
    assert len(o_p_prime_group(G.full_subgroup, 2)) == 1
    assert len(o_p_prime_group(G.full_subgroup, 3)) == 4
    G, _ = load_group_spec("s3")
    assert len(o_p_prime_group(G.full_subgroup, 2)) == 3
    assert len(o_p_prime_group(G.full_subgroup, 3)) == 1


_SMALL = ["s3", "d8", "q8", "a4", "c12", "d12", "s4", "dic3"]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(_SMALL), st.data())
def test_generated_subgroups_satisfy_lagrange(name, data):
    G, _ = load_group_spec(name)
    gens = data.draw(
        st.lists(st.integers(0, len(G) - 1), min_size=0, max_size=3)
    )
    H = G.generated_subgroup(gens)
    assert len(G) % len(H) == 0
    for a in gens:
        assert a in H._set


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(_SMALL), st.data())
def test_conjugation_is_an_automorphism(name, data):
    G, _ = load_group_spec(name)
    g = data.draw(st.integers(0, len(G) - 1))
    a = data.draw(st.integers(0, len(G) - 1))
    b = data.draw(st.integers(0, len(G) - 1))
    assert G.conj(G.mul(a, b), g) == G.mul(G.conj(a, g), G.conj(b, g))
    assert G.conj(G.inv(a), g) == G.inv(G.conj(a, g))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(_SMALL), st.data())
def test_element_order_divides_group_order(name, data):
    G, _ = load_group_spec(name)
    g = data.draw(st.integers(0, len(G) - 1))
    assert len(G) % G.element_order(g) == 0


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(_SMALL), st.data())
def test_subgroup_conjugates_are_subgroups(name, data):
    G, _ = load_group_spec(name)
    gens = data.draw(st.lists(st.integers(0, len(G) - 1), max_size=2))
    g = data.draw(st.integers(0, len(G) - 1))
    H = G.generated_subgroup(gens)
    image = Subgroup(G, {G.conj(x, g) for x in H.elements}, check=True)
    assert len(image) == len(H)
