import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fusionkit import (
    catalog_names,
    fusion_of_group,
    load_catalog,
    make_group,
    strongly_closed_subgroups,
    weakly_normal_systems_on,
)

SWEEP_MAX_ORDER = 24
SWEEP_T_BOUND = 16


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def sweep_pairs(max_order: int = SWEEP_MAX_ORDER):
    """(name, prime, group) for every catalog group of order <= max_order
    and every prime dividing its order."""
    for name in sorted(catalog_names()):
        spec = load_catalog(name)
        if spec.get("order", 0) > max_order:
            continue
        G = make_group(spec)
        if len(G) > max_order:
            continue
        for p in range(2, len(G) + 1):
            if len(G) % p == 0 and _is_prime(p):
                yield name, p, G


@pytest.fixture(scope="session")
def catalog_systems():
    """[(name, prime, F)] over the order-bounded catalog sweep."""
    return [
        (name, p, fusion_of_group(G, p)) for name, p, G in sweep_pairs()
    ]


@pytest.fixture(scope="session")
def sweep_weakly_normal(catalog_systems):
    """[(name, prime, F, T, systems)] for every strongly closed T with
    |T| <= SWEEP_T_BOUND, with the full list of weakly normal subsystems
    on T found by enumeration."""
    out = []
    for name, p, F in catalog_systems:
        for T in strongly_closed_subgroups(F):
            if len(T) > SWEEP_T_BOUND:
                continue
            out.append((name, p, F, T, weakly_normal_systems_on(F, T)))
    return out
