"""Brute-force oracles, independent of the library's lattice and closure code.

Subgroups are found by raw subset closure over the multiplication table, and
subsystems on a carrier by a from-scratch closure operator on plain mapping
tables (domain elements paired with their images).  Nothing here touches
all_subgroups, generated_fusion, or FusionSystem internals, so agreement with
the library is evidence, not tautology.
"""

from __future__ import annotations

from fusionkit import FusionSystem, Morphism, Subgroup, generated_fusion

RawIso = tuple[tuple[int, ...], tuple[int, ...]]


def oracle_subgroup_sets(P: Subgroup) -> set[frozenset[int]]:
    """Every subgroup of P, as element sets, by subset closure."""
    G = P.group
    found: set[frozenset[int]] = set()
    frontier = {frozenset((G.identity,))}
    while frontier:
        current = frontier.pop()
        if current in found:
            continue
        found.add(current)
        for g in P.elements:
            if g in current:
                continue
            grown = set(current)
            grown.add(g)
            changed = True
            while changed:
                changed = False
                for a in tuple(grown):
                    inv = G.inv(a)
                    if inv not in grown:
                        grown.add(inv)
                        changed = True
                    for b in tuple(grown):
                        prod = G.mul(a, b)
                        if prod not in grown:
                            grown.add(prod)
                            changed = True
            frontier.add(frozenset(grown))
    return found


def oracle_subgroup_count(P: Subgroup) -> int:
    return len(oracle_subgroup_sets(P))


def _raw(domain: tuple[int, ...], images: dict[int, int]) -> RawIso:
    return (domain, tuple(images[x] for x in domain))


def _raw_of_morphism(m: Morphism) -> RawIso:
    return (m.domain.elements, m.mapping)


def _invert(iso: RawIso) -> RawIso:
    dom, img = iso
    pairs = sorted(zip(img, dom))
    return (tuple(x for x, _ in pairs), tuple(y for _, y in pairs))


def _compose(first: RawIso, second: RawIso) -> RawIso | None:
    """first followed by second, when the image of first is the domain of
    second as a set."""
    dom1, img1 = first
    dom2, img2 = second
    if set(img1) != set(dom2):
        return None
    lookup = dict(zip(dom2, img2))
    return (dom1, tuple(lookup[y] for y in img1))


def _restrictions(iso: RawIso, subgroup_sets: set[frozenset[int]]) -> list[RawIso]:
    dom, img = iso
    lookup = dict(zip(dom, img))
    out = []
    for sub in subgroup_sets:
        if sub < set(dom):
            restricted = tuple(sorted(sub))
            out.append((restricted, tuple(lookup[x] for x in restricted)))
    return out


def _close(
    seed: set[RawIso], subgroup_sets: set[frozenset[int]]
) -> frozenset[RawIso]:
    closed = set(seed)
    frontier = list(seed)
    while frontier:
        iso = frontier.pop()
        candidates = [_invert(iso)]
        candidates.extend(_restrictions(iso, subgroup_sets))
        for other in tuple(closed):
            for combo in (_compose(iso, other), _compose(other, iso)):
                if combo is not None:
                    candidates.append(combo)
        for cand in candidates:
            if cand not in closed:
                closed.add(cand)
                frontier.append(cand)
    return frozenset(closed)


def _inner_seed(T: Subgroup, subgroup_sets: set[frozenset[int]]) -> set[RawIso]:
    G = T.group
    seed: set[RawIso] = set()
    for sub in subgroup_sets:
        dom = tuple(sorted(sub))
        for t in T.elements:
            seed.add((dom, tuple(G.conj(x, t) for x in dom)))
    return seed


def oracle_subsystem_tables(F: FusionSystem, T: Subgroup) -> set[frozenset[RawIso]]:
    """Every subsystem of F on the carrier T, as closed sets of raw tables."""
    subgroup_sets = oracle_subgroup_sets(T)
    pool = {
        _raw_of_morphism(m)
        for Q in F.subgroups()
        if Q <= T
        for m in F.isos_from(Q)
        if m.codomain <= T
    }
    base = _close(_inner_seed(T, subgroup_sets), subgroup_sets)
    found = {base}
    frontier = [base]
    while frontier:
        current = frontier.pop()
        for iso in pool:
            if iso in current:
                continue
            grown = _close(set(current) | {iso}, subgroup_sets)
            if grown not in found:
                found.add(grown)
                frontier.append(grown)
    return found


def system_table(E: FusionSystem) -> frozenset[RawIso]:
    """The raw-table form of a library fusion system, for comparison."""
    return frozenset(_raw_of_morphism(m) for m in E.all_isos())


def system_from_table(F: FusionSystem, T: Subgroup, table: frozenset[RawIso]):
    """Rebuild a library system from a raw table (tables are already closed,
    so generation adds nothing; asserted by the caller via system_table)."""
    G = F.group
    isos = [
        Morphism(Subgroup(G, set(dom)), Subgroup(G, set(img)), img)
        for dom, img in table
    ]
    return generated_fusion(T, F.p, isos)
