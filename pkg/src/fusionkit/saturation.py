"""Saturation predicates and the two whole-system saturation deciders."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotAnIsomorphism, NotASubgroupOfP
from .fusion import FusionSystem
from .groups import Subgroup, normalizer, p_part, subgroups_between
from .morphisms import Morphism


@dataclass(frozen=True)
class SubgroupStatus:
    fully_normalized: bool
    fully_centralized: bool
    fully_automized: bool
    receptive: bool
    centric: bool


@dataclass(frozen=True)
class NPhi:
    """The extension-control subgroup of an isomorphism phi: S -> R."""

    morphism: Morphism
    n_phi: Subgroup


@dataclass(frozen=True)
class SaturationVerdict:
    saturated: bool
    witness: Subgroup | None = None
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.saturated


def n_phi(F: FusionSystem, phi: Morphism) -> NPhi:
    """N_phi: the preimage in N_P(S) of Aut_P(S) ∩ Aut_P(R)^{phi^-1}."""
    S = phi.domain
    F.require_in_p(S)
    if len(set(phi.mapping)) != len(phi.mapping) or not F.contains_morphism(phi):
        raise NotAnIsomorphism("phi must be an isomorphism of the system", witness=phi)
    R = phi.image()
    target = F.aut_mappings_of_conjugation(R, F.P)
    G = F.group
    members = []
    for g in normalizer(F.P, S).elements:
        cg = Morphism(S, S, tuple(G.conj(x, g) for x in S.elements))
        if cg.conjugated_by(phi).mapping in target:
            members.append(g)
    return NPhi(phi, Subgroup(G, members, check=False))


def extend_morphism(F: FusionSystem, phi: Morphism, D: Subgroup) -> Morphism | None:
    """The first F-morphism D -> P restricting to phi, in canonical order."""
    S = phi.domain
    F.require_in_p(D)
    if not S <= D:
        raise NotASubgroupOfP("extension domain must contain the domain of phi", witness=S)
    dpos = {e: i for i, e in enumerate(D.elements)}
    restriction = tuple(dpos[x] for x in S.elements)
    for psi in F.hom_set(D, F.P):
        if tuple(psi.mapping[i] for i in restriction) == phi.mapping:
            return psi
    return None


def is_receptive(F: FusionSystem, R: Subgroup) -> bool:
    """Whether every F-isomorphism onto R extends to its N_phi."""
    F.require_in_p(R)
    for S in F.conjugacy_class(R):
        for phi in F.isos_between(S, R):
            control = n_phi(F, phi).n_phi
            if extend_morphism(F, phi, control) is None:
                return False
    return True


def is_fully_automized(F: FusionSystem, Q: Subgroup) -> bool:
    return len(F.aut_p_subgroup(Q)) == p_part(len(F.aut_group(Q)), F.p)


def is_centric(F: FusionSystem, Q: Subgroup) -> bool:
    return all(F.c_p(R) <= R for R in F.conjugacy_class(Q))


def subgroup_status(F: FusionSystem, Q: Subgroup) -> SubgroupStatus:
    F.require_in_p(Q)
    return SubgroupStatus(
        fully_normalized=F.is_fully_normalized(Q),
        fully_centralized=F.is_fully_centralized(Q),
        fully_automized=is_fully_automized(F, Q),
        receptive=is_receptive(F, Q),
        centric=is_centric(F, Q),
    )


def has_surjectivity_property(F: FusionSystem, Q: Subgroup) -> bool:
    """Whether Aut_F(Q ≤ R) -> N_{Aut_F(Q)}(Aut_R(Q)) is onto for every
    R between QC_P(Q) and N_P(Q)."""
    F.require_in_p(Q)
    A = F.aut_group(Q)
    qset = Q._set
    for R in subgroups_between(Q.join(F.c_p(Q)), F.n_p(Q)):
        aut_r = A.subgroup_from(
            Morphism(Q, Q, m) for m in F.aut_mappings_of_conjugation(Q, R)
        )
        needed = normalizer(A.group.full_subgroup, aut_r)
        restrictions = set()
        for psi in F.isos_between(R, R):
            if qset == {psi.apply(x) for x in Q.elements}:
                restrictions.add(psi.restrict(Q).with_codomain(Q).mapping)
        if not {A.morphisms[i].mapping for i in needed.elements} <= restrictions:
            return False
    return True


def is_saturated(F: FusionSystem) -> SaturationVerdict:
    """Roberts-Shpectorov criterion: every class has a fully automized,
    receptive member."""
    cached = F._cache.get("saturated")
    if cached is not None:
        return cached
    verdict = SaturationVerdict(True)
    for cls in F.classes():
        if not any(
            is_fully_automized(F, Q) and is_receptive(F, Q) for Q in cls.members
        ):
            verdict = SaturationVerdict(
                False,
                witness=cls.representative,
                reason="class has no fully automized receptive member",
            )
            break
    F._cache["saturated"] = verdict
    return verdict


def normalizer_map(F: FusionSystem, R: Subgroup, Q: Subgroup) -> Morphism | None:
    """Some F-morphism N_P(R) -> N_P(Q) carrying R onto Q, if one exists."""
    NR, NQ = F.n_p(R), F.n_p(Q)
    pos = {e: i for i, e in enumerate(NR.elements)}
    idx = tuple(pos[x] for x in R.elements)
    qset = Q._set
    for psi in F.hom_set(NR, NQ):
        if {psi.mapping[i] for i in idx} == qset:
            return psi
    return None


def is_saturated_puig(F: FusionSystem) -> SaturationVerdict:
    """Puig-style criterion: P fully automized, and each class has a member
    Q reachable from every member's normalizer and having the surjectivity
    property."""
    if not is_fully_automized(F, F.P):
        return SaturationVerdict(False, witness=F.P, reason="P is not fully automized")
    for cls in F.classes():
        ok = False
        for Q in cls.members:
            if all(normalizer_map(F, R, Q) is not None for R in cls.members):
                if has_surjectivity_property(F, Q):
                    ok = True
                    break
        if not ok:
            return SaturationVerdict(
                False,
                witness=cls.representative,
                reason="no member satisfies the normalizer-map and surjectivity conditions",
            )
    return SaturationVerdict(True)
