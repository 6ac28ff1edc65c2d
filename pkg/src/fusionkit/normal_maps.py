"""Weakly normal maps A(-) on a strongly closed subgroup.

A weakly normal map assigns to every subgroup U of a strongly closed T a
subgroup A(U) of Aut(U) subject to five axioms; the subsystem generated by
all the A(U) is weakly normal and recovers A as its automizer assignment.
This module implements the axiom checker, the completion of a partial map
from its defining subgroups, subsystem generation, intersections of weakly
normal subsystems, coprime enlargement, the minimal/maximal systems on a
based subgroup, and T-cores.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    CoreUndefined,
    FusionkitError,
    InconsistentPartial,
    IndexNotCoprime,
    NotASubgroup,
    NotNormalInAutF,
    NotStronglyClosed,
    PostconditionViolation,
    PreconditionFailed,
    TheoremViolation,
)
from .fusion import (
    FusionSystem,
    Key,
    generated_fusion,
    intersect_raw,
    is_strongly_closed,
    is_subsystem,
)
from .groups import Subgroup, all_subgroups, centralizer, normalizer, p_part, subgroups_between
from .morphisms import Morphism
from .saturation import is_saturated
from .subsystems import normality_status, o_p_prime_subsystem

__all__ = [
    "AutMap",
    "MapVerdict",
    "BasedRange",
    "NotBased",
    "partial_domain",
    "aut_map_of",
    "check_weakly_normal_map",
    "complete_partial_map",
    "generate_from_map",
    "intersection_wedge",
    "enlarge_weakly_normal",
    "weakly_normal_systems_on",
    "based_range",
    "t_core",
    "aut_map_to_data",
    "aut_map_from_data",
]

AUT_MAP_SCHEMA = "fusionkit-autmap/1"

# Cap on the number of seed assignments tried by the subsystem search.
SEARCH_CAP = 4096


@dataclass(frozen=True)
class AutMap:
    """An assignment U -> A(U) of automorphism mapping-sets for all U <= T.

    Values are frozensets of mapping tuples aligned to the sorted elements
    of their subgroup, the same convention as the fusion iso tables.
    """

    T: Subgroup
    assignment: dict[Key, frozenset[Key]]

    def at(self, U: Subgroup) -> frozenset[Key]:
        return self.assignment[U.key]

    def morphisms_at(self, U: Subgroup) -> tuple[Morphism, ...]:
        return tuple(Morphism(U, U, m) for m in sorted(self.assignment[U.key]))


@dataclass(frozen=True)
class MapVerdict:
    """Outcome of the axiom check, with the first failing axiom tagged."""

    ok: bool
    axiom: str | None = None
    reason: str | None = None
    witness: object = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class BasedRange:
    """The minimal and maximal weakly normal subsystems on a based subgroup."""

    T: Subgroup
    minimal: FusionSystem
    maximal: FusionSystem

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class NotBased:
    """Returned when no weakly normal subsystem exists on the subgroup."""

    T: Subgroup
    reason: str

    def __bool__(self) -> bool:
        return False


def partial_domain(F: FusionSystem, T: Subgroup) -> tuple[Subgroup, ...]:
    """The subgroups a partial map must cover: fully normalized U <= T with
    C_T(U) <= U.  A completed map is determined by its values here."""
    T = F.require_in_p(T)
    return tuple(
        Q
        for Q in F.subgroups()
        if Q <= T and F.is_fully_normalized(Q) and centralizer(T, Q) <= Q
    )


def aut_map_of(E: FusionSystem) -> AutMap:
    """The automizer assignment U -> Aut_E(U) of a subsystem."""
    assignment = {
        Q.key: frozenset(E.iso_mappings(Q, Q)) for Q in E.subgroups()
    }
    return AutMap(E.P, assignment)


def _transported(Q: Subgroup, mappings, phi: Morphism) -> frozenset[Key]:
    return frozenset(
        Morphism(Q, Q, m).conjugated_by(phi).mapping for m in mappings
    )


def _stabilizing_restrictions(V: Subgroup, Q: Subgroup, mappings) -> frozenset[Key]:
    """Restrictions to Q of the given automorphisms of V that map Q onto Q."""
    qset = set(Q.elements)
    out = set()
    for m in mappings:
        psi = Morphism(V, V, m)
        if {psi.apply(x) for x in Q.elements} == qset:
            out.add(psi.restrict(Q).with_codomain(Q).mapping)
    return frozenset(out)


def _aut_positions(F: FusionSystem, Q: Subgroup, mappings) -> Subgroup:
    ag = F.aut_group(Q)
    return Subgroup(
        ag.group,
        (ag.index_of(Morphism(Q, Q, m)) for m in mappings),
        check=True,
    )


def check_weakly_normal_map(F: FusionSystem, A: AutMap) -> MapVerdict:
    """Check the five weakly normal map axioms, exhaustively, in order.

    Returns a verdict carrying the tag of the first failing axiom and a
    witness.  Raises on structural problems: T not strongly closed, the
    assignment not covering exactly the subgroups of T, or some A(U) not
    being a subgroup of Aut_F(U).
    """
    T = F.require_in_p(A.T)
    if not is_strongly_closed(F, T):
        raise NotStronglyClosed("the map must live on a strongly closed subgroup", witness=T)
    subs = [Q for Q in F.subgroups() if Q <= T]
    if set(A.assignment) != {Q.key for Q in subs}:
        raise PreconditionFailed("assignment must cover exactly the subgroups of T")
    for Q in subs:
        allowed = set(F.iso_mappings(Q, Q))
        if not A.assignment[Q.key] <= allowed:
            raise PreconditionFailed(
                "A(U) must be contained in Aut_F(U)", witness=Q
            )
        try:
            _aut_positions(F, Q, A.assignment[Q.key])
        except NotASubgroup:
            raise PreconditionFailed(
                "A(U) must be a subgroup of Aut_F(U)", witness=Q
            ) from None

    # (i) A(U phi) = A(U)^phi for every F-isomorphism phi with domain in T.
    for Q in subs:
        base = A.assignment[Q.key]
        for phi in F.isos_from(Q):
            R = phi.codomain
            if _transported(Q, base, phi) != A.assignment[R.key]:
                return MapVerdict(
                    False,
                    axiom="i",
                    reason="conjugation transport disagrees with the assignment",
                    witness=(Q, phi),
                )

    fully_normalized = [Q for Q in subs if F.is_fully_normalized(Q)]

    # (ii) Aut_T(U) <= A(U) for fully normalized U.
    for Q in fully_normalized:
        if not F.aut_mappings_of_conjugation(Q, T) <= A.assignment[Q.key]:
            return MapVerdict(
                False,
                axiom="ii",
                reason="A(U) misses a T-conjugation automorphism",
                witness=Q,
            )

    # (iii) Aut_T(T) is a Sylow p-subgroup of A(T).
    inn_t = F.aut_mappings_of_conjugation(T, T)
    a_t = A.assignment[T.key]
    if not (inn_t <= a_t and p_part(len(a_t), F.p) == len(inn_t)):
        return MapVerdict(
            False,
            axiom="iii",
            reason="Aut_T(T) is not a Sylow p-subgroup of A(T)",
            witness=T,
        )

    # (iv) every element of A(U) extends to an element of A(U C_T(U)),
    # for fully normalized U.
    for Q in fully_normalized:
        V = Q.join(centralizer(T, Q))
        restrictions = _stabilizing_restrictions(V, Q, A.assignment[V.key])
        missing = A.assignment[Q.key] - restrictions
        if missing:
            return MapVerdict(
                False,
                axiom="iv",
                reason="an element of A(U) has no extension in A(U C_T(U))",
                witness=(Q, sorted(missing)[0]),
            )

    # (v) for fully normalized U with C_T(U) <= U and U <= V <= N_T(U), the
    # restriction map from the U-stabilizing part of A(V) is a well defined
    # surjection onto N_{A(U)}(Aut_V(U)): restrictions must land inside A(U)
    # and must cover the whole normalizer.
    for Q in fully_normalized:
        if not centralizer(T, Q) <= Q:
            continue
        ag = F.aut_group(Q)
        a_pos = _aut_positions(F, Q, A.assignment[Q.key])
        for V in subgroups_between(Q, normalizer(T, Q)):
            autv_pos = _aut_positions(F, Q, F.aut_mappings_of_conjugation(Q, V))
            needed = {
                m.mapping for m in ag.morphisms_of(normalizer(a_pos, autv_pos))
            }
            got = _stabilizing_restrictions(V, Q, A.assignment[V.key])
            if not got <= needed:
                return MapVerdict(
                    False,
                    axiom="v",
                    reason="an element of A(V) stabilizing U restricts outside A(U)",
                    witness=(Q, V),
                )
            if not needed <= got:
                return MapVerdict(
                    False,
                    axiom="v",
                    reason="restriction map is not onto the normalizer of Aut_V(U) in A(U)",
                    witness=(Q, V),
                )

    return MapVerdict(True)


def complete_partial_map(F: FusionSystem, T: Subgroup, partial) -> AutMap:
    """Extend a partial map from its defining subgroups to all of T.

    The partial map must be given exactly on the fully normalized U <= T
    with C_T(U) <= U.  Values propagate by descending order: conjugation
    transport within each size, and restriction from U C_T(U) for fully
    normalized subgroups not in the domain.  Disagreement between transport
    routes raises InconsistentPartial.
    """
    T = F.require_in_p(T)
    if isinstance(partial, AutMap):
        given = {k: frozenset(v) for k, v in partial.assignment.items()}
    else:
        given = {k: frozenset(v) for k, v in dict(partial).items()}
    domain = partial_domain(F, T)
    if set(given) != {Q.key for Q in domain}:
        raise PreconditionFailed(
            "partial map must be defined exactly on the fully normalized "
            "subgroups of T that contain their T-centralizer"
        )

    subs = [Q for Q in F.subgroups() if Q <= T]
    assigned: dict[Key, frozenset[Key]] = {}
    for size in sorted({len(Q) for Q in subs}, reverse=True):
        layer = [Q for Q in subs if len(Q) == size]
        normalized = [Q for Q in layer if F.is_fully_normalized(Q)]
        for Q in normalized:
            if Q.key in given:
                assigned[Q.key] = given[Q.key]
            else:
                V = Q.join(centralizer(T, Q))
                assigned[Q.key] = _stabilizing_restrictions(
                    V, Q, assigned[V.key]
                )
        for Q in normalized:
            base = assigned[Q.key]
            for phi in F.isos_from(Q):
                R = phi.codomain
                value = _transported(Q, base, phi)
                prev = assigned.get(R.key)
                if prev is None:
                    assigned[R.key] = value
                elif prev != value:
                    raise InconsistentPartial(
                        "conjugation transport disagrees between two routes",
                        witness=(Q, R),
                    )
        for Q in layer:
            if Q.key not in assigned:
                raise PreconditionFailed(
                    "a subgroup of T has no fully normalized conjugate",
                    witness=Q,
                )
    return AutMap(T, assigned)


def generate_from_map(
    F: FusionSystem, A: AutMap, *, name: str | None = None
) -> FusionSystem:
    """The subsystem generated by all the A(U).

    Requires the axiom check to pass.  The result is verified to be weakly
    normal with automizers exactly A(U); a failure raises
    PostconditionViolation.
    """
    verdict = check_weakly_normal_map(F, A)
    if not verdict:
        raise PreconditionFailed(
            f"not a weakly normal map: axiom ({verdict.axiom}) fails: {verdict.reason}"
        )
    T = F.require_in_p(A.T)
    seeds = [
        Morphism(Q, Q, m)
        for Q in F.subgroups()
        if Q <= T
        for m in sorted(A.assignment[Q.key])
    ]
    E = generated_fusion(T, F.p, seeds, name=name)
    status = normality_status(F, E)
    if not status.weakly_normal:
        raise PostconditionViolation(
            "generated subsystem is not weakly normal", witness=E
        )
    for Q in E.subgroups():
        if frozenset(E.iso_mappings(Q, Q)) != A.assignment[Q.key]:
            raise PostconditionViolation(
                "generated subsystem has the wrong automizer", witness=Q
            )
    return E


def _aut_subgroup_of(F: FusionSystem, E: FusionSystem, T: Subgroup) -> Subgroup:
    return _aut_positions(F, T, E.iso_mappings(T, T))


def _compose_into(psi: Morphism, h: Morphism) -> Key:
    return tuple(h.apply(x) for x in psi.mapping)


def enlarge_weakly_normal(
    F: FusionSystem,
    E: FusionSystem,
    H,
    *,
    name: str | None = None,
) -> FusionSystem:
    """The weakly normal subsystem on T with Aut(T) enlarged to H.

    E must be weakly normal on T = E.P; H is a normal subgroup of Aut_F(T)
    containing Aut_E(T) with index prime to p, given either as a subgroup
    of F.aut_group(T).group or as an iterable of automorphisms of T.  The
    result E' satisfies Hom_{E'}(Q, T) = Hom_E(Q, T) . H for all Q <= T.
    """
    T = F.require_in_p(E.P)
    ag = F.aut_group(T)
    if isinstance(H, Subgroup):
        if H.group != ag.group:
            raise NotASubgroup("H must be a subgroup of Aut_F(T)")
        h_pos = Subgroup(ag.group, H.elements, check=True)
    else:
        h_pos = Subgroup(
            ag.group, (ag.index_of(m) for m in H), check=True
        )
    aut_e = _aut_subgroup_of(F, E, T)
    if not aut_e <= h_pos:
        raise PreconditionFailed("H must contain Aut_E(T)")
    if not h_pos.is_normal_in(ag.group.full_subgroup):
        raise NotNormalInAutF("H must be normal in Aut_F(T)", witness=h_pos)
    if (len(h_pos) // len(aut_e)) % F.p == 0:
        raise IndexNotCoprime(
            "|H : Aut_E(T)| must be prime to p", witness=h_pos
        )

    h_morphs = ag.morphisms_of(h_pos)
    seeds = list(E.all_isos()) + list(h_morphs)
    E2 = generated_fusion(T, F.p, seeds, name=name)

    if frozenset(E2.iso_mappings(T, T)) != {m.mapping for m in h_morphs}:
        raise PostconditionViolation("Aut of the enlargement is not H", witness=E2)
    for Q in E2.subgroups():
        lhs = {m.mapping for m in E2.hom_set(Q, T)}
        rhs = {
            _compose_into(psi, h)
            for psi in E.hom_set(Q, T)
            for h in h_morphs
        }
        if lhs != rhs:
            raise PostconditionViolation(
                "hom-sets of the enlargement do not match Hom_E(Q, T) . H",
                witness=Q,
            )
    if not normality_status(F, E2).weakly_normal:
        raise PostconditionViolation(
            "enlargement is not weakly normal", witness=E2
        )
    return E2


def weakly_normal_systems_on(F: FusionSystem, T: Subgroup) -> tuple[FusionSystem, ...]:
    """All weakly normal subsystems of F on the strongly closed subgroup T.

    Searches over the possible values of a weakly normal map on the
    defining subgroups, one choice per F-class; each surviving map is
    completed, checked, and generated.  The search is exhaustive because
    every weakly normal subsystem restricts to such an assignment.
    """
    T = F.require_in_p(T)
    if not is_strongly_closed(F, T):
        raise NotStronglyClosed("T must be strongly closed", witness=T)
    domain = partial_domain(F, T)
    by_class: dict[Key, list[Subgroup]] = {}
    for Q in domain:
        rep = F.conjugacy_class(Q).representative
        by_class.setdefault(rep.key, []).append(Q)

    class_choices: list[tuple[Subgroup, list[Subgroup], list[frozenset[Key]]]] = []
    total = 1
    for seeds in by_class.values():
        Q = seeds[0]
        ag = F.aut_group(Q)
        full = ag.group.full_subgroup
        inn_t = _aut_positions(F, Q, F.aut_mappings_of_conjugation(Q, T))
        choices = []
        for S in all_subgroups(full):
            if not (inn_t <= S and S.is_normal_in(full)):
                continue
            if Q == T and p_part(len(S), F.p) != len(inn_t):
                continue
            choices.append(
                frozenset(m.mapping for m in ag.morphisms_of(S))
            )
        class_choices.append((Q, seeds, choices))
        total *= len(choices)
        if total > SEARCH_CAP:
            raise FusionkitError(
                f"seed assignment search space exceeds {SEARCH_CAP}"
            )

    found: dict[tuple, FusionSystem] = {}
    for combo in itertools.product(*(c for _, _, c in class_choices)):
        partial: dict[Key, frozenset[Key]] = {}
        for (rep, seeds, _), value in zip(class_choices, combo):
            partial[rep.key] = value
            for Q in seeds[1:]:
                phi = F.isos_between(rep, Q)[0]
                partial[Q.key] = _transported(rep, value, phi)
        try:
            A = complete_partial_map(F, T, partial)
        except InconsistentPartial:
            continue
        if not check_weakly_normal_map(F, A):
            continue
        E = generate_from_map(F, A)
        found.setdefault(E.to_key(), E)
    return tuple(
        found[k] for k in sorted(found, key=lambda k: (len(str(k)), str(k)))
    )


def based_range(F: FusionSystem, T: Subgroup) -> BasedRange | NotBased:
    """The minimal and maximal weakly normal subsystems on T, if any exist.

    The minimal system is cross-checked against the p'-residue of a found
    system, and the maximal one against the largest coprime enlargement;
    disagreement with the enumeration raises TheoremViolation.
    """
    systems = weakly_normal_systems_on(F, T)
    if not systems:
        return NotBased(T=F.require_in_p(T), reason="no weakly normal subsystem on this subgroup")
    T = F.require_in_p(T)

    minimal = None
    for E in systems:
        if all(is_subsystem(E, other) for other in systems):
            minimal = E
            break
    if minimal is None:
        raise TheoremViolation("weakly normal systems on T have no minimum", witness=T)
    residue = o_p_prime_subsystem(systems[0])
    if residue != minimal:
        raise TheoremViolation(
            "minimal weakly normal system differs from the p'-residue", witness=T
        )

    ag = F.aut_group(T)
    full = ag.group.full_subgroup
    aut_min = _aut_subgroup_of(F, minimal, T)
    h_max = aut_min
    for S in all_subgroups(full):
        if (
            aut_min <= S
            and S.is_normal_in(full)
            and (len(S) // len(aut_min)) % F.p != 0
        ):
            h_max = h_max.join(S)
    maximal = enlarge_weakly_normal(F, minimal, h_max)
    for E in systems:
        if not is_subsystem(E, maximal):
            raise TheoremViolation(
                "a weakly normal system escapes the maximal enlargement",
                witness=E,
            )
    if maximal.to_key() not in {E.to_key() for E in systems}:
        raise TheoremViolation(
            "maximal enlargement missing from the enumeration", witness=T
        )
    return BasedRange(T=T, minimal=minimal, maximal=maximal)


def t_core(F: FusionSystem, D: FusionSystem, T: Subgroup) -> FusionSystem:
    """The largest weakly normal subsystem of F on T contained in D.

    D is any subsystem of F whose carrier contains T.  Defined whenever T
    is based in F and the minimal system on T lies inside D.
    """
    T = F.require_in_p(T)
    if not T <= D.P:
        raise PreconditionFailed("the container must be a subsystem on a subgroup containing T")
    systems = weakly_normal_systems_on(F, T)
    if not systems:
        raise PreconditionFailed("T is not based in F", witness=T)
    minimal = next(
        (E for E in systems if all(is_subsystem(E, o) for o in systems)), None
    )
    if minimal is None:
        raise TheoremViolation("weakly normal systems on T have no minimum", witness=T)
    if not is_subsystem(minimal, D):
        raise CoreUndefined(
            "the minimal weakly normal system on T is not contained in D",
            witness=T,
        )
    inside = [E for E in systems if is_subsystem(E, D)]
    best = max(inside, key=lambda E: E.iso_count())
    for E in inside:
        if not is_subsystem(E, best):
            raise TheoremViolation("T-core is not unique", witness=E)
    return best


def _nested_wedge(ambient: FusionSystem, Ea: FusionSystem, Eb: FusionSystem) -> FusionSystem:
    """The wedge of two subsystems with nested carriers, via the map route.

    Seeds A(Q) = Aut_{Ea}(Q) n Aut_{Eb}(Q) on the defining subgroups of
    T = Ea.P, then completes, checks, and generates over the ambient.
    """
    T = Ea.P
    partial = {
        Q.key: frozenset(
            set(Ea.iso_mappings(Q, Q)) & set(Eb.iso_mappings(Q, Q))
        )
        for Q in partial_domain(ambient, T)
    }
    A = complete_partial_map(ambient, T, partial)
    verdict = check_weakly_normal_map(ambient, A)
    if not verdict:
        raise TheoremViolation(
            f"intersection map fails axiom ({verdict.axiom}): {verdict.reason}",
            witness=verdict.witness,
        )
    E = generate_from_map(ambient, A)
    if not (is_subsystem(E, Ea) and is_subsystem(E, Eb)):
        raise TheoremViolation(
            "wedge is not contained in both subsystems", witness=E
        )
    return E


def intersection_wedge(
    F: FusionSystem, E1: FusionSystem, E2: FusionSystem
) -> FusionSystem:
    """The wedge of two weakly normal subsystems of F.

    For nested carriers this is the map route: automizer intersections on
    the defining subgroups, completed and generated; the result is weakly
    normal in F and contained in both.  For incomparable carriers it is the
    T-core of the raw intersection over T = E1.P n E2.P.  If exactly one of
    the two is merely saturated (on the smaller carrier), the wedge is
    computed inside it and is weakly normal there instead.
    """
    s1 = normality_status(F, E1)
    s2 = normality_status(F, E2)
    T1, T2 = E1.P, E2.P
    if s1.weakly_normal and s2.weakly_normal:
        if T1 <= T2:
            return _nested_wedge(F, E1, E2)
        if T2 <= T1:
            return _nested_wedge(F, E2, E1)
        T = Subgroup(F.group, set(T1.elements) & set(T2.elements), check=True)
        D = intersect_raw(E1, E2)
        return t_core(F, D, T)
    if s2.weakly_normal and T1 <= T2 and is_saturated(E1):
        return _nested_wedge(E1, E1, E2)
    if s1.weakly_normal and T2 <= T1 and is_saturated(E2):
        return _nested_wedge(E2, E2, E1)
    raise PreconditionFailed(
        "wedge needs weakly normal subsystems, or one weakly normal and "
        "one saturated on the smaller carrier"
    )


def aut_map_to_data(A: AutMap) -> dict:
    return {
        "schema": AUT_MAP_SCHEMA,
        "T": list(A.T.elements),
        "assignment": [
            [list(key), [list(m) for m in sorted(value)]]
            for key, value in sorted(A.assignment.items())
        ],
    }


def aut_map_from_data(F: FusionSystem, data: dict) -> AutMap:
    if data.get("schema") != AUT_MAP_SCHEMA:
        raise PreconditionFailed(f"expected schema {AUT_MAP_SCHEMA}")
    T = F.require_in_p(Subgroup(F.group, data["T"]))
    assignment = {
        tuple(key): frozenset(tuple(m) for m in mappings)
        for key, mappings in data["assignment"]
    }
    return AutMap(T, assignment)
