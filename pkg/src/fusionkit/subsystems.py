"""Strong closure, normality verdicts, local subsystems, O_p, O^{p'},
Frattini decomposition, detecting subgroups, and the normality theorem
verifier."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    InputError,
    NoDecomposition,
    NotASubsystem,
    NotCentric,
    NotFullyCentralized,
    NotFullyNormalized,
    NotSaturated,
    NotStronglyClosed,
    PreconditionFailed,
    SaturationValidationFailed,
    TheoremViolation,
)
from .fusion import (
    FusionSystem,
    generated_fusion,
    is_strongly_closed,
    is_subsystem,
    quotient,
    quotient_with_data,
)
from .groups import QuotientData, Subgroup, all_subgroups, coset_quotient
from .morphisms import Morphism
from .saturation import is_centric, is_saturated


@dataclass(frozen=True)
class NormalityVerdict:
    invariant: bool
    weakly_normal: bool
    normal: bool
    frattini_witness: tuple[Morphism, Morphism, Morphism] | None = None
    failure_witness: Morphism | None = None


@dataclass(frozen=True)
class DetectionContext:
    """The subquotient Y_Q = Z(Q)C_P(T)/Z(Q) attached to an E-centric Q."""

    T: Subgroup
    Q: Subgroup
    yq: QuotientData


@dataclass(frozen=True)
class Detection:
    detecting: bool
    witness: Morphism | None = None

    def __bool__(self) -> bool:
        return self.detecting


@dataclass(frozen=True)
class TheoremAReport:
    subsystem: FusionSystem
    verdict: NormalityVerdict
    w_set: tuple[tuple[Morphism, Morphism], ...]

    @property
    def holds(self) -> bool:
        return self.verdict.normal


def strongly_closed_subgroups(F: FusionSystem) -> list[Subgroup]:
    return [T for T in F.subgroups() if is_strongly_closed(F, T)]


def comm_set(phi: Morphism, X: Subgroup) -> set[int]:
    """{x^-1 (x phi) : x in X}; X must lie inside the domain of phi."""
    G = X.group
    return {G.mul(G.inv(x), phi.apply(x)) for x in X.elements}


def is_invariant(F: FusionSystem, E: FusionSystem) -> Morphism | None:
    """None if E is F-invariant, else a transported morphism outside E."""
    T = E.P
    tset = T._set
    for qk, targets in F._isos.items():
        if not tset.issuperset(qk):
            continue
        qset = set(qk)
        inner_isos = [
            (q2k, m2)
            for q2k, tg in E._isos.items()
            if qset.issuperset(q2k)
            for ms2 in tg.values()
            for m2 in ms2
            if qset.issuperset(m2)
        ]
        if not inner_isos:
            continue
        for ms in targets.values():
            for m in ms:
                if not tset.issuperset(m):
                    continue
                send = dict(zip(qk, m))
                for q2k, m2 in inner_isos:
                    image = dict(zip(q2k, m2))
                    dom = sorted(send[x] for x in q2k)
                    back = {send[x]: x for x in q2k}
                    mapping = tuple(send[image[back[y]]] for y in dom)
                    if mapping not in E._isos.get(tuple(dom), {}).get(
                        tuple(sorted(mapping)), ()
                    ):
                        D = Subgroup(F.group, dom, check=False)
                        return Morphism(D, T, mapping)
    return None


def _normal_extension(F: FusionSystem, T: Subgroup, phi: Morphism) -> Morphism | None:
    """An extension of phi in Aut_F(TC_P(T)) with [ext, C_P(T)] ≤ Z(T)."""
    C = F.c_p(T)
    TC = T.join(C)
    ZT = T.centre()
    pos = {e: i for i, e in enumerate(TC.elements)}
    idx = tuple(pos[x] for x in T.elements)
    for psi in F.isos_between(TC, TC):
        if tuple(psi.mapping[i] for i in idx) != phi.mapping:
            continue
        if comm_set(psi, C) <= ZT._set:
            return psi
    return None


def normality_status(F: FusionSystem, E: FusionSystem) -> NormalityVerdict:
    T = E.P
    if not is_subsystem(E, F):
        raise NotASubsystem("E is not a subsystem of F", witness=E)
    if not is_strongly_closed(F, T):
        raise NotStronglyClosed("E does not live on a strongly closed subgroup", witness=T)
    bad = is_invariant(F, E)
    if bad is not None:
        return NormalityVerdict(False, False, False, failure_witness=bad)
    if not is_saturated(E).saturated:
        return NormalityVerdict(True, False, False)
    frattini = _frattini_sample(F, E)
    for phi in E.isos_between(T, T):
        if _normal_extension(F, T, phi) is None:
            return NormalityVerdict(
                True, True, False, frattini_witness=frattini, failure_witness=phi
            )
    return NormalityVerdict(True, True, True, frattini_witness=frattini)


def _frattini_sample(F: FusionSystem, E: FusionSystem) -> tuple | None:
    """A decomposition psi = alpha . beta for some F-morphism inside T."""
    T = E.P
    tset = T._set
    for qk, targets in sorted(F._isos.items()):
        if not tset.issuperset(qk):
            continue
        for rk in sorted(targets):
            if not tset.issuperset(rk):
                continue
            for m in targets[rk]:
                psi = Morphism(F.subgroup(qk), F.subgroup(rk), m)
                if E.contains_morphism(psi):
                    continue
                return (psi,) + frattini_decompose(F, E, psi)
    psi = Morphism.identity(T)
    return (psi,) + frattini_decompose(F, E, psi)


def frattini_decompose(
    F: FusionSystem, E: FusionSystem, psi: Morphism
) -> tuple[Morphism, Morphism]:
    """psi = alpha . beta with alpha in Aut_F(T) and beta in E."""
    T = E.P
    A = psi.domain
    if not A <= T or not T.contains_all(psi.mapping):
        raise NotASubsystem("morphism does not live inside T", witness=psi)
    AutT = F.aut_group(T)
    for alpha in AutT.morphisms:
        al = alpha.restrict(A)
        dom = sorted(al.mapping)
        back = {y: x for x, y in zip(A.elements, al.mapping)}
        mapping = tuple(psi.apply(back[y]) for y in dom)
        beta = Morphism(Subgroup(F.group, dom, check=False), T, mapping)
        if E.contains_morphism(beta):
            return alpha, beta
    raise NoDecomposition("no Frattini decomposition found", witness=psi)


# -- local subsystems ---------------------------------------------------------

LOCAL_KINDS = ("normalizer", "centralizer", "p_centralizer")


def local_subsystem(F: FusionSystem, Q: Subgroup, kind: str) -> FusionSystem:
    """N_F(Q), C_F(Q), or N_P(Q)C_F(Q), by extension search."""
    F.require_in_p(Q)
    if kind not in LOCAL_KINDS:
        raise InputError(f"unknown local subsystem kind: {kind!r}")
    if kind == "centralizer":
        if not F.is_fully_centralized(Q):
            raise NotFullyCentralized("Q must be fully centralized", witness=Q)
        carrier = F.c_p(Q)
    else:
        if not F.is_fully_normalized(Q):
            raise NotFullyNormalized("Q must be fully normalized", witness=Q)
        carrier = F.n_p(Q)
    G = F.group
    qset = Q._set
    if kind == "p_centralizer":
        allowed = F.aut_mappings_of_conjugation(Q, F.P)
    elif kind == "centralizer":
        allowed = {Q.elements}
    else:
        allowed = None
    isos: dict = {}
    for R in all_subgroups(carrier):
        QR = Q.join(R)
        pos = {e: i for i, e in enumerate(QR.elements)}
        q_idx = tuple(pos[x] for x in Q.elements)
        r_idx = tuple(pos[x] for x in R.elements)
        bucket = isos.setdefault(R.key, {})
        for psi in F.hom_set(QR, F.P):
            if {psi.mapping[i] for i in q_idx} != qset:
                continue
            if allowed is not None and tuple(psi.mapping[i] for i in q_idx) not in allowed:
                continue
            mapping = tuple(psi.mapping[i] for i in r_idx)
            bucket.setdefault(tuple(sorted(mapping)), set()).add(mapping)
    frozen = {
        qk: {rk: tuple(sorted(ms)) for rk, ms in targets.items()}
        for qk, targets in isos.items()
    }
    return FusionSystem(G, carrier, F.p, frozen)


def o_p(F: FusionSystem) -> Subgroup:
    """O_p(F): the largest subgroup with F = N_F(Q)."""
    if not is_saturated(F).saturated:
        raise NotSaturated("O_p needs a saturated system", witness=F)
    result = Subgroup(F.group, (F.group.identity,), check=False)
    for Q in strongly_closed_subgroups(F):
        if F.n_p(Q) == F.P and local_subsystem(F, Q, "normalizer") == F:
            result = result.join(Q)
    if not (F.n_p(result) == F.P and local_subsystem(F, result, "normalizer") == F):
        raise TheoremViolation("join of normal subgroups is not normal", witness=result)
    return result


def o_p_by_central_series(F: FusionSystem) -> Subgroup:
    """The largest strongly closed subgroup with a central series whose
    terms are all strongly closed; an independent route to O_p(F)."""
    closed = strongly_closed_subgroups(F)
    best = Subgroup(F.group, (F.group.identity,), check=False)
    for T in closed:
        chain = [S for S in closed if S <= T]
        reachable = {chain[0].key}
        changed = True
        while changed:
            changed = False
            for S in chain:
                if S.key in reachable:
                    continue
                for below in chain:
                    if below.key in reachable and below <= S:
                        comms = {
                            F.group.comm(x, t) for x in S.elements for t in T.elements
                        }
                        if below.contains_all(comms):
                            reachable.add(S.key)
                            changed = True
                            break
        if T.key in reachable and len(T) > len(best):
            best = T
    return best


def o_p_prime_subsystem(E: FusionSystem) -> FusionSystem:
    """O^{p'}(E): generated by O^{p'}(Aut_E(Q)) over all Q ≤ T."""
    if not is_saturated(E).saturated:
        raise NotSaturated("O^{p'} needs a saturated system", witness=E)
    seeds: list[Morphism] = []
    for Q in E.subgroups():
        seeds.extend(E.aut_group(Q).o_p_prime_part(E.p))
    result = generated_fusion(E.P, E.p, seeds)
    if not is_saturated(result).saturated:
        raise SaturationValidationFailed(
            "O^{p'} produced a non-saturated system", witness=result
        )
    return result


# -- detecting subgroups and Theorem A ----------------------------------------


def detection_context(F: FusionSystem, E: FusionSystem, Q: Subgroup) -> DetectionContext:
    """Y_Q = Z(Q)C_P(T)/Z(Q) for an E-centric Q ≤ T."""
    T = E.P
    if not is_centric(E, Q):
        raise NotCentric("Q must be E-centric", witness=Q)
    ZQ = Q.centre()
    top = ZQ.join(F.c_p(T))
    return DetectionContext(T, Q, coset_quotient(top, ZQ))


def is_detecting_subgroup(
    F: FusionSystem, E: FusionSystem, alpha: Morphism, Q: Subgroup
) -> Detection:
    """Whether Q detects alpha: some beta: QC_P(T) -> RC_P(T) restricts to
    alpha on Q and satisfies [beta, C_P(T)] ≤ Z(R)."""
    T = E.P
    if not is_centric(E, Q):
        raise NotCentric("Q must be E-centric", witness=Q)
    if alpha.domain != T or not E.contains_morphism(alpha):
        raise NotASubsystem("alpha must be an E-automorphism of T", witness=alpha)
    C = F.c_p(T)
    R = Subgroup(F.group, sorted(alpha.apply(x) for x in Q.elements), check=False)
    ZR = R.centre()
    QC = Q.join(C)
    RC = R.join(C)
    pos = {e: i for i, e in enumerate(QC.elements)}
    q_idx = tuple(pos[x] for x in Q.elements)
    target = tuple(alpha.apply(x) for x in Q.elements)
    for beta in F.hom_set(QC, RC):
        if tuple(beta.mapping[i] for i in q_idx) != target:
            continue
        if comm_set(beta, C) <= ZR._set:
            return Detection(True, beta)
    return Detection(False)


def verify_theorem_a(F: FusionSystem, E: FusionSystem) -> TheoremAReport:
    """O^{p'}(E) must be normal in F whenever E is weakly normal in F."""
    pre = normality_status(F, E)
    if not pre.weakly_normal:
        raise PreconditionFailed("E is not weakly normal in F", witness=pre)
    sub = o_p_prime_subsystem(E)
    T = E.P
    w_set = []
    for phi in sub.isos_between(T, T):
        ext = _normal_extension(F, T, phi)
        if ext is None:
            raise TheoremViolation(
                "an automorphism in O^{p'}(E) admits no normal extension", witness=phi
            )
        w_set.append((phi, ext))
    verdict = normality_status(F, sub)
    if not verdict.normal:
        raise TheoremViolation("O^{p'}(E) is not normal in F", witness=verdict)
    return TheoremAReport(sub, verdict, tuple(w_set))


def enumerate_subsystems_on(
    F: FusionSystem, S: Subgroup, *, limit: int = 20000
) -> tuple[FusionSystem, ...]:
    """All subsystems of F on the carrier S, by closure search.

    Starts from inner fusion and repeatedly closes under one more ambient
    isomorphism; every subsystem on S is the closure of finitely many of
    its isomorphisms, so the search is exhaustive.  Exceeding `limit`
    distinct subsystems raises InputError.
    """
    S = F.require_in_p(S)
    pool = [
        m
        for Q in F.subgroups()
        if Q <= S
        for m in F.isos_from(Q)
        if m.codomain <= S
    ]
    start = generated_fusion(S, F.p, [])
    seen = {start.to_key(): start}
    frontier = [start]
    while frontier:
        grown = []
        for E in frontier:
            for m in pool:
                if E.contains_morphism(m):
                    continue
                E2 = generated_fusion(S, F.p, list(E.all_isos()) + [m])
                key = E2.to_key()
                if key not in seen:
                    if len(seen) >= limit:
                        raise InputError(
                            f"more than {limit} subsystems on the carrier"
                        )
                    seen[key] = E2
                    grown.append(E2)
        frontier = grown
    return tuple(
        sorted(seen.values(), key=lambda E: (E.iso_count(), E.to_key()))
    )


__all__ = [
    "Detection",
    "DetectionContext",
    "NormalityVerdict",
    "TheoremAReport",
    "comm_set",
    "detection_context",
    "enumerate_subsystems_on",
    "frattini_decompose",
    "is_detecting_subgroup",
    "is_invariant",
    "local_subsystem",
    "normality_status",
    "o_p",
    "o_p_by_central_series",
    "o_p_prime_subsystem",
    "quotient",
    "quotient_with_data",
    "strongly_closed_subgroups",
    "verify_theorem_a",
]
