"""Fusion systems on finite p-groups, stored as closed categories.

A :class:`FusionSystem` on a p-group P keeps, for every pair of
subgroups Q, R of P, the isomorphisms Q -> R belonging to the system;
general morphisms Q -> R are recovered as isomorphisms onto their images
followed by inclusions, which is exactly the divisibility axiom.  The
stored data is a nested dict ``isos[qkey][rkey] = (mapping, ...)`` where
``qkey``/``rkey`` are sorted element-index tuples and each ``mapping``
is aligned to the sorted domain.  All stored families contain the inner
fusion of P and are closed under composition, restriction, and
inversion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import (
    FusionkitError,
    NotAPGroup,
    NotASubgroup,
    NotASubgroupOfP,
    NotStronglyClosed,
    NotSylow,
    PrimeMismatch,
    SeedNotInjective,
)
from .groups import (
    Group,
    QuotientData,
    Subgroup,
    _as_subgroup,
    all_subgroups,
    centralizer,
    coset_quotient,
    direct_product_groups,
    ensure_prime,
    is_sylow_in,
    normalizer,
    sylow,
)
from .morphisms import AutGroup, Morphism, _iso_search
from .perms import format_cycles, parse_cycles, perm_from_cycles

Key = tuple[int, ...]
IsoTable = dict[Key, dict[Key, tuple[Key, ...]]]


@dataclass(frozen=True)
class ConjClass:
    """An F-conjugacy class of subgroups, with its least member first."""

    members: tuple[Subgroup, ...]

    @property
    def representative(self) -> Subgroup:
        return self.members[0]

    def __iter__(self) -> Iterator[Subgroup]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)


class FusionSystem:
    """A fusion system on the p-group ``P`` inside the ambient ``group``."""

    __slots__ = ("group", "P", "p", "name", "_isos", "_cache")

    def __init__(
        self,
        group: Group,
        P: Subgroup,
        p: int,
        isos: IsoTable,
        *,
        name: str | None = None,
    ):
        ensure_prime(p)
        if P.group != group:
            raise NotASubgroup("P must be a subgroup of the ambient group")
        if not P.is_p_group(p):
            raise NotAPGroup(f"P has order {len(P)}, not a power of {p}")
        self.group = group
        self.P = P
        self.p = p
        self.name = name
        self._isos = isos
        self._cache: dict = {}

    # -- basic queries -------------------------------------------------

    def subgroups(self) -> tuple[Subgroup, ...]:
        if "subgroups" not in self._cache:
            self._cache["subgroups"] = all_subgroups(self.P)
        return self._cache["subgroups"]

    def subgroup(self, key: Key) -> Subgroup:
        return Subgroup(self.group, key, check=False)

    def require_in_p(self, Q: Subgroup) -> Subgroup:
        if Q.group != self.group or not Q <= self.P:
            raise NotASubgroupOfP("not a subgroup of P", witness=Q)
        return Q

    def iso_mappings(self, Q: Subgroup, R: Subgroup) -> tuple[Key, ...]:
        return self._isos.get(Q.key, {}).get(R.key, ())

    def isos_between(self, Q: Subgroup, R: Subgroup) -> tuple[Morphism, ...]:
        self.require_in_p(Q)
        self.require_in_p(R)
        return tuple(Morphism(Q, R, m) for m in self.iso_mappings(Q, R))

    def isos_from(self, Q: Subgroup) -> Iterator[Morphism]:
        self.require_in_p(Q)
        for rkey, mappings in sorted(self._isos.get(Q.key, {}).items()):
            R = self.subgroup(rkey)
            for m in mappings:
                yield Morphism(Q, R, m)

    def all_isos(self) -> Iterator[Morphism]:
        for qkey in sorted(self._isos):
            yield from self.isos_from(self.subgroup(qkey))

    def iso_count(self) -> int:
        return sum(len(ms) for targets in self._isos.values() for ms in targets.values())

    def contains_morphism(self, phi: Morphism) -> bool:
        """Whether phi (as an injective map into P) belongs to the system."""
        if phi.domain.group != self.group or not phi.domain <= self.P:
            return False
        if not self.P.contains_all(phi.mapping):
            return False
        rkey = tuple(sorted(phi.mapping))
        return phi.mapping in self._isos.get(phi.domain.key, {}).get(rkey, ())

    def hom_set(self, Q: Subgroup, R: Subgroup) -> tuple[Morphism, ...]:
        """All morphisms Q -> R, i.e. isomorphisms onto images inside R."""
        self.require_in_p(Q)
        self.require_in_p(R)
        out = []
        for rkey, mappings in sorted(self._isos.get(Q.key, {}).items()):
            if R.contains_all(rkey):
                out.extend(Morphism(Q, R, m) for m in mappings)
        return tuple(sorted(out))

    def aut_group(self, Q: Subgroup) -> AutGroup:
        self.require_in_p(Q)
        cached = self._cache.setdefault("auts", {})
        if Q.key not in cached:
            morphs = [Morphism(Q, Q, m) for m in self.iso_mappings(Q, Q)]
            cached[Q.key] = AutGroup(Q, morphs)
        return cached[Q.key]

    def aut_mappings_of_conjugation(self, Q: Subgroup, source: Subgroup) -> set[Key]:
        """Mappings of the automorphisms of Q induced by N_source(Q)."""
        G = self.group
        out = set()
        for g in normalizer(source, Q).elements:
            out.add(tuple(G.conj(x, g) for x in Q.elements))
        return out

    def aut_p_subgroup(self, Q: Subgroup) -> Subgroup:
        """Aut_P(Q) inside aut_group(Q)'s permutation incarnation."""
        A = self.aut_group(Q)
        mappings = self.aut_mappings_of_conjugation(Q, self.P)
        return A.subgroup_from(Morphism(Q, Q, m) for m in mappings)

    def n_p(self, Q: Subgroup) -> Subgroup:
        return normalizer(self.P, Q)

    def c_p(self, Q: Subgroup) -> Subgroup:
        return centralizer(self.P, Q)

    # -- conjugacy classes ----------------------------------------------

    def conjugacy_class(self, Q: Subgroup) -> ConjClass:
        self.require_in_p(Q)
        for cls in self.classes():
            if Q.key in {S.key for S in cls.members}:
                return cls
        raise NotASubgroupOfP("not a subgroup of P", witness=Q)

    def classes(self) -> tuple[ConjClass, ...]:
        if "classes" not in self._cache:
            seen: set[Key] = set()
            out = []
            for Q in self.subgroups():
                if Q.key in seen:
                    continue
                member_keys = sorted(self._isos.get(Q.key, {Q.key: ()}).keys())
                members = tuple(self.subgroup(k) for k in member_keys)
                seen.update(member_keys)
                out.append(ConjClass(members))
            self._cache["classes"] = tuple(out)
        return self._cache["classes"]

    def is_fully_normalized(self, Q: Subgroup) -> bool:
        n = len(self.n_p(Q))
        return all(len(self.n_p(R)) <= n for R in self.conjugacy_class(Q))

    def is_fully_centralized(self, Q: Subgroup) -> bool:
        c = len(self.c_p(Q))
        return all(len(self.c_p(R)) <= c for R in self.conjugacy_class(Q))

    # -- comparisons -----------------------------------------------------

    def to_key(self) -> tuple:
        if "key" not in self._cache:
            body = tuple(
                (qk, tuple((rk, self._isos[qk][rk]) for rk in sorted(self._isos[qk])))
                for qk in sorted(self._isos)
            )
            self._cache["key"] = (self.p, self.P.key, body)
        return self._cache["key"]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FusionSystem):
            return NotImplemented
        return self.group == other.group and self.to_key() == other.to_key()

    def __hash__(self) -> int:
        return hash(self.to_key())

    def __repr__(self) -> str:
        label = self.name or f"on {self.P.describe()}"
        return f"FusionSystem({label}, p={self.p}, |P|={len(self.P)}, isos={self.iso_count()})"

    # -- serialization ----------------------------------------------------

    def serialize(self) -> dict:
        data = {
            "schema": "fusionkit-fusion/1",
            "p": self.p,
            "degree": self.group.degree,
            "group": [format_cycles(pm) for pm in self.group.perms],
            "P": list(self.P.elements),
            "isos": [
                [list(qk), [list(m) for rk in sorted(self._isos[qk]) for m in self._isos[qk][rk]]]
                for qk in sorted(self._isos)
            ],
        }
        if self.name:
            data["name"] = self.name
        return data


def deserialize(data: dict) -> FusionSystem:
    if data.get("schema") != "fusionkit-fusion/1":
        raise FusionkitError(f"unknown fusion schema: {data.get('schema')!r}")
    degree = data["degree"]
    perms = [perm_from_cycles(parse_cycles(s), degree) for s in data["group"]]
    group = Group(perms, degree, closed=True)
    if len(group) != len(perms):
        raise FusionkitError("serialized group element list is not closed")
    P = Subgroup(group, data["P"])
    isos: dict[Key, dict[Key, set[Key]]] = {}
    for qlist, mappings in data["isos"]:
        qkey = tuple(qlist)
        bucket = isos.setdefault(qkey, {})
        for m in mappings:
            mapping = tuple(m)
            rkey = tuple(sorted(mapping))
            bucket.setdefault(rkey, set()).add(mapping)
    return FusionSystem(group, P, data["p"], _freeze(isos), name=data.get("name"))


def _freeze(isos: dict[Key, dict[Key, set[Key]]]) -> IsoTable:
    return {
        qk: {rk: tuple(sorted(ms)) for rk, ms in sorted(targets.items())}
        for qk, targets in isos.items()
    }


# -- constructors -----------------------------------------------------------


def fusion_of_group(
    container: Group | Subgroup,
    p: int,
    P: Subgroup | None = None,
    *,
    name: str | None = None,
) -> FusionSystem:
    """F_P(G): all conjugation maps between subgroups of P by elements of G."""
    ensure_prime(p)
    amb = _as_subgroup(container)
    G = amb.group
    if P is None:
        P = sylow(amb, p)
    else:
        if P.group != G or not P <= amb:
            raise NotASubgroup("P must be a subgroup of the acting group")
        if not is_sylow_in(P, amb, p):
            raise NotSylow(
                f"|P| = {len(P)} is not the {p}-part of |G| = {len(amb)}", witness=P
            )
    isos: dict[Key, dict[Key, set[Key]]] = {}
    pset = P._set
    for Q in all_subgroups(P):
        bucket = isos.setdefault(Q.key, {})
        for g in amb.elements:
            mapping = tuple(G.conj(x, g) for x in Q.elements)
            if not pset.issuperset(mapping):
                continue
            bucket.setdefault(tuple(sorted(mapping)), set()).add(mapping)
    return FusionSystem(G, P, p, _freeze(isos), name=name)


def inner_fusion(
    container: Group | Subgroup, p: int | None = None, *, name: str | None = None
) -> FusionSystem:
    """F_P(P) for a p-group P; the prime is inferred when |P| > 1."""
    P = _as_subgroup(container)
    if p is None:
        if P.is_trivial():
            raise NotAPGroup("the trivial group needs an explicit prime")
        p = min(d for d in range(2, len(P) + 1) if len(P) % d == 0)
    if not P.is_p_group(p):
        raise NotAPGroup(f"order {len(P)} is not a power of {p}", witness=P)
    return fusion_of_group(P, p, P, name=name)


def _aligned_restriction(mapping: Key, qkey: Key, skey: Key) -> Key:
    pos = {e: i for i, e in enumerate(qkey)}
    return tuple(mapping[pos[x]] for x in skey)


def _inverse_mapping(qkey: Key, mapping: Key) -> Key:
    return tuple(d for _, d in sorted(zip(mapping, qkey)))


def generated_fusion(
    P: Subgroup,
    p: int,
    seeds: Iterable[Morphism],
    *,
    name: str | None = None,
) -> FusionSystem:
    """The smallest fusion system on P containing the seed morphisms."""
    ensure_prime(p)
    G = P.group
    if not P.is_p_group(p):
        raise NotAPGroup(f"order {len(P)} is not a power of {p}", witness=P)
    inner = fusion_of_group(P, p, P)
    isos: dict[Key, dict[Key, set[Key]]] = {
        qk: {rk: set(ms) for rk, ms in targets.items()}
        for qk, targets in inner._isos.items()
    }
    contained: dict[Key, list[Key]] = {}
    for Q in all_subgroups(P):
        qset = Q._set
        contained[Q.key] = [S.key for S in all_subgroups(P) if qset.issuperset(S.elements)]

    into: dict[Key, list[tuple[Key, Key]]] = {qk: [] for qk in isos}
    outof: dict[Key, list[tuple[Key, Key]]] = {qk: [] for qk in isos}
    queue: list[tuple[Key, Key]] = []

    def push(qkey: Key, mapping: Key) -> None:
        rkey = tuple(sorted(mapping))
        bucket = isos[qkey].setdefault(rkey, set())
        if mapping in bucket:
            return
        bucket.add(mapping)
        queue.append((qkey, mapping))

    for qk, targets in isos.items():
        for ms in targets.values():
            queue.extend((qk, m) for m in ms)

    pset = P._set
    for phi in seeds:
        if phi.domain.group != G or not phi.domain <= P:
            raise NotASubgroupOfP("seed domain not inside P", witness=phi)
        if not pset.issuperset(phi.mapping):
            raise NotASubgroupOfP("seed image not inside P", witness=phi)
        if len(set(phi.mapping)) != len(phi.mapping):
            raise SeedNotInjective("seed is not injective", witness=phi)
        Morphism.build(phi.domain, P, phi.mapping)
        push(phi.domain.key, phi.mapping)

    while queue:
        qkey, mapping = queue.pop()
        rkey = tuple(sorted(mapping))
        # index first so self-composable maps pair with themselves below
        into[rkey].append((qkey, mapping))
        outof[qkey].append((rkey, mapping))
        push(rkey, _inverse_mapping(qkey, mapping))
        for skey in contained[qkey]:
            if skey != qkey:
                push(skey, _aligned_restriction(mapping, qkey, skey))
        rpos = {e: i for i, e in enumerate(rkey)}
        for _, m2 in list(outof[rkey]):
            push(qkey, tuple(m2[rpos[v]] for v in mapping))
        qpos = {e: i for i, e in enumerate(qkey)}
        for skey, m0 in list(into[qkey]):
            push(skey, tuple(mapping[qpos[v]] for v in m0))

    return FusionSystem(G, P, p, _freeze(isos), name=name)


def is_subsystem(E: FusionSystem, F: FusionSystem) -> bool:
    """Whether every morphism of E is a morphism of F (and E.P ≤ F.P)."""
    if E.group != F.group or E.p != F.p or not E.P <= F.P:
        return False
    for qk, targets in E._isos.items():
        ftargets = F._isos.get(qk, {})
        for rk, ms in targets.items():
            if not set(ms) <= set(ftargets.get(rk, ())):
                return False
    return True


def full_subcategory(F: FusionSystem, S: Subgroup, *, name: str | None = None) -> FusionSystem:
    """The subsystem on S whose morphisms are all F-morphisms between
    subgroups of S."""
    F.require_in_p(S)
    sset = S._set
    isos: dict[Key, dict[Key, set[Key]]] = {}
    for qk, targets in F._isos.items():
        if not sset.issuperset(qk):
            continue
        kept = {rk: set(ms) for rk, ms in targets.items() if sset.issuperset(rk)}
        if kept:
            isos[qk] = kept
    return FusionSystem(F.group, S, F.p, _freeze(isos), name=name)


def intersect_raw(E1: FusionSystem, E2: FusionSystem, *, name: str | None = None) -> FusionSystem:
    """The categorical intersection E1 ∩ E2 on E1.P ∩ E2.P.

    Always a fusion system (closure properties survive intersection),
    but not saturated in general.
    """
    if E1.group != E2.group:
        raise FusionkitError("intersection needs a common ambient group")
    if E1.p != E2.p:
        raise PrimeMismatch(f"{E1.p} != {E2.p}")
    T = E1.P.meet(E2.P)
    tset = T._set
    isos: dict[Key, dict[Key, set[Key]]] = {}
    for qk, targets in E1._isos.items():
        if not tset.issuperset(qk):
            continue
        other = E2._isos.get(qk, {})
        kept: dict[Key, set[Key]] = {}
        for rk, ms in targets.items():
            if not tset.issuperset(rk):
                continue
            common = set(ms) & set(other.get(rk, ()))
            if common:
                kept[rk] = common
        if kept:
            isos[qk] = kept
    return FusionSystem(E1.group, T, E1.p, _freeze(isos), name=name)


def direct_product(F1: FusionSystem, F2: FusionSystem, *, name: str | None = None) -> FusionSystem:
    """F1 x F2 on P1 x P2: restrictions of coordinatewise pairs of morphisms."""
    if F1.p != F2.p:
        raise PrimeMismatch(f"{F1.p} != {F2.p}")
    dpd = direct_product_groups(F1.group, F2.group)
    P = dpd.embed_pair(F1.P, F2.P)
    isos: dict[Key, dict[Key, set[Key]]] = {}
    for Q in all_subgroups(P):
        split = [dpd.split_index(x) for x in Q.elements]
        q1 = Subgroup(F1.group, {a for a, _ in split}, check=False)
        q2 = Subgroup(F2.group, {b for _, b in split}, check=False)
        pos1 = {e: i for i, e in enumerate(q1.elements)}
        pos2 = {e: i for i, e in enumerate(q2.elements)}
        bucket = isos.setdefault(Q.key, {})
        for m1 in (m for ms in F1._isos.get(q1.key, {}).values() for m in ms):
            for m2 in (m for ms in F2._isos.get(q2.key, {}).values() for m in ms):
                mapping = tuple(
                    dpd.pair_index(m1[pos1[a]], m2[pos2[b]]) for a, b in split
                )
                bucket.setdefault(tuple(sorted(mapping)), set()).add(mapping)
    return FusionSystem(dpd.group, P, F1.p, _freeze(isos), name=name)


def internal_direct_product(
    F: FusionSystem, P1: Subgroup, P2: Subgroup, *, name: str | None = None
) -> FusionSystem:
    """E1 x E2 inside F's ambient group, where P = P1 x P2 internally and
    E_i is the full subcategory of F on P_i."""
    F.require_in_p(P1)
    F.require_in_p(P2)
    G = F.group
    if not P1.meet(P2).is_trivial():
        raise FusionkitError("factors intersect nontrivially")
    P = P1.join(P2)
    if len(P) != len(P1) * len(P2):
        raise FusionkitError("factors do not span an internal direct product")
    comp1: dict[int, int] = {}
    comp2: dict[int, int] = {}
    for a in P1.elements:
        for b in P2.elements:
            x = G.mul(a, b)
            if G.mul(b, a) != x:
                raise FusionkitError("factors do not commute elementwise")
            comp1[x] = a
            comp2[x] = b
    E1 = full_subcategory(F, P1)
    E2 = full_subcategory(F, P2)
    isos: dict[Key, dict[Key, set[Key]]] = {}
    for Q in all_subgroups(P):
        q1 = Subgroup(G, {comp1[x] for x in Q.elements}, check=False)
        q2 = Subgroup(G, {comp2[x] for x in Q.elements}, check=False)
        pos1 = {e: i for i, e in enumerate(q1.elements)}
        pos2 = {e: i for i, e in enumerate(q2.elements)}
        bucket = isos.setdefault(Q.key, {})
        for m1 in (m for ms in E1._isos.get(q1.key, {}).values() for m in ms):
            for m2 in (m for ms in E2._isos.get(q2.key, {}).values() for m in ms):
                mapping = tuple(
                    G.mul(m1[pos1[comp1[x]]], m2[pos2[comp2[x]]]) for x in Q.elements
                )
                bucket.setdefault(tuple(sorted(mapping)), set()).add(mapping)
    return FusionSystem(G, P, F.p, _freeze(isos), name=name)


# -- strongly closed subgroups and quotients ---------------------------------


def is_strongly_closed(F: FusionSystem, T: Subgroup) -> bool:
    """Whether no element of T is moved outside T by any F-morphism."""
    F.require_in_p(T)
    tset = T._set
    for qk, targets in F._isos.items():
        hits = [i for i, x in enumerate(qk) if x in tset]
        if not hits:
            continue
        for ms in targets.values():
            for m in ms:
                if any(m[i] not in tset for i in hits):
                    return False
    return True


def quotient_with_data(
    F: FusionSystem, T: Subgroup, *, name: str | None = None
) -> tuple[FusionSystem, QuotientData]:
    """F/T on P/T for strongly F-closed T, with the coset transport data."""
    if not is_strongly_closed(F, T):
        raise NotStronglyClosed("quotient kernel must be strongly closed", witness=T)
    qd = coset_quotient(F.P, T)
    Fbar = _induced_quotient_system(F, qd, F.P, name=name)
    return Fbar, qd


def quotient(F: FusionSystem, T: Subgroup, *, name: str | None = None) -> FusionSystem:
    return quotient_with_data(F, T, name=name)[0]


def push_through_quotient(
    E: FusionSystem, qd: QuotientData, *, name: str | None = None
) -> FusionSystem:
    """The system induced by E on E.P/T inside an existing quotient of P.

    T = qd.kernel must lie inside E.P and be strongly E-closed, so that
    every E-morphism between subgroups containing T induces a map of
    cosets.
    """
    T = qd.kernel
    if not T <= E.P:
        raise NotASubgroup("quotient kernel must lie inside the subsystem", witness=T)
    if not is_strongly_closed(E, T):
        raise NotStronglyClosed("kernel is not strongly closed in the subsystem", witness=T)
    return _induced_quotient_system(E, qd, E.P, name=name)


def _induced_quotient_system(
    E: FusionSystem, qd: QuotientData, carrier: Subgroup, *, name: str | None
) -> FusionSystem:
    T = qd.kernel
    tset = T._set
    project = qd.project
    isos: dict[Key, dict[Key, set[Key]]] = {}
    for qk, targets in E._isos.items():
        if not tset.issubset(qk):
            continue
        qbar = sorted({project[x] for x in qk})
        qbar_key = tuple(qbar)
        bucket = isos.setdefault(qbar_key, {})
        for ms in targets.values():
            for m in ms:
                bar: dict[int, int] = {}
                for x, y in zip(qk, m):
                    c, cy = project[x], project[y]
                    if bar.setdefault(c, cy) != cy:
                        raise NotStronglyClosed(
                            "morphism does not respect the kernel cosets", witness=m
                        )
                mapping = tuple(bar[c] for c in qbar)
                bucket.setdefault(tuple(sorted(mapping)), set()).add(mapping)
    Pbar = qd.push(carrier)
    return FusionSystem(qd.group, Pbar, E.p, _freeze(isos), name=name)


# -- transport and isomorphism ------------------------------------------------


def transport_fusion(F: FusionSystem, chi: Morphism, *, name: str | None = None) -> FusionSystem:
    """The image system of F along a group isomorphism chi: P -> P'."""
    if chi.domain != F.P or not chi.is_iso:
        raise FusionkitError("transport needs an isomorphism defined on P")
    image_group = chi.codomain.group
    pos = {e: i for i, e in enumerate(F.P.elements)}

    def send(x: int) -> int:
        return chi.mapping[pos[x]]

    back = {send(x): x for x in F.P.elements}
    isos: dict[Key, dict[Key, set[Key]]] = {}
    for qk, targets in F._isos.items():
        qimg = sorted(send(x) for x in qk)
        qpos = {e: i for i, e in enumerate(qk)}
        bucket = isos.setdefault(tuple(qimg), {})
        for ms in targets.values():
            for m in ms:
                mapping = tuple(send(m[qpos[back[x]]]) for x in qimg)
                bucket.setdefault(tuple(sorted(mapping)), set()).add(mapping)
    return FusionSystem(image_group, chi.codomain, F.p, _freeze(isos), name=name)


def find_fusion_isomorphism(F1: FusionSystem, F2: FusionSystem) -> Morphism | None:
    """A group isomorphism P1 -> P2 carrying F1's morphisms onto F2's."""
    if F1.p != F2.p or len(F1.P) != len(F2.P) or F1.iso_count() != F2.iso_count():
        return None
    for raw in _iso_search(F1.P, F2.P, find_all=True):
        chi = Morphism(F1.P, F2.P, tuple(raw[x] for x in F1.P.elements))
        if transport_fusion(F1, chi) == F2:
            return chi
    return None


def is_isomorphic_fusion(F1: FusionSystem, F2: FusionSystem) -> bool:
    return find_fusion_isomorphism(F1, F2) is not None


# -- validation ----------------------------------------------------------------


def validate_fusion(F: FusionSystem) -> None:
    """Check every stored axiom; raises FusionkitError on the first failure."""
    G = F.group
    subgroup_keys = {S.key for S in F.subgroups()}
    pset = F.P._set
    if set(F._isos) != subgroup_keys:
        raise FusionkitError("iso table does not range over the subgroups of P")
    for qk, targets in F._isos.items():
        Q = F.subgroup(qk)
        for rk, ms in targets.items():
            if rk not in subgroup_keys:
                raise FusionkitError("target is not a subgroup of P", witness=rk)
            for m in ms:
                if tuple(sorted(m)) != rk:
                    raise FusionkitError("mapping does not match its target key", witness=m)
                Morphism.build(Q, F.subgroup(rk), m)
    for Q in F.subgroups():
        for g in F.P.elements:
            mapping = tuple(G.conj(x, g) for x in Q.elements)
            if not pset.issuperset(mapping):
                raise FusionkitError("P is not closed under its own conjugation")
            if mapping not in F._isos[Q.key].get(tuple(sorted(mapping)), ()):
                raise FusionkitError("inner fusion missing", witness=(Q.key, mapping))
    for qk, targets in F._isos.items():
        for rk, ms in targets.items():
            for m in ms:
                inv = _inverse_mapping(qk, m)
                if inv not in F._isos[rk].get(qk, ()):
                    raise FusionkitError("not closed under inversion", witness=m)
                qset = set(qk)
                for sk in F._isos:
                    if sk != qk and qset.issuperset(sk):
                        sub = _aligned_restriction(m, qk, sk)
                        if sub not in F._isos[sk].get(tuple(sorted(sub)), ()):
                            raise FusionkitError("not closed under restriction", witness=(m, sk))
                rpos = {e: i for i, e in enumerate(rk)}
                for ms2 in F._isos[rk].values():
                    for m2 in ms2:
                        comp = tuple(m2[rpos[v]] for v in m)
                        if comp not in F._isos[qk].get(tuple(sorted(comp)), ()):
                            raise FusionkitError("not closed under composition", witness=(m, m2))
