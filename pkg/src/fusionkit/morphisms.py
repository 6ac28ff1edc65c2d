"""Injective homomorphisms between subgroups, and automorphism groups.

A :class:`Morphism` maps a domain subgroup into a codomain subgroup,
possibly of a different ambient group.  ``mapping[i]`` is the image (as
a codomain-ambient element index) of ``domain.elements[i]``.  Maps
compose left to right: ``phi.then(psi)`` applies ``phi`` first.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    FusionkitError,
    ImageNotContained,
    NotAnIsomorphism,
    NotASubgroup,
    OrderBoundExceeded,
)
from .groups import DEFAULT_ORDER_BOUND, Group, Subgroup, _as_subgroup, is_p_power


class Morphism:
    """An injective homomorphism between subgroups."""

    __slots__ = ("domain", "codomain", "mapping", "_pos")

    def __init__(self, domain: Subgroup, codomain: Subgroup, mapping: Sequence[int]):
        self.domain = domain
        self.codomain = codomain
        self.mapping: tuple[int, ...] = tuple(mapping)
        self._pos = None

    @classmethod
    def build(
        cls, domain: Subgroup, codomain: Subgroup, mapping: Sequence[int]
    ) -> "Morphism":
        """Validated constructor: checks injectivity, containment, and
        the homomorphism law."""
        m = cls(domain, codomain, mapping)
        if len(m.mapping) != len(domain.elements):
            raise FusionkitError("mapping length does not match the domain")
        if len(set(m.mapping)) != len(m.mapping):
            raise NotAnIsomorphism("mapping is not injective", witness=m)
        if not codomain.contains_all(m.mapping):
            raise ImageNotContained("image is not inside the codomain", witness=m)
        Gd, Gc = domain.group, codomain.group
        els = domain.elements
        for i, a in enumerate(els):
            for j, b in enumerate(els):
                prod = Gd.mul(a, b)
                if m.apply(prod) != Gc.mul(m.mapping[i], m.mapping[j]):
                    raise FusionkitError("not a homomorphism", witness=(a, b))
        return m

    @classmethod
    def identity(cls, Q: Subgroup) -> "Morphism":
        return cls(Q, Q, Q.elements)

    @classmethod
    def inclusion(cls, Q: Subgroup, R: Subgroup) -> "Morphism":
        if not Q <= R:
            raise ImageNotContained("domain not inside codomain", witness=Q)
        return cls(Q, R, Q.elements)

    def _positions(self) -> dict[int, int]:
        if self._pos is None:
            self._pos = {e: i for i, e in enumerate(self.domain.elements)}
        return self._pos

    def apply(self, idx: int) -> int:
        return self.mapping[self._positions()[idx]]

    @property
    def key(self) -> tuple:
        return (self.domain.elements, self.codomain.elements, self.mapping)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.key == other.key
            and self.domain.group == other.domain.group
            and self.codomain.group == other.codomain.group
        )

    def __hash__(self) -> int:
        return hash(self.key)

    def __lt__(self, other: "Morphism") -> bool:
        return self.key < other.key

    def __repr__(self) -> str:
        gens = self.domain.generators()
        G, H = self.domain.group, self.codomain.group
        if not gens:
            return "Morphism(1 -> 1)"
        parts = ", ".join(
            f"{G.element_str(g)}->{H.element_str(self.apply(g))}" for g in gens
        )
        return f"Morphism({parts})"

    def image(self) -> Subgroup:
        return Subgroup(self.codomain.group, self.mapping, check=False)

    @property
    def is_iso(self) -> bool:
        return len(self.mapping) == len(self.codomain.elements)

    def is_identity(self) -> bool:
        return (
            self.domain.elements == self.mapping
            and self.domain.group == self.codomain.group
        )

    def then(self, other: "Morphism") -> "Morphism":
        """Left-to-right composition: apply self, then ``other``."""
        if not other.domain.contains_all(self.mapping):
            raise ImageNotContained("composition undefined", witness=(self, other))
        return Morphism(
            self.domain, other.codomain, tuple(other.apply(x) for x in self.mapping)
        )

    def restrict(self, S: Subgroup) -> "Morphism":
        if not S <= self.domain:
            raise NotASubgroup("restriction target not inside domain", witness=S)
        return Morphism(S, self.codomain, tuple(self.apply(x) for x in S.elements))

    def onto_image(self) -> "Morphism":
        return Morphism(self.domain, self.image(), self.mapping)

    def with_codomain(self, R: Subgroup) -> "Morphism":
        if not R.contains_all(self.mapping):
            raise ImageNotContained("image not inside new codomain", witness=self)
        return Morphism(self.domain, R, self.mapping)

    def inverse(self) -> "Morphism":
        if not self.is_iso:
            raise NotAnIsomorphism("not onto the codomain", witness=self)
        pairs = sorted(zip(self.mapping, self.domain.elements))
        return Morphism(self.codomain, self.domain, tuple(d for _, d in pairs))

    def conjugated_by(self, chi: "Morphism") -> "Morphism":
        """Transport an automorphism along an isomorphism: chi^-1 . self . chi.

        ``self`` must map a subgroup of ``chi.domain`` to itself; the result
        is the corresponding automorphism of the image under ``chi``.
        """
        if not chi.domain.contains_all(self.domain.elements):
            raise NotASubgroup("automorphism domain not inside the transport map")
        restricted = chi.restrict(self.domain)
        target = restricted.image()
        inv = restricted.onto_image().inverse()
        return Morphism(
            target,
            target,
            tuple(restricted.apply(self.apply(inv.apply(x))) for x in target.elements),
        )

    def fixes(self, S: Subgroup) -> bool:
        """Whether S is inside the domain and mapped onto itself."""
        return self.domain.contains_all(S.elements) and {
            self.apply(x) for x in S.elements
        } == set(S.elements)

    def fixes_pointwise(self, S: Subgroup) -> bool:
        return self.domain.contains_all(S.elements) and all(
            self.apply(x) == x for x in S.elements
        )


def conj_morphism(container: Group | Subgroup, g: int, Q: Subgroup, R: Subgroup) -> Morphism:
    """The conjugation map c_g: Q -> R, x |-> g^-1 x g."""
    amb = _as_subgroup(container)
    G = amb.group
    if not (Q <= amb and R <= amb) or Q.group != G or R.group != G:
        raise NotASubgroup("subgroups must live in the given group")
    if g not in amb:
        raise NotASubgroup("conjugating element not in the group", witness=g)
    mapping = tuple(G.conj(x, g) for x in Q.elements)
    if not R.contains_all(mapping):
        raise ImageNotContained("conjugate does not land in the codomain", witness=g)
    return Morphism(Q, R, mapping)


# --- automorphism groups ---------------------------------------------------


class AutGroup:
    """A group of automorphisms of a fixed subgroup.

    The automorphisms act on the positions of the subject's sorted
    element list, giving a faithful permutation group; all subgroup
    machinery (Sylow, normality, generated subgroups) is reused through
    that incarnation.
    """

    __slots__ = ("subject", "morphisms", "group", "_index")

    def __init__(self, subject: Subgroup, morphisms: Iterable[Morphism]):
        morphs = sorted(set(morphisms))
        els = subject.elements
        pos = {e: i for i, e in enumerate(els)}
        perms = []
        for m in morphs:
            if m.domain != subject or not m.is_iso or m.codomain != subject:
                raise NotAnIsomorphism("not an automorphism of the subject", witness=m)
            perms.append(tuple(pos[x] for x in m.mapping))
        group = Group(perms, len(els), closed=True)
        if len(group) != len(morphs):
            raise FusionkitError("automorphism set is not closed under composition")
        by_perm = dict(zip(perms, morphs))
        self.subject = subject
        self.morphisms = tuple(by_perm[p] for p in group.perms)
        self.group = group
        self._index = {m.mapping: i for i, m in enumerate(self.morphisms)}

    @property
    def order(self) -> int:
        return len(self.morphisms)

    def __len__(self) -> int:
        return len(self.morphisms)

    def __iter__(self):
        return iter(self.morphisms)

    def morphism_of(self, idx: int) -> Morphism:
        return self.morphisms[idx]

    def index_of(self, m: Morphism) -> int:
        try:
            return self._index[m.mapping]
        except KeyError:
            raise NotASubgroup("automorphism not in this group", witness=m) from None

    def subgroup_from(self, morphisms: Iterable[Morphism]) -> Subgroup:
        return Subgroup(self.group, (self.index_of(m) for m in morphisms), check=False)

    def morphisms_of(self, sub: Subgroup) -> tuple[Morphism, ...]:
        if sub.group != self.group:
            raise NotASubgroup("subgroup of a different automorphism group")
        return tuple(self.morphisms[i] for i in sub.elements)

    def generated_by(self, morphisms: Iterable[Morphism]) -> tuple[Morphism, ...]:
        sub = self.group.generated_subgroup([self.index_of(m) for m in morphisms])
        return self.morphisms_of(sub)

    def o_p_prime_part(self, p: int) -> tuple[Morphism, ...]:
        """O^{p'}: the subgroup generated by all p-power order elements."""
        gens = [
            i
            for i in range(len(self.group))
            if is_p_power(self.group.element_order(i), p)
        ]
        return self.morphisms_of(self.group.generated_subgroup(gens))


def _hom_extend(
    Gd: Group,
    Gc: Group,
    mapping: dict[int, int],
    used: set[int],
    g: int,
    h: int,
) -> tuple[dict[int, int], set[int]] | None:
    """Extend a partial injective homomorphism by g -> h, closing under
    products; returns None when inconsistent."""
    new_map = dict(mapping)
    new_used = set(used)
    queue = [(g, h)]
    while queue:
        a, b = queue.pop()
        if a in new_map:
            if new_map[a] != b:
                return None
            continue
        if b in new_used:
            return None
        new_map[a] = b
        new_used.add(b)
        for x, y in list(new_map.items()):
            queue.append((Gd.mul(x, a), Gc.mul(y, b)))
            queue.append((Gd.mul(a, x), Gc.mul(b, y)))
    return new_map, new_used


def _iso_search(
    A: Subgroup,
    B: Subgroup,
    *,
    find_all: bool,
    limit: int | None = None,
) -> list[dict[int, int]]:
    """All (or the first) isomorphisms A -> B by generator-image search."""
    Gd, Gc = A.group, B.group
    if len(A.elements) != len(B.elements):
        return []
    orders_a = sorted(Gd.element_order(x) for x in A.elements)
    orders_b = sorted(Gc.element_order(x) for x in B.elements)
    if orders_a != orders_b:
        return []
    gens = A.generators()
    by_order: dict[int, list[int]] = {}
    for x in B.elements:
        by_order.setdefault(Gc.element_order(x), []).append(x)
    results: list[dict[int, int]] = []

    def rec(i: int, mapping: dict[int, int], used: set[int]):
        if i == len(gens):
            if len(mapping) == len(A.elements):
                results.append(mapping)
                if limit is not None and len(results) > limit:
                    raise OrderBoundExceeded(
                        f"automorphism count exceeds bound {limit}"
                    )
            return
        g = gens[i]
        for h in by_order.get(Gd.element_order(g), []):
            ext = _hom_extend(Gd, Gc, mapping, used, g, h)
            if ext is None:
                continue
            rec(i + 1, ext[0], ext[1])
            if results and not find_all:
                return

    base = {A.group.identity: B.group.identity}
    rec(0, base, {B.group.identity})
    return results


def automorphisms(container: Group | Subgroup, *, order_bound: int | None = DEFAULT_ORDER_BOUND) -> AutGroup:
    """The full automorphism group of a subgroup or group.

    Raises OrderBoundExceeded when more than ``order_bound`` automorphisms
    exist; the search aborts early in that case.
    """
    Q = _as_subgroup(container)
    maps = _iso_search(Q, Q, find_all=True, limit=order_bound)
    morphs = [
        Morphism(Q, Q, tuple(m[x] for x in Q.elements)) for m in maps
    ]
    return AutGroup(Q, morphs)


def find_isomorphism(A: Group | Subgroup, B: Group | Subgroup) -> Morphism | None:
    """Some isomorphism A -> B, or None; deterministic first hit."""
    SA, SB = _as_subgroup(A), _as_subgroup(B)
    maps = _iso_search(SA, SB, find_all=False)
    if not maps:
        return None
    m = maps[0]
    return Morphism(SA, SB, tuple(m[x] for x in SA.elements))


def is_isomorphic(A: Group | Subgroup, B: Group | Subgroup) -> bool:
    return find_isomorphism(A, B) is not None
