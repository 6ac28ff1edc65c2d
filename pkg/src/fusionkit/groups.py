"""Finite permutation groups with eager multiplication tables.

A :class:`Group` stores its full, lexicographically sorted element list
and an order-by-order multiplication table, so group arithmetic is
integer indexing.  Subgroups are immutable sorted index tuples inside a
fixed ambient group, which makes them usable as dictionary keys and
keeps every enumeration in the library deterministic.
"""

from __future__ import annotations

import math
from typing import Iterable, Iterator, Sequence

from .errors import (
    FusionkitError,
    NotASubgroup,
    OrderBoundExceeded,
    PreconditionFailed,
)
from .perms import Perm, format_cycles, identity_perm, perm_inv, perm_mul

#: Default cap on ambient group orders; constructions refuse to go past it.
DEFAULT_ORDER_BOUND = 400


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in range(2, int(math.isqrt(n)) + 1):
        if n % d == 0:
            return False
    return True


def ensure_prime(p: int) -> int:
    if not is_prime(p):
        raise PreconditionFailed(f"{p} is not a prime")
    return p


def p_part(n: int, p: int) -> int:
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


class Group:
    """A finite permutation group, closed and fully tabulated."""

    __slots__ = (
        "degree",
        "perms",
        "name",
        "generator_indices",
        "_lookup",
        "_mul",
        "_inv",
        "_orders",
        "identity",
        "_full",
        "_all_subgroups",
    )

    def __init__(
        self,
        perms: Iterable[Perm],
        degree: int,
        *,
        name: str | None = None,
        generators: Sequence[Perm] | None = None,
        order_bound: int | None = None,
        closed: bool = False,
    ):
        seed = [tuple(p) for p in perms]
        for p in seed:
            if len(p) != degree or sorted(p) != list(range(degree)):
                raise FusionkitError(f"not a permutation of degree {degree}: {p}")
        if closed:
            elements = set(seed)
            elements.add(identity_perm(degree))
        else:
            elements = _closure(seed, degree, order_bound)
        if order_bound is not None and len(elements) > order_bound:
            raise OrderBoundExceeded(
                f"group order {len(elements)} exceeds bound {order_bound}"
            )
        self.degree = degree
        self.perms: tuple[Perm, ...] = tuple(sorted(elements))
        self.name = name
        self._lookup = {p: i for i, p in enumerate(self.perms)}
        n = len(self.perms)
        mul = []
        for a in self.perms:
            lookup = self._lookup
            mul.append(tuple(lookup[perm_mul(a, b)] for b in self.perms))
        self._mul: tuple[tuple[int, ...], ...] = tuple(mul)
        self._inv = tuple(self._lookup[perm_inv(p)] for p in self.perms)
        self.identity = self._lookup[identity_perm(degree)]
        if self.identity != 0:
            raise FusionkitError("identity is not the least permutation")
        orders = []
        for i in range(n):
            k, cur = 1, i
            while cur != self.identity:
                cur = self._mul[cur][i]
                k += 1
            orders.append(k)
        self._orders = tuple(orders)
        if generators is not None:
            self.generator_indices = tuple(self._lookup[tuple(g)] for g in generators)
        else:
            self.generator_indices = None
        self._full = None
        self._all_subgroups = None

    @property
    def order(self) -> int:
        return len(self.perms)

    def __len__(self) -> int:
        return len(self.perms)

    def mul(self, i: int, j: int) -> int:
        return self._mul[i][j]

    def inv(self, i: int) -> int:
        return self._inv[i]

    def conj(self, x: int, g: int) -> int:
        """x^g = g^-1 x g."""
        return self._mul[self._mul[self._inv[g]][x]][g]

    def comm(self, x: int, y: int) -> int:
        """[x, y] = x^-1 y^-1 x y."""
        return self._mul[self._mul[self._mul[self._inv[x]][self._inv[y]]][x]][y]

    def element_order(self, i: int) -> int:
        return self._orders[i]

    def perm_of(self, i: int) -> Perm:
        return self.perms[i]

    def index_of(self, perm: Perm) -> int:
        return self._lookup[tuple(perm)]

    def element_str(self, i: int) -> str:
        return format_cycles(self.perms[i])

    @property
    def full_subgroup(self) -> "Subgroup":
        if self._full is None:
            self._full = Subgroup(self, range(len(self.perms)), check=False)
        return self._full

    @property
    def trivial_subgroup(self) -> "Subgroup":
        return Subgroup(self, (self.identity,), check=False)

    def subgroup(self, indices: Iterable[int]) -> "Subgroup":
        return Subgroup(self, indices)

    def generated_subgroup(self, indices: Iterable[int]) -> "Subgroup":
        return subgroup_closure(self, indices)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Group):
            return NotImplemented
        return self.degree == other.degree and self.perms == other.perms

    def __hash__(self) -> int:
        return hash((self.degree, len(self.perms), self.perms[min(1, len(self.perms) - 1)]))

    def __repr__(self) -> str:
        label = self.name or f"degree {self.degree}"
        return f"Group({label}, order {len(self.perms)})"


def _closure(seed: list[Perm], degree: int, order_bound: int | None) -> set[Perm]:
    elements = {identity_perm(degree)}
    frontier = [p for p in seed if p not in elements]
    elements.update(frontier)
    gens = list(dict.fromkeys(seed))
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in elements:
                    elements.add(y)
                    new.append(y)
                    if order_bound is not None and len(elements) > order_bound:
                        raise OrderBoundExceeded(
                            f"group order exceeds bound {order_bound}"
                        )
        frontier = new
    return elements


class Subgroup:
    """A subgroup of a fixed ambient :class:`Group`, as sorted element indices."""

    __slots__ = ("group", "elements", "_set", "_gens")

    def __init__(self, group: Group, elements: Iterable[int], *, check: bool = True):
        self.group = group
        self.elements: tuple[int, ...] = tuple(sorted(set(elements)))
        self._set = frozenset(self.elements)
        self._gens = None
        if check:
            if not self.elements:
                raise NotASubgroup("a subgroup cannot be empty")
            if group.identity not in self._set:
                raise NotASubgroup("missing identity", witness=self.elements)
            for a in self.elements:
                if group.inv(a) not in self._set:
                    raise NotASubgroup("not closed under inversion", witness=a)
                row = group._mul[a]
                for b in self.elements:
                    if row[b] not in self._set:
                        raise NotASubgroup("not closed under products", witness=(a, b))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def key(self) -> tuple[int, ...]:
        return self.elements

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, idx: int) -> bool:
        return idx in self._set

    def contains_all(self, indices: Iterable[int]) -> bool:
        return self._set.issuperset(indices)

    def __le__(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def __lt__(self, other: "Subgroup") -> bool:
        return self._set < other._set

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.elements == other.elements and (
            self.group is other.group or self.group == other.group
        )

    def __hash__(self) -> int:
        return hash((self.group.degree, len(self.group), self.elements))

    def __repr__(self) -> str:
        return f"Subgroup(order {len(self.elements)} of {self.group!r})"

    def describe(self) -> str:
        gens = self.generators()
        if not gens:
            return "1"
        return "<" + ", ".join(self.group.element_str(g) for g in gens) + ">"

    def generators(self) -> tuple[int, ...]:
        """A short deterministic generating sequence (greedy by element order)."""
        if self._gens is None:
            G = self.group
            chosen: list[int] = []
            span = {G.identity}
            for x in sorted(self.elements, key=lambda i: (-G.element_order(i), i)):
                if x not in span:
                    chosen.append(x)
                    span = set(subgroup_closure(G, chosen).elements)
                    if len(span) == len(self.elements):
                        break
            self._gens = tuple(chosen)
        return self._gens

    def conjugate(self, g: int) -> "Subgroup":
        G = self.group
        return Subgroup(G, (G.conj(x, g) for x in self.elements), check=False)

    def is_normal_in(self, other: "Subgroup") -> bool:
        if not self <= other:
            return False
        G = self.group
        for g in other.elements:
            for x in self.elements:
                if G.conj(x, g) not in self._set:
                    return False
        return True

    def join(self, other: "Subgroup") -> "Subgroup":
        return subgroup_closure(self.group, self.elements + other.elements)

    def meet(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.group, self._set & other._set, check=False)

    def is_abelian(self) -> bool:
        G = self.group
        els = self.elements
        return all(G.mul(a, b) == G.mul(b, a) for i, a in enumerate(els) for b in els[i + 1 :])

    def is_p_group(self, p: int) -> bool:
        return is_p_power(len(self.elements), p)

    def is_trivial(self) -> bool:
        return len(self.elements) == 1

    def centre(self) -> "Subgroup":
        return centralizer(self, self)

    def derived_subgroup(self) -> "Subgroup":
        G = self.group
        comms = {
            G.comm(a, b) for a in self.elements for b in self.elements
        }
        return subgroup_closure(G, comms)


def subgroup_closure(group: Group, indices: Iterable[int]) -> Subgroup:
    span = {group.identity}
    frontier = [i for i in indices if i not in span]
    span.update(frontier)
    gens = list(dict.fromkeys(indices))
    while frontier:
        new = []
        for x in frontier:
            row = group._mul[x]
            for g in gens:
                y = row[g]
                if y not in span:
                    span.add(y)
                    new.append(y)
        frontier = new
    # closure under inversion follows from finiteness
    return Subgroup(group, span, check=False)


def _as_subgroup(container: Group | Subgroup) -> Subgroup:
    return container.full_subgroup if isinstance(container, Group) else container


def _require_subgroup_of(H: Subgroup, container: Group | Subgroup) -> Subgroup:
    amb = _as_subgroup(container)
    if H.group is not amb.group and H.group != amb.group:
        raise NotASubgroup("different ambient groups", witness=H)
    if not H <= amb:
        raise NotASubgroup("not contained in the given group", witness=H)
    return amb


def all_subgroups(container: Group | Subgroup) -> tuple[Subgroup, ...]:
    """Every subgroup of ``container``, sorted by (order, element key).

    Built as the join closure of the cyclic subgroups: each subgroup is a
    join of cyclics, and adding one cyclic at a time stays inside the
    subgroup lattice, so the fixpoint reaches everything.
    """
    amb = _as_subgroup(container)
    if isinstance(container, Group):
        if container._all_subgroups is not None:
            return container._all_subgroups
    G = amb.group
    cyclics: dict[tuple[int, ...], Subgroup] = {}
    for x in amb.elements:
        c = subgroup_closure(G, (x,))
        cyclics.setdefault(c.key, c)
    triv = Subgroup(G, (G.identity,), check=False)
    found: dict[tuple[int, ...], Subgroup] = {triv.key: triv}
    for c in cyclics.values():
        found.setdefault(c.key, c)
    frontier = list(found.values())
    cyc_list = list(cyclics.values())
    while frontier:
        new: list[Subgroup] = []
        for H in frontier:
            for c in cyc_list:
                if c <= H:
                    continue
                J = H.join(c)
                if J.key not in found:
                    found[J.key] = J
                    new.append(J)
        frontier = new
    out = tuple(sorted(found.values(), key=lambda s: (len(s.elements), s.elements)))
    if isinstance(container, Group):
        container._all_subgroups = out
    return out


def subgroups_between(lo: Subgroup, hi: Subgroup) -> tuple[Subgroup, ...]:
    return tuple(S for S in all_subgroups(hi) if lo <= S)


def normalizer(container: Group | Subgroup, H: Subgroup) -> Subgroup:
    amb = _require_subgroup_of(H, container)
    G = H.group
    members = []
    for g in amb.elements:
        if all(G.conj(x, g) in H for x in H.elements):
            members.append(g)
    return Subgroup(G, members, check=False)


def centralizer(container: Group | Subgroup, H: Subgroup) -> Subgroup:
    amb = _require_subgroup_of(H, container)
    G = H.group
    members = []
    for g in amb.elements:
        row = G._mul[g]
        if all(row[x] == G._mul[x][g] for x in H.elements):
            members.append(g)
    return Subgroup(G, members, check=False)


def group_centre(container: Group | Subgroup) -> Subgroup:
    amb = _as_subgroup(container)
    return centralizer(amb, amb)


def sylow(container: Group | Subgroup, p: int) -> Subgroup:
    """The first Sylow p-subgroup found by deterministic normalizer growth."""
    ensure_prime(p)
    amb = _as_subgroup(container)
    G = amb.group
    target = p_part(len(amb.elements), p)
    S = Subgroup(G, (G.identity,), check=False)
    while len(S.elements) < target:
        N = normalizer(amb, S)
        grown = False
        for g in N.elements:
            if g in S:
                continue
            power = g
            for _ in range(p - 1):
                power = G.mul(power, g)
            if power in S:
                S = subgroup_closure(G, S.elements + (g,))
                grown = True
                break
        if not grown:
            raise FusionkitError("Sylow growth stalled", witness=S)
    return S


def is_sylow_in(Q: Subgroup, container: Group | Subgroup, p: int) -> bool:
    amb = _as_subgroup(container)
    return Q.is_p_group(p) and len(Q.elements) == p_part(len(amb.elements), p)


def commutator_subgroup(container: Group | Subgroup, A: Subgroup, B: Subgroup) -> Subgroup:
    G = _as_subgroup(container).group
    comms = {G.comm(a, b) for a in A.elements for b in B.elements}
    return subgroup_closure(G, comms)


def upper_central_series_group(container: Group | Subgroup) -> list[Subgroup]:
    """[Z_1, Z_2, ...] up to stabilization, computed inside ``container``."""
    amb = _as_subgroup(container)
    G = amb.group
    series: list[Subgroup] = []
    current = {G.identity}
    while True:
        nxt = [
            g
            for g in amb.elements
            if all(G.comm(g, x) in current for x in amb.elements)
        ]
        term = Subgroup(G, nxt, check=False)
        if series and term.elements == series[-1].elements:
            break
        series.append(term)
        if len(term.elements) == len(amb.elements):
            break
        current = term._set
    return series


def o_p_prime_group(container: Group | Subgroup, p: int) -> Subgroup:
    """The largest normal subgroup of order coprime to p."""
    ensure_prime(p)
    amb = _as_subgroup(container)
    G = amb.group
    result = Subgroup(G, (G.identity,), check=False)
    for H in all_subgroups(amb):
        if len(H.elements) % p != 0 and H.is_normal_in(amb):
            result = result.join(H)
    if math.gcd(len(result.elements), p) != 1:
        raise FusionkitError("join of normal p'-subgroups is not a p'-group")
    return result


# --- quotients -------------------------------------------------------------


class QuotientData:
    """A quotient H/N realized on the right cosets of N, with transport maps."""

    __slots__ = ("container", "kernel", "group", "project", "section")

    def __init__(self, container: Group | Subgroup, kernel: Subgroup):
        amb = _require_subgroup_of(kernel, container)
        if not kernel.is_normal_in(amb):
            raise NotASubgroup("kernel is not normal", witness=kernel)
        G = amb.group
        coset_of: dict[int, int] = {}
        reps: list[int] = []
        for h in amb.elements:
            if h in coset_of:
                continue
            label = len(reps)
            reps.append(h)
            for n in kernel.elements:
                coset_of[G.mul(n, h)] = label
        degree = len(reps)
        perm_of_elt: dict[int, Perm] = {}
        for h in amb.elements:
            perm_of_elt[h] = tuple(coset_of[G.mul(reps[c], h)] for c in range(degree))
        quotient = Group(set(perm_of_elt.values()), degree, closed=True)
        self.container = amb
        self.kernel = kernel
        self.group = quotient
        self.project = {h: quotient.index_of(perm_of_elt[h]) for h in amb.elements}
        section = {}
        for h in amb.elements:
            q = self.project[h]
            if q not in section:
                section[q] = h
        self.section = tuple(section[q] for q in range(len(quotient)))

    def push(self, H: Subgroup) -> Subgroup:
        return Subgroup(self.group, {self.project[h] for h in H.elements}, check=False)

    def preimage(self, Hbar: Subgroup) -> Subgroup:
        return Subgroup(
            self.container.group,
            (h for h in self.container.elements if self.project[h] in Hbar),
            check=False,
        )


def coset_quotient(container: Group | Subgroup, kernel: Subgroup) -> QuotientData:
    return QuotientData(container, kernel)


# --- direct products -------------------------------------------------------


class DirectProductData:
    """G1 x G2 on the disjoint union of the two point sets."""

    __slots__ = ("left", "right", "group")

    def __init__(self, left: Group, right: Group, *, name: str | None = None):
        d1, d2 = left.degree, right.degree
        perms = set()
        for p1 in left.perms:
            for p2 in right.perms:
                perms.add(p1 + tuple(x + d1 for x in p2))
        self.left = left
        self.right = right
        self.group = Group(perms, d1 + d2, closed=True, name=name)

    def pair_index(self, i1: int, i2: int) -> int:
        d1 = self.left.degree
        p = self.left.perms[i1] + tuple(x + d1 for x in self.right.perms[i2])
        return self.group.index_of(p)

    def split_index(self, idx: int) -> tuple[int, int]:
        d1 = self.left.degree
        p = self.group.perms[idx]
        return (
            self.left.index_of(p[:d1]),
            self.right.index_of(tuple(x - d1 for x in p[d1:])),
        )

    def embed_pair(self, A: Subgroup, B: Subgroup) -> Subgroup:
        members = {
            self.pair_index(a, b) for a in A.elements for b in B.elements
        }
        return Subgroup(self.group, members, check=False)


def direct_product_groups(left: Group, right: Group, *, name: str | None = None) -> DirectProductData:
    return DirectProductData(left, right, name=name)
