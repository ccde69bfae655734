"""Finite group kernel: Cayley tables, element arithmetic, subgroup machinery.

Groups are stored as full multiplication tables (orders stay <= 144 in every
catalog use, so the O(n^2) table and O(n^3) validation sweeps are cheap).
The identity is always normalized to index 0, and all values are immutable
after construction.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .errors import (
    ClosureCapExceeded,
    EmptyGeneratorList,
    InvalidParameter,
    NotAHomomorphism,
    NotAnAutomorphism,
    OrderCapExceeded,
    ParseError,
    PNotPrime,
)

ISO_ORDER_CAP = 144


def _phi(k: int) -> int:
    """Euler totient."""
    return sum(1 for i in range(1, k + 1) if gcd(i, k) == 1)


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[i, j]`` is the index of the product i*j; element 0 is the
    identity.  Instances are immutable and hashable by identity of content.
    """

    __slots__ = ("table", "label", "_orders", "_inv", "_hash")

    def __init__(self, table: np.ndarray, label: str = "", validate: bool = True):
        table = np.asarray(table, dtype=np.int32)
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise InvalidParameter("multiplication table must be square")
        table.setflags(write=False)
        self.table = table
        self.label = label
        self._orders = None
        self._inv = None
        self._hash = None
        if validate:
            self.validate()

    # -- basic protocol ------------------------------------------------------

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteGroup) and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.table.tobytes())
        return self._hash

    def __repr__(self) -> str:
        name = self.label or "?"
        return f"FiniteGroup(order={self.order}, label={name!r})"

    # -- arithmetic ----------------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        if self._inv is None:
            n = self.order
            inv = np.empty(n, dtype=np.int32)
            rows, cols = np.nonzero(self.table == 0)
            inv[rows] = cols
            inv.setflags(write=False)
            self._inv = inv
        return int(self._inv[x])

    def power(self, x: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(x), -k)
        acc = 0
        for _ in range(k):
            acc = int(self.table[acc, x])
        return acc

    def conjugate(self, x: int, g: int) -> int:
        """g^-1 x g."""
        return self.mul(self.mul(self.inv(g), x), g)

    # -- validation ----------------------------------------------------------

    def validate(self) -> None:
        """Full closure/identity/inverse/associativity sweep."""
        t = self.table
        n = self.order
        if t.min() < 0 or t.max() >= n:
            raise InvalidParameter("table entries out of range")
        if not (np.array_equal(t[0], np.arange(n)) and np.array_equal(t[:, 0], np.arange(n))):
            raise InvalidParameter("element 0 is not a two-sided identity")
        if not np.array_equal(np.sort(np.where(t == 0)[1]), np.arange(n)):
            raise InvalidParameter("some element has no two-sided inverse")
        # (i*j)*k == i*(j*k) for all triples, vectorized
        if not np.array_equal(t[t], t[:, t]):
            raise InvalidParameter("table is not associative")

    # -- element orders ------------------------------------------------------

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            n = self.order
            orders = np.empty(n, dtype=np.int32)
            t = self.table
            for x in range(n):
                acc, k = int(t[0, x]), 1
                while acc != 0:
                    acc = int(t[acc, x])
                    k += 1
                orders[x] = k
            orders.setflags(write=False)
            self._orders = orders
        return self._orders


@dataclass(frozen=True)
class ElementSet:
    """A sorted, duplicate-free subset of a group's element indices."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        mem = tuple(sorted(set(self.members)))
        if mem and not (0 <= mem[0] and mem[-1] < self.parent.order):
            raise InvalidParameter("element index out of range")
        object.__setattr__(self, "members", mem)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, x: int) -> bool:
        return x in set(self.members)

    def __iter__(self):
        return iter(self.members)

    def intersection(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.parent, tuple(set(self.members) & set(other.members)))

    def union(self, other: "ElementSet") -> "ElementSet":
        return ElementSet(self.parent, tuple(set(self.members) | set(other.members)))

    def is_subgroup(self) -> bool:
        g = self.parent
        mem = set(self.members)
        if 0 not in mem:
            return False
        return all(g.mul(x, y) in mem for x in mem for y in mem)


@dataclass(frozen=True)
class OrderSpectrum:
    """The set of element orders of a group, with multiplicities."""

    orders: tuple[int, ...]
    multiplicities: dict[int, int] = field(compare=False)

    @property
    def as_set(self) -> frozenset[int]:
        return frozenset(self.orders)

    def subset_of(self, allowed) -> bool:
        return self.as_set <= frozenset(allowed)

    def __contains__(self, k: int) -> bool:
        return k in self.as_set

    def max(self) -> int:
        return max(self.orders)

    def __str__(self) -> str:
        return "{" + ",".join(str(k) for k in self.orders) + "}"


@dataclass(frozen=True)
class SixProfile:
    """Cyclic order-6 subgroup data: the pivot of the genus classification.

    ``pairwise_intersections`` lists |H_i ∩ H_j| over all unordered pairs of
    distinct cyclic subgroups of order 6; ``common_intersection_order`` is
    |∩_i H_i| (0 when there are none).
    """

    count: int
    pairwise_intersections: tuple[int, ...]
    common_intersection_order: int

    def __post_init__(self):
        expect = self.count * (self.count - 1) // 2
        assert len(self.pairwise_intersections) == expect
        assert all(k in (1, 2, 3) for k in self.pairwise_intersections)

    def all_pairwise_three(self) -> bool:
        return self.count >= 2 and all(k == 3 for k in self.pairwise_intersections)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def from_table(table, label: str = "") -> FiniteGroup:
    """Build a group from a raw table, normalizing the identity to index 0."""
    t = np.asarray(table, dtype=np.int32)
    n = t.shape[0]
    ident = None
    for e in range(n):
        if np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n)):
            ident = e
            break
    if ident is None:
        raise InvalidParameter("table has no two-sided identity")
    if ident != 0:
        perm = np.arange(n)
        perm[[0, ident]] = perm[[ident, 0]]  # relabel by the transposition (0 e)
        new = np.empty_like(t)
        for i in range(n):
            for j in range(n):
                new[perm[i], perm[j]] = perm[t[i, j]]
        t = new
    return FiniteGroup(t, label=label)


def _compose(p, q):
    """Permutation composition: (p*q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(q)))


def from_generators(degree: int, generators, label: str = "",
                    cap: int = 10000) -> FiniteGroup:
    """Closure of a set of permutations of {0..degree-1} under composition."""
    gens = [tuple(g) for g in generators]
    if not gens:
        raise EmptyGeneratorList("need at least one generator")
    for g in gens:
        if sorted(g) != list(range(degree)):
            raise InvalidParameter(f"not a permutation of degree {degree}: {g}")
    ident = tuple(range(degree))
    elems = [ident]
    index = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = _compose(p, g)
                if q not in index:
                    if len(elems) >= cap:
                        raise ClosureCapExceeded(f"closure exceeded {cap} elements")
                    index[q] = len(elems)
                    elems.append(q)
                    nxt.append(q)
        frontier = nxt
    n = len(elems)
    table = np.empty((n, n), dtype=np.int32)
    for i, p in enumerate(elems):
        for j, q in enumerate(elems):
            table[i, j] = index[_compose(p, q)]
    return FiniteGroup(table, label=label)


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise InvalidParameter("cyclic: n >= 1")
    idx = np.arange(n)
    return FiniteGroup((idx[:, None] + idx[None, :]) % n, label=f"Z{n}")


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group D_order (parameter is the group order 2n, n >= 1)."""
    if order < 2 or order % 2:
        raise InvalidParameter("dihedral: order must be even and >= 2")
    n = order // 2
    # element (i, j) = r^i s^j  ->  index 2*i + j;  s r^i = r^-i s
    def idx(i, j):
        return 2 * (i % n) + j

    table = np.empty((order, order), dtype=np.int32)
    for i1 in range(n):
        for j1 in range(2):
            for i2 in range(n):
                for j2 in range(2):
                    if j1 == 0:
                        table[idx(i1, j1), idx(i2, j2)] = idx(i1 + i2, j2)
                    else:
                        table[idx(i1, j1), idx(i2, j2)] = idx(i1 - i2, 1 - j2)
    return FiniteGroup(table, label=f"D{order}")


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: <a,b : a^2n = 1, b^2 = a^n, b a b^-1 = a^-1>.

    dicyclic(2) is the quaternion group Q8 and dicyclic(4) is Q16.
    """
    if n < 2:
        raise InvalidParameter("dicyclic: n >= 2")
    m = 2 * n
    def idx(i, j):
        return 2 * (i % m) + j

    order = 4 * n
    table = np.empty((order, order), dtype=np.int32)
    for i1 in range(m):
        for j1 in range(2):
            for i2 in range(m):
                for j2 in range(2):
                    if j1 == 0:
                        table[idx(i1, j1), idx(i2, j2)] = idx(i1 + i2, j2)
                    else:
                        # a^i1 b a^i2 b^j2 = a^(i1-i2) b^(1+j2); b^2 = a^n
                        if j2 == 0:
                            table[idx(i1, j1), idx(i2, j2)] = idx(i1 - i2, 1)
                        else:
                            table[idx(i1, j1), idx(i2, j2)] = idx(i1 - i2 + n, 0)
    label = "Q8" if n == 2 else ("Q16" if n == 4 else f"Dic{n}")
    return FiniteGroup(table, label=label)


def semidihedral(order: int) -> FiniteGroup:
    """Semidihedral group of order 2^k (k >= 4): <a,b : a^m=b^2=1, bab=a^(m/2-1)>."""
    if order < 16 or order & (order - 1):
        raise InvalidParameter("semidihedral: order must be a power of two >= 16")
    m = order // 2
    r = m // 2 - 1  # b a b = a^r
    def idx(i, j):
        return 2 * (i % m) + j

    table = np.empty((order, order), dtype=np.int32)
    for i1 in range(m):
        for j1 in range(2):
            for i2 in range(m):
                for j2 in range(2):
                    if j1 == 0:
                        table[idx(i1, j1), idx(i2, j2)] = idx(i1 + i2, j2)
                    else:
                        table[idx(i1, j1), idx(i2, j2)] = idx(i1 + r * i2, 1 - j2)
    return FiniteGroup(table, label=f"QD{order}")


def symmetric(n: int) -> FiniteGroup:
    if not 1 <= n <= 7:
        raise InvalidParameter("symmetric: 1 <= n <= 7")
    perms = [tuple(range(n))] + [p for p in itertools.permutations(range(n))
                                 if p != tuple(range(n))]
    index = {p: i for i, p in enumerate(perms)}
    m = len(perms)
    table = np.empty((m, m), dtype=np.int32)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[_compose(p, q)]
    return FiniteGroup(table, label=f"S{n}")


def _perm_sign(p) -> int:
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if not seen[i]:
            j, ln = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j]
                ln += 1
            if ln % 2 == 0:
                sign = -sign
    return sign


def alternating(n: int) -> FiniteGroup:
    if not 1 <= n <= 7:
        raise InvalidParameter("alternating: 1 <= n <= 7")
    perms = [p for p in itertools.permutations(range(n)) if _perm_sign(p) == 1]
    perms.sort(key=lambda p: p != tuple(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    m = len(perms)
    table = np.empty((m, m), dtype=np.int32)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = index[_compose(p, q)]
    return FiniteGroup(table, label=f"A{n}")


_FAMILIES = {
    "cyclic": cyclic,
    "dihedral": dihedral,
    "dicyclic": dicyclic,
    "semidihedral": semidihedral,
    "symmetric": symmetric,
    "alternating": alternating,
}


def named(family: str, parameter: int) -> FiniteGroup:
    """Construct a member of a named family; see the family constructors."""
    try:
        ctor = _FAMILIES[family]
    except KeyError:
        raise InvalidParameter(f"unknown family {family!r}") from None
    return ctor(parameter)


def direct_product(a: FiniteGroup, b: FiniteGroup, label: str = "") -> FiniteGroup:
    na, nb = a.order, b.order
    ta = np.asarray(a.table)
    tb = np.asarray(b.table)
    # index (x, y) -> x*nb + y; componentwise product
    table = (ta[:, None, :, None] * nb + tb[None, :, None, :]).reshape(na * nb, na * nb)
    lbl = label or (f"{a.label}x{b.label}" if a.label and b.label else "")
    return FiniteGroup(table, label=lbl)


def _check_automorphism(n_grp: FiniteGroup, amap) -> None:
    n = n_grp.order
    img = [amap[x] for x in range(n)]
    if sorted(img) != list(range(n)):
        raise NotAnAutomorphism("action map is not a bijection")
    for x in range(n):
        for y in range(n):
            if amap[n_grp.mul(x, y)] != n_grp.mul(amap[x], amap[y]):
                raise NotAnAutomorphism("action map is not a homomorphism")


def semidirect_product(n_grp: FiniteGroup, h_grp: FiniteGroup, action,
                       label: str = "") -> FiniteGroup:
    """N ⋊ H with multiplication (n1,h1)(n2,h2) = (n1 * h1.n2, h1 h2).

    ``action`` maps each element of H to an automorphism of N (a sequence of
    element images).  Both the automorphism property of every action(h) and
    the homomorphism property of the action itself are verified.
    """
    nn, nh = n_grp.order, h_grp.order
    maps = {h: tuple(action[h]) for h in range(nh)}
    for h in range(nh):
        _check_automorphism(n_grp, maps[h])
    if maps[0] != tuple(range(nn)):
        raise NotAHomomorphism("action of the identity is not the identity map")
    for h1 in range(nh):
        for h2 in range(nh):
            composed = tuple(maps[h1][maps[h2][x]] for x in range(nn))
            if maps[h_grp.mul(h1, h2)] != composed:
                raise NotAHomomorphism("action is not a homomorphism H -> Aut(N)")
    order = nn * nh
    table = np.empty((order, order), dtype=np.int32)
    for x1 in range(nn):
        for h1 in range(nh):
            m1 = maps[h1]
            row = x1 * nh + h1
            for x2 in range(nn):
                for h2 in range(nh):
                    table[row, x2 * nh + h2] = n_grp.mul(x1, m1[x2]) * nh + h_grp.mul(h1, h2)
    return FiniteGroup(table, label=label)


def trivial_action(n_grp: FiniteGroup, h_grp: FiniteGroup):
    ident = tuple(range(n_grp.order))
    return {h: ident for h in range(h_grp.order)}


def cyclic_action(n_grp: FiniteGroup, h_grp: FiniteGroup, gen_auto):
    """Action of a cyclic H: its max-order element acts by ``gen_auto``.

    Raises NotAHomomorphism when gen_auto's order does not divide |H| as
    required for a well-defined action of the chosen generator.
    """
    orders = h_grp.element_orders()
    gen = int(np.argmax(orders))
    if orders[gen] != h_grp.order:
        raise NotAHomomorphism("H is not cyclic")
    gen_auto = tuple(gen_auto)
    maps = {}
    h, m = 0, tuple(range(n_grp.order))
    for _ in range(h_grp.order):
        maps[h] = m
        h = h_grp.mul(h, gen)
        m = tuple(gen_auto[x] for x in m)
    if m != tuple(range(n_grp.order)):
        raise NotAHomomorphism("generator automorphism order does not divide |H|")
    return maps


# ---------------------------------------------------------------------------
# element / subgroup queries
# ---------------------------------------------------------------------------

def element_order(g: FiniteGroup, x: int) -> int:
    return int(g.element_orders()[x])


def order_spectrum(g: FiniteGroup) -> OrderSpectrum:
    orders = g.element_orders()
    vals, counts = np.unique(orders, return_counts=True)
    return OrderSpectrum(tuple(int(v) for v in vals),
                         {int(v): int(c) for v, c in zip(vals, counts)})


def cyclic_subgroup(g: FiniteGroup, x: int) -> ElementSet:
    members = [0]
    acc = x
    while acc != 0:
        members.append(acc)
        acc = g.mul(acc, x)
    return ElementSet(g, tuple(members))


def cyclic_subgroups_of_order(g: FiniteGroup, k: int) -> list[ElementSet]:
    if k < 1:
        raise InvalidParameter("k >= 1")
    orders = g.element_orders()
    seen: set[tuple[int, ...]] = set()
    out = []
    for x in np.nonzero(orders == k)[0]:
        sub = cyclic_subgroup(g, int(x))
        if sub.members not in seen:
            seen.add(sub.members)
            out.append(sub)
    return out


def six_profile(g: FiniteGroup) -> SixProfile:
    subs = cyclic_subgroups_of_order(g, 6)
    inters = tuple(len(set(a.members) & set(b.members))
                   for a, b in itertools.combinations(subs, 2))
    if subs:
        common = set(subs[0].members)
        for s in subs[1:]:
            common &= set(s.members)
        common_order = len(common)
    else:
        common_order = 0
    return SixProfile(len(subs), inters, common_order)


def centralizer(g: FiniteGroup, x: int) -> ElementSet:
    t = g.table
    members = np.nonzero(t[:, x] == t[x, :])[0]
    return ElementSet(g, tuple(int(v) for v in members))


def center(g: FiniteGroup) -> ElementSet:
    t = g.table
    members = np.nonzero((t == t.T).all(axis=1))[0]
    return ElementSet(g, tuple(int(v) for v in members))


def conjugacy_class(g: FiniteGroup, x: int) -> ElementSet:
    return ElementSet(g, tuple({g.conjugate(x, h) for h in range(g.order)}))


def count_involutions(g: FiniteGroup) -> int:
    return int(np.count_nonzero(g.element_orders() == 2))


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p ** 0.5) + 1))


def count_subgroups_of_prime_order(g: FiniteGroup, p: int) -> int:
    if not _is_prime(p):
        raise PNotPrime(f"{p} is not prime")
    n_elems = int(np.count_nonzero(g.element_orders() == p))
    return n_elems // (p - 1)


def generating_set(g: FiniteGroup) -> list[int]:
    """A small generating set, grown greedily by closure size."""
    gens: list[int] = []
    closure = {0}
    while len(closure) < g.order:
        best, best_closure = None, None
        for x in range(g.order):
            if x in closure:
                continue
            c = _closure_of(g, gens + [x])
            if best_closure is None or len(c) > len(best_closure):
                best, best_closure = x, c
                if len(c) == g.order:
                    break
        gens.append(best)
        closure = best_closure
    return gens


def _closure_of(g: FiniteGroup, elems) -> set[int]:
    closure = {0}
    frontier = [0]
    elems = list(elems)
    while frontier:
        nxt = []
        for x in frontier:
            for s in elems:
                y = g.mul(x, s)
                if y not in closure:
                    closure.add(y)
                    nxt.append(y)
        frontier = nxt
    return closure


def subgroup_generated_by(g: FiniteGroup, elems) -> ElementSet:
    return ElementSet(g, tuple(_closure_of(g, elems)))


# ---------------------------------------------------------------------------
# isomorphism testing and automorphism enumeration
# ---------------------------------------------------------------------------

def _fingerprints(g: FiniteGroup) -> list[tuple[int, int]]:
    """(element order, conjugacy class size) per element."""
    orders = g.element_orders()
    out = [None] * g.order
    for x in range(g.order):
        if out[x] is None:
            cls = conjugacy_class(g, x)
            fp = None
            for y in cls:
                fp = (int(orders[y]), len(cls))
                out[y] = fp
    return out


def _word_tree(g: FiniteGroup, gens):
    """BFS expressions of every element as (parent, generator-slot) pairs."""
    parent = {0: None}
    order = [0]
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for slot, s in enumerate(gens):
                y = g.mul(x, s)
                if y not in parent:
                    parent[y] = (x, slot)
                    order.append(y)
                    nxt.append(y)
        frontier = nxt
    return parent, order


def _extend_map(a: FiniteGroup, b: FiniteGroup, gens, images, parent, bfs_order):
    """Extend generator images along the word tree; None if not injective."""
    phi = {0: 0}
    for x in bfs_order[1:]:
        px, slot = parent[x]
        phi[x] = b.mul(phi[px], images[slot])
    if len(set(phi.values())) != a.order:
        return None
    return phi


def _is_hom(a: FiniteGroup, b: FiniteGroup, phi) -> bool:
    ta, tb = a.table, b.table
    p = np.empty(a.order, dtype=np.int32)
    for x, y in phi.items():
        p[x] = y
    return np.array_equal(p[ta], tb[np.ix_(p, p)])


def _iso_search(a: FiniteGroup, b: FiniteGroup, find_all: bool):
    """Backtracking generator-image search; yields isomorphism maps."""
    gens = generating_set(a)
    fpa = _fingerprints(a)
    fpb = _fingerprints(b)
    cand = []
    for s in gens:
        cs = [y for y in range(b.order) if fpb[y] == fpa[s]]
        if not cs:
            return
        cand.append(cs)
    parent, bfs_order = _word_tree(a, gens)
    found = []
    for images in itertools.product(*cand):
        phi = _extend_map(a, b, gens, images, parent, bfs_order)
        if phi is None:
            continue
        if _is_hom(a, b, phi):
            yield phi
            if not find_all:
                return


def is_isomorphic(a: FiniteGroup, b: FiniteGroup) -> bool:
    if a.order != b.order:
        return False
    if a.order > ISO_ORDER_CAP or b.order > ISO_ORDER_CAP:
        raise OrderCapExceeded(f"isomorphism search capped at order {ISO_ORDER_CAP}")
    if sorted(_fingerprints(a)) != sorted(_fingerprints(b)):
        return False
    return next(_iso_search(a, b, find_all=False), None) is not None


def automorphisms(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All automorphisms of g, as element-image tuples."""
    if g.order > ISO_ORDER_CAP:
        raise OrderCapExceeded(f"automorphism search capped at order {ISO_ORDER_CAP}")
    out = []
    for phi in _iso_search(g, g, find_all=True):
        out.append(tuple(phi[x] for x in range(g.order)))
    return out


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def to_text(g: FiniteGroup) -> str:
    lines = [f"group {g.order} {g.label}".rstrip()]
    for row in g.table:
        lines.append(" ".join(str(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def from_text(text: str) -> FiniteGroup:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("group "):
        raise ParseError("expected 'group <order> [label]' header")
    head = lines[0].split(maxsplit=2)
    try:
        n = int(head[1])
    except (IndexError, ValueError):
        raise ParseError("bad group header") from None
    label = head[2] if len(head) > 2 else ""
    if len(lines) != n + 1:
        raise ParseError(f"expected {n} table rows, got {len(lines) - 1}")
    try:
        table = [[int(v) for v in ln.split()] for ln in lines[1:]]
    except ValueError:
        raise ParseError("non-integer table entry") from None
    if any(len(row) != n for row in table):
        raise ParseError("ragged table row")
    return from_table(table, label=label)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> tuple[int, ...]:
    """Parse cycle notation like ``(0 1 2)(3 4)`` into a permutation tuple."""
    text = text.strip()
    if text in ("()", "e", "id", ""):
        return tuple(range(degree))
    if not re.fullmatch(r"(\([^()]*\))+", text):
        raise ParseError(f"bad cycle notation: {text!r}")
    perm = list(range(degree))
    for body in _CYCLE_RE.findall(text):
        pts = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
        if len(set(pts)) != len(pts) or any(not 0 <= p < degree for p in pts):
            raise ParseError(f"bad cycle: ({body})")
        for i, p in enumerate(pts):
            perm[p] = pts[(i + 1) % len(pts)]
    return tuple(perm)


def parse_generator_file(text: str) -> FiniteGroup:
    """Generator-list input: 'degree <d>' then one permutation per line."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("degree"):
        raise ParseError("expected 'degree <d>' header")
    try:
        degree = int(lines[0].split()[1])
    except (IndexError, ValueError):
        raise ParseError("bad degree header") from None
    gens = [parse_cycles(ln, degree) for ln in lines[1:]]
    return from_generators(degree, gens)
