"""Subgroup lattices and local subgroups: normalizers, centralizers, cores,
closures, Sylow subgroups, maximal subgroups, Frattini subgroup, socle and the
p-radicals."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from . import config
from .bits import iter_bits
from .errors import NotPGroup
from .group import (
    Group,
    Subgroup,
    _closure,
    conjugate_bits,
    generated_subgroup,
    is_normal,
    join,
    normalizes,
)


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and prime_factors(n) == [n]


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


def prime_of_p_group(size: int) -> int | None:
    """The prime p when size is a nontrivial p-power, else None."""
    ps = prime_factors(size)
    return ps[0] if len(ps) == 1 else None


@dataclass(frozen=True)
class SubgroupLattice:
    parent: Group
    subgroups: tuple[Subgroup, ...]
    conjugacy_classes: tuple[tuple[int, ...], ...]
    normal_flags: tuple[bool, ...]
    maximal_flags: tuple[bool, ...]

    def __len__(self):
        return len(self.subgroups)

    def __iter__(self):
        return iter(self.subgroups)

    def index(self, H: Subgroup) -> int:
        return self._positions()[H.bits]

    def _positions(self) -> dict[int, int]:
        pos = self.parent._cache.get("lattice_pos")
        if pos is None:
            pos = self.parent._cache["lattice_pos"] = {S.bits: i for i, S in enumerate(self.subgroups)}
        return pos

    def of_order(self, k: int) -> list[Subgroup]:
        return [S for S in self.subgroups if S.size == k]

    def select(self, order: int, index: int = 0) -> Subgroup:
        """The index-th subgroup of the given order in canonical order."""
        subs = self.of_order(order)
        if not 0 <= index < len(subs):
            raise IndexError(f"{self.parent.name} has {len(subs)} subgroups of order {order}")
        return subs[index]

    def selector(self, H: Subgroup) -> str:
        """Inverse of :meth:`select`, rendered ``order=k,index=j``."""
        return f"order={H.size},index={self.of_order(H.size).index(H)}"

    def within(self, X: Subgroup) -> list[Subgroup]:
        return [S for S in self.subgroups if S <= X]

    @property
    def normal(self) -> list[Subgroup]:
        return [S for S, f in zip(self.subgroups, self.normal_flags) if f]


def all_subgroups(G: Group) -> SubgroupLattice:
    """Every subgroup of G, by extension of conjugacy-class representatives.

    Each class representative H is extended by every cyclic subgroup not
    inside it; new subgroups enter with their full conjugacy class. Since any
    nontrivial K equals <M, x> for a maximal subgroup M of K, induction on |K|
    shows the fixpoint contains every subgroup, perfect ones included.
    """
    lat = G._cache.get("lattice")
    if lat is not None:
        return lat
    config.check_cap("all_subgroups", G.order, "lattice")

    cyclic: dict[int, int] = {}
    for x in G.elements():
        b = _closure(G, (x,))
        cyclic.setdefault(b, x)

    known: dict[int, int] = {}
    classes: list[list[int]] = []

    def add_class(bits: int) -> None:
        cls = sorted({conjugate_bits(G, bits, g) for g in G.elements()})
        for b in cls:
            known[b] = len(classes)
        classes.append(cls)

    add_class(1)
    queue = [Subgroup(G, 1)]
    for H in queue:
        hb = H.bits
        for b, x in cyclic.items():
            if b & ~hb == 0:
                continue
            kb = _closure(G, H.gens + (x,))
            if kb not in known:
                add_class(kb)
                queue.append(Subgroup(G, kb))

    subs = sorted((Subgroup(G, b) for b in known), key=lambda S: S.key)
    pos = {S.bits: i for i, S in enumerate(subs)}
    class_idx = sorted(tuple(sorted(pos[b] for b in cls)) for cls in classes)
    normal = [False] * len(subs)
    for cls in class_idx:
        if len(cls) == 1:
            normal[cls[0]] = True
    full = (1 << G.order) - 1
    proper = [S for S in subs if S.bits != full]
    maximal = [False] * len(subs)
    for S in proper:
        if not any(S.bits != K.bits and S.bits & K.bits == S.bits for K in proper if K.size > S.size):
            maximal[pos[S.bits]] = True
    lat = SubgroupLattice(G, tuple(subs), tuple(class_idx), tuple(normal), tuple(maximal))
    G._cache["lattice"] = lat
    G._cache["lattice_pos"] = pos
    return lat


def _memo(G: Group, name: str) -> dict:
    return G._cache.setdefault(name, {})


def normalizer(G: Group, H: Subgroup) -> Subgroup:
    memo = _memo(G, "normalizer")
    hit = memo.get(H.bits)
    if hit is None:
        bits = 0
        for g in G.elements():
            if normalizes(G, g, H):
                bits |= 1 << g
        hit = memo[H.bits] = Subgroup(G, bits)
    return hit


def centralizer(G: Group, X) -> Subgroup:
    """C_G(X) for a Subgroup X or any iterable of elements."""
    xs = X.gens if isinstance(X, Subgroup) else tuple(X)
    t = G.table
    bits = 0
    for g in G.elements():
        row = t[g]
        if all(row[x] == t[x][g] for x in xs):
            bits |= 1 << g
    return Subgroup(G, bits)


def normal_core(G: Group, H: Subgroup) -> Subgroup:
    """Largest normal subgroup of G inside H: the intersection of all H^g."""
    memo = _memo(G, "core")
    hit = memo.get(H.bits)
    if hit is None:
        bits = H.bits
        for g in G.elements():
            if bits == 1:
                break
            bits &= conjugate_bits(G, H.bits, g)
        hit = memo[H.bits] = Subgroup(G, bits)
    return hit


def normal_closure(G: Group, H: Subgroup) -> Subgroup:
    """Smallest normal subgroup of G containing H."""
    seeds = {G.conj(g)[s] for g in G.elements() for s in H.gens}
    return generated_subgroup(G, seeds)


def conjugacy_classes(G: Group) -> list[tuple[int, ...]]:
    cached = G._cache.get("classes")
    if cached is None:
        seen = [False] * G.order
        cached = []
        for x in G.elements():
            if not seen[x]:
                cls = sorted({G.conj(g)[x] for g in G.elements()})
                for y in cls:
                    seen[y] = True
                cached.append(tuple(cls))
        G._cache["classes"] = cached
    return cached


def normal_subgroups(G: Group) -> list[Subgroup]:
    """All normal subgroups in canonical order, without building the lattice.

    Seeds are normal closures of single conjugacy classes; every normal
    subgroup is a product of those, so closing under pairwise joins finishes.
    """
    cached = G._cache.get("normals")
    if cached is not None:
        return cached
    found = {1}
    for cls in conjugacy_classes(G):
        found.add(_closure(G, cls))
    frontier = list(found)
    while frontier:
        new = []
        current = list(found)
        for a in frontier:
            A = Subgroup(G, a)
            for b in current:
                if a & b == a or a & b == b:
                    continue
                j = join(G, A, Subgroup(G, b)).bits
                if j not in found:
                    found.add(j)
                    new.append(j)
        frontier = new
    cached = sorted((Subgroup(G, b) for b in found), key=lambda S: S.key)
    G._cache["normals"] = cached
    return cached


def _grow_sylow(G: Group, p: int) -> Subgroup:
    target = p_part(G.order, p)
    orders = G.element_orders
    H = G.trivial
    while H.size < target:
        N = normalizer(G, H)
        x = next(x for x in N.members if x not in H and is_p_power(orders[x], p))
        H = Subgroup(G, _closure(G, H.gens + (x,)))
    return H


def sylow_subgroups(G: Group, p: int) -> list[Subgroup]:
    """The full conjugacy class of Sylow p-subgroups, in canonical order."""
    memo = _memo(G, "sylow")
    hit = memo.get(p)
    if hit is None:
        P = _grow_sylow(G, p)
        bits = {conjugate_bits(G, P.bits, g) for g in G.elements()}
        hit = memo[p] = sorted((Subgroup(G, b) for b in bits), key=lambda S: S.key)
    return hit


def sylow_subgroup(G: Group, p: int) -> Subgroup:
    return sylow_subgroups(G, p)[0]


def _maximal_among(cands: list[Subgroup]) -> list[Subgroup]:
    return [
        M for M in cands
        if not any(K.size > M.size and M.bits & K.bits == M.bits for K in cands)
    ]


def maximal_subgroups(X: Group | Subgroup) -> list[Subgroup]:
    """Maximal subgroups of a group, or of a subgroup inside its parent's lattice."""
    if isinstance(X, Group):
        lat = all_subgroups(X)
        return [S for S, f in zip(lat.subgroups, lat.maximal_flags) if f]
    lat = all_subgroups(X.parent)
    cands = [S for S in lat.subgroups if S < X]
    return _maximal_among(cands)


def frattini(X: Group | Subgroup) -> Subgroup:
    whole = X.whole if isinstance(X, Group) else X
    maxes = maximal_subgroups(X)
    bits = reduce(lambda a, M: a & M.bits, maxes, whole.bits)
    return Subgroup(whole.parent, bits)


def minimal_normal_subgroups(G: Group) -> list[Subgroup]:
    nontrivial = [N for N in normal_subgroups(G) if not N.is_trivial]
    return [
        N for N in nontrivial
        if not any(M.size < N.size and M.bits & N.bits == M.bits for M in nontrivial)
    ]


def socle(G: Group) -> Subgroup:
    return join(G, G.trivial, *minimal_normal_subgroups(G))


def minimal_normal_above(G: Group, K: Subgroup) -> list[Subgroup]:
    """Normal N > K with N/K minimal normal in G/K, in canonical order."""
    above = [N for N in normal_subgroups(G) if K < N]
    return [
        N for N in above
        if not any(M.size < N.size and M.bits & N.bits == M.bits for M in above)
    ]


def o_p(G: Group, p: int) -> Subgroup:
    """Largest normal p-subgroup."""
    cands = [N for N in normal_subgroups(G) if is_p_power(N.size, p)]
    return max(cands, key=lambda N: N.size)


def o_p_prime(G: Group, p: int) -> Subgroup:
    """Largest normal subgroup of order prime to p."""
    cands = [N for N in normal_subgroups(G) if N.size % p]
    return max(cands, key=lambda N: N.size)


def o_upper_p(G: Group, p: int) -> Subgroup:
    """Smallest normal subgroup with p-group quotient."""
    bits = (1 << G.order) - 1
    for N in normal_subgroups(G):
        if is_p_power(G.order // N.size, p):
            bits &= N.bits
    return Subgroup(G, bits)


def p_radicals(G: Group, p: int) -> tuple[Subgroup, Subgroup, Subgroup]:
    """(O_p(G), O_p'(G), O^p(G))."""
    return o_p(G, p), o_p_prime(G, p), o_upper_p(G, p)


def omega(P: Group | Subgroup, p: int, i: int = 1) -> Subgroup:
    """Subgroup of the p-group P generated by elements of order dividing p^i."""
    sub = P.whole if isinstance(P, Group) else P
    if not is_p_power(sub.size, p):
        raise NotPGroup(f"subgroup of order {sub.size} is not a {p}-group")
    G = sub.parent
    orders = G.element_orders
    bound = p**i
    return generated_subgroup(G, (x for x in sub.members if bound % orders[x] == 0))


def is_self_normalizing(G: Group, H: Subgroup) -> bool:
    return normalizer(G, H) == H

