"""Finite groups as Cayley tables, their subgroups, and homomorphisms between them.

Elements are the indices ``0..n-1`` and ``0`` is always the identity. Subgroups
are stored as Python-int bitsets over the parent's indices, so intersection and
containment are single integer operations.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterable, Sequence

import numpy as np

from . import config
from .bits import from_indices, iter_bits
from .errors import IdentityNotZero, NotAssociative, NotLatinSquare, NotNormal


class Group:
    """An immutable finite group given by its multiplication table.

    ``table[a][b]`` is the index of ``a*b``. Derived data (element orders,
    conjugation maps, lattices, radicals) is computed lazily and memoized in
    ``_cache``; the table itself never changes.
    """

    __slots__ = ("table", "name", "element_labels", "inverses", "_cache", "_conj")

    def __init__(
        self,
        table: Sequence[Sequence[int]],
        name: str = "G",
        element_labels: Sequence[str] | None = None,
    ):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.name = name
        self.element_labels = tuple(element_labels) if element_labels is not None else None
        inv = [0] * len(self.table)
        for a, row in enumerate(self.table):
            inv[a] = row.index(0)
        self.inverses = tuple(inv)
        self._cache: dict = {}
        self._conj: list = [None] * len(self.table)

    def __getstate__(self):
        return (self.table, self.name, self.element_labels)

    def __setstate__(self, state):
        Group.__init__(self, *state)

    def __repr__(self):
        return f"Group({self.name!r}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, x: int, k: int) -> int:
        if k < 0:
            x, k = self.inverses[x], -k
        result = 0
        row = self.table
        for _ in range(k):
            result = row[result][x]
        return result

    def commutator(self, a: int, b: int) -> int:
        """[a, b] = a^-1 b^-1 a b."""
        t, inv = self.table, self.inverses
        return t[t[inv[a]][inv[b]]][t[a][b]]

    def label(self, x: int) -> str:
        if self.element_labels is not None:
            return self.element_labels[x]
        return str(x)

    def conj(self, g: int) -> tuple[int, ...]:
        """The map x -> g^-1 x g as a tuple indexed by x."""
        c = self._conj[g]
        if c is None:
            t = self.table
            gi = self.inverses[g]
            row = t[gi]
            c = tuple(t[row[x]][g] for x in range(len(t)))
            self._conj[g] = c
        return c

    @property
    def element_orders(self) -> tuple[int, ...]:
        orders = self._cache.get("orders")
        if orders is None:
            t = self.table
            out = []
            for x in range(len(t)):
                k, y = 1, x
                while y != 0:
                    y = t[y][x]
                    k += 1
                out.append(k)
            orders = self._cache["orders"] = tuple(out)
        return orders

    def subgroup(self, bits: int) -> Subgroup:
        """Wrap a bitset already known to be closed. No validation."""
        return Subgroup(self, bits)

    @property
    def whole(self) -> Subgroup:
        return Subgroup(self, (1 << len(self.table)) - 1)

    @property
    def trivial(self) -> Subgroup:
        return Subgroup(self, 1)

    @property
    def generators(self) -> tuple[int, ...]:
        return self.whole.gens

    @property
    def is_abelian(self) -> bool:
        cached = self._cache.get("abelian")
        if cached is None:
            t = self.table
            gens = self.generators
            cached = all(t[a][b] == t[b][a] for i, a in enumerate(gens) for b in gens[i + 1:])
            self._cache["abelian"] = cached
        return cached


class Subgroup:
    """A subgroup of ``parent``, held as a bitset of member indices."""

    __slots__ = ("parent", "bits", "_members", "_gens")

    def __init__(self, parent: Group, bits: int):
        self.parent = parent
        self.bits = bits
        self._members = None
        self._gens = None

    @classmethod
    def checked(cls, parent: Group, members: Iterable[int]) -> Subgroup:
        """Build from a member set, verifying the subgroup axioms."""
        bits = from_indices(members)
        if not bits & 1:
            raise ValueError("subgroup must contain the identity")
        t, inv = parent.table, parent.inverses
        ms = list(iter_bits(bits))
        for a in ms:
            if not bits >> inv[a] & 1:
                raise ValueError(f"not closed under inverses at {a}")
            row = t[a]
            for b in ms:
                if not bits >> row[b] & 1:
                    raise ValueError(f"not closed: {a}*{b} = {row[b]}")
        if parent.order % len(ms):
            raise ValueError("size does not divide the group order")
        return cls(parent, bits)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    @property
    def members(self) -> tuple[int, ...]:
        if self._members is None:
            self._members = tuple(iter_bits(self.bits))
        return self._members

    @property
    def gens(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by decreasing element order."""
        if self._gens is None:
            memo = self.parent._cache.setdefault("gens", {})
            hit = memo.get(self.bits)
            if hit is not None:
                self._gens = hit
                return hit
            orders = self.parent.element_orders
            cand = sorted(self.members, key=lambda x: (-orders[x], x))
            gens: list[int] = []
            span = 1
            for x in cand:
                if span == self.bits:
                    break
                if not span >> x & 1:
                    gens.append(x)
                    span = _closure(self.parent, gens)
            self._gens = memo[self.bits] = tuple(gens)
        return self._gens

    @property
    def key(self) -> tuple[int, tuple[int, ...]]:
        """Canonical sort key: size, then sorted member list."""
        return (self.size, self.members)

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> x & 1)

    def __le__(self, other: Subgroup) -> bool:
        return self.bits & other.bits == self.bits

    def __lt__(self, other: Subgroup) -> bool:
        return self.bits != other.bits and self.bits & other.bits == self.bits

    def __ge__(self, other: Subgroup) -> bool:
        return other <= self

    def __gt__(self, other: Subgroup) -> bool:
        return other < self

    def __and__(self, other: Subgroup) -> Subgroup:
        return Subgroup(self.parent, self.bits & other.bits)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent and self.bits == other.bits

    def __hash__(self):
        return hash((id(self.parent), self.bits))

    def __len__(self) -> int:
        return self.size

    def __iter__(self):
        return iter(self.members)

    def __repr__(self):
        return f"Subgroup(order={self.size} of {self.parent.name})"

    @property
    def is_trivial(self) -> bool:
        return self.bits == 1

    @property
    def is_whole(self) -> bool:
        return self.bits == (1 << self.parent.order) - 1


class Morphism:
    """A homomorphism ``source -> target`` given by the image of every element."""

    __slots__ = ("source", "target", "map")

    def __init__(self, source: Group, target: Group, mapping: Sequence[int], *, check: bool = False):
        self.source = source
        self.target = target
        self.map = tuple(mapping)
        if check:
            self.verify()

    def verify(self) -> None:
        ts, tt, m = self.source.table, self.target.table, self.map
        if len(m) != self.source.order or m[0] != 0:
            raise ValueError("map must be total and send identity to identity")
        for a in range(len(ts)):
            for b in range(len(ts)):
                if m[ts[a][b]] != tt[m[a]][m[b]]:
                    raise ValueError(f"not a homomorphism at ({a}, {b})")

    def __call__(self, x: int) -> int:
        return self.map[x]

    def kernel(self) -> Subgroup:
        return Subgroup(self.source, from_indices(i for i, y in enumerate(self.map) if y == 0))

    def image(self, sub: Subgroup | None = None) -> Subgroup:
        m = self.map
        members = self.source.elements() if sub is None else sub.members
        return Subgroup(self.target, from_indices(m[x] for x in members))

    def preimage(self, sub: Subgroup) -> Subgroup:
        bits = sub.bits
        return Subgroup(self.source, from_indices(i for i, y in enumerate(self.map) if bits >> y & 1))

    def is_injective(self) -> bool:
        return len(set(self.map)) == len(self.map)


def _closure(G: Group, gens: Iterable[int]) -> int:
    t = G.table
    gens = [g for g in dict.fromkeys(gens) if g != 0]
    elems = [0]
    bits = 1
    for e in elems:
        row = t[e]
        for s in gens:
            x = row[s]
            if not bits >> x & 1:
                bits |= 1 << x
                elems.append(x)
    return bits


def _validate_table(T: np.ndarray) -> None:
    n = T.shape[0]
    ref = np.arange(n)
    bad_rows = np.nonzero(~(np.sort(T, axis=1) == ref).all(axis=1))[0]
    if bad_rows.size:
        r = int(bad_rows[0])
        raise NotLatinSquare(f"row {r} is not a permutation of 0..{n - 1}")
    bad_cols = np.nonzero(~(np.sort(T, axis=0) == ref[:, None]).all(axis=0))[0]
    if bad_cols.size:
        c = int(bad_cols[0])
        raise NotLatinSquare(f"column {c} is not a permutation of 0..{n - 1}")
    for a in range(n):
        lhs = T[T[a]]  # [b, c] -> (a*b)*c
        rhs = T[a][T]  # [b, c] -> a*(b*c)
        diff = np.argwhere(lhs != rhs)
        if diff.size:
            b, c = (int(v) for v in diff[0])
            raise NotAssociative((a, b, c))
    if not (T[0] == ref).all() or not (T[:, 0] == ref).all():
        raise IdentityNotZero("row 0 and column 0 must be the identity permutation")


def from_cayley_table(
    table: Sequence[Sequence[int]],
    name: str = "G",
    element_labels: Sequence[str] | None = None,
) -> Group:
    """Validate a multiplication table and wrap it as a Group.

    Checks, in order: shape and entry range, Latin square, associativity over
    all triples, and that 0 is the identity. Each failure names the first
    offending row, column, or triple.
    """
    n = len(table)
    if n == 0:
        raise NotLatinSquare("empty table")
    config.check_cap("from_cayley_table", n, "order")
    for r, row in enumerate(table):
        if len(row) != n:
            raise NotLatinSquare(f"row {r} has length {len(row)}, expected {n}")
        for c, x in enumerate(row):
            if not 0 <= int(x) < n:
                raise NotLatinSquare(f"entry ({r}, {c}) = {x} out of range")
    _validate_table(np.asarray(table, dtype=np.int64))
    if element_labels is not None and len(element_labels) != n:
        raise ValueError("element_labels must have one label per element")
    return Group(table, name, element_labels)


def element_order(G: Group, x: int) -> int:
    return G.element_orders[x]


def exponent(G: Group, sub: Subgroup | None = None) -> int:
    from math import lcm

    orders = G.element_orders
    members = G.elements() if sub is None else sub.members
    return lcm(*(orders[x] for x in members)) if members else 1


def generated_subgroup(G: Group, seed: Iterable[int]) -> Subgroup:
    return Subgroup(G, _closure(G, seed))


def join(G: Group, *subs: Subgroup) -> Subgroup:
    """The subgroup generated by the union of ``subs``."""
    gens: list[int] = []
    for s in subs:
        gens.extend(s.gens)
    return generated_subgroup(G, gens)


def conjugate_bits(G: Group, bits: int, g: int) -> int:
    c = G.conj(g)
    out = 0
    for h in iter_bits(bits):
        out |= 1 << c[h]
    return out


def conjugate_subgroup(G: Group, H: Subgroup, g: int) -> Subgroup:
    """H^g = {g^-1 h g : h in H}."""
    return Subgroup(G, conjugate_bits(G, H.bits, g))


def normalizes(G: Group, g: int, H: Subgroup) -> bool:
    c = G.conj(g)
    bits = H.bits
    return all(bits >> c[s] & 1 for s in H.gens)


def is_normal(G: Group, H: Subgroup) -> bool:
    return all(normalizes(G, g, H) for g in G.generators)


def product_bits(G: Group, A: Subgroup, B: Subgroup) -> int:
    """Bitset of the setwise product AB = {ab : a in A, b in B}."""
    t = G.table
    bm = B.members
    out = 0
    for a in A.members:
        row = t[a]
        for b in bm:
            out |= 1 << row[b]
    return out


def product_size(A: Subgroup, B: Subgroup) -> int:
    """|AB| = |A||B|/|A n B|, valid for any two subgroups."""
    return A.size * B.size // (A.bits & B.bits).bit_count()


def quotient(G: Group, N: Subgroup, name: str | None = None) -> tuple[Group, Morphism]:
    """G/N with cosets ordered (and labeled) by their smallest member index."""
    if not is_normal(G, N):
        raise NotNormal(f"subgroup of order {N.size} is not normal in {G.name}")
    n = G.order
    t = G.table
    coset_of = [-1] * n
    reps: list[int] = []
    nm = N.members
    for g in range(n):
        if coset_of[g] < 0:
            idx = len(reps)
            reps.append(g)
            row = t[g]
            for x in nm:
                coset_of[row[x]] = idx
    table = [[coset_of[t[a][b]] for b in reps] for a in reps]
    labels = None
    if G.element_labels is not None:
        labels = [G.element_labels[r] + "N" for r in reps]
    Q = Group(table, name or f"{G.name}/N{N.size}", labels)
    return Q, Morphism(G, Q, coset_of)


def subgroup_as_group(G: Group, H: Subgroup) -> tuple[Group, Morphism]:
    """Re-index H as a standalone group; the Morphism embeds it back into G.

    Memoized on G, so repeated calls return the same Group object.
    """
    cache = G._cache.setdefault("as_group", {})
    hit = cache.get(H.bits)
    if hit is not None:
        return hit
    if H.is_whole:
        result = (G, Morphism(G, G, range(G.order)))
    else:
        members = H.members
        index = {x: i for i, x in enumerate(members)}
        t = G.table
        table = [[index[t[a][b]] for b in members] for a in members]
        labels = [G.element_labels[x] for x in members] if G.element_labels is not None else None
        K = Group(table, f"{G.name}>{H.size}", labels)
        result = (K, Morphism(K, G, members))
    cache[H.bits] = result
    return result


def direct_product(A: Group, B: Group, name: str | None = None) -> Group:
    """A x B on pairs (a, b) ordered lexicographically; index = a*|B| + b."""
    n = A.order * B.order
    config.check_cap("direct_product", n, "order")
    m = B.order
    ta, tb = A.table, B.table
    table = []
    for a1 in range(A.order):
        ra = ta[a1]
        for b1 in range(m):
            rb = tb[b1]
            table.append([ra[a2] * m + rb[b2] for a2 in range(A.order) for b2 in range(m)])
    labels = [f"({A.label(a)},{B.label(b)})" for a in range(A.order) for b in range(m)]
    return Group(table, name or f"{A.name}x{B.name}", labels)


def center_size(G: Group) -> int:
    t = G.table
    gens = G.generators
    return sum(1 for z in G.elements() if all(t[z][s] == t[s][z] for s in gens))


def _invariants(G: Group):
    return (G.order, tuple(sorted(Counter(G.element_orders).items())), center_size(G), G.is_abelian)


def find_isomorphism(A: Group, B: Group) -> Morphism | None:
    """Return an isomorphism A -> B, or None.

    Invariants are compared first; then images of a small generating set of A
    are chosen by backtracking over order-matching elements of B, extending
    each partial choice to the generated subgroup and pruning on conflict.
    """
    config.check_cap("is_isomorphic", max(A.order, B.order), "isomorphism")
    if _invariants(A) != _invariants(B):
        return None
    gens = A.generators
    oa, ob = A.element_orders, B.element_orders
    candidates = [[y for y in B.elements() if ob[y] == oa[g]] for g in gens]
    ta, tb = A.table, B.table

    def extend(images: list[int]) -> list[int] | None:
        pairs = list(zip(gens, images))
        m = [-1] * A.order
        m[0] = 0
        used = {0}
        queue = [0]
        for e in queue:
            for s, t in pairs:
                x, y = ta[e][s], tb[m[e]][t]
                if m[x] < 0:
                    if y in used:
                        return None
                    m[x] = y
                    used.add(y)
                    queue.append(x)
                elif m[x] != y:
                    return None
        return m

    def search(images: list[int]) -> list[int] | None:
        m = extend(images)
        if m is None:
            return None
        if len(images) == len(gens):
            return m
        for y in candidates[len(images)]:
            found = search(images + [y])
            if found is not None:
                return found
        return None

    m = search([])
    if m is None or -1 in m:
        return None
    return Morphism(A, B, m)


def is_isomorphic(A: Group, B: Group) -> bool:
    return find_isomorphism(A, B) is not None


def as_group(X: Group | Subgroup) -> Group:
    """A Group for X; subgroups are re-indexed via :func:`subgroup_as_group`."""
    if isinstance(X, Group):
        return X
    return subgroup_as_group(X.parent, X)[0]
