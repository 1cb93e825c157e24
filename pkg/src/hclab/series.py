"""Characteristic series and radicals: center, upper and lower central series,
derived series, Fitting and generalized Fitting subgroups, chief series."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotNormal
from .group import Group, Subgroup, generated_subgroup, is_normal, join, quotient, subgroup_as_group
from .lattice import (
    centralizer,
    minimal_normal_above,
    normal_subgroups,
    o_p,
    prime_factors,
    socle,
)


@dataclass(frozen=True)
class NormalSeries:
    parent: Group
    terms: tuple[Subgroup, ...]
    kind: str  # upper-central | lower-central | derived | chief

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    @property
    def last(self) -> Subgroup:
        return self.terms[-1]

    def factor_orders(self) -> list[int]:
        """|terms[i+1] : terms[i]| for ascending series, the reverse ratio for descending ones."""
        t = self.terms
        return [max(a.size, b.size) // min(a.size, b.size) for a, b in zip(t, t[1:])]


def _memoized(G: Group, key: str, compute):
    hit = G._cache.get(key)
    if hit is None:
        hit = G._cache[key] = compute()
    return hit


def center(G: Group) -> Subgroup:
    return _memoized(G, "center", lambda: centralizer(G, G.whole))


def commutator_subgroup(G: Group, A: Subgroup, B: Subgroup) -> Subgroup:
    """[A, B], generated by all [a, b]."""
    seeds = {G.commutator(a, b) for a in A.members for b in B.members}
    return generated_subgroup(G, seeds)


def _next_upper(G: Group, Z: Subgroup) -> Subgroup:
    # Z_{i+1} = { g : [g, x] in Z_i for all x }
    zb = Z.bits
    gens = G.generators
    bits = 0
    for g in G.elements():
        if all(zb >> G.commutator(g, x) & 1 for x in gens):
            bits |= 1 << g
    return Subgroup(G, bits)


def upper_central_series(G: Group) -> NormalSeries:
    def compute():
        terms = [G.trivial]
        while True:
            nxt = _next_upper(G, terms[-1])
            if nxt == terms[-1]:
                break
            terms.append(nxt)
        return NormalSeries(G, tuple(terms), "upper-central")

    return _memoized(G, "upper_central", compute)


def hypercenter(G: Group) -> Subgroup:
    return upper_central_series(G).last


def hypercenter_by_quotients(G: Group) -> Subgroup:
    """Z_inf(G) as iterated preimages of Z(G/Z_i); an independent route."""
    Z = G.trivial
    while True:
        Q, proj = quotient(G, Z)
        nxt = proj.preimage(center(Q))
        if nxt == Z:
            return Z
        Z = nxt


def derived_subgroup(G: Group) -> Subgroup:
    return _memoized(G, "derived", lambda: commutator_subgroup(G, G.whole, G.whole))


def derived_series(G: Group) -> NormalSeries:
    def compute():
        terms = [G.whole]
        while True:
            cur = terms[-1]
            nxt = commutator_subgroup(G, cur, cur)
            if nxt == cur:
                break
            terms.append(nxt)
        return NormalSeries(G, tuple(terms), "derived")

    return _memoized(G, "derived_series", compute)


def lower_central_series(G: Group) -> NormalSeries:
    def compute():
        terms = [G.whole]
        while True:
            nxt = commutator_subgroup(G, terms[-1], G.whole)
            if nxt == terms[-1]:
                break
            terms.append(nxt)
        return NormalSeries(G, tuple(terms), "lower-central")

    return _memoized(G, "lower_central", compute)


def nilpotent_residual(G: Group) -> Subgroup:
    return lower_central_series(G).last


def fitting(G: Group) -> Subgroup:
    """Largest normal nilpotent subgroup, as the product of the O_p(G)."""
    return _memoized(
        G, "fitting", lambda: join(G, G.trivial, *(o_p(G, p) for p in prime_factors(G.order)))
    )


def generalized_fitting(G: Group) -> Subgroup:
    """F*(G) from F*(G)/F(G) = soc(F(G)C_G(F(G))/F(G)).

    The socle is taken in the group F(G)C_G(F(G))/F(G) itself and pulled back
    through the quotient and the embedding into G.
    """

    def compute():
        F = fitting(G)
        FC = join(G, F, centralizer(G, F))
        X, emb = subgroup_as_group(G, FC)
        F_in_X = emb.preimage(F)
        Q, proj = quotient(X, F_in_X)
        return emb.image(proj.preimage(socle(Q)))

    return _memoized(G, "fstar", compute)


def chief_series(G: Group, *, pick: str = "first") -> NormalSeries:
    """Ascending chief series 1 < N_1 < ... < G.

    Each step takes a normal subgroup N with N/K minimal normal in G/K,
    computed on G's normal subgroups directly. ``pick="first"`` takes the
    canonically smallest candidate; ``"last"`` takes the largest, giving a
    second series for Jordan-Hoelder cross-checks.
    """
    key = f"chief_{pick}"
    hit = G._cache.get(key)
    if hit is not None:
        return hit
    terms = [G.trivial]
    while not terms[-1].is_whole:
        cands = minimal_normal_above(G, terms[-1])
        terms.append(cands[0] if pick == "first" else cands[-1])
    series = NormalSeries(G, tuple(terms), "chief")
    G._cache[key] = series
    return series


def is_chief_factor(G: Group, K: Subgroup, H: Subgroup) -> bool:
    """True iff K < H, both normal, and H/K is minimal normal in G/K."""
    if not (is_normal(G, K) and is_normal(G, H)):
        raise NotNormal("both terms of a chief factor must be normal")
    if not K < H:
        return False
    return H in minimal_normal_above(G, K)


def smallest_normal_with_nilpotent_quotient(G: Group, is_nilpotent) -> Subgroup:
    """Scan normal subgroups for the least N with G/N nilpotent."""
    cands = [N for N in normal_subgroups(G) if is_nilpotent(quotient(G, N)[0])]
    return min(cands, key=lambda N: N.size)
