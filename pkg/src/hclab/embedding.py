"""Subgroup embedding properties: H-subgroups, HC-subgroups, weakly H-subgroups,
c-normality, quasinormality and subnormality.

Every predicate returns an :class:`EmbeddingVerdict`. Existential properties
(HC, weakly H, c-normal) carry the witnessing normal subgroup when they hold;
universal ones (H, quasinormal) carry a concrete counterexample when they fail.
Ambient groups may be given as a Group or as a Subgroup of some parent; in the
latter case the computation runs in the re-indexed subgroup and results are
mapped back to the parent's element indices.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, field

from .group import (
    Group,
    Subgroup,
    conjugate_bits,
    generated_subgroup,
    is_normal,
    product_bits,
    product_size,
    subgroup_as_group,
)
from .lattice import all_subgroups, normal_core, normal_subgroups, normalizer

HC_MUTATIONS = ("drop-intersection", "normalizer-in-g")

_hc_mutation: contextvars.ContextVar[str | None] = contextvars.ContextVar("hc_mutation", default=None)


@contextlib.contextmanager
def hc_mutation(mode: str | None):
    """Run with a deliberately broken HC decision procedure (mutation testing).

    ``drop-intersection`` drops the condition on H^g n N_T(H) entirely, so
    any T with HT = G is accepted; ``normalizer-in-g`` uses N_G(H) where
    N_T(H) belongs.
    """
    if mode is not None and mode not in HC_MUTATIONS:
        raise ValueError(f"unknown mutation {mode!r}")
    token = _hc_mutation.set(mode)
    try:
        yield
    finally:
        _hc_mutation.reset(token)


def current_hc_mutation() -> str | None:
    return _hc_mutation.get()


@dataclass
class EmbeddingVerdict:
    holds: bool
    witness: Subgroup | None = None
    counterexample: tuple[int, int] | None = None
    detail: dict = field(default_factory=dict)

    def __bool__(self):
        return self.holds


def _localize(G: Group | Subgroup, H: Subgroup):
    """Return (group, H in that group, map back to caller's indices or None)."""
    if isinstance(G, Group):
        return G, H, None
    K, emb = subgroup_as_group(G.parent, G)
    if K is G.parent:
        return K, H, None
    return K, emb.preimage(H), emb


def _lift(verdict: EmbeddingVerdict, emb) -> EmbeddingVerdict:
    if emb is None:
        return verdict
    w = emb.image(verdict.witness) if verdict.witness is not None else None
    ce = tuple(emb.map[x] for x in verdict.counterexample) if verdict.counterexample else None
    return EmbeddingVerdict(verdict.holds, w, ce, verdict.detail)


def conjugates(G: Group, H: Subgroup) -> dict[int, int]:
    """Distinct conjugates of H as {bits: first conjugating element}."""
    memo = G._cache.setdefault("conjugates", {})
    hit = memo.get(H.bits)
    if hit is None:
        hit = {}
        for g in G.elements():
            hit.setdefault(conjugate_bits(G, H.bits, g), g)
        memo[H.bits] = hit
    return hit


def _containment_failure(G: Group, H: Subgroup, within: int) -> tuple[int, int] | None:
    """First (g, x) with x in H^g n within but x not in H."""
    hb = H.bits
    for cb, g in conjugates(G, H).items():
        bad = cb & within & ~hb
        if bad:
            return g, (bad & -bad).bit_length() - 1
    return None


def is_h_subgroup(G: Group | Subgroup, H: Subgroup) -> EmbeddingVerdict:
    """H^g n N_G(H) <= H for all g in G."""
    G, H, emb = _localize(G, H)
    memo = G._cache.setdefault("is_h", {})
    hit = memo.get(H.bits)
    if hit is None:
        fail = _containment_failure(G, H, normalizer(G, H).bits)
        hit = memo[H.bits] = EmbeddingVerdict(fail is None, counterexample=fail)
    return _lift(hit, emb)


def supplementing_normals(G: Group, H: Subgroup) -> list[Subgroup]:
    """Normal subgroups T with HT = G, in canonical order."""
    return [T for T in normal_subgroups(G) if product_size(H, T) == G.order]


def is_hc_subgroup(G: Group | Subgroup, H: Subgroup) -> EmbeddingVerdict:
    """Some normal T has HT = G and H^g n N_T(H) <= H for all g in G.

    Candidates T are scanned in canonical (size, members) order and the first
    one that works is the witness.
    """
    G, H, emb = _localize(G, H)
    mode = _hc_mutation.get()
    memo = G._cache.setdefault("is_hc", {})
    key = (H.bits, mode)
    hit = memo.get(key)
    if hit is None:
        hit = memo[key] = _decide_hc(G, H, mode)
    return _lift(hit, emb)


def _decide_hc(G: Group, H: Subgroup, mode: str | None) -> EmbeddingVerdict:
    NG = normalizer(G, H).bits
    last_fail = None
    tried = []
    for T in supplementing_normals(G, H):
        if mode == "drop-intersection":
            return EmbeddingVerdict(True, witness=T)
        within = NG if mode == "normalizer-in-g" else NG & T.bits
        fail = _containment_failure(G, H, within)
        if fail is None:
            return EmbeddingVerdict(True, witness=T)
        last_fail = fail
        tried.append(T.size)
    return EmbeddingVerdict(False, counterexample=last_fail, detail={"tried_T_orders": tried})


def is_c_normal(G: Group | Subgroup, H: Subgroup) -> EmbeddingVerdict:
    """Some normal K has HK = G and H n K <= H_G."""
    G, H, emb = _localize(G, H)
    core = normal_core(G, H).bits
    for K in supplementing_normals(G, H):
        if H.bits & K.bits & ~core == 0:
            return _lift(EmbeddingVerdict(True, witness=K), emb)
    return _lift(EmbeddingVerdict(False), emb)


def is_weakly_h_subgroup(G: Group | Subgroup, H: Subgroup) -> EmbeddingVerdict:
    """Some normal T has HT = G and H n T an H-subgroup of G."""
    G, H, emb = _localize(G, H)
    for T in supplementing_normals(G, H):
        if is_h_subgroup(G, H & T).holds:
            return _lift(EmbeddingVerdict(True, witness=T), emb)
    return _lift(EmbeddingVerdict(False), emb)


def is_quasinormal_in(K: Group | Subgroup, H: Subgroup) -> EmbeddingVerdict:
    """HX = XH for every subgroup X of K.

    On failure the witness is the offending X and the counterexample a pair
    (a, b), a in H and b in X, with ab outside XH.
    """
    K, H, emb = _localize(K, H)
    t = K.table
    for X in all_subgroups(K):
        hx = product_bits(K, H, X)
        xh = product_bits(K, X, H)
        if hx != xh:
            pair = next((a, b) for a in H.members for b in X.members if not xh >> t[a][b] & 1)
            return _lift(EmbeddingVerdict(False, witness=X, counterexample=pair), emb)
    return _lift(EmbeddingVerdict(True), emb)


def _normal_closure_in(G: Group, X: Subgroup, H: Subgroup) -> Subgroup:
    return generated_subgroup(G, {G.conj(x)[h] for x in X.members for h in H.gens})


def subnormal_chain(G: Group, H: Subgroup) -> list[Subgroup]:
    """G >= H^G >= H^(H^G) >= ... until the chain stabilizes."""
    chain = [G.whole]
    while True:
        Y = _normal_closure_in(G, chain[-1], H)
        if Y == chain[-1]:
            return chain
        chain.append(Y)


def is_subnormal(G: Group | Subgroup, H: Subgroup) -> bool:
    G, H, _ = _localize(G, H)
    return subnormal_chain(G, H)[-1] == H


def is_normal_in(G: Group | Subgroup, H: Subgroup) -> bool:
    G, H, _ = _localize(G, H)
    return is_normal(G, H)


PREDICATES = {
    "h": is_h_subgroup,
    "hc": is_hc_subgroup,
    "cnormal": is_c_normal,
    "weaklyh": is_weakly_h_subgroup,
    "quasinormal": is_quasinormal_in,
    "subnormal": lambda G, H: EmbeddingVerdict(is_subnormal(G, H)),
    "normal": lambda G, H: EmbeddingVerdict(is_normal_in(G, H)),
}
