"""Independent re-verification of embedding verdicts.

Everything here works from the raw multiplication table with Python sets and
explicit loops, sharing no code with the bitset predicates it audits.
"""

from __future__ import annotations

from .embedding import EmbeddingVerdict
from .group import Group, Subgroup


def _set(H: Subgroup) -> set[int]:
    return set(H.members)


def _conj(G: Group, g: int, x: int) -> int:
    t = G.table
    return t[t[G.inverses[g]][x]][g]


def _normal(G: Group, S: set[int]) -> bool:
    return all(_conj(G, g, s) in S for g in range(G.order) for s in S)


def _product(G: Group, A: set[int], B: set[int]) -> set[int]:
    t = G.table
    return {t[a][b] for a in A for b in B}


def _normalizes(G: Group, x: int, S: set[int]) -> bool:
    return {_conj(G, x, s) for s in S} == S


def raw_is_h(G: Group, H: set[int]) -> bool:
    for g in range(G.order):
        for y in {_conj(G, g, h) for h in H}:
            if y not in H and _normalizes(G, y, H):
                return False
    return True


def h_counterexample_ok(G: Group, H: Subgroup, ce: tuple[int, int]) -> bool:
    g, x = ce
    S = _set(H)
    return x in {_conj(G, g, h) for h in S} and _normalizes(G, x, S) and x not in S


def hc_witness_ok(G: Group, H: Subgroup, T: Subgroup, *, use_t: bool = True) -> bool:
    S, W = _set(H), _set(T)
    if not _normal(G, W) or _product(G, S, W) != set(range(G.order)):
        return False
    for g in range(G.order):
        for y in {_conj(G, g, h) for h in S}:
            if (not use_t or y in W) and y not in S and _normalizes(G, y, S):
                return False
    return True


def cnormal_witness_ok(G: Group, H: Subgroup, K: Subgroup) -> bool:
    S, W = _set(H), _set(K)
    if not _normal(G, W) or _product(G, S, W) != set(range(G.order)):
        return False
    core = {h for h in S if all(_conj(G, g, h) in S for g in range(G.order))}
    return S & W <= core


def weakly_h_witness_ok(G: Group, H: Subgroup, T: Subgroup) -> bool:
    S, W = _set(H), _set(T)
    if not _normal(G, W) or _product(G, S, W) != set(range(G.order)):
        return False
    return raw_is_h(G, S & W)


def quasinormal_counterexample_ok(K: Group, H: Subgroup, X: Subgroup, ce: tuple[int, int]) -> bool:
    a, b = ce
    S, Y = _set(H), _set(X)
    return a in S and b in Y and K.table[a][b] not in _product(K, Y, S)


def replay(kind: str, G: Group, H: Subgroup, verdict: EmbeddingVerdict) -> bool:
    """True when the verdict's evidence re-verifies.

    Existential kinds check the witness when the property holds; universal
    kinds check the counterexample when it fails and recheck exhaustively
    when it holds. The other outcomes carry no evidence and pass trivially.
    """
    if kind == "h":
        if verdict.holds:
            return raw_is_h(G, _set(H))
        return h_counterexample_ok(G, H, verdict.counterexample)
    if kind == "hc":
        return not verdict.holds or hc_witness_ok(G, H, verdict.witness)
    if kind == "cnormal":
        return not verdict.holds or cnormal_witness_ok(G, H, verdict.witness)
    if kind == "weaklyh":
        return not verdict.holds or weakly_h_witness_ok(G, H, verdict.witness)
    if kind == "quasinormal":
        if verdict.holds:
            return True
        return quasinormal_counterexample_ok(G, H, verdict.witness, verdict.counterexample)
    raise ValueError(f"no replay for {kind!r}")
