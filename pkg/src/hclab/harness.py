"""Executable hypothesis => conclusion checks for registered statements, run
exhaustively over a corpus of groups.

Each :class:`Statement` enumerates its parameter tuples on a group, evaluates
the hypothesis, and evaluates the conclusion when the hypothesis holds (or
always, in diagnostic mode). A tuple is a FAIL exactly when the hypothesis
holds and the conclusion does not.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from . import config as _config
from .classes import (
    Formation,
    has_sylow_tower_supersolvable_type,
    in_formation,
    is_abelian,
    is_cyclic,
    is_nilpotent,
    is_p_nilpotent,
    is_quasinilpotent,
    is_solvable,
)
from .corpus import CORPUS_VERSION, standard_corpus
from .embedding import (
    hc_mutation,
    is_c_normal,
    is_h_subgroup,
    is_hc_subgroup,
    is_quasinormal_in,
    is_subnormal,
)
from .errors import OrderCapExceeded
from .group import Group, Subgroup, is_normal, join, product_size, quotient, subgroup_as_group
from .lattice import (
    all_subgroups,
    centralizer,
    frattini,
    is_p_power,
    is_prime,
    maximal_subgroups,
    normal_closure,
    normal_subgroups,
    normalizer,
    omega,
    p_part,
    prime_factors,
    prime_of_p_group,
    o_upper_p,
    sylow_subgroup,
)
from .series import center, fitting, generalized_fitting, hypercenter, is_chief_factor

Params = dict
Outcome = tuple[bool, dict]

VERDICTS = ("pass", "vacuous", "FAIL", "skipped")


@dataclass(frozen=True)
class Statement:
    id: str
    domain: str
    tuples: Callable[[Group], Iterable[Params]]
    hypothesis: Callable[[Group, Params], Outcome]
    conclusion: Callable[[Group, Params], Outcome]
    must_be_nonvacuous: bool = True


@dataclass
class StatementCheck:
    statement: str
    group: str
    params: dict
    hypothesis_holds: bool | None
    conclusion_holds: bool | None
    verdict: str
    witness: dict
    raw_params: Params | None = field(default=None, repr=False, compare=False)

    def record(self) -> dict:
        return {
            "statement": self.statement,
            "group": self.group,
            "params": self.params,
            "verdict": self.verdict,
            "witness": self.witness,
        }


# Rendering


def render(G: Group, value):
    """JSON-friendly form; subgroups of G become lattice selectors."""
    if isinstance(value, Subgroup):
        if value.parent is G:
            try:
                return all_subgroups(G).selector(value)
            except OrderCapExceeded:
                return f"order={value.size},bits={value.bits:#x}"
        return f"order={value.size}"
    if isinstance(value, Formation):
        return value.value
    if isinstance(value, dict):
        return {str(k): render(G, v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [render(G, v) for v in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    return str(value)


# Shared building blocks


def _lattice(G: Group):
    return all_subgroups(G).subgroups


def _within(G: Group, X: Subgroup) -> list[Subgroup]:
    return [S for S in _lattice(G) if S <= X]


def _quotient(G: Group, N: Subgroup):
    memo = G._cache.setdefault("quotients", {})
    hit = memo.get(N.bits)
    if hit is None:
        hit = memo[N.bits] = quotient(G, N)
    return hit


def _local(G: Group, K: Subgroup, H: Subgroup):
    """(K as a group, H re-indexed inside it)."""
    Kg, emb = subgroup_as_group(G, K)
    return Kg, emb.preimage(H)


def _fstar_of(G: Group, E: Subgroup) -> Subgroup:
    Eg, emb = subgroup_as_group(G, E)
    return emb.image(generalized_fitting(Eg))


def _sylow_of(G: Group, X: Subgroup, p: int) -> Subgroup:
    Xg, emb = subgroup_as_group(G, X)
    return emb.image(sylow_subgroup(Xg, p))


def _centralizes(G: Group, g: int, X: Subgroup) -> bool:
    t = G.table
    return all(t[g][x] == t[x][g] for x in X.gens)


def _hc(G, H) -> bool:
    return is_hc_subgroup(G, H).holds


def _has_cyclic4_section(G: Group, H: Subgroup, d1: int) -> bool:
    """Some D1 normal in H with |D1| = d1 and H/D1 cyclic of order 4."""
    if H.size != 4 * d1:
        return False
    t = G.table
    for D1 in _within(G, H):
        if D1.size != d1 or not H <= normalizer(G, D1):
            continue
        if any(not D1.bits >> t[x][x] & 1 for x in H.members):
            return True
    return False


def d_condition(G: Group, P: Subgroup, d: int) -> Outcome:
    """All subgroups of P of order d are HC in G; for p = 2 and |P|/d > 2 the
    order-2d subgroups with a cyclic-of-order-4 section over some normal D1 of
    order d/2 must be HC as well."""
    inside = _within(G, P)
    for H in inside:
        if H.size == d and not _hc(G, H):
            return False, {"d": d, "not_hc": H}
    if P.size % 2 == 0 and P.size // d > 2:
        for H in inside:
            if H.size == 2 * d and _has_cyclic4_section(G, H, d // 2) and not _hc(G, H):
                return False, {"d": d, "not_hc_order_2d": H}
    return True, {"d": d}


def hc_layer(G: Group, P: Subgroup) -> Outcome:
    """P is cyclic, or some order d with 1 < d < |P| satisfies :func:`d_condition`."""
    if is_cyclic(P):
        return True, {"cyclic": P}
    p = prime_of_p_group(P.size)
    failures = []
    d = p
    while d < P.size:
        ok, w = d_condition(G, P, d)
        if ok:
            return True, {"P": P, **w}
        failures.append(w)
        d *= p
    return False, {"P": P, "failures": failures}


def _all_layers(G: Group, X: Subgroup) -> Outcome:
    """:func:`hc_layer` for one Sylow subgroup of X per prime (noncyclic ones matter)."""
    layers = []
    for p in prime_factors(X.size):
        P = _sylow_of(G, X, p)
        ok, w = hc_layer(G, P)
        if not ok:
            return False, {"p": p, **w}
        if "d" in w:
            layers.append({"p": p, "d": w["d"]})
    return True, {"layers": layers}


def _true(G, P) -> Outcome:
    return True, {}


# Tuple generators


def _all_h(G):
    for H in _lattice(G):
        yield {"H": H}


def _pairs_h_le_k(G):
    for K in _lattice(G):
        for H in _within(G, K):
            yield {"H": H, "K": K}


def _normal_below_h(G):
    for N in normal_subgroups(G):
        for H in _lattice(G):
            if N <= H:
                yield {"H": H, "N": N}


def _p_subgroups(G, include_trivial=False):
    for H in _lattice(G):
        p = prime_of_p_group(H.size)
        if p is not None:
            yield H, p
        elif include_trivial and H.is_trivial:
            yield H, None


def _smallest_prime_sylow(G):
    if G.order > 1:
        p = prime_factors(G.order)[0]
        yield {"p": p, "P": sylow_subgroup(G, p)}


def _formation_normals(G):
    for form in Formation:
        for E in normal_subgroups(G):
            if in_formation(_quotient(G, E)[0], form):
                yield {"E": E, "formation": form}


def _nilpotent_quotient_normals(G):
    for E in normal_subgroups(G):
        if is_nilpotent(_quotient(G, E)[0]):
            yield {"E": E}


def _single(G):
    yield {}


# Statement bodies


def _l2_1_1_h(G, a):
    h = is_h_subgroup(G, a["H"]).holds
    s = is_subnormal(G, a["H"])
    return h and s, {"h_subgroup": h, "subnormal": s}


def _l2_1_2_c(G, a):
    Kg, Hk = _local(G, a["K"], a["H"])
    v = is_h_subgroup(Kg, Hk)
    return v.holds, {"counterexample": list(v.counterexample)} if v.counterexample else {}


def _l2_1_3_c(G, a):
    Q, proj = _quotient(G, a["N"])
    lhs = is_h_subgroup(G, a["H"]).holds
    rhs = is_h_subgroup(Q, proj.image(a["H"])).holds
    return lhs == rhs, {"in_G": lhs, "in_quotient": rhs}


def _l2_1_4_tuples(G):
    for H in _lattice(G):
        NH = normalizer(G, H)
        for N in normal_subgroups(G):
            if N <= NH:
                yield {"H": H, "N": N}


def _l2_1_4_c(G, a):
    H, N = a["H"], a["N"]
    HN = join(G, H, N)
    same = normalizer(G, HN) == normalizer(G, H)
    h = is_h_subgroup(G, HN).holds
    return same and h, {"normalizers_equal": same, "HN_h_subgroup": h, "HN": HN}


def _l2_2_1_c(G, a):
    Kg, Hk = _local(G, a["K"], a["H"])
    v = is_hc_subgroup(Kg, Hk)
    return v.holds, {"T_in_K": v.witness.size} if v.witness is not None else {}


def _l2_2_2_c(G, a):
    Q, proj = _quotient(G, a["N"])
    lhs = _hc(G, a["H"])
    rhs = _hc(Q, proj.image(a["H"]))
    return lhs == rhs, {"in_G": lhs, "in_quotient": rhs}


def _l2_2_3_tuples(G):
    for H, p in _p_subgroups(G):
        for N in normal_subgroups(G):
            if N.size % p:
                yield {"H": H, "p": p, "N": N}


def _l2_2_3_c(G, a):
    H, N = a["H"], a["N"]
    HN = join(G, H, N)
    Q, proj = _quotient(G, N)
    in_g = _hc(G, HN)
    in_q = _hc(Q, proj.image(HN))
    return in_g and in_q, {"HN": HN, "HN_hc_in_G": in_g, "HN/N_hc_in_G/N": in_q}


def _l23_h(G, a):
    for M in maximal_subgroups(a["P"]):
        if not _hc(G, M):
            return False, {"not_hc": M}
    return True, {}


def _pnil_c(G, a):
    return is_p_nilpotent(G, a["p"]), {}


def _l24_tuples(G):
    for S in _lattice(G):
        if is_p_power(S.size, 2):
            yield {"S": S}


def _l24_h(G, a):
    S = a["S"]
    ratio = normalizer(G, S).size // centralizer(G, S).size
    h = is_h_subgroup(G, S).holds
    return h and is_p_power(ratio, 2), {"h_subgroup": h, "N/C_order": ratio}


def _l24_c(G, a):
    S = a["S"]
    closure = normal_closure(G, S)
    return S.size == p_part(closure.size, 2), {"closure": closure}


def _l251_tuples(G):
    for p in prime_factors(G.order):
        if p > 2:
            yield {"p": p, "P": sylow_subgroup(G, p)}


def _l251_h(G, a):
    P, p = a["P"], a["p"]
    N = normalizer(G, P)
    Z = centralizer(G, N) & N
    for X in _within(G, P):
        if X.size == p and not X <= Z:
            return False, {"outside_center": X}
    return True, {}


def _l252_tuples(G):
    if G.order % 2 == 0:
        yield {"p": 2, "P": sylow_subgroup(G, 2)}


def _l252_h(G, a):
    P = a["P"]
    N = normalizer(G, P)
    for X in _within(G, P):
        if X.size in (2, 4) and is_cyclic(X) and not is_quasinormal_in(N, X).holds:
            return False, {"not_quasinormal": X}
    return True, {}


def _normals(G):
    for N in normal_subgroups(G):
        yield {"N": N}


def _l261_c(G, a):
    N = a["N"]
    lhs = _fstar_of(G, N)
    rhs = N & generalized_fitting(G)
    return lhs == rhs, {"F*(N)": lhs, "N&F*(G)": rhs}


def _l262_c(G, a):
    F, Fs = fitting(G), generalized_fitting(G)
    idem = _fstar_of(G, Fs) == Fs
    solv = is_solvable(Fs)
    ok = F <= Fs and idem and (not solv or Fs == F)
    return ok, {"F<=F*": F <= Fs, "F*(F*)=F*": idem, "F*_solvable": solv}


def _l263_c(G, a):
    C = centralizer(G, generalized_fitting(G))
    return C <= fitting(G), {"C_G(F*)": C}


def _l264_h(G, a):
    return G.order > 1, {}


def _l264_c(G, a):
    Fs = generalized_fitting(G)
    qn = [N for N in normal_subgroups(G) if is_quasinilpotent(N)]
    largest = max(qn, key=lambda N: N.size)
    ok = not Fs.is_trivial and largest == Fs and all(N <= Fs for N in qn)
    return ok, {"F*": Fs, "largest_normal_quasinilpotent": largest}


def _l27_tuples(G):
    for K in normal_subgroups(G):
        for H in _within(G, K):
            if K <= normalizer(G, H):
                yield {"K": K, "H": H}


def _l27_h(G, a):
    return _hc(G, a["H"]), {}


def _l27_c(G, a):
    v = is_c_normal(G, a["H"])
    return v.holds, {"K_witness": v.witness} if v.witness is not None else {}


def _l28_tuples(G):
    for H, p in _p_subgroups(G):
        yield {"H": H, "p": p}


def _l28_h(G, a):
    hc = _hc(G, a["H"])
    h = is_h_subgroup(G, a["H"]).holds
    return hc and not h, {"hc": hc, "h": h}


def _l28_c(G, a):
    H, p = a["H"], a["p"]
    for M in normal_subgroups(G):
        if M.size * p == G.order and product_size(H, M) == G.order:
            return True, {"M": M}
    return False, {}


def _l29_tuples(G):
    for form in Formation:
        for E in normal_subgroups(G):
            if is_cyclic(E):
                yield {"E": E, "formation": form}


def _quotient_in_formation(G, a) -> Outcome:
    return in_formation(_quotient(G, a["E"])[0], a["formation"]), {}


def _g_in_formation(G, a) -> Outcome:
    return in_formation(G, a["formation"]), {}


def _l210_tuples(G):
    for form in Formation:
        for M in _lattice(G):
            if is_prime(G.order // M.size):
                yield {"M": M, "p": G.order // M.size, "formation": form}


def _l210_h(G, a):
    M = a["M"]
    f_out = not fitting(G) <= M
    m_in = in_formation(M, a["formation"])
    return f_out and m_in, {"F(G)_not_in_M": f_out, "M_in_formation": m_in}


def _l211_tuples(G):
    for L in normal_subgroups(G):
        if L.is_trivial:
            continue
        phi = frattini(L)
        if is_chief_factor(G, phi, L):
            for H in _within(G, L):
                yield {"L": L, "H": H}


def _l211_c(G, a):
    v = is_h_subgroup(G, a["H"])
    return v.holds, {"counterexample": list(v.counterexample)} if v.counterexample else {}


def _l212_tuples(G):
    for P in normal_subgroups(G):
        p = prime_of_p_group(P.size)
        if p is not None:
            yield {"P": P, "p": p}


def _l212_h(G, a):
    return a["P"] <= hypercenter(G), {}


def _l212_c(G, a):
    Op = o_upper_p(G, a["p"])
    return Op <= centralizer(G, a["P"]), {"O^p": Op}


def _l213_tuples(G):
    orders = G.element_orders
    for P, p in _p_subgroups(G):
        for g in normalizer(G, P).members:
            if orders[g] % p:
                yield {"P": P, "p": p, "g": g}


def _l213_h(G, a):
    P, p, g = a["P"], a["p"], a["g"]
    o1 = _centralizes(G, g, omega(P, p, 1))
    o2 = _centralizes(G, g, omega(P, p, 2))
    exempt = p == 2 and not is_abelian(P)
    return (o1 and not exempt) or o2, {"centralizes_omega1": o1, "centralizes_omega2": o2, "nonabelian_2_group": exempt}


def _l213_c(G, a):
    return _centralizes(G, a["g"], a["P"]), {}


def _t31_h(G, a):
    return hc_layer(G, a["P"])


def _c32_h(G, a):
    return _all_layers(G, G.whole)


def _c32_c(G, a):
    return has_sylow_tower_supersolvable_type(G), {}


def _t33_h(G, a):
    return _all_layers(G, _fstar_of(G, a["E"]))


def _t34_h(G, a):
    return _all_layers(G, a["E"])


def _minimal_and_four(G, X: Subgroup) -> Outcome:
    Z = hypercenter(G)
    for S in _within(G, X):
        if is_prime(S.size) and not S <= Z:
            return False, {"minimal_outside_hypercenter": S}
    for S in _within(G, X):
        if S.size == 4 and is_cyclic(S) and not _hc(G, S):
            return False, {"cyclic4_not_hc": S}
    return True, {}


def _t35_h(G, a):
    return _minimal_and_four(G, a["E"])


def _t36_h(G, a):
    return _minimal_and_four(G, _fstar_of(G, a["E"]))


def _nilpotent_c(G, a):
    return is_nilpotent(G), {}


STATEMENTS: list[Statement] = [
    Statement("L2.1.1", "H <= G", _all_h, _l2_1_1_h, lambda G, a: (is_normal(G, a["H"]), {})),
    Statement("L2.1.2", "H <= K <= G", _pairs_h_le_k, lambda G, a: (is_h_subgroup(G, a["H"]).holds, {}), _l2_1_2_c),
    Statement("L2.1.3", "N normal in G, N <= H", _normal_below_h, _true, _l2_1_3_c),
    Statement("L2.1.4", "N normal in G, N <= N_G(H)", _l2_1_4_tuples, lambda G, a: (is_h_subgroup(G, a["H"]).holds, {}), _l2_1_4_c),
    Statement("L2.2.1", "H <= K <= G", _pairs_h_le_k, lambda G, a: (_hc(G, a["H"]), {}), _l2_2_1_c),
    Statement("L2.2.2", "N normal in G, N <= H", _normal_below_h, _true, _l2_2_2_c),
    Statement("L2.2.3", "H a p-subgroup, N normal of p'-order", _l2_2_3_tuples, lambda G, a: (_hc(G, a["H"]), {}), _l2_2_3_c),
    Statement("L2.3", "p smallest prime, P Sylow", _smallest_prime_sylow, _l23_h, _pnil_c, must_be_nonvacuous=False),
    Statement("L2.4", "S a 2-subgroup", _l24_tuples, _l24_h, _l24_c, must_be_nonvacuous=False),
    Statement("L2.5.1", "p odd, P Sylow", _l251_tuples, _l251_h, _pnil_c),
    Statement("L2.5.2", "p = 2, P Sylow", _l252_tuples, _l252_h, _pnil_c),
    Statement("L2.6.1", "N normal in G", _normals, _true, _l261_c),
    Statement("L2.6.2", "G", _single, _true, _l262_c),
    Statement("L2.6.3", "G", _single, _true, _l263_c),
    Statement("L2.6.4", "G", _single, _l264_h, _l264_c),
    Statement("L2.7", "H normal in K normal in G", _l27_tuples, _l27_h, _l27_c),
    Statement("L2.8", "H a p-subgroup", _l28_tuples, _l28_h, _l28_c),
    Statement("L2.9", "E cyclic normal, formation", _l29_tuples, _quotient_in_formation, _g_in_formation),
    Statement("L2.10", "|G:M| = p, formation", _l210_tuples, _l210_h, _g_in_formation),
    Statement("L2.11", "L/Phi(L) chief factor, H <= L", _l211_tuples, lambda G, a: (_hc(G, a["H"]), {}), _l211_c),
    Statement("L2.12", "P normal p-subgroup", _l212_tuples, _l212_h, _l212_c),
    Statement("L2.13", "P p-subgroup, g p'-element of N_G(P)", _l213_tuples, _l213_h, _l213_c, must_be_nonvacuous=False),
    Statement("T3.1", "p smallest prime, P Sylow", _smallest_prime_sylow, _t31_h, _pnil_c),
    Statement("C3.2", "G", _single, _c32_h, _c32_c),
    Statement("T3.3", "E normal, G/E in formation; Sylows of F*(E)", _formation_normals, _t33_h, _g_in_formation),
    Statement("T3.4", "E normal, G/E in formation; Sylows of E", _formation_normals, _t34_h, _g_in_formation),
    Statement("T3.5", "E normal, G/E nilpotent; subgroups of E", _nilpotent_quotient_normals, _t35_h, _nilpotent_c),
    Statement("T3.6", "E normal, G/E nilpotent; subgroups of F*(E)", _nilpotent_quotient_normals, _t36_h, _nilpotent_c),
]

REGISTRY: dict[str, Statement] = {s.id: s for s in STATEMENTS}


def evaluate_statement(stmt: Statement, G: Group, params: Params, *, diagnostic: bool = False) -> StatementCheck:
    try:
        hyp, hw = stmt.hypothesis(G, params)
        concl, cw = None, {}
        if hyp or diagnostic:
            concl, cw = stmt.conclusion(G, params)
    except OrderCapExceeded as exc:
        return StatementCheck(stmt.id, G.name, render(G, params), None, None, "skipped",
                              {"reason": str(exc)}, params)
    if not hyp:
        verdict = "vacuous"
    elif concl:
        verdict = "pass"
    else:
        verdict = "FAIL"
    witness = {}
    if hw:
        witness["hypothesis"] = render(G, hw)
    if cw:
        witness["conclusion"] = render(G, cw)
    return StatementCheck(stmt.id, G.name, render(G, params), hyp, concl, verdict, witness, params)


def iter_checks(stmt: Statement, G: Group, *, diagnostic: bool = False) -> Iterator[StatementCheck]:
    try:
        tuples = list(stmt.tuples(G))
    except OrderCapExceeded as exc:
        yield StatementCheck(stmt.id, G.name, {}, None, None, "skipped", {"reason": str(exc)})
        return
    for params in tuples:
        yield evaluate_statement(stmt, G, params, diagnostic=diagnostic)


@dataclass(frozen=True)
class SuiteConfig:
    jobs: int = 1
    diagnostic: bool = False
    hc_mutation: str | None = None
    caps: _config.Caps | None = None


def _run_group(G: Group, ids: list[str], cfg: SuiteConfig) -> dict[str, list[StatementCheck]]:
    saved = _config.get_caps()
    if cfg.caps is not None:
        _config.set_caps(cfg.caps)
    out = {}
    try:
        with hc_mutation(cfg.hc_mutation):
            for sid in ids:
                out[sid] = list(iter_checks(REGISTRY[sid], G, diagnostic=cfg.diagnostic))
    finally:
        _config.set_caps(saved)
    for checks in out.values():
        for c in checks:
            c.raw_params = None if cfg.jobs > 1 else c.raw_params
    return out


@dataclass
class SuiteReport:
    statements: list[str]
    groups: list[str]
    checks: list[StatementCheck]
    wall_time: float
    corpus_version: str
    config: SuiteConfig

    def tallies(self) -> dict[str, Counter]:
        out = {sid: Counter({v: 0 for v in VERDICTS}) for sid in self.statements}
        for c in self.checks:
            out[c.statement][c.verdict] += 1
        return out

    def nonvacuity(self) -> dict[str, int]:
        out = {sid: 0 for sid in self.statements}
        for c in self.checks:
            if c.hypothesis_holds:
                out[c.statement] += 1
        return out

    def contrapositive(self) -> dict[str, int]:
        """Tuples where both conclusion and hypothesis are false (diagnostic mode)."""
        out = {sid: 0 for sid in self.statements}
        for c in self.checks:
            if c.hypothesis_holds is False and c.conclusion_holds is False:
                out[c.statement] += 1
        return out

    @property
    def failures(self) -> list[StatementCheck]:
        return [c for c in self.checks if c.verdict == "FAIL"]

    @property
    def skips(self) -> list[StatementCheck]:
        return [c for c in self.checks if c.verdict == "skipped"]

    @property
    def green(self) -> bool:
        return not self.failures

    def vacuous_statements(self) -> list[str]:
        nv = self.nonvacuity()
        return [sid for sid in self.statements if REGISTRY[sid].must_be_nonvacuous and nv[sid] == 0]

    def exit_code(self) -> int:
        if self.failures:
            return 1
        if self.skips:
            return 3
        return 0

    def to_records(self) -> str:
        return "".join(
            json.dumps(c.record(), sort_keys=True, separators=(",", ":")) + "\n" for c in self.checks
        )

    def to_text(self, by_group: bool = False) -> str:
        tallies, nv = self.tallies(), self.nonvacuity()
        lines = [
            f"corpus v{self.corpus_version}: {len(self.groups)} groups, {len(self.checks)} tuples, "
            f"{self.wall_time:.1f}s" + (f", mutation={self.config.hc_mutation}" if self.config.hc_mutation else ""),
            f"{'statement':<10}{'pass':>8}{'vacuous':>9}{'FAIL':>6}{'skipped':>9}{'hyp-true':>10}",
        ]
        for sid in self.statements:
            t = tallies[sid]
            lines.append(f"{sid:<10}{t['pass']:>8}{t['vacuous']:>9}{t['FAIL']:>6}{t['skipped']:>9}{nv[sid]:>10}")
            if by_group:
                per = {}
                for c in self.checks:
                    if c.statement == sid:
                        per.setdefault(c.group, Counter())[c.verdict] += 1
                for g in self.groups:
                    if g in per:
                        t = per[g]
                        lines.append(f"  {g:<14}{t['pass']:>6}{t['vacuous']:>9}{t['FAIL']:>6}{t['skipped']:>9}")
        for c in self.failures:
            lines.append(f"FAIL {c.statement} {c.group} {json.dumps(c.params, sort_keys=True)} "
                         f"{json.dumps(c.witness, sort_keys=True)}")
        for c in self.skips:
            lines.append(f"SKIP {c.statement} {c.group} {c.witness.get('reason', '')}")
        status = "GREEN" if self.green and not self.skips else ("FAIL" if self.failures else "YELLOW (skips)")
        lines.append(f"suite: {status}")
        return "\n".join(lines) + "\n"


def verify_suite(
    ids: Iterable[str] | None = None,
    corpus: list[Group] | None = None,
    cfg: SuiteConfig | None = None,
) -> SuiteReport:
    """Evaluate statements over a corpus. Output order is registry order, then
    corpus order, then tuple order, independent of ``cfg.jobs``."""
    cfg = cfg or SuiteConfig()
    ids = [s.id for s in STATEMENTS] if ids is None else list(ids)
    unknown = [i for i in ids if i not in REGISTRY]
    if unknown:
        raise KeyError(f"unknown statement ids: {unknown}")
    ids = [s.id for s in STATEMENTS if s.id in ids]
    groups = [G for _, G in standard_corpus()] if corpus is None else list(corpus)
    start = time.perf_counter()
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            per_group = list(pool.map(_run_group, groups, [ids] * len(groups), [cfg] * len(groups)))
    else:
        per_group = [_run_group(G, ids, cfg) for G in groups]
    checks = [c for sid in ids for result in per_group for c in result[sid]]
    return SuiteReport(ids, [G.name for G in groups], checks, time.perf_counter() - start, CORPUS_VERSION, cfg)


def replay_check(check: StatementCheck, G: Group) -> StatementCheck:
    """Re-evaluate one tuple on a cache-free copy of G."""
    fresh = Group(G.table, G.name, G.element_labels)
    params = {k: (Subgroup(fresh, v.bits) if isinstance(v, Subgroup) else v) for k, v in check.raw_params.items()}
    return evaluate_statement(REGISTRY[check.statement], fresh, params, diagnostic=True)
