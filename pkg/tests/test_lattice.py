import random

import pytest

from hclab.errors import NotPGroup, OrderCapExceeded
from hclab.config import caps_override
from hclab.group import Group, conjugate_subgroup, generated_subgroup, is_normal, quotient, subgroup_as_group
from hclab.lattice import (
    all_subgroups,
    centralizer,
    frattini,
    maximal_subgroups,
    minimal_normal_subgroups,
    normal_closure,
    normal_core,
    normal_subgroups,
    normalizer,
    o_p,
    o_p_prime,
    o_upper_p,
    omega,
    p_radicals,
    prime_factors,
    socle,
    sylow_subgroup,
    sylow_subgroups,
)

from conftest import el, grp, sub
from oracles import brute_normal_subgroups, brute_subgroups


def small(corpus, limit=60):
    return [G for G in corpus if G.order <= limit]


@pytest.mark.parametrize("spec,count", [("S4", 30), ("A4", 10), ("D8", 10), ("Q8", 6)])
def test_subgroup_counts_match_brute_force(spec, count):
    G = grp(spec)
    lattice = {frozenset(H.members) for H in all_subgroups(G)}
    assert len(all_subgroups(G)) == count
    assert lattice == brute_subgroups(G)


def test_trivial_and_prime_order_lattices():
    assert len(all_subgroups(grp("C1"))) == 1
    for p in (2, 3, 5, 7, 11):
        assert len(all_subgroups(grp(f"C{p}"))) == 2


def test_s5_and_a5_counts():
    assert len(all_subgroups(grp("S5"))) == 156
    assert len(all_subgroups(grp("A5"))) == 59


def test_lattice_complete_against_random_generation(corpus):
    rng = random.Random(20261018)
    for G in corpus:
        known = {H.bits for H in all_subgroups(G)}
        for _ in range(1000):
            pair = [rng.randrange(G.order), rng.randrange(G.order)]
            assert generated_subgroup(G, pair).bits in known


def test_lattice_is_canonically_ordered_and_unique(corpus):
    for G in corpus:
        subs = all_subgroups(G).subgroups
        keys = [H.key for H in subs]
        assert keys == sorted(keys) and len(set(keys)) == len(keys)


def test_lattice_cap():
    with caps_override(lattice=60), pytest.raises(OrderCapExceeded):
        all_subgroups(Group(grp("S5").table, "uncached S5"))


def test_selector_round_trip():
    L = all_subgroups(grp("S4"))
    for H in L:
        parts = dict(p.split("=") for p in L.selector(H).split(","))
        assert L.select(int(parts["order"]), int(parts["index"])) == H


def test_normalizer_examples():
    G = grp("S4")
    assert normalizer(G, G.whole) == G.whole
    V4 = next(N for N in normal_subgroups(G) if N.size == 4)
    assert normalizer(G, V4) == G.whole
    assert normalizer(G, sub(G, "(12)")) == sub(G, "(12)", "(34)")


def test_centralizer_examples():
    assert centralizer(grp("C6"), [1]) == grp("C6").whole
    S3 = grp("S3")
    C3 = sub(S3, "(123)")
    assert centralizer(S3, C3) == C3
    assert centralizer(grp("Q8"), grp("Q8").whole).size == 2


def test_core_examples():
    G = grp("S4")
    assert normal_core(G, sub(G, "(12)")).is_trivial
    P = sylow_subgroup(G, 2)
    assert normal_core(G, P).size == 4 and is_normal(G, normal_core(G, P))


def test_closure_examples():
    G = grp("S4")
    assert normal_closure(G, sub(G, "(12)")) == G.whole
    A = grp("A4")
    assert normal_closure(A, sub(A, "(12)(34)")).size == 4


def test_sylow_examples():
    G = grp("S4")
    assert sylow_subgroup(G, 2).size == 8
    assert len(sylow_subgroups(G, 2)) == 3
    S3 = grp("S3")
    P3 = sylow_subgroup(S3, 3)
    assert P3 == sub(S3, "(123)") and is_normal(S3, P3)


def test_sylow_theorems_on_corpus(corpus):
    for G in corpus:
        for p in prime_factors(G.order):
            syl = sylow_subgroups(G, p)
            assert len(syl) % p == 1
            P = syl[0]
            assert {conjugate_subgroup(G, P, g) for g in G.elements()} == set(syl)
            assert sylow_subgroup(G, p) == min(syl, key=lambda S: S.key)


def test_normalizer_and_centralizer_invariants(corpus):
    for G in small(corpus):
        for H in all_subgroups(G):
            N = normalizer(G, H)
            C = centralizer(G, H)
            assert H <= N and C <= N
            Ng, emb = subgroup_as_group(G, N)
            assert is_normal(Ng, emb.preimage(C))


def test_core_and_closure_sandwich(corpus):
    for G in small(corpus):
        for H in all_subgroups(G):
            core, clo = normal_core(G, H), normal_closure(G, H)
            assert core <= H <= clo
            assert is_normal(G, core) and is_normal(G, clo)


def test_normal_subgroups_match_brute_force(corpus):
    for G in corpus:
        if G.order > 24:
            continue
        assert {frozenset(N.members) for N in normal_subgroups(G)} == set(brute_normal_subgroups(G))


def test_normal_subgroups_agree_with_lattice_flags(corpus):
    for G in corpus:
        flagged = {H.bits for H in all_subgroups(G).normal}
        assert flagged == {N.bits for N in normal_subgroups(G)}


def test_maximal_subgroups_examples():
    assert [M.size for M in maximal_subgroups(grp("C7"))] == [1]
    D8 = maximal_subgroups(grp("D8"))
    assert len(D8) == 3 and all(M.size == 4 for M in D8)
    assert {M.size for M in maximal_subgroups(grp("S4"))} == {12, 8, 6}


def test_frattini_examples():
    assert frattini(grp("EA(2,3)")).is_trivial
    Q = grp("Q8")
    assert frattini(Q) == centralizer(Q, Q.whole)
    assert frattini(grp("S4")).is_trivial


def test_frattini_in_every_maximal(corpus):
    for G in corpus:
        phi = frattini(G)
        assert is_normal(G, phi)
        assert all(phi <= M for M in maximal_subgroups(G))


def test_frattini_of_subgroup_argument():
    G = grp("S4")
    P = sylow_subgroup(G, 2)
    assert frattini(P).size == 2


def test_minimal_normal_and_socle():
    A5 = grp("A5")
    assert socle(A5) == A5.whole
    G = grp("S4")
    mins = minimal_normal_subgroups(G)
    assert [N.size for N in mins] == [4] and socle(G) == mins[0]
    C6 = grp("C6")
    assert sorted(N.size for N in minimal_normal_subgroups(C6)) == [2, 3]
    assert socle(C6) == C6.whole


def test_p_radicals_examples():
    P = grp("D8")
    Op, Opp, Oup = p_radicals(P, 2)
    assert Op == P.whole and Opp.is_trivial and Oup.is_trivial
    S3 = grp("S3")
    C3 = sub(S3, "(123)")
    assert o_p(S3, 2).is_trivial and o_p_prime(S3, 2) == C3 and o_upper_p(S3, 2) == C3
    assert o_upper_p(S3, 3) == S3.whole


def _o_upper_p_by_generation(G, p):
    orders = G.element_orders
    return generated_subgroup(G, [x for x in G.elements() if orders[x] % p])


def test_radical_invariants(corpus):
    for G in corpus:
        for p in prime_factors(G.order):
            assert o_p_prime(G, p).size % p
            Oup = o_upper_p(G, p)
            Q, _ = quotient(G, Oup)
            assert prime_factors(Q.order) in ([], [p])
            assert Oup == _o_upper_p_by_generation(G, p)


def test_omega_examples():
    E = grp("EA(3,2)")
    assert omega(E, 3, 1) == E.whole
    Q = grp("Q8")
    assert omega(Q, 2, 1).size == 2 and omega(Q, 2, 2) == Q.whole
    C8 = grp("C8")
    assert omega(C8, 2, 1).size == 2 and omega(C8, 2, 2).size == 4


def test_omega_rejects_non_p_groups():
    with pytest.raises(NotPGroup):
        omega(grp("S3"), 2, 1)
