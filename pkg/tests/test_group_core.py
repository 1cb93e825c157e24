import itertools

import numpy as np
import pytest

from hclab.corpus import cyclic
from hclab.errors import IdentityNotZero, NotAssociative, NotLatinSquare, OrderCapExceeded
from hclab.config import caps_override
from hclab.group import (
    Subgroup,
    conjugate_subgroup,
    direct_product,
    element_order,
    from_cayley_table,
    generated_subgroup,
    is_isomorphic,
    is_normal,
    quotient,
)
from hclab.lattice import normal_subgroups

from conftest import el, grp, sub
from oracles import brute_conjugate, closure


def c6_with_broken_associativity():
    # swap the intercalate at rows/cols {1, 4}: stays Latin, loses associativity
    t = [[(a + b) % 6 for b in range(6)] for a in range(6)]
    t[1][1], t[1][4], t[4][1], t[4][4] = t[1][4], t[1][1], t[4][4], t[4][1]
    return t


def first_bad_triple(t):
    n = len(t)
    for a, b, c in itertools.product(range(n), repeat=3):
        if t[t[a][b]][c] != t[a][t[b][c]]:
            return a, b, c


def test_trivial_table():
    G = from_cayley_table([[0]])
    assert G.order == 1 and G.inverses == (0,)


def test_order_two_table_is_c2():
    G = from_cayley_table([[0, 1], [1, 0]])
    assert is_isomorphic(G, cyclic(2))


def test_non_associative_latin_square_names_the_triple():
    t = c6_with_broken_associativity()
    with pytest.raises(NotAssociative) as info:
        from_cayley_table(t)
    a, b, c = info.value.triple
    assert t[t[a][b]][c] != t[a][t[b][c]]
    assert info.value.triple == first_bad_triple(t)


def test_not_latin():
    with pytest.raises(NotLatinSquare):
        from_cayley_table([[0, 1], [1, 1]])


def test_identity_must_be_index_zero():
    # C2 with the identity stored at index 1
    with pytest.raises(IdentityNotZero):
        from_cayley_table([[1, 0], [0, 1]])


def test_entries_out_of_range():
    with pytest.raises(Exception):
        from_cayley_table([[0, 2], [2, 0]])


def test_numpy_input_accepted():
    G = from_cayley_table(np.array([[(a + b) % 4 for b in range(4)] for a in range(4)]))
    assert G.order == 4


def test_construction_cap():
    t = [[(a + b) % 8 for b in range(8)] for a in range(8)]
    with caps_override(order=4), pytest.raises(OrderCapExceeded):
        from_cayley_table(t)


def test_generated_from_empty_seed_is_trivial():
    G = grp("S4")
    assert generated_subgroup(G, []).is_trivial


def test_four_cycle_generates_order_four():
    G = grp("S4")
    assert sub(G, "(1234)").size == 4


def test_generation_matches_naive_closure():
    G = grp("S4")
    seed = [el(G, "(12)"), el(G, "(12)(34)")]
    assert set(generated_subgroup(G, seed).members) == closure(G, seed)


def test_generated_subgroup_idempotent(corpus):
    for G in corpus:
        for g in range(0, G.order, max(1, G.order // 7)):
            H = generated_subgroup(G, [g, G.order - 1])
            assert generated_subgroup(G, H.members) == H


def test_conjugation_by_identity_and_normal():
    G = grp("S4")
    H = sub(G, "(12)")
    assert conjugate_subgroup(G, H, 0) == H
    V4 = next(N for N in normal_subgroups(G) if N.size == 4)
    assert all(conjugate_subgroup(G, V4, g) == V4 for g in G.elements())


def test_conjugate_of_transposition():
    G = grp("S4")
    H = sub(G, "(12)")
    K = conjugate_subgroup(G, H, el(G, "(13)"))
    assert K == sub(G, "(23)")
    assert set(K.members) == brute_conjugate(G, H.members, el(G, "(13)"))


def test_conjugates_keep_size(corpus):
    from hclab.lattice import all_subgroups

    for G in corpus:
        if G.order > 24:
            continue
        for H in all_subgroups(G):
            assert all(conjugate_subgroup(G, H, g).size == H.size for g in G.elements())


def test_quotient_by_trivial_and_whole():
    G = grp("D12")
    Q, proj = quotient(G, G.trivial)
    assert Q.order == G.order and is_isomorphic(Q, G)
    assert list(proj.map) == list(range(G.order))
    Q1, _ = quotient(G, G.whole)
    assert Q1.order == 1


def test_s4_mod_v4_is_s3():
    G = grp("S4")
    V4 = next(N for N in normal_subgroups(G) if N.size == 4)
    Q, proj = quotient(G, V4)
    assert Q.order == 6 and not Q.is_abelian
    assert is_isomorphic(Q, grp("S3"))


def test_quotient_projection_is_homomorphism(corpus):
    for G in corpus:
        if G.order > 60:
            continue
        for N in normal_subgroups(G):
            Q, proj = quotient(G, N)
            m = proj.map
            assert all(m[G.table[a][b]] == Q.table[m[a]][m[b]] for a in G.elements() for b in G.elements())
            assert proj.kernel() == N


def test_quotient_is_deterministic():
    G = grp("S4")
    V4 = next(N for N in normal_subgroups(G) if N.size == 4)
    assert quotient(G, V4)[0].table == quotient(G, V4)[0].table


def test_direct_products():
    assert is_isomorphic(direct_product(grp("C1"), grp("S3")), grp("S3"))
    V = direct_product(grp("C2"), grp("C2"))
    assert all(element_order(V, x) == 2 for x in range(1, 4))
    C = direct_product(grp("C2"), grp("C3"))
    assert max(C.element_orders) == 6


def test_element_orders():
    assert element_order(grp("S4"), 0) == 1
    assert element_order(grp("C6"), 1) == 6
    Q = grp("Q8")
    noncentral = [x for x in Q.elements() if x not in (0, 2)]
    assert len(noncentral) == 6 and all(element_order(Q, x) == 4 for x in noncentral)


def test_element_order_divides_group_order(corpus):
    for G in corpus:
        assert all(G.order % element_order(G, x) == 0 for x in G.elements())


def test_isomorphism_basics():
    assert is_isomorphic(grp("A4"), grp("A4"))
    assert not is_isomorphic(grp("C4"), grp("EA(2,2)"))
    assert not is_isomorphic(grp("D8"), grp("Q8"))


def test_corpus_tables_are_groups(corpus):
    for G in corpus:
        T = np.array(G.table)
        rng = np.arange(G.order)
        assert (np.sort(T, axis=1) == rng).all() and (np.sort(T, axis=0) == rng[:, None]).all()
        # (ab)c == a(bc) for all triples, one row of a at a time
        assert all((T[T[a]] == T[a][T]).all() for a in range(G.order))
        assert all(G.table[a][G.inverses[a]] == 0 for a in G.elements())


def test_subgroup_checked_rejects_non_closed_sets():
    G = grp("S3")
    with pytest.raises(ValueError):
        Subgroup.checked(G, [0, 1, 2])


def test_is_normal_on_small_cases():
    G = grp("S3")
    assert is_normal(G, sub(G, "(123)"))
    assert not is_normal(G, sub(G, "(12)"))
