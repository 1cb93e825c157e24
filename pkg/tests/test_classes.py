from hclab.classes import (
    Formation,
    has_sylow_tower_supersolvable_type,
    in_formation,
    is_minimal_nonnilpotent,
    is_nilpotent,
    is_nilpotent_by_sylows,
    is_p_nilpotent,
    is_quasinilpotent,
    is_solvable,
    is_supersolvable,
)
from hclab.group import direct_product
from hclab.lattice import prime_factors

from conftest import grp


def test_nilpotent_examples():
    assert is_nilpotent(grp("C27")) and is_nilpotent(grp("D16"))
    assert not is_nilpotent(grp("S3"))
    assert is_nilpotent(direct_product(grp("Q8"), grp("C3")))


def test_p_nilpotent_examples():
    assert is_p_nilpotent(grp("C9"), 2)
    assert is_p_nilpotent(grp("S3"), 2) and not is_p_nilpotent(grp("S3"), 3)
    assert not is_p_nilpotent(grp("S4"), 2)


def test_solvable_examples():
    assert is_solvable(grp("C12")) and is_solvable(grp("S4")) and not is_solvable(grp("A5"))


def test_supersolvable_examples():
    assert is_supersolvable(grp("S3")) and not is_supersolvable(grp("A4"))
    assert is_supersolvable(grp("D16"))


def test_sylow_tower_examples():
    assert has_sylow_tower_supersolvable_type(grp("C12"))
    assert has_sylow_tower_supersolvable_type(grp("S3"))
    assert not has_sylow_tower_supersolvable_type(grp("S4"))


def test_quasinilpotent_examples():
    assert is_quasinilpotent(grp("Q8"))
    assert is_quasinilpotent(grp("A5"))
    assert not is_quasinilpotent(grp("S4"))


def test_schmidt_examples():
    ok, d = is_minimal_nonnilpotent(grp("S3"))
    assert ok and (d.p, d.q, d.P.size, d.Q.size) == (3, 2, 3, 2)
    ok, d = is_minimal_nonnilpotent(grp("A4"))
    assert ok and d.P.size == 4 and d.Q.size == 3 and d.exponent_P == 2
    ok, d = is_minimal_nonnilpotent(grp("SL23"))
    assert ok and d.P.size == 8 and d.exponent_P == 4 and d.holds
    assert is_minimal_nonnilpotent(grp("S4")) == (False, None)
    assert not is_minimal_nonnilpotent(grp("Q8"))[0]


def test_formations():
    assert in_formation(grp("S3"), Formation.SUPERSOLVABLE)
    assert not in_formation(grp("A4"), Formation.SUPERSOLVABLE)
    assert in_formation(grp("A4"), Formation.SOLVABLE)
    for f in Formation:
        assert in_formation(grp("C1"), f)


def test_class_chain(corpus):
    for G in corpus:
        if is_nilpotent(G):
            assert is_supersolvable(G)
        if is_supersolvable(G):
            assert is_solvable(G)
        if is_quasinilpotent(G) and is_solvable(G):
            assert is_nilpotent(G)


def test_nilpotency_two_ways(corpus):
    for G in corpus:
        assert is_nilpotent(G) == is_nilpotent_by_sylows(G)


def test_p_nilpotent_for_all_primes_iff_nilpotent(corpus):
    for G in corpus:
        assert all(is_p_nilpotent(G, p) for p in prime_factors(G.order)) == is_nilpotent(G)


def test_schmidt_groups_in_corpus_have_verified_structure(corpus):
    for G in corpus:
        ok, d = is_minimal_nonnilpotent(G)
        if ok:
            assert d.holds, (G.name, d.checks)
