import pytest

from hclab.classes import is_cyclic, is_p_nilpotent, is_solvable, is_supersolvable
from hclab.corpus import (
    DEFAULT_SPECS,
    FIXTURES_DIR,
    dump_cayley_text,
    load_group,
    parse_cayley_text,
    parse_spec,
    realize,
    standard_corpus,
)
from hclab.errors import FileFormatError, InvalidAction, NotAssociative, OrderCapExceeded, SpecParseError
from hclab.config import caps_override
from hclab.group import is_isomorphic, subgroup_as_group
from hclab.lattice import all_subgroups, normal_subgroups, prime_factors, sylow_subgroup
from hclab.series import generalized_fitting

from conftest import grp


def table_text(rows, extra=""):
    return f"{len(rows)}\n" + "\n".join(" ".join(map(str, r)) for r in rows) + "\n" + extra


def test_realize_examples():
    assert realize("C1").order == 1
    Q = realize("Q8")
    assert Q.order == 8 and Q.element_orders.count(2) == 1
    assert set(all_subgroups(Q).subgroups) == set(normal_subgroups(Q))
    S = realize("SD(3,2,2)")
    assert S.order == 6 and not S.is_abelian and is_isomorphic(S, grp("S3"))


def test_invalid_action():
    with pytest.raises(InvalidAction):
        realize("SD(5,3,2)")


def test_realize_respects_cap():
    with caps_override(order=100), pytest.raises(OrderCapExceeded):
        realize("S5")


@pytest.mark.parametrize("text", ["C12", "D8", "Q8", "S4", "A5", "EA(3,2)", "SD(5,4,2)", "prod(C3,S3)", "Dic3", "SL23"])
def test_canonical_names_round_trip(text):
    spec = parse_spec(text)
    assert spec.canonical_name == text
    G = realize(spec)
    assert G.name == text and G.order == spec.expected_order


@pytest.mark.parametrize("text,pos", [("prod(C3", 7), ("X9", 0), ("EA(2)", 5), ("D7", 0), ("C12x", 3)])
def test_spec_parse_errors_report_position(text, pos):
    with pytest.raises(SpecParseError) as info:
        parse_spec(text)
    assert info.value.position == pos


def test_standard_corpus_contents():
    corpus = standard_corpus()
    names = [G.name for _, G in corpus]
    assert names == list(DEFAULT_SPECS) and len(names) == 35
    assert all(G.order <= 120 and G.order == spec.expected_order for spec, G in corpus)
    for want in ("S4", "S5", "A4", "A5", "SL23", "Q8", "Dic3", "SD(5,4,2)", "SD(7,3,2)"):
        assert want in names


def test_corpus_coverage():
    groups = {G.name: G for _, G in standard_corpus()}
    assert not is_supersolvable(groups["A4"]) and is_solvable(groups["A4"])
    assert not is_solvable(groups["A5"])
    for name in ("S4", "A4", "A5"):
        G = groups[name]
        assert not is_p_nilpotent(G, prime_factors(G.order)[0])
    for name in ("S4", "D16"):
        P = sylow_subgroup(groups[name], 2)
        assert P.size >= 8 and not is_cyclic(P)
    for name in ("SL23", "prod(C4,C2)"):
        G = groups[name]
        Fs = generalized_fitting(G)
        assert any(H.size == 4 and is_cyclic(H) and H <= Fs for H in all_subgroups(G))


def test_load_s3_table(tmp_path):
    S3 = grp("S3")
    path = tmp_path / "s3.cayley"
    path.write_text(table_text(S3.table, "name my S3\n"))
    G = load_group(path)
    assert G.name == "my S3" and is_isomorphic(G, S3)


def test_load_rejects_empty_group(tmp_path):
    path = tmp_path / "zero.cayley"
    path.write_text("0\n")
    with pytest.raises(FileFormatError) as info:
        load_group(path)
    assert info.value.line == 1


def test_load_rejects_non_associative_c4(tmp_path):
    # every order-4 Latin square with an identity is a group, so swap two
    # columns of C4 instead: a Latin square without identity or associativity
    rows = [[(a + b) % 4 for b in range(4)] for a in range(4)]
    for r in rows:
        r[2], r[3] = r[3], r[2]
    path = tmp_path / "bad.cayley"
    path.write_text(table_text(rows))
    with pytest.raises(NotAssociative):
        load_group(path)


def test_file_errors_carry_line_and_column():
    with pytest.raises(FileFormatError) as info:
        parse_cayley_text("2\n0 1\n1 x\n")
    assert (info.value.line, info.value.column) == (3, 2)
    with pytest.raises(FileFormatError) as info:
        parse_cayley_text("2\n0 1\n")
    with pytest.raises(FileFormatError):
        parse_cayley_text("2\n0 1\n1 0\nbogus line\n")


def test_dump_and_load_round_trip(tmp_path):
    G = grp("D10")
    path = tmp_path / "d10.cayley"
    path.write_text(dump_cayley_text(G))
    H = load_group(path)
    assert H.table == G.table and H.element_labels == G.element_labels and H.name == "D10"


def test_sl23_fixture():
    G = realize("file:fixtures/sl23.cayley")
    assert G.order == 24 and is_isomorphic(G, load_group(FIXTURES_DIR / "sl23.cayley"))
    Q, _ = subgroup_as_group(G, sylow_subgroup(G, 2))
    assert is_isomorphic(Q, grp("Q8"))
