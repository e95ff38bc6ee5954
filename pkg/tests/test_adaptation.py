from hypothesis import given, settings, strategies as st

from bilindex.adaptation import Direction, adapt, group_rows, main_word_count, units
from bilindex.table_model import GRAMM, parse_table, swap_sides
from conftest import load
from oracles import random_table_text

SLGR, GRSL = Direction.SLGR, Direction.GRSL


def summary(a):
    return (a.source_usage.lemmas, a.target_usage.label(), str(a.address))


def test_phrase_1n_groups():
    groups = [g for g in group_rows(load("phrase_1n")) if g.is_phrase]
    assert [(g.side, len(g.rows)) for g in groups] == [("slav", 2)]


def test_phrase_nm_groups():
    groups = sorted((g.side, len(g.rows)) for g in group_rows(load("phrase_nm")) if g.is_phrase)
    assert groups == [("greek", 2), ("slav", 3)]
    assert len(units(load("phrase_nm"))) == 1


def test_phrase_1n_slgr():
    rows = adapt(load("phrase_1n"), SLGR)
    assert sorted(summary(a) for a in rows) == [
        (("дати", "законъ дати"), "νομοθετέω", "10/59a12-13"),
        (("законъ", "законъ дати"), "νομοθετέω", "10/59a12-13"),
    ]


def test_phrase_1n_grsl_decomposition():
    (a,) = adapt(load("phrase_1n"), GRSL)
    assert a.target_usage.decomposition == ("законъ", "дати")
    assert a.target_usage.label() == "законъ дати → законъ & дати"
    assert a.target_usage.word == "закона дати"


def test_gramm_label_grsl_pseudo_lemma():
    rows = adapt(load("gramm_label"), GRSL)
    assert sorted(summary(a) for a in rows) == [
        (("pass.",), "быти gramm.", "1/6b16"),
        (("λέγω",), "рещи", "1/6b16"),
    ]
    pseudo = [a for a in rows if a.pseudo_lemma]
    assert len(pseudo) == 1 and pseudo[0].target_usage.grammatical


def test_gramm_label_slgr_gramm_isolated():
    rows = {a.source_usage.lemma: a for a in adapt(load("gramm_label"), SLGR)}
    assert rows["быти"].source_usage.lemmas == ("быти", GRAMM)
    assert rows["быти"].target_usage.label() == "pass."
    # the lexical counterpart of рещи carries no grammatical material
    assert rows["рещи"].target_usage.label() == "λέγω"
    assert not rows["рещи"].target_usage.decomposition


def test_variant_omission_slgr():
    rows = adapt(load("variant_omission"), SLGR)
    assert len(rows) == 2
    main = next(a for a in rows if a.source_usage.is_main)
    var = next(a for a in rows if not a.source_usage.is_main)
    assert main.source_usage.lemma == "оу praep." and main.source_usage.sigla == ("S",)
    assert [(r.most_specific, r.sigla) for r in main.same_side_variants] == [("въ + Loc.", ("W", "G", "H"))]
    assert var.source_usage.sigla == ("W", "G", "H")
    assert var.counterpart_main_reading.most_specific == "оу + Gen."
    for a in rows:
        assert a.target_usage.sigla == ("C",) and a.target_usage.lemma == "παρά"


def test_variant_omission_grsl_single_lemma():
    rows = adapt(load("variant_omission"), GRSL)
    assert {a.source_usage.lemma for a in rows} == {"παρά"}
    assert all(not a.source_usage.is_main for a in rows)


def test_multi_witness_mutual_references():
    rows = [a for a in adapt(load("multi_witness"), SLGR) if str(a.address) == "1/5a4"]
    assert len(rows) == 2
    main = next(a for a in rows if a.source_usage.is_main)
    var = next(a for a in rows if not a.source_usage.is_main)
    assert [r.sigla for r in main.same_side_variants] == [("W", "H")]
    assert var.counterpart_main_reading.word == "иночѧдꙑи"


def test_multi_witness_three_readings():
    rows = [a for a in adapt(load("multi_witness"), SLGR) if str(a.address) == "1/W168a25"]
    assert sorted(a.source_usage.sigla for a in rows) == [("G",), ("H",), ("W",)]
    for a in rows:
        others = {r.sigla for r in a.same_side_variants}
        if a.counterpart_main_reading is not None:
            others.add(a.counterpart_main_reading.sigla)
        assert others == {("G",), ("H",), ("W",)} - {a.source_usage.sigla}


def test_single_row_copies_fields():
    fields = ["", "", "", "", "2/3b4", "слово", "ctx", "слово", "", "", "", "λόγος", "λόγος"] + [""] * 7
    table = parse_table("\t".join(fields) + "\n")
    for direction in Direction:
        (a,) = adapt(table, direction)
        assert a.source_usage.is_main and a.target_usage.is_main
        assert str(a.address) == "2/3b4"
        assert {a.source_usage.word, a.target_usage.word} == {"слово", "λόγος"}


def test_omitted_counterpart():
    fields = ["", "", "", "", "2/3b4", "слово", "", "слово", "", "", "", "om.", ""] + [""] * 7
    (a,) = adapt(parse_table("\t".join(fields) + "\n"), SLGR)
    assert a.target_usage.omitted and a.target_usage.label() == "om."
    assert adapt(parse_table("\t".join(fields) + "\n"), GRSL) == []


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_symmetry_without_gramm(seed):
    table = parse_table(random_table_text(seed))
    assert adapt(table, GRSL) == adapt(swap_sides(table), SLGR)


def test_gramm_directions_are_not_mirrors():
    table = load("gramm_label")
    slgr = next(a for a in adapt(table, SLGR) if a.source_usage.lemma == "быти")
    grsl = next(a for a in adapt(table, GRSL) if a.source_usage.lemma == "pass.")
    # a real word usage one way, a heading without any Greek word the other
    assert not slgr.pseudo_lemma and slgr.source_usage.is_main
    assert grsl.pseudo_lemma and not grsl.target_usage.is_phrase


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_swap_symmetry_with_gramm(seed):
    # the label moves with its column, so the swapped table mirrors exactly
    table = parse_table(random_table_text(seed, gramm=True))
    assert adapt(table, GRSL) == adapt(swap_sides(table), SLGR)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.booleans())
def test_adapt_is_pure(seed, gramm):
    table = parse_table(random_table_text(seed, gramm=gramm))
    records = table.records
    for direction in Direction:
        assert adapt(table, direction) == adapt(table, direction)
    assert table.records == records


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.booleans())
def test_main_usages_conserved(seed, gramm):
    table = parse_table(random_table_text(seed, gramm=gramm))
    for direction in Direction:
        main = {a.usage_key() for a in adapt(table, direction)
                if a.source_usage.is_main and not a.pseudo_lemma}
        assert len(main) == main_word_count(table, direction)
