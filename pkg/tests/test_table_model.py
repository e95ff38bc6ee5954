import pytest
from hypothesis import given, settings, strategies as st

from bilindex.table_model import (
    ConfigError, TableConfig, VariantCellError, VariantReading, format_variant_cell,
    parse_sigla_config, parse_table, parse_variant_cell, serialize_table, swap_sides,
    validate,
)
from conftest import FIGURES, FIXTURES, load
from oracles import random_table_text

SLAV = TableConfig().slav


def test_phrase_1n_row():
    row = load("phrase_1n").rows[0]
    assert row.flags.slav_group and not row.flags.greek_group
    assert row.slav.lemma == "законъ"
    assert row.slav.chain == ("законъ", "законъ дати")
    assert (row.greek_word, row.greek_lemma) == ("νομοθετεῖν", "νομοθετέω")
    assert str(row.address) == "10/59a12"


def test_empty_input():
    table = parse_table("")
    assert table.rows == [] and not table.diagnostics


def test_short_record():
    table = parse_table("\t".join(["x"] * 19) + "\n")
    assert table.rows == []
    assert [d.message for d in table.diagnostics] == ["field count 19 ≠ 20"]
    assert table.diagnostics[0].severity == "error"


def test_bad_flag():
    fields = ["", "", "", "", "1/1a1", "слово", "", "слово", "", "", "", "λόγος", "λόγος"] + [""] * 7
    table = parse_table("\t".join(fields + ["sg;xx"]) + "\n")
    assert any("xx" in d.message for d in table.diagnostics)


def test_variant_cell_with_omission():
    assert parse_variant_cell("ѥдиночѧдꙑи WH / Ø G", SLAV) == [
        VariantReading("ѥдиночѧдꙑи", ("W", "H")), VariantReading("Ø", ("G",))]


def test_variant_cell_empty():
    assert parse_variant_cell("", SLAV) == []


@pytest.mark.parametrize("cell, message", [
    ("въ X", "unknown siglum X"),
    ("въ", "without sigla"),
])
def test_variant_cell_errors(cell, message):
    with pytest.raises(VariantCellError, match=message):
        parse_variant_cell(cell, SLAV)


def test_variant_lemma_count_mismatch():
    with pytest.raises(VariantCellError, match="segments"):
        parse_variant_cell("въ W / оу G", SLAV, ("въ / оу / къ",))


def test_variant_lemmas_for_non_omitted_only():
    readings = parse_variant_cell("ѥдиночѧдꙑи WH / Ø G", SLAV, ("ѥдиночѧдъ",))
    assert readings[0].lemmas == ("ѥдиночѧдъ",) and readings[1].omitted


def test_variant_cell_round_trip():
    cell = "ѥдинородьнаго H / иночѧдаго G"
    assert format_variant_cell(parse_variant_cell(cell, SLAV)) == cell


def test_multi_letter_sigla():
    greek = TableConfig().greek
    assert parse_variant_cell("παρ' CsCh", greek)[0].sigla == ("Cs", "Ch")


def test_sigla_sidecar():
    config = parse_sigla_config("slav S W\ngreek Cr C  # edition first\n")
    assert config.slav.main == "S" and config.slav.witnesses == ("W",)
    assert config.greek.sigla == ("Cr", "C")
    with pytest.raises(ConfigError):
        parse_sigla_config("latin A B\n")


@pytest.mark.parametrize("name", FIGURES)
def test_figures_validate_clean(name):
    assert list(validate(load(name))) == []


@pytest.mark.parametrize("name", FIGURES)
def test_serialize_round_trip(name):
    text = (FIXTURES / f"{name}.tsv").read_text(encoding="utf-8")
    assert serialize_table(parse_table(text)) == text


def test_unlemmatised_main_word():
    text = (FIXTURES / "phrase_1n.tsv").read_text(encoding="utf-8")
    fields = text.splitlines()[1].split("\t")
    fields[7] = ""  # H, the lemma of дати
    lines = text.splitlines()
    lines[1] = "\t".join(fields)
    diags = validate(parse_table("\n".join(lines) + "\n"))
    assert [(d.severity, d.column, d.message) for d in diags] == [("error", "H", "main word unlemmatised")]


def test_gramm_outside_group():
    fields = ["", "", "", "", "1/6b16", "ѥсть", "", "быти", "gramm.", "", "", "", "pass."] + [""] * 7
    diags = validate(parse_table("\t".join(fields) + "\n"))
    assert any(d.message == "'gramm.' outside a group" for d in diags.errors)


def test_variant_citing_main_witness():
    fields = ["въ S", "", "", "", "1/7d1", "оу", "", "оу", "", "", "", "παρ'", "παρά"] + [""] * 7
    diags = validate(parse_table("\t".join(fields) + "\n"))
    assert any("main witness S" in d.message for d in diags.errors)


def test_witness_prefix_sets_main():
    fields = ["въ S", "", "", "", "1/W7d1", "оу", "", "оу", "", "", "", "παρ'", "παρά"] + [""] * 7
    assert not validate(parse_table("\t".join(fields) + "\n")).errors


def test_single_flag_warning():
    fields = ["", "", "", "", "1/7d1", "оу", "", "оу", "", "", "", "παρ'", "παρά"] + [""] * 7 + ["sg"]
    diags = validate(parse_table("\t".join(fields) + "\n"))
    assert not diags.errors and len(diags.warnings) == 1


def test_empty_table_validates():
    assert list(validate(parse_table(""))) == []


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.booleans())
def test_generated_tables_valid_and_round_trip(seed, gramm):
    text = random_table_text(seed, gramm=gramm)
    table = parse_table(text)
    assert list(validate(table)) == []
    assert serialize_table(table) == text


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_swap_is_involution(seed):
    table = parse_table(random_table_text(seed, gramm=True))
    twice = swap_sides(swap_sides(table))
    assert twice.records == table.records and twice.config == table.config
