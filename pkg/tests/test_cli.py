import io
import subprocess
import sys

import pytest

from bilindex.cli import RunConfig, main, run
from bilindex.table_model import ConfigError
from conftest import FIXTURES


def files(path):
    return sorted(p.name for p in path.iterdir()) if path.exists() else []


def test_generate_both_directions_plain(tmp_path):
    assert main([str(FIXTURES / "phrase_1n.tsv"), "--tool", "generate", "--out", str(tmp_path)]) == 0
    assert files(tmp_path) == ["phrase_1n.index.grsl.txt", "phrase_1n.index.slgr.txt"]


def test_all_outputs(tmp_path):
    assert main([str(FIXTURES / "multi_witness.tsv"), "--format", "both", "--out", str(tmp_path)]) == 0
    assert len(files(tmp_path)) == 8


def test_format_list(tmp_path):
    assert main([str(FIXTURES / "multi_witness.tsv"), "--format", "wordxml,plain", "--direction", "slgr",
                 "--tool", "integrate", "--out", str(tmp_path)]) == 0
    assert files(tmp_path) == ["multi_witness.list.slgr.txt", "multi_witness.list.slgr.xml"]


def unlemmatised(tmp_path):
    lines = (FIXTURES / "phrase_1n.tsv").read_text(encoding="utf-8").splitlines()
    fields = lines[1].split("\t")
    fields[7] = ""
    lines[1] = "\t".join(fields)
    path = tmp_path / "bad.tsv"
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path


def test_validation_error_writes_nothing(tmp_path):
    out = tmp_path / "out"
    err = io.StringIO()
    code = run(RunConfig(unlemmatised(tmp_path), out, strict=True), err)
    assert code == 1 and files(out) == []
    assert err.getvalue() == "error\t2\tH\tmain word unlemmatised\n"


def test_strict_warning(tmp_path):
    fields = ["", "", "", "", "1/7d1", "оу", "", "оу", "", "", "", "παρ'", "παρά"] + [""] * 7 + ["sg"]
    path = tmp_path / "warn.tsv"
    path.write_text("\t".join(fields) + "\n", encoding="utf-8")
    err = io.StringIO()
    assert run(RunConfig(path, tmp_path / "lax"), err) == 0
    assert err.getvalue().startswith("warning\t1\tF\t")
    assert run(RunConfig(path, tmp_path / "strict", strict=True), io.StringIO()) == 1
    assert files(tmp_path / "strict") == []


def test_missing_input(tmp_path):
    err = io.StringIO()
    assert run(RunConfig(tmp_path / "nope.tsv", tmp_path), err) == 2
    assert err.getvalue().startswith("error\t0\t-\t")


def test_bad_collation(tmp_path):
    bad = tmp_path / "bad.collation"
    bad.write_text("а\nа b\n", encoding="utf-8")
    assert main([str(FIXTURES / "phrase_1n.tsv"), "--collation-slav", str(bad), "--out", str(tmp_path)]) == 2


def test_custom_sigla(tmp_path):
    sigla = tmp_path / "sigla.txt"
    sigla.write_text("slav S W G H\ngreek Cr C Cs M Ch\n", encoding="utf-8")
    assert main([str(FIXTURES / "variant_omission.tsv"), "--sigla", str(sigla), "--out", str(tmp_path / "o")]) == 0


def test_both_equals_union(tmp_path):
    main([str(FIXTURES / "phrase_nm.tsv"), "--out", str(tmp_path / "both")])
    for d in ("slgr", "grsl"):
        main([str(FIXTURES / "phrase_nm.tsv"), "--direction", d, "--out", str(tmp_path / "single")])
    assert files(tmp_path / "both") == files(tmp_path / "single")
    for name in files(tmp_path / "both"):
        assert (tmp_path / "both" / name).read_bytes() == (tmp_path / "single" / name).read_bytes()


def test_requires_a_tool():
    with pytest.raises(ConfigError):
        RunConfig(FIXTURES / "phrase_1n.tsv", tools=())


def test_unknown_format():
    with pytest.raises(SystemExit):
        main([str(FIXTURES / "phrase_1n.tsv"), "--format", "pdf"])


def test_module_entry_point(tmp_path):
    done = subprocess.run([sys.executable, "-m", "bilindex", str(FIXTURES / "gramm_label.tsv"),
                           "--out", str(tmp_path)], capture_output=True)
    assert done.returncode == 0 and len(files(tmp_path)) == 4
