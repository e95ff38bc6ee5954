import sys
from pathlib import Path

TESTS = Path(__file__).parent
sys.path.insert(0, str(TESTS))

FIXTURES = TESTS / "fixtures"
GOLDEN = TESTS / "golden"
FIGURES = ("variant_omission", "phrase_1n", "gramm_label", "phrase_nm", "multi_witness")


def load(name):
    from bilindex.table_model import parse_table
    return parse_table((FIXTURES / f"{name}.tsv").read_text(encoding="utf-8"))


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(module.RESULTS):
        title, ok, _ = module.RESULTS[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number:2d}: {title}")
