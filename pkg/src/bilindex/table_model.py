"""Annotation table: the 20-column TSV dialect, variant cells and validation.

Column layout (one record per word usage of the Slavonic main text)::

    A       B  C  D    E        F     G        H      I  J  K
    sl.var  sl.var.lemmas  address  word  context  lemma  sublemmas

    L      M      N  O  P     Q       R  S  T
    word   lemma  sublemmas   gr.var  gr.var.lemmas

An optional 21st field holds ``;``-separated style flags: ``sg`` (Slavonic
phrase group), ``gg`` (Greek phrase group), ``bq`` (biblical quotation).
A blank record separates adjacent phrase groups.
"""

from __future__ import annotations

import enum
import io
from dataclasses import dataclass, field, replace
from typing import Iterable, Iterator, Optional, TextIO, Union

from .addressing import Address, AddressError, parse_address, span

OMISSION = "om."
OMITTED = "Ø"
GRAMM = "gramm."
FLAG_TOKENS = ("sg", "gg", "bq")
FIELD_COUNT = 20

COLUMNS = "ABCDEFGHIJKLMNOPQRST"
FLAGS_COLUMN = "U"


class Language(enum.Enum):
    SLAVONIC = "slavonic"
    GREEK = "greek"

    @property
    def rank(self) -> int:
        return 0 if self is Language.SLAVONIC else 1


@dataclass(frozen=True)
class SideConfig:
    language: Language
    main: str
    witnesses: tuple[str, ...]

    @property
    def sigla(self) -> tuple[str, ...]:
        """All sigla of the side, main witness first."""
        return (self.main, *self.witnesses)

    def main_at(self, address: Optional[Address]) -> str:
        """Siglum of the base witness at an address.

        Witness-prefixed addresses locate text missing from the usual base
        witness and published after the prefixed copy instead.
        """
        if address is not None and address.witness_prefix in self.sigla:
            return address.witness_prefix
        return self.main

    def order(self, sigla: Iterable[str]) -> tuple[str, ...]:
        known = self.sigla
        return tuple(sorted(set(sigla), key=lambda s: (known.index(s) if s in known else len(known), s)))


SLAVONIC = SideConfig(Language.SLAVONIC, "S", ("W", "G", "H"))
GREEK = SideConfig(Language.GREEK, "Cr", ("C", "Cs", "M", "Ch"))


@dataclass(frozen=True)
class TableConfig:
    """Witness configuration of the left (A-K) and right (L-T) column blocks."""

    slav: SideConfig = SLAVONIC
    greek: SideConfig = GREEK

    def side(self, name: str) -> SideConfig:
        return getattr(self, name)

    def by_language(self, language: Language) -> SideConfig:
        return self.slav if self.slav.language is language else self.greek

    def swapped(self) -> "TableConfig":
        return TableConfig(self.greek, self.slav)


class ConfigError(ValueError):
    pass


def parse_sigla_config(text: str) -> TableConfig:
    """Read the sigla sidecar.

    One line per column block, ``slav`` or ``greek`` followed by sigla; the
    first siglum is the main witness::

        slav  S W G H
        greek Cr C Cs M Ch
    """
    sides = {}
    for number, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        name, *sigla = line.split()
        if name not in ("slav", "greek"):
            raise ConfigError(f"line {number}: unknown side {name!r}")
        if not sigla:
            raise ConfigError(f"line {number}: no sigla for {name}")
        if len(set(sigla)) != len(sigla):
            raise ConfigError(f"line {number}: repeated siglum")
        if name in sides:
            raise ConfigError(f"line {number}: side {name} given twice")
        language = Language.SLAVONIC if name == "slav" else Language.GREEK
        sides[name] = SideConfig(language, sigla[0], tuple(sigla[1:]))
    return TableConfig(sides.get("slav", SLAVONIC), sides.get("greek", GREEK))


# -- variant cells ---------------------------------------------------------

class VariantCellError(ValueError):
    pass


@dataclass(frozen=True)
class VariantReading:
    form: str
    sigla: tuple[str, ...]
    lemmas: tuple[str, ...] = ()

    @property
    def omitted(self) -> bool:
        return self.form == OMITTED

    @property
    def lemmatised(self) -> bool:
        return not self.omitted and bool(self.lemmas) and bool(self.lemmas[0])


def split_sigla(token: str, alphabet: Iterable[str]) -> tuple[str, ...]:
    """Tokenise a run of sigla such as ``WGH`` or ``CsM`` (longest match first)."""
    candidates = sorted(alphabet, key=len, reverse=True)
    out = []
    i = 0
    while i < len(token):
        for siglum in candidates:
            if token.startswith(siglum, i):
                out.append(siglum)
                i += len(siglum)
                break
        else:
            rest = token[i:]
            raise VariantCellError(f"unknown siglum {rest}")
    return tuple(out)


def _looks_like_sigla(token: str) -> bool:
    return token.isascii() and token[:1].isupper() and token.isalpha()


def parse_variant_cell(cell: str, config: SideConfig,
                       lemma_cells: tuple[str, ...] = ()) -> list[VariantReading]:
    """Parse ``reading SIGLA ( "/" reading SIGLA )*``.

    ``lemma_cells`` are the parallel lemma columns (lemma, first and second
    sublemma); each is split on ``/`` and attached reading by reading.  A
    lemma cell may instead carry one segment per non-omitted reading.
    """
    cell = cell.strip()
    if not cell:
        if any(c.strip() for c in lemma_cells):
            raise VariantCellError("variant lemmas without variant word")
        return []
    readings = []
    for segment in cell.split("/"):
        parts = segment.split()
        if not parts:
            raise VariantCellError("empty reading")
        if len(parts) < 2 or not _looks_like_sigla(parts[-1]):
            if parts[-1].isascii() and parts[-1].isalpha():
                split_sigla(parts[-1], config.sigla)
            raise VariantCellError(f"reading {segment.strip()!r} without sigla")
        sigla = split_sigla(parts[-1], config.sigla)
        if len(set(sigla)) != len(sigla):
            raise VariantCellError(f"repeated siglum in {parts[-1]!r}")
        readings.append(VariantReading(" ".join(parts[:-1]), config.order(sigla)))

    lexical = [i for i, r in enumerate(readings) if not r.omitted]
    per_reading: list[list[str]] = [[] for _ in readings]
    for level, lemma_cell in enumerate(lemma_cells):
        if not lemma_cell.strip():
            continue
        pieces = [p.strip() for p in lemma_cell.split("/")]
        if len(pieces) == len(readings):
            targets = range(len(readings))
        elif len(pieces) == len(lexical):
            targets = lexical
        else:
            raise VariantCellError(
                f"lemma cell has {len(pieces)} segments for {len(readings)} readings")
        for i, piece in zip(targets, pieces):
            slots = per_reading[i]
            slots.extend([""] * (level - len(slots)))
            slots.append(piece)
    return [replace(r, lemmas=_trim(tuple(ls))) for r, ls in zip(readings, per_reading)]


def format_variant_cell(readings: Iterable[VariantReading]) -> str:
    return " / ".join(f"{r.form} {''.join(r.sigla)}" for r in readings)


def _trim(values: tuple[str, ...]) -> tuple[str, ...]:
    values = list(values)
    while values and not values[-1]:
        values.pop()
    return tuple(values)


# -- rows ------------------------------------------------------------------

@dataclass(frozen=True)
class StyleFlags:
    slav_group: bool = False
    greek_group: bool = False
    biblical_quote: bool = False

    def tokens(self) -> list[str]:
        return [t for t, on in zip(FLAG_TOKENS, (self.slav_group, self.greek_group, self.biblical_quote)) if on]

    def group(self, side: str) -> bool:
        return self.slav_group if side == "slav" else self.greek_group


@dataclass(frozen=True)
class SideCells:
    """One language's cells of a row: main word and lemmas, variants."""

    word: str = ""
    lemmas: tuple[str, str, str, str] = ("", "", "", "")
    variant_word: str = ""
    variant_lemmas: tuple[str, str, str] = ("", "", "")
    variants: tuple[VariantReading, ...] = ()

    @property
    def lemma(self) -> str:
        return self.lemmas[0]

    @property
    def sublemmas(self) -> tuple[str, ...]:
        return self.lemmas[1:]

    @property
    def chain(self) -> tuple[str, ...]:
        """Lemma followed by the filled sublemmas."""
        return _trim(self.lemmas)

    @property
    def omitted(self) -> bool:
        return self.word == OMISSION

    @property
    def has_word(self) -> bool:
        return bool(self.word) and not self.omitted

    @property
    def gramm(self) -> bool:
        return self.lemmas[1] == GRAMM


# column letters of each side: word, lemma..sublemma3, variant word, variant lemmas
SIDE_COLUMNS = {
    "slav": ("F", "HIJK", "A", "BCD"),
    "greek": ("L", "MNOP", "Q", "RST"),
}
SIDES = ("slav", "greek")


def other_side(side: str) -> str:
    return "greek" if side == "slav" else "slav"


@dataclass(frozen=True)
class Row:
    line: int
    address_text: str
    address: Optional[Address]
    slav: SideCells
    greek: SideCells
    context: str = ""
    flags: StyleFlags = StyleFlags()

    def side(self, name: str) -> SideCells:
        return getattr(self, name)

    # flat accessors mirroring the column layout
    @property
    def slav_word(self) -> str:
        return self.slav.word

    @property
    def slav_lemma(self) -> str:
        return self.slav.lemma

    @property
    def greek_word(self) -> str:
        return self.greek.word

    @property
    def greek_lemma(self) -> str:
        return self.greek.lemma

    def fields(self) -> list[str]:
        s, g = self.slav, self.greek
        return [s.variant_word, *s.variant_lemmas, self.address_text, s.word, self.context,
                *s.lemmas, g.word, *g.lemmas, g.variant_word, *g.variant_lemmas]


Record = Optional[Row]  # None marks a blank separator record


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    row: int
    column: str
    message: str

    def sort_key(self) -> tuple:
        return (self.row, self.column, self.severity, self.message)

    def __str__(self) -> str:
        return f"{self.severity}\t{self.row}\t{self.column}\t{self.message}"


class Diagnostics(list):
    """Diagnostic list kept in (row, column) order."""

    def __init__(self, items: Iterable[Diagnostic] = ()):
        super().__init__(sorted(set(items), key=Diagnostic.sort_key))

    @property
    def errors(self) -> list[Diagnostic]:
        return [d for d in self if d.severity == "error"]

    @property
    def warnings(self) -> list[Diagnostic]:
        return [d for d in self if d.severity == "warning"]

    def report(self) -> str:
        return "".join(f"{d}\n" for d in self)


@dataclass(frozen=True)
class Table:
    records: tuple[Record, ...] = ()
    config: TableConfig = TableConfig()
    diagnostics: tuple[Diagnostic, ...] = field(default=(), compare=False)

    @property
    def rows(self) -> list[Row]:
        return [r for r in self.records if r is not None]

    def __len__(self) -> int:
        return len(self.rows)


def _side_cells(fields: list[str], side: str, config: SideConfig, line: int,
                diags: list[Diagnostic]) -> SideCells:
    col = {c: fields[COLUMNS.index(c)] for c in COLUMNS}
    word_c, lemma_cs, var_c, var_lemma_cs = SIDE_COLUMNS[side]
    variant_lemmas = tuple(col[c] for c in var_lemma_cs)
    try:
        variants = tuple(parse_variant_cell(col[var_c], config, variant_lemmas))
    except VariantCellError as exc:
        diags.append(Diagnostic("error", line, var_c, str(exc)))
        variants = ()
    return SideCells(col[word_c], tuple(col[c] for c in lemma_cs), col[var_c],
                     variant_lemmas, variants)


def _parse_flags(text: str, line: int, diags: list[Diagnostic]) -> StyleFlags:
    tokens = [t.strip() for t in text.split(";") if t.strip()]
    for t in tokens:
        if t not in FLAG_TOKENS:
            diags.append(Diagnostic("error", line, FLAGS_COLUMN, f"invalid flag token {t!r}"))
    return StyleFlags("sg" in tokens, "gg" in tokens, "bq" in tokens)


def _is_blank(raw: str) -> bool:
    return not raw.replace("\t", "").strip()


def parse_table(source: Union[TextIO, str, Iterable[str]], config: TableConfig = TableConfig()) -> Table:
    """Parse the TSV dialect; malformed records are reported and skipped."""
    if isinstance(source, str):
        source = io.StringIO(source)
    records: list[Record] = []
    diags: list[Diagnostic] = []
    for line_no, raw in enumerate(source, 1):
        raw = raw.rstrip("\n").rstrip("\r")
        if _is_blank(raw):
            records.append(None)
            continue
        fields = raw.split("\t")
        if len(fields) not in (FIELD_COUNT, FIELD_COUNT + 1):
            diags.append(Diagnostic("error", line_no, "-",
                                    f"field count {len(fields)} ≠ {FIELD_COUNT}"))
            continue
        fields = [f.strip() for f in fields]
        flags = _parse_flags(fields[FIELD_COUNT] if len(fields) > FIELD_COUNT else "", line_no, diags)
        address_text = fields[COLUMNS.index("E")]
        try:
            address = parse_address(address_text)
        except AddressError:
            address = None
        records.append(Row(
            line=line_no,
            address_text=address_text,
            address=address,
            slav=_side_cells(fields, "slav", config.slav, line_no, diags),
            greek=_side_cells(fields, "greek", config.greek, line_no, diags),
            context=fields[COLUMNS.index("G")],
            flags=flags,
        ))
    return Table(tuple(records), config, tuple(diags))


def serialize_table(table: Table) -> str:
    lines = []
    for record in table.records:
        if record is None:
            lines.append("")
            continue
        tokens = record.flags.tokens()
        fields = record.fields() + ([";".join(tokens)] if tokens else [])
        lines.append("\t".join(fields))
    return "".join(line + "\n" for line in lines)


def swap_sides(table: Table) -> Table:
    """Exchange the two language blocks, their flags and their witness configs."""
    records = tuple(
        None if r is None else replace(
            r, slav=r.greek, greek=r.slav,
            flags=StyleFlags(r.flags.greek_group, r.flags.slav_group, r.flags.biblical_quote))
        for r in table.records)
    return Table(records, table.config.swapped(), table.diagnostics)


def iter_runs(table: Table) -> Iterator[list[Row]]:
    """Yield the runs of rows between blank separator records."""
    run: list[Row] = []
    for record in table.records:
        if record is None:
            if run:
                yield run
            run = []
        else:
            run.append(record)
    if run:
        yield run


# -- validation ------------------------------------------------------------

def _check_side(row: Row, side: str, config: SideConfig, out: list[Diagnostic]) -> None:
    cells = row.side(side)
    other = row.side(other_side(side))
    word_c, lemma_cs, var_c, _ = SIDE_COLUMNS[side]
    other_lemma_c = SIDE_COLUMNS[other_side(side)][1][0]

    def err(column, message, severity="error"):
        out.append(Diagnostic(severity, row.line, column, message))

    label_row = other.gramm
    if cells.has_word and not cells.lemma:
        err(lemma_cs[0], "main word unlemmatised")
    if cells.omitted and any(cells.lemmas):
        err(lemma_cs[0], "lemma given for an omitted word", "warning")
    if not cells.word and cells.lemma and not label_row:
        err(lemma_cs[0], "lemma without word", "warning")
    for i in range(1, 4):
        if cells.lemmas[i] and not cells.lemmas[i - 1]:
            err(lemma_cs[i], "non-contiguous sublemmas")
    for i in (2, 3):
        if cells.lemmas[i] == GRAMM:
            err(lemma_cs[i], f"'{GRAMM}' outside the first sublemma slot")
    if cells.gramm:
        if not other.lemma:
            err(other_lemma_c, f"'{GRAMM}' without a grammatical label")
        if cells.lemmas[2] or cells.lemmas[3]:
            err(lemma_cs[2], f"sublemmas below '{GRAMM}'", "warning")
        if other.has_word:
            err(SIDE_COLUMNS[other_side(side)][0], "word on a grammatical-label row is not indexed", "warning")
    if row.flags.group(side) and not cells.has_word:
        err(word_c, "group flag on a row without a word on that side")
    main = config.main_at(row.address)
    for reading in cells.variants:
        if reading.omitted and reading.lemmas:
            err(var_c, f"lemmatised variant ignored due to {OMITTED} form", "warning")
        if main in reading.sigla:
            err(var_c, f"variant cites the main witness {main}")
        if any(not x for x in reading.lemmas[:-1]):
            err(var_c, f"non-contiguous variant lemmas for {reading.form!r}")


def validate(table: Table) -> Diagnostics:
    from .adaptation import group_rows, units

    out: list[Diagnostic] = list(table.diagnostics)
    for row in table.rows:
        if row.address is None:
            try:
                parse_address(row.address_text)
            except AddressError as exc:
                out.append(Diagnostic("error", row.line, "E", f"unparsable address: {exc}"))
        for side in SIDES:
            _check_side(row, side, table.config.side(side), out)

    groups = group_rows(table)
    sizes = {side: {} for side in SIDES}
    for g in groups:
        for r in g.rows:
            sizes[g.side][r.line] = len(g.rows)
    for g in groups:
        row = g.rows[0]
        if len(g.rows) == 1 and row.flags.group(g.side):
            out.append(Diagnostic("warning", row.line, SIDE_COLUMNS[g.side][0],
                                  "group flag on a single row, treated as ungrouped"))
    for row in table.rows:
        for side in SIDES:
            if row.side(side).gramm and sizes[side].get(row.line, 1) < 2:
                out.append(Diagnostic("error", row.line, SIDE_COLUMNS[side][1][1],
                                      f"'{GRAMM}' outside a group"))
        if row.flags.slav_group and row.flags.greek_group and (
                sizes["slav"][row.line] < 2 or sizes["greek"][row.line] < 2):
            out.append(Diagnostic("warning", row.line, FLAGS_COLUMN,
                                  "both group flags outside a many-to-many phrase"))
    for unit in units(table):
        if any(r.address is None for r in unit.rows):
            continue
        try:
            where = span([r.address for r in unit.rows])
        except AddressError as exc:
            out.append(Diagnostic("error", unit.rows[0].line, "E", f"invalid group span: {exc}"))
            continue
        if where.crosses_page():
            out.append(Diagnostic("warning", unit.rows[0].line, "E", "group span crosses a page"))
    return Diagnostics(out)
