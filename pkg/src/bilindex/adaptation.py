"""Direction-specific adaptation of the annotation table.

Each adapted row holds everything needed for one dictionary entry: the
indexed usage with its full lemma chain, the counterpart it is aligned to,
the address (a span for phrase groups) and the alternative readings at the
locus.  Phrase groups, grammatical-value rows and variant combinations are
all resolved here so that aggregation is a plain fold.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Optional

from .addressing import Address, span
from .model import Alignment, Alternative, Reading, Source, Usage
from .table_model import (
    OMISSION, SIDES, Row, SideCells, SideConfig, Table, TableConfig, VariantReading,
    iter_runs, other_side,
)


class Direction(enum.Enum):
    SLGR = "slgr"
    GRSL = "grsl"

    @property
    def indexed(self) -> str:
        """Column block whose words head the entries."""
        return "slav" if self is Direction.SLGR else "greek"

    @property
    def counterpart(self) -> str:
        return other_side(self.indexed)


class AdaptationError(ValueError):
    pass


@dataclass(frozen=True)
class RowGroup:
    side: str
    rows: tuple[Row, ...]

    @property
    def is_phrase(self) -> bool:
        return len(self.rows) > 1


@dataclass(frozen=True)
class Unit:
    """Rows that have to be read together: overlapping phrase groups."""

    rows: tuple[Row, ...]
    grouped: dict  # side -> frozenset of line numbers in multi-row groups

    def __hash__(self):
        return hash(self.rows)


def group_rows(table: Table) -> list[RowGroup]:
    """Maximal runs of group-flagged rows per side; other rows are singletons.

    A blank separator record always closes the current group.
    """
    groups = []
    for run in iter_runs(table):
        for side in SIDES:
            current: list[Row] = []
            for row in run:
                if row.flags.group(side):
                    current.append(row)
                    continue
                if current:
                    groups.append(RowGroup(side, tuple(current)))
                    current = []
                groups.append(RowGroup(side, (row,)))
            if current:
                groups.append(RowGroup(side, tuple(current)))
    return sorted(groups, key=lambda g: (g.rows[0].line, SIDES.index(g.side)))


def units(table: Table) -> list[Unit]:
    groups = group_rows(table)
    phrase_lines = {side: set() for side in SIDES}
    for g in groups:
        if g.is_phrase:
            phrase_lines[g.side].update(r.line for r in g.rows)
    out = []
    for run in iter_runs(table):
        position = {r.line: i for i, r in enumerate(run)}
        # phrase groups are intervals; overlapping intervals form one unit
        intervals = sorted(
            (position[g.rows[0].line], position[g.rows[-1].line])
            for g in groups if g.is_phrase and g.rows[0].line in position)
        merged: list[list[int]] = []
        for lo, hi in intervals:
            if merged and lo <= merged[-1][1]:
                merged[-1][1] = max(merged[-1][1], hi)
            else:
                merged.append([lo, hi])
        covered = {}
        for lo, hi in merged:
            for i in range(lo, hi + 1):
                covered[i] = (lo, hi)
        i = 0
        while i < len(run):
            lo, hi = covered.get(i, (i, i))
            rows = tuple(run[lo:hi + 1])
            lines = {r.line for r in rows}
            out.append(Unit(rows, {s: frozenset(lines & phrase_lines[s]) for s in SIDES}))
            i = hi + 1
    return out


class _SideView:
    """One language's reading of a unit."""

    def __init__(self, unit: Unit, side: str, config: SideConfig, address: Address):
        self.unit = unit
        self.side = side
        self.other = other_side(side)
        self.config = config
        self.address = address
        self.main_siglum = config.main_at(address)
        self.grouped = unit.grouped[side]
        self.phrase = self._phrase_sublemmas()

    def cells(self, row: Row) -> SideCells:
        return row.side(self.side)

    def _phrase_sublemmas(self) -> tuple[str, ...]:
        for row in self.unit.rows:
            cells = self.cells(row)
            if row.line in self.grouped and len(cells.chain) > 1 and not cells.gramm:
                return cells.chain[1:]
        return ()

    def is_label_row(self, row: Row) -> bool:
        """The lemma cell of this side holds the other side's grammatical label."""
        return row.side(self.other).gramm

    def lexical(self) -> list[Row]:
        return [r for r in self.unit.rows
                if self.cells(r).has_word and self.cells(r).lemma
                and not self.cells(r).gramm and not self.is_label_row(r)]

    def gramm_members(self) -> list[Row]:
        return [r for r in self.unit.rows
                if self.cells(r).has_word and self.cells(r).lemma and self.cells(r).gramm]

    def propagate(self, row: Row, chain: tuple[str, ...]) -> tuple[str, ...]:
        if len(chain) == 1 and row.line in self.grouped:
            return chain + self.phrase
        return chain

    def chain(self, row: Row) -> tuple[str, ...]:
        return self.propagate(row, self.cells(row).chain)

    def surface(self, replace: Optional[tuple[int, str]] = None) -> str:
        words = []
        for row in self.unit.rows:
            cells = self.cells(row)
            if replace is not None and replace[0] == row.line:
                if replace[1] and replace[1] != "Ø":
                    words.append(replace[1])
            elif cells.has_word:
                words.append(cells.word)
        return " ".join(words)

    def variants(self, row: Row) -> list[VariantReading]:
        return [v for v in self.cells(row).variants if v.lemmatised]

    def all_variants(self) -> list[tuple[Row, VariantReading]]:
        return [(r, v) for r in self.unit.rows for v in self.variants(r)]

    def reading(self, row: Row, v: VariantReading) -> Reading:
        return Reading(v.form, self.propagate(row, v.lemmas), v.sigla, False)

    def main_reading(self, row: Row) -> Optional[Reading]:
        cells = self.cells(row)
        if not cells.has_word or not cells.lemma:
            return None
        return Reading(cells.word, self.chain(row), (self.main_siglum,), True)

    def variant_alternative(self, row: Row, v: VariantReading) -> Alternative:
        others = tuple(self.reading(row, o) for o in self.variants(row) if o is not v)
        return Alternative(self.main_reading(row), others)

    def usage(self, word: str, lemmas: tuple[str, ...], sigla: tuple[str, ...], is_main: bool,
              position: int, alternatives: Alternative = Alternative(), **extra) -> Usage:
        return Usage(word, lemmas, self.config.language, Source(sigla, is_main), alternatives,
                     position=position, repetition=self.address.repetition, **extra)

    # -- indexed side ----------------------------------------------------

    def indexed_readings(self) -> list[tuple[Usage, Row]]:
        out = []
        for row in self.lexical() + self.gramm_members():
            alt = Alternative(None, tuple(self.reading(row, v) for v in self.variants(row)))
            out.append((self.usage(self.surface(), self.chain(row), (self.main_siglum,), True,
                                   row.line, alt), row))
        for row, v in self.all_variants():
            out.append((self.usage(self.surface((row.line, v.form)), self.propagate(row, v.lemmas),
                                   v.sigla, False, row.line, self.variant_alternative(row, v)), row))
        out.sort(key=lambda p: p[1].line)
        return out

    # -- counterpart side ------------------------------------------------

    def _counterpart(self, members: list[tuple[Row, tuple[str, ...]]], **kw) -> dict:
        if len(members) == 1:
            return dict(lemmas=members[0][1], **kw)
        return dict(lemmas=self.phrase, decomposition=tuple(chain[0] for _, chain in members), **kw)

    def counterpart_readings(self) -> list[Usage]:
        out = []
        lexical = self.lexical()
        members = [(r, self.chain(r)) for r in lexical]
        if members:
            alt = Alternative(None, tuple(self.reading(r, v) for r, v in self.all_variants()))
            out.append(self.usage(self.surface(), sigla=(self.main_siglum,), is_main=True,
                                  position=members[0][0].line, alternatives=alt,
                                  **self._counterpart(members)))
        for row, v in self.all_variants():
            chain = self.propagate(row, v.lemmas)
            swapped = [(r, chain if r.line == row.line else c) for r, c in members]
            if row not in lexical:
                swapped = sorted(swapped + [(row, chain)], key=lambda m: m[0].line)
            out.append(self.usage(self.surface((row.line, v.form)), sigla=v.sigla, is_main=False,
                                  position=row.line, alternatives=self.variant_alternative(row, v),
                                  **self._counterpart(swapped)))
        if not out:
            out.append(self.usage(OMISSION, (), (self.main_siglum,), True,
                                  self.unit.rows[0].line, omitted=True))
        return out


def _unit_address(unit: Unit) -> Address:
    addresses = [r.address for r in unit.rows]
    if any(a is None for a in addresses):
        bad = next(r for r in unit.rows if r.address is None)
        raise AdaptationError(f"row {bad.line}: unparsable address {bad.address_text!r}")
    return span(addresses)


def expand_variants(unit: Unit, direction: Direction, config: TableConfig = TableConfig()) -> list[Alignment]:
    """Adapted rows of one unit: every indexed reading times every counterpart reading."""
    address = _unit_address(unit)
    x = _SideView(unit, direction.indexed, config.side(direction.indexed), address)
    y = _SideView(unit, direction.counterpart, config.side(direction.counterpart), address)
    rows = []
    counterparts = None
    for usage, row in x.indexed_readings():
        bq = row.flags.biblical_quote
        if usage.source.is_main and x.cells(row).gramm:
            label = y.cells(row).lemma
            if not label:
                raise AdaptationError(f"row {row.line}: 'gramm.' without a grammatical label")
            target = y.usage(y.surface(), (label,), (y.main_siglum,), True, row.line, grammatical=True)
            rows.append(Alignment(usage, target, address, bq))
            continue
        if counterparts is None:
            counterparts = y.counterpart_readings()
        rows.extend(Alignment(usage, target, address, bq) for target in counterparts)
    # the other side's grammatical members head entries under their label
    for row in y.gramm_members():
        label = x.cells(row).lemma
        if not label:
            raise AdaptationError(f"row {row.line}: 'gramm.' without a grammatical label")
        source = x.usage(x.surface(), (label,), (x.main_siglum,), True, row.line, grammatical=True)
        target = y.usage(y.surface(), y.cells(row).chain, (y.main_siglum,), True, row.line,
                         grammatical=True)
        rows.append(Alignment(source, target, address, row.flags.biblical_quote))
    return rows


def adapt(table: Table, direction: Direction) -> list[Alignment]:
    out = []
    for unit in units(table):
        out.extend(expand_variants(unit, direction, table.config))
    return out


def main_word_count(table: Table, direction: Direction) -> int:
    """Lemmatised, non-omitted main-text words on the indexed side."""
    x, y = direction.indexed, direction.counterpart
    return sum(1 for r in table.rows
               if r.side(x).has_word and r.side(x).lemma and not r.side(y).gramm)
