"""Word usages and their alignments."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import notation as N
from .addressing import Address
from .table_model import GRAMM, Language


@dataclass(frozen=True)
class Reading:
    """One witness group's wording at a locus, with its lemma chain."""

    word: str
    lemmas: tuple[str, ...]
    sigla: tuple[str, ...]
    is_main: bool

    @property
    def most_specific(self) -> str:
        return self.lemmas[-1] if self.lemmas else self.word


@dataclass(frozen=True)
class Source:
    sigla: tuple[str, ...]
    is_main: bool


@dataclass(frozen=True)
class Alternative:
    """Other readings at the same locus: the main one and the variants."""

    main: Optional[Reading] = None
    var: tuple[Reading, ...] = ()

    @property
    def var_map(self) -> dict[tuple[str, ...], Reading]:
        return {r.sigla: r for r in self.var}

    def __bool__(self) -> bool:
        return self.main is not None or bool(self.var)


@dataclass(frozen=True)
class Usage:
    word: str
    lemmas: tuple[str, ...]
    language: Language
    source: Source
    alternatives: Alternative = Alternative()
    decomposition: tuple[str, ...] = ()
    grammatical: bool = False
    omitted: bool = False
    position: int = 0
    repetition: Optional[int] = None

    @property
    def lemma(self) -> str:
        return self.lemmas[0] if self.lemmas else ""

    @property
    def sublemmas(self) -> tuple[str, ...]:
        return self.lemmas[1:]

    @property
    def is_main(self) -> bool:
        return self.source.is_main

    @property
    def sigla(self) -> tuple[str, ...]:
        return self.source.sigla

    @property
    def is_phrase(self) -> bool:
        return bool(self.decomposition)

    def label(self) -> str:
        """Counterpart notation: ``SUBLEMMA → LEMMA``, ``PHRASE → A & B`` etc."""
        if self.omitted:
            return N.OMISSION
        if self.decomposition:
            members = f" {N.AMP} ".join(self.decomposition)
            return f"{self.lemmas[-1]} {N.ARROW} {members}" if self.lemmas else members
        if len(self.lemmas) >= 2 and self.lemmas[1] == GRAMM:
            head = f"{self.lemmas[0]} {GRAMM}"
            return f"{self.lemmas[-1]} {N.ARROW} {head}" if len(self.lemmas) > 2 else head
        if len(self.lemmas) > 1:
            return f"{self.lemmas[-1]} {N.ARROW} {self.lemmas[0]}"
        return self.lemma

    def identity(self) -> tuple:
        return (self.position, self.source.is_main, self.source.sigla, self.word, self.lemmas)


@dataclass(frozen=True)
class Alignment:
    source_usage: Usage
    target_usage: Usage
    address: Address
    biblical_quote: bool = False

    # names used for the adapted, direction-specific view of a row
    @property
    def indexed_usage(self) -> Usage:
        return self.source_usage

    @property
    def counterpart(self) -> Usage:
        return self.target_usage

    @property
    def same_side_variants(self) -> tuple[Reading, ...]:
        return self.source_usage.alternatives.var

    @property
    def counterpart_main_reading(self) -> Optional[Reading]:
        return self.source_usage.alternatives.main

    @property
    def pseudo_lemma(self) -> bool:
        """Entry headed by a grammatical label rather than a word."""
        return self.source_usage.grammatical

    def usage_key(self) -> tuple:
        return (self.address, self.source_usage.identity())


AdaptedRow = Alignment
