"""Alphabet-table collation for historical orthographies.

A collation table lists letters (or digraphs) one rank per line; several
letters on one line share a rank.  Lines starting with ``strip`` name
combining marks (``U+0301`` or the literal character) removed after
canonical decomposition, so accents, breathings, iota subscript and titla
do not affect the order.  Letters missing from the table rank after all
known ones, by code point.  Words starting with a Latin letter (grammatical
labels such as ``pass.``) sort in a trailing section of their own.
"""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Union

from .table_model import ConfigError, Language

_SPACE = (-1, 0)


@dataclass(frozen=True)
class CollationTable:
    ranks: dict
    strip: frozenset
    longest: int = 1

    def __hash__(self):
        return hash((tuple(sorted(self.ranks.items())), self.strip))

    def normalize(self, text: str) -> str:
        decomposed = unicodedata.normalize("NFD", text.casefold())
        kept = "".join(c for c in decomposed if c not in self.strip)
        return unicodedata.normalize("NFC", kept)

    def key(self, text: str) -> tuple:
        base = self.normalize(text)
        ranks = []
        section = None
        i = 0
        while i < len(base):
            for size in range(min(self.longest, len(base) - i), 0, -1):
                rank = self.ranks.get(base[i:i + size])
                if rank is not None:
                    ranks.append((0, rank))
                    if section is None:
                        section = 0
                    i += size
                    break
            else:
                c = base[i]
                if c.isspace():
                    ranks.append(_SPACE)
                else:
                    ranks.append((1, ord(c)))
                    if section is None and c.isalpha():
                        section = 1 if _is_latin(c) else 0
                i += 1
        return (section or 0, tuple(ranks), text)


def _is_latin(c: str) -> bool:
    return unicodedata.name(c, "").startswith("LATIN")


def _mark(token: str) -> str:
    if token.upper().startswith("U+"):
        return chr(int(token[2:], 16))
    if len(token) != 1:
        raise ConfigError(f"strip entry {token!r} is neither U+XXXX nor a single character")
    return token


def parse_collation(text: str) -> CollationTable:
    ranks: dict[str, int] = {}
    strip = set()
    rank = 0
    for number, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("strip "):
            strip.update(_mark(t) for t in line.split()[1:])
            continue
        for letter in line.split():
            letter = unicodedata.normalize("NFC", letter.casefold())
            if ranks.get(letter, rank) != rank:
                raise ConfigError(f"line {number}: letter {letter!r} listed twice")
            ranks[letter] = rank
        rank += 1
    if not ranks:
        raise ConfigError("collation table lists no letters")
    return CollationTable(ranks, frozenset(strip), max(len(k) for k in ranks))


def load_collation(path: Union[str, Path]) -> CollationTable:
    return parse_collation(Path(path).read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def default_collation(language: Language) -> CollationTable:
    text = resources.files("bilindex.data").joinpath(f"{language.value}.collation").read_text("utf-8")
    return parse_collation(text)


def default_collations() -> dict[Language, CollationTable]:
    return {lang: default_collation(lang) for lang in Language}


def collate_key(lemma: str, lang: Language, table: CollationTable = None) -> tuple:
    if table is None:
        table = default_collation(lang)
    return table.key(lemma)
