"""Fold adapted rows into the nested, alphabetically sorted index.

    lemma -> (sublemma -> (sublemma2 -> (sublemma3 ->))) counterpart -> alignments

Every level is a ``SortedDict`` keyed through the collation of the
language it holds; the leaves are address-ordered ``SortedKeyList``s.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from sortedcontainers import SortedDict, SortedKeyList

from .addressing import DEFAULT_WITNESS_ORDER
from .collation import CollationTable, default_collations
from .model import Alignment, Alternative, Reading, Source, Usage  # noqa: F401  (re-exported)
from .table_model import Language


@dataclass(frozen=True)
class Counts:
    main: int = 0
    variant: int = 0

    def __add__(self, other: "Counts") -> "Counts":
        return Counts(self.main + other.main, self.variant + other.variant)

    @property
    def total(self) -> int:
        return self.main + self.variant


def alignment_key(a: Alignment, witness_order: Sequence[str] = DEFAULT_WITNESS_ORDER) -> tuple:
    s, t = a.source_usage, a.target_usage
    return (a.address.sort_key(witness_order),
            not s.is_main, s.sigla, s.position, s.word, s.lemmas,
            not t.is_main, t.sigla, t.position, t.word, t.lemmas, t.decomposition)


def _usage_counts(alignments: Iterable[Alignment]) -> Counts:
    seen = {}
    for a in alignments:
        seen[a.usage_key()] = a.source_usage.is_main
    main = sum(seen.values())
    return Counts(main, len(seen) - main)


class Block:
    """Alignments sharing one counterpart lemma chain."""

    def __init__(self, label: str, witness_order: Sequence[str]):
        self.label = label
        self.alignments = SortedKeyList(key=lambda a: alignment_key(a, witness_order))

    @property
    def counterpart(self) -> Usage:
        return self.alignments[0].target_usage

    def count(self) -> Counts:
        """Occurrences of this correspondence, by the counterpart's source."""
        main = sum(1 for a in self.alignments if a.target_usage.is_main)
        return Counts(main, len(self.alignments) - main)

    def __iter__(self) -> Iterator[Alignment]:
        return iter(self.alignments)

    def __len__(self) -> int:
        return len(self.alignments)


class Node:
    """A lemma or sublemma heading with its sub-headings and counterpart blocks."""

    def __init__(self, label: str, index: "Index"):
        self.label = label
        self._index = index
        self.children = SortedDict(index.indexed_collation.key)
        self.blocks = SortedDict(index.counterpart_collation.key)

    def child(self, label: str) -> "Node":
        node = self.children.get(label)
        if node is None:
            node = self.children[label] = Node(label, self._index)
        return node

    def block(self, label: str) -> Block:
        block = self.blocks.get(label)
        if block is None:
            block = self.blocks[label] = Block(label, self._index.witness_order)
        return block

    def alignments(self) -> Iterator[Alignment]:
        for block in self.blocks.values():
            yield from block
        for child in self.children.values():
            yield from child.alignments()

    def count(self) -> Counts:
        """Distinct indexed usages below this heading, main text and variants."""
        return _usage_counts(self.alignments())

    @property
    def pseudo(self) -> bool:
        return any(a.pseudo_lemma for a in self.alignments())

    def to_tree(self) -> tuple:
        return (self.label, astuple_counts(self.count()),
                tuple((b.label, astuple_counts(b.count()), tuple(b.alignments))
                      for b in self.blocks.values()),
                tuple(c.to_tree() for c in self.children.values()))


def astuple_counts(c: Counts) -> tuple[int, int]:
    return (c.main, c.variant)


class Index:
    def __init__(self, indexed_collation: CollationTable, counterpart_collation: CollationTable,
                 witness_order: Sequence[str] = DEFAULT_WITNESS_ORDER):
        self.indexed_collation = indexed_collation
        self.counterpart_collation = counterpart_collation
        self.witness_order = tuple(witness_order)
        self.lemmas = SortedDict(indexed_collation.key)

    def add(self, alignment: Alignment) -> None:
        lemmas = alignment.source_usage.lemmas
        node = self.lemmas.get(lemmas[0])
        if node is None:
            node = self.lemmas[lemmas[0]] = Node(lemmas[0], self)
        for sub in lemmas[1:]:
            node = node.child(sub)
        node.block(alignment.target_usage.label()).alignments.add(alignment)

    def __iter__(self) -> Iterator[Node]:
        return iter(self.lemmas.values())

    def __len__(self) -> int:
        return len(self.lemmas)

    def __getitem__(self, lemma: str) -> Node:
        return self.lemmas[lemma]

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.lemmas

    def find(self, *path: str) -> Node:
        node = self.lemmas[path[0]]
        for label in path[1:]:
            node = node.children[label]
        return node

    def alignments(self) -> Iterator[Alignment]:
        for node in self:
            yield from node.alignments()

    def to_tree(self) -> tuple:
        return tuple(node.to_tree() for node in self)


def aggregate(rows: Iterable[Alignment],
              collations: Optional[Mapping[Language, CollationTable]] = None,
              witness_order: Sequence[str] = DEFAULT_WITNESS_ORDER,
              indexed: Optional[Language] = None,
              counterpart: Optional[Language] = None) -> Index:
    """Build the index of one direction's adapted rows.

    The indexed and counterpart languages are read off the rows; pass them
    explicitly to aggregate an empty row list for a known direction.
    """
    rows = list(rows)
    if collations is None:
        collations = default_collations()
    if rows:
        indexed = rows[0].source_usage.language
        counterpart = rows[0].target_usage.language
    indexed = indexed or Language.SLAVONIC
    counterpart = counterpart or (Language.GREEK if indexed is Language.SLAVONIC else Language.SLAVONIC)
    index = Index(collations[indexed], collations[counterpart], witness_order)
    for row in rows:
        index.add(row)
    return index


def count(node) -> Counts:
    if node is None:
        return Counts()
    return node.count()
