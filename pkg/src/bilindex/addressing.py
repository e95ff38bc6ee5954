"""Text addresses: sermon/page/column/line locators.

Grammar::

    sermon "/" [witness] page column line ["[" rep "]"] ["-" end]

where ``end`` repeats only the components that differ from the start
(``12-13``, ``34-b2``, ``59a34-60a1``, ``W168a34-W169a1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

DEFAULT_WITNESS_ORDER = ("S", "W", "G", "H")

_POINT = re.compile(
    r"(?P<prefix>[A-Z][a-z]*)?(?P<page>[0-9]+)(?P<column>[a-d])(?P<line>[0-9]+)"
    r"(?:\[(?P<rep>[0-9]+)\])?"
)
_END = re.compile(
    r"(?:(?:(?P<prefix>[A-Z][a-z]*)?(?P<page>[0-9]+))?(?P<column>[a-d]))?(?P<line>[0-9]+)"
    r"(?:\[(?P<rep>[0-9]+)\])?"
)


class AddressError(ValueError):
    pass


@dataclass(frozen=True)
class Address:
    sermon: int
    page: int
    column: str
    line: int
    witness_prefix: Optional[str] = None
    repetition: Optional[int] = None
    span_end: Optional["Address"] = None

    def __post_init__(self):
        if self.sermon < 1 or self.page < 1 or self.line < 1:
            raise AddressError(f"non-positive component in {self!r}")
        if self.column not in "abcd" or len(self.column) != 1:
            raise AddressError(f"column {self.column!r} not in a-d")
        if self.repetition is not None and self.repetition < 2:
            raise AddressError("repetition counter must be >= 2")
        if self.span_end is not None:
            end = self.span_end
            if end.span_end is not None:
                raise AddressError("nested span")
            if end.sermon != self.sermon:
                raise AddressError("span crosses a sermon boundary")
            if end.sort_key() <= self.point.sort_key():
                raise AddressError("span end does not follow its start")

    @property
    def point(self) -> "Address":
        """The start of the address without any span."""
        if self.span_end is None:
            return self
        return Address(self.sermon, self.page, self.column, self.line,
                       self.witness_prefix, self.repetition)

    @property
    def end(self) -> "Address":
        return self.span_end if self.span_end is not None else self.point

    def crosses_page(self) -> bool:
        end = self.span_end
        return end is not None and (end.page, end.witness_prefix) != (self.page, self.witness_prefix)

    def sort_key(self, witness_order: Sequence[str] = DEFAULT_WITNESS_ORDER) -> tuple:
        if self.witness_prefix is None:
            prefix = (0, 0, "")
        elif self.witness_prefix in witness_order:
            prefix = (1, witness_order.index(self.witness_prefix), "")
        else:
            prefix = (1, len(witness_order), self.witness_prefix)
        start = (self.sermon, prefix, self.page, self.column, self.line, self.repetition or 1)
        if self.span_end is None:
            return start + ((0,),)
        return start + ((1,) + self.span_end.sort_key(witness_order)[:-1],)

    def __lt__(self, other: "Address") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "Address") -> bool:
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: "Address") -> bool:
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: "Address") -> bool:
        return self.sort_key() >= other.sort_key()

    def __str__(self) -> str:
        return format_address(self)


def _int(text: str, what: str, source: str) -> int:
    value = int(text)
    if value < 1:
        raise AddressError(f"{what} must be positive in {source!r}")
    return value


def parse_address(text: str) -> Address:
    source = text
    text = text.strip()
    if not text:
        raise AddressError("empty address")
    sermon_text, slash, rest = text.partition("/")
    if not slash:
        raise AddressError(f"missing '/' after sermon in {source!r}")
    if not re.fullmatch(r"[0-9]+", sermon_text):
        raise AddressError(f"sermon {sermon_text!r} is not a number in {source!r}")
    sermon = _int(sermon_text, "sermon", source)
    start_text, dash, end_text = rest.partition("-")
    m = _POINT.fullmatch(start_text)
    if m is None:
        raise AddressError(f"cannot parse page/column/line {start_text!r} in {source!r}")
    prefix = m["prefix"]
    page = _int(m["page"], "page", source)
    column = m["column"]
    line = _int(m["line"], "line", source)
    rep = int(m["rep"]) if m["rep"] else None
    span_end = None
    if dash:
        e = _END.fullmatch(end_text)
        if e is None:
            raise AddressError(f"cannot parse span end {end_text!r} in {source!r}")
        end_prefix = prefix
        end_page = page
        if e["page"] is not None:
            end_page = _int(e["page"], "page", source)
            end_prefix = e["prefix"]
        span_end = Address(
            sermon,
            end_page,
            e["column"] or column,
            _int(e["line"], "line", source),
            end_prefix,
            int(e["rep"]) if e["rep"] else None,
        )
    try:
        return Address(sermon, page, column, line, prefix, rep, span_end)
    except AddressError as exc:
        raise AddressError(f"{exc} in {source!r}") from None


def _point_text(a: Address) -> str:
    rep = f"[{a.repetition}]" if a.repetition else ""
    return f"{a.witness_prefix or ''}{a.page}{a.column}{a.line}{rep}"


def format_address(a: Address) -> str:
    text = f"{a.sermon}/{_point_text(a)}"
    end = a.span_end
    if end is None:
        return text
    rep = f"[{end.repetition}]" if end.repetition else ""
    if (end.witness_prefix, end.page) != (a.witness_prefix, a.page):
        tail = _point_text(end)
    elif end.column != a.column:
        tail = f"{end.column}{end.line}{rep}"
    else:
        tail = f"{end.line}{rep}"
    return f"{text}-{tail}"


def compare(a: Address, b: Address, witness_order: Sequence[str] = DEFAULT_WITNESS_ORDER) -> int:
    """Three-way comparison in document order: -1, 0 or 1."""
    ka, kb = a.sort_key(witness_order), b.sort_key(witness_order)
    return (ka > kb) - (ka < kb)


def span(addresses: Sequence[Address], witness_order: Sequence[str] = DEFAULT_WITNESS_ORDER) -> Address:
    """Smallest address covering all the given points."""
    points = sorted((a.point for a in addresses), key=lambda a: a.sort_key(witness_order))
    first, last = points[0], points[-1]
    ends = [a.end for a in addresses]
    last = max([last, *ends], key=lambda a: a.sort_key(witness_order))
    if last.sort_key(witness_order)[:-2] == first.sort_key(witness_order)[:-2]:
        return first
    return Address(first.sermon, first.page, first.column, first.line,
                   first.witness_prefix, first.repetition,
                   Address(last.sermon, last.page, last.column, last.line,
                           last.witness_prefix, None))
