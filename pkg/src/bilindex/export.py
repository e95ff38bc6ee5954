"""Rendering of an index into verification lists and publication indices.

Both kinds are built as a small styled document (indented paragraphs of
inline runs) which is then serialised either as plain UTF-8 text or as a
flat word-processing XML package.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional
from xml.etree import ElementTree as ET

from . import notation as N
from .aggregation import Block, Counts, Index, Node
from .model import Alignment, Reading, Usage


@dataclass(frozen=True)
class Run:
    text: str
    superscript: bool = False
    bold_italic: bool = False

    @property
    def style(self) -> tuple[bool, bool]:
        return (self.superscript, self.bold_italic)


@dataclass(frozen=True)
class Paragraph:
    depth: int
    runs: tuple[Run, ...]

    @property
    def text(self) -> str:
        return "".join(r.text for r in self.runs)


@dataclass
class Document:
    blocks: list[Paragraph] = field(default_factory=list)

    def add(self, depth: int, runs: Iterable[Run]) -> None:
        self.blocks.append(Paragraph(depth, _merge(runs)))

    def __len__(self) -> int:
        return len(self.blocks)


def _merge(runs: Iterable[Run]) -> tuple[Run, ...]:
    out: list[Run] = []
    for run in runs:
        if not run.text:
            continue
        if out and out[-1].style == run.style:
            out[-1] = Run(out[-1].text + run.text, *run.style)
        else:
            out.append(run)
    return tuple(out)


def _sup(text: str) -> Run:
    return Run(text, superscript=True)


def _sigla(usage_or_reading) -> str:
    return "".join(usage_or_reading.sigla)


# -- shared pieces ---------------------------------------------------------

def _by_language(a: Alignment) -> list[Usage]:
    return sorted((a.source_usage, a.target_usage), key=lambda u: u.language.rank)


def attestation(a: Alignment) -> str:
    """Sigla of the variant-sourced sides, Slavonic first: ``WGH-C``."""
    parts = [_sigla(u) for u in _by_language(a) if not u.is_main and not u.omitted]
    return N.SIGLA_SEP.join(parts)


def _address_runs(a: Alignment) -> list[Run]:
    runs = [Run(str(a.address), bold_italic=a.biblical_quote)]
    att = attestation(a)
    if att:
        runs.append(_sup(att))
    return runs


def _xref_runs(a: Alignment, listing: bool) -> list[Run]:
    parts: list[list[Run]] = []
    for usage in _by_language(a):
        alt = usage.alternatives
        if alt.main is not None:
            text = alt.main.word if listing else alt.main.most_specific
            parts.append([Run(f"{text} {_sigla(alt.main)}")])
        if alt.var:
            runs = [Run(N.BRACKETS[0])]
            for i, reading in enumerate(alt.var):
                if i:
                    runs.append(Run(N.VARIANT_SEP))
                runs.extend(_variant_runs(reading, listing))
            runs.append(Run(N.BRACKETS[1]))
            parts.append(runs)
    if not parts:
        return []
    out = [Run(f" {N.XREF} ")]
    for i, p in enumerate(parts):
        if i:
            out.append(Run(" "))
        out.extend(p)
    return out


def _variant_runs(reading: Reading, listing: bool) -> list[Run]:
    if listing:
        return [Run(f"{reading.word} {_sigla(reading)}")]
    return [Run(reading.most_specific), _sup(_sigla(reading))]


def count_runs(c: Counts) -> list[Run]:
    if c.variant and c.main:
        return [Run(f"({c.main} + {c.variant}"), _sup(N.VAR), Run(")")]
    if c.variant:
        return [Run(f"({c.variant}"), _sup(N.VAR), Run(")")]
    return [Run(f"({c.main})")]


# -- lists -----------------------------------------------------------------

def _surface(u: Usage) -> str:
    if u.is_main or u.omitted:
        return u.word
    return f"{u.word} {_sigla(u)}"


def list_line(label: str, a: Alignment) -> list[Run]:
    bq = a.biblical_quote
    return [
        Run(f"{label}: "),
        Run(_surface(a.source_usage), bold_italic=bq),
        Run(N.SURFACE_SEP),
        Run(_surface(a.target_usage), bold_italic=bq),
        Run(" ("),
        Run(str(a.address)),
        *_address_runs(a)[1:],
        *_xref_runs(a, listing=True),
        Run(")"),
    ]


def _list_node(doc: Document, node: Node, level: int) -> None:
    for block in node.blocks.values():
        for a in block:
            doc.add(1, list_line(block.label, a))
    for child in node.children.values():
        doc.add(1, [Run(f"{N.LIST_DEPTH_MARK * (level + 1)} {child.label}")])
        _list_node(doc, child, level + 1)


def render_list(index: Index, direction=None) -> Document:
    """Verification list: every alignment with its surface forms."""
    doc = Document()
    for node in index:
        doc.add(0, [Run(node.label)])
        _list_node(doc, node, 0)
    return doc


# -- indices ---------------------------------------------------------------

def index_ref(a: Alignment) -> list[Run]:
    return _address_runs(a) + _xref_runs(a, listing=False)


def index_block_line(block: Block) -> list[Run]:
    runs = [Run(f"{N.BULLET} {block.label} "), *count_runs(block.count()), Run(": ")]
    for i, a in enumerate(block):
        if i:
            runs.append(Run(N.REF_SEP))
        runs.extend(index_ref(a))
    return runs


def _index_node(doc: Document, node: Node, depth: int) -> None:
    for block in node.blocks.values():
        doc.add(depth + 1, index_block_line(block))
    for child in node.children.values():
        doc.add(depth + 1, [Run(f"{child.label} "), *count_runs(child.count())])
        _index_node(doc, child, depth + 1)


def render_index(index: Index, direction=None) -> Document:
    """Publication index: counts, addresses and cross-references."""
    doc = Document()
    for node in index:
        doc.add(0, [Run(f"{node.label} "), *count_runs(node.count())])
        _index_node(doc, node, 0)
    return doc


# -- serialisation ---------------------------------------------------------

def plain_run(run: Run) -> str:
    text = run.text
    if run.superscript:
        text = "^{" + text + "}"
    if run.bold_italic:
        text = "**" + text + "**"
    return text


def serialize_plain(doc: Document) -> str:
    return "".join("\t" * p.depth + "".join(plain_run(r) for r in p.runs) + "\n"
                   for p in doc.blocks)


PKG_NS = "http://schemas.microsoft.com/office/2006/xmlPackage"
W_NS = "http://schemas.openxmlformats.org/wordprocessingml/2006/main"
REL_NS = "http://schemas.openxmlformats.org/package/2006/relationships"
OFFICE_DOC_REL = "http://schemas.openxmlformats.org/officeDocument/2006/relationships/officeDocument"
XML_NS = "http://www.w3.org/XML/1998/namespace"
INDENT_TWIPS = 360

ET.register_namespace("pkg", PKG_NS)
ET.register_namespace("w", W_NS)


def _pkg(tag: str) -> str:
    return f"{{{PKG_NS}}}{tag}"


def _w(tag: str) -> str:
    return f"{{{W_NS}}}{tag}"


def _part(package: ET.Element, name: str, content_type: str) -> ET.Element:
    part = ET.SubElement(package, _pkg("part"), {_pkg("name"): name, _pkg("contentType"): content_type})
    return ET.SubElement(part, _pkg("xmlData"))


def _document_xml(doc: Document) -> ET.Element:
    document = ET.Element(_w("document"))
    body = ET.SubElement(document, _w("body"))
    for p in doc.blocks:
        para = ET.SubElement(body, _w("p"))
        ppr = ET.SubElement(para, _w("pPr"))
        ET.SubElement(ppr, _w("ind"), {_w("left"): str(p.depth * INDENT_TWIPS)})
        for run in p.runs:
            r = ET.SubElement(para, _w("r"))
            if run.superscript or run.bold_italic:
                rpr = ET.SubElement(r, _w("rPr"))
                if run.bold_italic:
                    ET.SubElement(rpr, _w("b"))
                    ET.SubElement(rpr, _w("i"))
                if run.superscript:
                    ET.SubElement(rpr, _w("vertAlign"), {_w("val"): "superscript"})
            t = ET.SubElement(r, _w("t"), {f"{{{XML_NS}}}space": "preserve"})
            t.text = run.text
    ET.SubElement(body, _w("sectPr"))
    return document


def serialize_wordxml(doc: Document) -> bytes:
    """Flat OPC package (a single-file .xml Word document)."""
    package = ET.Element(_pkg("package"))
    rels = _part(package, "/_rels/.rels", "application/vnd.openxmlformats-package.relationships+xml")
    relationships = ET.SubElement(rels, f"{{{REL_NS}}}Relationships")
    ET.SubElement(relationships, f"{{{REL_NS}}}Relationship",
                  {"Id": "rId1", "Type": OFFICE_DOC_REL, "Target": "word/document.xml"})
    main = _part(package, "/word/document.xml",
                 "application/vnd.openxmlformats-officedocument.wordprocessingml.document.main+xml")
    main.append(_document_xml(doc))
    body = ET.tostring(package, encoding="unicode")
    head = ('<?xml version="1.0" encoding="UTF-8" standalone="yes"?>\n'
            '<?mso-application progid="Word.Document"?>\n')
    return (head + body + "\n").encode("utf-8")


def wordxml_to_plain(data: bytes) -> str:
    """Read back paragraphs and runs of a flat package in the plain notation."""
    root = ET.fromstring(data)
    lines = []
    for para in root.iter(_w("p")):
        ind = para.find(f"{_w('pPr')}/{_w('ind')}")
        depth = int(ind.get(_w("left"), "0")) // INDENT_TWIPS if ind is not None else 0
        runs = []
        for r in para.iter(_w("r")):
            rpr = r.find(_w("rPr"))
            sup = rpr is not None and rpr.find(_w("vertAlign")) is not None
            bi = rpr is not None and rpr.find(_w("b")) is not None and rpr.find(_w("i")) is not None
            runs.append(Run("".join(t.text or "" for t in r.iter(_w("t"))), sup, bi))
        lines.append("\t" * depth + "".join(plain_run(x) for x in runs) + "\n")
    return "".join(lines)
