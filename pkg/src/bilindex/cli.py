"""Command-line front end: table -> lists (integrator) and indices (generator)."""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Optional, Sequence, TextIO

from .adaptation import AdaptationError, Direction, adapt
from .aggregation import Index, aggregate
from .collation import CollationTable, default_collations, load_collation
from .export import render_index, render_list, serialize_plain, serialize_wordxml
from .table_model import (
    ConfigError, Diagnostic, Language, Table, TableConfig, parse_sigla_config,
    parse_table, validate,
)

TOOLS = {"integrate": "list", "generate": "index"}
FORMATS = {"plain": "txt", "wordxml": "xml"}

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


@dataclass
class RunConfig:
    input: Path
    out: Path = Path(".")
    tools: tuple[str, ...] = ("integrate", "generate")
    directions: tuple[Direction, ...] = (Direction.SLGR, Direction.GRSL)
    formats: tuple[str, ...] = ("plain",)
    collation_paths: dict = field(default_factory=dict)  # Language -> path
    sigla: Optional[Path] = None
    strict: bool = False

    def __post_init__(self):
        if not self.tools or not self.directions or not self.formats:
            raise ConfigError("at least one tool, direction and format is required")


def build_index(table: Table, direction: Direction,
                collations: Optional[Mapping[Language, CollationTable]] = None) -> Index:
    side = table.config.side(direction.indexed)
    other = table.config.side(direction.counterpart)
    return aggregate(adapt(table, direction), collations,
                     indexed=side.language, counterpart=other.language)


def compile_outputs(table: Table, stem: str, tools: Sequence[str], directions: Sequence[Direction],
                    formats: Sequence[str],
                    collations: Optional[Mapping[Language, CollationTable]] = None) -> dict[str, bytes]:
    """Render every requested tool x direction x format; file name -> content."""
    out = {}
    for direction in directions:
        index = build_index(table, direction, collations)
        for tool in tools:
            doc = render_list(index) if tool == "integrate" else render_index(index)
            for fmt in formats:
                name = f"{stem}.{TOOLS[tool]}.{direction.value}.{FORMATS[fmt]}"
                out[name] = (serialize_plain(doc).encode("utf-8") if fmt == "plain"
                             else serialize_wordxml(doc))
    return out


def _load_config(config: RunConfig) -> tuple[TableConfig, dict]:
    table_config = TableConfig()
    if config.sigla is not None:
        table_config = parse_sigla_config(Path(config.sigla).read_text(encoding="utf-8"))
    collations = default_collations()
    for language, path in config.collation_paths.items():
        if path is not None:
            collations[language] = load_collation(path)
    return table_config, collations


def run(config: RunConfig, stderr: TextIO = sys.stderr) -> int:
    try:
        table_config, collations = _load_config(config)
        with open(config.input, encoding="utf-8", newline="\n") as fh:
            table = parse_table(fh, table_config)
    except (OSError, UnicodeDecodeError, ConfigError) as exc:
        print(f"error\t0\t-\t{exc}", file=stderr)
        return EXIT_IO

    diagnostics = validate(table)
    stderr.write(diagnostics.report())
    if diagnostics.errors or (config.strict and diagnostics.warnings):
        return EXIT_INVALID

    try:
        outputs = compile_outputs(table, Path(config.input).stem, config.tools,
                                  config.directions, config.formats, collations)
    except AdaptationError as exc:
        print(Diagnostic("error", 0, "-", str(exc)), file=stderr)
        return EXIT_INVALID
    try:
        config.out.mkdir(parents=True, exist_ok=True)
        for name, data in outputs.items():
            (config.out / name).write_bytes(data)
    except OSError as exc:
        print(f"error\t0\t-\t{exc}", file=stderr)
        return EXIT_IO
    return EXIT_OK


def _choice(value: str, both: Sequence[str]) -> tuple[str, ...]:
    return tuple(both) if value == "both" else (value,)


def _formats(value: str) -> tuple[str, ...]:
    if value == "both":
        return tuple(FORMATS)
    formats = tuple(dict.fromkeys(v.strip() for v in value.split(",") if v.strip()))
    unknown = [f for f in formats if f not in FORMATS]
    if unknown or not formats:
        raise argparse.ArgumentTypeError(f"unknown format {','.join(unknown) or value!r}")
    return formats


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="bilindex",
        description="Compile Slavonic-Greek / Greek-Slavonic word lists and indices "
                    "from an annotated alignment table (TSV).")
    p.add_argument("input", type=Path, help="annotation table, UTF-8 TSV")
    p.add_argument("--tool", choices=("integrate", "generate", "both"), default="both",
                   help="integrate = verification lists, generate = publication indices")
    p.add_argument("--direction", choices=("slgr", "grsl", "both"), default="both")
    p.add_argument("--format", type=_formats, default=("plain",),
                   help="plain, wordxml, a comma-separated list or 'both' (default: plain)")
    p.add_argument("--collation-slav", type=Path, help="Slavonic collation table")
    p.add_argument("--collation-greek", type=Path, help="Greek collation table")
    p.add_argument("--sigla", type=Path, help="witness sigla sidecar")
    p.add_argument("--out", type=Path, default=Path("."), help="output directory")
    p.add_argument("--strict", action="store_true", help="treat warnings as errors")
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    config = RunConfig(
        input=args.input,
        out=args.out,
        tools=_choice(args.tool, TOOLS),
        directions=tuple(Direction(d) for d in _choice(args.direction, ("slgr", "grsl"))),
        formats=args.format,
        collation_paths={Language.SLAVONIC: args.collation_slav, Language.GREEK: args.collation_greek},
        sigla=args.sigla,
        strict=args.strict,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
