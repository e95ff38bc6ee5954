"""Bilingual word lists and indices from a philologically annotated alignment table."""

from .addressing import Address, compare, format_address, parse_address
from .adaptation import Direction, adapt, expand_variants, group_rows
from .aggregation import Counts, Index, aggregate, count
from .collation import CollationTable, collate_key, default_collation, load_collation
from .export import Document, render_index, render_list, serialize_plain, serialize_wordxml
from .model import AdaptedRow, Alignment, Alternative, Reading, Source, Usage
from .table_model import (
    Language, Row, SideConfig, StyleFlags, Table, TableConfig, VariantReading,
    parse_table, parse_variant_cell, serialize_table, swap_sides, validate,
)

__version__ = "0.1.0"
