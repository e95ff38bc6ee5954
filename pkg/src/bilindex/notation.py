"""Typographic conventions of the lists and indices, in one place."""

BULLET = "•"
XREF = "»"
ARROW = "→"
AMP = "&"
REF_SEP = "; "
VARIANT_SEP = ", "
SURFACE_SEP = "/"
SIGLA_SEP = "-"
LIST_DEPTH_MARK = "|"
BRACKETS = ("[", "]")
VAR = "var"
OMISSION = "om."
