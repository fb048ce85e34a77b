"""Serialization of posets, tables and exact rationals to JSON, CSV, DOT and text"""

# AUTOGENERATED! DO NOT EDIT! File to edit: ../../nbs/core/exports.ipynb.

# %% auto #0
__all__ = ['OutputFormat', 'fraction_str', 'poset_to_dict', 'poset_to_json', 'poset_to_dot', 'poset_to_text', 'poset_to_csv',
           'render_poset', 'rows_to_csv', 'rows_to_text', 'to_json']

# %% ../../nbs/core/exports.ipynb #1ce2b98c
import csv
import io
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Sequence

from .poset import GradedPoset

# %% ../../nbs/core/exports.ipynb #b6d9c161
class OutputFormat(Enum):
    """Output formats understood by the exporters and the CLI."""
    JSON = "json"  # Machine-readable documents
    CSV = "csv"  # Comma-separated tables
    DOT = "dot"  # Graphviz Hasse diagrams
    TEXT = "text"  # Aligned plain-text tables

# %% ../../nbs/core/exports.ipynb #2f6ad0c4
def fraction_str(x: Fraction  # Exact rational (ints accepted)
                ) -> str:  # "num/den" string, e.g. "3/2" or "2/1"
    """Serialize an exact rational without losing its denominator."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"

def to_json(obj: Any  # JSON-ready object
           ) -> str:  # Indented JSON with a trailing newline
    """Dump a document the same way everywhere so output stays byte-stable."""
    return json.dumps(obj, indent=2) + "\n"

# %% ../../nbs/core/exports.ipynb #0aa3e7d2
def poset_to_dict(p: GradedPoset  # Poset to export
                 ) -> Dict[str, Any]:  # {"family", "n", "l", "elements", "ranks", "covers"}
    """Poset as a JSON-ready dictionary; covers are [i, j] pairs with j covering i."""
    return {"family": p.family.value, "n": p.n, "l": p.l,
            "elements": [p.label(i) for i in range(len(p))],
            "ranks": list(p.ranks),
            "covers": [[i, j] for i, j in p.edges()]}

def poset_to_json(p: GradedPoset) -> str:
    """Poset as a JSON document."""
    return to_json(poset_to_dict(p))

# %% ../../nbs/core/exports.ipynb #7846ac20
def poset_to_dot(p: GradedPoset  # Poset to draw
                ) -> str:  # Graphviz source, bottom-to-top with one layer per rank
    """Hasse diagram in DOT with rank-based layering."""
    lines = [f'digraph "{p.family.value}_{p.n}_{p.l}" {{', '  rankdir=BT;', '  node [shape=plaintext];']
    for i in range(len(p)):
        lines.append(f'  n{i} [label="{p.label(i)}"];')
    for r in p.rank_values():
        members = " ".join(f"n{i};" for i in p.elements_of_rank(r))
        lines.append(f"  {{ rank=same; {members} }}")
    for i, j in p.edges():
        lines.append(f"  n{i} -> n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"

def poset_to_text(p: GradedPoset) -> str:
    """One line per rank followed by one line per cover relation."""
    lines = [f"{p.family.value}_{{{p.n},{p.l}}}: {len(p)} elements, {len(p.edges())} cover edges"]
    for r in p.rank_values():
        lines.append(f"rank {r}: " + " ".join(p.label(i) for i in p.elements_of_rank(r)))
    lines.extend(f"{p.label(i)} < {p.label(j)}" for i, j in p.edges())
    return "\n".join(lines) + "\n"

def poset_to_csv(p: GradedPoset) -> str:
    """Element table: index, label, rank and the indices covering it."""
    rows = [[i, p.label(i), p.ranks[i], " ".join(map(str, p.covers[i]))] for i in range(len(p))]
    return rows_to_csv(["index", "element", "rank", "covered_by"], rows)

# %% ../../nbs/core/exports.ipynb #3c9b58e4
def render_poset(p: GradedPoset,  # Poset to serialize
                 fmt: OutputFormat = OutputFormat.JSON  # Target format
                ) -> str:  # Serialized poset
    """Dispatch to the exporter for the requested format."""
    renderers = {
        OutputFormat.JSON: poset_to_json,
        OutputFormat.CSV: poset_to_csv,
        OutputFormat.DOT: poset_to_dot,
        OutputFormat.TEXT: poset_to_text,
    }
    return renderers[OutputFormat(fmt)](p)

# %% ../../nbs/core/exports.ipynb #e40d7b16
def _cell(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, (list, tuple)):
        return " ".join(_cell(v) for v in value)
    return str(value)

def rows_to_csv(header: Sequence[str],  # Column names
                rows: Sequence[Sequence[Any]]  # Table rows
               ) -> str:  # CSV text with "\n" line endings
    """Write a table as CSV; sequences become space-separated cells."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()

def rows_to_text(header: Sequence[str],  # Column names
                 rows: Sequence[Sequence[Any]]  # Table rows
                ) -> str:  # Right-aligned columns separated by two spaces
    """Write a table as aligned plain text."""
    cells: List[List[str]] = [list(header)] + [[_cell(v) for v in row] for row in rows]
    widths = [max(len(r[c]) for r in cells) for c in range(len(header))]
    return "\n".join("  ".join(v.rjust(w) for v, w in zip(r, widths)).rstrip() for r in cells) + "\n"
