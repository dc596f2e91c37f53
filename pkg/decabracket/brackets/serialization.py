"""
Table documents: JSON interchange plus text and LaTeX listings.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, List

from decabracket.brackets.schemas import BracketTable, canonical_pairs, coordinate_position
from decabracket.config import SCHEMA_VERSION
from decabracket.polynomials.multidegree import MultiIndex
from decabracket.polynomials.polynomial import (
    coordinate_labels,
    coordinate_ring,
    format_monomial,
    monomial,
    parse_polynomial,
    render,
    render_latex,
    to_rational,
    x_ring,
)

TABLE_FORMATS = ("json", "text", "latex")


@dataclass
class TableDocument:
    tables: List[BracketTable] = field(default_factory=list)
    schema_version: str = SCHEMA_VERSION
    coordinate_order: List[MultiIndex] = field(default_factory=coordinate_labels)

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "coordinate_order": [list(label) for label in self.coordinate_order],
            "tables": [table.to_dict() for table in self.tables],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "TableDocument":
        """
        Rebuild a document from its dict form.

        Raises:
            ValueError: on an unknown schema version, a foreign coordinate order or malformed entries
        """
        version = data.get("schema_version")
        if version != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema version {version!r}; expected {SCHEMA_VERSION!r}")
        order = [MultiIndex(tuple(label)) for label in data.get("coordinate_order", [])]
        if order != coordinate_labels():
            raise ValueError(f"coordinate order {[str(o) for o in order]} is not the canonical Delta(2) order")
        tables = [_table_from_dict(item) for item in data.get("tables", [])]
        return cls(tables=tables, schema_version=version, coordinate_order=order)

    @classmethod
    def from_json(cls, text: str) -> "TableDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise ValueError(f"table document is not valid JSON: {e}") from e
        return cls.from_dict(data)


def _table_from_dict(item: dict) -> BracketTable:
    if item.get("c") is not None:
        cubic = monomial(x_ring(), MultiIndex(tuple(item["c"])))
    else:
        cubic = parse_polynomial(item["cubic"], x_ring())
    ring = coordinate_ring()
    known_pairs = set(canonical_pairs())
    entries = {}
    for entry in item.get("entries", []):
        a = MultiIndex(tuple(entry["a"]))
        b = MultiIndex(tuple(entry["b"]))
        if (a, b) not in known_pairs:
            raise ValueError(f"entry ({a}, {b}) is not a canonical pair")
        value = ring.zero
        for term in entry.get("terms", []):
            exponent = [0] * ring.ngens
            exponent[coordinate_position(MultiIndex(tuple(term["aprime"])))] += 1
            exponent[coordinate_position(MultiIndex(tuple(term["bprime"])))] += 1
            value = value + ring.from_dict({tuple(exponent): to_rational(term["coeff"])})
        entries[(a, b)] = value
    return BracketTable(cubic, entries)


def dump_tables_json(tables: Iterable[BracketTable]) -> str:
    return TableDocument(tables=list(tables)).to_json()


def parse_tables_json(text: str) -> List[BracketTable]:
    return TableDocument.from_json(text).tables


def render_tables_text(tables: Iterable[BracketTable]) -> str:
    """One line per nonzero entry, e.g. '{x0^2, x1^2}_{x2^3} = -2*y_110*y_002 - 2*y_101*y_011'."""
    lines = []
    for table in tables:
        for (a, b), value in table.entries.items():
            if value == 0:
                continue
            lines.append(f"{{{format_monomial(a)}, {format_monomial(b)}}}_{{{table.name}}} = {render(value)}")
    return "\n".join(lines) + "\n"


def _latex_monomial(exponent: MultiIndex) -> str:
    factors = [f"x_{i}" if e == 1 else f"x_{i}^{{{e}}}" for i, e in enumerate(exponent) if e]
    return " ".join(factors) if factors else "1"


def render_tables_latex(tables: Iterable[BracketTable]) -> str:
    blocks = []
    for table in tables:
        label = table.label
        title = _latex_monomial(label) if label is not None else render_latex(table.cubic)
        rows = [
            f"  \\{{{_latex_monomial(a)}, {_latex_monomial(b)}\\}}_{{{title}}} &= {render_latex(value)} \\\\"
            for (a, b), value in table.entries.items()
            if value != 0
        ]
        blocks.append(f"% F = {title}\n\\begin{{align*}}\n" + "\n".join(rows) + "\n\\end{align*}")
    return "\n\n".join(blocks) + "\n"


def render_tables(tables: Iterable[BracketTable], fmt: str) -> str:
    if fmt == "json":
        return dump_tables_json(tables)
    if fmt == "text":
        return render_tables_text(tables)
    if fmt == "latex":
        return render_tables_latex(tables)
    raise ValueError(f"unknown table format {fmt!r}; expected one of {TABLE_FORMATS}")


__all__ = [
    "TABLE_FORMATS",
    "TableDocument",
    "dump_tables_json",
    "parse_tables_json",
    "render_tables",
    "render_tables_latex",
    "render_tables_text",
]
