"""
Bracket tables {x^a, x^b}_F on P^5 and their serialized forms.
"""

from decabracket.brackets.fobracket import (
    IDENTITY,
    M4_ENGINES,
    SLOT_PERMUTATIONS,
    SWAP_AB,
    bracket_coefficient,
    bracket_entry,
    bracket_table,
    bracket_via_m4,
    contributing_permutations,
    delta_match,
    entry_triples,
    monomial_table,
    monomial_tables,
    rho_identity_holds,
    rho_tilde,
    sigma_term,
    slot,
)
from decabracket.brackets.schemas import BracketTable, canonical_pairs, coordinate_position, split_quadratic
from decabracket.brackets.serialization import (
    TABLE_FORMATS,
    TableDocument,
    dump_tables_json,
    parse_tables_json,
    render_tables,
    render_tables_latex,
    render_tables_text,
)

__all__ = [
    "IDENTITY",
    "M4_ENGINES",
    "SLOT_PERMUTATIONS",
    "SWAP_AB",
    "TABLE_FORMATS",
    "BracketTable",
    "TableDocument",
    "bracket_coefficient",
    "bracket_entry",
    "bracket_table",
    "bracket_via_m4",
    "canonical_pairs",
    "contributing_permutations",
    "coordinate_position",
    "delta_match",
    "dump_tables_json",
    "entry_triples",
    "monomial_table",
    "monomial_tables",
    "parse_tables_json",
    "render_tables",
    "render_tables_latex",
    "render_tables_text",
    "rho_identity_holds",
    "rho_tilde",
    "sigma_term",
    "slot",
    "split_quadratic",
]
