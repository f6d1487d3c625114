"""
The two worked products, regenerated row by row.

Each table lists every ``w`` of the right length (as the reduced word used in
the published table), the clan ``w . γ(u, v)`` and the predicted constant.
Golden copies ship in ``schubert_bd/data``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from .clans import Clan
from .richardson import evaluate_constant, expansion_degree, gamma_of_pair
from .weyl import (
    SignedPermutation,
    check_reduced_word,
    elements_of_length,
    format_signed_perm,
    longest_element,
    multiply,
    parse_signed_perm,
)

__all__ = ["TableSpec", "TABLES", "TableRow", "table_rows", "render_table",
           "golden_table", "table_records"]


@dataclass(frozen=True)
class TableSpec:
    number: int
    lie_type: str
    rank: int
    u: str
    v: str
    words: tuple[tuple[int, ...], ...]


# row order as published
_TABLE_1_WORDS = (
    (1, 2, 1, 4, 3, 2, 1), (3, 2, 1, 4, 3, 2, 1), (1, 3, 2, 4, 3, 2, 1), (2, 3, 2, 4, 3, 2, 1),
    (2, 1, 3, 4, 3, 2, 1), (1, 2, 3, 4, 3, 2, 1), (1, 3, 2, 1, 4, 3, 2), (2, 3, 2, 1, 4, 3, 2),
    (4, 3, 2, 1, 4, 3, 2), (2, 1, 3, 2, 4, 3, 2), (1, 2, 3, 2, 4, 3, 2), (1, 2, 1, 3, 4, 3, 2),
    (2, 1, 3, 2, 1, 4, 3), (1, 2, 3, 2, 1, 4, 3), (1, 4, 3, 2, 1, 4, 3), (2, 4, 3, 2, 1, 4, 3),
    (3, 4, 3, 2, 1, 4, 3), (1, 2, 1, 3, 2, 4, 3), (2, 1, 4, 3, 2, 4, 3), (1, 2, 4, 3, 2, 4, 3),
    (3, 2, 4, 3, 2, 4, 3), (1, 3, 4, 3, 2, 4, 3), (2, 3, 4, 3, 2, 4, 3), (1, 2, 1, 3, 2, 1, 4),
    (2, 1, 4, 3, 2, 1, 4), (1, 2, 4, 3, 2, 1, 4), (3, 2, 4, 3, 2, 1, 4), (1, 3, 4, 3, 2, 1, 4),
    (2, 3, 4, 3, 2, 1, 4), (1, 2, 1, 4, 3, 2, 4), (3, 2, 1, 4, 3, 2, 4), (1, 3, 2, 4, 3, 2, 4),
    (2, 3, 2, 4, 3, 2, 4), (2, 1, 3, 4, 3, 2, 4), (1, 2, 3, 4, 3, 2, 4), (1, 3, 2, 1, 4, 3, 4),
    (2, 3, 2, 1, 4, 3, 4), (4, 3, 2, 1, 4, 3, 4), (2, 1, 3, 2, 4, 3, 4), (1, 2, 3, 2, 4, 3, 4),
    (1, 4, 3, 2, 4, 3, 4), (2, 4, 3, 2, 4, 3, 4), (3, 4, 3, 2, 4, 3, 4), (1, 2, 1, 3, 4, 3, 4),
)

_TABLE_2_WORDS = (
    (2, 1, 3, 2, 1), (1, 2, 3, 2, 1), (2, 1, 4, 2, 1), (1, 2, 4, 2, 1), (3, 2, 4, 2, 1),
    (1, 3, 4, 2, 1), (2, 3, 4, 2, 1), (1, 2, 1, 3, 2), (4, 2, 1, 3, 2), (1, 2, 1, 4, 2),
    (3, 2, 1, 4, 2), (1, 3, 2, 4, 2), (2, 3, 2, 4, 2), (2, 1, 3, 4, 2), (1, 2, 3, 4, 2),
    (1, 4, 2, 1, 3), (2, 4, 2, 1, 3), (3, 4, 2, 1, 3), (2, 1, 4, 2, 3), (1, 2, 4, 2, 3),
    (3, 2, 4, 2, 3), (1, 3, 4, 2, 3), (2, 3, 4, 2, 3), (1, 3, 2, 1, 4), (2, 3, 2, 1, 4),
    (2, 1, 3, 2, 4), (1, 2, 3, 2, 4), (1, 2, 1, 3, 4),
)

TABLES = {
    1: TableSpec(1, "B", 4, "-2,-3,-4,1", "2,3,4,1", _TABLE_1_WORDS),
    2: TableSpec(2, "D", 4, "-2,-3,4,1", "2,3,1,4", _TABLE_2_WORDS),
}


@dataclass(frozen=True)
class TableRow:
    word: tuple[int, ...]
    w: SignedPermutation
    clan: Clan
    coefficient: int


def _pair(spec: TableSpec) -> tuple[SignedPermutation, SignedPermutation]:
    return (parse_signed_perm(spec.u, spec.lie_type, spec.rank),
            parse_signed_perm(spec.v, spec.lie_type, spec.rank))


def table_rows(number: int) -> list[TableRow]:
    """Recompute every row; the words must cover each ``w`` of the right length once."""
    spec = TABLES[number]
    u, v = _pair(spec)
    deg = expansion_degree(u, v)
    elems = [check_reduced_word(word, spec.rank, spec.lie_type) for word in spec.words]
    expected = elements_of_length(spec.rank, spec.lie_type, deg)
    if sorted(elems) != sorted(expected):
        raise AssertionError(f"table {number} words do not enumerate the length-{deg} elements")
    rows = []
    for word, w in zip(spec.words, elems):
        res = evaluate_constant(u, v, word=word)
        rows.append(TableRow(word, w, res.clan, res.value))
    return rows


def _header(spec: TableSpec) -> list[str]:
    u, v = _pair(spec)
    w0u = multiply(longest_element(spec.rank, spec.lie_type), u)
    gamma = gamma_of_pair(u, v)
    return [
        f"# Table {spec.number}: {spec.lie_type}{spec.rank} product "
        f"S_{{{format_signed_perm(w0u)}}} * S_{{{format_signed_perm(v)}}}",
        f"# u = {format_signed_perm(u)}, v = {format_signed_perm(v)}, "
        f"length {expansion_degree(u, v)}, {len(spec.words)} elements",
        f"# w\tw . {gamma}\tc",
    ]


def render_table(number: int) -> str:
    spec = TABLES[number]
    lines = _header(spec)
    for row in table_rows(number):
        lines.append(f"{list(row.word)}\t{row.clan}\t{row.coefficient}")
    return "\n".join(lines) + "\n"


def table_records(number: int) -> list[dict]:
    spec = TABLES[number]
    return [{"type": spec.lie_type, "rank": spec.rank,
             "inputs": {"u": spec.u, "v": spec.v, "word": list(row.word)},
             "result": {"w": format_signed_perm(row.w), "clan": str(row.clan),
                        "coefficient": row.coefficient}}
            for row in table_rows(number)]


def render_table_json(number: int) -> str:
    return "".join(json.dumps(r) + "\n" for r in table_records(number))


def golden_table(number: int) -> str:
    return resources.files("schubert_bd").joinpath(f"data/table{number}.txt").read_text()
