"""Golden Poincare polynomials for the low-crossing classification tables.

Each :class:`GoldenEntry` pairs a tangle type and a sign multiset with the
reference polynomial and a diagram file under ``tanglekh/data``.  Types
``2_4``, ``2_5`` and ``2_6`` share one golden row; their ``{+,-}`` entry
prints ``2y^{3}`` where the closed form gives ``2y^{-3}``, so those entries
carry a ``corrected`` polynomial and are reported separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .diagram import TangleDiagram, load_diagram
from .poly import LaurentPoly, parse_poly

__all__ = ["GoldenEntry", "GOLDEN", "golden_entries", "fixture_path", "load_fixture", "slug"]


@dataclass(frozen=True)
class GoldenEntry:
    table: int
    type_label: str
    signs: str  # e.g. "+,+,-"
    printed: str
    corrected: Optional[str] = None
    variant: str = ""

    @property
    def expected(self) -> LaurentPoly:
        return parse_poly(self.corrected or self.printed)

    @property
    def printed_poly(self) -> LaurentPoly:
        return parse_poly(self.printed)

    @property
    def flagged(self) -> bool:
        return self.corrected is not None

    @property
    def sign_counts(self) -> tuple[int, int]:
        s = [t for t in self.signs.split(",") if t]
        return s.count("+"), s.count("-")

    @property
    def file(self) -> str:
        return slug(self.type_label, self.signs, self.variant) + ".tangle"

    @property
    def name(self) -> str:
        v = f" ({self.variant})" if self.variant else ""
        return f"{self.type_label}{v} {{{self.signs}}}"


def slug(type_label: str, signs: str, variant: str = "") -> str:
    t = type_label.replace("'", "p").replace("_", "")
    s = "".join({"+": "p", "-": "m"}[c] for c in signs if c in "+-") or "0"
    return f"{t}_{s}" + (f"_{variant}" if variant else "")


def _rows(table, type_label, pairs, variant=""):
    return [GoldenEntry(table, type_label, s, p, variant=variant) for s, p in pairs]


_T1_TWO_FOUR = [
    ("+,+", "x^{2}y+2x+y^{-1}"),
    ("-,-", "y^{-5}+2x^{-1}y^{-6}+x^{-2}y^{-7}"),
]

GOLDEN: tuple[GoldenEntry, ...] = tuple(
    _rows(1, "0_0", [("", "y+y^{-1}")])
    + _rows(1, "0_1", [("", "y^{-1}")])
    + _rows(1, "1_1", [("+", "x+y^{-1}"), ("-", "y^{-3}+x^{-1}y^{-4}")])
    + _rows(1, "2_1", [("+,+", "1+y^{2}+x^{2}y^{4}+x^{2}y^{6}"), ("-,-", "1+y^{-2}+x^{-2}y^{-4}+x^{-2}y^{-6}")])
    + _rows(1, "2'_1", [("+,+", "1+y^{2}+x^{2}y^{4}+x^{2}y^{6}"), ("-,-", "1+y^{-2}+x^{-2}y^{-4}+x^{-2}y^{-6}")])
    + _rows(1, "2_2", [("+,+", "1+x^{2}y^{4}"), ("-,-", "y^{-2}+x^{-2}y^{-6}")])
    + _rows(1, "2_3", [("+,+", "1+xy+x^{2}y^{3}"), ("-,-", "y^{-3}+x^{-1}y^{-5}+x^{-2}y^{-6}")])
    + _rows(1, "2'_3", [("+,+", "x^2y^2+xy+y^{-1}"), ("-,-", "x^{-2}y^{-7}+x^{-1}y^{-5}+y^{-4}")])
    + [
        e
        for t in ("2_4", "2_5", "2_6")
        for e in _rows(1, t, _T1_TWO_FOUR[:1])
        + [GoldenEntry(1, t, "+,-", "xy^{-2}+2y^{3}+x^{-1}y^{-4}", corrected="xy^{-2}+2y^{-3}+x^{-1}y^{-4}")]
        + _rows(1, t, _T1_TWO_FOUR[1:])
    ]
    + _rows(2, "3_1", [("-,-,-", "x^{-3}y^{-9}+x^{-2}y^{-5}+y^{-3}+y^{-1}")])
    + _rows(2, "3'_1", [("+,+,+", "x^3y^9+x^2y^5+y^3+y")])
    + _rows(2, "3_2", [("-,-,-", "x^{-3}y^{-9}+x^{-2}y^{-7}+y^{-3}")])
    + _rows(2, "3'_2", [("+,+,+", "x^3y^7+x^2y^5+y")])
    + _rows(2, "3_3", [
        ("-,-,-", "x^{-3}y^{-9}+x^{-2}y^{-8}+x^{-2}y^{-7}+x^{-1}y^{-6}+y^{-4}"),
        ("+,+,-", "x^2y^2+x+y^{-1}+y^{-2}+x^{-1}y^{-3}"),
    ])
    + _rows(2, "3'_3", [
        ("+,+,+", "x^3y^5+x^2y^4+x^2y^3+xy^2+1"),
        ("-,-,+", "x^{-2}y^{-6}+x^{-1}y^{-4}+y^{-3}+y^{-2}+xy^{-1}"),
    ])
    + _rows(2, "3_4", [
        ("+,+,+", "x^3y^6+x^2y^4+xy^2+y"),
        ("-,-,-", "x^{-3}y^{-8}+x^{-2}y^{-7}+x^{-1}y^{-5}+y^{-3}"),
    ])
    + _rows(2, "3'_4", [
        ("-,-,-", "x^{-3}y^{-10}+x^{-2}y^{-8}+x^{-1}y^{-6}+y^{-5}"),
        ("+,+,+", "x^3y^4+x^2y^3+xy+y^{-1}"),
    ])
    + _rows(2, "3_5", [("+,+,+", "2x^2y^2+2xy+1"), ("+,-,-", "x^{-2}y^{-6}+2x^{-1}y^{-5}+2y^{-4}")])
    + _rows(2, "3'_5", [("-,-,-", "2x^{-2}y^{-8}+2x^{-1}y^{-7}+y^{-6}"), ("-,+,+", "x^2+2xy^{-1}+2y^{-2}")])
    + _rows(2, "3_6", [
        ("-,-,-", "x^{-3}y^{-9}+3x^{-2}y^{-8}+2x^{-1}y^{-7}+y^{-5}"),
        ("+,+,-", "x^2y+2xy^{-1}+3y^{-2}+x^{-1}y^{-3}"),
    ])
    + _rows(2, "3'_6", [
        ("+,+,+", "x^3y^3+3x^2y^2+2xy+y^{-1}"),
        ("-,-,+", "xy^{-3}+3y^{-4}+2x^{-1}y^{-5}+x^{-2}y^{-7}"),
    ])
    + [
        e
        for v in ("path", "star")
        for e in _rows(2, "4arcs", [
            ("+,+,+", "y^{-1} + 3 x + 3 x^2 y + x^3 y^2"),
            ("+,+,-", "x^{-1}y^{-4} + 3 y^{-3} + 3 x y^{-2} + x^2 y^{-1}"),
            ("+,-,-", "x^{-2}y^{-7} + 3 x^{-1}y^{-6} + 3 y^{-5} + x y^{-4}"),
            ("-,-,-", "x^{-3}y^{-10} + 3 x^{-2}y^{-9} + 3 x^{-1}y^{-8} + y^{-7}"),
        ], variant=v)
    ]
)


def golden_entries(table="all") -> list[GoldenEntry]:
    if str(table) == "all":
        return list(GOLDEN)
    return [e for e in GOLDEN if e.table == int(table)]


def fixture_path(entry_or_name) -> str:
    name = entry_or_name.file if isinstance(entry_or_name, GoldenEntry) else entry_or_name
    return str(resources.files("tanglekh").joinpath("data", name))


def load_fixture(entry_or_name) -> TangleDiagram:
    return load_diagram(fixture_path(entry_or_name))
