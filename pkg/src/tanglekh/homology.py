"""Betti numbers, Poincare polynomials and the state-sum Euler characteristic."""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field

from .complex import BigradedComplex, build_complex, DEFAULT_MAX_CROSSINGS
from .diagram import TangleDiagram, crossing_counts, resolve
from .linalg import QQ, Field, get_field, rank
from .poly import LaurentPoly

__all__ = [
    "BettiTable",
    "betti",
    "poincare_polynomial",
    "jones_specialization",
    "graded_euler_state_sum",
    "khovanov_poincare",
]


@dataclass
class BettiTable:
    dims: dict[tuple[int, int], int]
    n_plus: int = 0
    n_minus: int = 0
    field: Field = QQ
    ranks: dict[tuple[int, int], int] = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if any(v < 0 for v in self.dims.values()):
            raise ValueError("Betti numbers are nonnegative")
        self.dims = {g: v for g, v in self.dims.items() if v}

    def __getitem__(self, kq: tuple[int, int]) -> int:
        return self.dims.get(kq, 0)

    def total(self) -> int:
        return sum(self.dims.values())

    def shifted(self, dk: int, dq: int) -> dict[tuple[int, int], int]:
        return {(k + dk, q + dq): v for (k, q), v in self.dims.items()}

    def to_json(self) -> str:
        return json.dumps({
            "field": self.field.name,
            "n_plus": self.n_plus,
            "n_minus": self.n_minus,
            "betti": [[k, q, v] for (k, q), v in sorted(self.dims.items())],
        })

    def format(self) -> str:
        """Grid with k across and q down; blank cells are zero."""
        if not self.dims:
            return "(zero)"
        ks = range(min(k for k, _ in self.dims), max(k for k, _ in self.dims) + 1)
        qs = sorted({q for _, q in self.dims}, reverse=True)
        width = max(4, max(len(str(v)) for v in self.dims.values()) + 1)
        lines = ["q\\k " + "".join(f"{k:>{width}}" for k in ks)]
        for q in qs:
            cells = "".join(f"{self.dims.get((k, q), '.') !s:>{width}}" for k in ks)
            lines.append(f"{q:>4}" + cells)
        return "\n".join(lines)


def betti(c: BigradedComplex) -> BettiTable:
    """``dim H^{k,q} = dim C^{k,q} - rank d^{k,q} - rank d^{k-1,q}``."""
    ranks = {(k, q): rank(m) for (k, q), m in c.differential.items()}
    dims = {}
    for k, q in c.basis:
        h = c.dim(k, q) - ranks.get((k, q), 0) - ranks.get((k - 1, q), 0)
        if h < 0:
            raise ArithmeticError(f"negative homology at {(k, q)}; is d o d = 0?")
        dims[(k, q)] = h
    return BettiTable(dims, c.n_plus, c.n_minus, c.field, ranks)


def poincare_polynomial(b: BettiTable) -> LaurentPoly:
    return LaurentPoly(b.dims)


def jones_specialization(p: LaurentPoly) -> LaurentPoly:
    """Set ``x = -1``; the result only involves ``y``."""
    return p.substitute_x(-1)


def graded_euler_state_sum(d: TangleDiagram) -> LaurentPoly:
    """Graded Euler characteristic straight from the resolutions, no linear algebra."""
    n_plus, n_minus = crossing_counts(d)
    circle = LaurentPoly({(0, 1): 1, (0, -1): 1})
    total = LaurentPoly()
    n = d.n
    for v in range(1 << n):
        bits = tuple((v >> (n - 1 - i)) & 1 for i in range(n))
        res = resolve(d, bits)
        k = sum(bits) - n_minus
        term = LaurentPoly.monomial(0, k + n_plus - n_minus, (-1) ** (k % 2))
        term = term * circle ** res.circle_count * LaurentPoly.monomial(0, -res.arc_count)
        total = total + term
    return total


def khovanov_poincare(d: TangleDiagram, field=QQ, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """Brute-force Poincare polynomial of ``d``."""
    return poincare_polynomial(betti(build_complex(d, get_field(field), max_crossings)))
