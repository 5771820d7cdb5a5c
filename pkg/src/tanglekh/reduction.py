"""Arc reduction and the closed form for simple tangles.

Removing an arc that meets the rest of a tangle at most once multiplies the
Poincare polynomial by a fixed factor:

===============  ========================  =========================
removed arc      bigradings                 factor
===============  ========================  =========================
crossing-free    (0,-1)                     y^-1
right-handed     (0,0) + (1,1)              1 + xy
left-handed      (-1,-3) + (0,-2)           x^-1 y^-3 + y^-2
===============  ========================  =========================

Simple tangles can be peeled down to nothing this way, which gives
``y^(-N + n+ + n-) (1 + xy)^n+ (x^-1 y^-3 + y^-2)^n-``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .complex import DEFAULT_MAX_CROSSINGS, build_complex
from .construct import PendantAttachment, attach_pendant_arc
from .diagram import (
    DiagramError,
    TangleDiagram,
    arc_graph,
    connected_components,
    crossing_counts,
    find_leaf_arc,
    is_simple,
    remove_arc,
    strands,
)
from .homology import BettiTable, betti, poincare_polynomial
from .linalg import QQ
from .poly import BigradingMultiset, LaurentPoly

__all__ = [
    "StepKind",
    "ReductionStep",
    "ReductionTrace",
    "NotSimpleError",
    "arc_reduction_factor",
    "step_generators",
    "simple_poincare",
    "generator_expansion",
    "reduce",
    "poincare_by_components",
    "predicted_betti",
    "arc_reduction_theorem_check",
]


class StepKind(Enum):
    FreeArc = "free"
    RightCrossing = "right"
    LeftCrossing = "left"


class NotSimpleError(DiagramError):
    """The diagram is not a circle-free simple tangle."""


_FACTORS = {
    StepKind.FreeArc: {(0, -1): 1},
    StepKind.RightCrossing: {(0, 0): 1, (1, 1): 1},
    StepKind.LeftCrossing: {(-1, -3): 1, (0, -2): 1},
}


def arc_reduction_factor(kind: StepKind) -> LaurentPoly:
    return LaurentPoly(_FACTORS[kind])


def step_generators(kind: StepKind) -> BigradingMultiset:
    return BigradingMultiset(_FACTORS[kind])


def _check_counts(n_arcs: int, n_plus: int, n_minus: int):
    if min(n_arcs, n_plus, n_minus) < 0:
        raise ValueError("counts must be nonnegative")
    if n_plus + n_minus > n_arcs - 1:
        raise ValueError(
            f"{n_arcs} arcs cannot carry {n_plus + n_minus} crossings in a simple tangle"
        )


def simple_poincare(n_arcs: int, n_plus: int, n_minus: int) -> LaurentPoly:
    _check_counts(n_arcs, n_plus, n_minus)
    return (
        LaurentPoly.monomial(0, -n_arcs + n_plus + n_minus)
        * arc_reduction_factor(StepKind.RightCrossing) ** n_plus
        * arc_reduction_factor(StepKind.LeftCrossing) ** n_minus
    )


def generator_expansion(n_arcs: int, n_plus: int, n_minus: int) -> BigradingMultiset:
    """Bigradings of the homology generators of a simple tangle."""
    _check_counts(n_arcs, n_plus, n_minus)
    return (
        step_generators(StepKind.FreeArc) ** (n_arcs - n_plus - n_minus)
        * step_generators(StepKind.RightCrossing) ** n_plus
        * step_generators(StepKind.LeftCrossing) ** n_minus
    )


def binomial_generators(n_plus: int) -> BigradingMultiset:
    """``C(n+, k)`` generators at ``(k, k - 1)``: one arc crossed by n+ parallel arcs."""
    return BigradingMultiset({(k, k - 1): comb(n_plus, k) for k in range(n_plus + 1)})


@dataclass(frozen=True)
class ReductionStep:
    kind: StepKind
    arc: str
    residual: TangleDiagram

    @property
    def factor(self) -> LaurentPoly:
        return arc_reduction_factor(self.kind)

    def describe(self) -> str:
        return f"remove arc {self.arc} [{self.kind.value}] -> factor {self.factor}"


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[ReductionStep, ...]

    def __len__(self) -> int:
        return len(self.steps)

    def kinds(self) -> list[StepKind]:
        return [s.kind for s in self.steps]

    def lines(self) -> list[str]:
        return [s.describe() for s in self.steps]


def reduce(d: TangleDiagram) -> tuple[ReductionTrace, LaurentPoly]:
    """Peel leaf arcs off a circle-free simple tangle, multiplying factors."""
    if any(not st.is_arc for st in strands(d)):
        raise NotSimpleError("diagram has circle components; split them off first")
    if not is_simple(d):
        raise NotSimpleError("diagram is not simple (arc graph is not a forest)")
    steps = []
    poly = LaurentPoly.one()
    cur = d
    while True:
        arc = find_leaf_arc(cur)
        if arc is None:
            break
        _, graph, _ = arc_graph(cur)
        touching = [ci for a, b, ci in graph if arc in (a, b)]
        if not touching:
            kind = StepKind.FreeArc
        else:
            kind = StepKind.RightCrossing if cur.crossings[touching[0]].sign > 0 else StepKind.LeftCrossing
        cur = remove_arc(cur, arc)
        steps.append(ReductionStep(kind, arc, cur))
        poly = poly * arc_reduction_factor(kind)
    return ReductionTrace(tuple(steps)), poly


def poincare_by_components(d: TangleDiagram, field=QQ, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """Product over connected components; simple arc components use :func:`reduce`."""
    total = LaurentPoly.one()
    for comp in connected_components(d):
        circle_free = all(st.is_arc for st in strands(comp))
        if circle_free and is_simple(comp):
            total = total * reduce(comp)[1]
        else:
            total = total * poincare_polynomial(betti(build_complex(comp, field, max_crossings)))
    return total


def predicted_betti(small: BettiTable, sign: int) -> dict[tuple[int, int], int]:
    """Betti numbers of T' predicted from those of T for a pendant arc of ``sign``.

    Right-handed: ``H^{k,q}(T') = H^{k,q}(T) + H^{k-1,q-1}(T)``.
    Left-handed: ``H^{k,q}(T') = H^{k+1,q+3}(T) + H^{k,q+2}(T)``.
    """
    out: dict[tuple[int, int], int] = {}
    shifts = ((0, 0), (1, 1)) if sign > 0 else ((-1, -3), (0, -2))
    for dk, dq in shifts:
        for (k, q), v in small.shifted(dk, dq).items():
            out[(k, q)] = out.get((k, q), 0) + v
    return {g: v for g, v in out.items() if v}


def arc_reduction_theorem_check(d_small: TangleDiagram, attach: PendantAttachment,
                                field=QQ) -> bool:
    """Brute-force both sides of the pendant-arc isomorphism and compare dimensions."""
    big = attach_pendant_arc(d_small, attach, names=_fresh_names(d_small))
    small_b = betti(build_complex(d_small, field))
    big_b = betti(build_complex(big, field))
    return big_b.dims == predicted_betti(small_b, attach.sign)


def _fresh_names(d: TangleDiagram) -> tuple[str, str]:
    taken = set(d.edges) | set(d.boundary_points)
    k = 0
    while f"p{k}" in taken or f"p{k + 1}" in taken:
        k += 2
    return f"p{k}", f"p{k + 1}"
