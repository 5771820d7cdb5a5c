"""The bigraded cochain complex of a tangle diagram.

Every state of the cube of resolutions is a disjoint union of circles and
arcs.  A circle contributes the Frobenius algebra span{1, X} and an arc the
one-dimensional space span{w}; the saddles between adjacent states act by
the maps in :func:`apply_saddle`.  Gradings are attached at chain level:
``k = ell(s) - n_minus`` and ``q = k + n_plus - n_minus + theta``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import product
from typing import NamedTuple

from .diagram import (
    CIRCLE_DELTA,
    DiagramError,
    SaddleKind,
    State,
    TangleDiagram,
    classify_saddle,
    crossing_counts,
    resolve,
)
from .linalg import QQ, Field, SparseMatrix, compose_check, get_field
from .poly import LaurentPoly

__all__ = [
    "ONE",
    "X",
    "W",
    "CrossingCapError",
    "GeneratorLabel",
    "BigradedComplex",
    "homological_degree",
    "quantum_degree",
    "apply_saddle",
    "build_complex",
    "DEFAULT_MAX_CROSSINGS",
]

ONE, X, W = "1", "X", "w"
_DEG = {ONE: 1, X: -1, W: -1}

DEFAULT_MAX_CROSSINGS = 16


class CrossingCapError(RuntimeError):
    """The diagram has more crossings than the configured cap."""


class GeneratorLabel(NamedTuple):
    state: tuple[int, ...]
    labels: tuple[str, ...]  # one entry per circle, in discovery order
    n_arcs: int

    @property
    def theta(self) -> int:
        return sum(_DEG[a] for a in self.labels) - self.n_arcs


def homological_degree(s, n_minus: int) -> int:
    bits = s.bits if isinstance(s, State) else tuple(s)
    return sum(bits) - n_minus


def quantum_degree(k: int, n_plus: int, n_minus: int, theta: int) -> int:
    return k + n_plus - n_minus + theta


_MULT = {(ONE, ONE): ONE, (ONE, X): X, (X, ONE): X}


def apply_saddle(kind: SaddleKind, fragment: tuple[str, ...]) -> list[tuple[int, tuple[str, ...]]]:
    """Image of the local labels at a saddle, as ``[(coeff, labels), ...]``.

    ``fragment`` lists the labels of the components meeting the saddle (one
    or two entries; arcs carry ``w``).  Merges put the circle first in the
    output, splits of an arc return ``(w, X)``.
    """
    frag = tuple(fragment)
    if kind is SaddleKind.MergeCircleCircle:
        _expect(kind, frag, 2, circles=2)
        out = _MULT.get(frag)
        return [(1, (out,))] if out else []
    if kind is SaddleKind.SplitCircle:
        _expect(kind, frag, 1, circles=1)
        if frag[0] == ONE:
            return [(1, (ONE, X)), (1, (X, ONE))]
        return [(1, (X, X))]
    if kind is SaddleKind.ReconnectArcArc:
        _expect(kind, frag, 2, circles=0)
        return []
    if kind is SaddleKind.MergeCircleArc:
        _expect(kind, frag, 2, circles=1)
        circle = frag[0] if frag[0] != W else frag[1]
        return [(1, (W,))] if circle == ONE else []
    if kind is SaddleKind.SplitArcCircle:
        _expect(kind, frag, 1, circles=0)
        return [(1, (W, X))]
    raise ValueError(f"unknown saddle kind {kind!r}")


def _expect(kind, frag, size, circles):
    n_circ = sum(1 for a in frag if a in (ONE, X))
    if len(frag) != size or n_circ != circles or any(a not in _DEG for a in frag):
        raise ValueError(f"{kind.value} saddle cannot act on fragment {frag!r}")


@dataclass
class BigradedComplex:
    """Chain groups ``C^{k,q}`` with differentials ``d^{k,q}: C^{k,q} -> C^{k+1,q}``."""

    field: Field
    n_plus: int
    n_minus: int
    basis: dict[tuple[int, int], list[GeneratorLabel]]
    differential: dict[tuple[int, int], SparseMatrix] = field(default_factory=dict)

    def gradings(self) -> list[tuple[int, int]]:
        return sorted(self.basis)

    def dim(self, k: int, q: int) -> int:
        return len(self.basis.get((k, q), ()))

    def d(self, k: int, q: int) -> SparseMatrix:
        m = self.differential.get((k, q))
        if m is None:
            m = SparseMatrix(self.dim(k + 1, q), self.dim(k, q), field=self.field)
        return m

    @property
    def total_dim(self) -> int:
        return sum(len(b) for b in self.basis.values())

    def graded_dimension(self) -> LaurentPoly:
        """Sum of ``dim C^{k,q} x^k y^q``."""
        return LaurentPoly({g: len(b) for g, b in self.basis.items()})

    def d_squared_is_zero(self) -> bool:
        return all(compose_check(self.d(k + 1, q), self.d(k, q)) for k, q in self.basis)

    def gradings_consistent(self) -> bool:
        for (k, q), gens in self.basis.items():
            for g in gens:
                if homological_degree(g.state, self.n_minus) != k:
                    return False
                if quantum_degree(k, self.n_plus, self.n_minus, g.theta) != q:
                    return False
        return True

    def to_json(self) -> str:
        blocks = []
        for k, q in self.gradings():
            m = self.d(k, q)
            blocks.append({
                "k": k,
                "q": q,
                "dim": self.dim(k, q),
                "differential": [[r, c, _scalar(v)] for r, c, v in m.triplets()],
            })
        return json.dumps(
            {"field": self.field.name, "n_plus": self.n_plus, "n_minus": self.n_minus, "blocks": blocks},
            indent=1,
        )


def _scalar(v):
    if hasattr(v, "denominator") and v.denominator != 1:
        return str(v)
    return int(v)


def _bits_lex(n: int):
    for v in range(1 << n):
        yield tuple((v >> (n - 1 - i)) & 1 for i in range(n))


def build_complex(d: TangleDiagram, field=QQ, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> BigradedComplex:
    """Apply the TQFT to the cube of resolutions of ``d``."""
    fld = get_field(field)
    n = d.n
    if n > max_crossings:
        raise CrossingCapError(f"diagram has {n} crossings, cap is {max_crossings}")
    n_plus, n_minus = crossing_counts(d)

    states = list(_bits_lex(n))
    resolutions = {s: resolve(d, s) for s in states}

    basis: dict[tuple[int, int], list[GeneratorLabel]] = {}
    position: dict[tuple, tuple[tuple[int, int], int]] = {}
    circles_of: dict[tuple, list[int]] = {}
    for s in states:
        res = resolutions[s]
        circ = [i for i, c in enumerate(res.components) if not c.is_arc]
        circles_of[s] = circ
        n_arcs = len(res.components) - len(circ)
        k = sum(s) - n_minus
        for labels in product((ONE, X), repeat=len(circ)):
            g = GeneratorLabel(s, labels, n_arcs)
            theta = len(circ) - 2 * labels.count(X) - n_arcs
            q = quantum_degree(k, n_plus, n_minus, theta)
            block = basis.setdefault((k, q), [])
            position[(s, labels)] = ((k, q), len(block))
            block.append(g)

    entries: dict[tuple[int, int], dict[tuple[int, int], int]] = {}
    images: dict[tuple, list] = {}
    for s in states:
        src = resolutions[s]
        src_circ = circles_of[s]
        src_slot = {ci: j for j, ci in enumerate(src_circ)}
        for i in range(n):
            if s[i]:
                continue
            t = s[:i] + (1,) + s[i + 1:]
            dst = resolutions[t]
            kind = classify_saddle(d, src, i)
            if dst.circle_count - src.circle_count != CIRCLE_DELTA[kind]:
                raise DiagramError(f"crossing {i}: port order is not planar")
            sign = -1 if sum(s[:i]) % 2 else 1
            c = d.crossings[i]
            a_src = src.component_of[c.ports[0]]
            b_src = src.component_of[c.ports[2]]
            touched_src = [a_src] if a_src == b_src else [a_src, b_src]
            # in the 1-smoothing ports 1,4 share a component and so do 2,3
            c1 = dst.component_of[c.ports[0]]
            c2 = dst.component_of[c.ports[1]]
            touched_dst = [c1] if c1 == c2 else [c1, c2]

            dst_circ = circles_of[t]
            dst_slot = {ci: j for j, ci in enumerate(dst_circ)}
            key_to_dst = {comp.key: ci for ci, comp in enumerate(dst.components)}
            carry = []  # (src slot, dst slot) for circles away from the saddle
            for ci in src_circ:
                if ci in touched_src:
                    continue
                carry.append((src_slot[ci], dst_slot[key_to_dst[src.components[ci].key]]))

            if kind is SaddleKind.SplitArcCircle:
                # order the outputs as (arc, circle)
                touched_dst.sort(key=lambda ci: not dst.components[ci].is_arc)

            for labels in product((ONE, X), repeat=len(src_circ)):
                frag = tuple(labels[src_slot[ci]] if ci in src_slot else W for ci in touched_src)
                image = images.get((kind, frag))
                if image is None:
                    image = images[(kind, frag)] = apply_saddle(kind, frag)
                if not image:
                    continue
                grading, col = position[(s, labels)]
                for coeff, out in image:
                    tgt = [None] * len(dst_circ)
                    for js, jd in carry:
                        tgt[jd] = labels[js]
                    for ci, lab in zip(touched_dst, out):
                        if lab != W:
                            tgt[dst_slot[ci]] = lab
                    tgt_grading, row = position[(t, tuple(tgt))]
                    if tgt_grading != (grading[0] + 1, grading[1]):
                        raise AssertionError(f"saddle {kind.value} does not preserve q")
                    block = entries.setdefault(grading, {})
                    block[(row, col)] = block.get((row, col), 0) + sign * coeff

    differential = {}
    for (k, q), ent in entries.items():
        m = SparseMatrix(len(basis.get((k + 1, q), ())), len(basis[(k, q)]), ent, fld)
        if not m.is_zero():
            differential[(k, q)] = m
    return BigradedComplex(fld, n_plus, n_minus, basis, differential)
