"""Oriented planar tangle diagrams.

A diagram is a list of crossings plus crossing-free loops and arcs.  Each
crossing lists four edge labels counterclockwise, starting at the incoming
under-strand.  Every edge label occurs exactly twice (once entering and once
leaving a crossing) unless it touches the boundary, in which case the label
*is* the boundary point and occurs once.

Text notation, one declaration per line, ``#`` starts a comment::

    B p q r s        # optional boundary order
    X+ p e1 s q      # crossing, sign declared and checked
    A r s            # crossing-free arc from r to s
    O                # crossing-free loop

Orientation at a crossing: port 1 enters, port 3 leaves (under-strand).
A right-handed crossing (``+``) has the over-strand entering at port 4 and
leaving at port 2; a left-handed one (``-``) enters at port 2.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import NamedTuple, Optional, Sequence, Union

__all__ = [
    "DiagramError",
    "DiagramSyntaxError",
    "PortDegreeError",
    "OrientationError",
    "DanglingEdgeError",
    "Port",
    "Boundary",
    "Crossing",
    "TangleDiagram",
    "Strand",
    "State",
    "ResolvedComponent",
    "ResolvedDiagram",
    "SaddleKind",
    "parse_diagram",
    "serialize_diagram",
    "load_diagram",
    "diagram_to_json",
    "diagram_from_json",
    "crossing_counts",
    "resolve",
    "saddle_type",
    "strands",
    "arc_graph",
    "is_simple",
    "find_leaf_arc",
    "mirror",
    "relabel",
    "disjoint_union",
    "connected_components",
    "remove_arc",
]


class DiagramError(ValueError):
    """Base class for malformed diagrams."""


class DiagramSyntaxError(DiagramError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class PortDegreeError(DiagramError):
    pass


class OrientationError(DiagramError):
    pass


class DanglingEdgeError(DiagramError):
    pass


class Port(NamedTuple):
    crossing: int
    index: int  # 0..3, counterclockwise from the incoming under-strand


class Boundary(NamedTuple):
    label: str


Endpoint = Union[Port, Boundary]

# 0-smoothing joins ports (1,2),(3,4); 1-smoothing joins (1,4),(2,3)
SMOOTHINGS = (((0, 1), (2, 3)), ((0, 3), (1, 2)))


@dataclass(frozen=True)
class Crossing:
    ports: tuple[str, str, str, str]
    sign: int

    def __post_init__(self):
        object.__setattr__(self, "ports", tuple(self.ports))
        if len(self.ports) != 4:
            raise PortDegreeError(f"crossing needs 4 ports, got {len(self.ports)}")
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign!r}")

    @property
    def over_in(self) -> int:
        return 3 if self.sign > 0 else 1

    @property
    def over_out(self) -> int:
        return 1 if self.sign > 0 else 3

    def is_incoming(self, index: int) -> bool:
        return index == 0 or index == self.over_in


@dataclass(frozen=True)
class TangleDiagram:
    """Validated oriented tangle diagram; immutable."""

    crossings: tuple[Crossing, ...] = ()
    free_loops: int = 0
    free_arcs: tuple[tuple[str, str], ...] = ()
    boundary_points: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "free_arcs", tuple(tuple(a) for a in self.free_arcs))
        if self.free_loops < 0:
            raise DiagramError("free_loops must be nonnegative")
        edges, order = _validate(self)
        object.__setattr__(self, "boundary_points", order)
        # derived data is excluded from equality via __dict__ placement
        self.__dict__["_edges"] = edges

    @property
    def n(self) -> int:
        return len(self.crossings)

    @property
    def edges(self) -> dict[str, tuple[Endpoint, Endpoint]]:
        """Edge label -> (tail, head)."""
        return dict(self._edges)

    @cached_property
    def edge_order(self) -> tuple[str, ...]:
        return tuple(self._edges)

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self._edges)}

    @cached_property
    def boundary_edges(self) -> frozenset[str]:
        return frozenset(
            e for e, (t, h) in self._edges.items()
            if isinstance(t, Boundary) or isinstance(h, Boundary)
        )

    @property
    def n_arcs(self) -> int:
        return len(self.boundary_points) // 2

    def __str__(self) -> str:
        return serialize_diagram(self)


def _port_labels(d: TangleDiagram):
    for ci, c in enumerate(d.crossings):
        for pi, label in enumerate(c.ports):
            yield label, Port(ci, pi), c.is_incoming(pi)


def _validate(d: TangleDiagram):
    occ: dict[str, list[tuple[Port, bool]]] = defaultdict(list)
    for label, port, incoming in _port_labels(d):
        occ[label].append((port, incoming))
    for label, uses in occ.items():
        if len(uses) > 2:
            raise PortDegreeError(
                f"edge {label!r} is incident to {len(uses)} ports (at most 2 allowed)"
            )
    arc_labels: list[str] = []
    for p, q in d.free_arcs:
        if p == q:
            raise PortDegreeError(f"free arc endpoints must differ, got {p!r} twice")
        for lab in (p, q):
            if lab in occ or lab in arc_labels:
                raise PortDegreeError(f"boundary point {lab!r} is used more than once")
            arc_labels.append(lab)

    edges: dict[str, tuple[Endpoint, Endpoint]] = {}
    seen_boundary: list[str] = []
    for label, uses in occ.items():
        if len(uses) == 2:
            (p1, in1), (p2, in2) = uses
            if in1 == in2:
                where = ", ".join(f"crossing {p.crossing} port {p.index + 1}" for p in (p1, p2))
                kind = "incoming" if in1 else "outgoing"
                raise OrientationError(
                    f"edge {label!r} is {kind} at both ends ({where}); "
                    "crossing signs disagree with the strand orientations"
                )
            tail, head = (p2, p1) if in1 else (p1, p2)
            edges[label] = (tail, head)
        else:
            (p1, in1), = uses
            b = Boundary(label)
            edges[label] = (b, p1) if in1 else (p1, b)
            seen_boundary.append(label)
    seen_boundary.extend(arc_labels)

    if d.boundary_points is None:
        order = tuple(seen_boundary)
    else:
        order = tuple(d.boundary_points)
        if len(set(order)) != len(order):
            raise PortDegreeError("boundary order lists a point twice")
        extra = set(seen_boundary) - set(order)
        if extra:
            raise DanglingEdgeError(
                f"edge(s) {sorted(extra)} have a free end that is not a declared boundary point"
            )
        missing = set(order) - set(seen_boundary)
        if missing:
            raise DanglingEdgeError(f"boundary point(s) {sorted(missing)} touch no edge")
    if len(order) % 2:
        raise DanglingEdgeError("odd number of boundary points")
    return edges, order


# ---------------------------------------------------------------- text format

_TOKEN = re.compile(r"\S+")
_LABEL = re.compile(r"[^\s#]+")


def parse_diagram(text: str) -> TangleDiagram:
    """Parse the line-based tangle notation into a validated diagram."""
    crossings: list[tuple[list[str], Optional[int], int]] = []
    free_arcs: list[tuple[str, str]] = []
    free_loops = 0
    boundary: Optional[list[str]] = None

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(line)]
        if not toks:
            continue
        head, col = toks[0]
        args = toks[1:]
        if head in ("X", "X+", "X-"):
            if len(args) != 4:
                raise DiagramSyntaxError(
                    f"crossing needs 4 edge labels, got {len(args)}", lineno,
                    args[4][1] if len(args) > 4 else len(line.rstrip()) + 1,
                )
            sign = {"X": None, "X+": 1, "X-": -1}[head]
            crossings.append(([a for a, _ in args], sign, lineno))
        elif head == "A":
            if len(args) != 2:
                raise DiagramSyntaxError(f"arc needs 2 boundary labels, got {len(args)}", lineno, col)
            free_arcs.append((args[0][0], args[1][0]))
        elif head == "O":
            if args:
                raise DiagramSyntaxError("loop takes no arguments", lineno, args[0][1])
            free_loops += 1
        elif head == "B":
            if boundary is not None:
                raise DiagramSyntaxError("boundary order declared twice", lineno, col)
            boundary = [a for a, _ in args]
        else:
            raise DiagramSyntaxError(f"unknown declaration {head!r}", lineno, col)

    # degree check first so that a malformed crossing reports the real problem
    counts: dict[str, int] = defaultdict(int)
    for labels, _, _ in crossings:
        for lab in labels:
            counts[lab] += 1
    for lab, c in counts.items():
        if c > 2:
            raise PortDegreeError(f"edge {lab!r} is incident to {c} ports (at most 2 allowed)")

    signs = _infer_signs([(labels, sign) for labels, sign, _ in crossings])
    return TangleDiagram(
        crossings=tuple(Crossing(tuple(labels), s) for (labels, _, _), s in zip(crossings, signs)),
        free_loops=free_loops,
        free_arcs=tuple(free_arcs),
        boundary_points=None if boundary is None else tuple(boundary),
    )


def _infer_signs(items: list[tuple[list[str], Optional[int]]]) -> list[int]:
    """Fill in undeclared crossing signs from the orientation of neighbouring edges."""
    signs = [s for _, s in items]
    if all(s is not None for s in signs):
        return signs  # type: ignore[return-value]
    changed = True
    while changed and any(s is None for s in signs):
        changed = False
        # direction known for each label occurrence: label -> list of incoming flags
        known: dict[str, list[bool]] = defaultdict(list)
        for (labels, _), s in zip(items, signs):
            known[labels[0]].append(True)
            known[labels[2]].append(False)
            if s is not None:
                known[labels[3 if s > 0 else 1]].append(True)
                known[labels[1 if s > 0 else 3]].append(False)
        for idx, ((labels, _), s) in enumerate(zip(items, signs)):
            if s is not None:
                continue
            for pos, sgn_if_in in ((3, 1), (1, -1)):
                other = known.get(labels[pos], [])
                if other:
                    # the partner occurrence has the opposite direction
                    incoming_here = not other[0]
                    signs[idx] = sgn_if_in if incoming_here else -sgn_if_in
                    changed = True
                    break
    if any(s is None for s in signs):
        raise OrientationError("cannot infer crossing sign from orientation data; declare X+ or X-")
    return signs  # type: ignore[return-value]


def serialize_diagram(d: TangleDiagram) -> str:
    lines = []
    if d.boundary_points:
        lines.append("B " + " ".join(d.boundary_points))
    for c in d.crossings:
        lines.append(("X+ " if c.sign > 0 else "X- ") + " ".join(c.ports))
    for p, q in d.free_arcs:
        lines.append(f"A {p} {q}")
    lines.extend("O" for _ in range(d.free_loops))
    return "\n".join(lines) + "\n"


def load_diagram(path) -> TangleDiagram:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return diagram_from_json(text)
    return parse_diagram(text)


def diagram_to_json(d: TangleDiagram) -> str:
    def endpoint(ep: Endpoint):
        if isinstance(ep, Boundary):
            return {"boundary": ep.label}
        return {"crossing": ep.crossing, "port": ep.index + 1}

    payload = {
        "boundary_points": list(d.boundary_points),
        "crossings": [{"ports": list(c.ports), "sign": c.sign} for c in d.crossings],
        "free_arcs": [list(a) for a in d.free_arcs],
        "free_loops": d.free_loops,
        "edges": {e: {"tail": endpoint(t), "head": endpoint(h)} for e, (t, h) in d.edges.items()},
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def diagram_from_json(text: str) -> TangleDiagram:
    data = json.loads(text)
    d = TangleDiagram(
        crossings=tuple(Crossing(tuple(c["ports"]), int(c["sign"])) for c in data.get("crossings", [])),
        free_loops=int(data.get("free_loops", 0)),
        free_arcs=tuple(tuple(a) for a in data.get("free_arcs", [])),
        boundary_points=tuple(data["boundary_points"]) if "boundary_points" in data else None,
    )
    if "edges" in data and json.loads(diagram_to_json(d))["edges"] != data["edges"]:
        raise OrientationError("edge table disagrees with the crossing data")
    return d


# ---------------------------------------------------------------- signs


def crossing_counts(d: TangleDiagram) -> tuple[int, int]:
    """Return ``(n_plus, n_minus)``."""
    n_plus = sum(1 for c in d.crossings if c.sign > 0)
    return n_plus, d.n - n_plus


# ---------------------------------------------------------------- states


@dataclass(frozen=True)
class State:
    bits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "bits", tuple(int(b) for b in self.bits))
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("state bits must be 0 or 1")

    @classmethod
    def from_int(cls, value: int, n: int) -> "State":
        """Bit ``i`` of the state is bit ``n - 1 - i`` of ``value`` (lexicographic order)."""
        return cls(tuple((value >> (n - 1 - i)) & 1 for i in range(n)))

    @property
    def ell(self) -> int:
        return sum(self.bits)

    def __len__(self) -> int:
        return len(self.bits)

    def __getitem__(self, i: int) -> int:
        return self.bits[i]

    def flip(self, i: int) -> "State":
        b = list(self.bits)
        b[i] ^= 1
        return State(tuple(b))


@dataclass(frozen=True)
class ResolvedComponent:
    key: object  # frozenset of edge labels, or a tag for crossing-free pieces
    edges: frozenset
    endpoints: Optional[tuple[str, str]]  # None for circles

    @property
    def is_arc(self) -> bool:
        return self.endpoints is not None


@dataclass(frozen=True)
class ResolvedDiagram:
    components: tuple[ResolvedComponent, ...]
    component_of: dict = field(compare=False, hash=False)

    @property
    def circle_count(self) -> int:
        return sum(1 for c in self.components if not c.is_arc)

    @property
    def arcs(self) -> list[frozenset]:
        return [frozenset(c.endpoints) for c in self.components if c.is_arc]

    @property
    def arc_count(self) -> int:
        return sum(1 for c in self.components if c.is_arc)


def _as_bits(d: TangleDiagram, s) -> tuple[int, ...]:
    bits = s.bits if isinstance(s, State) else tuple(s)
    if len(bits) != d.n:
        raise ValueError(f"state has {len(bits)} bits but the diagram has {d.n} crossings")
    return bits


def resolve(d: TangleDiagram, s) -> ResolvedDiagram:
    """Smooth every crossing according to ``s`` and trace the pieces."""
    bits = _as_bits(d, s)
    order = d.edge_order
    idx = d.edge_index
    parent = list(range(len(order)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for c, b in zip(d.crossings, bits):
        for p, q in SMOOTHINGS[b]:
            ra, rb = find(idx[c.ports[p]]), find(idx[c.ports[q]])
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)

    groups: dict[int, list[str]] = {}
    for i, e in enumerate(order):
        groups.setdefault(find(i), []).append(e)

    comps: list[ResolvedComponent] = []
    for root in sorted(groups):
        members = groups[root]
        ends = [e for e in members if e in d.boundary_edges]
        if len(ends) not in (0, 2):
            raise DiagramError("resolution produced a component with an odd number of ends")
        fs = frozenset(members)
        endpoints = tuple(sorted(ends, key=d.boundary_points.index)) if ends else None
        comps.append(ResolvedComponent(fs, fs, endpoints))
    for p, q in d.free_arcs:
        comps.append(ResolvedComponent(("free-arc", p), frozenset(), (p, q)))
    for j in range(d.free_loops):
        comps.append(ResolvedComponent(("free-loop", j), frozenset(), None))
    component_of = {e: ci for ci, comp in enumerate(comps) for e in comp.edges}
    return ResolvedDiagram(tuple(comps), component_of)


class SaddleKind(Enum):
    MergeCircleCircle = "merge-circle-circle"
    SplitCircle = "split-circle"
    MergeCircleArc = "merge-circle-arc"
    SplitArcCircle = "split-arc-circle"
    ReconnectArcArc = "reconnect-arc-arc"


def classify_saddle(d: TangleDiagram, res: ResolvedDiagram, i: int) -> SaddleKind:
    """Saddle kind at crossing ``i`` given the resolution where ``i`` is 0-smoothed."""
    c = d.crossings[i]
    a = res.component_of[c.ports[0]]
    b = res.component_of[c.ports[2]]
    ca, cb = res.components[a], res.components[b]
    if a == b:
        return SaddleKind.SplitArcCircle if ca.is_arc else SaddleKind.SplitCircle
    if ca.is_arc and cb.is_arc:
        return SaddleKind.ReconnectArcArc
    if ca.is_arc or cb.is_arc:
        return SaddleKind.MergeCircleArc
    return SaddleKind.MergeCircleCircle


CIRCLE_DELTA = {
    SaddleKind.MergeCircleCircle: -1,
    SaddleKind.SplitCircle: 1,
    SaddleKind.MergeCircleArc: -1,
    SaddleKind.SplitArcCircle: 1,
    SaddleKind.ReconnectArcArc: 0,
}


def saddle_type(d: TangleDiagram, s, i: int) -> SaddleKind:
    """Classify the elementary cobordism from ``s`` to ``s`` with bit ``i`` set."""
    bits = _as_bits(d, s)
    if not 0 <= i < d.n:
        raise IndexError(f"crossing index {i} out of range for {d.n} crossings")
    if bits[i]:
        raise ValueError(f"bit {i} is already 1")
    before = resolve(d, bits)
    kind = classify_saddle(d, before, i)
    after = resolve(d, bits[:i] + (1,) + bits[i + 1:])
    if after.circle_count - before.circle_count != CIRCLE_DELTA[kind]:
        raise DiagramError(
            f"crossing {i}: port order is not planar (saddle {kind.value} changed "
            f"circle count by {after.circle_count - before.circle_count})"
        )
    return kind


# ---------------------------------------------------------------- strands


@dataclass(frozen=True)
class Strand:
    """A component of the unresolved diagram, followed straight through crossings."""

    ident: str  # tail boundary label for arcs, first edge label for circles
    is_arc: bool
    edges: tuple[str, ...]
    crossings: tuple[int, ...]  # crossing visited per step, with repeats


def strands(d: TangleDiagram) -> list[Strand]:
    """Arcs first (ordered by tail in boundary order), then circles."""
    edges = d._edges
    visited: set[str] = set()
    out: list[Strand] = []

    def follow(start: str):
        path, xs = [], []
        e = start
        while True:
            path.append(e)
            visited.add(e)
            head = edges[e][1]
            if isinstance(head, Boundary):
                break
            xs.append(head.crossing)
            nxt = d.crossings[head.crossing].ports[(head.index + 2) % 4]
            if nxt == start:
                break
            e = nxt
        return tuple(path), tuple(xs)

    tails = {edges[e][0].label: e for e in d.boundary_edges if isinstance(edges[e][0], Boundary)}
    free_tails = {p: (p, q) for p, q in d.free_arcs}
    for b in d.boundary_points:
        if b in tails:
            path, xs = follow(tails[b])
            out.append(Strand(b, True, path, xs))
        elif b in free_tails:
            out.append(Strand(b, True, (), ()))
    for e in d.edge_order:
        if e not in visited:
            path, xs = follow(e)
            out.append(Strand(e, False, path, xs))
    for j in range(d.free_loops):
        out.append(Strand(f"O{j}", False, (), ()))
    return out


def _strand_of_crossing(d: TangleDiagram, sts: list[Strand]):
    """Map crossing -> (strand through ports 1/3, strand through ports 2/4)."""
    owner = {e: k for k, st in enumerate(sts) for e in st.edges}
    return [(owner[c.ports[0]], owner[c.ports[1]]) for c in d.crossings]


def arc_graph(d: TangleDiagram):
    """Return ``(arcs, edges, bad)`` of the arc-crossing multigraph.

    ``edges`` lists (arc_a, arc_b, crossing) for each crossing between two distinct
    arcs; ``bad`` lists crossings that are self-crossings of an arc or arc-circle
    crossings.
    """
    sts = strands(d)
    arcs = [st.ident for st in sts if st.is_arc]
    graph, bad = [], []
    for ci, (u, o) in enumerate(_strand_of_crossing(d, sts)):
        su, so = sts[u], sts[o]
        if su.is_arc or so.is_arc:
            if u == o or not (su.is_arc and so.is_arc):
                bad.append(ci)
            else:
                graph.append((su.ident, so.ident, ci))
    return arcs, graph, bad


def is_simple(d: TangleDiagram) -> bool:
    """Arcs never self-cross or cross circles, and the arc graph is a simple forest."""
    arcs, graph, bad = arc_graph(d)
    if bad:
        return False
    parent = {a: a for a in arcs}

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for a, b, _ in graph:
        ra, rb = find(a), find(b)
        if ra == rb:
            return False
        parent[ra] = rb
    return True


def find_leaf_arc(d: TangleDiagram) -> Optional[str]:
    """Lowest arc (in boundary order of its tail) meeting other arcs at most once."""
    arcs, graph, _ = arc_graph(d)
    degree = {a: 0 for a in arcs}
    for a, b, _ in graph:
        degree[a] += 1
        degree[b] += 1
    for a in arcs:
        if degree[a] <= 1:
            return a
    return None


# ---------------------------------------------------------------- transformations


def mirror(d: TangleDiagram) -> TangleDiagram:
    """Switch every crossing; the planar picture and orientations are kept."""
    out = []
    for c in d.crossings:
        p = c.ports
        if c.sign > 0:
            out.append(Crossing((p[3], p[0], p[1], p[2]), -1))
        else:
            out.append(Crossing((p[1], p[2], p[3], p[0]), 1))
    return TangleDiagram(tuple(out), d.free_loops, d.free_arcs, d.boundary_points)


def relabel(d: TangleDiagram, fn) -> TangleDiagram:
    return TangleDiagram(
        tuple(Crossing(tuple(fn(x) for x in c.ports), c.sign) for c in d.crossings),
        d.free_loops,
        tuple((fn(p), fn(q)) for p, q in d.free_arcs),
        tuple(fn(b) for b in d.boundary_points),
    )


def disjoint_union(d1: TangleDiagram, d2: TangleDiagram) -> TangleDiagram:
    """Place ``d2`` beside ``d1``; labels get ``L.``/``R.`` prefixes when they clash."""
    labels1 = set(d1.edges) | set(d1.boundary_points)
    labels2 = set(d2.edges) | set(d2.boundary_points)
    if labels1 & labels2:
        d1 = relabel(d1, lambda s: "L." + s)
        d2 = relabel(d2, lambda s: "R." + s)
    return TangleDiagram(
        d1.crossings + d2.crossings,
        d1.free_loops + d2.free_loops,
        d1.free_arcs + d2.free_arcs,
        d1.boundary_points + d2.boundary_points,
    )


def connected_components(d: TangleDiagram) -> list[TangleDiagram]:
    """Split into diagrams whose strands are linked through crossings."""
    sts = strands(d)
    parent = list(range(len(sts)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for u, o in _strand_of_crossing(d, sts):
        ru, ro = find(u), find(o)
        if ru != ro:
            parent[max(ru, ro)] = min(ru, ro)

    groups: dict[int, list[int]] = {}
    for k in range(len(sts)):
        groups.setdefault(find(k), []).append(k)

    owner = {e: k for k, st in enumerate(sts) for e in st.edges}
    out = []
    for root in sorted(groups):
        members = set(groups[root])
        xs = tuple(c for c in d.crossings if find(owner[c.ports[0]]) == root)
        loops = sum(1 for k in members if not sts[k].is_arc and not sts[k].edges)
        arcs = tuple((p, q) for p, q in d.free_arcs if any(sts[k].ident == p for k in members))
        labels = {e for k in members for e in sts[k].edges}
        bps = tuple(b for b in d.boundary_points if b in labels or any(b in a for a in arcs))
        out.append(TangleDiagram(xs, loops, arcs, bps))
    return out


def remove_arc(d: TangleDiagram, arc: str) -> TangleDiagram:
    """Delete an arc that meets the rest of the diagram in at most one crossing.

    The crossing (if any) disappears and the two edges of the other strand
    through it are spliced into one.
    """
    sts = {st.ident: st for st in strands(d)}
    if arc not in sts or not sts[arc].is_arc:
        raise DiagramError(f"no arc named {arc!r}")
    st = sts[arc]
    if not st.edges:
        p, q = next(a for a in d.free_arcs if a[0] == arc)
        free = tuple(a for a in d.free_arcs if a[0] != arc)
        bps = tuple(b for b in d.boundary_points if b not in (p, q))
        return TangleDiagram(d.crossings, d.free_loops, free, bps)
    if len(st.crossings) != 1:
        raise DiagramError(f"arc {arc!r} has {len(st.crossings)} crossings; only pendant arcs can be removed")
    ends = {st.edges[0], st.edges[-1]}
    bps = tuple(b for b in d.boundary_points if b not in ends)
    ci = st.crossings[0]
    c = d.crossings[ci]
    mine = [k for k in range(4) if c.ports[k] in st.edges]
    other = [k for k in range(4) if k not in mine]
    into = next(k for k in other if c.is_incoming(k))
    outof = next(k for k in other if not c.is_incoming(k))
    e_in, e_out = c.ports[into], c.ports[outof]

    crossings = [x for k, x in enumerate(d.crossings) if k != ci]
    free_loops, free_arcs = d.free_loops, list(d.free_arcs)
    if e_in == e_out:
        free_loops += 1
    elif e_out in d.boundary_points and e_in in d.boundary_points:
        free_arcs.append((e_in, e_out))
    else:
        # keep the boundary name if either spliced edge touches the boundary
        keep = e_out if e_out in d.boundary_points else e_in
        drop = e_in if keep == e_out else e_out
        crossings = [Crossing(tuple(keep if p == drop else p for p in x.ports), x.sign) for x in crossings]
    return TangleDiagram(tuple(crossings), free_loops, tuple(free_arcs), bps)
