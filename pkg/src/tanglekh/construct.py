"""Building planar diagrams from Morse words, plus random generators.

A Morse word scans a tangle from bottom to top.  Open strand positions are
numbered left to right; the tokens are

``o<i>``   crossing of positions i, i+1 with the SW-NE strand on top
``u<i>``   crossing of positions i, i+1 with the SW-NE strand underneath
``cup<i>`` a minimum creating two new strands at positions i, i+1
``cap<i>`` a maximum joining positions i, i+1

Bottom boundary points are ``b0 b1 ...``, top ones ``t0 t1 ...``; the
boundary order runs counterclockwise (bottom left to right, then top right to
left).  Every diagram produced this way is planar by construction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .diagram import Boundary, Crossing, TangleDiagram, strands

__all__ = [
    "from_morse",
    "PendantAttachment",
    "attach_pendant_arc",
    "pendant_attachments",
    "random_morse_word",
    "random_diagram",
    "random_simple_tangle",
    "reverse_strand",
]

_CCW = ("BL", "BR", "TR", "TL")
_ACROSS = {"BL": "TR", "TR": "BL", "BR": "TL", "TL": "BR"}


def _tokens(word):
    if isinstance(word, str):
        word = word.split()
    for tok in word:
        for prefix in ("cup", "cap", "o", "u"):
            if tok.startswith(prefix) and tok[len(prefix):].isdigit():
                yield prefix, int(tok[len(prefix):])
                break
        else:
            raise ValueError(f"bad Morse token {tok!r}")


def from_morse(n_bottom: int, word, flips: Optional[Sequence[bool]] = None) -> TangleDiagram:
    """Build a diagram from a Morse word.

    ``flips[k]`` reverses the default orientation of the k-th strand; strands
    are numbered arcs first (by the first boundary point met in boundary
    order) and then circles in order of their first crossing.  Arcs run by
    default from their earlier boundary point to the later one.
    """
    # --- geometry: nodes are boundary points, crossing ports or wire points
    kinds: list[tuple] = []
    links: list[tuple[int, int]] = []

    def node(kind):
        kinds.append(kind)
        return len(kinds) - 1

    bottom = [f"b{i}" for i in range(n_bottom)]
    level = [node(("b", name)) for name in bottom]
    over: list[str] = []  # per crossing: geometric strand on top, "BL" or "BR"
    for op, i in _tokens(word):
        if op in ("o", "u"):
            if i + 1 >= len(level):
                raise ValueError(f"crossing at {i} but only {len(level)} strands")
            c = len(over)
            over.append("BL" if op == "o" else "BR")
            ports = {g: node(("p", c, g)) for g in _CCW}
            links.append((level[i], ports["BL"]))
            links.append((level[i + 1], ports["BR"]))
            level[i], level[i + 1] = ports["TL"], ports["TR"]
        elif op == "cup":
            if i > len(level):
                raise ValueError(f"cup at {i} but only {len(level)} strands")
            w = node(("w",))
            level[i:i] = [w, w]
        else:
            if i + 1 >= len(level):
                raise ValueError(f"cap at {i} but only {len(level)} strands")
            links.append((level[i], level[i + 1]))
            del level[i:i + 2]
    top = [f"t{j}" for j in range(len(level))]
    for j, nd in enumerate(level):
        links.append((nd, node(("b", top[j]))))
    boundary = bottom + top[::-1]

    # --- contract wire points into segments between endpoints
    adj: dict[int, list[int]] = {}
    for k, (a, b) in enumerate(links):
        adj.setdefault(a, []).append(k)
        adj.setdefault(b, []).append(k)
    used = [False] * len(links)

    def walk(start: int, link: int) -> int:
        cur, lk = start, link
        while True:
            used[lk] = True
            a, b = links[lk]
            nxt = b if a == cur else a
            if kinds[nxt][0] != "w":
                return nxt
            nxt_links = [x for x in adj[nxt] if x != lk or links[x][0] == links[x][1]]
            lk2 = next((x for x in nxt_links if not used[x]), None)
            if lk2 is None:
                return nxt
            cur, lk = nxt, lk2

    segs: list[tuple[int, int]] = []
    for nd, kind in enumerate(kinds):
        if kind[0] == "w":
            continue
        for lk in adj.get(nd, []):
            if not used[lk]:
                segs.append((nd, walk(nd, lk)))
    free_loops = 0
    for lk in range(len(links)):
        if not used[lk]:
            a = links[lk][0]
            walk(a, lk)
            free_loops += 1

    # --- strands: walk segments through crossings
    seg_at: dict[int, int] = {}
    for s, (a, b) in enumerate(segs):
        seg_at[a] = s
        seg_at[b] = s
    port_node = {(k[1], k[2]): nd for nd, k in enumerate(kinds) if k[0] == "p"}
    bnode = {k[1]: nd for nd, k in enumerate(kinds) if k[0] == "b"}

    def trace(start_node: int):
        """Oriented walk; returns list of (seg, tail_node, head_node)."""
        out = []
        cur = start_node
        first_seg = seg_at[cur]
        while True:
            s = seg_at[cur]
            a, b = segs[s]
            nxt = b if a == cur else a
            out.append((s, cur, nxt))
            if kinds[nxt][0] == "b":
                return out
            _, c, g = kinds[nxt]
            cur = port_node[(c, _ACROSS[g])]
            if seg_at[cur] == first_seg and cur == start_node:
                return out

    oriented: dict[int, tuple[int, int]] = {}
    strand_list: list[list[tuple[int, int, int]]] = []
    flips = list(flips or [])
    done_b: set[str] = set()
    for name in boundary:
        if name in done_b:
            continue
        path = trace(bnode[name])
        end = kinds[path[-1][2]][1]
        done_b.update((name, end))
        strand_list.append(path)
    for c in range(len(over)):
        for g in _CCW:
            nd = port_node[(c, g)]
            if seg_at[nd] not in {s for p in strand_list for s, _, _ in p}:
                strand_list.append(trace(nd))
    for k, path in enumerate(strand_list):
        if k < len(flips) and flips[k]:
            path = [(s, h, t) for s, t, h in reversed(path)]
        for s, t, h in path:
            oriented[s] = (t, h)

    # --- labels and crossings
    label: dict[int, str] = {}
    counter = 0
    free_arcs = []
    for s in sorted(oriented, key=lambda s: min(oriented[s])):
        t, h = oriented[s]
        kt, kh = kinds[t], kinds[h]
        if kt[0] == "b" and kh[0] == "b":
            free_arcs.append((kt[1], kh[1]))
        elif kt[0] == "b":
            label[s] = kt[1]
        elif kh[0] == "b":
            label[s] = kh[1]
        else:
            label[s] = f"e{counter}"
            counter += 1
    crossings = []
    for c, top_strand in enumerate(over):
        incoming = {g for g in _CCW if oriented[seg_at[port_node[(c, g)]]][1] == port_node[(c, g)]}
        under = ("BR", "TL") if top_strand == "BL" else ("BL", "TR")
        start = next(g for g in under if g in incoming)
        k0 = _CCW.index(start)
        order = [_CCW[(k0 + m) % 4] for m in range(4)]
        ports = tuple(label[seg_at[port_node[(c, g)]]] for g in order)
        sign = 1 if order[3] in incoming else -1
        crossings.append(Crossing(ports, sign))
    return TangleDiagram(tuple(crossings), free_loops, tuple(free_arcs), tuple(boundary))


def reverse_strand(d: TangleDiagram, ident: str) -> TangleDiagram:
    """Reverse the orientation of one strand (arc or circle) of ``d``."""
    sts = {st.ident: st for st in strands(d)}
    st = sts[ident]
    mine = set(st.edges)
    if not mine:
        arcs = tuple((q, p) if p == ident else (p, q) for p, q in d.free_arcs)
        return TangleDiagram(d.crossings, d.free_loops, arcs, d.boundary_points)
    out = []
    for c in d.crossings:
        p = c.ports
        under_mine = p[0] in mine
        over_mine = p[1] in mine
        if under_mine:
            p = (p[2], p[3], p[0], p[1])
        if under_mine != over_mine:
            out.append(Crossing(p, -c.sign))
        else:
            out.append(Crossing(p, c.sign))
    return TangleDiagram(tuple(out), d.free_loops, d.free_arcs, d.boundary_points)


# ---------------------------------------------------------------- pendant arcs


@dataclass(frozen=True)
class PendantAttachment:
    """A new arc crossing edge ``edge`` once; ``over`` puts it on top."""

    edge: str
    sign: int
    over: bool


def attach_pendant_arc(d: TangleDiagram, att: PendantAttachment, names=("n_in", "n_out")) -> TangleDiagram:
    """Add an arc with a single crossing; the new crossing gets index 0.

    ``att.edge`` names a boundary edge of an arc (its label is the boundary
    point), or the tail label of a crossing-free arc.  A once-crossing arc can
    only be drawn across an edge whose two sides both reach the boundary, and
    boundary edges always qualify.  The crossed edge is cut in two and the
    half away from the boundary gets a fresh label.
    """
    if att.sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    taken = set(d.edges) | set(d.boundary_points)
    a_in, a_out = names
    if a_in in taken or a_out in taken or a_in == a_out:
        raise ValueError("attachment labels clash with existing labels")
    free = dict(d.free_arcs)
    free_arcs = d.free_arcs
    crossings = list(d.crossings)
    e = att.edge
    if e in free:
        old_in, old_out = e, free[e]
        free_arcs = tuple(a for a in d.free_arcs if a[0] != e)
    elif e in d.edges and e in d.boundary_points:
        k = 0
        while f"s{k}" in taken:
            k += 1
        cut = f"s{k}"
        head = d.edges[e][1]
        old_in, old_out = (cut, e) if isinstance(head, Boundary) else (e, cut)
        crossings = []
        for c in d.crossings:
            p = tuple(
                (old_out if c.is_incoming(i) else old_in) if lab == e else lab
                for i, lab in enumerate(c.ports)
            )
            crossings.append(Crossing(p, c.sign))
    else:
        raise ValueError(f"{e!r} is not a boundary edge or crossing-free arc")

    if att.over:
        # existing strand underneath: it owns ports 1 and 3
        ports = (old_in, a_out, old_out, a_in) if att.sign > 0 else (old_in, a_in, old_out, a_out)
    else:
        ports = (a_in, old_out, a_out, old_in) if att.sign > 0 else (a_in, old_in, a_out, old_out)
    # the new arc crosses next to the boundary point of the crossed edge, so
    # its endpoints sit on either side of that point in the boundary order
    anchor = old_in if old_in in d.boundary_points else old_out
    j = ports.index(anchor)
    before, after = ports[(j + 3) % 4], ports[(j + 1) % 4]
    boundary = list(d.boundary_points)
    pos = boundary.index(anchor)
    boundary[pos:pos + 1] = [before, anchor, after]
    return TangleDiagram(
        (Crossing(ports, att.sign), *crossings), d.free_loops, free_arcs, tuple(boundary),
    )


def _boundary_edges(st) -> tuple[str, ...]:
    if not st.edges:
        return (st.ident,)
    return tuple(dict.fromkeys((st.edges[0], st.edges[-1])))


def pendant_attachments(d: TangleDiagram):
    """Both boundary edges of every arc, both signs, over and under."""
    out = []
    for st in strands(d):
        if not st.is_arc:
            continue
        for e in _boundary_edges(st):
            for sign in (1, -1):
                for over in (True, False):
                    out.append(PendantAttachment(e, sign, over))
    return out


# ---------------------------------------------------------------- random


def random_morse_word(rng: random.Random, max_crossings: int = 6, n_bottom: Optional[int] = None,
                      max_strands: int = 6, steps: int = 12):
    """Random Morse word; returns ``(n_bottom, word)``."""
    if n_bottom is None:
        n_bottom = rng.choice([0, 1, 2, 2, 3, 4])
    width = n_bottom
    word: list[str] = []
    crossings = 0
    for _ in range(steps):
        ops = []
        if width >= 2 and crossings < max_crossings:
            ops += ["x"] * 3
        if width + 2 <= max_strands:
            ops.append("cup")
        if width >= 2:
            ops.append("cap")
        if not ops:
            break
        op = rng.choice(ops)
        if op == "x":
            word.append(rng.choice("ou") + str(rng.randrange(width - 1)))
            crossings += 1
        elif op == "cup":
            word.append(f"cup{rng.randrange(width + 1)}")
            width += 2
        else:
            word.append(f"cap{rng.randrange(width - 1)}")
            width -= 2
    return n_bottom, word


def random_diagram(rng: random.Random, max_crossings: int = 6, max_free_loops: int = 1, **kw) -> TangleDiagram:
    """Random planar diagram with random strand orientations.

    Words leaving more than ``max_free_loops`` crossing-free loops are redrawn;
    each such loop only doubles the cube without adding structure.
    """
    while True:
        n_bottom, word = random_morse_word(rng, max_crossings=max_crossings, **kw)
        d = from_morse(n_bottom, word)
        if d.free_loops <= max_free_loops:
            break
    flips = [rng.random() < 0.5 for _ in strands(d)]
    return from_morse(n_bottom, word, flips)


def random_simple_tangle(rng: random.Random, max_arcs: int = 6) -> TangleDiagram:
    """Random circle-free simple tangle grown from one arc by pendant and free arcs."""
    n_arcs = rng.randint(1, max_arcs)
    d = TangleDiagram(free_arcs=(("a0", "a1"),))
    for k in range(1, n_arcs):
        names = (f"a{2 * k}", f"a{2 * k + 1}")
        if rng.random() < 0.8:
            targets = [e for st in strands(d) if st.is_arc for e in _boundary_edges(st)]
            att = PendantAttachment(rng.choice(targets), rng.choice((1, -1)), rng.random() < 0.5)
            d = attach_pendant_arc(d, att, names)
        else:
            d = TangleDiagram(d.crossings, d.free_loops, d.free_arcs + (names,),
                              d.boundary_points + names)
    return d
