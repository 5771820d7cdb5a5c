import json

import pytest
from hypothesis import given, strategies as st

from conftest import diagrams_from_seed, simple_from_seed
from tanglekh.complex import (
    ONE,
    W,
    X,
    CrossingCapError,
    GeneratorLabel,
    apply_saddle,
    build_complex,
    homological_degree,
    quantum_degree,
)
from tanglekh.construct import attach_pendant_arc, pendant_attachments
from tanglekh.diagram import SaddleKind, State, disjoint_union, parse_diagram, resolve
from tanglekh.linalg import GF2, QQ
from tanglekh.poly import BigradingMultiset

seeds = st.integers(0, 10**6)


def test_degrees():
    assert homological_degree(State((0, 0, 0)), 3) == -3
    assert homological_degree((1, 1, 1, 1), 0) == 4
    assert homological_degree((1, 0), 1) == 0
    assert quantum_degree(0, 1, 0, -2) == -1
    assert quantum_degree(1, 1, 0, -2) == 0
    assert quantum_degree(0, 0, 0, 0) == 0
    assert GeneratorLabel((0,), (ONE, X, X), 2).theta == -3


@pytest.mark.parametrize("kind, frag, image", [
    (SaddleKind.MergeCircleCircle, (ONE, ONE), [(1, (ONE,))]),
    (SaddleKind.MergeCircleCircle, (ONE, X), [(1, (X,))]),
    (SaddleKind.MergeCircleCircle, (X, X), []),
    (SaddleKind.SplitCircle, (ONE,), [(1, (ONE, X)), (1, (X, ONE))]),
    (SaddleKind.SplitCircle, (X,), [(1, (X, X))]),
    (SaddleKind.ReconnectArcArc, (W, W), []),
    (SaddleKind.MergeCircleArc, (ONE, W), [(1, (W,))]),
    (SaddleKind.MergeCircleArc, (W, X), []),
    (SaddleKind.SplitArcCircle, (W,), [(1, (W, X))]),
])
def test_saddle_maps(kind, frag, image):
    assert apply_saddle(kind, frag) == image


def test_saddle_geometry_mismatch():
    with pytest.raises(ValueError):
        apply_saddle(SaddleKind.SplitCircle, (W,))
    with pytest.raises(ValueError):
        apply_saddle(SaddleKind.MergeCircleArc, (ONE, ONE))


def test_crossing_free_complexes():
    o = build_complex(parse_diagram("O"))
    assert {g: o.dim(*g) for g in o.gradings()} == {(0, -1): 1, (0, 1): 1}
    a = build_complex(parse_diagram("A p q"))
    assert {g: a.dim(*g) for g in a.gradings()} == {(0, -1): 1}


def test_one_crossing_chain_groups(one_one):
    c = build_complex(one_one)
    assert c.graded_dimension().to_json() == [[0, -1, 1], [1, 0, 1]]
    assert c.differential == {}


def test_crossing_cap(trefoil):
    with pytest.raises(CrossingCapError):
        build_complex(trefoil, max_crossings=2)


def test_json_dump_is_deterministic(trefoil):
    a = build_complex(trefoil).to_json()
    assert a == build_complex(trefoil).to_json()
    blocks = json.loads(a)["blocks"]
    assert sum(b["dim"] for b in blocks) == build_complex(trefoil).total_dim
    assert all({"k", "q", "dim", "differential"} <= set(b) for b in blocks)


@given(seeds, st.sampled_from([QQ, GF2]))
def test_d_squared_and_gradings(seed, field):
    d = diagrams_from_seed(seed, max_crossings=6)
    c = build_complex(d, field)
    assert c.d_squared_is_zero()
    assert c.gradings_consistent()


@given(seeds)
def test_total_dimension_is_state_sum(seed):
    d = diagrams_from_seed(seed, max_crossings=5)
    c = build_complex(d)
    expected = sum(2 ** resolve(d, State.from_int(v, d.n)).circle_count for v in range(1 << d.n))
    assert c.total_dim == expected


@given(seeds, seeds)
def test_disjoint_union_chain_dimensions(s1, s2):
    d1 = diagrams_from_seed(s1, max_crossings=3)
    d2 = diagrams_from_seed(s2, max_crossings=3)
    c = build_complex(disjoint_union(d1, d2))
    m1 = BigradingMultiset.from_poly(build_complex(d1).graded_dimension())
    m2 = BigradingMultiset.from_poly(build_complex(d2).graded_dimension())
    assert BigradingMultiset.from_poly(c.graded_dimension()) == m1 * m2


@given(seeds, st.data())
def test_pendant_crossing_splits_complex(seed, data):
    small = simple_from_seed(seed, max_arcs=4)
    att = data.draw(st.sampled_from(pendant_attachments(small)))
    big = attach_pendant_arc(small, att, names=("p_new0", "p_new1"))
    c = build_complex(big)
    for (k, q), gens in c.basis.items():
        m = c.d(k, q)
        targets = c.basis.get((k + 1, q), [])
        for r, col, _ in m.triplets():
            assert gens[col].state[0] == targets[r].state[0], "differential crosses the A/B split"
