import pytest
from hypothesis import given, strategies as st

from conftest import simple_from_seed
from tanglekh.construct import PendantAttachment, pendant_attachments
from tanglekh.diagram import crossing_counts, disjoint_union, parse_diagram
from tanglekh.homology import khovanov_poincare
from tanglekh.poly import BigradingMultiset, parse_poly
from tanglekh.reduction import (
    NotSimpleError,
    StepKind,
    arc_reduction_factor,
    arc_reduction_theorem_check,
    binomial_generators,
    generator_expansion,
    poincare_by_components,
    reduce,
    simple_poincare,
)
from tanglekh.tables import load_fixture

seeds = st.integers(0, 10**6)


def test_factors():
    assert arc_reduction_factor(StepKind.RightCrossing) == parse_poly("1+xy")
    assert arc_reduction_factor(StepKind.LeftCrossing) == parse_poly("x^{-1}y^{-3}+y^{-2}")
    assert arc_reduction_factor(StepKind.FreeArc) == parse_poly("y^{-1}")


def test_simple_poincare_examples():
    assert simple_poincare(4, 3, 0) == parse_poly("y^{-1}+3x+3x^2y+x^3y^2")
    assert simple_poincare(4, 1, 2) == parse_poly("x^{-2}y^{-7}+3x^{-1}y^{-6}+3y^{-5}+xy^{-4}")
    assert simple_poincare(1, 0, 0) == parse_poly("y^{-1}")
    with pytest.raises(ValueError):
        simple_poincare(2, 1, 1)
    with pytest.raises(ValueError):
        simple_poincare(2, -1, 0)


def test_generator_expansion_examples():
    assert generator_expansion(4, 0, 3) == BigradingMultiset({(-3, -10): 1, (-2, -9): 3, (-1, -8): 3, (0, -7): 1})
    assert generator_expansion(1, 0, 0) == BigradingMultiset({(0, -1): 1})
    for n in range(6):
        assert generator_expansion(n + 1, n, 0) == binomial_generators(n)


def test_generator_totals():
    for total in range(11):
        for n_plus in range(total + 1):
            g = generator_expansion(total + 1, n_plus, total - n_plus)
            assert len(g) == 2 ** total
            assert g.to_poly() == simple_poincare(total + 1, n_plus, total - n_plus)


def test_reduce_two_four():
    trace, p = reduce(load_fixture("24_pp.tangle"))
    assert trace.kinds() == [StepKind.RightCrossing, StepKind.RightCrossing, StepKind.FreeArc]
    assert p == parse_poly("x^{2}y+2x+y^{-1}")
    assert trace.lines()[0].startswith("remove arc ")
    assert not trace.steps[-1].residual.n_arcs


def test_reduce_free_arc_and_path():
    trace, p = reduce(parse_diagram("A p q"))
    assert trace.kinds() == [StepKind.FreeArc] and p == parse_poly("y^{-1}")
    trace, p = reduce(load_fixture("4arcs_mmm_path.tangle"))
    assert p == parse_poly("x^{-3}y^{-10}+3x^{-2}y^{-9}+3x^{-1}y^{-8}+y^{-7}")
    assert len(trace) == 4


def test_reduce_refuses():
    with pytest.raises(NotSimpleError):
        reduce(load_fixture("23_pp.tangle"))
    with pytest.raises(NotSimpleError):
        reduce(parse_diagram("O\nA p q"))


def test_component_wrapper():
    d = disjoint_union(load_fixture("24_pm.tangle"), load_fixture("31_mmm.tangle"))
    assert poincare_by_components(d) == khovanov_poincare(d)


def test_theorem_examples():
    assert arc_reduction_theorem_check(parse_diagram("A p q"), PendantAttachment("p", 1, True))
    one = load_fixture("11_p.tangle")
    assert all(arc_reduction_theorem_check(one, att) for att in pendant_attachments(one) if att.sign > 0)
    # the theorem does not need the smaller tangle to be simple
    two_three = load_fixture("23_pp.tangle")
    for att in pendant_attachments(two_three):
        if att.sign < 0:
            assert arc_reduction_theorem_check(two_three, att)


def test_malformed_attachment(one_one):
    with pytest.raises(ValueError):
        arc_reduction_theorem_check(one_one, PendantAttachment("nope", 1, True))
    with pytest.raises(ValueError):
        arc_reduction_theorem_check(one_one, PendantAttachment("p", 2, True))


@given(seeds)
def test_closed_form_matches_brute_force(seed):
    d = simple_from_seed(seed, max_arcs=5)
    trace, p = reduce(d)
    n_plus, n_minus = crossing_counts(d)
    assert len(trace) == d.n_arcs
    assert p == simple_poincare(d.n_arcs, n_plus, n_minus)
    assert p == khovanov_poincare(d)
