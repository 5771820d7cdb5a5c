"""The seven acceptance criteria, each at its stated tolerance and time budget.

Every criterion prints one PASS/FAIL line; the lines are repeated in the
pytest terminal summary.
"""

import random
import time

import pytest

from conftest import ACCEPTANCE_LINES
from tanglekh.complex import build_complex, homological_degree, quantum_degree
from tanglekh.construct import pendant_attachments, random_diagram, random_simple_tangle
from tanglekh.diagram import disjoint_union
from tanglekh.homology import betti, graded_euler_state_sum, jones_specialization, khovanov_poincare, poincare_polynomial
from tanglekh.reduction import arc_reduction_theorem_check, generator_expansion, reduce
from tanglekh.tables import GOLDEN, golden_entries, load_fixture


def report(number, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}" + (f" ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def check_rows(entries):
    bad, flagged = [], []
    for e in entries:
        d = load_fixture(e)
        got = khovanov_poincare(d)
        if got != e.expected:
            bad.append(f"{e.name}: expected {e.expected}, got {got}")
        if e.flagged:
            flagged.append(f"{e.name} printed {e.printed_poly} vs computed {got}")
    return bad, flagged


def entries_q_preserved(c):
    for (k, q), m in c.differential.items():
        src, dst = c.basis[(k, q)], c.basis[(k + 1, q)]
        for r, col, _ in m.triplets():
            a, b = src[col], dst[r]
            qa = quantum_degree(homological_degree(a.state, c.n_minus), c.n_plus, c.n_minus, a.theta)
            qb = quantum_degree(homological_degree(b.state, c.n_minus), c.n_plus, c.n_minus, b.theta)
            if qa != qb or homological_degree(b.state, c.n_minus) != homological_degree(a.state, c.n_minus) + 1:
                return False
    return True


def test_criterion_1_table_one():
    t0 = time.perf_counter()
    bad, flagged = check_rows(golden_entries(1))
    elapsed = time.perf_counter() - t0
    ok = not bad and len(flagged) == 3 and elapsed < 1.0
    detail = f"{len(golden_entries(1))} rows in {elapsed:.2f}s; {len(flagged)} flagged typo rows: {flagged[0]}"
    report(1, "golden table 1 (up to two crossings)", ok, detail if not bad else "; ".join(bad))


def test_criterion_2_table_two():
    t0 = time.perf_counter()
    bad, _ = check_rows(golden_entries(2))
    elapsed = time.perf_counter() - t0
    n_four = sum(1 for e in golden_entries(2) if e.type_label == "4arcs")
    ok = not bad and elapsed < 5.0 and n_four == 8
    report(2, "golden table 2 (three crossings)", ok, f"{len(golden_entries(2))} rows in {elapsed:.2f}s" if not bad else "; ".join(bad))


def test_criterion_3_arc_reduction_theorem():
    t0 = time.perf_counter()
    cases, bad = 0, []
    for e in GOLDEN:
        d = load_fixture(e)
        if d.n > 4:
            continue
        for att in pendant_attachments(d):
            cases += 1
            if not arc_reduction_theorem_check(d, att):
                bad.append(f"{e.name} {att}")
    elapsed = time.perf_counter() - t0
    ok = not bad and cases > 0 and elapsed < 60
    report(3, "arc reduction theorem sweep", ok, f"{cases} attachments in {elapsed:.1f}s; failures: {bad[:3]}")


def test_criterion_4_closed_form():
    rng = random.Random(2024)
    t0 = time.perf_counter()
    bad = 0
    for _ in range(200):
        d = random_simple_tangle(rng, max_arcs=6)
        assert d.n_arcs <= 6
        if reduce(d)[1] != khovanov_poincare(d):
            bad += 1
    elapsed = time.perf_counter() - t0
    report(4, "closed form vs brute force", bad == 0 and elapsed < 60, f"200 tangles, {bad} mismatches, {elapsed:.1f}s")


def test_criterion_5_euler_oracle():
    rng = random.Random(5)
    diagrams = [load_fixture(e) for e in GOLDEN] + [random_diagram(rng, max_crossings=6) for _ in range(200)]
    bad = sum(1 for d in diagrams if jones_specialization(khovanov_poincare(d)) != graded_euler_state_sum(d))
    report(5, "Euler characteristic oracle", bad == 0, f"{len(diagrams)} diagrams, {bad} mismatches")


def test_criterion_6_structure():
    rng = random.Random(6)
    diagrams = [load_fixture(e) for e in GOLDEN] + [random_diagram(rng, max_crossings=6) for _ in range(100)]
    bad = 0
    for d in diagrams:
        c = build_complex(d)
        if not (c.d_squared_is_zero() and c.gradings_consistent() and entries_q_preserved(c)):
            bad += 1
    sizes_ok = all(
        len(generator_expansion(t + 1, p, t - p)) == 2 ** t for t in range(11) for p in range(t + 1)
    )
    report(6, "structural invariants", bad == 0 and sizes_ok,
           f"{len(diagrams)} complexes, {bad} bad; generator totals {'ok' if sizes_ok else 'wrong'}")


def test_criterion_7_disjoint_union():
    rng = random.Random(7)
    bad = 0
    for _ in range(50):
        a, b = random_diagram(rng, max_crossings=3), random_diagram(rng, max_crossings=3)
        if khovanov_poincare(disjoint_union(a, b)) != khovanov_poincare(a) * khovanov_poincare(b):
            bad += 1
    report(7, "disjoint union multiplicativity", bad == 0, f"50 pairs, {bad} mismatches")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))
