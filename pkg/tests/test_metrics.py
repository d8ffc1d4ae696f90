import itertools
import math
from random import Random

import pytest
from hypothesis import given, strategies as st

from pils import (
    Instance,
    ParetoArchive,
    ParseError,
    brute_force_pareto,
    d_metrics,
    dominates,
    evaluate_objectives,
    parse_front_points,
    pooled_reference,
    random_instance,
    render_front_points,
)
from pils.metrics import MetricReport, parse_metric_report, render_metric_report


def nondominated(vectors):
    out = set()
    for v in vectors:
        if not any(dominates(w, v) for w in vectors):
            out.add(v)
    return out


def front_sets(max_coord=40):
    points = st.lists(
        st.tuples(st.integers(0, max_coord), st.integers(0, max_coord)), min_size=1, max_size=20
    )
    return points.map(lambda pts: sorted(nondominated(pts)))


# --- hand examples -------------------------------------------------------


def test_degenerate_single_pair():
    report = d_metrics([(0, 0)], [(1, 1)])
    assert abs(report.d1 - 1.0) <= 1e-9
    assert abs(report.d2 - 1.0) <= 1e-9


def test_two_point_reference_half_covered():
    report = d_metrics([(0, 10), (10, 0)], [(0, 10)])
    assert abs(report.d1 - 0.5) <= 1e-9
    assert abs(report.d2 - 1.0) <= 1e-9


def test_self_coverage_is_zero():
    ref = [(3, 9), (5, 4), (8, 1)]
    report = d_metrics(ref, ref)
    assert report.d1 == 0.0 and report.d2 == 0.0
    assert report.reference_size == 3 and report.approx_size == 3


# --- invariants -----------------------------------------------------------


@given(front_sets(), front_sets())
def test_d1_never_exceeds_d2(reference, approx):
    report = d_metrics(reference, approx)
    assert 0.0 <= report.d1 <= report.d2


@given(front_sets())
def test_superset_scores_zero(reference):
    approx = list(reference) + [(10**6, 10**6)]
    report = d_metrics(reference, approx)
    assert report.d1 == 0.0 and report.d2 == 0.0


@given(front_sets(), front_sets(), st.tuples(st.integers(0, 40), st.integers(0, 40)))
def test_adding_a_point_never_hurts(reference, approx, extra):
    base = d_metrics(reference, approx)
    grown = d_metrics(reference, list(approx) + [extra])
    assert grown.d1 <= base.d1 + 1e-12
    assert grown.d2 <= base.d2 + 1e-12


@given(front_sets(), front_sets(), st.integers(2, 50))
def test_zero_is_scale_invariant(reference, approx, factor):
    before = d_metrics(reference, approx)
    scaled = d_metrics(
        [(c * factor, t * factor) for c, t in reference],
        [(c * factor, t * factor) for c, t in approx],
    )
    assert (before.d1 == 0.0) == (scaled.d1 == 0.0)


def test_rejects_empty_or_mismatched():
    with pytest.raises(ValueError):
        d_metrics([], [(1, 2)])
    with pytest.raises(ValueError):
        d_metrics([(1, 2)], [])
    with pytest.raises(ValueError):
        d_metrics([(1, 2)], [(1, 2, 3)])


# --- exhaustive enumeration oracle ----------------------------------------


def test_single_job_front():
    inst = Instance(n=1, m=2, p=((3, 4),), d=(5,), name="one")
    assert brute_force_pareto(inst) == [((7, 2), (0,))]


def test_two_job_front_by_hand():
    inst = Instance(n=2, m=2, p=((3, 2), (1, 4)), d=(4, 8), name="hand")
    front = brute_force_pareto(inst)
    assert front == [((7, 3), (1, 0)), ((9, 2), (0, 1))]


def test_witnesses_reproduce_their_vectors():
    inst = random_instance(6, 4, seed=3, tau=0.6)
    for vec, witness in brute_force_pareto(inst):
        assert evaluate_objectives(inst, witness) == vec


def test_size_guard():
    inst = random_instance(11, 2, seed=0, tau=0.6)
    with pytest.raises(ValueError):
        brute_force_pareto(inst)


def test_front_is_mutually_nondominated():
    inst = random_instance(7, 3, seed=5, tau=0.6)
    vectors = [vec for vec, _ in brute_force_pareto(inst)]
    assert sorted(nondominated(vectors)) == vectors


def test_matches_streaming_all_permutations():
    inst = random_instance(6, 3, seed=9, tau=0.6)
    arch = ParetoArchive()
    for perm in itertools.permutations(range(inst.n)):
        arch.update(perm, evaluate_objectives(inst, perm))
    assert {vec for vec, _ in brute_force_pareto(inst)} == arch.objective_vectors()


# --- pooled references ------------------------------------------------------


def test_pooled_reference_filters_the_union():
    fronts = [[(5, 5), (3, 9)], [(5, 5), (4, 6)], [(9, 1)]]
    union = {v for front in fronts for v in front}
    assert pooled_reference(fronts) == sorted(nondominated(union))


# --- file formats ------------------------------------------------------------


def test_front_points_round_trip_ints():
    points = [(5, 5), (3, 9), (9, 1)]
    text = render_front_points(points)
    assert parse_front_points(text) == sorted(points)
    assert text == "3 9\n5 5\n9 1\n"


def test_front_points_round_trip_floats():
    points = [(1.25, 0.5)]
    assert parse_front_points(render_front_points(points)) == points


def test_front_points_rejects_garbage():
    with pytest.raises(ParseError):
        parse_front_points("")
    with pytest.raises(ParseError):
        parse_front_points("1 2\n3\n")
    with pytest.raises(ParseError):
        parse_front_points("1 spam\n")


def test_metric_report_round_trip():
    report = MetricReport(d1=0.03125, d2=0.5, reference_size=12, approx_size=7)
    assert parse_metric_report(render_metric_report(report)) == report
