"""Lemma/theorem checks, class sweeps, and the counterexample search."""

import pytest

import fermatecc as fe
from fermatecc import (
    GraphKind,
    PreconditionError,
    check_cyclic_sequence,
    check_diametrical_lemmas,
    check_eccentric_analogue,
    check_edge_lipschitz,
    from_graph6,
    is_path_graph,
    search_counterexample,
    sweep_class,
    verify_main_inequality,
)


def test_edge_lipschitz_passes_on_samples():
    for g in (fe.path(7), fe.star(6), fe.cycle(8), fe.theta(2, 3, 4)):
        assert check_edge_lipschitz(g).passed


def test_edge_lipschitz_detects_violation():
    g = fe.path(4)
    outcome = check_edge_lipschitz(g, eps3=(1, 5, 5, 5))
    assert not outcome.passed
    assert "(0,1)" in outcome.detail.replace(" ", "")


def test_diametrical_lemmas_on_samples():
    for g in (fe.path(9), fe.star(7), fe.random_tree(35, seed=8)):
        out = check_diametrical_lemmas(g)
        assert out.passed, out.detail


def test_diametrical_lemmas_requires_tree():
    with pytest.raises(PreconditionError):
        check_diametrical_lemmas(fe.cycle(5))


def test_cyclic_sequence_lemma():
    assert check_cyclic_sequence([3, 4, 4, 3, 2, 2]).passed
    assert check_cyclic_sequence([5, 5, 5]).passed
    with pytest.raises(PreconditionError):
        check_cyclic_sequence([1])
    with pytest.raises(PreconditionError):
        check_cyclic_sequence([1, 3, 2])  # jump of 2 breaks the hypothesis
    with pytest.raises(PreconditionError):
        check_cyclic_sequence([0, 1, 1])  # entries must be positive


def test_is_path_graph():
    assert is_path_graph(fe.path(1))
    assert is_path_graph(fe.path(2))
    assert is_path_graph(fe.path(7))
    assert not is_path_graph(fe.star(4))
    assert not is_path_graph(fe.cycle(4))


def test_main_inequality_tree_and_unicyclic():
    assert verify_main_inequality(fe.path(6)).passed
    assert verify_main_inequality(fe.star(6)).passed
    assert verify_main_inequality(fe.cycle(7)).passed
    assert verify_main_inequality(fe.random_unicyclic(11, girth=4, seed=2)).passed


def test_main_inequality_multicyclic_records_sign():
    out = verify_main_inequality(fe.theta(2, 2, 2))
    assert out.passed
    assert "sign recorded" in out.detail


def test_eccentric_analogue_samples():
    for g in (fe.path(8), fe.star(8), fe.cycle(9), fe.random_tree(25, seed=3)):
        assert check_eccentric_analogue(g).passed


def test_sweep_trees_small():
    summary = sweep_class(GraphKind.TREE, range(2, 8))
    assert summary.passed, [f.detail for f in summary.failures]
    assert summary.instance_count == 1 + 1 + 2 + 3 + 6 + 11
    # equality instances are exactly the paths, one per n
    assert len(summary.equality_instances) == 6
    assert all(is_path_graph(from_graph6(g6)) for g6 in summary.equality_instances)


def test_sweep_unicyclic_small():
    summary = sweep_class(GraphKind.UNICYCLIC, range(3, 7))
    assert summary.passed, [f.detail for f in summary.failures]
    assert summary.instance_count == 1 + 2 + 5 + 13


def test_sweep_rejects_multicyclic():
    with pytest.raises(ValueError):
        sweep_class(GraphKind.MULTICYCLIC, range(4, 6))


def test_search_family_sweep_finds_both_signs():
    summary = search_counterexample("family-sweep")
    assert summary.complete
    assert summary.positive_instances
    assert summary.negative_instances
    # witness round-trip: every recorded sign re-checks standalone
    for g6 in summary.positive_instances[:2]:
        rep = fe.full_report(from_graph6(g6))
        assert rep.n * rep.f2 > rep.m * rep.f1
        assert rep.kind is GraphKind.MULTICYCLIC
    for g6 in summary.negative_instances[:2]:
        rep = fe.full_report(from_graph6(g6))
        assert rep.n * rep.f2 < rep.m * rep.f1


def test_search_exhaustive_small_has_no_positives():
    summary = search_counterexample("exhaustive-small", max_n=7)
    assert summary.complete
    assert not summary.positive_instances
    assert summary.negative_instances


def test_search_budget_marks_incomplete():
    summary = search_counterexample("family-sweep", budget=3)
    assert summary.instance_count == 3
    assert not summary.complete


def test_search_deterministic_per_seed():
    a = search_counterexample("random-walk", budget=40, seed=123)
    b = search_counterexample("random-walk", budget=40, seed=123)
    assert a == b


def test_search_rejects_unknown_strategy():
    with pytest.raises(ValueError):
        search_counterexample("simulated-annealing")
