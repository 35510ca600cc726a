from collections import Counter

import pytest

from helpers import brute_force_class_key, graphs_on, labeled_graphs_with_edges

from spectheta import (
    BudgetError,
    Graph,
    ThetaSpec,
    book,
    bound_value,
    canonical_label,
    complete,
    complete_minus_edge,
    count_connected_by_order,
    enumerate_by_edges,
    enumerate_by_order,
    extremal_search,
    extremal_table,
    path,
    spectral_radius,
    star,
)

# Published counts of graphs with m edges and no isolated vertices, m = 1..7.
CLASSES_BY_EDGES = [1, 2, 5, 11, 26, 68, 177]


def test_tiny_levels_match_hand_enumeration():
    assert [canonical_label(g) for g in enumerate_by_edges(1)] == [canonical_label(complete(2))]
    got = {canonical_label(g).data for g in enumerate_by_edges(2)}
    want = {canonical_label(path(3)).data, canonical_label(Graph(4, [(0, 1), (2, 3)])).data}
    assert got == want
    got = {canonical_label(g).data for g in enumerate_by_edges(3, True)}
    want = {canonical_label(h).data for h in (complete(3), path(4), star(4))}
    assert got == want


def test_class_counts():
    for m, want in enumerate(CLASSES_BY_EDGES, start=1):
        assert sum(1 for _ in enumerate_by_edges(m)) == want


def test_no_duplicates_and_basic_shape():
    for m in range(1, 7):
        certs = []
        for g in enumerate_by_edges(m):
            assert g.m == m
            assert g.min_degree() >= 1
            certs.append(canonical_label(g).data)
        assert len(certs) == len(set(certs))


def test_connected_only_filters():
    for m in range(1, 7):
        allc = {canonical_label(g).data for g in enumerate_by_edges(m) if g.is_connected()}
        conn = {canonical_label(g).data for g in enumerate_by_edges(m, True)}
        assert conn == allc


def test_matches_labeled_oracle_up_to_three_edges():
    # Fully independent brute force (min over all vertex permutations);
    # feasible only while 2m stays small.
    for m in range(1, 4):
        oracle = {brute_force_class_key(g) for g in labeled_graphs_with_edges(m)}
        mine = [brute_force_class_key(g) for g in enumerate_by_edges(m)]
        assert len(mine) == len(set(mine))
        assert set(mine) == oracle


def test_budget_guard():
    with pytest.raises(BudgetError):
        list(enumerate_by_edges(13))
    with pytest.raises(ValueError):
        list(enumerate_by_edges(0))
    # explicit override admits the request
    gen = enumerate_by_edges(13, budget=13)
    next(gen)


def test_enumerate_by_order_counts():
    want = [1, 2, 4, 11, 34, 156]
    for n, count in enumerate(want, start=1):
        assert sum(1 for _ in enumerate_by_order(n)) == count
    with pytest.raises(BudgetError):
        list(enumerate_by_order(9))


def test_connected_counts_small():
    for n, want in enumerate([1, 1, 2, 6, 21, 112], start=1):
        assert count_connected_by_order(n) == want


def test_connected_counts_against_mask_oracle():
    for n in range(1, 6):
        oracle = {brute_force_class_key(g) for g in graphs_on(n) if g.is_connected()}
        assert count_connected_by_order(n) == len(oracle)


def test_extremal_search_m3():
    rec = extremal_search(3, ThetaSpec(2, 2, 3))
    assert rec.best_lambda == pytest.approx(2.0, abs=1e-9)
    assert rec.best_graph6 == "Bw"
    assert rec.num_candidates == 3
    assert len(rec.runner_ups) == 2


def test_extremal_search_m5_dominates_k4_minus_e():
    rec = extremal_search(5, ThetaSpec(2, 2, 3))
    assert rec.best_lambda >= spectral_radius(complete_minus_edge(4)).lam - 1e-9


def test_extremal_search_m7_includes_book3():
    rec = extremal_search(7, ThetaSpec(2, 2, 3))
    assert rec.best_lambda >= 3.0 - 1e-9
    pool = [rec.best_graph6] + [g6 for g6, _ in rec.runner_ups]
    from spectheta import canonical_form, to_graph6

    assert to_graph6(canonical_form(book(3))) in pool


def test_book_always_feasible_for_odd_m():
    spec = ThetaSpec(2, 2, 3)
    for m in (3, 5, 7, 9):
        rec = extremal_search(m, spec)
        assert rec.best_lambda >= spectral_radius(book((m - 1) // 2)).lam - 1e-9


def test_runner_ups_ordered():
    rec = extremal_search(7, ThetaSpec(2, 2, 3))
    lams = [rec.best_lambda] + [lam for _, lam in rec.runner_ups]
    assert all(a >= b - 1e-9 for a, b in zip(lams, lams[1:]))


def test_record_json_deterministic():
    a = extremal_search(6, ThetaSpec(2, 2, 3)).to_json_str()
    b = extremal_search(6, ThetaSpec(2, 2, 3)).to_json_str()
    assert a == b
    c = extremal_search(6, ThetaSpec(2, 2, 3), threads=3).to_json_str()
    assert a == c


def test_threads_preserve_stream():
    serial = [canonical_label(g).data for g in enumerate_by_edges(6)]
    parallel = [canonical_label(g).data for g in enumerate_by_edges(6, threads=4)]
    assert serial == parallel


def test_extremal_table():
    rows = extremal_table([3, 4], ThetaSpec(2, 2, 3))
    assert rows[0]["m"] == 3
    assert rows[0]["best_lambda"] == pytest.approx(2.0, abs=1e-9)
    assert rows[0]["bound"] == pytest.approx(2.0, abs=1e-9)
    assert rows[0]["gap"] == pytest.approx(0.0, abs=1e-9)
    assert rows[1]["bound"] == pytest.approx(bound_value(4), abs=1e-12)


def test_disconnected_search_allowed():
    # with connected_only off, lambda falls back to the best component
    rec = extremal_search(2, ThetaSpec(2, 2, 3), connected_only=False)
    assert rec.num_candidates == 2
    assert rec.best_lambda == pytest.approx(spectral_radius(path(3)).lam, abs=1e-9)
