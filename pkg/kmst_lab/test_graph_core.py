"""graph_core 테스트 - 그래프 검증, 최단 경로, MST, closure, 트리 지표"""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given

from components.errors import ArgumentError, InfeasibleError, ValidationError
from graph_core import (
    HuInstance,
    KTreeSolution,
    PointSet2D,
    WeightedGraph,
    all_pairs,
    check_solution,
    geometric_length,
    metric_closure,
    mst,
    mst_forest,
    point_mst,
    sssp,
    tree_metrics,
)
from strategies import graphs, point_sets, trees


# ========== WeightedGraph ==========

def test_edges_are_normalized_and_sorted():
    g = WeightedGraph(3, ((2, 1, 4), (1, 0, 2)))
    assert g.edges == ((0, 1, 2.0), (1, 2, 4.0))
    assert g.adjacency[1] == ((0, 2.0), (2, 4.0))
    assert g.weight(2, 1) == 4.0
    assert g.weight(0, 2) is None


@pytest.mark.parametrize(
    "edges",
    [
        ((0, 0, 1.0),),
        ((0, 1, 1.0), (1, 0, 2.0)),
        ((0, 1, -1.0),),
        ((0, 1, math.inf),),
        ((0, 3, 1.0),),
    ],
)
def test_invalid_edges_rejected(edges):
    with pytest.raises(ValidationError):
        WeightedGraph(3, edges)


def test_negative_vertex_count_rejected():
    with pytest.raises(ArgumentError):
        WeightedGraph(-1)


def test_from_edges_keeps_cheapest_parallel_edge():
    g = WeightedGraph.from_edges(2, [(0, 1, 5), (1, 0, 3)], keep_min_parallel=True)
    assert g.edges == ((0, 1, 3.0),)


def test_components_sorted_by_smallest_vertex():
    g = WeightedGraph(5, ((3, 4, 1.0), (0, 2, 1.0)))
    assert g.components() == [(0, 2), (1,), (3, 4)]


# ========== 최단 경로 ==========

def test_sssp_path_and_isolated_vertex():
    g = WeightedGraph(4, ((0, 1, 2.0), (1, 2, 3.0)))
    result = sssp(g, 0)
    assert [d for d, _ in result[:3]] == [0.0, 2.0, 5.0]
    assert result[2][1] == 1
    assert result[3] == (math.inf, None)


def test_sssp_keeps_zero_weight_edges():
    g = WeightedGraph(3, ((0, 1, 0.0), (1, 2, 0.0)))
    assert [d for d, _ in sssp(g, 0)] == [0.0, 0.0, 0.0]


def test_sssp_rejects_unknown_source():
    with pytest.raises(ArgumentError):
        sssp(WeightedGraph(2), 5)


# ========== MST ==========

def test_mst_triangle():
    g = WeightedGraph(3, ((0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)))
    tree = mst(g)
    assert tree.cost == 3.0
    assert tree.edges == ((0, 1, 1.0), (1, 2, 2.0))


def test_mst_disconnected_is_infeasible():
    with pytest.raises(InfeasibleError):
        mst(WeightedGraph(3, ((0, 1, 1.0),)))


def test_mst_forest_one_tree_per_component():
    g = WeightedGraph(5, ((0, 1, 1.0), (3, 4, 2.0)))
    forest = mst_forest(g)
    assert [sorted(t.vertices) for t in forest] == [[0, 1], [2], [3, 4]]
    assert [t.cost for t in forest] == [1.0, 0.0, 2.0]


@given(graphs(max_n=6))
def test_mst_matches_spanning_tree_enumeration(g):
    best = math.inf
    for combo in itertools.combinations(g.edges, g.vertex_count - 1):
        try:
            candidate = KTreeSolution.from_edges(combo, "enum", vertices=range(g.vertex_count))
        except ValidationError:
            continue
        best = min(best, candidate.cost)
    if g.vertex_count == 1:
        best = 0.0
    assert mst(g).cost == pytest.approx(best)


# ========== Metric closure ==========

def test_metric_closure_relabels_subset():
    g = WeightedGraph(3, ((0, 1, 1.0), (1, 2, 1.0)))
    closure, paths = metric_closure(g, [0, 2])
    assert closure.edges == ((0, 1, 2.0),)
    assert paths.expand(0, 1) == [0, 1, 2]
    assert paths.expand_edges(0, 1) == [(0, 1, 1.0), (1, 2, 1.0)]


def test_metric_closure_disconnected_subset():
    with pytest.raises(InfeasibleError):
        metric_closure(WeightedGraph(3, ((0, 1, 1.0),)), [0, 2])


@given(graphs(max_n=8))
def test_metric_closure_triangle_inequality(g):
    closure, _ = metric_closure(g)
    dist = all_pairs(closure)
    for i, j, m in itertools.permutations(range(g.vertex_count), 3):
        assert dist[i, j] <= dist[i, m] + dist[m, j] + 1e-9


# ========== 트리 지표 / 검증 ==========

def test_tree_metrics_star():
    star = KTreeSolution.from_edges([(0, 1, 1), (0, 2, 1), (0, 3, 1)], "star")
    cost, diameter, degrees = tree_metrics(star)
    assert (cost, diameter, degrees) == (3.0, 2.0, (3, 1, 1, 1))


def test_tree_metrics_single_edge():
    edge = KTreeSolution.from_edges([(4, 2, 7)], "edge")
    assert tree_metrics(edge)[:2] == (7.0, 7.0)
    assert edge.vertices == frozenset({2, 4})


@pytest.mark.parametrize(
    "edges, vertices",
    [
        ([(0, 1, 1), (1, 2, 1), (0, 2, 1)], None),
        ([(0, 1, 1)], [0, 1, 2]),
        ([(0, 1, 1), (2, 3, 1)], [0, 1, 2, 3, 4]),
    ],
)
def test_cyclic_or_disconnected_edge_sets_rejected(edges, vertices):
    with pytest.raises(ValidationError):
        KTreeSolution.from_edges(edges, "bad", vertices=vertices)


@given(trees(max_n=10))
def test_tree_diameter_matches_all_pairs(g):
    tree = KTreeSolution.from_edges(g.edges, "tree", vertices=range(g.vertex_count))
    expected = float(all_pairs(g).max()) if g.vertex_count > 1 else 0.0
    assert tree.diameter == pytest.approx(expected)
    check_solution(tree, g, g.vertex_count)


def test_check_solution_catches_foreign_edge(p5):
    tree = KTreeSolution.from_edges([(0, 2, 2.0)], "bad")
    with pytest.raises(ValidationError):
        check_solution(tree, p5)


def test_check_solution_catches_wrong_size(p5):
    tree = KTreeSolution.from_edges([(0, 1, 1.0)], "ok")
    check_solution(tree, p5, 2)
    with pytest.raises(ValidationError):
        check_solution(tree, p5, 3)


def test_sort_key_breaks_cost_ties_lexicographically():
    a = KTreeSolution.from_edges([(0, 1, 1.0)], "a")
    b = KTreeSolution.from_edges([(1, 2, 1.0)], "b")
    assert min([b, a], key=KTreeSolution.sort_key) is a


# ========== 점 집합 ==========

def test_point_set_metrics():
    ps = PointSet2D(((0, 0), (3, 4)))
    assert ps.distance(0, 1) == 5.0
    assert ps.distance(0, 1, "rectilinear") == 7.0
    assert ps.with_metric("rectilinear").as_graph().edges == ((0, 1, 7.0),)


def test_point_set_rejects_unknown_metric():
    with pytest.raises(ArgumentError):
        PointSet2D(((0, 0),), "chebyshev")


def test_point_mst_unit_square(unit_square):
    tree = point_mst(unit_square, range(4))
    assert tree.cost == pytest.approx(3.0)
    assert tree.size == 4


@given(point_sets(max_n=8))
def test_rectilinear_length_dominates_euclidean(ps):
    tree = point_mst(ps, range(ps.n))
    assert geometric_length(tree, ps, "rectilinear") >= geometric_length(tree, ps, "euclidean") - 1e-9


# ========== Hu 인스턴스 ==========

def test_hu_instance_validation():
    with pytest.raises(ValidationError):
        HuInstance(np.array([[0, 1], [2, 0]]), np.zeros((2, 2)))
    with pytest.raises(ValidationError):
        HuInstance(np.array([[1, 1], [1, 0]]), np.zeros((2, 2)))
    with pytest.raises(ValidationError):
        HuInstance(np.zeros((2, 2)), np.zeros((3, 3)))


def test_hu_pair_values_and_d_graph():
    d = np.array([[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    inst = HuInstance(d, np.ones((3, 3)) - np.eye(3))
    assert inst.pair_values("d") == (1.0, 2.0)
    assert inst.pair_values("r") == (1.0,)
    assert inst.d_graph().edges == ((0, 1, 1.0), (0, 2, 2.0), (1, 2, 1.0))
