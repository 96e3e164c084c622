"""최소 지름 k-트리, 지붕 곡선, Hu 프레임워크 테스트"""

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from components.errors import ArgumentError, InfeasibleError, ValidationError
from graph_core import HuInstance, KTreeSolution, WeightedGraph, all_pairs, check_solution
from oracles import oracle_hu_tree, oracle_min_diam_ktree
from short_trees import (
    CutTree,
    DiameterCandidate,
    RoofCurve,
    edge_candidate,
    evaluate_hu,
    gomory_hu,
    hu_objective,
    min_comm_tree_two_r_zero_c,
    min_comm_tree_uniform_d,
    min_diameter_ktree,
    min_diameter_spanning_tree,
    min_diamcost_tree_uniform_d_two_r,
    min_diamcost_tree_uniform_r,
    roof_curve,
    roof_diameter,
    roof_sweep_edge,
    split_two_centers,
    vertex_candidate,
)
from strategies import graphs, graphs_with_k, hu_instances


def double_star() -> WeightedGraph:
    """중심 0, 1 각각에 잎 3개 (단위 가중치)"""
    edges = [(0, 1, 1.0)] + [(0, leaf, 1.0) for leaf in (2, 3, 4)] + [(1, leaf, 1.0) for leaf in (5, 6, 7)]
    return WeightedGraph(8, tuple(edges))


def uniform_hu(n: int, r: np.ndarray, c: float = 1.0) -> HuInstance:
    return HuInstance(c * (np.ones((n, n)) - np.eye(n)), r)


# ========== 최소 지름 k-트리 ==========

def test_path_k3(p5):
    tree, value = min_diameter_ktree(p5, 3)
    assert value == 2.0
    assert tree.size == 3
    assert tree.diameter <= value
    check_solution(tree, p5, 3)


def test_double_star_uses_edge_center():
    g = double_star()
    tree, value = min_diameter_ktree(g, 8)
    assert value == 3.0
    assert tree.diameter == 3.0
    assert oracle_min_diam_ktree(g, 8)[0] == 3.0


def test_triangle_prefers_cheap_detour():
    g = WeightedGraph(3, ((0, 1, 1.0), (1, 2, 1.0), (0, 2, 10.0)))
    _, value = min_diameter_ktree(g, 3)
    assert value == 2.0


def test_k1_and_errors(p5):
    tree, value = min_diameter_ktree(p5, 1)
    assert (tree.size, value) == (1, 0.0)
    with pytest.raises(ArgumentError):
        min_diameter_ktree(p5, 0)
    with pytest.raises(InfeasibleError):
        min_diameter_ktree(WeightedGraph(4, ((0, 1, 1.0), (2, 3, 1.0))), 3)


def test_spanning_version_needs_connected_graph():
    with pytest.raises(InfeasibleError, match="disconnected"):
        min_diameter_spanning_tree(WeightedGraph(3, ((0, 1, 1.0),)))


def test_candidates():
    dist = all_pairs(WeightedGraph(3, ((0, 1, 2.0), (1, 2, 2.0))))
    assert vertex_candidate(dist, 1, 3).value == 4.0
    assert vertex_candidate(dist, 0, 3).value == 8.0
    found = edge_candidate(dist, (0, 1, 2.0), 3)
    assert found.value == 4.0
    vertex_first = DiameterCandidate(4.0, (1,))
    assert vertex_first.key() < found.key()


def test_split_two_centers_prefers_more_slack():
    dist_i = np.array([0.0, 1.0, 2.0, 9.0])
    dist_j = np.array([3.0, 2.0, 0.5, 0.0])
    side_i, side_j = split_two_centers(dist_i, dist_j, a=2.0, b=1.0)
    assert side_i == [0, 1]
    assert side_j == [2, 3]


def assert_diameter_duality(g, k):
    tree, value = min_diameter_ktree(g, k)
    check_solution(tree, g, k)
    assert tree.diameter <= value + 1e-9
    assert value == pytest.approx(oracle_min_diam_ktree(g, k)[0], rel=1e-9)
    assert value == pytest.approx(roof_diameter(g, k), rel=1e-9)


@settings(max_examples=200)
@given(graphs_with_k(max_n=6))
def test_matches_oracle_and_roof_sweep(case):
    assert_diameter_duality(*case)


# 오라클이 신장 트리를 모두 열거하므로 7~9 정점은 성긴 그래프만
@settings(max_examples=200)
@given(graphs_with_k(min_n=7, max_n=9, densities=(0.1, 0.2)))
def test_matches_oracle_and_roof_sweep_sparse(case):
    assert_diameter_duality(*case)


# ========== 지붕 곡선 ==========

def test_roof_curve_values():
    curve = RoofCurve(node=9, edge=(0, 1, 4.0), to_u=1.0, to_v=3.0)
    assert curve(0.0) == 1.0
    assert curve(3.0) == 4.0
    assert curve(4.0) == 3.0
    assert curve.breakpoint == 3.0


def test_roof_sweep_finds_midpoint():
    g = WeightedGraph(2, ((0, 1, 4.0),))
    dist = all_pairs(g)
    e = g.edges[0]
    curves = [roof_curve(x, e, dist) for x in range(2)]
    ell, radius = roof_sweep_edge(e, curves, 2)
    assert (ell, radius) == (2.0, 2.0)
    with pytest.raises(ArgumentError):
        roof_sweep_edge(e, curves, 3)


# ========== Hu 프레임워크 ==========

def test_evaluate_hu_star():
    inst = uniform_hu(3, np.ones((3, 3)) - np.eye(3))
    star = KTreeSolution.from_edges([(0, 1, 1.0), (0, 2, 1.0)], "star")
    assert evaluate_hu(star, inst) == (4.0, 2.0)
    assert hu_objective(star, inst, "diamcost") == 2.0


def test_evaluate_hu_rejects_partial_or_mismatched_trees():
    inst = uniform_hu(3, np.ones((3, 3)) - np.eye(3))
    with pytest.raises(ArgumentError):
        evaluate_hu(KTreeSolution.from_edges([(0, 1, 1.0)], "partial"), inst)
    with pytest.raises(ValidationError):
        evaluate_hu(KTreeSolution.from_edges([(0, 1, 2.0), (0, 2, 1.0)], "wrong"), inst)


def test_gomory_hu_triangle():
    g = WeightedGraph(3, ((0, 1, 1.0), (1, 2, 3.0), (0, 2, 2.0)))
    tree = gomory_hu(g)
    assert tree.min_cut(0, 1) == 3.0
    assert tree.min_cut(0, 2) == 3.0
    assert tree.min_cut(1, 2) == 4.0
    with pytest.raises(ArgumentError):
        tree.min_cut(1, 1)


@settings(max_examples=200)
@given(graphs(max_n=7))
def test_gomory_hu_matches_networkx(g):
    tree = gomory_hu(g)
    assert isinstance(tree, CutTree)
    reference = nx.Graph()
    reference.add_nodes_from(range(g.vertex_count))
    reference.add_weighted_edges_from(g.edges, weight="capacity")
    for i in range(g.vertex_count):
        for j in range(i + 1, g.vertex_count):
            assert tree.min_cut(i, j) == pytest.approx(nx.minimum_cut_value(reference, i, j))


def test_min_comm_three_nodes():
    r = np.array([[0, 5, 5], [5, 0, 1], [5, 1, 0]], dtype=float)
    tree = min_comm_tree_uniform_d(uniform_hu(3, r))
    assert evaluate_hu(tree, uniform_hu(3, r))[0] == 12.0


@given(hu_instances("uniform-d", max_n=5))
def test_min_comm_uniform_d_is_optimal(inst):
    tree = min_comm_tree_uniform_d(inst)
    assert tree.solver_tag == "min-comm"
    assert hu_objective(tree, inst, "comm") == pytest.approx(oracle_hu_tree(inst, "comm")[0])


def test_min_comm_zero_distance_supernode():
    d = np.array([[0, 0, 1], [0, 0, 1], [1, 1, 0]], dtype=float)
    inst = HuInstance(d, np.ones((3, 3)) - np.eye(3))
    tree = min_comm_tree_two_r_zero_c(inst)
    assert (0, 1, 0.0) in tree.edges
    assert evaluate_hu(tree, inst)[0] == 2.0


@settings(max_examples=200)
@given(hu_instances("zero-c-two-r", max_n=6))
def test_min_comm_two_r_zero_c_is_optimal(inst):
    tree = min_comm_tree_two_r_zero_c(inst)
    assert tree.size == inst.n
    assert hu_objective(tree, inst, "comm") == pytest.approx(oracle_hu_tree(inst, "comm")[0], rel=1e-9)


def test_min_comm_two_r_rejects_three_distances():
    d = np.array([[0, 1, 2], [1, 0, 1], [2, 1, 0]], dtype=float)
    with pytest.raises(ArgumentError):
        min_comm_tree_two_r_zero_c(HuInstance(d, np.ones((3, 3)) - np.eye(3)))


def test_min_diamcost_forest_of_heavy_pairs():
    r = np.ones((4, 4)) - np.eye(4)
    r[0, 1] = r[1, 0] = r[1, 2] = r[2, 1] = 10.0
    inst = uniform_hu(4, r)
    tree = min_diamcost_tree_uniform_d_two_r(inst)
    assert tree.edges == ((0, 1, 1.0), (1, 2, 1.0), (1, 3, 1.0))
    assert evaluate_hu(tree, inst)[1] == 10.0
    assert oracle_hu_tree(inst, "diamcost")[0] == 10.0


def test_min_diamcost_heavy_cycle_falls_back_to_star():
    r = np.ones((4, 4)) - np.eye(4)
    for i, j in ((0, 1), (1, 2), (0, 2)):
        r[i, j] = r[j, i] = 10.0
    inst = uniform_hu(4, r)
    tree = min_diamcost_tree_uniform_d_two_r(inst)
    assert evaluate_hu(tree, inst)[1] == 20.0
    assert oracle_hu_tree(inst, "diamcost")[0] == 20.0


@given(hu_instances("uniform-r", max_n=5))
def test_min_diamcost_uniform_r_is_optimal(inst):
    tree = min_diamcost_tree_uniform_r(inst)
    assert tree.solver_tag == "min-diamcost"
    assert hu_objective(tree, inst, "diamcost") == pytest.approx(oracle_hu_tree(inst, "diamcost")[0])


@settings(max_examples=200)
@given(hu_instances("two-r", min_n=3, max_n=6))
def test_min_diamcost_two_r_is_optimal(inst):
    tree = min_diamcost_tree_uniform_d_two_r(inst)
    a = max(inst.pair_values("r"))
    c = inst.pair_values("d")[0]
    value = hu_objective(tree, inst, "diamcost")
    assert value <= 2 * a * c + 1e-9
    assert value == pytest.approx(oracle_hu_tree(inst, "diamcost")[0], rel=1e-9)
