"""두 가중치 / series-parallel / 트리 정확 해법 테스트"""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from components.errors import ApplicabilityError, ArgumentError, InfeasibleError, ParseError, ValidationError
from exact_special import (
    JOINED,
    SERIES,
    CostTable,
    SPParseTree,
    compose_tables,
    parse_sp_tree,
    reconstruct,
    sp_kmst,
    tree_kmst,
    two_weight_kmst,
)
from graph_core import KTreeSolution, WeightedGraph, check_solution
from oracles import oracle_kmst
from strategies import graphs, sp_trees, trees


def two_triangles() -> WeightedGraph:
    light = {(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)}
    edges = [(i, j, 1.0 if (i, j) in light else 10.0) for i in range(6) for j in range(i + 1, 6)]
    return WeightedGraph(6, tuple(edges))


def theta() -> SPParseTree:
    left = SPParseTree.series(SPParseTree.edge(0, 2, 1), SPParseTree.edge(2, 1, 1))
    right = SPParseTree.series(SPParseTree.edge(0, 3, 2), SPParseTree.edge(3, 1, 2))
    return SPParseTree.parallel(left, right)


# ========== 두 종류 가중치 ==========

@pytest.mark.parametrize("k, expected", [(6, 14.0), (3, 2.0), (2, 1.0), (4, 12.0)])
def test_two_triangles(k, expected):
    g = two_triangles()
    tree = two_weight_kmst(g, k)
    assert tree.cost == expected
    check_solution(tree, g, k)
    assert oracle_kmst(g, k)[0] == expected


def test_two_weight_rejects_three_weights():
    g = WeightedGraph(3, ((0, 1, 1.0), (1, 2, 2.0), (0, 2, 3.0)))
    with pytest.raises(ArgumentError):
        two_weight_kmst(g, 2)


def test_two_weight_needs_direct_links():
    # 가벼운 요소 {0,1} 과 {3,4} 사이에 무거운 간선이 직접 없음
    g = WeightedGraph(5, ((0, 1, 1.0), (3, 4, 1.0), (1, 2, 5.0), (2, 3, 5.0)))
    with pytest.raises(ApplicabilityError):
        two_weight_kmst(g, 4)


@settings(max_examples=200)
@given(graphs(min_n=2, max_n=10, weights=(1, 3)), st.data())
def test_two_weight_cost_formula_on_complete_graphs(g, data):
    complete = WeightedGraph.from_edges(
        g.vertex_count,
        [(i, j, g.weight(i, j) or 3.0) for i in range(g.vertex_count) for j in range(i + 1, g.vertex_count)],
    )
    k = data.draw(st.integers(min_value=1, max_value=g.vertex_count))
    tree = two_weight_kmst(complete, k)
    check_solution(tree, complete, k)
    assert tree.cost == pytest.approx(oracle_kmst(complete, k)[0])


# ========== 파스 트리 ==========

def test_parse_tree_terminals_and_text():
    tree = theta()
    assert tree.terminals == (0, 1)
    assert tree.vertices == frozenset({0, 1, 2, 3})
    assert parse_sp_tree(tree.to_text()) == tree
    assert tree.to_text() == "(p (s (e 0 2 1) (e 2 1 1)) (s (e 0 3 2) (e 3 1 2)))"


def test_parallel_edges_rejected():
    with pytest.raises(ValidationError):
        SPParseTree.parallel(SPParseTree.edge(0, 1, 3), SPParseTree.edge(0, 1, 7))


def test_series_must_share_terminal():
    with pytest.raises(ValidationError):
        SPParseTree.series(SPParseTree.edge(0, 1, 1), SPParseTree.edge(2, 3, 1))


@pytest.mark.parametrize("text", ["", "(e 0 1)", "(x 0 1 2)", "(s (e 0 1 1))", "(e 0 1 1))", "(e 0 1 a)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_sp_tree(text)


# ========== 비용 테이블 ==========

def test_series_of_two_edges_table():
    a, b = SPParseTree.edge(0, 1, 2), SPParseTree.edge(1, 2, 5)
    table = compose_tables(CostTable.primitive(a, 3), CostTable.primitive(b, 3), SERIES, 3)
    assert table.terminals == (0, 2)
    assert table.entries[JOINED][2] == 7.0
    assert math.isinf(table.entries[JOINED][1])


def test_all_infinite_table_absorbs():
    a = SPParseTree.edge(0, 1, 2)
    empty = CostTable.empty((1, 2), 3)
    table = compose_tables(CostTable.primitive(a, 3), empty, SERIES, 3)
    assert table.finite() == [("t1", 1)]


def test_reconstruct_finite_entries():
    tree = theta()
    tables = {}
    for node in tree.postorder():
        if node.kind == "e":
            tables[id(node)] = CostTable.primitive(node, 4)
        else:
            tables[id(node)] = compose_tables(tables[id(node.left)], tables[id(node.right)], node.kind, 4)
    root = tables[id(tree)]
    for state, count in root.finite():
        edges = reconstruct(tree, tables, state, count)
        assert len(edges) == count
        assert math.fsum(w for _, _, w in edges) == pytest.approx(root.entries[state][count])


# ========== sp_kmst ==========

def test_sp_primitive():
    assert sp_kmst(SPParseTree.edge(0, 1, 5), 2).cost == 5.0


def test_sp_series_picks_lighter_edge():
    tree = SPParseTree.series(SPParseTree.edge(0, 1, 1), SPParseTree.edge(1, 2, 4))
    assert sp_kmst(tree, 2).cost == 1.0


def test_sp_theta():
    result = sp_kmst(theta(), 3)
    assert result.cost == 2.0
    assert result.vertices == frozenset({0, 1, 2})


def test_sp_too_large_k():
    with pytest.raises(InfeasibleError):
        sp_kmst(theta(), 5)


@settings(max_examples=200)
@given(sp_trees(max_m=11), st.data())
def test_sp_matches_oracle(tree, data):
    g = tree.to_graph()
    k = data.draw(st.integers(min_value=1, max_value=len(tree.vertices)))
    result = sp_kmst(tree, k)
    assert result.size == k
    check_solution(result, g, k)
    assert result.cost == pytest.approx(oracle_kmst(g, k)[0])


# ========== tree_kmst ==========

def test_tree_path_window():
    g = WeightedGraph(4, ((0, 1, 1.0), (1, 2, 4.0), (2, 3, 2.0)))
    assert tree_kmst(g, 3).cost == 5.0


def test_tree_star_cheapest_leaves():
    g = WeightedGraph(5, tuple((0, leaf, float(leaf)) for leaf in range(1, 5)))
    result = tree_kmst(g, 3)
    assert result.cost == 3.0
    assert result.vertices == frozenset({0, 1, 2})


def test_tree_kmst_rejects_cycles():
    with pytest.raises(ArgumentError):
        tree_kmst(WeightedGraph(3, ((0, 1, 1.0), (1, 2, 1.0), (0, 2, 1.0))), 2)


@settings(max_examples=200)
@given(trees(max_n=12), st.data())
def test_tree_matches_oracle(g, data):
    k = data.draw(st.integers(min_value=1, max_value=g.vertex_count))
    result = tree_kmst(g, k)
    assert isinstance(result, KTreeSolution)
    check_solution(result, g, k)
    assert result.cost == pytest.approx(oracle_kmst(g, k)[0])
