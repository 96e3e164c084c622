"""인스턴스 파일 입출력 테스트"""

import numpy as np
import pytest
from hypothesis import given

from components.errors import ParseError, ValidationError
from exact_special import SPParseTree
from graph_core import HuInstance, PointSet2D, WeightedGraph
from instance_io import (
    format_graph,
    format_hu,
    format_instance,
    format_points,
    instance_kind,
    number_text,
    parse_graph,
    parse_hu,
    parse_points,
    read_instance,
    write_instance,
)
from strategies import graphs, point_sets

GRAPH_TEXT = """\
# 경로 3개 + 무게 0.5 가지
4 3
0 1 1
1 2 2.5   # 중간 간선
1 3 0.5
"""


def test_number_text():
    assert number_text(3.0) == "3"
    assert number_text(-2) == "-2"
    assert number_text(0.1) == "0.1"
    assert float(number_text(1 / 3)) == 1 / 3


# ========== 그래프 ==========

def test_parse_graph_skips_comments():
    g = parse_graph(GRAPH_TEXT)
    assert g.vertex_count == 4
    assert g.edges == ((0, 1, 1.0), (1, 2, 2.5), (1, 3, 0.5))


def test_format_graph():
    g = WeightedGraph(3, ((2, 1, 4.0), (0, 1, 0.25)))
    assert format_graph(g) == "3 2\n0 1 0.25\n1 2 4\n"


@pytest.mark.parametrize(
    "text, message",
    [
        ("", "empty"),
        ("3\n", "line 1"),
        ("3 2\n0 1 1\n", "announces 2 edges"),
        ("3 1\n0 1\n", "line 2"),
        ("3 1\n0 x 1\n", "line 2: v must be an integer"),
        ("3 1\n\n# c\n0 1 w\n", "line 4: w must be a number"),
    ],
)
def test_parse_graph_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_graph(text)


def test_parse_graph_rejects_invalid_graph():
    with pytest.raises(ValidationError):
        parse_graph("2 1\n0 0 1\n")


@given(graphs(max_n=8))
def test_graph_text_is_stable(g):
    text = format_graph(g)
    again = parse_graph(text)
    assert (again.vertex_count, again.edges) == (g.vertex_count, g.edges)
    assert format_graph(again) == text


# ========== 점 집합 ==========

def test_parse_points_default_metric():
    ps = parse_points("3\n0 0\n1 0\n0.5 2\n")
    assert ps.metric == "euclidean"
    assert ps.points == ((0.0, 0.0), (1.0, 0.0), (0.5, 2.0))


def test_format_points(unit_square):
    assert format_points(unit_square.with_metric("rectilinear")) == "4 rectilinear\n0 0\n1 0\n1 1\n0 1\n"


@pytest.mark.parametrize(
    "text, message",
    [
        ("2 manhattan\n0 0\n1 1\n", "unknown metric"),
        ("2\n0 0\n", "announces 2 points"),
        ("1\n0 0 0\n", "line 2"),
        ("1\n0 nan?\n", "line 2: y must be a number"),
    ],
)
def test_parse_points_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_points(text)


@given(point_sets(max_n=6))
def test_points_text_is_stable(ps):
    assert parse_points(format_points(ps)) == ps


# ========== Hu ==========

def test_parse_and_format_hu():
    text = "3\n0 1 1 2\n0 2 1 0\n1 2 2 1.5\n"
    inst = parse_hu(text)
    assert inst.d[1, 2] == 2.0
    assert inst.r[2, 1] == 1.5
    assert format_hu(inst) == text


@pytest.mark.parametrize(
    "text, message",
    [
        ("2 1\n", "line 1"),
        ("2\n0 1 1\n", "line 2"),
        ("3\n0 3 1 1\n", "need 0 <= i < j < 3"),
        ("2\n0 1 1 1\n0 1 1 1\n", "repeated"),
        ("3\n0 1 1 1\n", "expected 3"),
    ],
)
def test_parse_hu_errors(text, message):
    with pytest.raises(ParseError, match=message):
        parse_hu(text)


# ========== 파일 ==========

def test_write_and_read_every_kind(tmp_path):
    instances = {
        "graph": WeightedGraph(3, ((0, 1, 1.0), (1, 2, 2.0))),
        "points": PointSet2D(((0.0, 0.0), (3.0, 4.0))),
        "hu": HuInstance(np.ones((2, 2)) - np.eye(2), 2 * (np.ones((2, 2)) - np.eye(2))),
        "sp": SPParseTree.series(SPParseTree.edge(0, 2, 1), SPParseTree.edge(2, 1, 3)),
    }
    for kind, instance in instances.items():
        assert instance_kind(instance) == kind
        path = write_instance(instance, tmp_path / "nested" / f"case.{kind}")
        assert path.read_text(encoding="utf-8") == format_instance(instance)
        loaded = read_instance(path, kind)
        assert format_instance(loaded) == format_instance(instance)


def test_read_instance_unknown_kind(write_text):
    with pytest.raises(ParseError):
        read_instance(write_text("x.txt", "1 0\n"), "matrix")


def test_instance_kind_rejects_other_objects():
    with pytest.raises(ParseError):
        instance_kind([1, 2, 3])
