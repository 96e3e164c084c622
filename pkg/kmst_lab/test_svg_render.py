"""SVG 출력 테스트"""

import pytest

from components.errors import ArgumentError
from graph_core import KTreeSolution, PointSet2D
from svg_render import CHOSEN_STYLE, POINT_STYLE, emit_svg, render_svg


def corner_path() -> KTreeSolution:
    return KTreeSolution.from_edges([(0, 1, 1.0), (1, 2, 1.0)], "test")


def test_render_lines_and_points(unit_square):
    svg = render_svg(corner_path(), unit_square)
    assert svg.startswith('<?xml version="1.0" encoding="UTF-8"?>\n<svg ')
    assert 'viewBox="-0.05 -0.05 1.1 1.1"' in svg
    assert svg.count("<line ") == 2
    assert svg.count("<circle ") == 4
    assert svg.count(CHOSEN_STYLE) == 3
    assert svg.count(POINT_STYLE) == 1
    assert svg.endswith("</svg>\n")


def test_rectilinear_edges_are_l_shaped(unit_square):
    svg = render_svg(corner_path(), unit_square.with_metric("rectilinear"))
    assert svg.count("<path ") == 2
    assert "<line " not in svg
    # metric 인자가 점 집합의 metric 보다 우선
    assert render_svg(corner_path(), unit_square.with_metric("rectilinear"), metric="euclidean").count("<line ") == 2


def test_render_is_deterministic(unit_square):
    assert render_svg(corner_path(), unit_square) == render_svg(corner_path(), unit_square)


def test_single_point_has_nonzero_viewport():
    svg = render_svg(KTreeSolution.single_vertex(0, "test"), PointSet2D(((2.0, 3.0),)))
    assert svg.count("<circle ") == 1


def test_render_errors(unit_square):
    with pytest.raises(ArgumentError):
        render_svg(KTreeSolution.single_vertex(0, "test"), PointSet2D(()))
    with pytest.raises(ArgumentError, match="not a geometric solution"):
        render_svg(KTreeSolution.from_edges([(0, 7, 1.0)], "test"), unit_square)


def test_emit_svg_creates_folders(tmp_path, unit_square):
    path = emit_svg(corner_path(), unit_square, tmp_path / "out" / "tree.svg")
    assert path.exists()
    assert path.read_text(encoding="utf-8") == render_svg(corner_path(), unit_square)
