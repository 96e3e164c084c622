"""
기하 해 SVG 출력
- 점은 circle, 트리 간선은 line (rectilinear 는 가로→세로 L자 path)
- viewBox = 점들의 경계 상자 + 5% 여백, y 축은 위쪽이 양수가 되도록 뒤집음
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Optional, Union

from components.errors import ArgumentError
from components.utils import format_number
from graph_core import KTreeSolution, PointSet2D

logger = logging.getLogger(__name__)

MARGIN = 0.05
POINT_STYLE = 'fill="#4c78a8"'
CHOSEN_STYLE = 'fill="#e45756"'
EDGE_STYLE = 'stroke="#333333" fill="none"'


def _viewport(ps: PointSet2D) -> tuple[float, float, float, float]:
    xs = [x for x, _ in ps.points]
    ys = [y for _, y in ps.points]
    width = max(xs) - min(xs)
    height = max(ys) - min(ys)
    span = max(width, height, 1e-9)
    pad = MARGIN * span
    return min(xs) - pad, min(ys) - pad, width + 2 * pad, height + 2 * pad


def render_svg(solution: KTreeSolution, ps: PointSet2D, metric: Optional[str] = None) -> str:
    """
    SVG 문서 문자열 생성 (같은 입력이면 같은 바이트)

    Args:
        solution: 점 번호를 정점으로 갖는 해
        ps: 점 집합
        metric: 간선 모양 기준 (기본 ps.metric)
    """
    if ps.n == 0:
        raise ArgumentError("cannot render an empty point set")
    if any(not 0 <= v < ps.n for v in solution.vertices):
        raise ArgumentError(f"solution uses vertices outside the {ps.n} points; it is not a geometric solution")
    metric = metric or ps.metric
    x0, y0, width, height = _viewport(ps)
    top = y0 + height
    radius = format_number(0.006 * max(width, height))
    stroke = format_number(0.003 * max(width, height))

    def sx(x: float) -> str:
        return format_number(x)

    def sy(y: float) -> str:
        # SVG 는 y 가 아래로 증가
        return format_number(top - y + y0)

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        (
            f'<svg xmlns="http://www.w3.org/2000/svg" '
            f'viewBox="{format_number(x0)} {format_number(y0)} {format_number(width)} {format_number(height)}">'
        ),
        f'<g {EDGE_STYLE} stroke-width="{stroke}">',
    ]
    for u, v, _ in solution.edges:
        (x1, y1), (x2, y2) = ps.points[u], ps.points[v]
        if metric == "rectilinear":
            lines.append(f'<path d="M {sx(x1)} {sy(y1)} L {sx(x2)} {sy(y1)} L {sx(x2)} {sy(y2)}"/>')
        else:
            lines.append(f'<line x1="{sx(x1)}" y1="{sy(y1)}" x2="{sx(x2)}" y2="{sy(y2)}"/>')
    lines.append("</g>")
    lines.append("<g>")
    for index, (x, y) in enumerate(ps.points):
        style = CHOSEN_STYLE if index in solution.vertices else POINT_STYLE
        lines.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="{radius}" {style}/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def emit_svg(solution: KTreeSolution, ps: PointSet2D, path: Union[str, Path], metric: Optional[str] = None) -> Path:
    """SVG 파일 저장"""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render_svg(solution, ps, metric), encoding="utf-8")
    logger.info("wrote %s (%d edges)", target, len(solution.edges))
    return target
