"""
평면 점 집합 kMST 휴리스틱 (O(k^{1/4}) 근사)
- 모든 점 쌍 (i, j) 에 대해 지름 √3·d(i, j) 원 안의 점만 후보로
- 원을 감싸는 정사각형을 ⌈√k⌉ x ⌈√k⌉ 셀로 나눠 점이 많은 셀부터 k개 선택
- 선택된 점들의 MST 중 가장 짧은 것을 반환 (rectilinear 지정 시 L1 MST)
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from components.errors import ArgumentError, InfeasibleError
from config import GEOM_TOL
from graph_core import KTreeSolution, PointSet2D, point_mst
from merge_collect import ceil_sqrt

logger = logging.getLogger(__name__)

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class CandidateWindow:
    """후보 창 - 중심 원(지름 δ)과 외접 정사각형(한 변 δ)"""

    anchor: tuple[int, int]
    delta: float
    center: tuple[float, float]
    contained: tuple[int, ...]

    @property
    def radius(self) -> float:
        return self.delta / 2.0

    @property
    def square_origin(self) -> tuple[float, float]:
        """정사각형 왼쪽 아래 꼭짓점"""
        return (self.center[0] - self.radius, self.center[1] - self.radius)


@dataclass(frozen=True)
class CellGrid:
    """⌈√k⌉ x ⌈√k⌉ 셀 격자 - 셀 번호는 행 우선"""

    dimension: int
    cell_side: float
    cells: tuple[tuple[int, ...], ...]

    def counts(self) -> list[int]:
        return [len(c) for c in self.cells]


def circle_filter(ps: PointSet2D, i: int, j: int) -> CandidateWindow:
    """s_i, s_j 중점을 중심으로 지름 √3·d(i, j) 닫힌 원 안의 점들 (창 크기는 항상 유클리드 거리 기준)"""
    if i == j:
        raise ArgumentError("anchor points must differ")
    for index in (i, j):
        if not 0 <= index < ps.n:
            raise ArgumentError(f"point index {index} outside 0..{ps.n - 1}")
    (x1, y1), (x2, y2) = ps.points[i], ps.points[j]
    delta = SQRT3 * math.hypot(x1 - x2, y1 - y2)
    center = ((x1 + x2) / 2.0, (y1 + y2) / 2.0)
    offsets = ps.coords - np.asarray(center)
    inside = np.hypot(offsets[:, 0], offsets[:, 1]) <= delta / 2.0 + GEOM_TOL
    contained = tuple(int(x) for x in np.flatnonzero(inside))
    return CandidateWindow((i, j), delta, center, contained)


def build_grid(window: CandidateWindow, ps: PointSet2D, k: int) -> CellGrid:
    """창 안의 점을 반열린 셀에 배정 (마지막 행/열은 닫힘)"""
    dimension = ceil_sqrt(k)
    cells: list[list[int]] = [[] for _ in range(dimension * dimension)]
    if window.delta <= 0:
        cells[0] = list(window.contained)
        return CellGrid(dimension, 0.0, tuple(tuple(c) for c in cells))
    side = window.delta / dimension
    x0, y0 = window.square_origin
    for index in window.contained:
        x, y = ps.points[index]
        col = min(max(int(math.floor((x - x0) / side)), 0), dimension - 1)
        row = min(max(int(math.floor((y - y0) / side)), 0), dimension - 1)
        cells[row * dimension + col].append(index)
    return CellGrid(dimension, side, tuple(tuple(sorted(c)) for c in cells))


def grid_select(window: CandidateWindow, ps: PointSet2D, k: int) -> tuple[list[int], int]:
    """
    점이 많은 셀부터 (동률: 행 우선 셀 번호) 최소 개수의 셀을 골라 정확히 k개 점 선택

    Returns:
        (선택된 점 번호 목록, 사용한 셀 수 g)
    """
    if len(window.contained) < k:
        raise ArgumentError(f"window holds {len(window.contained)} points, fewer than k = {k}")
    grid = build_grid(window, ps, k)
    order = sorted(range(len(grid.cells)), key=lambda c: (-len(grid.cells[c]), c))
    chosen: list[int] = []
    used = 0
    for cell in order:
        if len(chosen) >= k:
            break
        used += 1
        # 마지막 셀의 잉여 점은 번호가 큰 것부터 버림
        chosen.extend(grid.cells[cell][: k - len(chosen)])
    return sorted(chosen), used


def plane_kmst(ps: PointSet2D, k: int) -> KTreeSolution:
    """
    평면 kMST 휴리스틱

    Args:
        ps: 점 집합 (metric 이 MST 길이 기준)
        k: 트리 점 수

    Returns:
        정확히 k개 점 번호를 정점으로 갖는 트리
    """
    if ps.n == 0:
        raise ArgumentError("point set is empty")
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ArgumentError(f"k must be a positive integer, got {k!r}")
    if k > ps.n:
        raise InfeasibleError(f"point count {ps.n} < k")
    if k == 1:
        return KTreeSolution.single_vertex(0, "plane")

    best = None
    windows = 0
    for i in range(ps.n):
        for j in range(i + 1, ps.n):
            window = circle_filter(ps, i, j)
            if len(window.contained) < k:
                continue
            windows += 1
            chosen, _ = grid_select(window, ps, k)
            tree = point_mst(ps, chosen, solver_tag="plane")
            if best is None or tree.cost < best.cost:
                best = tree
    logger.debug("plane_kmst: %d windows with at least %d points", windows, k)
    return best
