"""
볼록 위치 점 집합의 정확한 kMST
- convex_kmst: 시계 방향 경계 순서 위 SOLN(s, i, d, 구간) 메모 재귀
- circle_kmst: 한 원 위의 점 - 원 순서대로 k개를 잇는 최단 경로 DP
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np
from scipy.spatial import ConvexHull, QhullError

from components.errors import ApplicabilityError, ArgumentError, InfeasibleError, ResourceError
from config import CONVEX_MAX_POINTS, GEOM_TOL
from graph_core import KTreeSolution, PointSet2D

logger = logging.getLogger(__name__)

INF = math.inf
MAX_APEX_DEGREE = 4


@dataclass(frozen=True, eq=False)
class ConvexInstance:
    """볼록 다각형 꼭짓점 - 시계 방향 순서 (order[p] = 원래 점 번호)"""

    order: tuple[int, ...]
    dist: np.ndarray

    @property
    def n(self) -> int:
        return len(self.order)


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _scale(ps: PointSet2D) -> float:
    if ps.n == 0:
        return 1.0
    return max(1.0, float(np.abs(ps.coords).max()))


def convex_instance(ps: PointSet2D) -> ConvexInstance:
    """모든 점이 볼록 껍질 꼭짓점인지 확인하고 시계 방향 순서로 정렬"""
    if ps.metric != "euclidean":
        raise ApplicabilityError("convex_kmst works in the Euclidean metric; use plane_kmst for rectilinear input")
    n = ps.n
    if n <= 2:
        if n == 2 and ps.points[0] == ps.points[1]:
            raise ApplicabilityError("coincident points are not in strict convex position; use plane_kmst")
        return ConvexInstance(tuple(range(n)), ps.distance_matrix("euclidean"))
    try:
        hull = ConvexHull(ps.coords)
    except QhullError as exc:
        raise ApplicabilityError(f"points are degenerate (collinear or coincident): {exc}; use plane_kmst") from exc
    ccw = [int(v) for v in hull.vertices]
    if len(ccw) != n:
        inside = sorted(set(range(n)) - set(ccw))
        raise ApplicabilityError(
            f"points {inside[:5]} are not hull vertices; use merge_collect or plane_kmst"
        )
    tol = GEOM_TOL * _scale(ps) ** 2
    for p in range(n):
        a, b, c = (ps.points[ccw[(p + t) % n]] for t in range(3))
        if _cross(a, b, c) <= tol:
            raise ApplicabilityError(f"points {ccw[p]}, {ccw[(p + 1) % n]}, {ccw[(p + 2) % n]} are collinear")
    clockwise = ccw[::-1]
    start = clockwise.index(min(clockwise))
    order = tuple(clockwise[start:] + clockwise[:start])
    return ConvexInstance(order, ps.distance_matrix("euclidean"))


def convex_kmst(ps: PointSet2D, k: int) -> KTreeSolution:
    """
    볼록 위치 점 집합의 정확한 kMST

    SOLN(s, i, d, 구간): v_i 를 차수 d 로 포함하고 나머지 s-1 개 점이
    구간(v_i 를 포함하지 않는 연속 원형 구간) 안에 있는 최소 트리.
    구간은 (시작 위치, 길이) 로 표현한다.
    """
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ArgumentError(f"k must be a positive integer, got {k!r}")
    if ps.n > CONVEX_MAX_POINTS:
        raise ResourceError(f"{ps.n} points exceed the convex solver limit of {CONVEX_MAX_POINTS}")
    if k > ps.n:
        raise InfeasibleError(f"point count {ps.n} < k")
    inst = convex_instance(ps)
    if k == 1:
        return KTreeSolution.single_vertex(0, "convex")

    n = inst.n
    order = inst.order
    dist = inst.dist

    def w(p: int, q: int) -> float:
        return float(dist[order[p], order[q]])

    @lru_cache(maxsize=None)
    def soln(s: int, i: int, d: int, start: int, length: int) -> tuple[float, tuple]:
        if s == 1:
            return (0.0, ()) if d == 0 else (INF, ())
        if d == 0 or s > length + 1 or d > s - 1:
            return (INF, ())
        if d >= 2:
            return fan(s, i, d, start, length)
        # d = 1: 유일한 이웃 v_j 가 구간을 왼쪽/오른쪽으로 나눔 (v_j 차수 1 + d1 + d2 ≤ 4)
        best: tuple[float, tuple] = (INF, ())
        for offset in range(length):
            j = (start + offset) % n
            right_length = length - offset - 1
            right_start = (j + 1) % n
            link = w(i, j)
            for d1 in range(0, MAX_APEX_DEGREE):
                for s1 in range(1, min(s - 1, offset + 1) + 1):
                    s2 = s - s1
                    if s2 > right_length + 1:
                        continue
                    c1, e1 = soln(s1, j, d1, start, offset)
                    if c1 == INF:
                        continue
                    c2, e2 = up_to(s2, j, MAX_APEX_DEGREE - 1 - d1, right_start, right_length)
                    if c2 == INF:
                        continue
                    total = link + c1 + c2
                    if total < best[0]:
                        best = (total, ((i, j),) + e1 + e2)
        return best

    @lru_cache(maxsize=None)
    def up_to(s: int, i: int, cap: int, start: int, length: int) -> tuple[float, tuple]:
        best: tuple[float, tuple] = (INF, ())
        for d in range(0, cap + 1):
            candidate = soln(s, i, d, start, length)
            if candidate[0] < best[0]:
                best = candidate
        return best

    @lru_cache(maxsize=None)
    def fan(s: int, i: int, d: int, start: int, length: int) -> tuple[float, tuple]:
        # 구간을 d 개의 연속 부분으로 나누고 각 부분에 차수 1 부분트리
        if d == 1:
            return soln(s, i, 1, start, length)
        best: tuple[float, tuple] = (INF, ())
        for first in range(1, length - d + 2):
            rest_start = (start + first) % n
            for s1 in range(2, s):
                c1, e1 = soln(s1, i, 1, start, first)
                if c1 == INF:
                    continue
                c2, e2 = fan(s - s1 + 1, i, d - 1, rest_start, length - first)
                if c2 == INF:
                    continue
                if c1 + c2 < best[0]:
                    best = (c1 + c2, e1 + e2)
        return best

    best: tuple[float, tuple] = (INF, ())
    for i in range(n):
        for d in range(1, MAX_APEX_DEGREE + 1):
            candidate = soln(k, i, d, (i + 1) % n, n - 1)
            if candidate[0] < best[0]:
                best = candidate
    logger.debug("convex_kmst: %d memo entries", soln.cache_info().currsize + fan.cache_info().currsize)
    edges = [(order[p], order[q], w(p, q)) for p, q in best[1]]
    return KTreeSolution.from_edges(edges, "convex")


# ========== 구조 검사 ==========

def _segments_cross(p1, p2, q1, q2, tol: float) -> bool:
    """끝점을 공유하지 않는 두 선분의 진교차 여부"""
    d1 = _cross(q1, q2, p1)
    d2 = _cross(q1, q2, p2)
    d3 = _cross(p1, p2, q1)
    d4 = _cross(p1, p2, q2)
    return ((d1 > tol and d2 < -tol) or (d1 < -tol and d2 > tol)) and (
        (d3 > tol and d4 < -tol) or (d3 < -tol and d4 > tol)
    )


def crossing_pairs(sol: KTreeSolution, ps: PointSet2D) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """해의 간선 중 서로 교차하는 쌍"""
    tol = GEOM_TOL * _scale(ps) ** 2
    segments = [(u, v) for u, v, _ in sol.edges]
    found = []
    for a in range(len(segments)):
        for b in range(a + 1, len(segments)):
            (u1, v1), (u2, v2) = segments[a], segments[b]
            if {u1, v1} & {u2, v2}:
                continue
            if _segments_cross(ps.points[u1], ps.points[v1], ps.points[u2], ps.points[v2], tol):
                found.append((segments[a], segments[b]))
    return found


# ========== 원 위의 점 ==========

@dataclass(frozen=True)
class FittedCircle:
    center: tuple[float, float]
    radius: float


def fit_circle(ps: PointSet2D) -> FittedCircle:
    """점 0, 그로부터 가장 먼 점, 둘과 삼각형 넓이가 최대인 점의 외접원"""
    if ps.n < 3:
        raise ArgumentError("fitting a circle needs at least 3 points")
    coords = ps.coords
    a = coords[0]
    far = int(np.argmax(np.hypot(*(coords - a).T)))
    b = coords[far]
    areas = np.abs((b[0] - a[0]) * (coords[:, 1] - a[1]) - (b[1] - a[1]) * (coords[:, 0] - a[0]))
    third = int(np.argmax(areas))
    c = coords[third]
    denom = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if abs(denom) <= GEOM_TOL * _scale(ps) ** 2:
        raise ApplicabilityError("points are collinear, not concyclic; use convex_kmst or plane_kmst")
    sa, sb, sc = a @ a, b @ b, c @ c
    ux = (sa * (b[1] - c[1]) + sb * (c[1] - a[1]) + sc * (a[1] - b[1])) / denom
    uy = (sa * (c[0] - b[0]) + sb * (a[0] - c[0]) + sc * (b[0] - a[0])) / denom
    radius = float(math.hypot(a[0] - ux, a[1] - uy))
    return FittedCircle((float(ux), float(uy)), radius)


def circle_kmst(ps: PointSet2D, k: int) -> KTreeSolution:
    """
    한 원 위 점 집합의 정확한 kMST

    최적 트리는 원 순서대로 k개 점을 잇는 경로이므로
    (시작점, 고른 개수, 마지막 점) DP 로 구한다.
    지름의 양 끝인 점 쌍이 있으면 경고 후 결과에 'unverified' 표시.
    """
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ArgumentError(f"k must be a positive integer, got {k!r}")
    if ps.metric != "euclidean":
        raise ApplicabilityError("circle_kmst works in the Euclidean metric; use plane_kmst for rectilinear input")
    n = ps.n
    if k > n:
        raise InfeasibleError(f"point count {n} < k")
    if k == 1:
        return KTreeSolution.single_vertex(0, "circle")

    flags: tuple[str, ...] = ()
    if n >= 3:
        circle = fit_circle(ps)
        cx, cy = circle.center
        tol = GEOM_TOL * max(circle.radius, 1.0)
        radial = np.hypot(ps.coords[:, 0] - cx, ps.coords[:, 1] - cy)
        off = np.flatnonzero(np.abs(radial - circle.radius) > tol)
        if off.size:
            raise ApplicabilityError(f"points {off[:5].tolist()} are off the fitted circle; use convex_kmst")
        dist = ps.distance_matrix("euclidean")
        iu = np.triu_indices(n, 1)
        if np.any(np.abs(dist[iu] - 2.0 * circle.radius) <= tol):
            logger.warning("circle_kmst: a diametrically opposite pair is present; optimality is unverified")
            flags = ("unverified",)
        angles = np.arctan2(ps.coords[:, 1] - cy, ps.coords[:, 0] - cx)
        order = [int(x) for x in np.lexsort((np.arange(n), angles))]
    else:
        dist = ps.distance_matrix("euclidean")
        order = list(range(n))

    best = (INF, None, None)
    for start in range(n):
        # cost[c][p]: start 에서 시작해 c+1 개를 고르고 위치 p 에서 끝나는 최소 길이
        cost = np.full((k, n), INF)
        parent = np.full((k, n), -1, dtype=int)
        cost[0][0] = 0.0
        for c in range(1, k):
            for p in range(c, n):
                node = order[(start + p) % n]
                prev = cost[c - 1][:p] + np.array([dist[order[(start + q) % n], node] for q in range(p)])
                q = int(np.argmin(prev))
                if prev[q] < cost[c][p]:
                    cost[c][p] = prev[q]
                    parent[c][p] = q
        p = int(np.argmin(cost[k - 1]))
        if cost[k - 1][p] < best[0]:
            best = (float(cost[k - 1][p]), start, (parent, p))

    _, start, (parent, p) = best
    positions = [p]
    for c in range(k - 1, 0, -1):
        p = int(parent[c][p])
        positions.append(p)
    path = [order[(start + q) % n] for q in reversed(positions)]
    edges = [(a, b, float(dist[a, b])) for a, b in zip(path, path[1:])]
    return KTreeSolution.from_edges(edges, "circle", flags=flags)
