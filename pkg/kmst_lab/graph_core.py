"""
그래프 / 트리 / 기하 공통 기반 모듈
- WeightedGraph, KTreeSolution, PointSet2D, HuInstance
- 최단 경로 (scipy csgraph Dijkstra), MST (Kruskal), metric closure
- 해 검증 (check_solution) 및 트리 지표 (tree_metrics)
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional, Sequence

import numpy as np
from scipy.cluster.hierarchy import DisjointSet
from scipy.sparse.csgraph import connected_components, csgraph_from_dense, dijkstra
from scipy.spatial.distance import cdist

from components.errors import ArgumentError, InfeasibleError, ValidationError
from components.utils import approx_equal
from config import REL_TOL

logger = logging.getLogger(__name__)

INF = math.inf

Edge = tuple[int, int, float]

METRICS = ("euclidean", "rectilinear")
_CDIST_METRIC = {"euclidean": "euclidean", "rectilinear": "cityblock"}


def _normalize_edge(u: int, v: int, w: float) -> Edge:
    return (u, v, float(w)) if u < v else (v, u, float(w))


def edge_pairs(edges: Iterable[Edge]) -> tuple[tuple[int, int], ...]:
    """정렬된 (u, v) 쌍 목록 - 동률 처리용 사전식 키"""
    return tuple(sorted((min(u, v), max(u, v)) for u, v, _ in edges))


# ========== WeightedGraph ==========

@dataclass(frozen=True)
class WeightedGraph:
    """무방향 음이 아닌 가중치 단순 그래프"""

    vertex_count: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        n = self.vertex_count
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise ArgumentError(f"vertex_count must be a nonnegative integer, got {n!r}")
        seen = set()
        normalized = []
        for raw in self.edges:
            if len(raw) != 3:
                raise ValidationError(f"edge must be (u, v, w), got {raw!r}")
            u, v, w = int(raw[0]), int(raw[1]), float(raw[2])
            if not (0 <= u < n and 0 <= v < n):
                raise ValidationError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            if not math.isfinite(w) or w < 0:
                raise ValidationError(f"edge ({u}, {v}) has invalid weight {w!r}")
            edge = _normalize_edge(u, v, w)
            if edge[:2] in seen:
                raise ValidationError(f"parallel edge ({edge[0]}, {edge[1]})")
            seen.add(edge[:2])
            normalized.append(edge)
        object.__setattr__(self, "vertex_count", int(n))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence], keep_min_parallel: bool = False) -> "WeightedGraph":
        """간선 목록으로 생성 - keep_min_parallel이면 병렬 간선 중 최소 가중치만 유지"""
        edges = list(edges)
        if keep_min_parallel:
            best: dict[tuple[int, int], float] = {}
            for u, v, w in edges:
                key = (min(int(u), int(v)), max(int(u), int(v)))
                if key not in best or float(w) < best[key]:
                    best[key] = float(w)
            edges = [(u, v, w) for (u, v), w in best.items()]
        return cls(n, tuple(edges))

    @property
    def n(self) -> int:
        return self.vertex_count

    @cached_property
    def _weights(self) -> dict[tuple[int, int], float]:
        return {(u, v): w for u, v, w in self.edges}

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, float], ...], ...]:
        """정점별 (이웃, 가중치) 목록 - 이웃 번호 오름차순"""
        adj: list[list[tuple[int, float]]] = [[] for _ in range(self.vertex_count)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        return tuple(tuple(sorted(row)) for row in adj)

    def weight(self, u: int, v: int) -> Optional[float]:
        return self._weights.get((min(u, v), max(u, v)))

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._weights

    def distinct_weights(self) -> tuple[float, ...]:
        return tuple(sorted({w for _, _, w in self.edges}))

    def to_dense(self) -> np.ndarray:
        """인접 행렬 - 간선 없음은 inf"""
        dense = np.full((self.vertex_count, self.vertex_count), INF)
        for u, v, w in self.edges:
            dense[u, v] = w
            dense[v, u] = w
        return dense

    @cached_property
    def csgraph(self):
        # null_value=inf 로 0 가중치 간선을 보존
        return csgraph_from_dense(self.to_dense(), null_value=np.inf)

    def components(self) -> list[tuple[int, ...]]:
        """연결 요소 목록 - 각 요소는 정렬된 정점 튜플, 최소 정점 순"""
        if self.vertex_count == 0:
            return []
        _, labels = connected_components(self.csgraph, directed=False)
        groups: dict[int, list[int]] = {}
        for vertex, label in enumerate(labels):
            groups.setdefault(int(label), []).append(vertex)
        return sorted((tuple(g) for g in groups.values()), key=lambda g: g[0])

    def induced_edges(self, vertices: Iterable[int]) -> list[Edge]:
        chosen = set(vertices)
        return [e for e in self.edges if e[0] in chosen and e[1] in chosen]

    def check_vertex(self, v: int, name: str = "vertex") -> int:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.vertex_count:
            raise ArgumentError(f"{name} {v!r} is not a vertex of a {self.vertex_count}-vertex graph")
        return int(v)


# ========== KTreeSolution ==========

@dataclass(frozen=True)
class KTreeSolution:
    """솔버 공통 출력 - 트리 정점/간선, 비용, 지름, 출처 태그"""

    vertices: frozenset
    edges: tuple[Edge, ...]
    cost: float
    diameter: float
    solver_tag: str
    flags: tuple[str, ...] = field(default=())

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[Sequence],
        solver_tag: str,
        vertices: Optional[Iterable[int]] = None,
        flags: Sequence[str] = (),
    ) -> "KTreeSolution":
        """간선 목록으로 해 생성 (트리 검증 + 비용/지름 계산)"""
        normalized = tuple(sorted(_normalize_edge(int(u), int(v), w) for u, v, w in edges))
        if vertices is None:
            vertex_set = frozenset(x for e in normalized for x in e[:2])
        else:
            vertex_set = frozenset(int(v) for v in vertices)
        if not vertex_set:
            raise ValidationError("a tree needs at least one vertex")
        diameter = _tree_diameter(vertex_set, normalized)
        cost = math.fsum(w for _, _, w in normalized)
        return cls(vertex_set, normalized, cost, diameter, solver_tag, tuple(flags))

    @classmethod
    def single_vertex(cls, vertex: int, solver_tag: str) -> "KTreeSolution":
        return cls(frozenset([int(vertex)]), (), 0.0, 0.0, solver_tag)

    @property
    def size(self) -> int:
        return len(self.vertices)

    def sort_key(self) -> tuple:
        """전역 동률 규칙: (비용, 정렬된 간선 목록)"""
        return (self.cost, edge_pairs(self.edges))

    def retag(self, solver_tag: str) -> "KTreeSolution":
        return KTreeSolution(self.vertices, self.edges, self.cost, self.diameter, solver_tag, self.flags)


def _tree_adjacency(vertices: frozenset, edges: Sequence[Edge]) -> dict[int, list[tuple[int, float]]]:
    """트리 검증 후 인접 목록 반환 - 사이클/비연결이면 ValidationError"""
    if len(edges) != len(vertices) - 1:
        raise ValidationError(f"{len(edges)} edges cannot form a tree on {len(vertices)} vertices")
    order = sorted(vertices)
    index = {v: i for i, v in enumerate(order)}
    dsu = DisjointSet(range(len(order)))
    adj: dict[int, list[tuple[int, float]]] = {v: [] for v in order}
    for u, v, w in edges:
        if u not in index or v not in index:
            raise ValidationError(f"edge ({u}, {v}) leaves the tree's vertex set")
        if not dsu.merge(index[u], index[v]):
            raise ValidationError(f"edge ({u}, {v}) closes a cycle")
        adj[u].append((v, w))
        adj[v].append((u, w))
    return adj


def tree_distances(adj: dict[int, list[tuple[int, float]]], source: int) -> dict[int, float]:
    """트리 위 가중 거리 (반복 DFS)"""
    dist = {source: 0.0}
    stack = [source]
    while stack:
        x = stack.pop()
        for y, w in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + w
                stack.append(y)
    return dist


def _tree_diameter(vertices: frozenset, edges: Sequence[Edge]) -> float:
    adj = _tree_adjacency(vertices, edges)
    start = min(vertices)
    first = tree_distances(adj, start)
    # 음이 아닌 가중치 트리에서는 두 번의 탐색으로 지름을 얻는다
    far = max(sorted(first), key=lambda v: first[v])
    second = tree_distances(adj, far)
    return max(second.values())


def tree_metrics(t: KTreeSolution) -> tuple[float, float, tuple[int, ...]]:
    """트리 지표 (비용, 지름, 내림차순 차수열)"""
    adj = _tree_adjacency(t.vertices, t.edges)
    cost = math.fsum(w for _, _, w in t.edges)
    diameter = _tree_diameter(t.vertices, t.edges) if t.edges else 0.0
    degrees = tuple(sorted((len(adj[v]) for v in adj), reverse=True))
    return cost, diameter, degrees


def degree_map(t: KTreeSolution) -> dict[int, int]:
    degrees = {v: 0 for v in t.vertices}
    for u, v, _ in t.edges:
        degrees[u] += 1
        degrees[v] += 1
    return degrees


def check_solution(sol: KTreeSolution, g: WeightedGraph, k: Optional[int] = None) -> None:
    """KTreeSolution 불변식 검사 - 위반 시 ValidationError"""
    cost, diameter, _ = tree_metrics(sol)
    for u, v, w in sol.edges:
        original = g.weight(u, v)
        if original is None:
            raise ValidationError(f"edge ({u}, {v}) is not in the source graph")
        if not approx_equal(original, w, rel_tol=REL_TOL):
            raise ValidationError(f"edge ({u}, {v}) has weight {w}, graph says {original}")
    if any(not 0 <= v < g.vertex_count for v in sol.vertices):
        raise ValidationError("tree vertex outside the source graph")
    if not approx_equal(cost, sol.cost, rel_tol=REL_TOL):
        raise ValidationError(f"reported cost {sol.cost} differs from edge sum {cost}")
    if not approx_equal(diameter, sol.diameter, rel_tol=REL_TOL):
        raise ValidationError(f"reported diameter {sol.diameter} differs from tree diameter {diameter}")
    if k is not None and sol.size != k:
        raise ValidationError(f"tree has {sol.size} vertices, expected {k}")


# ========== 최단 경로 / MST ==========

def sssp(g: WeightedGraph, source: int) -> list[tuple[float, Optional[int]]]:
    """단일 출발점 최단 경로 - (거리, 부모) 목록, 도달 불가는 (inf, None)"""
    source = g.check_vertex(source, "source")
    dist, pred = dijkstra(g.csgraph, directed=False, indices=source, return_predecessors=True)
    result = []
    for v in range(g.vertex_count):
        parent = int(pred[v])
        result.append((float(dist[v]), None if parent < 0 else parent))
    return result


def all_pairs(g: WeightedGraph) -> np.ndarray:
    """전체 쌍 최단 거리 행렬"""
    if g.vertex_count == 0:
        return np.zeros((0, 0))
    return np.asarray(dijkstra(g.csgraph, directed=False), dtype=float)


def kruskal(vertices: Iterable[int], edges: Iterable[Edge]) -> list[Edge]:
    """(w, u, v) 순 Kruskal - 최소 신장 숲의 간선"""
    dsu = DisjointSet(vertices)
    chosen = []
    ordered = sorted((_normalize_edge(a, b, w) for a, b, w in edges), key=lambda e: (e[2], e[0], e[1]))
    for u, v, w in ordered:
        if dsu.merge(u, v):
            chosen.append((u, v, w))
    return chosen


def mst(g: WeightedGraph) -> KTreeSolution:
    """연결 그래프의 최소 신장 트리 - 비연결이면 InfeasibleError"""
    if g.vertex_count == 0:
        raise ArgumentError("mst needs a nonempty graph")
    parts = g.components()
    if len(parts) > 1:
        sizes = ", ".join(str(len(p)) for p in parts)
        raise InfeasibleError(f"graph is disconnected (component sizes {sizes})")
    if g.vertex_count == 1:
        return KTreeSolution.single_vertex(0, "mst")
    return KTreeSolution.from_edges(kruskal(range(g.vertex_count), g.edges), "mst")


def mst_forest(g: WeightedGraph) -> list[KTreeSolution]:
    """연결 요소별 최소 신장 트리"""
    if g.vertex_count == 0:
        raise ArgumentError("mst needs a nonempty graph")
    chosen = kruskal(range(g.vertex_count), g.edges)
    forest = []
    for part in g.components():
        members = set(part)
        tree_edges = [e for e in chosen if e[0] in members]
        forest.append(KTreeSolution.from_edges(tree_edges, "mst", vertices=part))
    return forest


# ========== Metric closure ==========

@dataclass(frozen=True, eq=False)
class PathTable:
    """closure 간선을 원 그래프 최단 경로로 복원"""

    graph: WeightedGraph
    terminals: tuple[int, ...]
    predecessors: np.ndarray

    def expand(self, a: int, b: int) -> list[int]:
        """closure 정점 a → b 의 원 그래프 정점 경로"""
        source, target = self.terminals[a], self.terminals[b]
        row = self.predecessors[a]
        path = [target]
        while path[-1] != source:
            parent = int(row[path[-1]])
            if parent < 0:
                raise InfeasibleError(f"vertices {source} and {target} are disconnected")
            path.append(parent)
        path.reverse()
        return path

    def expand_edges(self, a: int, b: int) -> list[Edge]:
        path = self.expand(a, b)
        return [_normalize_edge(x, y, self.graph.weight(x, y)) for x, y in zip(path, path[1:])]


def metric_closure(g: WeightedGraph, subset: Optional[Iterable[int]] = None) -> tuple[WeightedGraph, PathTable]:
    """부분집합 위의 metric closure - 정점은 정렬된 subset 순서로 0..t-1 재번호"""
    if subset is None:
        terminals = tuple(range(g.vertex_count))
    else:
        terminals = tuple(sorted({g.check_vertex(v, "terminal") for v in subset}))
    if not terminals:
        raise ArgumentError("metric closure needs at least one vertex")
    dist, pred = dijkstra(g.csgraph, directed=False, indices=list(terminals), return_predecessors=True)
    dist = np.atleast_2d(dist)
    pred = np.atleast_2d(pred)
    edges = []
    for a in range(len(terminals)):
        for b in range(a + 1, len(terminals)):
            value = float(dist[a, terminals[b]])
            if math.isinf(value):
                raise InfeasibleError(f"vertices {terminals[a]} and {terminals[b]} are disconnected")
            edges.append((a, b, value))
    closure = WeightedGraph(len(terminals), tuple(edges))
    logger.debug("metric closure on %d vertices", len(terminals))
    return closure, PathTable(g, terminals, pred)


# ========== 평면 점 집합 ==========

@dataclass(frozen=True, eq=True)
class PointSet2D:
    """평면 점 집합 + 거리 종류 (euclidean / rectilinear)"""

    points: tuple[tuple[float, float], ...]
    metric: str = "euclidean"

    def __post_init__(self):
        if self.metric not in METRICS:
            raise ArgumentError(f"metric must be one of {METRICS}, got {self.metric!r}")
        cleaned = []
        for p in self.points:
            x, y = float(p[0]), float(p[1])
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValidationError(f"point {p!r} has a non-finite coordinate")
            cleaned.append((x, y))
        object.__setattr__(self, "points", tuple(cleaned))

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def coords(self) -> np.ndarray:
        return np.asarray(self.points, dtype=float).reshape(-1, 2)

    def distance_matrix(self, metric: Optional[str] = None) -> np.ndarray:
        metric = metric or self.metric
        if self.n == 0:
            return np.zeros((0, 0))
        return cdist(self.coords, self.coords, _CDIST_METRIC[metric])

    def distance(self, i: int, j: int, metric: Optional[str] = None) -> float:
        metric = metric or self.metric
        (x1, y1), (x2, y2) = self.points[i], self.points[j]
        if metric == "rectilinear":
            return abs(x1 - x2) + abs(y1 - y2)
        return math.hypot(x1 - x2, y1 - y2)

    def with_metric(self, metric: str) -> "PointSet2D":
        return PointSet2D(self.points, metric)

    def as_graph(self) -> WeightedGraph:
        """완전 그래프 (가중치 = 현재 metric 거리)"""
        dist = self.distance_matrix()
        edges = [(i, j, float(dist[i, j])) for i in range(self.n) for j in range(i + 1, self.n)]
        return WeightedGraph(self.n, tuple(edges))


def dense_prim(dist: np.ndarray) -> list[tuple[int, int]]:
    """완전 거리 행렬 위 Prim - 지역 인덱스 (부모, 자식) 쌍, argmin 최소 인덱스 우선"""
    m = dist.shape[0]
    if m <= 1:
        return []
    in_tree = np.zeros(m, dtype=bool)
    in_tree[0] = True
    best = dist[0].astype(float).copy()
    parent = np.zeros(m, dtype=int)
    pairs = []
    for _ in range(m - 1):
        candidates = np.where(in_tree, np.inf, best)
        j = int(np.argmin(candidates))
        pairs.append((int(parent[j]), j))
        in_tree[j] = True
        closer = (~in_tree) & (dist[j] < best)
        best[closer] = dist[j][closer]
        parent[closer] = j
    return pairs


def point_mst(ps: PointSet2D, indices: Sequence[int], solver_tag: str = "point-mst", metric: Optional[str] = None) -> KTreeSolution:
    """선택된 점들의 MST (ps.metric 또는 지정 metric)"""
    indices = [int(i) for i in indices]
    if not indices:
        raise ArgumentError("point_mst needs at least one point")
    sub = ps.coords[indices]
    dist = cdist(sub, sub, _CDIST_METRIC[metric or ps.metric])
    edges = [(indices[a], indices[b], float(dist[a, b])) for a, b in dense_prim(dist)]
    return KTreeSolution.from_edges(edges, solver_tag, vertices=indices)


def geometric_length(sol: KTreeSolution, ps: PointSet2D, metric: str) -> float:
    """해의 간선 길이 합을 다른 metric으로 재계산"""
    return math.fsum(ps.distance(u, v, metric) for u, v, _ in sol.edges)


# ========== Hu 인스턴스 ==========

def validate_distance_matrix(matrix, name: str = "matrix", allow_inf: bool = True) -> np.ndarray:
    """대칭 / 0 대각 / 음이 아닌 값 검사"""
    arr = np.array(matrix, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValidationError(f"{name} must be square, got shape {arr.shape}")
    if np.isnan(arr).any():
        raise ValidationError(f"{name} contains NaN")
    if not allow_inf and np.isinf(arr).any():
        raise ValidationError(f"{name} must be finite")
    if (arr < 0).any():
        raise ValidationError(f"{name} has negative entries")
    if not np.array_equal(arr, arr.T):
        raise ValidationError(f"{name} is not symmetric")
    if arr.size and np.any(np.diag(arr) != 0):
        raise ValidationError(f"{name} has a nonzero diagonal")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class HuInstance:
    """쌍별 거리 d_ij 와 요구량 r_ij"""

    d: np.ndarray
    r: np.ndarray

    def __post_init__(self):
        d = validate_distance_matrix(self.d, "d", allow_inf=False)
        r = validate_distance_matrix(self.r, "r", allow_inf=False)
        if d.shape != r.shape:
            raise ValidationError(f"d is {d.shape} but r is {r.shape}")
        object.__setattr__(self, "d", d)
        object.__setattr__(self, "r", r)

    @property
    def n(self) -> int:
        return int(self.d.shape[0])

    def __eq__(self, other):
        if not isinstance(other, HuInstance):
            return NotImplemented
        return np.array_equal(self.d, other.d) and np.array_equal(self.r, other.r)

    __hash__ = None

    def pair_values(self, matrix: str) -> tuple[float, ...]:
        """상삼각 값들의 서로 다른 값 (정렬)"""
        arr = self.d if matrix == "d" else self.r
        iu = np.triu_indices(self.n, 1)
        return tuple(sorted({float(x) for x in arr[iu]}))

    def d_graph(self) -> WeightedGraph:
        """d 값을 가중치로 하는 완전 그래프"""
        edges = [(i, j, float(self.d[i, j])) for i in range(self.n) for j in range(i + 1, self.n)]
        return WeightedGraph(self.n, tuple(edges))
