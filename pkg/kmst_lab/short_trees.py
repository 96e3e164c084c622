"""
짧은 트리 문제
- min_diameter_ktree: 최소 지름 k-트리 (정점 중심 / 간선 중심 후보)
- roof_curve / roof_sweep_edge: 간선 위 중심점 탐색 (지붕 곡선 스윕)
- evaluate_hu, gomory_hu: Hu 프레임워크 비용 계산과 cut tree
- min_comm_tree_*, min_diamcost_tree_*: 값 구조가 제한된 Hu 문제의 최적 신장 트리
"""

from __future__ import annotations

import heapq
import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

import networkx as nx
import numpy as np
from scipy.sparse.csgraph import dijkstra

from components.errors import ArgumentError, InfeasibleError, ValidationError
from components.utils import approx_equal
from config import REL_TOL
from graph_core import (
    Edge,
    HuInstance,
    KTreeSolution,
    WeightedGraph,
    all_pairs,
    tree_distances,
)

logger = logging.getLogger(__name__)

INF = math.inf


# ========== 최소 지름 k-트리 ==========

@dataclass(frozen=True)
class DiameterCandidate:
    """중심 후보 - 정점 중심은 edge 가 None, 간선 중심은 반경 쌍 (a, b)"""

    value: float
    center: tuple[int, ...]
    edge: Optional[Edge] = None
    radii: tuple[float, float] = (0.0, 0.0)

    def key(self) -> tuple:
        # 동률: 정점 후보 먼저, 그다음 사전식
        return (self.value, 0 if self.edge is None else 1, self.center, self.radii)


def vertex_candidate(dist: np.ndarray, v: int, k: int) -> Optional[DiameterCandidate]:
    """v 에서 k 번째로 가까운 거리 d_v (자기 자신 0 포함) → 후보 2·d_v"""
    row = np.sort(dist[v][np.isfinite(dist[v])])
    if row.size < k:
        return None
    radius = float(row[k - 1])
    return DiameterCandidate(2.0 * radius, (v,), None, (radius, radius))


def edge_candidate(dist: np.ndarray, edge: Edge, k: int) -> Optional[DiameterCandidate]:
    """
    간선 (i, j, w) 중심 후보

    i 쪽 반경 a 를 i 로부터의 거리값들 중에서 고르고, 나머지를 덮는 j 쪽 최소 반경 b 를 구한다.
    후보 값 = max(2a, 2b, a + b + w) - 중점이 간선 위에 있으면 a + b + w 와 같다.
    """
    i, j, w = edge
    from_i, from_j = dist[i], dist[j]
    best = None
    for a in np.unique(from_i[np.isfinite(from_i)]):
        covered = from_i <= a
        missing = k - int(covered.sum())
        if missing <= 0:
            b = 0.0
        else:
            rest = np.sort(from_j[~covered & np.isfinite(from_j)])
            if rest.size < missing:
                continue
            b = float(rest[missing - 1])
        a = float(a)
        value = max(2.0 * a, 2.0 * b, a + b + w)
        if best is None or value < best[0]:
            best = (value, a, b)
    if best is None:
        return None
    value, a, b = best
    return DiameterCandidate(value, (i, j), edge, (a, b))


def _check_k(g: WeightedGraph, k: int) -> None:
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ArgumentError(f"k must be a positive integer, got {k!r}")
    if g.vertex_count == 0:
        raise ArgumentError("graph has no vertices")
    largest = max(len(p) for p in g.components())
    if k > largest:
        raise InfeasibleError(f"component size {largest} < k")


def diameter_candidates(g: WeightedGraph, k: int) -> list[DiameterCandidate]:
    dist = all_pairs(g)
    found = [c for v in range(g.vertex_count) if (c := vertex_candidate(dist, v, k)) is not None]
    found += [c for e in g.edges if (c := edge_candidate(dist, e, k)) is not None]
    return found


def _truncate(edges: list[Edge], vertices: set[int], k: int, depth: dict[int, float]) -> list[Edge]:
    """깊이(중심에서 먼 정도)가 큰 잎부터 제거 (동률: 큰 정점 번호)"""
    incident: dict[int, set] = {v: set() for v in vertices}
    for e in edges:
        incident[e[0]].add(e)
        incident[e[1]].add(e)
    heap = [(-depth[v], -v) for v in vertices if len(incident[v]) == 1]
    heapq.heapify(heap)
    kept = set(edges)
    alive = set(vertices)
    while len(alive) > k and heap:
        _, neg_v = heapq.heappop(heap)
        v = -neg_v
        if v not in alive or len(incident[v]) != 1:
            continue
        (edge,) = incident[v]
        other = edge[0] if edge[1] == v else edge[1]
        incident[other].discard(edge)
        kept.discard(edge)
        alive.discard(v)
        if len(incident[other]) == 1:
            heapq.heappush(heap, (-depth[other], -other))
    return sorted(kept)


def split_two_centers(
    dist_i: np.ndarray,
    dist_j: np.ndarray,
    a: float,
    b: float,
) -> tuple[list[int], list[int]]:
    """
    두 공 ball(i, a) ∪ ball(j, b) 의 정점을 두 쪽으로 분할

    여유(slack) a - d(i, x) 와 b - d(j, x) 를 비교해 큰 쪽으로 보낸다 (동률: i 쪽).
    각 쪽은 해당 중심의 최단 경로 트리에서 부모에 대해 닫혀 있다.
    """
    side_i, side_j = [], []
    for x in range(len(dist_i)):
        in_i = dist_i[x] <= a
        in_j = dist_j[x] <= b
        if not (in_i or in_j):
            continue
        if in_i and (not in_j or a - dist_i[x] >= b - dist_j[x]):
            side_i.append(x)
        else:
            side_j.append(x)
    return side_i, side_j


def _witness(g: WeightedGraph, best: DiameterCandidate, k: int) -> KTreeSolution:
    if best.edge is None:
        (v,) = best.center
        dist, pred = dijkstra(g.csgraph, directed=False, indices=v, return_predecessors=True)
        radius = best.radii[0]
        ball = {x for x in range(g.vertex_count) if dist[x] <= radius}
        edges = [
            (min(x, int(pred[x])), max(x, int(pred[x])), g.weight(x, int(pred[x])))
            for x in ball if x != v
        ]
        depth = {x: float(dist[x]) for x in ball}
        return KTreeSolution.from_edges(_truncate(edges, ball, k, depth), "min-diameter")

    i, j, w = best.edge
    a, b = best.radii
    dist, pred = dijkstra(g.csgraph, directed=False, indices=[i, j], return_predecessors=True)
    side_i, side_j = split_two_centers(dist[0], dist[1], a, b)
    edges = []
    depth = {}
    for row, side, radius in ((0, side_i, a), (1, side_j, b)):
        root = (i, j)[row]
        for x in side:
            depth[x] = float(dist[row][x]) - radius
            if x == root:
                continue
            p = int(pred[row][x])
            edges.append((min(x, p), max(x, p), g.weight(x, p)))
    if side_i and side_j:
        edges.append((i, j, w))
    vertices = set(side_i) | set(side_j)
    return KTreeSolution.from_edges(_truncate(edges, vertices, k, depth), "min-diameter")


def min_diameter_ktree(g: WeightedGraph, k: int) -> tuple[KTreeSolution, float]:
    """
    최소 지름 k-트리

    Args:
        g: 입력 그래프
        k: 트리 정점 수

    Returns:
        (증거 트리, 최소 지름) - 트리의 실제 지름은 보고값 이하
    """
    _check_k(g, k)
    if k == 1:
        return KTreeSolution.single_vertex(0, "min-diameter"), 0.0
    candidates = diameter_candidates(g, k)
    best = min(candidates, key=DiameterCandidate.key)
    logger.debug("min_diameter_ktree: %d candidates, best %s", len(candidates), best)
    tree = _witness(g, best, k)
    return tree, best.value


def min_diameter_spanning_tree(g: WeightedGraph) -> tuple[KTreeSolution, float]:
    """최소 지름 신장 트리 (k = n)"""
    if g.vertex_count and len(g.components()) != 1:
        raise InfeasibleError("graph is disconnected")
    return min_diameter_ktree(g, g.vertex_count)


# ========== 지붕 곡선 ==========

@dataclass(frozen=True)
class RoofCurve:
    """간선 e = (u, v, w) 위 점 ℓ 에서 노드 x 까지의 최단 거리 f(ℓ)"""

    node: int
    edge: Edge
    to_u: float
    to_v: float

    @property
    def breakpoint(self) -> float:
        w = self.edge[2]
        if math.isinf(self.to_u) or math.isinf(self.to_v):
            return 0.0 if math.isinf(self.to_u) else w
        return min(max((w + self.to_v - self.to_u) / 2.0, 0.0), w)

    def value(self, ell: float) -> float:
        w = self.edge[2]
        return min(ell + self.to_u, w - ell + self.to_v)

    __call__ = value


def roof_curve(x: int, e: Edge, dists: np.ndarray) -> RoofCurve:
    u, v, _ = e
    return RoofCurve(x, e, float(dists[x, u]), float(dists[x, v]))


def roof_sweep_edge(e: Edge, curves: Sequence[RoofCurve], k: int) -> tuple[float, float]:
    """
    간선 위에서 k 번째로 낮은 지붕 곡선 값이 최소인 지점

    k 번째 수준은 직선 교차점 사이에서 선형이므로 사건점
    (양 끝, 각 곡선의 꺾임점, 서로 다른 곡선 직선들의 교차점) 만 평가한다.

    Returns:
        (ℓ, 반경) - 동률이면 가장 작은 ℓ
    """
    if k < 1 or k > len(curves):
        raise ArgumentError(f"k must lie in 1..{len(curves)}, got {k}")
    w = e[2]
    up = np.array([c.to_u for c in curves])
    down = np.array([c.to_v for c in curves])
    # ℓ + up_x = w - ℓ + down_y 의 해
    with np.errstate(invalid="ignore"):
        crossings = (w + down[None, :] - up[:, None]) / 2.0
    events = np.concatenate(([0.0, float(w)], crossings.ravel()))
    events = events[np.isfinite(events)]
    events = np.unique(np.clip(events, 0.0, w))
    levels = np.minimum(events[:, None] + up[None, :], w - events[:, None] + down[None, :])
    kth = np.partition(levels, k - 1, axis=1)[:, k - 1]
    best = int(np.argmin(kth))
    return float(events[best]), float(kth[best])


def roof_diameter(g: WeightedGraph, k: int) -> float:
    """모든 간선 스윕 반경과 정점 반경 중 최소의 두 배"""
    _check_k(g, k)
    if k == 1:
        return 0.0
    dist = all_pairs(g)
    best = INF
    for v in range(g.vertex_count):
        found = vertex_candidate(dist, v, k)
        if found is not None:
            best = min(best, found.value)
    for e in g.edges:
        curves = [roof_curve(x, e, dist) for x in range(g.vertex_count)]
        _, radius = roof_sweep_edge(e, curves, k)
        best = min(best, 2.0 * radius)
    return best


# ========== Hu 프레임워크 ==========

def tree_distance_matrix(tree: KTreeSolution, n: int) -> np.ndarray:
    adj: dict[int, list[tuple[int, float]]] = {v: [] for v in tree.vertices}
    for u, v, w in tree.edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    matrix = np.full((n, n), INF)
    for s in tree.vertices:
        for t, value in tree_distances(adj, s).items():
            matrix[s, t] = value
    return matrix


def evaluate_hu(tree: KTreeSolution, inst: HuInstance) -> tuple[float, float]:
    """(통신 비용 Σ r_ij·dist_T(i,j), 지름 비용 max r_ij·dist_T(i,j))"""
    if tree.vertices != frozenset(range(inst.n)):
        raise ArgumentError(f"tree spans {tree.size} of the instance's {inst.n} vertices")
    return evaluate_hu_ktree(tree, inst)


def evaluate_hu_ktree(tree: KTreeSolution, inst: HuInstance) -> tuple[float, float]:
    """트리 정점 쌍만 합산하는 evaluate_hu (k-트리용)"""
    for u, v, w in tree.edges:
        if not approx_equal(w, float(inst.d[u, v]), rel_tol=REL_TOL):
            raise ValidationError(f"tree edge ({u}, {v}) has weight {w}, d says {inst.d[u, v]}")
    if tree.size < 2:
        return 0.0, 0.0
    members = np.array(sorted(tree.vertices))
    distances = tree_distance_matrix(tree, inst.n)[np.ix_(members, members)]
    iu = np.triu_indices(len(members), 1)
    products = inst.r[np.ix_(members, members)][iu] * distances[iu]
    return float(math.fsum(products)), float(products.max())


def hu_objective(tree: KTreeSolution, inst: HuInstance, objective: str) -> float:
    comm, diamcost = evaluate_hu(tree, inst)
    if objective == "comm":
        return comm
    if objective == "diamcost":
        return diamcost
    raise ArgumentError(f"objective must be comm or diamcost, got {objective!r}")


@dataclass(frozen=True)
class CutTree:
    """Gomory-Hu cut tree - 두 정점 사이 최소 컷 = 트리 경로 위 최소 용량"""

    n: int
    edges: tuple[Edge, ...]

    def path_capacities(self, i: int, j: int) -> list[float]:
        adj: dict[int, list[tuple[int, float]]] = {v: [] for v in range(self.n)}
        for u, v, c in self.edges:
            adj[u].append((v, c))
            adj[v].append((u, c))
        parent: dict[int, tuple[int, float]] = {i: (-1, INF)}
        queue = deque([i])
        while queue:
            x = queue.popleft()
            for y, c in adj[x]:
                if y not in parent:
                    parent[y] = (x, c)
                    queue.append(y)
        capacities = []
        x = j
        while x != i:
            x, c = parent[x]
            capacities.append(c)
        return capacities

    def min_cut(self, i: int, j: int) -> float:
        if i == j:
            raise ArgumentError("min cut needs two distinct vertices")
        return min(self.path_capacities(i, j))


def gomory_hu(capacities: WeightedGraph) -> CutTree:
    """
    Gusfield 방식 cut tree (그래프 축약 없이 n-1 번의 최소 컷)

    비연결 입력이면 요소 사이가 용량 0 간선으로 이어진다.
    """
    n = capacities.vertex_count
    if n == 0:
        raise ArgumentError("capacity graph has no vertices")
    graph = nx.Graph()
    graph.add_nodes_from(range(n))
    for u, v, c in capacities.edges:
        graph.add_edge(u, v, capacity=c)

    root = 0
    pred: list[Optional[int]] = [root] * n
    pred[root] = None
    weight = [0.0] * n

    for node in range(1, n):
        parent = pred[node]
        cut_value, (source_side, _) = nx.minimum_cut(graph, node, parent)
        weight[node] = float(cut_value)
        # 같은 부모를 가진 형제 중 node 쪽에 있는 것은 node 의 자식이 됨
        for other in source_side:
            if other != node and pred[other] == parent:
                pred[other] = node
        grand = pred[parent]
        if grand is not None and grand in source_side:
            pred[node] = grand
            pred[parent] = node
            weight[node] = weight[parent]
            weight[parent] = float(cut_value)

    edges = tuple(sorted((min(v, p), max(v, p), weight[v]) for v, p in enumerate(pred) if p is not None))
    return CutTree(n, edges)


def _two_valued(values: tuple[float, ...], name: str, limit: int = 2) -> None:
    if len(values) > limit:
        raise ArgumentError(f"{name} takes {len(values)} distinct values, at most {limit} allowed")


def _bfs_edges(g: WeightedGraph, root: int, allowed: set[int]) -> list[Edge]:
    seen = {root}
    queue = deque([root])
    edges = []
    while queue:
        x = queue.popleft()
        for y, w in g.adjacency[x]:
            if y in allowed and y not in seen:
                seen.add(y)
                edges.append((min(x, y), max(x, y), w))
                queue.append(y)
    return edges


def _supernode_cut_tree(inst: HuInstance, solver_tag: str) -> KTreeSolution:
    """d = 0 요소를 초정점으로 축약 → 합산 요구량으로 cut tree → 초정점 내부는 0 간선 BFS 트리"""
    n = inst.n
    full = inst.d_graph()
    zero = WeightedGraph(n, tuple(e for e in full.edges if e[2] == 0.0))
    groups = zero.components()
    if len(groups) == 1:
        edges = _bfs_edges(zero, 0, set(range(n)))
        return KTreeSolution.from_edges(edges, solver_tag, vertices=range(n))

    members = [np.array(group) for group in groups]
    requirement = []
    for a in range(len(groups)):
        for b in range(a + 1, len(groups)):
            total = float(inst.r[np.ix_(members[a], members[b])].sum())
            requirement.append((a, b, total))
    cut_tree = gomory_hu(WeightedGraph(len(groups), tuple(requirement)))

    edges: list[Edge] = []
    for a, b, _ in cut_tree.edges:
        u, v = groups[a][0], groups[b][0]
        edges.append((min(u, v), max(u, v), float(inst.d[u, v])))
    for group in groups:
        edges.extend(_bfs_edges(zero, group[0], set(group)))
    logger.debug("%s: %d supernodes", solver_tag, len(groups))
    return KTreeSolution.from_edges(edges, solver_tag, vertices=range(n))


def min_comm_tree_two_r_zero_c(inst: HuInstance) -> KTreeSolution:
    """d ∈ {0, c}, r ∈ {a, b} 인 최소 통신 비용 신장 트리"""
    d_values = inst.pair_values("d")
    positive = [x for x in d_values if x > 0]
    if len(positive) > 1:
        raise ArgumentError(f"d must take values in {{0, c}}, found {d_values}")
    _two_valued(inst.pair_values("r"), "r")
    return _supernode_cut_tree(inst, "min-comm")


def min_comm_tree_uniform_d(inst: HuInstance) -> KTreeSolution:
    """모든 d 가 같은 c (> 0) 이고 r 은 임의인 최소 통신 비용 신장 트리 (cut tree 자체)"""
    d_values = inst.pair_values("d")
    if len(d_values) > 1 or (d_values and d_values[0] <= 0):
        raise ArgumentError(f"d must be one positive value, found {d_values}")
    return _supernode_cut_tree(inst, "min-comm")


def _star(inst: HuInstance, center: int, solver_tag: str) -> KTreeSolution:
    edges = [(min(center, v), max(center, v), float(inst.d[center, v])) for v in range(inst.n) if v != center]
    return KTreeSolution.from_edges(edges, solver_tag, vertices=range(inst.n))


def _eccentricities(adj: dict[int, list[int]], vertices: Sequence[int]) -> dict[int, int]:
    """홉 거리 이심률 (BFS)"""
    result = {}
    for start in vertices:
        seen = {start: 0}
        queue = deque([start])
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if y not in seen:
                    seen[y] = seen[x] + 1
                    queue.append(y)
        result[start] = max(seen.values())
    return result


def min_diamcost_tree_uniform_d_two_r(inst: HuInstance) -> KTreeSolution:
    """
    d 가 모두 c, r ∈ {a, b} (a > b) 인 최소 지름 비용 신장 트리

    a 요구 쌍이 사이클을 이루면 정점 0 중심 스타 (비용 2ac).
    아니면 a-숲의 각 트리 중심을 가장 지름이 큰 트리의 중심에 스타로 잇고,
    고립 정점도 그 중심에 붙인다. 그 비용이 2ac 미만일 때만 채택.
    """
    n = inst.n
    d_values = inst.pair_values("d")
    if len(d_values) > 1 or (d_values and d_values[0] <= 0):
        raise ArgumentError(f"d must be one positive value, found {d_values}")
    r_values = inst.pair_values("r")
    _two_valued(r_values, "r")
    if n <= 2 or len(r_values) < 2:
        return _star(inst, 0, "min-diamcost")

    a = r_values[1]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if inst.r[i, j] == a]
    forest = WeightedGraph(n, tuple((i, j, 1.0) for i, j in pairs))
    trees = [t for t in forest.components() if len(t) > 1]
    if len(pairs) > sum(len(t) - 1 for t in trees):
        return _star(inst, 0, "min-diamcost")

    adj = {v: [y for y, _ in forest.adjacency[v]] for v in range(n)}
    summaries = []
    for t in trees:
        ecc = _eccentricities(adj, t)
        center = min(t, key=lambda v: (ecc[v], v))
        summaries.append((max(ecc.values()), center))
    _, root = min(summaries, key=lambda item: (-item[0], item[1]))

    c = float(d_values[0])
    edges: list[Edge] = [(i, j, c) for i, j in pairs]
    for _, center in summaries:
        if center != root:
            edges.append((min(center, root), max(center, root), c))
    in_forest = {v for t in trees for v in t}
    for v in range(n):
        if v not in in_forest:
            edges.append((min(v, root), max(v, root), c))
    built = KTreeSolution.from_edges(edges, "min-diamcost", vertices=range(n))
    _, cost = evaluate_hu(built, inst)
    if cost < 2.0 * a * c:
        return built
    return _star(inst, 0, "min-diamcost")


def min_diamcost_tree_uniform_r(inst: HuInstance) -> KTreeSolution:
    """모든 r 이 같은 a 이고 d 는 임의인 최소 지름 비용 신장 트리 (= 최소 지름 신장 트리)"""
    r_values = inst.pair_values("r")
    if len(r_values) > 1:
        raise ArgumentError(f"r must be one value, found {r_values}")
    tree, _ = min_diameter_spanning_tree(inst.d_graph())
    return tree.retag("min-diamcost")
