"""
일반 가중 그래프의 kMST 근사 (비용 ≤ 2√k · OPT)
- 병합(merge) 단계: 클러스터 사이 최소 간선으로 두 클러스터를 합침
- 수집(collect) 단계: 조건이 맞는 반복마다 루트 클러스터에서 ⌈√k⌉개 이하의 클러스터를 최단 경로로 연결
- k-Steiner: 터미널 metric closure 위에서 같은 알고리즘 실행 후 경로 복원
"""

from __future__ import annotations

import heapq
import logging
import math
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Optional, Sequence

import numpy as np
from scipy.sparse.csgraph import csgraph_from_dense, dijkstra

from components.errors import ArgumentError, InfeasibleError, MergeStall
from graph_core import (
    Edge,
    KTreeSolution,
    WeightedGraph,
    kruskal,
    metric_closure,
)

logger = logging.getLogger(__name__)

MergeHook = Callable[["ClusterState", Edge, "ClusterState"], None]


def ceil_sqrt(k: int) -> int:
    root = math.isqrt(k)
    return root if root * root == k else root + 1


@dataclass(frozen=True)
class ClusterState:
    """병합 단계 상태 - 클러스터 번호는 구성 정점 중 최소 번호"""

    partition: Mapping[int, int]
    cluster_sizes: Mapping[int, int]
    cluster_trees: Mapping[int, tuple[Edge, ...]]
    iteration: int = 0

    @classmethod
    def singletons(cls, vertices: Iterable[int]) -> "ClusterState":
        vertices = sorted(vertices)
        return cls(
            partition={v: v for v in vertices},
            cluster_sizes={v: 1 for v in vertices},
            cluster_trees={v: () for v in vertices},
        )

    @property
    def cluster_ids(self) -> list[int]:
        return sorted(self.cluster_sizes)

    def members(self, cluster: int) -> list[int]:
        return sorted(v for v, c in self.partition.items() if c == cluster)

    def largest(self) -> tuple[int, int]:
        """(크기, 클러스터 번호) - 크기 최대, 동률이면 번호 최소"""
        cluster = min(self.cluster_sizes, key=lambda c: (-self.cluster_sizes[c], c))
        return self.cluster_sizes[cluster], cluster

    def covering_prefix(self, k: int) -> Optional[int]:
        """크기 내림차순으로 합이 k 이상이 되는 최소 클러스터 수 j*"""
        total = 0
        for j, size in enumerate(sorted(self.cluster_sizes.values(), reverse=True), start=1):
            total += size
            if total >= k:
                return j
        return None


@dataclass(frozen=True)
class CollectOutcome:
    root_cluster: int
    radius: float
    solution: KTreeSolution


# ========== 병합 단계 ==========

def _min_inter_cluster_edge(state: ClusterState, g: WeightedGraph) -> Optional[Edge]:
    part = state.partition
    best = None
    for u, v, w in g.edges:
        if u not in part or v not in part or part[u] == part[v]:
            continue
        key = (w, u, v)
        if best is None or key < best:
            best = key
    if best is None:
        return None
    w, u, v = best
    return (u, v, w)


def merge_step(state: ClusterState, g: WeightedGraph) -> ClusterState:
    """클러스터 사이 최소 간선 (동률: 작은 끝점 쌍) 으로 두 클러스터 병합"""
    if len(state.cluster_sizes) < 2:
        raise MergeStall("only one cluster left")
    edge = _min_inter_cluster_edge(state, g)
    if edge is None:
        raise MergeStall(f"no inter-cluster edge among {len(state.cluster_sizes)} clusters")
    return _merge_along(state, edge)


def _merge_along(state: ClusterState, edge: Edge) -> ClusterState:
    u, v, _ = edge
    a, b = state.partition[u], state.partition[v]
    keep, gone = min(a, b), max(a, b)
    partition = {x: (keep if c == gone else c) for x, c in state.partition.items()}
    sizes = dict(state.cluster_sizes)
    sizes[keep] = sizes.pop(gone) + sizes[keep]
    trees = dict(state.cluster_trees)
    trees[keep] = tuple(sorted(trees[keep] + trees.pop(gone) + (edge,)))
    return ClusterState(partition, sizes, trees, state.iteration + 1)


# ========== 가지치기 ==========

def prune_to_size(tree_edges: Sequence[Edge], k: int, vertices: Optional[Iterable[int]] = None, solver_tag: str = "pruned") -> KTreeSolution:
    """가장 무거운 간선에 매달린 잎부터 (동률: 큰 정점 번호) 제거해 정확히 k 정점으로"""
    edges = [tuple(e) for e in tree_edges]
    vertex_set = set(vertices) if vertices is not None else {x for e in edges for x in e[:2]}
    if k < 1:
        raise ArgumentError(f"k must be positive, got {k}")
    if len(vertex_set) < k:
        raise ArgumentError(f"tree has {len(vertex_set)} vertices, cannot prune to {k}")

    incident: dict[int, dict[int, float]] = {v: {} for v in vertex_set}
    for u, v, w in edges:
        incident[u][v] = w
        incident[v][u] = w

    heap = []
    for v in vertex_set:
        if len(incident[v]) == 1:
            (w,) = incident[v].values()
            heapq.heappush(heap, (-w, -v))

    remaining = len(vertex_set)
    while remaining > k and heap:
        _, neg_v = heapq.heappop(heap)
        v = -neg_v
        if v not in vertex_set or len(incident[v]) != 1:
            continue
        (neighbor,) = incident[v]
        del incident[neighbor][v]
        del incident[v]
        vertex_set.discard(v)
        remaining -= 1
        if len(incident[neighbor]) == 1:
            (w,) = incident[neighbor].values()
            heapq.heappush(heap, (-w, -neighbor))

    kept = [(u, v, w) for u, v, w in edges if u in vertex_set and v in vertex_set]
    return KTreeSolution.from_edges(kept, solver_tag, vertices=vertex_set)


# ========== 수집 단계 ==========

def _auxiliary_graph(state: ClusterState, g: WeightedGraph) -> tuple[list[int], np.ndarray, dict[tuple[int, int], Edge]]:
    """클러스터 그래프 G(VS, E') - 클러스터 쌍마다 최소 가중 실제 간선"""
    clusters = state.cluster_ids
    index = {c: i for i, c in enumerate(clusters)}
    part = state.partition
    best: dict[tuple[int, int], tuple[float, int, int]] = {}
    for u, v, w in g.edges:
        if u not in part or v not in part:
            continue
        a, b = index[part[u]], index[part[v]]
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key not in best or (w, u, v) < best[key]:
            best[key] = (w, u, v)
    dense = np.full((len(clusters), len(clusters)), np.inf)
    links = {}
    for (a, b), (w, u, v) in best.items():
        dense[a, b] = dense[b, a] = w
        links[(a, b)] = links[(b, a)] = (u, v, w)
    return clusters, dense, links


def _radius_for_root(distances: np.ndarray, sizes: list[int], budget: int, k: int) -> Optional[tuple[float, list[int]]]:
    """반경을 늘려가며 가장 큰 budget개 클러스터 합이 k 이상이 되는 최소 반경"""
    order = sorted((d, i) for i, d in enumerate(distances) if np.isfinite(d))
    inside: list[tuple[int, float, int]] = []
    pos = 0
    while pos < len(order):
        radius = order[pos][0]
        while pos < len(order) and order[pos][0] == radius:
            d, i = order[pos]
            inside.append((-sizes[i], d, i))
            pos += 1
        top = heapq.nsmallest(budget, inside)
        if -sum(s for s, _, _ in top) >= k:
            return float(radius), [i for _, _, i in top]
    return None


def collect_phase(state: ClusterState, g: WeightedGraph, k: int) -> Optional[CollectOutcome]:
    """
    수집 단계 (조건 불충족 시 None)

    조건: (i) 가장 큰 ⌈√k⌉개 이하의 클러스터 크기 합이 k 이상
          (ii) 크기가 k 이상인 클러스터가 없음
    """
    budget = ceil_sqrt(k)
    if state.largest()[0] >= k:
        return None
    prefix = state.covering_prefix(k)
    if prefix is None or prefix > budget:
        return None

    clusters, dense, links = _auxiliary_graph(state, g)
    sizes = [state.cluster_sizes[c] for c in clusters]
    if len(clusters) == 1:
        return None
    dist, pred = dijkstra(csgraph_from_dense(dense, null_value=np.inf), directed=False, return_predecessors=True)

    best = None
    for root in range(len(clusters)):
        found = _radius_for_root(dist[root], sizes, budget, k)
        if found is None:
            continue
        radius, chosen = found
        if best is None or (radius, clusters[root]) < (best[0], clusters[best[1]]):
            best = (radius, root, chosen)
    if best is None:
        return None

    radius, root, chosen = best
    used = {root}
    connectors = []
    for target in chosen:
        x = target
        while x != root and x not in used:
            used.add(x)
            parent = int(pred[root, x])
            connectors.append(links[(parent, x)])
            x = parent
        used.add(target)
    tree_edges = list(dict.fromkeys(connectors))
    vertices = []
    for i in sorted(used):
        tree_edges.extend(state.cluster_trees[clusters[i]])
        vertices.extend(state.members(clusters[i]))
    solution = prune_to_size(tree_edges, k, vertices=vertices, solver_tag="collect")
    logger.debug(
        "collect at iteration %d: root %d radius %g clusters %d",
        state.iteration, clusters[root], radius, len(used),
    )
    return CollectOutcome(clusters[root], radius, solution)


# ========== 전체 알고리즘 ==========

def _run_component(g: WeightedGraph, vertices: Sequence[int], k: int, on_merge: Optional[MergeHook]) -> KTreeSolution:
    state = ClusterState.singletons(vertices)
    candidates: list[KTreeSolution] = []
    while True:
        outcome = collect_phase(state, g, k)
        if outcome is not None:
            candidates.append(outcome.solution)
        size, cluster = state.largest()
        if size >= k:
            candidates.append(prune_to_size(state.cluster_trees[cluster], k, vertices=state.members(cluster), solver_tag="msol"))
            break
        edge = _min_inter_cluster_edge(state, g)
        if edge is None:
            raise MergeStall(f"component stalled with {len(state.cluster_sizes)} clusters")
        after = _merge_along(state, edge)
        if on_merge is not None:
            on_merge(state, edge, after)
        state = after
    logger.debug("component of %d vertices: %d candidate trees", len(vertices), len(candidates))
    return min(candidates, key=KTreeSolution.sort_key)


def merge_collect(g: WeightedGraph, k: int, on_merge: Optional[MergeHook] = None) -> KTreeSolution:
    """
    kMST 근사 (2√k)

    Args:
        g: 입력 그래프 (비연결 허용 - 크기 k 이상인 연결 요소마다 실행)
        k: 트리 정점 수
        on_merge: 병합마다 (이전 상태, 병합 간선, 이후 상태) 로 호출되는 콜백

    Returns:
        정확히 k 정점의 트리
    """
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ArgumentError(f"k must be a positive integer, got {k!r}")
    if g.vertex_count == 0:
        raise ArgumentError("graph has no vertices")
    parts = g.components()
    largest = max(len(p) for p in parts)
    if k > largest:
        raise InfeasibleError(f"component size {largest} < k")
    if k == 1:
        return KTreeSolution.single_vertex(0, "merge-collect")
    results = [_run_component(g, part, k, on_merge) for part in parts if len(part) >= k]
    return min(results, key=KTreeSolution.sort_key).retag("merge-collect")


def k_steiner(g: WeightedGraph, terminals: Iterable[int], k: int) -> KTreeSolution:
    """터미널 k개 이상을 잇는 트리 (closure 위 merge_collect → 경로 복원 → 비터미널 잎 제거)"""
    marked = sorted({g.check_vertex(v, "terminal") for v in terminals})
    if k < 1:
        raise ArgumentError(f"k must be positive, got {k}")
    if k > len(marked):
        raise InfeasibleError(f"only {len(marked)} terminals for k = {k}")
    closure, paths = metric_closure(g, marked)
    inner = merge_collect(closure, k)
    if not inner.edges:
        (only,) = inner.vertices
        return KTreeSolution.single_vertex(marked[only], "k-steiner")

    union: dict[tuple[int, int], Edge] = {}
    for a, b, _ in inner.edges:
        for edge in paths.expand_edges(a, b):
            union[edge[:2]] = edge
    touched = sorted({x for e in union.values() for x in e[:2]})
    tree = kruskal(touched, union.values())

    # 터미널이 아닌 잎을 반복 제거
    keep = set(marked)
    degree: dict[int, int] = {v: 0 for v in touched}
    for u, v, _ in tree:
        degree[u] += 1
        degree[v] += 1
    alive = set(touched)
    edges = set(tree)
    changed = True
    while changed:
        changed = False
        for leaf in sorted(v for v in alive if degree[v] == 1 and v not in keep):
            if degree[leaf] != 1:
                continue
            edge = next(e for e in edges if leaf in e[:2])
            edges.discard(edge)
            other = edge[1] if edge[0] == leaf else edge[0]
            degree[other] -= 1
            degree[leaf] = 0
            alive.discard(leaf)
            changed = True
    return KTreeSolution.from_edges(sorted(edges), "k-steiner", vertices=alive)
