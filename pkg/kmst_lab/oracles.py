"""
전수 탐색 기준 솔버 (오라클)
- 본 솔버들과 코드를 공유하지 않는 단순 구현
- 예산(OracleBudget)을 넘으면 잘라내지 않고 ResourceError
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

import numpy as np

from components.errors import ArgumentError, InfeasibleError, ResourceError
from config import ORACLE_MAX_SUBSETS, ORACLE_MAX_TREES, ORACLE_MAX_VERTICES
from graph_core import HuInstance, KTreeSolution, WeightedGraph, edge_pairs

logger = logging.getLogger(__name__)

OBJECTIVES = ("comm", "diamcost")


@dataclass
class OracleBudget:
    """오라클 탐색 한도"""

    max_vertices: int = ORACLE_MAX_VERTICES
    max_subsets: int = ORACLE_MAX_SUBSETS
    max_trees: int = ORACLE_MAX_TREES
    exceeded: bool = False

    def refuse(self, message: str) -> None:
        self.exceeded = True
        raise ResourceError(message)

    def check_vertices(self, n: int) -> None:
        if n > self.max_vertices:
            self.refuse(f"{n} vertices exceed the oracle limit of {self.max_vertices}")

    def check_subsets(self, count: int) -> None:
        if count > self.max_subsets:
            self.refuse(f"{count} candidate subsets exceed the oracle limit of {self.max_subsets}")

    def check_trees(self, count: int) -> None:
        if count > self.max_trees:
            self.refuse(f"{count} spanning trees exceed the oracle limit of {self.max_trees}")


def _budget(budget: Optional[OracleBudget]) -> OracleBudget:
    return budget if budget is not None else OracleBudget()


# ========== 내부 헬퍼 (본 솔버와 독립) ==========

def _weight_table(g: WeightedGraph) -> dict[int, dict[int, float]]:
    table: dict[int, dict[int, float]] = {v: {} for v in range(g.vertex_count)}
    for u, v, w in g.edges:
        table[u][v] = w
        table[v][u] = w
    return table


def _is_connected(vertices: Sequence[int], table: dict[int, dict[int, float]]) -> bool:
    members = set(vertices)
    start = vertices[0]
    seen = {start}
    frontier = [start]
    while frontier:
        x = frontier.pop()
        for y in table[x]:
            if y in members and y not in seen:
                seen.add(y)
                frontier.append(y)
    return len(seen) == len(members)


def _prim(vertices: Sequence[int], table: dict[int, dict[int, float]]) -> list[tuple[int, int, float]]:
    """유도 부분그래프 위 O(k^2) Prim (연결 가정)"""
    start = vertices[0]
    outside = set(vertices[1:])
    best = {v: (math.inf, -1) for v in outside}
    for y, w in table[start].items():
        if y in outside:
            best[y] = (w, start)
    edges = []
    while outside:
        v = min(outside, key=lambda x: (best[x][0], x))
        w, parent = best.pop(v)
        outside.discard(v)
        edges.append((min(parent, v), max(parent, v), w))
        for y, wy in table[v].items():
            if y in outside and wy < best[y][0]:
                best[y] = (wy, v)
    return edges


def _path_lengths(vertices: Sequence[int], edges: Iterable[tuple[int, int, float]]) -> dict[tuple[int, int], float]:
    """트리 위 모든 쌍 경로 길이 (각 정점에서 탐색)"""
    adj: dict[int, list[tuple[int, float]]] = {v: [] for v in vertices}
    for u, v, w in edges:
        adj[u].append((v, w))
        adj[v].append((u, w))
    lengths = {}
    for s in vertices:
        dist = {s: 0.0}
        stack = [s]
        while stack:
            x = stack.pop()
            for y, w in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + w
                    stack.append(y)
        for t, value in dist.items():
            lengths[(s, t)] = value
    return lengths


def _tree_key(cost: float, edges) -> tuple:
    return (cost, edge_pairs(edges))


# ========== kMST 오라클 ==========

def oracle_kmst(
    g: WeightedGraph,
    k: int,
    terminals: Optional[Iterable[int]] = None,
    budget: Optional[OracleBudget] = None,
) -> tuple[float, KTreeSolution]:
    """
    kMST 전수 탐색

    Args:
        g: 입력 그래프
        k: 트리 정점 수 (terminals가 있으면 포함할 최소 터미널 수)
        terminals: 터미널 집합 (k-Steiner 기준값용)
        budget: 탐색 한도

    Returns:
        (최적 비용, 최적 트리)
    """
    budget = _budget(budget)
    n = g.vertex_count
    if k < 1:
        raise ArgumentError(f"k must be positive, got {k}")
    budget.check_vertices(n)
    table = _weight_table(g)

    if terminals is None:
        if k > n:
            raise InfeasibleError(f"k = {k} exceeds the vertex count {n}")
        budget.check_subsets(math.comb(n, k))
        candidates = itertools.combinations(range(n), k)
        tag = "oracle-kmst"
    else:
        marked = set(terminals)
        if k > len(marked):
            raise InfeasibleError(f"k = {k} exceeds the terminal count {len(marked)}")
        budget.check_subsets(2 ** n)
        candidates = (
            subset
            for size in range(k, n + 1)
            for subset in itertools.combinations(range(n), size)
            if len(marked.intersection(subset)) >= k
        )
        tag = "oracle-ksteiner"

    best_key = None
    best_edges = None
    best_vertices = None
    for subset in candidates:
        if not _is_connected(subset, table):
            continue
        edges = _prim(subset, table)
        key = _tree_key(math.fsum(w for _, _, w in edges), edges)
        if best_key is None or key < best_key:
            best_key, best_edges, best_vertices = key, edges, subset

    if best_key is None:
        raise InfeasibleError(f"no connected vertex set qualifies for k = {k}")
    solution = KTreeSolution.from_edges(best_edges, tag, vertices=best_vertices)
    return solution.cost, solution


def steiner_oracle(g: WeightedGraph, terminals: Iterable[int], budget: Optional[OracleBudget] = None) -> int:
    """터미널 전체를 잇는 트리의 최소 간선 수 (가중치 무시)"""
    budget = _budget(budget)
    n = g.vertex_count
    marked = sorted(set(terminals))
    if not marked:
        raise ArgumentError("steiner_oracle needs at least one terminal")
    budget.check_vertices(n)
    budget.check_subsets(2 ** (n - len(marked)))
    table = _weight_table(g)
    others = [v for v in range(n) if v not in set(marked)]
    for extra in range(len(others) + 1):
        for chosen in itertools.combinations(others, extra):
            if _is_connected(tuple(marked) + chosen, table):
                return len(marked) + extra - 1
    raise InfeasibleError("terminals are disconnected")


# ========== 신장 트리 열거 ==========

def count_spanning_trees(g: WeightedGraph) -> int:
    """행렬-트리 정리 (라플라시안 소행렬식)"""
    n = g.vertex_count
    if n == 0:
        return 0
    if n == 1:
        return 1
    laplacian = np.zeros((n, n))
    for u, v, _ in g.edges:
        laplacian[u, u] += 1
        laplacian[v, v] += 1
        laplacian[u, v] -= 1
        laplacian[v, u] -= 1
    return int(round(float(np.linalg.det(laplacian[1:, 1:]))))


def _reachable_all(n: int, edges: Iterable[tuple[int, int, float]]) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    parts = n
    for u, v, _ in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            parts -= 1
    return parts == 1


def enumerate_spanning_trees(g: WeightedGraph, budget: Optional[OracleBudget] = None) -> Iterator[tuple[tuple[int, int, float], ...]]:
    """
    모든 신장 트리를 한 번씩 생성 (간선 포함/제외 분기)

    간선을 정렬 순서로 보면서 포함 분기는 사이클이 없을 때만,
    제외 분기는 남은 간선으로 여전히 연결될 때만 진행한다.
    """
    budget = _budget(budget)
    n = g.vertex_count
    if n == 0:
        return
    total = count_spanning_trees(g)
    budget.check_trees(total)
    if n == 1:
        yield ()
        return
    if total == 0:
        return
    edges = list(g.edges)
    m = len(edges)

    def creates_cycle(chosen, edge):
        return not _acyclic(n, list(chosen) + [edge])

    def recurse(i, chosen):
        if len(chosen) == n - 1:
            yield tuple(chosen)
            return
        if m - i < n - 1 - len(chosen):
            return
        edge = edges[i]
        if not creates_cycle(chosen, edge):
            chosen.append(edge)
            yield from recurse(i + 1, chosen)
            chosen.pop()
        if _reachable_all(n, chosen + edges[i + 1:]):
            yield from recurse(i + 1, chosen)

    yield from recurse(0, [])


def _acyclic(n: int, edges) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v, _ in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def _relabel(g: WeightedGraph, vertices: Sequence[int]) -> WeightedGraph:
    index = {v: i for i, v in enumerate(vertices)}
    return WeightedGraph(
        len(vertices),
        tuple((index[u], index[v], w) for u, v, w in g.edges if u in index and v in index),
    )


# ========== 최소 지름 k-트리 오라클 ==========

def oracle_min_diam_ktree(g: WeightedGraph, k: int, budget: Optional[OracleBudget] = None) -> tuple[float, KTreeSolution]:
    """k-부분집합 x 신장 트리 전수 탐색으로 최소 지름 k-트리"""
    budget = _budget(budget)
    n = g.vertex_count
    if k < 1:
        raise ArgumentError(f"k must be positive, got {k}")
    if k > n:
        raise InfeasibleError(f"k = {k} exceeds the vertex count {n}")
    budget.check_vertices(n)
    budget.check_subsets(math.comb(n, k))
    table = _weight_table(g)

    best = None
    for subset in itertools.combinations(range(n), k):
        if not _is_connected(subset, table):
            continue
        local = _relabel(g, subset)
        for tree in enumerate_spanning_trees(local, budget):
            edges = [(subset[u], subset[v], w) for u, v, w in tree]
            lengths = _path_lengths(subset, edges)
            diameter = max(lengths.values())
            cost = math.fsum(w for _, _, w in edges)
            key = (diameter,) + _tree_key(cost, edges)
            if best is None or key < best[0]:
                best = (key, edges, subset)

    if best is None:
        raise InfeasibleError(f"no connected {k}-vertex subgraph")
    solution = KTreeSolution.from_edges(best[1], "oracle-diam", vertices=best[2])
    return best[0][0], solution


# ========== Hu 목적함수 오라클 ==========

def _hu_value(inst: HuInstance, vertices: Sequence[int], edges, objective: str) -> float:
    lengths = _path_lengths(vertices, edges)
    values = [
        float(inst.r[i, j]) * lengths[(i, j)]
        for a, i in enumerate(vertices)
        for j in vertices[a + 1:]
    ]
    if not values:
        return 0.0
    if objective == "comm":
        return math.fsum(values)
    return max(values)


def _check_objective(objective: str) -> None:
    if objective not in OBJECTIVES:
        raise ArgumentError(f"objective must be one of {OBJECTIVES}, got {objective!r}")


def _complete_on(inst: HuInstance, vertices: Sequence[int]) -> WeightedGraph:
    return WeightedGraph(
        len(vertices),
        tuple(
            (a, b, float(inst.d[vertices[a], vertices[b]]))
            for a in range(len(vertices))
            for b in range(a + 1, len(vertices))
        ),
    )


def oracle_hu_tree(inst: HuInstance, objective: str, budget: Optional[OracleBudget] = None) -> tuple[float, KTreeSolution]:
    """완전 그래프의 모든 신장 트리 중 Hu 목적함수 최소"""
    return oracle_hu_ktree(inst, inst.n, objective, budget, tag="oracle-hu")


def oracle_hu_ktree(
    inst: HuInstance,
    k: int,
    objective: str,
    budget: Optional[OracleBudget] = None,
    tag: str = "oracle-hu-ktree",
) -> tuple[float, KTreeSolution]:
    """k-부분집합 위 모든 트리 중 Hu 목적함수 최소 (쌍은 부분집합 안에서만 계산)"""
    _check_objective(objective)
    budget = _budget(budget)
    n = inst.n
    if not 1 <= k <= n:
        raise ArgumentError(f"k must lie in 1..{n}, got {k}")
    budget.check_vertices(n)
    budget.check_subsets(math.comb(n, k))
    best = None
    for subset in itertools.combinations(range(n), k):
        local = _complete_on(inst, subset)
        for tree in enumerate_spanning_trees(local, budget):
            edges = [(subset[u], subset[v], w) for u, v, w in tree]
            value = _hu_value(inst, subset, edges, objective)
            key = (value, edge_pairs(edges))
            if best is None or key < best[0]:
                best = (key, edges, subset)
    solution = KTreeSolution.from_edges(best[1], tag, vertices=best[2])
    return best[0][0], solution
