"""
구조가 있는 그래프의 정확한 kMST
- two_weight_kmst: 간선 가중치가 두 종류뿐인 그래프
- sp_kmst: series-parallel 파스 트리 위 비용 테이블 DP
- tree_kmst: 트리 위 배낭식 DP
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from components.errors import (
    ApplicabilityError,
    ArgumentError,
    InfeasibleError,
    ParseError,
    ValidationError,
)
from graph_core import Edge, KTreeSolution, WeightedGraph, kruskal
from merge_collect import prune_to_size

logger = logging.getLogger(__name__)

INF = math.inf


# ========== 두 종류 가중치 ==========

def two_weight_kmst(g: WeightedGraph, k: int) -> KTreeSolution:
    """
    가중치가 {w1, w2} (w1 < w2) 인 그래프의 kMST

    w1 간선만의 연결 요소 중 큰 것부터 r개 (합 ≥ k, r 최소) 를 골라
    각각 w1 트리로 잇고 r-1개의 w2 간선으로 연결한 뒤 정확히 k 정점으로 자른다.
    비용 = (k - r)·w1 + (r - 1)·w2
    """
    weights = g.distinct_weights()
    if len(weights) > 2:
        raise ArgumentError(f"graph has {len(weights)} distinct weights, two_weight_kmst needs at most 2")
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ArgumentError(f"k must be a positive integer, got {k!r}")
    if g.vertex_count == 0:
        raise ArgumentError("graph has no vertices")
    if k > g.vertex_count:
        raise InfeasibleError(f"component size {g.vertex_count} < k")
    if k == 1:
        return KTreeSolution.single_vertex(0, "two-weight")
    if not weights:
        raise InfeasibleError("component size 1 < k")

    w1 = weights[0]
    w2 = weights[1] if len(weights) == 2 else None
    light = WeightedGraph(g.vertex_count, tuple(e for e in g.edges if e[2] == w1))
    groups = sorted(light.components(), key=lambda c: (-len(c), c[0]))

    total, r = 0, 0
    for r, group in enumerate(groups, start=1):
        total += len(group)
        if total >= k:
            break
    chosen = groups[:r]
    if r > 1 and w2 is None:
        raise InfeasibleError(f"component size {len(groups[0])} < k")

    owner = {v: index for index, group in enumerate(chosen) for v in group}
    links = []
    for u, v, w in g.edges:
        if w == w2 and u in owner and v in owner and owner[u] != owner[v]:
            links.append((owner[u], owner[v], (u, v, w)))
    bridge = {}
    for a, b, edge in sorted(links, key=lambda item: item[2]):
        bridge.setdefault((min(a, b), max(a, b)), edge)
    tree_links = kruskal(range(r), [(a, b, 0.0) for a, b in bridge])
    if len(tree_links) != r - 1:
        raise ApplicabilityError(
            f"the {r} largest weight-{w1:g} components cannot be joined by {r - 1} weight-{w2:g} edges; "
            "run on the metric closure or use merge_collect"
        )

    edges: list[Edge] = [bridge[(a, b)] for a, b, _ in tree_links]
    for group in chosen:
        edges.extend(_bfs_tree(light, group[0]))
    vertices = [v for group in chosen for v in group]
    return prune_to_size(edges, k, vertices=vertices, solver_tag="two-weight")


def _bfs_tree(g: WeightedGraph, root: int) -> list[Edge]:
    seen = {root}
    queue = deque([root])
    edges = []
    while queue:
        x = queue.popleft()
        for y, w in g.adjacency[x]:
            if y not in seen:
                seen.add(y)
                edges.append((min(x, y), max(x, y), w))
                queue.append(y)
    return edges


# ========== Series-parallel 파스 트리 ==========

EDGE, SERIES, PARALLEL = "e", "s", "p"


@dataclass(frozen=True, eq=True)
class SPParseTree:
    """series-parallel 파스 트리 노드 - 단말 쌍 (t1, t2) 은 생성 시 계산/검증"""

    kind: str
    left: Optional["SPParseTree"] = None
    right: Optional["SPParseTree"] = None
    u: int = -1
    v: int = -1
    w: float = 0.0
    terminals: tuple[int, int] = field(default=(-1, -1), compare=False)
    vertices: frozenset = field(default=frozenset(), compare=False, repr=False)
    direct: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if self.kind == EDGE:
            if self.u < 0 or self.v < 0:
                raise ValidationError(f"vertex ids must be nonnegative, got ({self.u}, {self.v})")
            if self.u == self.v:
                raise ValidationError(f"self-loop at vertex {self.u}")
            if not math.isfinite(self.w) or self.w < 0:
                raise ValidationError(f"edge ({self.u}, {self.v}) has invalid weight {self.w!r}")
            terminals = (self.u, self.v)
            vertices = frozenset(terminals)
            direct = True
        elif self.kind in (SERIES, PARALLEL):
            a, b = self.left, self.right
            if a is None or b is None:
                raise ValidationError(f"'{self.kind}' node needs two children")
            shared = a.vertices & b.vertices
            if self.kind == SERIES:
                if a.terminals[1] != b.terminals[0]:
                    raise ValidationError(
                        f"series composition joins t2={a.terminals[1]} with t1={b.terminals[0]}; they must be equal"
                    )
                if shared != {a.terminals[1]}:
                    raise ValidationError(f"series children share vertices {sorted(shared)} beyond {a.terminals[1]}")
                terminals = (a.terminals[0], b.terminals[1])
                direct = False
            else:
                if a.terminals != b.terminals:
                    raise ValidationError(f"parallel children have terminals {a.terminals} and {b.terminals}")
                if shared != set(a.terminals):
                    raise ValidationError(f"parallel children share vertices {sorted(shared)} beyond the terminals")
                if a.direct and b.direct:
                    raise ValidationError(f"parallel edge between {a.terminals[0]} and {a.terminals[1]}")
                terminals = a.terminals
                direct = a.direct or b.direct
            vertices = a.vertices | b.vertices
        else:
            raise ValidationError(f"unknown parse node kind {self.kind!r}")
        object.__setattr__(self, "terminals", terminals)
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "direct", direct)

    @classmethod
    def edge(cls, u: int, v: int, w: float) -> "SPParseTree":
        return cls(EDGE, u=int(u), v=int(v), w=float(w))

    @classmethod
    def series(cls, left: "SPParseTree", right: "SPParseTree") -> "SPParseTree":
        return cls(SERIES, left, right)

    @classmethod
    def parallel(cls, left: "SPParseTree", right: "SPParseTree") -> "SPParseTree":
        return cls(PARALLEL, left, right)

    def postorder(self) -> list["SPParseTree"]:
        order, stack = [], [(self, False)]
        while stack:
            node, expanded = stack.pop()
            if node.kind == EDGE or expanded:
                order.append(node)
                continue
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
        return order

    def graph_edges(self) -> list[Edge]:
        return sorted((min(x.u, x.v), max(x.u, x.v), x.w) for x in self.postorder() if x.kind == EDGE)

    def to_graph(self) -> WeightedGraph:
        """합성 그래프 (정점 수 = 최대 번호 + 1)"""
        return WeightedGraph(max(self.vertices) + 1, tuple(self.graph_edges()))

    def to_text(self) -> str:
        parts: dict[int, str] = {}
        for node in self.postorder():
            if node.kind == EDGE:
                parts[id(node)] = f"(e {node.u} {node.v} {_weight_text(node.w)})"
            else:
                parts[id(node)] = f"({node.kind} {parts[id(node.left)]} {parts[id(node.right)]})"
        return parts[id(self)]


def _weight_text(w: float) -> str:
    return str(int(w)) if float(w).is_integer() else repr(float(w))


def _tokenize(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def parse_sp_tree(text: str) -> SPParseTree:
    """s-식 `(e u v w)`, `(s T1 T2)`, `(p T1 T2)` 파싱"""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty parse tree text")
    frames: list[list] = []
    result = None
    for position, token in enumerate(tokens):
        if token == "(":
            if result is not None:
                raise ParseError("text continues after the parse tree")
            frames.append([])
        elif token == ")":
            if not frames:
                raise ParseError(f"unbalanced ')' at token {position}")
            node = _build_node(frames.pop())
            if frames:
                frames[-1].append(node)
            else:
                result = node
        else:
            if not frames:
                raise ParseError(f"atom {token!r} outside parentheses")
            frames[-1].append(token)
    if frames or result is None:
        raise ParseError("unbalanced '(' in parse tree")
    return result


def _build_node(items: list) -> SPParseTree:
    if not items or not isinstance(items[0], str):
        raise ParseError("parse node must start with e, s or p")
    head, args = items[0], items[1:]
    if head == EDGE:
        if len(args) != 3 or not all(isinstance(a, str) for a in args):
            raise ParseError(f"edge form is (e u v w), got {len(args)} arguments")
        try:
            u, v, w = int(args[0]), int(args[1]), float(args[2])
        except ValueError as exc:
            raise ParseError(f"bad edge fields {args}: {exc}") from exc
        return SPParseTree.edge(u, v, w)
    if head in (SERIES, PARALLEL):
        if len(args) != 2 or not all(isinstance(a, SPParseTree) for a in args):
            raise ParseError(f"({head} T1 T2) needs two sub-trees")
        return SPParseTree(head, args[0], args[1])
    raise ParseError(f"unknown form {head!r}")


# ========== 비용 테이블 ==========

NONE, ONLY_T1, ONLY_T2, JOINED, SPLIT = "none", "t1", "t2", "t1t2", "t1|t2"
STATES = (NONE, ONLY_T1, ONLY_T2, JOINED, SPLIT)
SINGLE_TREE_STATES = (NONE, ONLY_T1, ONLY_T2, JOINED)


def _trees_of(state: Optional[str], terminals: tuple[int, int]) -> list[frozenset]:
    """상태가 뜻하는 숲 - 트리마다 포함한 단말 집합"""
    t1, t2 = terminals
    if state is None:
        return []
    return {
        NONE: [frozenset()],
        ONLY_T1: [frozenset([t1])],
        ONLY_T2: [frozenset([t2])],
        JOINED: [frozenset([t1, t2])],
        SPLIT: [frozenset([t1]), frozenset([t2])],
    }[state]


@dataclass
class CostTable:
    """
    파스 노드의 비용 테이블

    entries[state][i] = 간선 i개 숲의 최소 비용 (i = 1..k-1, 0번 칸은 사용하지 않음)
    back[(state, i)] = (왼쪽 상태, 왼쪽 간선 수, 오른쪽 상태, 오른쪽 간선 수)
    """

    terminals: tuple[int, int]
    k: int
    entries: dict[str, np.ndarray]
    back: dict[tuple[str, int], tuple] = field(default_factory=dict)

    @classmethod
    def empty(cls, terminals: tuple[int, int], k: int) -> "CostTable":
        return cls(terminals, k, {s: np.full(k, INF) for s in STATES})

    @classmethod
    def primitive(cls, node: SPParseTree, k: int) -> "CostTable":
        table = cls.empty(node.terminals, k)
        if k >= 2:
            table.entries[JOINED][1] = node.w
        return table

    def finite(self) -> list[tuple[str, int]]:
        return [(s, i) for s in STATES for i in range(1, self.k) if math.isfinite(self.entries[s][i])]


def _classify(forest: list[frozenset], terminals: tuple[int, int]) -> Optional[str]:
    t1, t2 = terminals
    if len(forest) == 1:
        (tree,) = forest
        has1, has2 = t1 in tree, t2 in tree
        return {(False, False): NONE, (True, False): ONLY_T1, (False, True): ONLY_T2, (True, True): JOINED}[(has1, has2)]
    if len(forest) == 2:
        a, b = forest
        if (t1 in a and t2 in b and t2 not in a and t1 not in b) or (t1 in b and t2 in a and t2 not in b and t1 not in a):
            return SPLIT
    return None


def _glue(left: list[frozenset], right: list[frozenset]) -> Optional[list[frozenset]]:
    """공유 단말에서 두 숲을 합침 - 사이클이 생기면 None"""
    trees = left + right
    if not trees:
        return None
    parent = list(range(len(trees)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: dict[int, int] = {}
    for index, tree in enumerate(trees):
        for terminal in sorted(tree):
            if terminal in owner:
                ra, rb = find(owner[terminal]), find(index)
                if ra == rb:
                    return None
                parent[rb] = ra
            else:
                owner[terminal] = index
    merged: dict[int, frozenset] = {}
    for index, tree in enumerate(trees):
        root = find(index)
        merged[root] = merged.get(root, frozenset()) | tree
    return list(merged.values())


def compose_tables(left: CostTable, right: CostTable, rule: str, k: int) -> CostTable:
    """
    두 자식 테이블의 합성 (series: 가운데 단말 공유, parallel: 두 단말 공유)

    두 자식 모두 기여 / 한쪽만 기여 / 모두 기여하지 않음(빈 숲, 항목 없음) 세 경우를 모두 본다.
    식별 규칙은 간선을 추가하지 않으므로 간선 수와 비용은 그대로 더해진다.
    """
    if rule == SERIES:
        terminals = (left.terminals[0], right.terminals[1])
    elif rule == PARALLEL:
        terminals = left.terminals
    else:
        raise ArgumentError(f"rule must be series or parallel, got {rule!r}")
    table = CostTable.empty(terminals, k)
    options_left = [None] + list(STATES)
    options_right = [None] + list(STATES)
    for s1 in options_left:
        for s2 in options_right:
            if s1 is None and s2 is None:
                continue
            forest = _glue(_trees_of(s1, left.terminals), _trees_of(s2, right.terminals))
            if forest is None:
                continue
            parent_state = _classify(forest, terminals)
            if parent_state is None:
                continue
            target = table.entries[parent_state]
            counts1 = [0] if s1 is None else [i for i in range(1, k) if math.isfinite(left.entries[s1][i])]
            counts2 = [0] if s2 is None else [i for i in range(1, k) if math.isfinite(right.entries[s2][i])]
            for i1 in counts1:
                c1 = 0.0 if s1 is None else left.entries[s1][i1]
                for i2 in counts2:
                    total = i1 + i2
                    if total >= k:
                        break
                    cost = c1 + (0.0 if s2 is None else right.entries[s2][i2])
                    if cost < target[total]:
                        target[total] = cost
                        table.back[(parent_state, total)] = (s1, i1, s2, i2)
    return table


def _tables(tree: SPParseTree, k: int) -> dict[int, CostTable]:
    tables: dict[int, CostTable] = {}
    for node in tree.postorder():
        if node.kind == EDGE:
            tables[id(node)] = CostTable.primitive(node, k)
        else:
            tables[id(node)] = compose_tables(tables[id(node.left)], tables[id(node.right)], node.kind, k)
    return tables


def reconstruct(tree: SPParseTree, tables: dict[int, CostTable], state: str, count: int) -> list[Edge]:
    """역참조를 따라 (state, count) 항목의 숲 간선 복원"""
    edges: list[Edge] = []
    stack = [(tree, state, count)]
    while stack:
        node, s, i = stack.pop()
        if node.kind == EDGE:
            edges.append((min(node.u, node.v), max(node.u, node.v), node.w))
            continue
        s1, i1, s2, i2 = tables[id(node)].back[(s, i)]
        if s1 is not None:
            stack.append((node.left, s1, i1))
        if s2 is not None:
            stack.append((node.right, s2, i2))
    return sorted(edges)


def sp_kmst(tree: SPParseTree, k: int) -> KTreeSolution:
    """
    series-parallel 그래프의 정확한 kMST

    Args:
        tree: 파스 트리
        k: 트리 정점 수

    Returns:
        최소 비용 k-트리 (단일 트리 상태들의 Cost_{k-1} 최소값)
    """
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ArgumentError(f"k must be a positive integer, got {k!r}")
    edge_count = len(tree.graph_edges())
    if k - 1 > edge_count or k > len(tree.vertices):
        raise InfeasibleError(f"k - 1 = {k - 1} exceeds the {edge_count} edges of the composed graph")
    if k == 1:
        return KTreeSolution.single_vertex(min(tree.vertices), "sp")

    tables = _tables(tree, k)
    root = tables[id(tree)]
    best = None
    for state in SINGLE_TREE_STATES:
        value = root.entries[state][k - 1]
        if math.isfinite(value) and (best is None or value < best[0]):
            best = (value, state)
    if best is None:
        raise InfeasibleError(f"no {k}-vertex tree in the composed graph")
    logger.debug("sp_kmst: %d parse nodes, best state %s", len(tables), best[1])
    return KTreeSolution.from_edges(reconstruct(tree, tables, best[1], k - 1), "sp")


# ========== 트리 DP ==========

def tree_kmst(g: WeightedGraph, k: int) -> KTreeSolution:
    """트리 그래프의 정확한 kMST - 부분트리 배낭 DP"""
    n = g.vertex_count
    if n == 0 or len(g.edges) != n - 1 or len(g.components()) != 1:
        raise ArgumentError("tree_kmst needs a tree")
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise ArgumentError(f"k must be a positive integer, got {k!r}")
    if k > n:
        raise InfeasibleError(f"component size {n} < k")
    if k == 1:
        return KTreeSolution.single_vertex(0, "tree")

    parent = [-1] * n
    order = []
    stack = [0]
    seen = [False] * n
    seen[0] = True
    while stack:
        x = stack.pop()
        order.append(x)
        for y, _ in g.adjacency[x]:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)

    children: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for y in range(1, n):
        if parent[y] >= 0:
            children[parent[y]].append((y, g.weight(y, parent[y])))

    # best[v][j]: v 를 포함하고 v 아래에서 정확히 j 정점인 부분트리 최소 비용
    best: list[list[float]] = [[] for _ in range(n)]
    # picks[v][c][j]: c번째 자식까지 합친 뒤 j 정점일 때 그 자식에 배정한 정점 수
    picks: list[list[list[int]]] = [[] for _ in range(n)]
    for v in reversed(order):
        current = [INF, 0.0]
        for child, w in children[v]:
            sub = best[child]
            merged = current + [INF] * min(len(sub) - 1, k + 1 - len(current))
            merged = merged[: k + 1]
            choice = [0] * len(merged)
            for j1 in range(1, len(current)):
                if not math.isfinite(current[j1]):
                    continue
                for j2 in range(1, len(sub)):
                    if j1 + j2 >= len(merged):
                        break
                    cost = current[j1] + w + sub[j2]
                    if cost < merged[j1 + j2]:
                        merged[j1 + j2] = cost
                        choice[j1 + j2] = j2
            picks[v].append(choice)
            current = merged
        best[v] = current

    top = None
    for v in range(n):
        if len(best[v]) > k and math.isfinite(best[v][k]) and (top is None or best[v][k] < top[0]):
            top = (best[v][k], v)
    _, root = top

    edges: list[Edge] = []
    stack = [(root, k)]
    while stack:
        v, size = stack.pop()
        for index in range(len(children[v]) - 1, -1, -1):
            if size <= 1:
                break
            take = picks[v][index][size] if size < len(picks[v][index]) else 0
            if take:
                child, w = children[v][index]
                edges.append((min(v, child), max(v, child), w))
                stack.append((child, take))
                size -= take
    return KTreeSolution.from_edges(edges, "tree", vertices=None)
