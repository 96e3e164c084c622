"""
인스턴스 생성기
- 난이도 증명용 가젯: Steiner → kMST, 3SAT → 지름 비용 트리, 독립집합 → 통신 비용 k-트리
- 최악 사례 계열: Merge-Collect 하한 그래프 (gen_fig2), 평면 휴리스틱 하한 점 집합 (gen_fig4)
- 시드 고정 랜덤 인스턴스 (graph / points / sp-parse / convex / circle / hu)
"""

from __future__ import annotations

import logging
import math
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Optional, Sequence

import numpy as np

from components.errors import ArgumentError, ParseError
from exact_special import SPParseTree
from graph_core import HuInstance, KTreeSolution, PointSet2D, WeightedGraph, point_mst
from short_trees import tree_distance_matrix

logger = logging.getLogger(__name__)

KINDS = ("graph", "points", "sp-parse", "convex", "circle", "hu")
FAMILIES = ("fig2", "fig4") + KINDS
WEIGHT_VARIANTS = ("01inf", "123")
HU_PRESETS = ("uniform-d", "uniform-r", "two-r", "zero-c-two-r", "two-d-two-r")


# ========== 공통 타입 ==========

@dataclass(frozen=True)
class GenSpec:
    """생성 요청 - 같은 GenSpec 은 같은 인스턴스"""

    family: str
    params: tuple[tuple[str, Any], ...] = ()
    seed: int = 0

    @classmethod
    def create(cls, family: str, params: Optional[Mapping[str, Any]] = None, seed: int = 0) -> "GenSpec":
        if family not in FAMILIES:
            raise ArgumentError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
        return cls(family, tuple(sorted((params or {}).items())), int(seed))

    def param(self, name: str, default: Any = None) -> Any:
        return dict(self.params).get(name, default)

    def rng(self) -> np.random.Generator:
        return np.random.default_rng(self.seed)


@dataclass(frozen=True)
class ReductionCertificate:
    """환원 증명서 - 원 인스턴스, 생성 인스턴스, 양방향 증거 변환"""

    source: Any
    produced: Any
    forward: Callable = field(repr=False)
    backward: Callable = field(repr=False)
    threshold: float = 0.0
    parameters: Mapping[str, Any] = field(default_factory=dict)


def _perfect_root(k: int) -> int:
    root = math.isqrt(k) if isinstance(k, (int, np.integer)) and k >= 0 else -1
    if root < 2 or root * root != k:
        raise ArgumentError(f"k must be a perfect square >= 4, got {k!r}")
    return root


# ========== Steiner → kMST ==========

def gen_steiner_to_kmst(
    g: WeightedGraph,
    terminals: Iterable[int],
    M: int,
    weight_variant: str = "01inf",
) -> tuple[WeightedGraph, int, float, ReductionCertificate]:
    """
    Steiner 트리 (간선 M개 이하) 존재 여부를 kMST 비용 판정으로 환원

    Args:
        g: Steiner 인스턴스 그래프 (가중치 무시)
        terminals: 터미널 집합 R
        M: 간선 수 한도
        weight_variant: "01inf" (경로 0 / 원 간선 1 / 나머지 W∞) 또는 "123"

    Returns:
        (g′, k, 비용 한도, 증명서)
    """
    if weight_variant not in WEIGHT_VARIANTS:
        raise ArgumentError(f"weight_variant must be one of {WEIGHT_VARIANTS}, got {weight_variant!r}")
    R = sorted({g.check_vertex(t, "terminal") for t in terminals})
    if not R:
        raise ArgumentError("terminal set is empty")
    if not isinstance(M, (int, np.integer)) or M < 0:
        raise ArgumentError(f"M must be a nonnegative integer, got {M!r}")
    n = g.vertex_count
    X = n - len(R) + 1
    attached: dict[int, list[int]] = {}
    cursor = n
    for t in R:
        attached[t] = list(range(cursor, cursor + X))
        cursor += X
    total = cursor

    if weight_variant == "01inf":
        attach_w, original_w = 0.0, 1.0
        other_w = float(total * total * 2)
        k = len(R) * (X + 1)
        budget = float(M)
        new_edges = {}
        for t, block in attached.items():
            chain = [t] + block
            for a, b in zip(chain, chain[1:]):
                new_edges[(a, b)] = attach_w
    else:
        if len(g.components()) != 1:
            raise ArgumentError("the {1, 2, 3} variant needs a connected graph")
        if M > n - 1:
            raise ArgumentError(f"the {{1, 2, 3}} variant needs M <= {n - 1}, got {M}")
        attach_w, original_w, other_w = 1.0, 2.0, 3.0
        k = len(R) * X + M + 1
        budget = float(len(R) * X + 2 * M)
        new_edges = {(t, x): attach_w for t, block in attached.items() for x in block}

    weights = {(u, v): original_w for u, v, _ in g.edges}
    weights.update(new_edges)
    edges = [(u, v, weights.get((u, v), other_w)) for u in range(total) for v in range(u + 1, total)]
    produced = WeightedGraph(total, tuple(edges))
    logger.debug("steiner reduction: n'=%d, X=%d, k=%d, budget=%s", total, X, k, budget)

    def forward(steiner_edges: Sequence[tuple[int, int]]) -> KTreeSolution:
        """Steiner 트리 간선 → 한도 이내 k-트리"""
        pairs = sorted((min(u, v), max(u, v)) for u, v in steiner_edges)
        vertices = {x for pair in pairs for x in pair} | set(R[:1])
        if len(pairs) > M:
            raise ArgumentError(f"Steiner tree has {len(pairs)} edges, more than M = {M}")
        if not set(R) <= vertices:
            raise ArgumentError("Steiner tree misses a terminal")
        tree = [(u, v, original_w) for u, v in pairs]
        if weight_variant == "01inf":
            blocks = {t: list(block) for t, block in attached.items()}
            excess = len(vertices) + len(R) * X - k
            # 경로 끝에서부터 제거
            while excess > 0:
                for t in R:
                    if excess > 0 and blocks[t]:
                        blocks[t].pop()
                        excess -= 1
            for t, block in blocks.items():
                chain = [t] + block
                tree.extend((a, b, attach_w) for a, b in zip(chain, chain[1:]))
        else:
            tree.extend((t, x, attach_w) for t, block in attached.items() for x in block)
            queue = deque(sorted(vertices))
            while len(vertices) < M + 1 and queue:
                x = queue.popleft()
                for y, _ in g.adjacency[x]:
                    if y not in vertices and len(vertices) < M + 1:
                        vertices.add(y)
                        tree.append((min(x, y), max(x, y), original_w))
                        queue.append(y)
        return KTreeSolution.from_edges(tree, "steiner-witness", vertices=None if tree else R[:1])

    def backward(tree: KTreeSolution) -> list[tuple[int, int]]:
        """k-트리 → 원 그래프 간선만 남긴 Steiner 트리"""
        return sorted((u, v) for u, v, _ in tree.edges if u < n and v < n)

    certificate = ReductionCertificate(
        source=(g, tuple(R), M),
        produced=produced,
        forward=forward,
        backward=backward,
        threshold=budget,
        parameters={"X": X, "M": M, "R": tuple(R), "k": k, "variant": weight_variant, "W_inf": other_w},
    )
    return produced, k, budget, certificate


# ========== 3SAT → 지름 비용 트리 ==========

_LITERAL = re.compile(r"^(~|!|-|¬)?([A-Za-z_][A-Za-z0-9_]*|\d+)$")


def parse_cnf(text: str) -> tuple[tuple[str, ...], ...]:
    """
    3-CNF 텍스트 파싱 - 절은 '&' / ';' / 줄바꿈, 리터럴은 '|' 로 구분

    예: "(x | ~y | z) & (~x | y | w)"
    리터럴은 "x" 또는 "~x" 로 정규화된다.
    """
    clauses = []
    for raw in re.split(r"[&;\n∧]", text.replace("∨", "|")):
        body = raw.strip()
        if not body:
            continue
        if body.startswith("(") and body.endswith(")"):
            body = body[1:-1]
        literals = []
        for token in body.split("|"):
            match = _LITERAL.match(token.strip())
            if match is None:
                raise ParseError(f"bad literal {token.strip()!r} in clause {raw.strip()!r}")
            literals.append(("~" if match.group(1) else "") + match.group(2))
        clauses.append(tuple(literals))
    return validate_cnf(clauses)


def validate_cnf(clauses: Iterable[Sequence[str]]) -> tuple[tuple[str, ...], ...]:
    formula = tuple(tuple(str(x) for x in clause) for clause in clauses)
    if not formula:
        raise ParseError("formula has no clauses")
    for clause in formula:
        if len(clause) != 3:
            raise ParseError(f"clause {clause} must have exactly 3 literals")
        if len(set(clause)) != 3:
            raise ParseError(f"clause {clause} repeats a literal")
    return formula


def _variable(literal: str) -> str:
    return literal.lstrip("~")


def satisfies(formula: Sequence[Sequence[str]], assignment: Mapping[str, bool]) -> bool:
    return all(
        any(assignment[_variable(x)] != x.startswith("~") for x in clause)
        for clause in formula
    )


def gen_3sat_diamcost(
    formula,
    a: float = 1.0,
    c: float = 1.0,
    d_far: float = 5.0,
) -> tuple[HuInstance, float, ReductionCertificate]:
    """
    3SAT → 지름 비용 신장 트리

    노드: t, 각 변수의 양/음 리터럴, 각 절. d = c 인 쌍은 (리터럴, 부정), (t, 리터럴),
    (절, 절의 리터럴) 이고 나머지는 d_far. r = 4a 는 (리터럴, 부정) 쌍, 나머지는 a.
    만족 가능 ⇔ 지름 비용 4ac 이하의 신장 트리 존재.
    """
    if isinstance(formula, str):
        formula = parse_cnf(formula)
    else:
        formula = validate_cnf(formula)
    if not d_far > 4 * a * c:
        raise ArgumentError(f"d_far must exceed 4ac = {4 * a * c}, got {d_far}")

    variables: list[str] = []
    for clause in formula:
        for literal in clause:
            if _variable(literal) not in variables:
                variables.append(_variable(literal))
    node = {"t": 0}
    for q, name in enumerate(variables):
        node[name] = 1 + 2 * q
        node["~" + name] = 2 + 2 * q
    clause_base = 1 + 2 * len(variables)
    n = clause_base + len(formula)

    d = np.full((n, n), float(d_far))
    r = np.full((n, n), float(a))

    def near(i, j):
        d[i, j] = d[j, i] = c

    for name in variables:
        pos, neg = node[name], node["~" + name]
        near(pos, neg)
        near(0, pos)
        near(0, neg)
        r[pos, neg] = r[neg, pos] = 4 * a
    for index, clause in enumerate(formula):
        for literal in clause:
            near(clause_base + index, node[literal])
    np.fill_diagonal(d, 0.0)
    np.fill_diagonal(r, 0.0)
    inst = HuInstance(d, r)
    threshold = 4 * a * c

    def forward(assignment: Mapping[str, bool]) -> KTreeSolution:
        """만족 할당 → t 아래 참 리터럴, 그 아래 거짓 리터럴과 절"""
        if not satisfies(formula, assignment):
            raise ArgumentError("assignment does not satisfy the formula")
        edges = []
        for name in variables:
            true_lit = name if assignment[name] else "~" + name
            false_lit = "~" + name if assignment[name] else name
            edges.append((0, node[true_lit], c))
            edges.append((node[true_lit], node[false_lit], c))
        for index, clause in enumerate(formula):
            hook = next(x for x in clause if assignment[_variable(x)] != x.startswith("~"))
            edges.append((node[hook], clause_base + index, c))
        return KTreeSolution.from_edges(edges, "sat3-witness", vertices=range(n))

    def backward(tree: KTreeSolution) -> dict[str, bool]:
        """트리에서 t 에 더 가까운 리터럴을 참으로"""
        distances = tree_distance_matrix(tree, n)[0]
        return {name: bool(distances[node[name]] <= distances[node["~" + name]]) for name in variables}

    certificate = ReductionCertificate(
        source=formula,
        produced=inst,
        forward=forward,
        backward=backward,
        threshold=threshold,
        parameters={"a": a, "c": c, "d_far": d_far, "nodes": dict(node), "clause_base": clause_base},
    )
    return inst, threshold, certificate


# ========== 독립집합 → 통신 비용 k-트리 ==========

def gen_is_to_comm_ktree(g: WeightedGraph, k: int, M: int = 1) -> tuple[HuInstance, ReductionCertificate]:
    """
    크기 k 독립집합 ⇔ 통신 비용 k(k-1) 이하의 k-트리

    d 는 모두 1, r 은 비간선 1 / 간선 Mk(k-1)+1. 독립집합이 없으면 모든 k-트리 비용이 Mk(k-1) 초과.
    """
    n = g.vertex_count
    if not isinstance(k, (int, np.integer)) or not 1 <= k <= n:
        raise ArgumentError(f"k must lie in 1..{n}, got {k!r}")
    if not isinstance(M, (int, np.integer)) or M < 1:
        raise ArgumentError(f"M must be a positive integer, got {M!r}")
    heavy = float(M * k * (k - 1) + 1)
    d = np.ones((n, n))
    r = np.ones((n, n))
    for u, v, _ in g.edges:
        r[u, v] = r[v, u] = heavy
    np.fill_diagonal(d, 0.0)
    np.fill_diagonal(r, 0.0)
    inst = HuInstance(d, r)

    def forward(independent: Iterable[int]) -> KTreeSolution:
        """독립집합 → 최소 번호 정점 중심 스타"""
        chosen = sorted(set(independent))
        if len(chosen) != k:
            raise ArgumentError(f"need {k} vertices, got {len(chosen)}")
        if any(g.has_edge(u, v) for i, u in enumerate(chosen) for v in chosen[i + 1:]):
            raise ArgumentError("vertex set is not independent")
        root = chosen[0]
        return KTreeSolution.from_edges([(root, v, 1.0) for v in chosen[1:]], "is-witness", vertices=chosen)

    def backward(tree: KTreeSolution) -> tuple[int, ...]:
        return tuple(sorted(tree.vertices))

    certificate = ReductionCertificate(
        source=(g, k),
        produced=inst,
        forward=forward,
        backward=backward,
        threshold=float(k * (k - 1)),
        parameters={"k": k, "M": M, "edge_requirement": heavy, "gap": float(M * k * (k - 1))},
    )
    return inst, certificate


# ========== 최악 사례 계열 ==========

def gen_fig2(k: int, opt_scale: float = 1.0) -> tuple[WeightedGraph, float]:
    """
    Merge-Collect 하한 그래프

    - 가로 경로: √k 개 구간 (구간 안은 0 간선) + 무게 opt/√k 간선 √k 개, 총 k+1 정점
    - 각 구간 첫 정점에서 위로 무게 opt/(4√k) 간선 k 개짜리 사슬
    - 각 구간 끝 정점에 무게 2·opt 간선으로 붙은 크기 √k+1 의 0 간선 클러스터

    Returns:
        (그래프, known_opt) - known_opt 는 가로 경로 증거 트리의 비용 (최적값 상한)
    """
    s = _perfect_root(k)
    if not opt_scale > 0:
        raise ArgumentError(f"opt_scale must be positive, got {opt_scale}")
    heavy = opt_scale / s
    upward = opt_scale / (4 * s)
    edges: list[tuple[int, int, float]] = []
    for j in range(s):
        first = j * s
        edges.extend((first + i, first + i + 1, 0.0) for i in range(s - 1))
        edges.append((first + s - 1, first + s, heavy))
    chain_base = k + 1
    for j in range(s):
        base = chain_base + j * k
        edges.append((j * s, base, upward))
        edges.extend((base + i, base + i + 1, upward) for i in range(k - 1))
    cluster_base = chain_base + s * k
    for j in range(s):
        base = cluster_base + j * (s + 1)
        edges.extend((base + i, base + i + 1, 0.0) for i in range(s))
        edges.append((j * s + s - 1, base, 2.0 * opt_scale))
    n = cluster_base + s * (s + 1)
    return WeightedGraph(n, tuple(edges)), float(opt_scale)


def fig2_witness(k: int, g: WeightedGraph) -> KTreeSolution:
    """gen_fig2 의 가로 경로 (k+1 정점, 비용 = known_opt)"""
    _perfect_root(k)
    edges = [e for e in g.edges if e[0] <= k and e[1] <= k]
    return KTreeSolution.from_edges(edges, "fig2-witness")


def gen_fig4(k: int, sigma: float = 1.0, seed: int = 0) -> tuple[PointSet2D, float]:
    """
    평면 휴리스틱 하한 점 집합 (한 변 σ 정사각형, 셀 한 변 σ/√k)

    - 대각선 셀 √k 개에 반경 σ/(1000k) 로 뭉친 점 √k 개씩 (앞쪽 k 개 점)
    - 대각선 밖 셀 √k 개를 골라 셀 안에 고르게 퍼진 점 √k 개씩

    Returns:
        (점 집합, known_opt_bound = 2σ)
    """
    s = _perfect_root(k)
    if not sigma > 0:
        raise ArgumentError(f"sigma must be positive, got {sigma}")
    rng = np.random.default_rng(seed)
    side = sigma / s
    spread = sigma / (1000.0 * k)
    points: list[tuple[float, float]] = []
    for i in range(s):
        cx = cy = (i + 0.5) * side
        angles = rng.uniform(0.0, 2.0 * math.pi, s)
        radii = spread * np.sqrt(rng.uniform(0.0, 1.0, s))
        points.extend(zip(cx + radii * np.cos(angles), cy + radii * np.sin(angles)))
    off_diagonal = [(row, col) for row in range(s) for col in range(s) if row != col]
    picks = rng.choice(len(off_diagonal), size=s, replace=False)
    for index in sorted(int(x) for x in picks):
        row, col = off_diagonal[index]
        xs = rng.uniform(col * side, (col + 1) * side, s)
        ys = rng.uniform(row * side, (row + 1) * side, s)
        points.extend(zip(xs, ys))
    return PointSet2D(tuple((float(x), float(y)) for x, y in points)), 2.0 * sigma


def fig4_witness(k: int, ps: PointSet2D) -> KTreeSolution:
    """대각선 클러스터 k 개 점의 MST"""
    _perfect_root(k)
    return point_mst(ps, range(k), solver_tag="fig4-witness")


# ========== 랜덤 인스턴스 ==========

def _random_graph(rng: np.random.Generator, params: Mapping[str, Any]) -> WeightedGraph:
    n = int(params.get("n", 8))
    p = float(params.get("p", 0.4))
    connected = bool(params.get("connected", True))
    choices = params.get("weights")
    w_max = int(params.get("w_max", 10))
    if n < 1 or not 0.0 <= p <= 1.0:
        raise ArgumentError(f"graph needs n >= 1 and 0 <= p <= 1, got n={n}, p={p}")

    def weight() -> float:
        if choices:
            return float(choices[int(rng.integers(len(choices)))])
        return float(rng.integers(1, w_max + 1))

    chosen: dict[tuple[int, int], float] = {}
    if connected:
        order = rng.permutation(n)
        for position in range(1, n):
            parent = order[int(rng.integers(position))]
            u, v = sorted((int(order[position]), int(parent)))
            chosen[(u, v)] = weight()
    for u in range(n):
        for v in range(u + 1, n):
            draw = rng.random()
            if (u, v) not in chosen and draw < p:
                chosen[(u, v)] = weight()
    return WeightedGraph(n, tuple((u, v, w) for (u, v), w in sorted(chosen.items())))


def _random_points(rng: np.random.Generator, params: Mapping[str, Any]) -> PointSet2D:
    n = int(params.get("n", 8))
    scale = float(params.get("scale", 100.0))
    metric = params.get("metric", "euclidean")
    if n < 1:
        raise ArgumentError(f"points need n >= 1, got {n}")
    coords = rng.uniform(0.0, scale, (n, 2))
    return PointSet2D(tuple((float(x), float(y)) for x, y in coords), metric)


def _random_sp(rng: np.random.Generator, params: Mapping[str, Any]) -> SPParseTree:
    size = int(params.get("m", 6))
    w_max = int(params.get("w_max", 10))
    if size < 1:
        raise ArgumentError(f"sp-parse needs m >= 1 edges, got {size}")
    fresh = [2]

    def build(t1: int, t2: int, m: int, direct_ok: bool) -> SPParseTree:
        if m == 1:
            return SPParseTree.edge(t1, t2, float(rng.integers(1, w_max + 1)))
        can_parallel = m >= 4 or (direct_ok and m >= 3)
        if can_parallel and rng.random() < 0.5:
            low = 1 if direct_ok else 2
            left_size = int(rng.integers(low, m - 1))
            return SPParseTree.parallel(
                build(t1, t2, left_size, direct_ok),
                build(t1, t2, m - left_size, False),
            )
        middle = fresh[0]
        fresh[0] += 1
        left_size = int(rng.integers(1, m))
        return SPParseTree.series(build(t1, middle, left_size, True), build(middle, t2, m - left_size, True))

    return build(0, 1, size, True)


def _random_convex(rng: np.random.Generator, params: Mapping[str, Any]) -> PointSet2D:
    n = int(params.get("n", 8))
    if n < 3:
        raise ArgumentError(f"convex position needs n >= 3, got {n}")
    scale = float(params.get("scale", 100.0))
    min_gap = 0.3 * 2.0 * math.pi / n
    for _ in range(1000):
        angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, n))
        gaps = np.diff(np.append(angles, angles[0] + 2.0 * math.pi))
        if gaps.min() >= min_gap:
            break
    else:
        angles = np.linspace(0.0, 2.0 * math.pi, n, endpoint=False)
    a_axis = scale * rng.uniform(0.5, 1.0)
    b_axis = scale * rng.uniform(0.5, 1.0)
    xs, ys = a_axis * np.cos(angles), b_axis * np.sin(angles)
    order = rng.permutation(n)
    return PointSet2D(tuple((float(xs[i]), float(ys[i])) for i in order))


def _random_circle(rng: np.random.Generator, params: Mapping[str, Any]) -> PointSet2D:
    n = int(params.get("n", 8))
    if n < 3:
        raise ArgumentError(f"circle instances need n >= 3, got {n}")
    radius = float(params.get("scale", 100.0)) * rng.uniform(0.5, 1.0)
    cx, cy = rng.uniform(-10.0, 10.0, 2)
    min_gap = 0.3 * 2.0 * math.pi / n
    for _ in range(5000):
        angles = np.sort(rng.uniform(0.0, 2.0 * math.pi, n))
        gaps = np.diff(np.append(angles, angles[0] + 2.0 * math.pi))
        separation = np.abs(angles[:, None] - angles[None, :])
        # 지름 양 끝에 가까운 쌍 배제
        if gaps.min() >= min_gap and np.abs(separation - math.pi).min() > 0.05:
            break
    else:
        raise ArgumentError(f"could not place {n} points without a near-diametral pair")
    order = rng.permutation(n)
    return PointSet2D(tuple((float(cx + radius * math.cos(angles[i])), float(cy + radius * math.sin(angles[i]))) for i in order))


def _random_hu(rng: np.random.Generator, params: Mapping[str, Any]) -> HuInstance:
    n = int(params.get("n", 5))
    preset = params.get("preset", "uniform-d")
    if preset not in HU_PRESETS:
        raise ArgumentError(f"preset must be one of {HU_PRESETS}, got {preset!r}")
    if n < 1:
        raise ArgumentError(f"hu instances need n >= 1, got {n}")
    a = float(params.get("a", 3.0))
    b = float(params.get("b", 1.0))
    c = float(params.get("c", 2.0))
    d_alt = float(params.get("d", 5.0))
    v_max = int(params.get("v_max", 9))

    def symmetric(draw) -> np.ndarray:
        upper = np.triu(draw((n, n)), 1)
        return upper + upper.T

    def pick(values):
        return lambda shape: np.asarray(values)[rng.integers(len(values), size=shape)]

    def integers(low):
        return lambda shape: rng.integers(low, v_max + 1, size=shape).astype(float)

    if preset == "uniform-d":
        d, r = symmetric(pick([c])), symmetric(integers(0))
    elif preset == "uniform-r":
        d, r = symmetric(integers(1)), symmetric(pick([a]))
    elif preset == "two-r":
        d, r = symmetric(pick([c])), symmetric(pick([a, b]))
    elif preset == "zero-c-two-r":
        d, r = symmetric(pick([0.0, c])), symmetric(pick([a, b]))
    else:
        d, r = symmetric(pick([c, d_alt])), symmetric(pick([a, b]))
    return HuInstance(d, r)


_RANDOM_BUILDERS: dict[str, Callable] = {
    "graph": _random_graph,
    "points": _random_points,
    "sp-parse": _random_sp,
    "convex": _random_convex,
    "circle": _random_circle,
    "hu": _random_hu,
}


def gen_random(kind: str, params: Optional[Mapping[str, Any]] = None, seed: int = 0):
    """
    시드 고정 랜덤 인스턴스

    Args:
        kind: graph | points | sp-parse | convex | circle | hu
        params: 종류별 파라미터 (n, p, w_max, weights, metric, scale, m, preset, a, b, c, d, v_max)
        seed: 난수 시드

    Returns:
        WeightedGraph / PointSet2D / SPParseTree / HuInstance
    """
    if kind not in _RANDOM_BUILDERS:
        raise ArgumentError(f"unknown kind {kind!r}; choose from {', '.join(KINDS)}")
    return _RANDOM_BUILDERS[kind](np.random.default_rng(seed), dict(params or {}))


def generate(spec: GenSpec):
    """GenSpec 실행 - fig2 → (그래프, known_opt), fig4 → (점 집합, bound), 그 외 → 인스턴스"""
    if spec.family == "fig2":
        return gen_fig2(int(spec.param("k", 4)), float(spec.param("opt_scale", 1.0)))
    if spec.family == "fig4":
        return gen_fig4(int(spec.param("k", 4)), float(spec.param("sigma", 1.0)), spec.seed)
    return gen_random(spec.family, dict(spec.params), spec.seed)
