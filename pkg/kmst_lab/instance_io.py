"""
인스턴스 파일 입출력
- 그래프: 첫 줄 `n m`, 이후 `u v w` m 줄
- 점 집합: 첫 줄 `n [euclidean|rectilinear]`, 이후 `x y` n 줄
- Hu 인스턴스: 첫 줄 `n`, 이후 i<j 쌍마다 `i j d r`
- SP 파스 트리: s-식 한 개
빈 줄과 `#` 주석은 무시한다.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Union

import numpy as np

from components.errors import ParseError
from exact_special import SPParseTree, parse_sp_tree
from graph_core import METRICS, HuInstance, PointSet2D, WeightedGraph

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]
FORMATS = ("graph", "points", "hu", "sp")


def number_text(value: float) -> str:
    """정수값은 정수로, 그 외는 왕복 가능한 repr"""
    value = float(value)
    return str(int(value)) if value.is_integer() else repr(value)


def _lines(text: str) -> list[tuple[int, list[str]]]:
    rows = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            rows.append((number, body.split()))
    return rows


def _int(token: str, number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"line {number}: {what} must be an integer, got {token!r}") from None


def _float(token: str, number: int, what: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"line {number}: {what} must be a number, got {token!r}") from None


def _header(rows: list, kind: str) -> tuple[int, list[str]]:
    if not rows:
        raise ParseError(f"{kind} file is empty")
    return rows[0]


# ========== 그래프 ==========

def parse_graph(text: str) -> WeightedGraph:
    rows = _lines(text)
    number, head = _header(rows, "graph")
    if len(head) != 2:
        raise ParseError(f"line {number}: graph header is `n m`")
    n, m = _int(head[0], number, "n"), _int(head[1], number, "m")
    body = rows[1:]
    if len(body) != m:
        raise ParseError(f"graph header announces {m} edges, found {len(body)}")
    edges = []
    for number, fields in body:
        if len(fields) != 3:
            raise ParseError(f"line {number}: edge line is `u v w`")
        edges.append((_int(fields[0], number, "u"), _int(fields[1], number, "v"), _float(fields[2], number, "w")))
    return WeightedGraph(n, tuple(edges))


def format_graph(g: WeightedGraph) -> str:
    lines = [f"{g.vertex_count} {len(g.edges)}"]
    lines += [f"{u} {v} {number_text(w)}" for u, v, w in g.edges]
    return "\n".join(lines) + "\n"


# ========== 점 집합 ==========

def parse_points(text: str) -> PointSet2D:
    rows = _lines(text)
    number, head = _header(rows, "points")
    if len(head) not in (1, 2):
        raise ParseError(f"line {number}: points header is `n [euclidean|rectilinear]`")
    n = _int(head[0], number, "n")
    metric = head[1] if len(head) == 2 else "euclidean"
    if metric not in METRICS:
        raise ParseError(f"line {number}: unknown metric {metric!r}")
    body = rows[1:]
    if len(body) != n:
        raise ParseError(f"points header announces {n} points, found {len(body)}")
    points = []
    for number, fields in body:
        if len(fields) != 2:
            raise ParseError(f"line {number}: point line is `x y`")
        points.append((_float(fields[0], number, "x"), _float(fields[1], number, "y")))
    return PointSet2D(tuple(points), metric)


def format_points(ps: PointSet2D) -> str:
    lines = [f"{ps.n} {ps.metric}"]
    lines += [f"{number_text(x)} {number_text(y)}" for x, y in ps.points]
    return "\n".join(lines) + "\n"


# ========== Hu 인스턴스 ==========

def parse_hu(text: str) -> HuInstance:
    rows = _lines(text)
    number, head = _header(rows, "hu")
    if len(head) != 1:
        raise ParseError(f"line {number}: hu header is `n`")
    n = _int(head[0], number, "n")
    if n < 0:
        raise ParseError(f"line {number}: n must be nonnegative")
    d = np.zeros((n, n))
    r = np.zeros((n, n))
    seen = set()
    for number, fields in rows[1:]:
        if len(fields) != 4:
            raise ParseError(f"line {number}: pair line is `i j d r`")
        i, j = _int(fields[0], number, "i"), _int(fields[1], number, "j")
        if not 0 <= i < j < n:
            raise ParseError(f"line {number}: need 0 <= i < j < {n}, got ({i}, {j})")
        if (i, j) in seen:
            raise ParseError(f"line {number}: pair ({i}, {j}) repeated")
        seen.add((i, j))
        d[i, j] = d[j, i] = _float(fields[2], number, "d")
        r[i, j] = r[j, i] = _float(fields[3], number, "r")
    expected = n * (n - 1) // 2
    if len(seen) != expected:
        raise ParseError(f"hu file lists {len(seen)} pairs, expected {expected}")
    return HuInstance(d, r)


def format_hu(inst: HuInstance) -> str:
    lines = [str(inst.n)]
    for i in range(inst.n):
        for j in range(i + 1, inst.n):
            lines.append(f"{i} {j} {number_text(inst.d[i, j])} {number_text(inst.r[i, j])}")
    return "\n".join(lines) + "\n"


# ========== 공통 ==========

_PARSERS = {"graph": parse_graph, "points": parse_points, "hu": parse_hu, "sp": parse_sp_tree}
_FORMATTERS = {
    "graph": format_graph,
    "points": format_points,
    "hu": format_hu,
    "sp": lambda tree: tree.to_text() + "\n",
}


def read_instance(path: PathLike, kind: str):
    """파일 읽기 - kind: graph | points | hu | sp"""
    if kind not in _PARSERS:
        raise ParseError(f"unknown instance format {kind!r}")
    text = Path(path).read_text(encoding="utf-8")
    logger.debug("read %s instance from %s", kind, path)
    return _PARSERS[kind](text)


def format_instance(instance) -> str:
    return _FORMATTERS[instance_kind(instance)](instance)


def write_instance(instance, path: PathLike) -> Path:
    """인스턴스를 파일로 저장 (상위 폴더 생성)"""
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(format_instance(instance), encoding="utf-8")
    return target


def instance_kind(instance) -> str:
    if isinstance(instance, WeightedGraph):
        return "graph"
    if isinstance(instance, PointSet2D):
        return "points"
    if isinstance(instance, HuInstance):
        return "hu"
    if isinstance(instance, SPParseTree):
        return "sp"
    raise ParseError(f"no file format for {type(instance).__name__}")
