"""
솔버 실행기
- 솔버별 진입점 (kMST / 최소 지름 k-트리 / Hu 신장 트리 / 오라클)
- 실행 보고서 RunReport (인스턴스 다이제스트, 값, 오라클 비율)
- 반복 실행 결과를 DataFrame 으로 (ratio_table)
"""

from __future__ import annotations

import hashlib
import logging
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Iterable, Optional

import pandas as pd

from components.errors import ApplicabilityError, ResourceError
from components.utils import format_number
from exact_convex import circle_kmst, convex_kmst
from exact_special import SPParseTree, sp_kmst, tree_kmst, two_weight_kmst
from graph_core import HuInstance, KTreeSolution, PointSet2D, WeightedGraph
from instance_io import format_instance
from merge_collect import k_steiner, merge_collect
from oracles import OracleBudget, oracle_hu_tree, oracle_kmst, oracle_min_diam_ktree
from plane_kmst import plane_kmst
from short_trees import (
    evaluate_hu,
    min_comm_tree_two_r_zero_c,
    min_comm_tree_uniform_d,
    min_diameter_ktree,
    min_diamcost_tree_uniform_d_two_r,
    min_diamcost_tree_uniform_r,
)

logger = logging.getLogger(__name__)


def instance_digest(instance) -> str:
    """인스턴스 파일 텍스트의 sha256 앞 16자리"""
    return hashlib.sha256(format_instance(instance).encode("utf-8")).hexdigest()[:16]


@dataclass(frozen=True)
class RunReport:
    """실행 보고서 - 비율은 오라클이 실행된 경우에만"""

    solver_tag: str
    digest: str
    k: Optional[int]
    objective: str
    value: float
    oracle_value: Optional[float] = None
    wall_time: float = field(default=0.0, compare=False)

    @property
    def ratio(self) -> Optional[float]:
        if self.oracle_value is None:
            return None
        if self.oracle_value == 0:
            return 1.0 if self.value == 0 else math.inf
        return self.value / self.oracle_value

    def lines(self) -> list[str]:
        """기계 판독용 꼬리 줄 (시간 제외)"""
        if self.oracle_value is None:
            return []
        return [f"# oracle {format_number(self.oracle_value)}", f"# ratio {format_number(self.ratio)}"]

    def as_row(self) -> dict[str, Any]:
        row = asdict(self)
        row["ratio"] = self.ratio
        return row


class SolverRunner:
    """솔버 호출 공통 래퍼 - 결과 해와 RunReport 를 함께 반환"""

    def __init__(self, oracle: bool = False, budget: Optional[OracleBudget] = None):
        self.oracle = oracle
        self.budget = budget

    def _run(
        self,
        instance,
        k: Optional[int],
        objective: str,
        solve: Callable[[], tuple[KTreeSolution, float]],
        reference: Optional[Callable[[], float]] = None,
    ) -> tuple[KTreeSolution, RunReport]:
        """솔버 실행 공통 함수"""
        start = time.perf_counter()
        solution, value = solve()
        elapsed = time.perf_counter() - start
        oracle_value = None
        if self.oracle and reference is not None:
            try:
                oracle_value = float(reference())
            except ResourceError as e:
                # 예산 초과면 비율 없이 보고
                logger.warning("oracle skipped: %s", e)
        report = RunReport(
            solver_tag=solution.solver_tag,
            digest=instance_digest(instance),
            k=k,
            objective=objective,
            value=float(value),
            oracle_value=oracle_value,
            wall_time=elapsed,
        )
        logger.info("%s k=%s %s=%s in %.3fs", report.solver_tag, k, objective, format_number(value), elapsed)
        return solution, report

    def _kmst(self, instance, k, solver, reference=None):
        def solve():
            solution = solver()
            return solution, solution.cost

        return self._run(instance, k, "cost", solve, reference)

    def _oracle_cost(self, g: WeightedGraph, k: int, terminals=None) -> Callable[[], float]:
        return lambda: oracle_kmst(g, k, terminals=terminals, budget=self.budget)[0]

    # ========== kMST ==========

    def kmst_approx(self, g: WeightedGraph, k: int):
        return self._kmst(g, k, lambda: merge_collect(g, k), self._oracle_cost(g, k))

    def kmst_steiner(self, g: WeightedGraph, terminals: Iterable[int], k: int):
        terminals = sorted(set(terminals))
        return self._kmst(g, k, lambda: k_steiner(g, terminals, k), self._oracle_cost(g, k, terminals))

    def kmst_two_weight(self, g: WeightedGraph, k: int):
        return self._kmst(g, k, lambda: two_weight_kmst(g, k), self._oracle_cost(g, k))

    def kmst_tree(self, g: WeightedGraph, k: int):
        return self._kmst(g, k, lambda: tree_kmst(g, k), self._oracle_cost(g, k))

    def kmst_sp(self, tree: SPParseTree, k: int):
        return self._kmst(tree, k, lambda: sp_kmst(tree, k), self._oracle_cost(tree.to_graph(), k))

    def kmst_plane(self, ps: PointSet2D, k: int):
        return self._kmst(ps, k, lambda: plane_kmst(ps, k), self._oracle_cost(ps.as_graph(), k))

    def kmst_convex(self, ps: PointSet2D, k: int):
        return self._kmst(ps, k, lambda: convex_kmst(ps, k), self._oracle_cost(ps.with_metric("euclidean").as_graph(), k))

    def kmst_circle(self, ps: PointSet2D, k: int):
        return self._kmst(ps, k, lambda: circle_kmst(ps, k), self._oracle_cost(ps.with_metric("euclidean").as_graph(), k))

    # ========== 짧은 트리 ==========

    def ktree_diam(self, g: WeightedGraph, k: int):
        reference = lambda: oracle_min_diam_ktree(g, k, budget=self.budget)[0]
        return self._run(g, k, "diameter", lambda: min_diameter_ktree(g, k), reference)

    def hu_comm(self, inst: HuInstance):
        """d 구조에 맞는 최소 통신 비용 신장 트리 선택"""
        d_values = inst.pair_values("d")
        if len(d_values) <= 1 and all(x > 0 for x in d_values):
            solver = min_comm_tree_uniform_d
        elif len([x for x in d_values if x > 0]) <= 1 and len(inst.pair_values("r")) <= 2:
            solver = min_comm_tree_two_r_zero_c
        else:
            raise ApplicabilityError(
                "hu comm needs uniform d, or d in {0, c} with two r values; "
                "use `oracle hu --objective comm` for small instances"
            )
        return self._hu(inst, "comm", solver)

    def hu_diamcost(self, inst: HuInstance):
        """uniform d + r 두 값, 또는 uniform r 인 경우의 최소 지름 비용 신장 트리"""
        d_values = inst.pair_values("d")
        r_values = inst.pair_values("r")
        if len(r_values) <= 1:
            solver = min_diamcost_tree_uniform_r
        elif len(d_values) <= 1 and all(x > 0 for x in d_values) and len(r_values) == 2:
            solver = min_diamcost_tree_uniform_d_two_r
        else:
            raise ApplicabilityError(
                "hu diamcost needs uniform r, or uniform d with two r values; "
                "use `oracle hu --objective diamcost` for small instances"
            )
        return self._hu(inst, "diamcost", solver)

    def _hu(self, inst: HuInstance, objective: str, solver):
        def solve():
            tree = solver(inst)
            comm, diamcost = evaluate_hu(tree, inst)
            return tree, comm if objective == "comm" else diamcost

        reference = lambda: oracle_hu_tree(inst, objective, budget=self.budget)[0]
        return self._run(inst, inst.n, objective, solve, reference)

    # ========== 오라클 ==========

    def oracle_kmst(self, instance, k: int, terminals: Optional[Iterable[int]] = None):
        g = instance.as_graph() if isinstance(instance, PointSet2D) else instance
        budget = self.budget

        def solve():
            cost, solution = oracle_kmst(g, k, terminals=terminals, budget=budget)
            return solution, cost

        return self._run(instance, k, "cost", solve)

    def oracle_diam(self, g: WeightedGraph, k: int):
        def solve():
            diameter, solution = oracle_min_diam_ktree(g, k, budget=self.budget)
            return solution, diameter

        return self._run(g, k, "diameter", solve)

    def oracle_hu(self, inst: HuInstance, objective: str):
        def solve():
            value, solution = oracle_hu_tree(inst, objective, budget=self.budget)
            return solution, value

        return self._run(inst, inst.n, objective, solve)

    # ========== 편의 함수 ==========

    def ratio_table(self, method: str, runs: Iterable[tuple[Any, int]]) -> pd.DataFrame:
        """
        같은 솔버를 여러 인스턴스에 반복 실행한 결과표

        Args:
            method: SolverRunner 메서드 이름 (예: "kmst_approx")
            runs: (인스턴스, k) 목록

        Returns:
            solver_tag, digest, k, objective, value, oracle_value, ratio 열의 DataFrame (wall_time 제외)
        """
        solve = getattr(self, method)
        rows = []
        for instance, k in runs:
            _, report = solve(instance, k)
            row = report.as_row()
            row.pop("wall_time")
            rows.append(row)
        columns = ["solver_tag", "digest", "k", "objective", "value", "oracle_value", "ratio"]
        return pd.DataFrame(rows, columns=columns)
