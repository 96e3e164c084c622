"""솔버 실행기 / 실행 보고서 테스트"""

import math

import numpy as np
import pytest

from components.errors import ApplicabilityError
from graph_core import HuInstance, WeightedGraph
from oracles import OracleBudget
from runner import RunReport, SolverRunner, instance_digest


def report(value, oracle_value):
    return RunReport("test", "0" * 16, 3, "cost", value, oracle_value)


# ========== RunReport ==========

def test_ratio_semantics():
    assert report(3.0, 2.0).ratio == 1.5
    assert report(0.0, 0.0).ratio == 1.0
    assert math.isinf(report(1.0, 0.0).ratio)
    assert report(1.0, None).ratio is None


def test_report_lines():
    assert report(3.0, 2.0).lines() == ["# oracle 2", "# ratio 1.5"]
    assert report(3.0, None).lines() == []


def test_wall_time_is_not_compared():
    a = RunReport("t", "d", 1, "cost", 1.0, wall_time=0.1)
    b = RunReport("t", "d", 1, "cost", 1.0, wall_time=9.0)
    assert a == b


def test_instance_digest(p5):
    digest = instance_digest(p5)
    assert len(digest) == 16
    assert digest == instance_digest(WeightedGraph(5, tuple((i, i + 1, 1.0) for i in range(4))))
    assert digest != instance_digest(WeightedGraph(5, ((0, 1, 1.0),)))


# ========== SolverRunner ==========

def test_kmst_approx_with_oracle(p5):
    solution, rep = SolverRunner(oracle=True).kmst_approx(p5, 3)
    assert solution.cost == 2.0
    assert (rep.solver_tag, rep.k, rep.objective, rep.value) == ("merge-collect", 3, "cost", 2.0)
    assert rep.oracle_value == 2.0
    assert rep.ratio == 1.0


def test_oracle_is_off_by_default(p5):
    _, rep = SolverRunner().kmst_approx(p5, 3)
    assert rep.oracle_value is None


def test_oracle_budget_exceeded_is_reported_without_ratio(p5):
    budget = OracleBudget(max_vertices=3)
    _, rep = SolverRunner(oracle=True, budget=budget).kmst_approx(p5, 3)
    assert rep.oracle_value is None
    assert rep.ratio is None
    assert budget.exceeded


def test_ktree_diam_objective(p5):
    solution, rep = SolverRunner(oracle=True).ktree_diam(p5, 3)
    assert rep.objective == "diameter"
    assert rep.value == 2.0
    assert rep.ratio == 1.0
    assert solution.size == 3


def test_oracle_kmst_on_points(unit_square):
    solution, rep = SolverRunner().oracle_kmst(unit_square, 3)
    assert rep.value == pytest.approx(2.0)
    assert solution.solver_tag == "oracle-kmst"


def test_hu_dispatch():
    n = 4
    ones = np.ones((n, n)) - np.eye(n)
    runner = SolverRunner(oracle=True)
    tree, rep = runner.hu_comm(HuInstance(2 * ones, 3 * ones))
    assert tree.solver_tag == "min-comm"
    assert rep.value == pytest.approx(rep.oracle_value)
    _, rep = runner.hu_diamcost(HuInstance(2 * ones, 3 * ones))
    assert rep.objective == "diamcost"
    assert rep.value == pytest.approx(rep.oracle_value)


def test_hu_dispatch_refuses_general_instances():
    d = np.array([[0, 1, 2], [1, 0, 3], [2, 3, 0]], dtype=float)
    r = np.array([[0, 1, 2], [1, 0, 3], [2, 3, 0]], dtype=float)
    runner = SolverRunner()
    with pytest.raises(ApplicabilityError, match="oracle hu"):
        runner.hu_comm(HuInstance(d, r))
    with pytest.raises(ApplicabilityError, match="oracle hu"):
        runner.hu_diamcost(HuInstance(d, r))


def test_ratio_table(p5):
    table = SolverRunner(oracle=True).ratio_table("kmst_approx", [(p5, 2), (p5, 3)])
    assert list(table.columns) == ["solver_tag", "digest", "k", "objective", "value", "oracle_value", "ratio"]
    assert len(table) == 2
    assert table["ratio"].tolist() == [1.0, 1.0]
    assert table["digest"].nunique() == 1
