"""
근사 비율 벤치마크 표 생성
- 최악 사례 계열: output/fig2_ratio.csv, output/fig4_ratio.csv
- 랜덤 인스턴스 오라클 비율: output/random_ratio.csv (+ 요약표)
"""

from __future__ import annotations

import logging
import math
from pathlib import Path

import numpy as np
import pandas as pd

from components.utils import setup_logging
from config import LOG_LEVEL, OUTPUT_DIR
from instance_gen import fig2_witness, fig4_witness, gen_fig2, gen_fig4, gen_random
from merge_collect import merge_collect
from plane_kmst import plane_kmst
from runner import SolverRunner

logger = logging.getLogger(__name__)

FIG2_KS = [4, 16, 36]
FIG4_KS = [4, 16, 36, 64]
FIG4_SIGMA = 2.0
FIG4_SEED = 0
RANDOM_SEEDS = range(20)
RANDOM_N = 9


def fig2_table(ks=FIG2_KS, opt_scale: float = 1.0) -> pd.DataFrame:
    """Merge-Collect 하한 계열의 비용 / known_opt"""
    rows = []
    for k in ks:
        g, known = gen_fig2(k, opt_scale)
        witness = fig2_witness(k, g)
        cost = merge_collect(g, k).cost
        rows.append(
            {
                "k": k,
                "n": g.vertex_count,
                "cost": cost,
                "known_opt": known,
                "witness_cost": witness.cost,
                "ratio": cost / known,
                "bound": 2 * math.sqrt(k),
            }
        )
    return pd.DataFrame(rows)


def fig4_table(ks=FIG4_KS, sigma: float = FIG4_SIGMA, seed: int = FIG4_SEED) -> pd.DataFrame:
    """평면 휴리스틱 하한 계열의 비용 / 2σ"""
    rows = []
    for k in ks:
        ps, bound = gen_fig4(k, sigma, seed)
        cost = plane_kmst(ps, k).cost
        rows.append(
            {
                "k": k,
                "n": ps.n,
                "cost": cost,
                "known_opt_bound": bound,
                "witness_cost": fig4_witness(k, ps).cost,
                "ratio": cost / bound,
                "k_quarter": k ** 0.25,
            }
        )
    return pd.DataFrame(rows)


def random_ratio_table(seeds=RANDOM_SEEDS, n: int = RANDOM_N) -> pd.DataFrame:
    """랜덤 그래프 / 점 집합에서 오라클 대비 비율"""
    runner = SolverRunner(oracle=True)
    frames = []
    for method, kind in (("kmst_approx", "graph"), ("kmst_plane", "points")):
        runs = []
        for seed in seeds:
            instance = gen_random(kind, {"n": n}, seed)
            runs.extend((instance, k) for k in range(2, n + 1))
        frame = runner.ratio_table(method, runs)
        frame["method"] = method
        frames.append(frame)
    table = pd.concat(frames, ignore_index=True)
    table["bound"] = np.where(
        table["method"] == "kmst_approx",
        2 * np.sqrt(table["k"]),
        8 * np.power(table["k"], 0.25),
    )
    return table


def summarize(table: pd.DataFrame) -> pd.DataFrame:
    """방법 / k 별 최대 비율"""
    return (
        table.groupby(["method", "k"])["ratio"]
        .agg(["count", "mean", "max"])
        .reset_index()
    )


def main() -> None:
    setup_logging(LOG_LEVEL)
    output_dir = Path(OUTPUT_DIR)
    output_dir.mkdir(parents=True, exist_ok=True)

    fig2 = fig2_table()
    fig2.to_csv(output_dir / "fig2_ratio.csv", index=False)

    fig4 = fig4_table()
    fig4.to_csv(output_dir / "fig4_ratio.csv", index=False)

    random_table = random_ratio_table()
    random_table.to_csv(output_dir / "random_ratio.csv", index=False)
    summarize(random_table).to_csv(output_dir / "random_ratio_summary.csv", index=False)

    violations = random_table[random_table["ratio"] > random_table["bound"]]
    if not violations.empty:
        logger.warning("%d runs exceed their ratio bound", len(violations))
    logger.info("wrote benchmark tables to %s", output_dir.resolve())


if __name__ == "__main__":
    main()
