"""벤치마크 표 테스트"""

import pytest

from bench import FIG2_KS, FIG4_KS, fig2_table, fig4_table, random_ratio_table, summarize

# merge_collect 가 찾는 비용 / known_opt (k = 4, 16, 36)
FIG2_GOLDEN_RATIOS = [0.25, 0.75, 5 / 6]


def test_fig2_table():
    table = fig2_table([4])
    assert list(table.columns) == ["k", "n", "cost", "known_opt", "witness_cost", "ratio", "bound"]
    row = table.iloc[0]
    assert row["n"] == 19
    assert row["witness_cost"] == row["known_opt"]
    assert row["ratio"] <= row["bound"] + 1e-9


def test_fig2_ratio_grows_with_k():
    table = fig2_table()
    assert table["k"].tolist() == FIG2_KS
    assert table["n"].tolist() == [19, 101, 295]
    assert table["ratio"].is_monotonic_increasing
    assert table["ratio"].tolist() == pytest.approx(FIG2_GOLDEN_RATIOS, rel=1e-9)


def test_fig4_table():
    table = fig4_table([4], sigma=2.0, seed=1)
    row = table.iloc[0]
    assert row["n"] == 8
    assert row["known_opt_bound"] == 4.0
    assert row["witness_cost"] <= row["known_opt_bound"]


# TODO: FIG4_SEED 첫 실행 비율을 기준값으로 기록
def test_fig4_ratio_grows_with_k():
    table = fig4_table()
    assert table["k"].tolist() == FIG4_KS
    assert table["n"].tolist() == [2 * k for k in FIG4_KS]
    assert table["ratio"].is_monotonic_increasing
    assert (table["witness_cost"] <= table["known_opt_bound"]).all()
    assert table.equals(fig4_table())


def test_random_ratio_table_and_summary():
    table = random_ratio_table(seeds=range(2), n=5)
    assert len(table) == 2 * 2 * 4
    assert set(table["method"]) == {"kmst_approx", "kmst_plane"}
    assert (table["ratio"] >= 1.0 - 1e-9).all()
    assert (table["ratio"] <= table["bound"] + 1e-9).all()
    summary = summarize(table)
    assert list(summary.columns) == ["method", "k", "count", "mean", "max"]
    assert summary["count"].tolist() == [2] * 8
