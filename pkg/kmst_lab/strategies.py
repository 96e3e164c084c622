"""
테스트용 hypothesis 전략
시드 하나로 gen_random 인스턴스를 만들어 재현 가능하게 한다.
"""

from hypothesis import strategies as st

from instance_gen import gen_random

seeds = st.integers(min_value=0, max_value=2**32 - 1)


@st.composite
def graphs(draw, min_n: int = 2, max_n: int = 8, connected: bool = True, weights=None, densities=(0.2, 0.4, 0.7)):
    """작은 랜덤 가중 그래프 (정수 가중치)"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    p = draw(st.sampled_from(list(densities)))
    params = {"n": n, "p": p, "connected": connected}
    if weights is not None:
        params["weights"] = list(weights)
    return gen_random("graph", params, draw(seeds))


@st.composite
def graphs_with_k(draw, min_n: int = 2, max_n: int = 8, **kwargs):
    """(연결 그래프, 1..n 범위 k)"""
    g = draw(graphs(min_n=min_n, max_n=max_n, connected=True, **kwargs))
    k = draw(st.integers(min_value=1, max_value=g.vertex_count))
    return g, k


@st.composite
def trees(draw, min_n: int = 1, max_n: int = 10):
    """랜덤 트리 (p = 0 인 연결 그래프)"""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return gen_random("graph", {"n": n, "p": 0.0, "connected": True}, draw(seeds))


@st.composite
def point_sets(draw, min_n: int = 2, max_n: int = 8, metric: str = "euclidean"):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return gen_random("points", {"n": n, "metric": metric}, draw(seeds))


@st.composite
def convex_sets(draw, min_n: int = 3, max_n: int = 8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return gen_random("convex", {"n": n}, draw(seeds))


@st.composite
def circle_sets(draw, min_n: int = 3, max_n: int = 8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return gen_random("circle", {"n": n}, draw(seeds))


@st.composite
def sp_trees(draw, min_m: int = 1, max_m: int = 9):
    m = draw(st.integers(min_value=min_m, max_value=max_m))
    return gen_random("sp-parse", {"m": m}, draw(seeds))


@st.composite
def hu_instances(draw, preset: str, min_n: int = 2, max_n: int = 5):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    return gen_random("hu", {"n": n, "preset": preset}, draw(seeds))
