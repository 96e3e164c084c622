"""pytest 공통 설정 - hypothesis 프로필과 작은 인스턴스 픽스처"""

import os

import pytest
from hypothesis import HealthCheck, settings

from graph_core import PointSet2D, WeightedGraph

settings.register_profile(
    "default",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=100, deadline=None)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def p5() -> WeightedGraph:
    """단위 가중치 경로 0-1-2-3-4"""
    return WeightedGraph(5, tuple((i, i + 1, 1.0) for i in range(4)))


@pytest.fixture
def unit_square() -> PointSet2D:
    return PointSet2D(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)))


@pytest.fixture
def write_text(tmp_path):
    """텍스트를 임시 파일로 저장하고 경로 문자열 반환"""

    def write(name: str, text: str) -> str:
        target = tmp_path / name
        target.write_text(text, encoding="utf-8")
        return str(target)

    return write
