"""
공통 유틸리티
- 예외 → 종료 코드/메시지 변환
- 숫자 출력 형식 (유효숫자 9자리)
- 로깅 초기화
- 허용 오차 비교
"""

import logging
import math

from .errors import (
    ApplicabilityError,
    ArgumentError,
    InfeasibleError,
    KmstError,
    ParseError,
    ResourceError,
    ValidationError,
)

logger = logging.getLogger(__name__)

# 종료 코드
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2


# ===== 에러 표시 헬퍼 함수 =====
def describe_error(error: Exception, context: str = "") -> tuple[int, str]:
    """예외를 (종료 코드, 진단 메시지)로 변환"""
    prefix = f"{context}: " if context else ""

    if isinstance(error, InfeasibleError):
        return EXIT_INFEASIBLE, f"infeasible: {error}"
    if isinstance(error, ParseError):
        return EXIT_USAGE, f"{prefix}parse error: {error}"
    if isinstance(error, ArgumentError):
        return EXIT_USAGE, f"{prefix}argument error: {error}"
    if isinstance(error, ApplicabilityError):
        return EXIT_USAGE, f"{prefix}not applicable: {error}"
    if isinstance(error, ResourceError):
        return EXIT_USAGE, f"{prefix}budget exceeded: {error}"
    if isinstance(error, ValidationError):
        return EXIT_USAGE, f"{prefix}invalid instance: {error}"
    if isinstance(error, KmstError):
        return EXIT_USAGE, f"{prefix}{type(error).__name__}: {error}"
    if isinstance(error, OSError):
        return EXIT_USAGE, f"{prefix}i/o error: {error}"
    logger.debug("unexpected error type %s", type(error).__name__)
    return EXIT_USAGE, f"{prefix}error: {error}"


# ===== 숫자 형식 =====
def format_number(value: float) -> str:
    """유효숫자 9자리 출력 (정수값은 소수점 없이)"""
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    text = f"{value:.9g}"
    if text == "-0":
        return "0"
    return text


def approx_equal(a: float, b: float, rel_tol: float = 1e-9, abs_tol: float = 1e-12) -> bool:
    """상대 오차 비교 - 무한대끼리는 같은 부호일 때만 같음"""
    if math.isinf(a) or math.isinf(b):
        return a == b
    return math.isclose(a, b, rel_tol=rel_tol, abs_tol=abs_tol)


# ===== 로깅 =====
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def setup_logging(level: str = "WARNING") -> None:
    """루트 로거 1회 설정"""
    numeric = logging.getLevelName(str(level).upper())
    if not isinstance(numeric, int):
        numeric = logging.WARNING
    logging.basicConfig(level=numeric, format=LOG_FORMAT)
    logging.getLogger().setLevel(numeric)
