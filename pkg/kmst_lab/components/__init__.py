# components 패키지 초기화
"""
공통 컴포넌트 모듈
예외 계층과 출력/로깅 유틸리티
"""

from .errors import (
    KmstError,
    ArgumentError,
    ParseError,
    ValidationError,
    InfeasibleError,
    ApplicabilityError,
    ResourceError,
    MergeStall,
)
from .utils import (
    describe_error,
    format_number,
    approx_equal,
    setup_logging,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_INFEASIBLE,
)

__all__ = [
    "KmstError",
    "ArgumentError",
    "ParseError",
    "ValidationError",
    "InfeasibleError",
    "ApplicabilityError",
    "ResourceError",
    "MergeStall",
    "describe_error",
    "format_number",
    "approx_equal",
    "setup_logging",
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_INFEASIBLE",
]
