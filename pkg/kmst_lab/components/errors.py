"""
kmst_lab 공통 예외 계층
모든 솔버/생성기/CLI가 이 예외들만 던집니다.
"""


class KmstError(Exception):
    """kmst_lab 최상위 예외"""


class ArgumentError(KmstError, ValueError):
    """잘못된 인자 (k = 0, 범위 밖 정점 번호 등)"""


class ParseError(ArgumentError):
    """인스턴스 텍스트 / 논리식 / 파스 트리 문법 오류"""


class ValidationError(KmstError, ValueError):
    """구조 불변식 위반 (사이클이 있는 트리, 병렬 간선 등)"""


class InfeasibleError(KmstError):
    """해가 존재하지 않는 인스턴스"""


class ApplicabilityError(KmstError):
    """솔버의 구조적 전제조건 불충족 - 메시지에 대체 솔버를 안내"""


class ResourceError(KmstError):
    """오라클 예산 / 탁상 규모 가드 초과"""


class MergeStall(KmstError):
    """병합 단계에서 클러스터 사이 간선이 더 이상 없음"""
