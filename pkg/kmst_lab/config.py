import os

from dotenv import load_dotenv

load_dotenv()


# .env 또는 환경변수 우선, 없으면 코드 기본값 사용
def get_setting(key, default):
    value = os.getenv(key)
    if value is None or value == "":
        return default
    return type(default)(value) if default is not None else value


# 로그 레벨
LOG_LEVEL = get_setting("KMST_LOG_LEVEL", "WARNING")

# 수치 비교 허용 오차 (상대)
REL_TOL = get_setting("KMST_REL_TOL", 1e-9)

# 오라클 기본 예산
ORACLE_MAX_VERTICES = get_setting("KMST_ORACLE_MAX_VERTICES", 18)
ORACLE_MAX_SUBSETS = get_setting("KMST_ORACLE_MAX_SUBSETS", 500_000)
ORACLE_MAX_TREES = get_setting("KMST_ORACLE_MAX_TREES", 300_000)

# 볼록 DP 규모 가드
CONVEX_MAX_POINTS = get_setting("KMST_CONVEX_MAX_POINTS", 25)

# 벤치마크 결과 폴더
OUTPUT_DIR = get_setting("KMST_OUTPUT_DIR", "output")

# 원 위 판정 / 디스크 포함 판정 허용 오차 (절대)
GEOM_TOL = 1e-9
