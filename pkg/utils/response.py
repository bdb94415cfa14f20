import logging

from apps.cli.report import ReportStatus, RunReport
from utils.exceptions import EXIT_MATH_FAILURE, EXIT_OK

# 공통 응답 상수 정의
RELATION_VERIFIED = {"code": EXIT_OK, "message": "관계식 w^2 = sum xi_i w_i 가 성립합니다."}
RELATION_FAILED = {"code": EXIT_MATH_FAILURE, "message": "관계식의 잔차가 0 이 아닙니다."}
LEMMA1_VERIFIED = {"code": EXIT_OK, "message": "tr(x^2y^2), tr(x^2y^2xy) 의 표현식이 성립합니다."}
LEMMA1_FAILED = {"code": EXIT_MATH_FAILURE, "message": "tr(x^2y^2), tr(x^2y^2xy) 표현식의 잔차가 0 이 아닙니다."}
CH_VERIFIED = {"code": EXIT_OK, "message": "Cayley-Hamilton 항등식이 성립합니다."}
CH_FAILED = {"code": EXIT_MATH_FAILURE, "message": "Cayley-Hamilton 잔차가 0 이 아닙니다."}
HWV_FOUND = {"code": EXIT_OK, "message": "최고 무게 벡터 공간을 구했습니다."}
XI_SOLVED = {"code": EXIT_OK, "message": "xi 계수를 유일하게 결정했습니다."}
XI_MISMATCH = {"code": EXIT_MATH_FAILURE, "message": "구한 xi 로 관계식이 성립하지 않습니다."}
SERIES_EQUAL = {"code": EXIT_OK, "message": "두 힐베르트 급수가 같습니다."}
SERIES_DIFFER = {"code": EXIT_MATH_FAILURE, "message": "두 힐베르트 급수가 다릅니다."}
DECOMPOSED = {"code": EXIT_OK, "message": "기약 GL2 표현으로 분해했습니다."}
UNEXPECTED_ERROR = {"code": EXIT_MATH_FAILURE, "message": "예상하지 못한 오류가 발생했습니다."}

logger = logging.getLogger(__name__)


class BaseReportMixin:
    logger = logging.getLogger("apps")

    def success(self, command, result=None, payload=None, lines=None):
        result = result or {"code": EXIT_OK, "message": "성공"}
        self.logger.info(f"SUCCESS: {command}: {result['message']}")
        return RunReport(
            command=command,
            status=ReportStatus.PASS,
            message=result["message"],
            code=result["code"],
            payload=payload or {},
            lines=lines or [],
        )

    def failure(self, command, result=None, payload=None, lines=None):
        result = result or UNEXPECTED_ERROR
        self.logger.warning(f"FAILURE: {command}: {result['message']}")
        return RunReport(
            command=command,
            status=ReportStatus.FAIL,
            message=result["message"],
            code=result["code"],
            payload=payload or {},
            lines=lines or [],
        )

    def verdict(self, command, passed, ok, failed, payload=None, lines=None):
        """passed 에 따라 success / failure 중 하나."""
        build = self.success if passed else self.failure
        return build(command, ok if passed else failed, payload, lines)
