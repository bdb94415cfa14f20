import logging
import sys
import traceback

from apps.cli.report import ReportStatus, RunReport
from utils.exceptions import EXIT_MATH_FAILURE, InvariantsException

logger = logging.getLogger(__name__)


def _format_report(command, code, message, data=None):
    payload = {"data": data} if data is not None else {}
    return RunReport(command=command, status=ReportStatus.FAIL, message=message, code=code, payload=payload)


def custom_exception_handler(exc, context):
    """
    명령 실행 중 발생한 예외를 실패 보고서로 바꿉니다.
    도메인 예외는 자신의 종료 코드를 유지하고, 그 밖의 예외는 코드 1 입니다.
    """
    command = (context or {}).get("command", "unknown")

    # 1. 도메인 예외 (InvariantsException)
    if isinstance(exc, InvariantsException):
        logger.warning(f"{command}: {exc}")
        data = exc.detail if exc.detail is None or isinstance(exc.detail, int | str) else str(exc.detail)
        return _format_report(command, exc.code, exc.message, data)

    # 2. 예상 못한 예외: 전체 Traceback 출력
    logger.exception("예외 발생:", exc_info=exc)
    traceback.print_exception(type(exc), exc, exc.__traceback__, file=sys.stderr)
    return _format_report(command, EXIT_MATH_FAILURE, "예상하지 못한 오류가 발생했습니다.", str(exc))


# 각 필드의 의미
# 필드         설명
# code        프로세스 종료 코드 (0 통과, 1 수학적 실패, 2 사용법 오류)
# message     사용자에게 보여줄 핵심 메시지
# data        문제가 된 입력 (단항식, 단계 이름, 분할 등)
