from utils.exceptions import EXIT_MATH_FAILURE, EXIT_USAGE, InvariantsException

# 응답 메시지 정의
RAGGED_SYSTEM = {"code": EXIT_USAGE, "message": "연립방정식의 행 길이가 서로 다릅니다."}
INCONSISTENT_SYSTEM = {"code": EXIT_MATH_FAILURE, "message": "연립방정식이 모순입니다."}
UNEXPECTED_FAMILY = {"code": EXIT_MATH_FAILURE, "message": "해가 유일하게 결정되지 않았습니다."}


class RaggedSystemError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(RAGGED_SYSTEM, detail)


class InconsistentSystemError(InvariantsException):
    """detail 에는 모순이 드러난 단계 이름을 담습니다."""

    def __init__(self, detail=None):
        super().__init__(INCONSISTENT_SYSTEM, detail)


class UnderdeterminedSystemError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(UNEXPECTED_FAMILY, detail)
