from utils.exceptions import EXIT_MATH_FAILURE, EXIT_USAGE, InvariantsException

# 응답 메시지 정의
UNKNOWN_VARIABLE = {"code": EXIT_USAGE, "message": "등록되지 않은 변수입니다."}
PARSE_FAILED = {"code": EXIT_USAGE, "message": "다항식 문자열을 해석할 수 없습니다."}
EXPONENT_OVERFLOW = {"code": EXIT_MATH_FAILURE, "message": "지수가 허용 범위를 넘었습니다."}


class UnknownVariableError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(UNKNOWN_VARIABLE, detail)


class PolynomialParseError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(PARSE_FAILED, detail)


class ExponentOverflowError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(EXPONENT_OVERFLOW, detail)
