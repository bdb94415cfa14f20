from utils.exceptions import EXIT_MATH_FAILURE, EXIT_USAGE, InvariantsException

# 응답 메시지 정의
INVALID_PARTITION = {"code": EXIT_USAGE, "message": "lambda1 >= lambda2 >= 0 인 분할이 아닙니다."}
ZERO_DENOMINATOR = {"code": EXIT_USAGE, "message": "분모 인수 (1 - t1^0 t2^0) 는 0 입니다."}
INVALID_FACTOR = {"code": EXIT_USAGE, "message": "분모 인수 지정이 올바르지 않습니다."}
INVALID_BOUND = {"code": EXIT_USAGE, "message": "절단 차수는 0 이상의 정수여야 합니다."}
NOT_A_CHARACTER = {"code": EXIT_MATH_FAILURE, "message": "다항식 GL2 표현의 지표가 아닙니다."}


class InvalidPartitionError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(INVALID_PARTITION, detail)


class ZeroDenominatorError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(ZERO_DENOMINATOR, detail)


class InvalidFactorError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(INVALID_FACTOR, detail)


class InvalidBoundError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(INVALID_BOUND, detail)


class NotACharacterError(InvariantsException):
    """음수이거나 정수가 아닌 중복도, 또는 재구성이 원래 급수와 다를 때."""

    def __init__(self, detail=None):
        super().__init__(NOT_A_CHARACTER, detail)
