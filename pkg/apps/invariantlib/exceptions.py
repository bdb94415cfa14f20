from utils.exceptions import EXIT_USAGE, InvariantsException

# 응답 메시지 정의
DERIVATION_UNAVAILABLE = {"code": EXIT_USAGE, "message": "이 컨텍스트에서는 미분 delta 를 정의할 수 없습니다."}
BAD_XI_VECTOR = {"code": EXIT_USAGE, "message": "xi 계수는 정확히 8개여야 합니다."}


class DerivationUnavailableError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(DERIVATION_UNAVAILABLE, detail)


class XiVectorError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(BAD_XI_VECTOR, detail)
