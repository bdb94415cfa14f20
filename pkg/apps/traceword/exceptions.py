from utils.exceptions import EXIT_USAGE, InvariantsException

# 응답 메시지 정의
INVALID_WORD = {"code": EXIT_USAGE, "message": "X, Y 로만 이루어진 비어 있지 않은 단어가 아닙니다."}
INVALID_DEGREE = {"code": EXIT_USAGE, "message": "차수 지정이 올바르지 않습니다."}


class InvalidWordError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(INVALID_WORD, detail)


class InvalidDegreeError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(INVALID_DEGREE, detail)
