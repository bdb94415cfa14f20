from utils.exceptions import EXIT_MATH_FAILURE, EXIT_USAGE, InvariantsException

# 응답 메시지 정의
EMPTY_WORD = {"code": EXIT_USAGE, "message": "대각합을 취할 행렬 곱이 비어 있습니다."}
NON_TRACELESS = {"code": EXIT_MATH_FAILURE, "message": "대각합이 0 이 아닌 행렬입니다."}
BAD_SHAPE = {"code": EXIT_USAGE, "message": "3x3 행렬이 아닙니다."}


class EmptyWordError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(EMPTY_WORD, detail)


class NonTracelessMatrixError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(NON_TRACELESS, detail)


class MatrixShapeError(InvariantsException):
    def __init__(self, detail=None):
        super().__init__(BAD_SHAPE, detail)
