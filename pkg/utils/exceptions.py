# 종료 코드 규약: 0 통과, 1 수학적 실패, 2 사용법 오류
EXIT_OK = 0
EXIT_MATH_FAILURE = 1
EXIT_USAGE = 2


# 커스텀 에러 메시지
class InvariantsException(Exception):
    """
    모든 도메인 예외의 기반 클래스.

    error_dict 는 {"code": 종료코드, "message": 메시지} 형태이며
    detail 에는 문제가 된 입력(단항식, 단계 이름 등)을 담습니다.
    """

    def __init__(self, error_dict, detail=None):
        self.code = error_dict.get("code", EXIT_MATH_FAILURE)
        self.message = error_dict.get("message", "")
        self.detail = detail
        super().__init__(f"{self.message} ({detail})" if detail is not None else self.message)

    def as_dict(self):
        return {"code": self.code, "message": self.message, "data": self.detail}
