"""
변수 레지스트리.

VarId 는 작은 정수이며 아래 고정 테이블로 이름과 1:1 대응됩니다.
인덱스가 작을수록 사전식 순서에서 강한 변수입니다 (x1 > x2 > x11 > ...).
"""

from .exceptions import UnknownVariableError

VarId = int

_MATRIX_SLOTS = ("11", "12", "13", "21", "22", "23", "31", "32", "33")

VAR_NAMES: tuple[str, ...] = (
    ("x1", "x2")
    + tuple(f"x{slot}" for slot in _MATRIX_SLOTS)
    + tuple(f"y{slot}" for slot in _MATRIX_SLOTS)
    + ("t", "t1", "t2")
    + tuple(f"z{i}" for i in range(1, 10))
)

NUM_VARS = len(VAR_NAMES)

NAME_TO_INDEX: dict[str, VarId] = {name: index for index, name in enumerate(VAR_NAMES)}


def var_index(name_or_index) -> VarId:
    """이름 또는 인덱스를 VarId 로 변환합니다."""
    if isinstance(name_or_index, int):
        if 0 <= name_or_index < NUM_VARS:
            return name_or_index
        raise UnknownVariableError(name_or_index)
    try:
        return NAME_TO_INDEX[name_or_index]
    except KeyError:
        raise UnknownVariableError(name_or_index) from None


def var_name(index: VarId) -> str:
    return VAR_NAMES[var_index(index)]


def matrix_var(prefix: str, row: int, col: int) -> VarId:
    """matrix_var("y", 1, 2) -> y12 의 VarId (행/열은 1부터)."""
    return var_index(f"{prefix}{row}{col}")
