from apps.traceword.words import canonical_rotation


def get_trace_cache_key(word):
    """
    대각합 단어 캐시 키를 생성합니다.

    회전 동치인 단어는 같은 키를 갖습니다 (tr 의 순환 불변성).
    """
    return f"tr_{canonical_rotation(word.upper()).lower()}"


def get_element_cache_key(name, **params):
    """
    생성원/관계식 원소 캐시 키를 생성합니다.

    파라미터가 있으면 키에 포함합니다.
    """
    params_str = ""
    if params:
        params_str = "_" + "_".join(f"{k}:{v}" for k, v in sorted(params.items()))
    return f"element_{name}{params_str}"
