import os
from fractions import Fraction

# 테스트 모드 설정을 가장 먼저
os.environ["DJANGO_TESTING"] = "True"
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.settings")

import django
import pytest

# Django 설정을 로드
django.setup()

from apps.invariantlib.context import InvariantContext  # noqa: E402


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: 차수 (6,6) 원소 전체를 만드는 테스트")


@pytest.fixture(scope="session")
def diagonal_ctx():
    """x 대각, y 일반 무대각합. 차수 (6,6) 원소가 캐시되므로 세션 동안 공유합니다."""
    ctx = InvariantContext.diagonal()
    ctx.warm_up()
    return ctx


@pytest.fixture(scope="session")
def generic_ctx():
    """x, y 모두 일반 무대각합. 차수 (6,6) 까지 쓰면 수십 초가 걸립니다."""
    return InvariantContext.generic()


@pytest.fixture
def contradiction_at_step2(monkeypatch):
    """
    step2 방정식에 0 = 1 행을 덧붙입니다.
    돌려주는 리스트에는 실제로 방정식을 만든 단계 이름이 쌓입니다.
    """
    from apps.xisolver import pipeline

    build = pipeline.xi_step_equations
    called = []

    def with_contradiction(step, ctx=None, discover=False):
        called.append(step)
        equations = build(step, ctx, discover)
        if step == "step2":
            equations = [*equations, pipeline.XiEquation((Fraction(0),) * 8, Fraction(1), "1", step)]
        return equations

    monkeypatch.setattr(pipeline, "xi_step_equations", with_contradiction)
    return called
