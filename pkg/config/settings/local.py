from .base import *  # noqa: F403
from .base import LOGGING, TESTING

DEBUG = True

# Logging: 테스트 중에는 기본 수준을 유지합니다
if not TESTING:
    LOGGING["handlers"]["console"]["level"] = "DEBUG"
    LOGGING["loggers"]["apps"]["level"] = "DEBUG"
