"""
matrix_invariants 설정.

웹 서버, 데이터베이스 없이 management command 만 사용합니다.
모든 값은 envs/.env 에서 읽고, 없으면 기본값을 씁니다.
"""

import os
import sys
from pathlib import Path

from dotenv import dotenv_values

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# dotenv_values 메서드는 env 파일의 경로를 파라미터로 전달 받아 해당 파일을 읽어온 후 Key, Value 형태로 매핑하여 dict로 반환합니다.
ENV = dotenv_values(BASE_DIR / "envs/.env")

SECRET_KEY = ENV.get("DJANGO_SECRET_KEY", "matrix-invariants-cli-only")

# 테스트 모드 감지 (sys.argv, 환경 변수, pytest 모듈)
TESTING = any(
    [len(sys.argv) > 1 and sys.argv[1] == "test", os.environ.get("DJANGO_TESTING") == "True", "pytest" in sys.modules]
)

# Application definition
PROJECT_APPS = [
    "apps.exactpoly",
    "apps.matrixtrace",
    "apps.invariantlib",
    "apps.traceword",
    "apps.gl2rep",
    "apps.xisolver",
    "apps.cli",
]

INSTALLED_APPS = PROJECT_APPS

# 데이터베이스를 쓰지 않습니다
DATABASES: dict = {}

USE_I18N = True
USE_TZ = True
LANGUAGE_CODE = "ko-kr"
TIME_ZONE = "Asia/Seoul"

# 계산 설정
SERIES_MAX_DEGREE = int(ENV.get("SERIES_MAX_DEGREE", 16))
VERIFY_GENERIC_X = ENV.get("VERIFY_GENERIC_X", "False").lower() == "true"
REPORT_SCHEMA_VERSION = ENV.get("REPORT_SCHEMA_VERSION", "1")

# Logging
LOG_DIR = Path(ENV.get("LOG_DIR", BASE_DIR / "logs"))
LOG_LEVEL = ENV.get("LOG_LEVEL", "INFO")

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {message}",
            "style": "{",
        },
    },
    "handlers": {
        "console": {
            "level": LOG_LEVEL,
            "class": "logging.StreamHandler",
            "formatter": "simple",
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console"],
            "level": "INFO",
            "propagate": True,
        },
        "apps": {
            "handlers": ["console"],
            "level": LOG_LEVEL,
            "propagate": True,
        },
    },
}

# --- Sentry 연동 (운영 환경에서만 활성화 권장) ---
SENTRY_DSN = ENV.get("SENTRY_DSN", "")
