from .base import *  # noqa: F403
from .base import ENV, LOG_DIR, LOGGING, SENTRY_DSN

DEBUG = False

# Logging: 긴 검증 실행 기록을 파일로 남깁니다
LOG_DIR.mkdir(parents=True, exist_ok=True)
LOGGING["handlers"]["file"] = {
    "level": "INFO",
    "class": "logging.handlers.RotatingFileHandler",
    "filename": LOG_DIR / "invariants.log",
    "maxBytes": 1024 * 1024 * 5,  # 5 MB
    "backupCount": 5,
    "formatter": "verbose",
}
LOGGING["handlers"]["console"]["level"] = "WARNING"
LOGGING["loggers"]["apps"]["handlers"] = ["console", "file"]
LOGGING["loggers"]["django"]["level"] = "WARNING"

if SENTRY_DSN:
    import sentry_sdk

    sentry_sdk.init(
        dsn=SENTRY_DSN,
        traces_sample_rate=0.0,
        environment=ENV.get("DJANGO_ENV", "prod"),
    )
