from django.apps import AppConfig


class TracewordConfig(AppConfig):
    name = "apps.traceword"
    verbose_name = "형식적 대각합 단어"
