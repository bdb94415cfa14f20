from django.apps import AppConfig


class MatrixtraceConfig(AppConfig):
    name = "apps.matrixtrace"
    verbose_name = "3x3 행렬과 대각합"
