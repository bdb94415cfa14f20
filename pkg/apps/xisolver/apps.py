from django.apps import AppConfig


class XisolverConfig(AppConfig):
    name = "apps.xisolver"
    verbose_name = "정확한 선형대수와 계수 복원"
