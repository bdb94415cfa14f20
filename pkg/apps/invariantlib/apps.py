from django.apps import AppConfig


class InvariantlibConfig(AppConfig):
    name = "apps.invariantlib"
    verbose_name = "두 3x3 행렬의 불변식과 정의 관계식"
